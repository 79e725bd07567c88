#pragma once

#include "liedef/cochain.hpp"
#include "liedef/cohomology.hpp"
#include "liedef/deformation.hpp"
#include "liedef/isomorphism.hpp"
#include "liedef/lie_algebra.hpp"
#include "liedef/reproduce.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>

namespace liedef::io {

using Json = nlohmann::json;

/// Reads and parses a JSON file; ParseError names the file on failure.
Json read_json_file(const std::filesystem::path& path);

// Files use 1-based basis indices and exact scalars written as strings.

Json algebra_to_json(const LieAlgebra& a);
/// Schema errors raise ParseError with the offending location, e.g. "brackets[2].j".
LieAlgebra algebra_from_json(const Json& j, LieAlgebra::Validation validation = LieAlgebra::Validation::checked);

struct CochainFile {
    SymbolicCochain cochain;
    std::map<Var, Rational> params;
};

Json cochain_to_json(const Cochain& c);
Json cochain_to_json(const SymbolicCochain& c, const std::map<Var, Rational>& params = {});
CochainFile cochain_from_json(const Json& j);
/// Substitutes the file's params; every variable that occurs must be bound.
Cochain resolve(const CochainFile& file);

Json basis_change_to_json(const BasisChange& t);
/// Raises SingularBasisChange for a non-invertible matrix.
BasisChange basis_change_from_json(const Json& j);

/// {"base": "h<n>" or an algebra object, "terms": [{"order", "cochain"}], "truncation"}.
Json deformation_to_json(const Deformation& d);
Deformation deformation_from_json(const Json& j);

Json to_json(const CohomologyReport& r);
Json to_json(const InvariantProfile& p);
Json to_json(const DefectReport& r);
Json to_json(const ExtendabilityVerdict& v);
Json to_json(const Reproduction& r);
Json jacobi_to_json(const std::vector<LieAlgebra::JacobiViolation>& violations);

/// Wraps a report with the tool version so output is reproducible byte for byte.
Json document(const std::string& kind, Json body);
/// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const Json& j);

// Human-readable forms, e.g. "2e2 - 2e3" and "[e1,e3] = e5 + t*(2e2 - 2e3)".

std::string format_vector(const Vector& v);
std::string format_vector(const std::vector<PolyScalar>& v);
std::string format_algebra(const LieAlgebra& a);
std::string format_cochain(const Cochain& c);
std::string format_deformation(const Deformation& d);
std::string format_matrix(const RationalMatrix& m);
/// The columns that differ from the identity, e.g. "e1' = e1 + e4, e2' = e2 + e3".
std::string format_basis_change(const BasisChange& t);
std::string format_reproduction(const Reproduction& r);

} // namespace liedef::io
