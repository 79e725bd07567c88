#pragma once

#include "liedef/cochain.hpp"
#include "liedef/lie_algebra.hpp"
#include "liedef/poly_scalar.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liedef {

/// Heisenberg algebra h_n: dimension 2n+1, [e_i, e_{n+i}] = e_{2n+1}.
LieAlgebra heisenberg(std::size_t n);

/// Named cochain families: phi1..phi8 on h_2 and the five h_1 cocycles.
enum class Family {
    phi1, phi2, phi3, phi4, phi5, phi6, phi7, phi8,
    h1_phi1, h1_phi2, h1_phi3, h1_phi4, h1_phi5,
};

struct FamilySpec {
    Family family;
    std::string_view name;
    std::size_t arity;                   ///< number of parameters (p, q, r prefix)
    std::size_t algebra_rank;            ///< Heisenberg rank of the base algebra
    std::optional<PolyScalar> constraint; ///< generator of the cocycle condition, if any
    std::string_view algebra_label;      ///< d_i label, empty for the h_1 cocycles
    std::string_view classification_alias;
};

const FamilySpec& family_spec(Family f);
const std::vector<Family>& all_families();
std::optional<Family> family_from_name(std::string_view name);

/// The family's cochain with p, q, r left symbolic.
SymbolicCochain phi_symbolic(Family f);
/// The family's cochain at the given parameters; params.size() must equal the arity.
Cochain phi(Family f, const std::vector<Rational>& params = {});

/// The five h_1 cocycles in order.
std::vector<Cochain> h1_cocycles();

struct Representative {
    std::string label; ///< e.g. "d4(0:1)"
    Family family;
    std::vector<Rational> params;
    Cochain cochain;
};

std::string representative_label(Family f, const std::vector<Rational>& params);
/// Parses "d3", "d4(1:0)", "d7(0:1/2:0)" into family and parameters.
std::optional<std::pair<Family, std::vector<Rational>>> parse_representative_label(std::string_view label);

/// The designated twenty h_2 representatives: d1, d2, d3; d4..d6 at (1:0), (0:1), (0:0);
/// d7 at (0:0:0), (1:0:0), (0:1:0), (0:0:1); d8 at (1:0:0), (0:1:1), (0:1:0), (0:0:1).
std::vector<Representative> paper_representatives();

} // namespace liedef
