#pragma once

#include "liedef/lie_algebra.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liedef {

/// True iff change_basis(a, t) has exactly the structure constants of b.
bool verify_isomorphism(const LieAlgebra& a, const LieAlgebra& b, const BasisChange& t);

/// Finite families of candidate basis changes.
///  - diagonal_signs: diag(s_1..s_n), s_i in {+1, -1}
///  - monomial: scaled permutation matrices, scales from the bound set
///  - monomial_plus_one_transvection: monomials, then monomials composed (on
///    either side) with one elementary map e_i -> e_i + c e_j, c from the bound
///  - transvection_pair: products of at most two elementary maps
enum class SearchClass { diagonal_signs, monomial, monomial_plus_one_transvection, transvection_pair };

std::string_view to_string(SearchClass c);
std::optional<SearchClass> parse_search_class(std::string_view name);

/// Isomorphism invariants compared before any search.
struct InvariantProfile {
    std::size_t dim = 0;
    std::size_t center_dim = 0;
    std::vector<std::size_t> derived;
    std::vector<std::size_t> lower_central;

    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile invariant_profile(const LieAlgebra& a);

/// First basis change in the class's deterministic enumeration order that maps
/// a onto b. Bound entries must be nonzero; the default bound is {1, -1}.
/// Returns nullopt immediately when the invariant profiles differ.
std::optional<BasisChange> search_isomorphism(const LieAlgebra& a, const LieAlgebra& b, SearchClass search_class,
                                              const std::vector<Rational>& bound = {Rational(1), Rational(-1)});

} // namespace liedef
