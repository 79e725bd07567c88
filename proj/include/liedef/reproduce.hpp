#pragma once

#include "liedef/catalog.hpp"
#include "liedef/cohomology.hpp"
#include "liedef/isomorphism.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liedef {

struct PaperRow {
    std::string label;
    std::string alias; ///< name in the external classification, metadata only
    Cochain cochain;
    bool is_cocycle = false;
    bool strict_extendable = false;
    /// First order whose defect is nonzero; unset for exact brackets.
    std::optional<int> obstructed_at;
    /// Unset when the row is not a cocycle (no obstruction theory applies).
    std::optional<bool> obstruction_class_zero;
    /// Whether the t = 1 table satisfies the Jacobi identity.
    bool lie_at_t1 = false;
    std::optional<bool> nilpotent_at_t1;
    std::optional<bool> solvable_at_t1;
};

struct IsoCheck {
    std::string a;
    std::string b;
    bool isomorphic = false;
    std::string method; ///< "invariants", a search class name, "transitive", or "map"
    std::optional<BasisChange> map;
};

struct ReproductionSummary {
    std::size_t representatives = 0;
    std::size_t cocycles = 0;
    std::size_t real = 0;               ///< cocycles whose deformation is an exact Lie bracket
    std::size_t infinitesimal_only = 0; ///< cocycles obstructed at some order
    std::size_t distinct_classes = 0;   ///< among the cocycle rows
    std::size_t span_dim = 0;           ///< span of the cocycle rows in H^2
    std::size_t generic_nilpotent_classes = 0;
    /// Pairs of rows whose difference is a coboundary (includes identical cochains).
    std::vector<std::pair<std::string, std::string>> equal_class_pairs;

    std::string line() const;
};

struct Reproduction {
    std::vector<PaperRow> rows;
    ReproductionSummary summary;
    std::map<std::string, std::size_t> family_spans;
    std::vector<std::string> generic_members;
    std::vector<IsoCheck> generic_isomorphisms;
    /// Named yes/no confirmations of specific claims.
    std::map<std::string, bool> confirmations;
    std::vector<std::string> notes;
};

/// Dimension in H^2 spanned by the family's cocycles, sampled on the integer grid {-1,0,1,2}^arity.
std::size_t family_span(const CochainComplex& h2, Family f);

/// The t = 1 member of base + t * mu for a catalog representative, without Jacobi validation.
LieAlgebra member_at_t1(const Representative& rep);

Reproduction reproduce();

} // namespace liedef
