#pragma once

#include "liedef/cochain.hpp"
#include "liedef/lie_algebra.hpp"
#include "liedef/linalg.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace liedef {

/// Matrix of d: C^q(g; g) -> C^{q+1}(g; g) (adjoint coefficients) in
/// CochainBasis coordinates:
///
///   dc(g_1..g_{q+1}) = sum_{s<t} (-1)^{s+t-1} c([g_s,g_t], g_1..^s..^t..g_{q+1})
///                    + sum_s (-1)^s [g_s, c(g_1..^s..g_{q+1})]
///
/// with 1-based s, t. For q = dim the target space is zero and the matrix has no rows.
RationalMatrix differential(const LieAlgebra& a, std::size_t q);

/// Lazily builds and caches the differentials of one algebra and the
/// coboundary spaces B^q = im d_{q-1}. Safe to share between threads.
class CochainComplex {
public:
    explicit CochainComplex(LieAlgebra algebra);

    const LieAlgebra& algebra() const { return algebra_; }
    const CochainBasis& basis(std::size_t q) const;
    const RationalMatrix& differential(std::size_t q) const;
    std::size_t differential_rank(std::size_t q) const;
    /// Echelon basis of the coboundaries in C^q (empty for q = 0).
    const SpanBasis& coboundaries(std::size_t q) const;

private:
    struct Degree {
        std::once_flag basis_once, diff_once, rank_once, image_once;
        std::unique_ptr<CochainBasis> basis;
        RationalMatrix diff;
        std::size_t rank = 0;
        std::unique_ptr<SpanBasis> image;
    };
    Degree& slot(std::size_t q) const;

    LieAlgebra algebra_;
    std::vector<std::unique_ptr<Degree>> degrees_;
};

/// A nonzero entry of dc for a symbolic cochain: the coefficient of e_target
/// in dc(e_args).
struct CocycleConstraint {
    IndexTuple args;
    std::size_t target;
    PolyScalar value;
};

bool is_cocycle(const CochainComplex& complex, const Cochain& c);
bool is_cocycle(const LieAlgebra& a, const Cochain& c);
/// Nonzero polynomial entries of dc; empty iff c is a cocycle for all parameter values.
std::vector<CocycleConstraint> cocycle_constraints(const CochainComplex& complex, const SymbolicCochain& c);
std::vector<CocycleConstraint> cocycle_constraints(const LieAlgebra& a, const SymbolicCochain& c);
/// True when every constraint is a rational multiple of `generator`.
bool constraints_generated_by(const std::vector<CocycleConstraint>& constraints, const PolyScalar& generator);

/// The coboundary d c.
Cochain apply_differential(const CochainComplex& complex, const Cochain& c);

/// A (q-1)-cochain b with db = c, or nullopt. For q = 0 only the zero cochain
/// is exact, and it has no preimage to return.
std::optional<Cochain> coboundary_preimage(const CochainComplex& complex, const Cochain& c);
std::optional<Cochain> coboundary_preimage(const LieAlgebra& a, const Cochain& c);
/// Membership in B^q without computing a preimage.
bool is_coboundary(const CochainComplex& complex, const Cochain& c);

struct CohomologyReport {
    std::size_t degree = 0;
    std::size_t dim_cochains = 0;   ///< dim C^q
    std::size_t rank_d = 0;         ///< rank d_q
    std::size_t rank_d_prev = 0;    ///< rank d_{q-1}, 0 for q = 0
    std::size_t dim_kernel = 0;     ///< dim C^q - rank d_q
    std::size_t dim_image_prev = 0; ///< = rank_d_prev
    std::size_t dim_h = 0;          ///< dim_kernel - dim_image_prev
    std::vector<Cochain> representatives;
};

/// dim H^q(g; g). With `representatives`, a basis of H^q is extracted from the
/// kernel basis (nullspace order) by skipping vectors dependent on B^q.
CohomologyReport cohomology(const CochainComplex& complex, std::size_t q, bool representatives = false);
CohomologyReport cohomology(const LieAlgebra& a, std::size_t q, bool representatives = false);

/// Closed-form dim H^p(h_n, h_n) for the Heisenberg algebra of rank n.
long long heisenberg_cohomology_formula(long long n, long long p);

/// True iff c1 - c2 is a coboundary. Throws NotACocycle unless both are cocycles.
bool same_class(const CochainComplex& complex, const Cochain& c1, const Cochain& c2);
bool same_class(const LieAlgebra& a, const Cochain& c1, const Cochain& c2);

/// Dimension of the image of span(cocycles) in H^q. Throws NotACocycle.
std::size_t span_in_cohomology(const CochainComplex& complex, std::size_t q, const std::vector<Cochain>& cocycles);

} // namespace liedef
