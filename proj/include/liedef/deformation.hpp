#pragma once

#include "liedef/cochain.hpp"
#include "liedef/cohomology.hpp"
#include "liedef/lie_algebra.hpp"

#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace liedef {

/// Formal one-parameter deformation [x,y]_t = [x,y] + sum_n t^n mu_n(x,y).
/// The order-0 term is the base bracket and is never stored; zero terms are dropped.
class Deformation {
public:
    static constexpr int kDefaultTruncation = 4;

    explicit Deformation(LieAlgebra base, std::map<int, Cochain> terms = {}, int truncation_order = kDefaultTruncation);

    /// base + t * mu1
    static Deformation infinitesimal(LieAlgebra base, Cochain mu1, int truncation_order = kDefaultTruncation);

    const LieAlgebra& base() const { return base_; }
    const std::map<int, Cochain>& terms() const { return terms_; }
    /// mu_n; the base bracket for n = 0 and zero for absent orders.
    Cochain term(int n) const;
    /// Highest stored order, 0 when there are no terms.
    int max_order() const;
    int truncation_order() const { return truncation_; }

    Deformation with_term(int n, Cochain mu) const;

private:
    LieAlgebra base_;
    std::map<int, Cochain> terms_;
    int truncation_;
};

/// J(a, b)(x, y, z) = a(x, b(y, z)) + a(y, b(z, x)) + a(z, b(x, y)) as a 3-cochain.
Cochain jacobi_pairing(const Cochain& a, const Cochain& b);

/// Coefficient of t^n in the deformed Jacobi expression:
/// sum over i + j = n (i, j >= 0, mu_0 = base bracket) of J(mu_i, mu_j).
Cochain defect(const Deformation& d, int n);

/// The part of defect(d, n) built from i, j >= 1 only. defect(d, n) equals
/// this minus d(mu_n), so mu_n extends the deformation iff d(mu_n) = partial_defect.
Cochain partial_defect(const Deformation& d, int n);

struct OrderDefect {
    int order = 0;
    Cochain defect;             ///< also the obstruction representative when nonzero
    bool is_zero = true;
    bool is_coboundary = true;
};

struct DefectReport {
    std::vector<OrderDefect> orders; ///< orders 1..max_order
    bool all_zero() const;
};

DefectReport defect_report(const CochainComplex& complex, const Deformation& d, int max_order);

struct ExtendabilityVerdict {
    bool exact_lie_bracket = false;
    /// First order with nonzero defect when not exact.
    std::optional<int> obstructed_at;
    /// Whether the defect at obstructed_at lies in B^3 (zero obstruction class).
    std::optional<bool> obstruction_class_zero;
    std::optional<Cochain> obstruction;
};

/// Decides whether base + t*mu1 satisfies Jacobi exactly, checking defects at
/// orders 2..max_order. Requires terms() to hold at most mu_1, and mu_1 to be
/// a cocycle (NotACocycle otherwise). For such deformations the defect vanishes
/// identically from order 3 on, so max_order = 2 already decides the question.
ExtendabilityVerdict strict_extendability(const CochainComplex& complex, const Deformation& d, int max_order);
ExtendabilityVerdict strict_extendability(const Deformation& d, int max_order = Deformation::kDefaultTruncation);

struct Extended {
    Deformation deformation;
    int order;
    Cochain term; ///< the mu_n that was added (possibly zero)
};

struct Obstructed {
    int order;
    Cochain representative; ///< the partial defect, a 3-cocycle outside B^3
};

using ExtendOutcome = std::variant<Extended, Obstructed>;

/// Solves d(mu_n) = partial_defect(d, n) for the next term. Requires that no
/// term of order >= n is stored and that defect(d, k) = 0 for 1 <= k < n
/// (PreconditionViolated otherwise).
ExtendOutcome extend_step(const CochainComplex& complex, const Deformation& d, int n);

/// Repeated extend_step from max_order()+1 up to `up_to`, stopping at the first obstruction.
std::vector<ExtendOutcome> extend(const CochainComplex& complex, const Deformation& d, int up_to);

/// A class in H^q(g; g), represented by a cocycle.
class CohomologyClass {
public:
    /// Throws NotACocycle.
    CohomologyClass(std::shared_ptr<const CochainComplex> complex, Cochain cocycle);

    const Cochain& representative() const { return cocycle_; }
    bool is_zero() const;
    bool operator==(const CohomologyClass& other) const;

private:
    std::shared_ptr<const CochainComplex> complex_;
    Cochain cocycle_;
};

/// Class of mu_1 in H^2. Throws NotACocycle.
CohomologyClass infinitesimal_class(std::shared_ptr<const CochainComplex> complex, const Deformation& d);
CohomologyClass infinitesimal_class(const Deformation& d);

/// The bracket [x,y] + sum t^n mu_n(x,y) at a rational t, without validation.
LieAlgebra bracket_at(const Deformation& d, const Rational& t);

/// bracket_at, after checking that every defect that can be nonzero
/// (orders 1..max(truncation, 2*max_order)) vanishes. Throws NotALieAlgebra otherwise.
LieAlgebra specialize(const Deformation& d, const Rational& t);

} // namespace liedef
