#include "liedef/deformation.hpp"

#include "liedef/errors.hpp"

#include <algorithm>

namespace liedef {

namespace {

void check_term(const LieAlgebra& base, int n, const Cochain& mu)
{
    if (n < 1)
        throw InvalidArgument("deformation terms have order >= 1, got " + std::to_string(n));
    if (mu.degree() != 2 || mu.dim() != base.dim())
        throw DimensionMismatch("deformation term of order " + std::to_string(n) + " must be a 2-cochain on a "
                                + std::to_string(base.dim()) + "-dimensional algebra");
}

} // namespace

Deformation::Deformation(LieAlgebra base, std::map<int, Cochain> terms, int truncation_order)
    : base_(std::move(base)), truncation_(truncation_order)
{
    if (truncation_order < 1)
        throw InvalidArgument("truncation order must be at least 1");
    for (auto& [n, mu] : terms) {
        check_term(base_, n, mu);
        if (!mu.is_zero())
            terms_.emplace(n, std::move(mu));
    }
}

Deformation Deformation::infinitesimal(LieAlgebra base, Cochain mu1, int truncation_order)
{
    std::map<int, Cochain> terms;
    terms.emplace(1, std::move(mu1));
    return Deformation(std::move(base), std::move(terms), truncation_order);
}

Cochain Deformation::term(int n) const
{
    if (n == 0)
        return bracket_cochain(base_);
    auto it = terms_.find(n);
    return it == terms_.end() ? Cochain(base_.dim(), 2) : it->second;
}

int Deformation::max_order() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

Deformation Deformation::with_term(int n, Cochain mu) const
{
    check_term(base_, n, mu);
    Deformation out = *this;
    out.terms_.erase(n);
    if (!mu.is_zero())
        out.terms_.emplace(n, std::move(mu));
    return out;
}

Cochain jacobi_pairing(const Cochain& a, const Cochain& b)
{
    if (a.degree() != 2 || b.degree() != 2 || a.dim() != b.dim())
        throw DimensionMismatch("jacobi_pairing needs two 2-cochains of equal dimension");
    const std::size_t n = a.dim();
    Cochain out(n, 3);
    if (a.is_zero() || b.is_zero())
        return out;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            for (std::size_t z = y + 1; z < n; ++z) {
                Vector sum(n);
                const std::size_t cyc[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
                for (const auto& c : cyc) {
                    Vector inner = b({c[1], c[2]});
                    if (is_zero_vector(inner))
                        continue;
                    Vector outer = a.apply_second(c[0], inner);
                    for (std::size_t k = 0; k < n; ++k)
                        sum[k] += outer[k];
                }
                out.set({x, y, z}, std::move(sum));
            }
    return out;
}

Cochain defect(const Deformation& d, int n)
{
    if (n < 0)
        throw InvalidArgument("defect order must be non-negative");
    Cochain out(d.base().dim(), 3);
    for (int i = 0; i <= n; ++i)
        out += jacobi_pairing(d.term(i), d.term(n - i));
    return out;
}

Cochain partial_defect(const Deformation& d, int n)
{
    Cochain out(d.base().dim(), 3);
    for (int i = 1; i < n; ++i)
        out += jacobi_pairing(d.term(i), d.term(n - i));
    return out;
}

bool DefectReport::all_zero() const
{
    return std::all_of(orders.begin(), orders.end(), [](const OrderDefect& o) { return o.is_zero; });
}

DefectReport defect_report(const CochainComplex& complex, const Deformation& d, int max_order)
{
    DefectReport report;
    for (int n = 1; n <= max_order; ++n) {
        Cochain c = defect(d, n);
        const bool zero = c.is_zero();
        const bool cob = zero || is_coboundary(complex, c);
        report.orders.push_back(OrderDefect{n, std::move(c), zero, cob});
    }
    return report;
}

ExtendabilityVerdict strict_extendability(const CochainComplex& complex, const Deformation& d, int max_order)
{
    if (d.max_order() > 1)
        throw InvalidArgument("strict extendability applies to deformations with only a first-order term");
    const Cochain mu1 = d.term(1);
    if (!is_cocycle(complex, mu1))
        throw NotACocycle("infinitesimal term is not a 2-cocycle");

    ExtendabilityVerdict verdict;
    for (int n = 2; n <= max_order; ++n) {
        Cochain c = defect(d, n);
        if (c.is_zero())
            continue;
        verdict.obstructed_at = n;
        verdict.obstruction_class_zero = is_coboundary(complex, c);
        verdict.obstruction = std::move(c);
        return verdict;
    }
    verdict.exact_lie_bracket = true;
    return verdict;
}

ExtendabilityVerdict strict_extendability(const Deformation& d, int max_order)
{
    return strict_extendability(CochainComplex(d.base()), d, max_order);
}

ExtendOutcome extend_step(const CochainComplex& complex, const Deformation& d, int n)
{
    if (n < 1)
        throw PreconditionViolated("extension order must be at least 1");
    if (d.max_order() >= n)
        throw PreconditionViolated("deformation already has a term of order " + std::to_string(d.max_order()));
    for (int k = 1; k < n; ++k)
        if (!defect(d, k).is_zero())
            throw PreconditionViolated("defect at order " + std::to_string(k) + " is nonzero");

    Cochain rhs = partial_defect(d, n);
    const CochainBasis& basis3 = complex.basis(3);
    auto solution = solve(complex.differential(2), basis3.coordinates(rhs));
    if (!solution)
        return Obstructed{n, std::move(rhs)};

    Cochain mu = complex.basis(2).cochain(*solution);
    Deformation next = d.with_term(n, mu);
    if (!defect(next, n).is_zero())
        throw std::logic_error("extend_step: residual defect after solving at order " + std::to_string(n));
    return Extended{std::move(next), n, std::move(mu)};
}

std::vector<ExtendOutcome> extend(const CochainComplex& complex, const Deformation& d, int up_to)
{
    std::vector<ExtendOutcome> steps;
    Deformation current = d;
    for (int n = d.max_order() + 1; n <= up_to; ++n) {
        ExtendOutcome step = extend_step(complex, current, n);
        const bool obstructed = std::holds_alternative<Obstructed>(step);
        if (!obstructed)
            current = std::get<Extended>(step).deformation;
        steps.push_back(std::move(step));
        if (obstructed)
            break;
    }
    return steps;
}

CohomologyClass::CohomologyClass(std::shared_ptr<const CochainComplex> complex, Cochain cocycle)
    : complex_(std::move(complex)), cocycle_(std::move(cocycle))
{
    if (!is_cocycle(*complex_, cocycle_))
        throw NotACocycle("cohomology class representative is not a cocycle");
}

bool CohomologyClass::is_zero() const
{
    return is_coboundary(*complex_, cocycle_);
}

bool CohomologyClass::operator==(const CohomologyClass& other) const
{
    if (!(complex_->algebra() == other.complex_->algebra()))
        return false;
    return same_class(*complex_, cocycle_, other.cocycle_);
}

CohomologyClass infinitesimal_class(std::shared_ptr<const CochainComplex> complex, const Deformation& d)
{
    if (!(complex->algebra() == d.base()))
        throw InvalidArgument("complex does not belong to the deformation's base algebra");
    return CohomologyClass(std::move(complex), d.term(1));
}

CohomologyClass infinitesimal_class(const Deformation& d)
{
    return infinitesimal_class(std::make_shared<const CochainComplex>(d.base()), d);
}

LieAlgebra bracket_at(const Deformation& d, const Rational& t)
{
    const std::size_t n = d.base().dim();
    Cochain total = d.term(0);
    Rational power(1);
    for (int k = 1; k <= d.max_order(); ++k) {
        power *= t;
        if (!power.is_zero())
            total += power * d.term(k);
    }
    std::map<IndexPair, Vector> table;
    for (const auto& [args, value] : total.entries())
        table.emplace(IndexPair{args[0], args[1]}, value);
    return LieAlgebra(n, table, LieAlgebra::Validation::unchecked, d.base().name());
}

LieAlgebra specialize(const Deformation& d, const Rational& t)
{
    const int last = std::max(d.truncation_order(), 2 * d.max_order());
    for (int n = 1; n <= last; ++n)
        if (!defect(d, n).is_zero())
            throw NotALieAlgebra("deformation has nonzero defect at order " + std::to_string(n));
    LieAlgebra out = bracket_at(d, t);
    return LieAlgebra(out.dim(), out.table(), LieAlgebra::Validation::checked, out.name());
}

} // namespace liedef
