#include "liedef/cohomology.hpp"

#include "liedef/errors.hpp"

namespace liedef {

RationalMatrix differential(const LieAlgebra& a, std::size_t q)
{
    const std::size_t n = a.dim();
    if (q > n)
        throw InvalidArgument("differential degree " + std::to_string(q) + " out of range 0.." + std::to_string(n));
    const CochainBasis source(n, q);
    if (q == n)
        return RationalMatrix(0, source.size());
    const CochainBasis target(n, q + 1);
    RationalMatrix d(target.size(), source.size());

    const auto& out_tuples = target.tuples();
    for (std::size_t gi = 0; gi < out_tuples.size(); ++gi) {
        const IndexTuple& g = out_tuples[gi];
        // sum_{s<t} (-1)^{s+t-1} c([g_s, g_t], rest)
        for (std::size_t s = 0; s < g.size(); ++s) {
            for (std::size_t t = s + 1; t < g.size(); ++t) {
                const int sign = ((s + t + 1) % 2 == 0) ? 1 : -1; // 1-based exponent s+t+1
                IndexTuple rest;
                for (std::size_t k = 0; k < g.size(); ++k)
                    if (k != s && k != t)
                        rest.push_back(g[k]);
                for (std::size_t m = 0; m < n; ++m) {
                    const Rational& c = a.constant(g[s], g[t], m);
                    if (c.is_zero())
                        continue;
                    IndexTuple args{m};
                    args.insert(args.end(), rest.begin(), rest.end());
                    const int perm = sort_with_sign(args);
                    if (perm == 0)
                        continue;
                    const std::size_t col_tuple = source.tuple_index(args);
                    const Rational coeff = sign * perm == 1 ? c : -c;
                    for (std::size_t k = 0; k < n; ++k)
                        d(target.coordinate(gi, k), source.coordinate(col_tuple, k)) += coeff;
                }
            }
        }
        // sum_s (-1)^s [g_s, c(rest)]
        for (std::size_t s = 0; s < g.size(); ++s) {
            const bool negative = (s + 1) % 2 == 1;
            IndexTuple rest;
            for (std::size_t k = 0; k < g.size(); ++k)
                if (k != s)
                    rest.push_back(g[k]);
            const std::size_t col_tuple = source.tuple_index(rest);
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t m = 0; m < n; ++m) {
                    const Rational& b = a.constant(g[s], k, m);
                    if (b.is_zero())
                        continue;
                    auto& entry = d(target.coordinate(gi, m), source.coordinate(col_tuple, k));
                    if (negative)
                        entry -= b;
                    else
                        entry += b;
                }
            }
        }
    }
    return d;
}

CochainComplex::CochainComplex(LieAlgebra algebra) : algebra_(std::move(algebra))
{
    for (std::size_t q = 0; q <= algebra_.dim(); ++q)
        degrees_.push_back(std::make_unique<Degree>());
}

CochainComplex::Degree& CochainComplex::slot(std::size_t q) const
{
    if (q >= degrees_.size())
        throw InvalidArgument("cochain degree " + std::to_string(q) + " out of range 0.."
                              + std::to_string(algebra_.dim()));
    return *degrees_[q];
}

const CochainBasis& CochainComplex::basis(std::size_t q) const
{
    Degree& d = slot(q);
    std::call_once(d.basis_once, [&] { d.basis = std::make_unique<CochainBasis>(algebra_.dim(), q); });
    return *d.basis;
}

const RationalMatrix& CochainComplex::differential(std::size_t q) const
{
    Degree& d = slot(q);
    std::call_once(d.diff_once, [&] { d.diff = liedef::differential(algebra_, q); });
    return d.diff;
}

std::size_t CochainComplex::differential_rank(std::size_t q) const
{
    Degree& d = slot(q);
    std::call_once(d.rank_once, [&] { d.rank = rank(differential(q)); });
    return d.rank;
}

const SpanBasis& CochainComplex::coboundaries(std::size_t q) const
{
    Degree& d = slot(q);
    std::call_once(d.image_once, [&] {
        auto span = std::make_unique<SpanBasis>(basis(q).size());
        if (q > 0) {
            const RationalMatrix& prev = differential(q - 1);
            for (std::size_t j = 0; j < prev.cols(); ++j)
                span->insert(prev.column(j));
        }
        d.image = std::move(span);
    });
    return *d.image;
}

namespace {

void check_degree(const CochainComplex& complex, std::size_t dim, std::size_t degree)
{
    if (dim != complex.algebra().dim())
        throw DimensionMismatch("cochain dimension " + std::to_string(dim) + " does not match algebra dimension "
                                + std::to_string(complex.algebra().dim()));
    if (degree > dim)
        throw InvalidArgument("cochain degree out of range");
}

} // namespace

Cochain apply_differential(const CochainComplex& complex, const Cochain& c)
{
    check_degree(complex, c.dim(), c.degree());
    const std::size_t q = c.degree();
    Vector image = apply_matrix(complex.differential(q), complex.basis(q).coordinates(c));
    if (q == c.dim())
        return Cochain(c.dim(), q + 1);
    return complex.basis(q + 1).cochain(image);
}

bool is_cocycle(const CochainComplex& complex, const Cochain& c)
{
    check_degree(complex, c.dim(), c.degree());
    const std::size_t q = c.degree();
    return is_zero_vector(apply_matrix(complex.differential(q), complex.basis(q).coordinates(c)));
}

bool is_cocycle(const LieAlgebra& a, const Cochain& c)
{
    return is_cocycle(CochainComplex(a), c);
}

std::vector<CocycleConstraint> cocycle_constraints(const CochainComplex& complex, const SymbolicCochain& c)
{
    check_degree(complex, c.dim(), c.degree());
    const std::size_t q = c.degree();
    std::vector<CocycleConstraint> out;
    if (q == c.dim())
        return out;
    const std::vector<PolyScalar> image = apply_matrix(complex.differential(q), complex.basis(q).coordinates(c));
    const CochainBasis& target = complex.basis(q + 1);
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < image.size(); ++i)
        if (!image[i].is_zero())
            out.push_back({target.tuples()[i / n], i % n, image[i]});
    return out;
}

std::vector<CocycleConstraint> cocycle_constraints(const LieAlgebra& a, const SymbolicCochain& c)
{
    return cocycle_constraints(CochainComplex(a), c);
}

bool constraints_generated_by(const std::vector<CocycleConstraint>& constraints, const PolyScalar& generator)
{
    for (const auto& constraint : constraints)
        if (!constraint.value.ratio_to(generator))
            return false;
    return true;
}

std::optional<Cochain> coboundary_preimage(const CochainComplex& complex, const Cochain& c)
{
    check_degree(complex, c.dim(), c.degree());
    const std::size_t q = c.degree();
    if (q == 0)
        return std::nullopt;
    auto x = solve(complex.differential(q - 1), complex.basis(q).coordinates(c));
    if (!x)
        return std::nullopt;
    return complex.basis(q - 1).cochain(*x);
}

std::optional<Cochain> coboundary_preimage(const LieAlgebra& a, const Cochain& c)
{
    return coboundary_preimage(CochainComplex(a), c);
}

bool is_coboundary(const CochainComplex& complex, const Cochain& c)
{
    check_degree(complex, c.dim(), c.degree());
    return complex.coboundaries(c.degree()).contains(complex.basis(c.degree()).coordinates(c));
}

CohomologyReport cohomology(const CochainComplex& complex, std::size_t q, bool representatives)
{
    const std::size_t n = complex.algebra().dim();
    if (q > n)
        throw InvalidArgument("cohomology degree " + std::to_string(q) + " out of range 0.." + std::to_string(n));
    CohomologyReport report;
    report.degree = q;
    report.dim_cochains = complex.basis(q).size();
    report.rank_d = complex.differential_rank(q);
    report.rank_d_prev = q > 0 ? complex.differential_rank(q - 1) : 0;
    report.dim_kernel = report.dim_cochains - report.rank_d;
    report.dim_image_prev = report.rank_d_prev;
    report.dim_h = report.dim_kernel - report.dim_image_prev;
    if (representatives) {
        SpanBasis span = complex.coboundaries(q);
        for (auto& v : nullspace(complex.differential(q)))
            if (span.insert(v))
                report.representatives.push_back(complex.basis(q).cochain(v));
    }
    return report;
}

CohomologyReport cohomology(const LieAlgebra& a, std::size_t q, bool representatives)
{
    return cohomology(CochainComplex(a), q, representatives);
}

long long heisenberg_cohomology_formula(long long n, long long p)
{
    if (n < 1 || p < 0 || p > 2 * n + 1)
        throw InvalidArgument("heisenberg_cohomology_formula: need n >= 1 and 0 <= p <= 2n+1");
    auto c = [](long long a, long long b) { return static_cast<long long>(binomial(a, b)); };
    if (p == 0)
        return 1;
    if (p <= n)
        return (2 * n + 1) * c(2 * n + 1, p) - c(2 * n + 1, p + 1) - 2 * n * c(2 * n + 1, p - 1);
    if (p == n + 1)
        return (2 * n + 1) * (c(2 * n, n) - c(2 * n, n - 2)) - c(2 * n, n - 1) + c(2 * n, n - 3);
    return 2 * n * (c(2 * n, p - 1) - c(2 * n, p + 1)) - c(2 * n, p) + c(2 * n, p + 2);
}

bool same_class(const CochainComplex& complex, const Cochain& c1, const Cochain& c2)
{
    if (c1.degree() != c2.degree())
        throw DimensionMismatch("class comparison of cochains of different degree");
    if (!is_cocycle(complex, c1) || !is_cocycle(complex, c2))
        throw NotACocycle("class comparison requires two cocycles");
    return is_coboundary(complex, c1 - c2);
}

bool same_class(const LieAlgebra& a, const Cochain& c1, const Cochain& c2)
{
    return same_class(CochainComplex(a), c1, c2);
}

std::size_t span_in_cohomology(const CochainComplex& complex, std::size_t q, const std::vector<Cochain>& cocycles)
{
    SpanBasis span = complex.coboundaries(q);
    std::size_t count = 0;
    for (const auto& c : cocycles) {
        if (c.degree() != q)
            throw DimensionMismatch("span_in_cohomology: cochain of degree " + std::to_string(c.degree())
                                    + " in degree-" + std::to_string(q) + " span");
        if (!is_cocycle(complex, c))
            throw NotACocycle("span_in_cohomology: input is not a cocycle");
        if (span.insert(complex.basis(q).coordinates(c)))
            ++count;
    }
    return count;
}

} // namespace liedef
