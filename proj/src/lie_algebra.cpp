#include "liedef/lie_algebra.hpp"

#include "liedef/errors.hpp"

namespace liedef {

namespace {

Vector unit(std::size_t n, std::size_t i)
{
    Vector v(n);
    v[i] = Rational(1);
    return v;
}

} // namespace

LieAlgebra::LieAlgebra(std::size_t dim, const std::map<IndexPair, Vector>& brackets, Validation validation,
                       std::string name)
    : dim_(dim), constants_(dim * dim * dim), name_(std::move(name))
{
    if (dim == 0)
        throw InvalidArgument("Lie algebra dimension must be positive");
    for (const auto& [pair, coeffs] : brackets) {
        const auto [i, j] = pair;
        if (i >= j)
            throw InvalidArgument("bracket pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                                  + ") must have i < j");
        if (j >= dim)
            throw InvalidArgument("bracket index " + std::to_string(j + 1) + " exceeds dimension "
                                  + std::to_string(dim));
        if (coeffs.size() != dim)
            throw InvalidArgument("bracket (" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                                  + ") has " + std::to_string(coeffs.size()) + " coefficients, expected "
                                  + std::to_string(dim));
        for (std::size_t k = 0; k < dim; ++k) {
            constants_[(i * dim + j) * dim + k] = coeffs[k];
            constants_[(j * dim + i) * dim + k] = -coeffs[k];
        }
    }
    if (validation == Validation::checked) {
        auto violations = jacobi_violations();
        if (!violations.empty()) {
            const auto& v = violations.front();
            throw NotALieAlgebra("Jacobi identity fails on (e" + std::to_string(v.i + 1) + ",e" + std::to_string(v.j + 1)
                                 + ",e" + std::to_string(v.k + 1) + ")");
        }
    }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim)
{
    return LieAlgebra(dim, {}, Validation::checked, "abelian" + std::to_string(dim));
}

LieAlgebra LieAlgebra::with_name(std::string name) const
{
    LieAlgebra out = *this;
    out.name_ = std::move(name);
    return out;
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const
{
    if (i >= dim_ || j >= dim_)
        throw DimensionMismatch("basis index out of range");
    auto first = constants_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
    return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const
{
    if (x.size() != dim_ || y.size() != dim_)
        throw DimensionMismatch("bracket: vectors must have length " + std::to_string(dim_));
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i == j || y[j].is_zero())
                continue;
            const Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rational& c = constant(i, j, k);
                if (!c.is_zero())
                    out[k] += xy * c;
            }
        }
    }
    return out;
}

std::map<IndexPair, Vector> LieAlgebra::table() const
{
    std::map<IndexPair, Vector> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            Vector v = basis_bracket(i, j);
            if (!is_zero_vector(v))
                out.emplace(IndexPair{i, j}, std::move(v));
        }
    return out;
}

std::vector<LieAlgebra::JacobiViolation> LieAlgebra::jacobi_violations() const
{
    std::vector<JacobiViolation> out;
    const std::size_t n = dim_;
    // [e_a,[e_b,e_c]] = sum_m c_bc^m [e_a, e_m]
    auto nested = [&](std::size_t a, std::size_t b, std::size_t c, Vector& acc) {
        for (std::size_t m = 0; m < n; ++m) {
            const Rational& cm = constant(b, c, m);
            if (cm.is_zero())
                continue;
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& am = constant(a, m, k);
                if (!am.is_zero())
                    acc[k] += cm * am;
            }
        }
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector defect(n);
                nested(i, j, k, defect);
                nested(j, k, i, defect);
                nested(k, i, j, defect);
                if (!is_zero_vector(defect))
                    out.push_back({i, j, k, std::move(defect)});
            }
    return out;
}

BasisChange::BasisChange(RationalMatrix matrix) : matrix_(std::move(matrix))
{
    if (matrix_.rows() != matrix_.cols())
        throw DimensionMismatch("basis change must be square");
    auto inv = liedef::inverse(matrix_);
    if (!inv)
        throw SingularBasisChange();
    inverse_ = std::move(*inv);
}

std::vector<Vector> center(const LieAlgebra& a)
{
    // Stack the linear maps x -> [x, e_i]: row (i, k) holds sum_j x_j c_ji^k.
    const std::size_t n = a.dim();
    RationalMatrix stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                stacked(i * n + k, j) = a.constant(j, i, k);
    return nullspace(stacked);
}

std::vector<Vector> bracket_subspace(const LieAlgebra& a, const std::vector<Vector>& u, const std::vector<Vector>& v)
{
    SpanBasis span(a.dim());
    for (const auto& x : u)
        for (const auto& y : v)
            span.insert(a.bracket(x, y));
    return span.basis();
}

std::vector<std::size_t> series(const LieAlgebra& a, SeriesKind kind)
{
    const std::size_t n = a.dim();
    std::vector<Vector> whole;
    for (std::size_t i = 0; i < n; ++i)
        whole.push_back(unit(n, i));

    std::vector<std::size_t> dims{n};
    std::vector<Vector> current = whole;
    while (!current.empty()) {
        std::vector<Vector> next = kind == SeriesKind::derived ? bracket_subspace(a, current, current)
                                                               : bracket_subspace(a, whole, current);
        if (next.size() == current.size())
            break;
        dims.push_back(next.size());
        current = std::move(next);
    }
    return dims;
}

bool is_solvable(const LieAlgebra& a)
{
    return series(a, SeriesKind::derived).back() == 0;
}

bool is_nilpotent(const LieAlgebra& a)
{
    return series(a, SeriesKind::lower_central).back() == 0;
}

LieAlgebra change_basis(const LieAlgebra& a, const BasisChange& t)
{
    const std::size_t n = a.dim();
    if (t.dim() != n)
        throw DimensionMismatch("basis change has dimension " + std::to_string(t.dim()) + ", algebra has "
                                + std::to_string(n));
    std::vector<Vector> columns;
    for (std::size_t i = 0; i < n; ++i)
        columns.push_back(t.matrix().column(i));
    std::map<IndexPair, Vector> table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector image = apply_matrix(t.inverse(), a.bracket(columns[i], columns[j]));
            if (!is_zero_vector(image))
                table.emplace(IndexPair{i, j}, std::move(image));
        }
    // Transport preserves the Jacobi identity, so the table is valid whenever `a` is.
    return LieAlgebra(n, table, LieAlgebra::Validation::unchecked, a.name());
}

std::vector<RationalMatrix> heisenberg_matrix_rep(std::size_t n)
{
    if (n == 0)
        throw InvalidArgument("Heisenberg rank must be at least 1");
    const std::size_t size = n + 2;
    std::vector<RationalMatrix> out;
    for (std::size_t i = 1; i <= n; ++i) {
        RationalMatrix m(size, size);
        m(0, i) = Rational(1);
        out.push_back(std::move(m));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        RationalMatrix m(size, size);
        m(i, size - 1) = Rational(1);
        out.push_back(std::move(m));
    }
    RationalMatrix corner(size, size);
    corner(0, size - 1) = Rational(1);
    out.push_back(std::move(corner));
    return out;
}

} // namespace liedef
