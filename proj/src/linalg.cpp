#include "liedef/linalg.hpp"

namespace liedef {

bool is_zero_vector(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Echelon row_reduce(RationalMatrix m)
{
    Echelon out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c).is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(r, j), m(pivot, j));

        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero())
                m(r, j) *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            const Rational factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= factor * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RationalMatrix& m)
{
    return row_reduce(m).pivots.size();
}

std::vector<Vector> nullspace(const RationalMatrix& m)
{
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v(m.cols());
        v[f] = Rational(1);
        for (std::size_t k = 0; k < e.pivots.size(); ++k)
            v[e.pivots[k]] = -e.reduced(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const RationalMatrix& m, const Vector& b)
{
    if (b.size() != m.rows())
        throw DimensionMismatch("solve: right-hand side has length " + std::to_string(b.size()) + ", expected "
                                + std::to_string(m.rows()));
    RationalMatrix augmented(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            augmented(i, j) = m(i, j);
        augmented(i, m.cols()) = b[i];
    }
    const Echelon e = row_reduce(std::move(augmented));
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    Vector x(m.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        x[e.pivots[k]] = e.reduced(k, m.cols());
    return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix augmented(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            augmented(i, j) = m(i, j);
        augmented(i, n + i) = Rational(1);
    }
    const Echelon e = row_reduce(std::move(augmented));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = e.reduced(i, n + j);
    return out;
}

Vector SpanBasis::reduce(Vector v) const
{
    if (v.size() != ambient_)
        throw DimensionMismatch("span basis: vector length " + std::to_string(v.size()) + ", expected "
                                + std::to_string(ambient_));
    // Each stored row is zero at the pivots of the rows inserted before it, so a
    // single pass in insertion order clears every pivot coordinate of v.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (v[p].is_zero())
            continue;
        const Rational factor = v[p];
        const Vector& row = rows_[k];
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!row[j].is_zero())
                v[j] -= factor * row[j];
    }
    return v;
}

bool SpanBasis::insert(const Vector& v)
{
    Vector reduced = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && reduced[p].is_zero())
        ++p;
    if (p == ambient_)
        return false;
    const Rational inv = Rational(1) / reduced[p];
    for (auto& x : reduced)
        if (!x.is_zero())
            x *= inv;
    rows_.push_back(std::move(reduced));
    pivots_.push_back(p);
    return true;
}

bool SpanBasis::contains(const Vector& v) const
{
    return is_zero_vector(reduce(v));
}

} // namespace liedef
