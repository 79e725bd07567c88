#pragma once

#include "liedef/errors.hpp"
#include "liedef/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace liedef {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over an exact scalar (Rational or PolyScalar).
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = S(1);
        return m;
    }

    /// Builds a matrix whose columns are the given vectors, all of length `rows`.
    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<S>>& columns)
    {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows)
                throw DimensionMismatch("column " + std::to_string(j) + " has wrong length");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<S> column(std::size_t j) const
    {
        std::vector<S> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out[i] = (*this)(i, j);
        return out;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!liedef::is_zero(x))
                return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product: inner dimensions differ");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (liedef::is_zero(aik))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const S& bkj = b(k, j);
                    if (!liedef::is_zero(bkj))
                        out(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix difference: shapes differ");
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] -= b.data_[i];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

using RationalMatrix = Matrix<Rational>;

/// m·v for a rational matrix and a vector over any scalar the rationals act on.
template <class S>
std::vector<S> apply_matrix(const RationalMatrix& m, const std::vector<S>& v)
{
    if (v.size() != m.cols())
        throw DimensionMismatch("matrix-vector product: length " + std::to_string(v.size()) + " vs "
                                + std::to_string(m.cols()) + " columns");
    std::vector<S> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& mij = m(i, j);
            if (mij.is_zero() || is_zero(v[j]))
                continue;
            out[i] += S(mij) * v[j];
        }
    }
    return out;
}

} // namespace liedef
