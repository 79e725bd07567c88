#pragma once

#include "liedef/cochain.hpp"
#include "liedef/lie_algebra.hpp"
#include "liedef/matrix.hpp"
#include "liedef/poly_scalar.hpp"

#include <random>

namespace liedef::testkit {

// Seeded random objects for property tests. Every suite builds its own Gen with
// a fixed seed so failures reproduce.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Rational rational(int max_num = 9, int max_den = 6)
    {
        return Rational(integer(-max_num, max_num), integer(1, max_den));
    }

    Rational nonzero_rational(int max_num = 9, int max_den = 6)
    {
        Rational r;
        do
            r = rational(max_num, max_den);
        while (r.is_zero());
        return r;
    }

    Vector vector(std::size_t n, double density = 0.7)
    {
        Vector v(n);
        for (auto& x : v)
            if (coin(density))
                x = rational();
        return v;
    }

    RationalMatrix matrix(std::size_t rows, std::size_t cols, double density = 0.5)
    {
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (coin(density))
                    m(i, j) = rational(4, 3);
        return m;
    }

    /// Low-rank matrix as a product of random factors.
    RationalMatrix low_rank_matrix(std::size_t rows, std::size_t cols, std::size_t rank)
    {
        return matrix(rows, rank, 0.8) * matrix(rank, cols, 0.8);
    }

    /// Unit lower triangular times upper triangular with nonzero diagonal.
    RationalMatrix invertible(std::size_t n)
    {
        RationalMatrix l = RationalMatrix::identity(n);
        RationalMatrix u(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            u(i, i) = nonzero_rational(3, 2);
            for (std::size_t j = 0; j < i; ++j) {
                if (coin(0.4))
                    l(i, j) = rational(2, 2);
                if (coin(0.4))
                    u(j, i) = rational(2, 2);
            }
        }
        return l * u;
    }

    Cochain cochain(std::size_t dim, std::size_t degree, double density = 0.5)
    {
        Cochain c(dim, degree);
        const CochainBasis basis(dim, degree);
        for (const auto& tuple : basis.tuples())
            if (coin(density))
                c.set(tuple, vector(dim, 0.5));
        return c;
    }

    PolyScalar poly(int max_degree = 2, int terms = 4)
    {
        PolyScalar out;
        for (int t = 0; t < terms; ++t) {
            Monomial m{};
            int left = integer(0, max_degree);
            for (auto& e : m) {
                const int take = integer(0, left);
                e = static_cast<std::uint8_t>(take);
                left -= take;
            }
            out += PolyScalar::monomial(m, rational());
        }
        return out;
    }

    ParamPoint point() { return {rational(), rational(), rational()}; }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace liedef::testkit
