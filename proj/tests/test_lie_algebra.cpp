#include "liedef/catalog.hpp"
#include "liedef/errors.hpp"
#include "liedef/lie_algebra.hpp"
#include "liedef/linalg.hpp"

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

using namespace liedef;
using liedef::testkit::Gen;
using liedef::testkit::member;
using liedef::testkit::unit_vector;

namespace {

// [e1,e2] = e1, [e1,e3] = e2, [e2,e3] = 0. Expanding the cyclic sum on (e1,e2,e3)
// by hand: [e1,0] + [e2,-e2] + [e3,e1] = -[e1,e3] = -e2.
LieAlgebra broken_table()
{
    std::map<IndexPair, Vector> t;
    t[{0, 1}] = unit_vector(3, 0);
    t[{0, 2}] = unit_vector(3, 1);
    return LieAlgebra(3, t, LieAlgebra::Validation::unchecked);
}

} // namespace

TEST(LieAlgebra, BracketOnHeisenbergTwo)
{
    const LieAlgebra h2 = heisenberg(2);
    EXPECT_EQ(h2.bracket(unit_vector(5, 0), unit_vector(5, 2)), unit_vector(5, 4));
    Vector x = unit_vector(5, 0), y = unit_vector(5, 2);
    x[1] = Rational(1);
    y[3] = Rational(1);
    Vector two_e5(5);
    two_e5[4] = Rational(2);
    EXPECT_EQ(h2.bracket(x, y), two_e5);
    EXPECT_THROW(h2.bracket(Vector(4), y), DimensionMismatch);
}

TEST(LieAlgebra, BracketIsBilinearAndAlternating)
{
    Gen gen(21);
    const LieAlgebra a = member("d7(1:0:0)");
    for (int trial = 0; trial < 50; ++trial) {
        const Vector x = gen.vector(5), y = gen.vector(5), z = gen.vector(5);
        const Rational c = gen.rational();
        EXPECT_TRUE(is_zero_vector(a.bracket(x, x)));
        Vector xz(5);
        for (std::size_t i = 0; i < 5; ++i)
            xz[i] = x[i] + c * z[i];
        Vector expected = a.bracket(x, y);
        const Vector zy = a.bracket(z, y);
        for (std::size_t i = 0; i < 5; ++i)
            expected[i] += c * zy[i];
        EXPECT_EQ(a.bracket(xz, y), expected);
        EXPECT_EQ(a.bracket(x, y), testkit::oracle::bracket(a, x, y));
    }
}

TEST(LieAlgebra, JacobiCheck)
{
    EXPECT_TRUE(heisenberg(2).jacobi_violations().empty());
    EXPECT_TRUE(LieAlgebra::abelian(6).jacobi_violations().empty());
    const auto v = broken_table().jacobi_violations();
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].i, 0u);
    EXPECT_EQ(v[0].j, 1u);
    EXPECT_EQ(v[0].k, 2u);
    Vector minus_e2(3);
    minus_e2[1] = Rational(-1);
    EXPECT_EQ(v[0].defect, minus_e2);
}

TEST(LieAlgebra, CheckedConstructionRejectsNonLieTables)
{
    EXPECT_THROW(LieAlgebra(3, broken_table().table()), NotALieAlgebra);
    std::map<IndexPair, Vector> bad_pair{{{1, 0}, unit_vector(3, 2)}};
    EXPECT_THROW(LieAlgebra(3, bad_pair), InvalidArgument);
    std::map<IndexPair, Vector> bad_length{{{0, 1}, Vector(2)}};
    EXPECT_THROW(LieAlgebra(3, bad_length), InvalidArgument);
}

TEST(LieAlgebra, Center)
{
    const auto z = center(heisenberg(2));
    ASSERT_EQ(z.size(), 1u);
    EXPECT_FALSE(z[0][4].is_zero());
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_TRUE(z[0][i].is_zero());
    EXPECT_EQ(center(LieAlgebra::abelian(4)).size(), 4u);
    // [e4,e5] = -2e5 in this member, so e5 is no longer central.
    EXPECT_EQ(center(member("d3")).size(), 0u);
}

TEST(LieAlgebra, Series)
{
    EXPECT_EQ(series(heisenberg(2), SeriesKind::lower_central), (std::vector<std::size_t>{5, 1, 0}));
    EXPECT_EQ(series(LieAlgebra::abelian(3), SeriesKind::derived), (std::vector<std::size_t>{3, 0}));
    const LieAlgebra d3 = member("d3");
    EXPECT_EQ(series(d3, SeriesKind::derived).back(), 0u);
    EXPECT_GT(series(d3, SeriesKind::lower_central).back(), 0u);
}

TEST(LieAlgebra, SolvableAndNilpotentFlags)
{
    EXPECT_TRUE(is_solvable(heisenberg(2)));
    EXPECT_TRUE(is_nilpotent(heisenberg(2)));
    EXPECT_TRUE(is_solvable(LieAlgebra::abelian(2)));
    EXPECT_TRUE(is_nilpotent(LieAlgebra::abelian(2)));
    EXPECT_TRUE(is_nilpotent(member("d4(0:0)")));
    EXPECT_FALSE(is_nilpotent(member("d4(1:0)")));
    EXPECT_TRUE(is_solvable(member("d4(1:0)")));
}

TEST(LieAlgebra, SeriesAreNonIncreasingAndStabilize)
{
    Gen gen(22);
    for (const auto& rep : paper_representatives()) {
        const Rational t = gen.nonzero_rational(5, 3);
        const LieAlgebra a = bracket_at(Deformation::infinitesimal(heisenberg(2), rep.cochain), t);
        if (!a.jacobi_violations().empty())
            continue;
        for (SeriesKind kind : {SeriesKind::derived, SeriesKind::lower_central}) {
            const auto s = series(a, kind);
            EXPECT_LE(s.size(), a.dim() + 1);
            EXPECT_EQ(s.front(), a.dim());
            for (std::size_t i = 1; i < s.size(); ++i)
                EXPECT_LT(s[i], s[i - 1]);
        }
    }
}

TEST(LieAlgebra, ChangeBasisExamples)
{
    const LieAlgebra h2 = heisenberg(2);
    EXPECT_EQ(change_basis(h2, BasisChange::identity(5)), h2);
    // e1 <-> e2 together with e3 <-> e4 keeps both brackets [e1,e3] and [e2,e4].
    RationalMatrix swap(5, 5);
    swap(1, 0) = swap(0, 1) = swap(3, 2) = swap(2, 3) = swap(4, 4) = Rational(1);
    EXPECT_EQ(change_basis(h2, BasisChange(swap)), h2);
    EXPECT_THROW(BasisChange(RationalMatrix(5, 5)), SingularBasisChange);
    EXPECT_THROW(BasisChange(RationalMatrix(5, 4)), DimensionMismatch);
    EXPECT_THROW(change_basis(h2, BasisChange::identity(3)), DimensionMismatch);
}

TEST(LieAlgebra, ChangeBasisRoundTripsAndPreservesJacobi)
{
    Gen gen(23);
    const std::vector<LieAlgebra> algebras{heisenberg(1), heisenberg(2), member("d2"), member("d5(1:0)"),
                                           member("d8(0:1:1)")};
    for (int trial = 0; trial < 25; ++trial) {
        const LieAlgebra& a = algebras[trial % algebras.size()];
        const BasisChange t(gen.invertible(a.dim()));
        const LieAlgebra b = change_basis(a, t);
        EXPECT_TRUE(b.jacobi_violations().empty());
        EXPECT_EQ(change_basis(b, BasisChange(t.inverse())), a);
        // Transport law checked against the oracle bracket.
        const Vector x = gen.vector(a.dim()), y = gen.vector(a.dim());
        EXPECT_EQ(apply_matrix(t.matrix(), b.bracket(x, y)),
                  testkit::oracle::bracket(a, apply_matrix(t.matrix(), x), apply_matrix(t.matrix(), y)));
    }
}

TEST(LieAlgebra, HeisenbergStructure)
{
    EXPECT_THROW(heisenberg(0), InvalidArgument);
    EXPECT_EQ(heisenberg(1).table().size(), 1u);
    EXPECT_EQ(heisenberg(1).basis_bracket(0, 1), unit_vector(3, 2));
    const auto t2 = heisenberg(2).table();
    ASSERT_EQ(t2.size(), 2u);
    EXPECT_EQ(t2.at({0, 2}), unit_vector(5, 4));
    EXPECT_EQ(t2.at({1, 3}), unit_vector(5, 4));
    for (std::size_t n = 1; n <= 3; ++n) {
        const LieAlgebra h = heisenberg(n);
        EXPECT_TRUE(h.jacobi_violations().empty());
        EXPECT_EQ(center(h).size(), 1u);
        EXPECT_EQ(series(h, SeriesKind::lower_central), (std::vector<std::size_t>{2 * n + 1, 1, 0}));
    }
}

TEST(LieAlgebra, MatrixRepresentationMatchesTable)
{
    EXPECT_THROW(heisenberg_matrix_rep(0), InvalidArgument);
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto m = heisenberg_matrix_rep(n);
        const LieAlgebra h = heisenberg(n);
        ASSERT_EQ(m.size(), 2 * n + 1);
        for (std::size_t i = 0; i < m.size(); ++i) {
            EXPECT_EQ(m[i].rows(), n + 2);
            for (std::size_t j = 0; j < m.size(); ++j) {
                const RationalMatrix comm = m[i] * m[j] - m[j] * m[i];
                RationalMatrix expected(n + 2, n + 2);
                const Vector b = h.basis_bracket(i, j);
                for (std::size_t k = 0; k < b.size(); ++k)
                    for (std::size_t r = 0; r < n + 2; ++r)
                        for (std::size_t c = 0; c < n + 2; ++c)
                            expected(r, c) += b[k] * m[k](r, c);
                EXPECT_EQ(comm, expected) << "n=" << n << " i=" << i << " j=" << j;
            }
            const RationalMatrix& z = m.back();
            EXPECT_TRUE((m[i] * z - z * m[i]).is_zero());
        }
    }
}

TEST(LieAlgebra, MatrixRepresentationEntries)
{
    const std::size_t n = 2;
    const auto m = heisenberg_matrix_rep(n);
    auto single_one_at = [](const RationalMatrix& x, std::size_t r, std::size_t c) {
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j)
                if (x(i, j) != Rational(i == r && j == c ? 1 : 0))
                    return false;
        return true;
    };
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_TRUE(single_one_at(m[i], 0, i + 1));
        EXPECT_TRUE(single_one_at(m[n + i], i + 1, n + 1));
    }
    EXPECT_TRUE(single_one_at(m[2 * n], 0, n + 1));
}
