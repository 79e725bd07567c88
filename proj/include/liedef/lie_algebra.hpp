#pragma once

#include "liedef/linalg.hpp"
#include "liedef/matrix.hpp"
#include "liedef/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace liedef {

/// Index pair (i, j) with i < j, 0-based.
using IndexPair = std::pair<std::size_t, std::size_t>;

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c_ij^k e_k. Only pairs i < j are supplied; [e_j, e_i]
/// is derived by skew-symmetry. Indices are 0-based; all file and console I/O
/// translates to 1-based.
class LieAlgebra {
public:
    enum class Validation { checked, unchecked };

    struct JacobiViolation {
        std::size_t i, j, k; ///< 0-based, i < j < k
        Vector defect;       ///< [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
    };

    /// Throws InvalidArgument for malformed pairs or coefficient lengths, and
    /// NotALieAlgebra in checked mode when the Jacobi identity fails.
    LieAlgebra(std::size_t dim, const std::map<IndexPair, Vector>& brackets,
               Validation validation = Validation::checked, std::string name = {});

    static LieAlgebra abelian(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    LieAlgebra with_name(std::string name) const;

    /// c_ij^k; valid for any i, j (skew-symmetric, zero on the diagonal).
    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const
    {
        return constants_[(i * dim_ + j) * dim_ + k];
    }
    Vector basis_bracket(std::size_t i, std::size_t j) const;
    Vector bracket(const Vector& x, const Vector& y) const;

    /// The nonzero brackets [e_i, e_j] with i < j.
    std::map<IndexPair, Vector> table() const;

    std::vector<JacobiViolation> jacobi_violations() const;

    /// Identical structure-constant tables (names are ignored).
    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
    {
        return a.dim_ == b.dim_ && a.constants_ == b.constants_;
    }

private:
    std::size_t dim_;
    std::vector<Rational> constants_; // dim^3, skew in the first two indices
    std::string name_;
};

/// Invertible change of basis; column i holds the new e_i' in old coordinates.
class BasisChange {
public:
    /// Throws DimensionMismatch for a non-square matrix and SingularBasisChange
    /// when it is not invertible.
    explicit BasisChange(RationalMatrix matrix);

    static BasisChange identity(std::size_t n) { return BasisChange(RationalMatrix::identity(n)); }

    std::size_t dim() const { return matrix_.rows(); }
    const RationalMatrix& matrix() const { return matrix_; }
    const RationalMatrix& inverse() const { return inverse_; }

private:
    RationalMatrix matrix_;
    RationalMatrix inverse_;
};

enum class SeriesKind { derived, lower_central };

/// Basis of the center {x : [x, e_i] = 0 for all i}.
std::vector<Vector> center(const LieAlgebra& a);

/// Echelon basis of span{[u, v] : u in U, v in V}, spanning pairs in lexicographic order.
std::vector<Vector> bracket_subspace(const LieAlgebra& a, const std::vector<Vector>& u, const std::vector<Vector>& v);

/// Dimensions g, g1, g2, ... until the sequence reaches 0 or stops decreasing;
/// the stable value is listed once.
std::vector<std::size_t> series(const LieAlgebra& a, SeriesKind kind);
bool is_solvable(const LieAlgebra& a);
bool is_nilpotent(const LieAlgebra& a);

/// Structure constants in the new basis: [x, y]' = T^{-1} [T x, T y].
LieAlgebra change_basis(const LieAlgebra& a, const BasisChange& t);

/// (n+2)x(n+2) strictly upper-triangular matrices representing e_1 .. e_{2n+1}
/// of the Heisenberg algebra h_n.
std::vector<RationalMatrix> heisenberg_matrix_rep(std::size_t n);

} // namespace liedef
