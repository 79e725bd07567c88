#pragma once

#include "liedef/matrix.hpp"

#include <optional>
#include <vector>

namespace liedef {

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. The pivot of each column is the first row (from
/// the current one down) with a nonzero entry; no magnitude heuristics.
Echelon row_reduce(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m·x = 0}, one vector per pivot-free column in ascending order.
/// The vector for free column f has a 1 at f and zeros at the other free columns.
std::vector<Vector> nullspace(const RationalMatrix& m);

/// Some x with m·x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const RationalMatrix& m, const Vector& b);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Incrementally maintained echelon basis of a subspace of Q^n.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }

    /// Adds v to the spanning set; returns true if it was independent.
    bool insert(const Vector& v);
    bool contains(const Vector& v) const;
    /// v minus its component along the stored rows (zero iff v is in the span).
    Vector reduce(Vector v) const;
    /// The stored echelon rows, in insertion order.
    const std::vector<Vector>& basis() const { return rows_; }

private:
    std::size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

bool is_zero_vector(const Vector& v);

} // namespace liedef
