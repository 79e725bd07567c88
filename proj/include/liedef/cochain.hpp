#pragma once

#include "liedef/errors.hpp"
#include "liedef/lie_algebra.hpp"
#include "liedef/poly_scalar.hpp"
#include "liedef/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace liedef {

/// Index tuple of cochain arguments, 0-based.
using IndexTuple = std::vector<std::size_t>;

/// Sorts `args` in place and returns the sign of the sorting permutation, or 0
/// if an index repeats.
int sort_with_sign(IndexTuple& args);

/// Alternating q-linear map g^q -> g, stored on strictly increasing index
/// tuples. Absent tuples are zero; zero values are never stored.
template <class S>
class BasicCochain {
public:
    using Value = std::vector<S>;

    BasicCochain() = default;
    BasicCochain(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

    std::size_t dim() const { return dim_; }
    std::size_t degree() const { return degree_; }
    const std::map<IndexTuple, Value>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    /// Sets the value on `args`, given in any order; the permutation sign is applied.
    void set(IndexTuple args, Value value)
    {
        check_value(value);
        check_args(args);
        const int sign = sort_with_sign(args);
        if (sign == 0)
            throw InvalidArgument("cochain arguments must be distinct");
        if (sign < 0)
            for (auto& x : value)
                x = -x;
        store(std::move(args), std::move(value));
    }

    /// Adds `value` to the entry on `args` (any order).
    void add(IndexTuple args, const Value& value)
    {
        check_value(value);
        check_args(args);
        const int sign = sort_with_sign(args);
        if (sign == 0)
            throw InvalidArgument("cochain arguments must be distinct");
        Value sum = (*this)(args);
        for (std::size_t k = 0; k < dim_; ++k)
            sum[k] += sign > 0 ? value[k] : -value[k];
        store(std::move(args), std::move(sum));
    }

    /// Value on basis vectors e_args (any order; repeated indices give zero).
    Value operator()(IndexTuple args) const
    {
        check_args(args);
        const int sign = sort_with_sign(args);
        Value out(dim_);
        if (sign == 0)
            return out;
        auto it = entries_.find(args);
        if (it == entries_.end())
            return out;
        out = it->second;
        if (sign < 0)
            for (auto& x : out)
                x = -x;
        return out;
    }

    /// Value on (e_first, v) for a 2-cochain, with v an arbitrary vector.
    template <class T>
    Value apply_second(std::size_t first, const std::vector<T>& v) const
    {
        if (degree_ != 2)
            throw InvalidArgument("apply_second requires a 2-cochain");
        Value out(dim_);
        for (std::size_t m = 0; m < dim_; ++m) {
            if (liedef::is_zero(v[m]) || m == first)
                continue;
            Value basis_value = (*this)({first, m});
            for (std::size_t k = 0; k < dim_; ++k)
                if (!liedef::is_zero(basis_value[k]))
                    out[k] += basis_value[k] * S(v[m]);
        }
        return out;
    }

    BasicCochain& operator+=(const BasicCochain& other)
    {
        check_compatible(other);
        for (const auto& [args, value] : other.entries_)
            add(args, value);
        return *this;
    }

    BasicCochain& operator-=(const BasicCochain& other)
    {
        check_compatible(other);
        for (const auto& [args, value] : other.entries_) {
            Value neg = value;
            for (auto& x : neg)
                x = -x;
            add(args, neg);
        }
        return *this;
    }

    friend BasicCochain operator+(BasicCochain a, const BasicCochain& b) { return a += b; }
    friend BasicCochain operator-(BasicCochain a, const BasicCochain& b) { return a -= b; }
    friend BasicCochain operator-(const BasicCochain& c) { return S(-1) * c; }

    friend BasicCochain operator*(const S& scalar, const BasicCochain& c)
    {
        BasicCochain out(c.dim_, c.degree_);
        for (const auto& [args, value] : c.entries_) {
            Value scaled = value;
            for (auto& x : scaled)
                x = scalar * x;
            out.store(args, std::move(scaled));
        }
        return out;
    }

    friend bool operator==(const BasicCochain& a, const BasicCochain& b)
    {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.entries_ == b.entries_;
    }

private:
    void check_args(const IndexTuple& args) const
    {
        if (args.size() != degree_)
            throw InvalidArgument("cochain of degree " + std::to_string(degree_) + " given "
                                  + std::to_string(args.size()) + " arguments");
        for (auto i : args)
            if (i >= dim_)
                throw InvalidArgument("cochain argument index " + std::to_string(i + 1) + " exceeds dimension "
                                      + std::to_string(dim_));
    }

    void check_value(const Value& value) const
    {
        if (value.size() != dim_)
            throw InvalidArgument("cochain value must have length " + std::to_string(dim_));
    }

    void check_compatible(const BasicCochain& other) const
    {
        if (other.dim_ != dim_ || other.degree_ != degree_)
            throw DimensionMismatch("cochains of different shape");
    }

    void store(IndexTuple args, Value value)
    {
        const bool zero = std::all_of(value.begin(), value.end(), [](const S& x) { return liedef::is_zero(x); });
        if (zero)
            entries_.erase(args);
        else
            entries_[std::move(args)] = std::move(value);
    }

    std::size_t dim_;
    std::size_t degree_;
    std::map<IndexTuple, Value> entries_;
};

using Cochain = BasicCochain<Rational>;
using SymbolicCochain = BasicCochain<PolyScalar>;

/// Coordinates on C^q(g; g): index tuples in lexicographic order, then target
/// basis index ascending. size() = C(n, q) * n.
class CochainBasis {
public:
    CochainBasis(std::size_t dim, std::size_t degree);

    std::size_t dim() const { return dim_; }
    std::size_t degree() const { return degree_; }
    std::size_t size() const { return tuples_.size() * dim_; }
    const std::vector<IndexTuple>& tuples() const { return tuples_; }
    /// Position of a strictly increasing tuple in tuples().
    std::size_t tuple_index(const IndexTuple& sorted) const;
    std::size_t coordinate(std::size_t tuple_index, std::size_t target) const { return tuple_index * dim_ + target; }

    template <class S>
    std::vector<S> coordinates(const BasicCochain<S>& c) const
    {
        check(c.dim(), c.degree());
        std::vector<S> out(size());
        for (const auto& [args, value] : c.entries()) {
            const std::size_t t = tuple_index(args);
            for (std::size_t k = 0; k < dim_; ++k)
                out[coordinate(t, k)] = value[k];
        }
        return out;
    }

    template <class S>
    BasicCochain<S> cochain(const std::vector<S>& coords) const
    {
        if (coords.size() != size())
            throw DimensionMismatch("coordinate vector has length " + std::to_string(coords.size()) + ", expected "
                                    + std::to_string(size()));
        BasicCochain<S> out(dim_, degree_);
        for (std::size_t t = 0; t < tuples_.size(); ++t) {
            std::vector<S> value(coords.begin() + static_cast<std::ptrdiff_t>(t * dim_),
                                 coords.begin() + static_cast<std::ptrdiff_t>((t + 1) * dim_));
            out.set(tuples_[t], std::move(value));
        }
        return out;
    }

private:
    void check(std::size_t dim, std::size_t degree) const;

    std::size_t dim_ = 0;
    std::size_t degree_ = 0;
    std::vector<IndexTuple> tuples_;
    std::map<IndexTuple, std::size_t> index_;
};

std::size_t binomial(long long n, long long k);

/// Substitutes the parameter point into every entry.
Cochain substitute(const SymbolicCochain& c, const ParamPoint& at);
SymbolicCochain to_symbolic(const Cochain& c);

/// The base bracket as a 2-cochain.
Cochain bracket_cochain(const LieAlgebra& a);

} // namespace liedef
