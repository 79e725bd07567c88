#pragma once

#include "liedef/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace liedef {

/// Formal parameters of the cochain families, in canonical order.
enum class Var : std::uint8_t { p = 0, q = 1, r = 2 };

/// Exponents of (p, q, r). Ordered lexicographically by the triple.
using Monomial = std::array<std::uint8_t, 3>;

/// Values substituted for (p, q, r).
struct ParamPoint {
    Rational p;
    Rational q;
    Rational r;
};

/// Multivariate polynomial over the rationals in the variables p, q, r.
///
/// Terms are kept in canonical form: no zero coefficients, monomials sorted by
/// exponent triple. The total degree of every term is capped at kMaxDegree and
/// exceeding the cap raises DegreeOverflow rather than truncating.
class PolyScalar {
public:
    static constexpr int kMaxDegree = 8;

    PolyScalar() = default;
    PolyScalar(Rational constant); // NOLINT: scalars embed implicitly
    PolyScalar(long long constant) : PolyScalar(Rational(constant)) {} // NOLINT

    static PolyScalar variable(Var v);
    static PolyScalar monomial(Monomial exponents, Rational coefficient);

    /// Parses expressions such as "-1 + 2*p*q - r^2" or "r*(p - q)".
    static PolyScalar parse(std::string_view text);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant value when is_constant(), otherwise nullopt.
    std::optional<Rational> constant_value() const;
    int total_degree() const;

    Rational evaluate(const ParamPoint& at) const;

    /// λ with *this == λ·g, if such a rational exists. g must be nonzero.
    std::optional<Rational> ratio_to(const PolyScalar& g) const;

    std::string to_string() const;

    PolyScalar& operator+=(const PolyScalar& other);
    PolyScalar& operator-=(const PolyScalar& other);
    PolyScalar& operator*=(const PolyScalar& other);

    friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
    friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
    friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);
    PolyScalar operator-() const;

    friend bool operator==(const PolyScalar& a, const PolyScalar& b) { return a.terms_ == b.terms_; }

    friend std::ostream& operator<<(std::ostream& os, const PolyScalar& p) { return os << p.to_string(); }

private:
    void add_term(const Monomial& m, const Rational& c);

    std::map<Monomial, Rational> terms_;
};

inline bool is_zero(const PolyScalar& p) { return p.is_zero(); }

} // namespace liedef
