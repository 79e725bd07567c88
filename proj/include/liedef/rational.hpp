#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace liedef {

/// Exact rational number. Always reduced, with a positive denominator, so that
/// zero is 0/1 and equality is field-wise.
class Rational {
public:
    Rational() = default;
    Rational(long long value); // NOLINT: integers convert implicitly
    Rational(long long numerator, long long denominator);

    /// Parses "a" or "a/b" with b > 0. Accepts ASCII '-' and U+2212 for the sign.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    std::string numerator() const { return value_.get_num().get_str(); }
    std::string denominator() const { return value_.get_den().get_str(); }
    std::string to_string() const;

    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

} // namespace liedef
