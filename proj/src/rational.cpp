#include "liedef/rational.hpp"

#include "liedef/errors.hpp"

#include <cctype>

namespace liedef {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

static_assert(sizeof(long) == sizeof(long long), "LP64 expected");

Rational::Rational(long long value) : value_(mpz_class(static_cast<long>(value))) {}

Rational::Rational(long long numerator, long long denominator)
{
    if (denominator == 0)
        throw DivisionByZero();
    value_ = mpq_class(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator)));
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view s = trim(text);
    bool negative = false;
    if (s.starts_with(kUnicodeMinus)) {
        negative = true;
        s.remove_prefix(kUnicodeMinus.size());
    } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s;
    std::string_view den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw DivisionByZero();
    if (negative)
        n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const
{
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other)
{
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other)
{
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other)
{
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other)
{
    if (other.is_zero())
        throw DivisionByZero();
    value_ /= other.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

} // namespace liedef
