#include "liedef/poly_scalar.hpp"

#include "liedef/errors.hpp"

#include <cctype>

namespace liedef {

namespace {

int degree_of(const Monomial& m)
{
    return m[0] + m[1] + m[2];
}

void check_degree(const Monomial& m)
{
    if (degree_of(m) > PolyScalar::kMaxDegree)
        throw DegreeOverflow("polynomial degree " + std::to_string(degree_of(m)) + " exceeds cap "
                             + std::to_string(PolyScalar::kMaxDegree));
}

Rational power(const Rational& base, int exponent)
{
    Rational out(1);
    for (int i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

// Recursive-descent parser: expr := term (('+'|'-') term)*,
// term := unary ('*' unary)*, unary := '-' unary | factor ('^' int)?,
// factor := number ('/' number)? | p | q | r | '(' expr ')'.
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    PolyScalar parse()
    {
        PolyScalar out = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character");
        return out;
    }

private:
    PolyScalar expr()
    {
        PolyScalar out = term();
        for (;;) {
            skip_space();
            if (accept("+"))
                out += term();
            else if (accept_minus())
                out -= term();
            else
                return out;
        }
    }

    PolyScalar term()
    {
        PolyScalar out = unary();
        for (;;) {
            skip_space();
            if (accept("*"))
                out = out * unary();
            else
                return out;
        }
    }

    PolyScalar unary()
    {
        skip_space();
        if (accept_minus())
            return -unary();
        if (accept("+"))
            return unary();
        PolyScalar base = factor();
        skip_space();
        if (accept("^")) {
            skip_space();
            std::string digits = take_digits();
            if (digits.empty())
                fail("expected exponent");
            int e = std::stoi(digits);
            if (e > PolyScalar::kMaxDegree)
                throw DegreeOverflow("exponent " + digits + " exceeds degree cap");
            PolyScalar out(1);
            for (int i = 0; i < e; ++i)
                out = out * base;
            return out;
        }
        return base;
    }

    PolyScalar factor()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            PolyScalar inner = expr();
            skip_space();
            if (!accept(")"))
                fail("expected ')'");
            return inner;
        }
        if (c == 'p' || c == 'q' || c == 'r') {
            ++pos_;
            return PolyScalar::variable(c == 'p' ? Var::p : c == 'q' ? Var::q : Var::r);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string literal = take_digits();
            skip_space();
            if (accept("/")) {
                skip_space();
                std::string den = take_digits();
                if (den.empty())
                    fail("expected denominator");
                literal += "/" + den;
            }
            return PolyScalar(Rational::parse(literal));
        }
        fail("unexpected character");
    }

    std::string take_digits()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    bool accept(std::string_view token)
    {
        if (text_.substr(pos_).starts_with(token)) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    bool accept_minus() { return accept("-") || accept("\xE2\x88\x92"); }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

PolyScalar::PolyScalar(Rational constant)
{
    add_term({0, 0, 0}, constant);
}

PolyScalar PolyScalar::variable(Var v)
{
    Monomial m{0, 0, 0};
    m[static_cast<std::size_t>(v)] = 1;
    return monomial(m, Rational(1));
}

PolyScalar PolyScalar::monomial(Monomial exponents, Rational coefficient)
{
    check_degree(exponents);
    PolyScalar out;
    out.add_term(exponents, coefficient);
    return out;
}

PolyScalar PolyScalar::parse(std::string_view text)
{
    return Parser(text).parse();
}

void PolyScalar::add_term(const Monomial& m, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

bool PolyScalar::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0, 0});
}

std::optional<Rational> PolyScalar::constant_value() const
{
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        return std::nullopt;
    return terms_.begin()->second;
}

int PolyScalar::total_degree() const
{
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, degree_of(m));
    return d;
}

Rational PolyScalar::evaluate(const ParamPoint& at) const
{
    Rational out;
    for (const auto& [m, c] : terms_)
        out += c * power(at.p, m[0]) * power(at.q, m[1]) * power(at.r, m[2]);
    return out;
}

std::optional<Rational> PolyScalar::ratio_to(const PolyScalar& g) const
{
    if (g.is_zero())
        throw InvalidArgument("ratio_to: zero generator");
    if (terms_.size() != g.terms_.size())
        return is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
    const auto& [lead, lead_coeff] = *g.terms_.begin();
    auto it = terms_.find(lead);
    if (it == terms_.end())
        return std::nullopt;
    Rational lambda = it->second / lead_coeff;
    for (const auto& [m, c] : g.terms_) {
        auto mine = terms_.find(m);
        if (mine == terms_.end() || !(mine->second == lambda * c))
            return std::nullopt;
    }
    return lambda;
}

std::string PolyScalar::to_string() const
{
    if (terms_.empty())
        return "0";
    static constexpr char kNames[3] = {'p', 'q', 'r'};
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational magnitude = c.sign() < 0 ? -c : c;
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;

        std::string vars;
        for (std::size_t v = 0; v < 3; ++v) {
            if (m[v] == 0)
                continue;
            if (!vars.empty())
                vars += "*";
            vars += kNames[v];
            if (m[v] > 1)
                vars += "^" + std::to_string(m[v]);
        }
        if (vars.empty())
            out += magnitude.to_string();
        else if (magnitude == Rational(1))
            out += vars;
        else
            out += magnitude.to_string() + "*" + vars;
    }
    return out;
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

PolyScalar& PolyScalar::operator*=(const PolyScalar& other)
{
    *this = *this * other;
    return *this;
}

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b)
{
    PolyScalar out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{static_cast<std::uint8_t>(ma[0] + mb[0]), static_cast<std::uint8_t>(ma[1] + mb[1]),
                       static_cast<std::uint8_t>(ma[2] + mb[2])};
            check_degree(m);
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

PolyScalar PolyScalar::operator-() const
{
    PolyScalar out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

} // namespace liedef
