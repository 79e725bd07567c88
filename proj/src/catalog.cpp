#include "liedef/catalog.hpp"

#include "liedef/errors.hpp"

#include <array>
#include <utility>

namespace liedef {

LieAlgebra heisenberg(std::size_t n)
{
    if (n == 0)
        throw InvalidArgument("Heisenberg rank must be at least 1");
    const std::size_t dim = 2 * n + 1;
    std::map<IndexPair, Vector> table;
    for (std::size_t i = 0; i < n; ++i) {
        Vector v(dim);
        v[dim - 1] = Rational(1);
        table.emplace(IndexPair{i, n + i}, std::move(v));
    }
    return LieAlgebra(dim, table, LieAlgebra::Validation::checked, "h" + std::to_string(n));
}

namespace {

const PolyScalar P = PolyScalar::variable(Var::p);
const PolyScalar Q = PolyScalar::variable(Var::q);
const PolyScalar R = PolyScalar::variable(Var::r);

// One tabulated value: phi(e_i, e_j) = sum coeff * e_k, 1-based.
struct Cell {
    std::size_t i, j;
    std::vector<std::pair<std::size_t, PolyScalar>> value;
};

SymbolicCochain build(std::size_t dim, const std::vector<Cell>& cells)
{
    SymbolicCochain out(dim, 2);
    for (const auto& cell : cells) {
        std::vector<PolyScalar> v(dim);
        for (const auto& [k, coeff] : cell.value)
            v[k - 1] += coeff;
        out.set({cell.i - 1, cell.j - 1}, std::move(v));
    }
    return out;
}

const std::array<FamilySpec, 13>& specs()
{
    static const std::array<FamilySpec, 13> table = {{
        {Family::phi1, "phi1", 0, 2, std::nullopt, "d1", "d7"},
        {Family::phi2, "phi2", 0, 2, std::nullopt, "d2", "d10"},
        {Family::phi3, "phi3", 0, 2, std::nullopt, "d3", "d17"},
        {Family::phi4, "phi4", 2, 2, std::nullopt, "d4", "d9"},
        {Family::phi5, "phi5", 2, 2, std::nullopt, "d5", "d14"},
        {Family::phi6, "phi6", 2, 2, std::nullopt, "d6", "d15"},
        {Family::phi7, "phi7", 3, 2, std::nullopt, "d7", "d12"},
        {Family::phi8, "phi8", 3, 2, P * (Q - R), "d8", "d5"},
        {Family::h1_phi1, "h1_phi1", 0, 1, std::nullopt, "", ""},
        {Family::h1_phi2, "h1_phi2", 0, 1, std::nullopt, "", ""},
        {Family::h1_phi3, "h1_phi3", 0, 1, std::nullopt, "", ""},
        {Family::h1_phi4, "h1_phi4", 0, 1, std::nullopt, "", ""},
        {Family::h1_phi5, "h1_phi5", 0, 1, std::nullopt, "", ""},
    }};
    return table;
}

} // namespace

const FamilySpec& family_spec(Family f)
{
    return specs()[static_cast<std::size_t>(f)];
}

const std::vector<Family>& all_families()
{
    static const std::vector<Family> out = [] {
        std::vector<Family> v;
        for (const auto& s : specs())
            v.push_back(s.family);
        return v;
    }();
    return out;
}

std::optional<Family> family_from_name(std::string_view name)
{
    for (const auto& s : specs())
        if (s.name == name)
            return s.family;
    return std::nullopt;
}

SymbolicCochain phi_symbolic(Family f)
{
    const PolyScalar one(1);
    switch (f) {
    case Family::phi1:
        return build(5, {{1, 3, {{2, 2}, {3, -2}}}, {1, 4, {{3, one}}}, {2, 4, {{2, one}}}, {3, 4, {{3, 2}, {2, -1}}}});
    case Family::phi2:
        return build(5, {{1, 3, {{1, one}}},
                         {1, 4, {{2, -1}}},
                         {2, 3, {{2, 2}}},
                         {3, 4, {{4, -1}}},
                         {3, 5, {{5, -3}}}});
    case Family::phi3:
        return build(5, {{1, 4, {{1, one}}}, {2, 4, {{2, one}}}, {3, 4, {{3, one}}}, {4, 5, {{5, -2}}}});
    case Family::phi4:
        return build(5, {{1, 4, {{1, P + Q}}},
                         {2, 3, {{1, -1}}},
                         {2, 4, {{2, Q}}},
                         {3, 4, {{2, one}, {3, P}}},
                         {4, 5, {{5, -(PolyScalar(2) * P + Q)}}}});
    case Family::phi5:
        return build(5, {{1, 3, {{1, P}}},
                         {2, 3, {{1, one}, {2, Q}, {4, one}}},
                         {3, 4, {{4, -P}}},
                         {3, 5, {{5, -(P + Q)}}}});
    case Family::phi6:
        return build(5, {{1, 3, {{1, P}}},
                         {2, 3, {{1, one}, {2, Q}}},
                         {3, 4, {{4, -Q}}},
                         {3, 5, {{5, PolyScalar(-2) * Q}}}});
    case Family::phi7:
        return build(5, {{1, 3, {{1, P}}},
                         {2, 3, {{1, one}, {2, Q}}},
                         {3, 4, {{2, -1}, {4, -R}}},
                         {3, 5, {{5, -(Q + R)}}}});
    case Family::phi8:
        return build(5, {{1, 3, {{1, P}}},
                         {1, 4, {{5, R - Q}}},
                         {2, 3, {{1, one}, {2, Q}}},
                         {2, 4, {{1, R}, {2, -(R * (P - Q))}}},
                         {4, 5, {{5, P * (R - Q)}}}});
    case Family::h1_phi1:
        return build(3, {{2, 3, {{3, one}}}});
    case Family::h1_phi2:
        return build(3, {{1, 2, {{2, one}}}, {1, 3, {{3, -1}}}});
    case Family::h1_phi3:
        return build(3, {{1, 2, {{3, one}}}});
    case Family::h1_phi4:
        return build(3, {{1, 3, {{1, one}}}});
    case Family::h1_phi5:
        return build(3, {{1, 3, {{2, one}}}});
    }
    throw InvalidArgument("unknown family");
}

Cochain phi(Family f, const std::vector<Rational>& params)
{
    const FamilySpec& spec = family_spec(f);
    if (params.size() != spec.arity)
        throw InvalidArgument(std::string(spec.name) + " takes " + std::to_string(spec.arity) + " parameters, got "
                              + std::to_string(params.size()));
    ParamPoint at;
    if (params.size() > 0)
        at.p = params[0];
    if (params.size() > 1)
        at.q = params[1];
    if (params.size() > 2)
        at.r = params[2];
    return substitute(phi_symbolic(f), at);
}

std::vector<Cochain> h1_cocycles()
{
    return {phi(Family::h1_phi1), phi(Family::h1_phi2), phi(Family::h1_phi3), phi(Family::h1_phi4),
            phi(Family::h1_phi5)};
}

std::string representative_label(Family f, const std::vector<Rational>& params)
{
    const FamilySpec& spec = family_spec(f);
    std::string label = spec.algebra_label.empty() ? std::string(spec.name) : std::string(spec.algebra_label);
    if (params.empty())
        return label;
    label += "(";
    for (std::size_t i = 0; i < params.size(); ++i)
        label += (i ? ":" : "") + params[i].to_string();
    return label + ")";
}

std::optional<std::pair<Family, std::vector<Rational>>> parse_representative_label(std::string_view label)
{
    std::string_view head = label;
    std::vector<Rational> params;
    if (auto open = label.find('('); open != std::string_view::npos) {
        if (!label.ends_with(")"))
            return std::nullopt;
        head = label.substr(0, open);
        std::string_view inner = label.substr(open + 1, label.size() - open - 2);
        try {
            while (true) {
                auto colon = inner.find(':');
                params.push_back(Rational::parse(inner.substr(0, colon)));
                if (colon == std::string_view::npos)
                    break;
                inner.remove_prefix(colon + 1);
            }
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    for (const auto& s : specs()) {
        if (!s.algebra_label.empty() && s.algebra_label == head && s.arity == params.size())
            return std::make_pair(s.family, params);
    }
    return std::nullopt;
}

std::vector<Representative> paper_representatives()
{
    std::vector<Representative> out;
    auto add = [&](Family f, std::vector<Rational> params) {
        Cochain c = phi(f, params);
        out.push_back({representative_label(f, params), f, std::move(params), std::move(c)});
    };
    add(Family::phi1, {});
    add(Family::phi2, {});
    add(Family::phi3, {});
    for (Family f : {Family::phi4, Family::phi5, Family::phi6})
        for (auto [p, q] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{0, 0}})
            add(f, {Rational(p), Rational(q)});
    for (auto [p, q, r] : {std::array{0, 0, 0}, std::array{1, 0, 0}, std::array{0, 1, 0}, std::array{0, 0, 1}})
        add(Family::phi7, {Rational(p), Rational(q), Rational(r)});
    for (auto [p, q, r] : {std::array{1, 0, 0}, std::array{0, 1, 1}, std::array{0, 1, 0}, std::array{0, 0, 1}})
        add(Family::phi8, {Rational(p), Rational(q), Rational(r)});
    return out;
}

} // namespace liedef
