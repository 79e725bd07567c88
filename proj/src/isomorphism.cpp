#include "liedef/isomorphism.hpp"

#include "liedef/errors.hpp"

#include <algorithm>
#include <numeric>

namespace liedef {

bool verify_isomorphism(const LieAlgebra& a, const LieAlgebra& b, const BasisChange& t)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch("isomorphism check between algebras of different dimension");
    return change_basis(a, t) == b;
}

std::string_view to_string(SearchClass c)
{
    switch (c) {
    case SearchClass::diagonal_signs:
        return "diagonal_signs";
    case SearchClass::monomial:
        return "monomial";
    case SearchClass::monomial_plus_one_transvection:
        return "monomial_plus_one_transvection";
    case SearchClass::transvection_pair:
        return "transvection_pair";
    }
    return "?";
}

std::optional<SearchClass> parse_search_class(std::string_view name)
{
    for (auto c : {SearchClass::diagonal_signs, SearchClass::monomial, SearchClass::monomial_plus_one_transvection,
                   SearchClass::transvection_pair})
        if (to_string(c) == name)
            return c;
    return std::nullopt;
}

InvariantProfile invariant_profile(const LieAlgebra& a)
{
    return {a.dim(), center(a).size(), series(a, SeriesKind::derived), series(a, SeriesKind::lower_central)};
}

namespace {

// For invertible T, change_basis(a, T) == b iff a(T e_i, T e_j) = T b(e_i, e_j)
// for all i < j; this avoids the inverse in the inner loop.
class Matcher {
public:
    Matcher(const LieAlgebra& a, const LieAlgebra& b) : a_(a), n_(a.dim())
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                target_.push_back(b.basis_bracket(i, j));
    }

    bool matches(const RationalMatrix& t) const
    {
        std::vector<Vector> cols;
        cols.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i)
            cols.push_back(t.column(i));
        std::size_t pair = 0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j, ++pair)
                if (!(a_.bracket(cols[i], cols[j]) == apply_matrix(t, target_[pair])))
                    return false;
        return true;
    }

private:
    const LieAlgebra& a_;
    std::size_t n_;
    std::vector<Vector> target_;
};

RationalMatrix transvection(std::size_t n, std::size_t i, std::size_t j, const Rational& c)
{
    RationalMatrix e = RationalMatrix::identity(n);
    e(j, i) = c;
    return e;
}

// Scaled permutations: permutations in lexicographic order, scale vectors in
// lexicographic order over `scales`. Stops when visit returns true.
template <class Visit>
bool for_each_monomial(std::size_t n, const std::vector<Rational>& scales, Visit&& visit)
{
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::size_t> choice(n, 0);
        for (;;) {
            RationalMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                m(perm[i], i) = scales[choice[i]];
            if (visit(m))
                return true;
            std::size_t pos = n;
            while (pos > 0 && choice[pos - 1] + 1 == scales.size())
                choice[--pos] = 0;
            if (pos == 0)
                break;
            ++choice[pos - 1];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

struct Elementary {
    std::size_t i, j;
    Rational c;
};

std::vector<Elementary> elementary_maps(std::size_t n, const std::vector<Rational>& bound)
{
    std::vector<Elementary> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                for (const auto& c : bound)
                    out.push_back({i, j, c});
    return out;
}

} // namespace

std::optional<BasisChange> search_isomorphism(const LieAlgebra& a, const LieAlgebra& b, SearchClass search_class,
                                              const std::vector<Rational>& bound)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch("isomorphism search between algebras of different dimension");
    if (bound.empty() || std::any_of(bound.begin(), bound.end(), [](const Rational& c) { return c.is_zero(); }))
        throw InvalidArgument("search bound must be a nonempty set of nonzero rationals");
    if (!(invariant_profile(a) == invariant_profile(b)))
        return std::nullopt;

    const std::size_t n = a.dim();
    const Matcher matcher(a, b);
    std::optional<RationalMatrix> found;
    auto accept = [&](const RationalMatrix& t) {
        if (matcher.matches(t)) {
            found = t;
            return true;
        }
        return false;
    };

    switch (search_class) {
    case SearchClass::diagonal_signs:
        for_each_monomial(n, {Rational(1), Rational(-1)}, [&](const RationalMatrix& m) {
            for (std::size_t i = 0; i < n; ++i)
                if (m(i, i).is_zero())
                    return false;
            return accept(m);
        });
        break;
    case SearchClass::monomial:
        for_each_monomial(n, bound, accept);
        break;
    case SearchClass::monomial_plus_one_transvection:
        if (for_each_monomial(n, bound, accept))
            break;
        for (const auto& e : elementary_maps(n, bound)) {
            const RationalMatrix t = transvection(n, e.i, e.j, e.c);
            if (for_each_monomial(n, bound, [&](const RationalMatrix& m) { return accept(m * t) || accept(t * m); }))
                break;
        }
        break;
    case SearchClass::transvection_pair: {
        if (accept(RationalMatrix::identity(n)))
            break;
        const auto maps = elementary_maps(n, bound);
        bool done = false;
        for (const auto& e : maps)
            if ((done = accept(transvection(n, e.i, e.j, e.c))))
                break;
        for (std::size_t x = 0; x < maps.size() && !done; ++x)
            for (std::size_t y = 0; y < maps.size() && !done; ++y)
                done = accept(transvection(n, maps[x].i, maps[x].j, maps[x].c)
                              * transvection(n, maps[y].i, maps[y].j, maps[y].c));
        break;
    }
    }

    if (!found)
        return std::nullopt;
    BasisChange t(std::move(*found));
    if (!verify_isomorphism(a, b, t))
        throw std::logic_error("search_isomorphism: candidate failed verification");
    return t;
}

} // namespace liedef
