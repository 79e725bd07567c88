#include "liedef/cochain.hpp"

namespace liedef {

int sort_with_sign(IndexTuple& args)
{
    int sign = 1;
    for (std::size_t i = 1; i < args.size(); ++i) {
        for (std::size_t j = i; j > 0 && args[j - 1] >= args[j]; --j) {
            if (args[j - 1] == args[j])
                return 0;
            std::swap(args[j - 1], args[j]);
            sign = -sign;
        }
    }
    return sign;
}

std::size_t binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::size_t out = 1;
    for (long long i = 1; i <= k; ++i)
        out = out * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return out;
}

CochainBasis::CochainBasis(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree)
{
    if (degree > dim)
        throw InvalidArgument("cochain degree " + std::to_string(degree) + " exceeds dimension " + std::to_string(dim));
    IndexTuple current(degree);
    for (std::size_t i = 0; i < degree; ++i)
        current[i] = i;
    for (;;) {
        index_.emplace(current, tuples_.size());
        tuples_.push_back(current);
        // Advance to the next combination in lexicographic order.
        std::size_t pos = degree;
        while (pos > 0 && current[pos - 1] == dim - degree + pos - 1)
            --pos;
        if (pos == 0)
            break;
        ++current[pos - 1];
        for (std::size_t i = pos; i < degree; ++i)
            current[i] = current[i - 1] + 1;
    }
}

std::size_t CochainBasis::tuple_index(const IndexTuple& sorted) const
{
    auto it = index_.find(sorted);
    if (it == index_.end())
        throw InvalidArgument("index tuple is not strictly increasing or out of range");
    return it->second;
}

void CochainBasis::check(std::size_t dim, std::size_t degree) const
{
    if (dim != dim_ || degree != degree_)
        throw DimensionMismatch("cochain shape (dim " + std::to_string(dim) + ", degree " + std::to_string(degree)
                                + ") does not match basis (dim " + std::to_string(dim_) + ", degree "
                                + std::to_string(degree_) + ")");
}

Cochain substitute(const SymbolicCochain& c, const ParamPoint& at)
{
    Cochain out(c.dim(), c.degree());
    for (const auto& [args, value] : c.entries()) {
        Vector v(c.dim());
        for (std::size_t k = 0; k < c.dim(); ++k)
            v[k] = value[k].evaluate(at);
        out.set(args, std::move(v));
    }
    return out;
}

SymbolicCochain to_symbolic(const Cochain& c)
{
    SymbolicCochain out(c.dim(), c.degree());
    for (const auto& [args, value] : c.entries()) {
        std::vector<PolyScalar> v(value.begin(), value.end());
        out.set(args, std::move(v));
    }
    return out;
}

Cochain bracket_cochain(const LieAlgebra& a)
{
    Cochain out(a.dim(), 2);
    for (auto& [pair, value] : a.table())
        out.set({pair.first, pair.second}, value);
    return out;
}

} // namespace liedef
