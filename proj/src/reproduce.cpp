#include "liedef/reproduce.hpp"

#include "liedef/deformation.hpp"
#include "liedef/errors.hpp"

#include <numeric>

namespace liedef {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::size_t components()
    {
        std::size_t n = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
            n += find(i) == i;
        return n;
    }
};

PaperRow analyse(const CochainComplex& h2, const Representative& rep)
{
    PaperRow row;
    row.label = rep.label;
    row.alias = std::string(family_spec(rep.family).classification_alias);
    row.cochain = rep.cochain;
    row.is_cocycle = is_cocycle(h2, rep.cochain);
    const Deformation d = Deformation::infinitesimal(h2.algebra(), rep.cochain);
    if (row.is_cocycle) {
        const ExtendabilityVerdict v = strict_extendability(h2, d, 1);
        row.strict_extendable = v.exact_lie_bracket;
        row.obstructed_at = v.obstructed_at;
        row.obstruction_class_zero = v.exact_lie_bracket ? std::optional<bool>(true) : v.obstruction_class_zero;
    } else {
        for (int n = 1; n <= 2 * d.max_order(); ++n)
            if (!defect(d, n).is_zero()) {
                row.obstructed_at = n;
                break;
            }
    }
    const LieAlgebra at1 = member_at_t1(rep);
    row.lie_at_t1 = at1.jacobi_violations().empty();
    if (row.lie_at_t1) {
        row.nilpotent_at_t1 = is_nilpotent(at1);
        row.solvable_at_t1 = is_solvable(at1);
    }
    return row;
}

IsoCheck compare(const std::string& la, const LieAlgebra& a, const std::string& lb, const LieAlgebra& b)
{
    IsoCheck check{la, lb, false, "invariants", std::nullopt};
    if (!(invariant_profile(a) == invariant_profile(b)))
        return check;
    for (SearchClass c : {SearchClass::diagonal_signs, SearchClass::monomial,
                          SearchClass::monomial_plus_one_transvection, SearchClass::transvection_pair}) {
        if (auto t = search_isomorphism(a, b, c)) {
            check.isomorphic = true;
            check.method = std::string(to_string(c));
            check.map = std::move(t);
            return check;
        }
    }
    check.method = "exhausted";
    return check;
}

} // namespace

std::string ReproductionSummary::line() const
{
    std::string s = std::to_string(distinct_classes) + " classes / " + std::to_string(real) + " real / "
        + std::to_string(infinitesimal_only) + " infinitesimal-only";
    if (const std::size_t non = representatives - cocycles; non > 0)
        s += " (" + std::to_string(non) + " of " + std::to_string(representatives) + " representatives are not cocycles)";
    return s;
}

std::size_t family_span(const CochainComplex& h2, Family f)
{
    const std::size_t arity = family_spec(f).arity;
    const int grid[] = {-1, 0, 1, 2};
    std::vector<Cochain> cocycles;
    std::vector<Rational> params(arity);
    std::size_t total = 1;
    for (std::size_t i = 0; i < arity; ++i)
        total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (std::size_t i = 0; i < arity; ++i, rest /= 4)
            params[i] = Rational(grid[rest % 4]);
        Cochain c = phi(f, params);
        if (is_cocycle(h2, c))
            cocycles.push_back(std::move(c));
    }
    return span_in_cohomology(h2, 2, cocycles);
}

LieAlgebra member_at_t1(const Representative& rep)
{
    const FamilySpec& spec = family_spec(rep.family);
    return bracket_at(Deformation::infinitesimal(heisenberg(spec.algebra_rank), rep.cochain), Rational(1))
        .with_name(rep.label);
}

Reproduction reproduce()
{
    Reproduction out;
    const CochainComplex h2(heisenberg(2));
    const std::vector<Representative> reps = paper_representatives();

    for (const auto& rep : reps)
        out.rows.push_back(analyse(h2, rep));

    ReproductionSummary& s = out.summary;
    s.representatives = reps.size();
    std::vector<Cochain> cocycles;
    std::vector<std::size_t> cocycle_rows;
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
        const PaperRow& row = out.rows[i];
        if (!row.is_cocycle)
            continue;
        ++s.cocycles;
        (row.strict_extendable ? s.real : s.infinitesimal_only) += 1;
        cocycles.push_back(row.cochain);
        cocycle_rows.push_back(i);
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            if (is_coboundary(h2, reps[i].cochain - reps[j].cochain))
                s.equal_class_pairs.emplace_back(reps[i].label, reps[j].label);
    UnionFind classes(cocycles.size());
    for (std::size_t i = 0; i < cocycles.size(); ++i)
        for (std::size_t j = i + 1; j < cocycles.size(); ++j)
            if (same_class(h2, cocycles[i], cocycles[j]))
                classes.join(i, j);
    s.distinct_classes = classes.components();
    s.span_dim = span_in_cohomology(h2, 2, cocycles);

    for (Family f : {Family::phi4, Family::phi5, Family::phi6, Family::phi7, Family::phi8})
        out.family_spans[std::string(family_spec(f).name)] = family_span(h2, f);

    // Zero-parameter members of the parametrized families.
    std::vector<LieAlgebra> generic;
    for (Family f : {Family::phi4, Family::phi5, Family::phi6, Family::phi7, Family::phi8}) {
        const std::vector<Rational> zero(family_spec(f).arity);
        const std::string label = representative_label(f, zero);
        out.generic_members.push_back(label);
        generic.push_back(specialize(Deformation::infinitesimal(h2.algebra(), phi(f, zero)), Rational(1)));
    }
    UnionFind iso(generic.size());
    for (std::size_t i = 0; i < generic.size(); ++i)
        for (std::size_t j = i + 1; j < generic.size(); ++j) {
            if (iso.find(i) == iso.find(j)) {
                out.generic_isomorphisms.push_back({out.generic_members[i], out.generic_members[j], true, "transitive", {}});
                continue;
            }
            IsoCheck check = compare(out.generic_members[i], generic[i], out.generic_members[j], generic[j]);
            if (check.isomorphic)
                iso.join(i, j);
            out.generic_isomorphisms.push_back(std::move(check));
        }
    s.generic_nilpotent_classes = iso.components();

    // e1' = e1 + e4 between the (0:0) members of d5 and d6, tried in both directions.
    {
        RationalMatrix m = RationalMatrix::identity(5);
        m(3, 0) = Rational(1);
        const BasisChange t(m);
        const BasisChange t_inv(t.inverse());
        const LieAlgebra& a = generic[1];
        const LieAlgebra& b = generic[2];
        out.confirmations["d5(0:0) to d6(0:0) via e1' = e1 + e4"] = verify_isomorphism(a, b, t)
            || verify_isomorphism(b, a, t) || verify_isomorphism(a, b, t_inv) || verify_isomorphism(b, a, t_inv);
    }
    out.confirmations["d4(0:0) to d7(0:0:0) by sign-diagonal search"]
        = search_isomorphism(generic[0], generic[3], SearchClass::diagonal_signs).has_value();
    out.confirmations["phi8(0:0:0) equals phi6(0:0)"]
        = phi(Family::phi8, {Rational(0), Rational(0), Rational(0)}) == phi(Family::phi6, {Rational(0), Rational(0)});
    out.confirmations["phi7(0:0:0) equals -phi4(0:0)"]
        = phi(Family::phi7, {Rational(0), Rational(0), Rational(0)}) == -phi(Family::phi4, {Rational(0), Rational(0)});
    out.confirmations["d7(0:0:0) and d6(0:0) non-isomorphic"] = !compare("", generic[3], "", generic[2]).isomorphic;

    for (const auto& row : out.rows)
        if (!row.is_cocycle)
            out.notes.push_back(row.label + " is not a 2-cocycle of h2; its t = 1 table "
                                + (row.lie_at_t1 ? "still satisfies" : "violates") + " the Jacobi identity");
    out.notes.push_back("d7(0:0:0) is identified with a member of an external classification table that is not bundled");
    return out;
}

} // namespace liedef
