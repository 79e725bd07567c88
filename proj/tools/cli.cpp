#include "cli.hpp"

#include "liedef/catalog.hpp"
#include "liedef/cohomology.hpp"
#include "liedef/deformation.hpp"
#include "liedef/errors.hpp"
#include "liedef/io.hpp"
#include "liedef/isomorphism.hpp"
#include "liedef/reproduce.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <sstream>

namespace liedef::cli {

namespace {

using io::Json;

struct Options {
    bool json = false;
    int max_order = Deformation::kDefaultTruncation;
    std::string t = "1";
};

struct Builtin {
    io::CochainFile file;
    std::size_t rank; ///< Heisenberg rank of the algebra the cochain lives on
};

std::vector<Rational> parse_param_list(std::string_view text, char sep)
{
    std::vector<Rational> out;
    while (true) {
        const auto cut = text.find(sep);
        out.push_back(Rational::parse(text.substr(0, cut)));
        if (cut == std::string_view::npos)
            return out;
        text.remove_prefix(cut + 1);
    }
}

// "phi4", "phi4(1:0)", "h1_phi2" or a representative label such as "d4(0:1)".
std::optional<Builtin> builtin_cochain(const std::string& ref)
{
    std::string name = ref;
    std::optional<std::vector<Rational>> params;
    if (const auto open = ref.find('('); open != std::string::npos) {
        if (ref.back() != ')')
            return std::nullopt;
        name = ref.substr(0, open);
        try {
            params = parse_param_list(std::string_view(ref).substr(open + 1, ref.size() - open - 2), ':');
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    if (const auto f = family_from_name(name)) {
        const FamilySpec& spec = family_spec(*f);
        if (!params && spec.arity > 0)
            return Builtin{{phi_symbolic(*f), {}}, spec.algebra_rank};
        return Builtin{{to_symbolic(phi(*f, params.value_or(std::vector<Rational>{}))), {}}, spec.algebra_rank};
    }
    if (const auto rep = parse_representative_label(ref))
        return Builtin{{to_symbolic(phi(rep->first, rep->second)), {}}, family_spec(rep->first).algebra_rank};
    return std::nullopt;
}

std::optional<std::size_t> heisenberg_ref(const std::string& ref)
{
    if (ref.size() < 2 || ref[0] != 'h' || ref.find_first_not_of("0123456789", 1) != std::string::npos)
        return std::nullopt;
    const auto n = std::stoul(ref.substr(1));
    return n > 0 ? std::optional<std::size_t>(n) : std::nullopt;
}

bool is_file(const std::string& ref)
{
    std::error_code ec;
    return std::filesystem::is_regular_file(ref, ec);
}

class Session {
public:
    explicit Session(const Options& opts) : opts_(opts) {}

    std::ostringstream& out() { return out_; }
    bool json() const { return opts_.json; }
    int max_order() const { return opts_.max_order; }
    Rational t() const { return Rational::parse(opts_.t); }

    void emit(const std::string& kind, Json body) { out_ << io::dump(io::document(kind, std::move(body))); }

    // Algebra arguments: a JSON file, "h<n>", or a catalog cochain whose deformed bracket at --t is taken.
    LieAlgebra algebra(const std::string& ref, LieAlgebra::Validation v = LieAlgebra::Validation::checked) const
    {
        if (is_file(ref))
            return io::algebra_from_json(io::read_json_file(ref), v);
        if (const auto n = heisenberg_ref(ref))
            return heisenberg(*n);
        if (const auto b = builtin_cochain(ref)) {
            const Cochain mu = io::resolve(b->file);
            const LieAlgebra member = bracket_at(Deformation::infinitesimal(heisenberg(b->rank), mu), t());
            return LieAlgebra(member.dim(), member.table(), v, ref);
        }
        throw ParseError("\"" + ref + "\" is neither a readable file nor a built-in algebra");
    }

    io::CochainFile cochain_file(const std::string& ref) const
    {
        if (is_file(ref))
            return io::cochain_from_json(io::read_json_file(ref));
        if (const auto b = builtin_cochain(ref))
            return b->file;
        throw ParseError("\"" + ref + "\" is neither a readable file nor a built-in cochain");
    }

    Cochain cochain(const std::string& ref, const LieAlgebra& a, std::optional<std::size_t> degree = std::nullopt) const
    {
        Cochain c = io::resolve(cochain_file(ref));
        check_fits(c.dim(), c.degree(), a, degree);
        return c;
    }

    static void check_fits(std::size_t dim, std::size_t degree, const LieAlgebra& a, std::optional<std::size_t> want)
    {
        if (dim != a.dim())
            throw DimensionMismatch("cochain has dimension " + std::to_string(dim) + ", algebra has "
                                    + std::to_string(a.dim()));
        if (want && degree != *want)
            throw InvalidArgument("expected a " + std::to_string(*want) + "-cochain, got degree " + std::to_string(degree));
    }

private:
    Options opts_;
    std::ostringstream out_;
};

std::string series_text(const std::vector<std::size_t>& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? ", " : "") + std::to_string(s[i]);
    return out + "]";
}

std::string constraint_text(const CocycleConstraint& c)
{
    std::string args;
    for (std::size_t i = 0; i < c.args.size(); ++i)
        args += (i ? ",e" : "e") + std::to_string(c.args[i] + 1);
    return "(" + args + ") -> e" + std::to_string(c.target + 1) + ": " + c.value.to_string();
}

Json constraints_json(const std::vector<CocycleConstraint>& cs)
{
    Json list = Json::array();
    for (const auto& c : cs) {
        Json args = Json::array();
        for (std::size_t a : c.args)
            args.push_back(a + 1);
        list.push_back({{"args", args}, {"target", c.target + 1}, {"value", c.value.to_string()}});
    }
    return list;
}

int cmd_jacobi(Session& s, const std::string& path)
{
    const LieAlgebra a = s.algebra(path, LieAlgebra::Validation::unchecked);
    const auto violations = a.jacobi_violations();
    if (s.json()) {
        s.emit("jacobi", io::jacobi_to_json(violations));
    } else if (violations.empty()) {
        s.out() << "valid\n";
    } else {
        s.out() << "Jacobi identity fails on " << violations.size() << " triple(s):\n";
        for (const auto& v : violations)
            s.out() << "  (" << v.i + 1 << "," << v.j + 1 << "," << v.k + 1 << "): " << io::format_vector(v.defect)
                    << "\n";
    }
    return violations.empty() ? ok : negative;
}

int cmd_invariants(Session& s, const std::string& path)
{
    const LieAlgebra a = s.algebra(path);
    const InvariantProfile p = invariant_profile(a);
    const bool solvable = is_solvable(a);
    const bool nilpotent = is_nilpotent(a);
    if (s.json()) {
        Json body = io::to_json(p);
        body["solvable"] = solvable;
        body["nilpotent"] = nilpotent;
        s.emit("invariants", body);
    } else {
        s.out() << "dim = " << p.dim << "\ncenter dim = " << p.center_dim
                << "\nderived series = " << series_text(p.derived)
                << "\nlower central series = " << series_text(p.lower_central)
                << "\nsolvable = " << (solvable ? "yes" : "no") << "\nnilpotent = " << (nilpotent ? "yes" : "no")
                << "\n";
    }
    return ok;
}

int cmd_cohomology(Session& s, const std::string& path, long long q, bool reps)
{
    const LieAlgebra a = s.algebra(path);
    if (q < 0 || static_cast<std::size_t>(q) > a.dim())
        throw InvalidArgument("degree " + std::to_string(q) + " outside [0, " + std::to_string(a.dim()) + "]");
    const CohomologyReport r = cohomology(a, static_cast<std::size_t>(q), reps);
    if (s.json()) {
        s.emit("cohomology", io::to_json(r));
        return ok;
    }
    s.out() << "dim C^" << q << " = " << r.dim_cochains << "\nrank d_" << q << " = " << r.rank_d;
    if (q > 0)
        s.out() << "\nrank d_" << q - 1 << " = " << r.rank_d_prev;
    s.out() << "\ndim H^" << q << " = " << r.dim_h << "\n";
    for (std::size_t i = 0; i < r.representatives.size(); ++i)
        s.out() << "\nrepresentative " << i + 1 << ":\n" << io::format_cochain(r.representatives[i]);
    return ok;
}

int cmd_check_cocycle(Session& s, const std::string& alg, const std::string& ref)
{
    const LieAlgebra a = s.algebra(alg);
    const io::CochainFile file = s.cochain_file(ref);
    Session::check_fits(file.cochain.dim(), file.cochain.degree(), a, std::nullopt);
    const SymbolicCochain c = file.params.empty() ? file.cochain : to_symbolic(io::resolve(file));
    const auto constraints = cocycle_constraints(a, c);
    if (s.json()) {
        s.emit("check-cocycle", {{"cocycle", constraints.empty()}, {"constraints", constraints_json(constraints)}});
    } else if (constraints.empty()) {
        s.out() << "cocycle\n";
    } else {
        s.out() << "not a cocycle: " << constraints.size() << " constraint(s)\n";
        for (const auto& c : constraints)
            s.out() << "  " << constraint_text(c) << "\n";
    }
    return constraints.empty() ? ok : negative;
}

int cmd_check_coboundary(Session& s, const std::string& alg, const std::string& ref)
{
    const LieAlgebra a = s.algebra(alg);
    const Cochain c = s.cochain(ref, a);
    const auto pre = coboundary_preimage(a, c);
    if (s.json()) {
        s.emit("check-coboundary",
               {{"coboundary", pre.has_value()}, {"preimage", pre ? io::cochain_to_json(*pre) : Json(nullptr)}});
    } else if (pre) {
        s.out() << "coboundary of:\n" << io::format_cochain(*pre);
    } else {
        s.out() << "not a coboundary\n";
    }
    return pre ? ok : negative;
}

int cmd_class_eq(Session& s, const std::string& alg, const std::string& r1, const std::string& r2)
{
    const LieAlgebra a = s.algebra(alg);
    const Cochain c1 = s.cochain(r1, a);
    const Cochain c2 = s.cochain(r2, a, c1.degree());
    const bool same = same_class(a, c1, c2);
    if (s.json())
        s.emit("class-eq", {{"same_class", same}});
    else
        s.out() << (same ? "same class\n" : "different classes\n");
    return same ? ok : negative;
}

int cmd_span(Session& s, const std::string& alg, const std::vector<std::string>& refs)
{
    const LieAlgebra a = s.algebra(alg);
    std::vector<Cochain> cs;
    for (const auto& r : refs)
        cs.push_back(s.cochain(r, a, cs.empty() ? std::nullopt : std::optional<std::size_t>(cs.front().degree())));
    const CochainComplex complex(a);
    const std::size_t dim = span_in_cohomology(complex, cs.front().degree(), cs);
    if (s.json())
        s.emit("span", {{"span_dim", dim}, {"count", cs.size()}});
    else
        s.out() << "span dim = " << dim << "\n";
    return ok;
}

// Shared by deform and extend: reports a non-cocycle and returns false.
bool require_cocycle(Session& s, const CochainComplex& complex, const Cochain& c, const std::string& kind)
{
    const auto constraints = cocycle_constraints(complex, to_symbolic(c));
    if (constraints.empty())
        return true;
    if (s.json())
        s.emit(kind, {{"cocycle", false}, {"constraints", constraints_json(constraints)}});
    else
        s.out() << "not a cocycle; first failing constraint " << constraint_text(constraints.front()) << "\n";
    return false;
}

int cmd_deform(Session& s, const std::string& alg, const std::string& ref)
{
    const LieAlgebra a = s.algebra(alg);
    const Cochain c = s.cochain(ref, a, 2);
    if (c.is_zero()) {
        if (s.json())
            s.emit("deform", {{"cocycle", true}, {"trivial", true}});
        else
            s.out() << "trivial deformation (zero cochain)\n";
        return ok;
    }
    const CochainComplex complex(a);
    if (!require_cocycle(s, complex, c, "deform"))
        return negative;
    const Deformation d = Deformation::infinitesimal(a, c, s.max_order());
    const DefectReport report = defect_report(complex, d, s.max_order());
    const ExtendabilityVerdict v = strict_extendability(complex, d, 1);
    std::string verdict = "exact Lie bracket (real deformation)";
    if (!v.exact_lie_bracket)
        verdict = "obstructed at order " + std::to_string(*v.obstructed_at) + "; obstruction class "
            + (*v.obstruction_class_zero ? "zero" : "nonzero") + " in H^3";
    if (s.json()) {
        s.emit("deform", {{"cocycle", true},
                          {"trivial", false},
                          {"defects", io::to_json(report)},
                          {"verdict", io::to_json(v)},
                          {"summary", verdict}});
    } else {
        s.out() << io::format_deformation(d) << "\n";
        for (const auto& o : report.orders)
            s.out() << "order " << o.order << ": "
                    << (o.is_zero ? "zero" : o.is_coboundary ? "nonzero, coboundary" : "nonzero, not a coboundary")
                    << "\n";
        s.out() << verdict << "\n";
    }
    return v.exact_lie_bracket ? ok : negative;
}

int cmd_extend(Session& s, const std::string& alg, const std::string& ref)
{
    const LieAlgebra a = s.algebra(alg);
    const Cochain c = s.cochain(ref, a, 2);
    const CochainComplex complex(a);
    if (!require_cocycle(s, complex, c, "extend"))
        return negative;
    const Deformation d = Deformation::infinitesimal(a, c, s.max_order());
    const auto steps = extend(complex, d, s.max_order());
    Json list = Json::array();
    bool obstructed = false;
    Deformation last = d;
    for (const auto& step : steps) {
        if (const auto* e = std::get_if<Extended>(&step)) {
            last = e->deformation;
            list.push_back({{"order", e->order}, {"term", io::cochain_to_json(e->term)}});
            if (!s.json())
                s.out() << "order " << e->order << ": "
                        << (e->term.is_zero() ? "zero term\n" : "term\n" + io::format_cochain(e->term));
        } else {
            const auto& o = std::get<Obstructed>(step);
            obstructed = true;
            list.push_back({{"order", o.order}, {"obstruction", io::cochain_to_json(o.representative)}});
            if (!s.json())
                s.out() << "order " << o.order << ": obstructed, representative\n"
                        << io::format_cochain(o.representative);
        }
    }
    if (s.json()) {
        s.emit("extend", {{"cocycle", true}, {"steps", list}, {"obstructed", obstructed},
                          {"deformation", io::deformation_to_json(last)}});
    } else {
        s.out() << (obstructed ? "obstructed\n" : "extended through order " + std::to_string(s.max_order()) + "\n")
                << "\n" << io::format_deformation(last);
    }
    return obstructed ? negative : ok;
}

int cmd_specialize(Session& s, const std::string& alg, const std::string& ref)
{
    const LieAlgebra a = s.algebra(alg);
    const Cochain c = s.cochain(ref, a, 2);
    const Rational t = s.t();
    try {
        const LieAlgebra result = specialize(Deformation::infinitesimal(a, c, s.max_order()), t);
        if (s.json())
            s.emit("specialize", {{"t", t.to_string()}, {"algebra", io::algebra_to_json(result)}});
        else
            s.out() << io::format_algebra(result);
        return ok;
    } catch (const NotALieAlgebra& e) {
        if (s.json())
            s.emit("specialize", {{"t", t.to_string()}, {"algebra", nullptr}, {"refused", e.what()}});
        else
            s.out() << "refused: " << e.what() << "\n";
        return negative;
    }
}

int cmd_iso_verify(Session& s, const std::string& r1, const std::string& r2, const std::string& map)
{
    const LieAlgebra a = s.algebra(r1);
    const LieAlgebra b = s.algebra(r2);
    const BasisChange t = io::basis_change_from_json(io::read_json_file(map));
    const bool iso = verify_isomorphism(a, b, t);
    if (s.json())
        s.emit("iso-verify", {{"isomorphic", iso}});
    else
        s.out() << (iso ? "true\n" : "false\n");
    return iso ? ok : negative;
}

int cmd_iso_search(Session& s, const std::string& r1, const std::string& r2, const std::string& cls,
                   const std::string& bound)
{
    const auto search_class = parse_search_class(cls);
    if (!search_class)
        throw InvalidArgument("unknown search class \"" + cls + "\"");
    const LieAlgebra a = s.algebra(r1);
    const LieAlgebra b = s.algebra(r2);
    const auto found = search_isomorphism(a, b, *search_class, parse_param_list(bound, ','));
    if (s.json())
        s.emit("iso-search", {{"class", cls},
                              {"found", found.has_value()},
                              {"map", found ? io::basis_change_to_json(*found) : Json(nullptr)}});
    else
        s.out() << (found ? io::format_basis_change(*found) + "\n" + io::format_matrix(found->matrix()) : "none\n");
    return found ? ok : negative;
}

int cmd_catalog_list(Session& s)
{
    Json families = Json::array();
    for (Family f : all_families()) {
        const FamilySpec& spec = family_spec(f);
        families.push_back({{"name", spec.name}, {"arity", spec.arity}, {"algebra", "h" + std::to_string(spec.algebra_rank)}});
    }
    Json reps = Json::array();
    for (const auto& r : paper_representatives())
        reps.push_back(r.label);
    if (s.json()) {
        s.emit("catalog", {{"families", families}, {"representatives", reps}});
        return ok;
    }
    s.out() << "families:";
    for (Family f : all_families())
        s.out() << " " << family_spec(f).name;
    s.out() << "\nrepresentatives:";
    for (const auto& r : reps)
        s.out() << " " << r.get<std::string>();
    s.out() << "\nalgebras: h<n> for n >= 1\n";
    return ok;
}

int cmd_catalog_emit(Session& s, const std::string& name)
{
    if (const auto n = heisenberg_ref(name)) {
        s.out() << io::dump(io::algebra_to_json(heisenberg(*n)));
        return ok;
    }
    if (name == "representatives") {
        Json list = Json::array();
        for (const auto& r : paper_representatives())
            list.push_back({{"label", r.label}, {"cochain", io::cochain_to_json(r.cochain)}});
        s.out() << io::dump(list);
        return ok;
    }
    if (const auto b = builtin_cochain(name)) {
        s.out() << io::dump(io::cochain_to_json(b->file.cochain));
        return ok;
    }
    throw InvalidArgument("no built-in object named \"" + name + "\"");
}

int cmd_reproduce(Session& s)
{
    const Reproduction r = reproduce();
    if (s.json())
        s.emit("reproduction", io::to_json(r));
    else
        s.out() << "liedef " << LIEDEF_VERSION << "\n\n" << io::format_reproduction(r);
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opts;
    CLI::App app{"Exact deformation and cohomology computations for Lie algebras", "liedef"};
    app.require_subcommand(1);
    app.set_version_flag("--version", LIEDEF_VERSION);
    app.add_flag("--json", opts.json, "Emit JSON instead of text");
    app.add_option("--max-order", opts.max_order, "Highest order for deformation work")->check(CLI::Range(1, 64));
    app.add_option("--t", opts.t, "Parameter value used when specializing");

    std::function<int(Session&)> action;
    std::string a1;
    std::string a2;
    std::string a3;
    long long degree = 0;
    bool reps = false;
    std::vector<std::string> many;
    std::string map_path;
    std::string search_class = "monomial";
    std::string bound = "1,-1";

    auto sub = [&](const char* name, const char* help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->fallthrough();
        return c;
    };
    auto algebra_arg = [&](CLI::App* c, std::string& target, const char* name = "algebra") {
        c->add_option(name, target, "JSON file, h<n>, or a catalog name")->required();
    };

    CLI::App* jacobi = sub("jacobi", "Check the Jacobi identity");
    algebra_arg(jacobi, a1);
    jacobi->callback([&] { action = [&](Session& s) { return cmd_jacobi(s, a1); }; });

    CLI::App* inv = sub("invariants", "Center, derived and lower central series");
    algebra_arg(inv, a1);
    inv->callback([&] { action = [&](Session& s) { return cmd_invariants(s, a1); }; });

    CLI::App* coh = sub("cohomology", "Dimension of H^q with adjoint coefficients");
    algebra_arg(coh, a1);
    coh->add_option("q", degree, "Degree")->required();
    coh->add_flag("--representatives", reps, "Also print cocycle representatives");
    coh->callback([&] { action = [&](Session& s) { return cmd_cohomology(s, a1, degree, reps); }; });

    CLI::App* cc = sub("check-cocycle", "Test the cocycle condition, symbolically if parameters are free");
    algebra_arg(cc, a1);
    cc->add_option("cochain", a2)->required();
    cc->callback([&] { action = [&](Session& s) { return cmd_check_cocycle(s, a1, a2); }; });

    CLI::App* cb = sub("check-coboundary", "Test whether a cochain is a coboundary");
    algebra_arg(cb, a1);
    cb->add_option("cochain", a2)->required();
    cb->callback([&] { action = [&](Session& s) { return cmd_check_coboundary(s, a1, a2); }; });

    CLI::App* ceq = sub("class-eq", "Compare the cohomology classes of two cocycles");
    algebra_arg(ceq, a1);
    ceq->add_option("first", a2)->required();
    ceq->add_option("second", a3)->required();
    ceq->callback([&] { action = [&](Session& s) { return cmd_class_eq(s, a1, a2, a3); }; });

    CLI::App* span = sub("span", "Dimension spanned in cohomology by cocycles");
    algebra_arg(span, a1);
    span->add_option("cochains", many)->required();
    span->callback([&] { action = [&](Session& s) { return cmd_span(s, a1, many); }; });

    CLI::App* deform = sub("deform", "Defects of base + t*cochain up to --max-order");
    algebra_arg(deform, a1);
    deform->add_option("cochain", a2)->required();
    deform->callback([&] { action = [&](Session& s) { return cmd_deform(s, a1, a2); }; });

    CLI::App* ext = sub("extend", "Solve for higher-order terms up to --max-order");
    algebra_arg(ext, a1);
    ext->add_option("cochain", a2)->required();
    ext->callback([&] { action = [&](Session& s) { return cmd_extend(s, a1, a2); }; });

    CLI::App* spec = sub("specialize", "Bracket table of base + t*cochain at --t");
    algebra_arg(spec, a1);
    spec->add_option("cochain", a2)->required();
    spec->callback([&] { action = [&](Session& s) { return cmd_specialize(s, a1, a2); }; });

    CLI::App* iso = sub("iso", "Isomorphism checks");
    iso->require_subcommand(1);
    CLI::App* verify = iso->add_subcommand("verify", "Check a given basis change");
    verify->fallthrough();
    algebra_arg(verify, a1, "first");
    algebra_arg(verify, a2, "second");
    verify->add_option("--map", map_path, "Basis change JSON file")->required();
    verify->callback([&] { action = [&](Session& s) { return cmd_iso_verify(s, a1, a2, map_path); }; });
    CLI::App* search = iso->add_subcommand("search", "Search a small class of basis changes");
    search->fallthrough();
    algebra_arg(search, a1, "first");
    algebra_arg(search, a2, "second");
    search->add_option("--class", search_class,
                       "diagonal_signs, monomial, monomial_plus_one_transvection or transvection_pair");
    search->add_option("--bound", bound, "Comma-separated scalars to try, e.g. 1,-1");
    search->callback(
        [&] { action = [&](Session& s) { return cmd_iso_search(s, a1, a2, search_class, bound); }; });

    CLI::App* cat = sub("catalog", "Built-in objects");
    cat->require_subcommand(1);
    CLI::App* list = cat->add_subcommand("list", "List built-in names");
    list->fallthrough();
    list->callback([&] { action = [&](Session& s) { return cmd_catalog_list(s); }; });
    CLI::App* emit = cat->add_subcommand("emit", "Print a built-in algebra or cochain as a JSON file");
    emit->fallthrough();
    emit->add_option("name", a1, "h<n>, a family such as phi4 or phi4(1:0), a label such as d4(0:1), or representatives")
        ->required();
    emit->callback([&] { action = [&](Session& s) { return cmd_catalog_emit(s, a1); }; });

    CLI::App* repro = sub("reproduce", "Analyse the twenty h2 representatives");
    repro->callback([&] { action = [&](Session& s) { return cmd_reproduce(s); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : input_error;
    }

    Session session(opts);
    int code = ok;
    try {
        code = action(session);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    out << session.out().str();
    out.flush();
    return code;
}

} // namespace liedef::cli
