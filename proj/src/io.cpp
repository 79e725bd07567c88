#include "liedef/io.hpp"

#include "liedef/catalog.hpp"
#include "liedef/errors.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace liedef::io {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what)
{
    throw ParseError(where + ": " + what);
}

const Json& field(const Json& obj, const std::string& key, const std::string& where)
{
    auto it = obj.find(key);
    if (it == obj.end())
        schema_error(where, "missing field \"" + key + "\"");
    return *it;
}

void require_object(const Json& j, const std::string& where, std::initializer_list<const char*> allowed)
{
    if (!j.is_object())
        schema_error(where, "expected an object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed)
            known = known || key == a;
        if (!known)
            schema_error(where, "unknown field \"" + key + "\"");
    }
}

long long integer(const Json& j, const std::string& where, long long lo, long long hi)
{
    if (!j.is_number_integer())
        schema_error(where, "expected an integer");
    const long long v = j.get<long long>();
    if (v < lo || v > hi)
        schema_error(where, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi)
                                + "]");
    return v;
}

Rational rational(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (!j.is_string())
        schema_error(where, "expected a rational written as a string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        schema_error(where, e.what());
    }
}

PolyScalar polynomial(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return PolyScalar(j.get<long long>());
    if (!j.is_string())
        schema_error(where, "expected a polynomial written as a string");
    try {
        return PolyScalar::parse(j.get<std::string>());
    } catch (const Error& e) {
        schema_error(where, e.what());
    }
}

template <class S, class Parse>
std::vector<S> coefficients(const Json& j, std::size_t dim, const std::string& where, Parse parse)
{
    if (!j.is_object())
        schema_error(where, "expected an object mapping basis indices to scalars");
    std::vector<S> v(dim);
    for (const auto& [key, value] : j.items()) {
        const std::string at = where + ".\"" + key + "\"";
        std::size_t k = 0;
        std::size_t used = 0;
        try {
            k = std::stoul(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || key.empty() || k < 1 || k > dim)
            schema_error(at, "basis index must be an integer in [1, " + std::to_string(dim) + "]");
        v[k - 1] = parse(value, at);
    }
    return v;
}

template <class S>
Json coefficients_to_json(const std::vector<S>& v)
{
    Json out = Json::object();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!is_zero(v[k]))
            out[std::to_string(k + 1)] = v[k].to_string();
    return out;
}

char var_name(Var v)
{
    return "pqr"[static_cast<int>(v)];
}

Json optional_json(const std::optional<bool>& b)
{
    return b ? Json(*b) : Json(nullptr);
}

std::string coefficient_prefix(const Rational& c)
{
    if (c == Rational(1))
        return "";
    if (c.is_integer())
        return c.to_string();
    return "(" + c.to_string() + ")";
}

std::string coefficient_prefix(const PolyScalar& c)
{
    if (auto v = c.constant_value())
        return coefficient_prefix(*v);
    return "(" + c.to_string() + ")";
}

bool negative_lead(const Rational& c)
{
    return c.sign() < 0;
}

bool negative_lead(const PolyScalar& c)
{
    auto v = c.constant_value();
    return v && v->sign() < 0;
}

template <class S>
std::string format_any(const std::vector<S>& v)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (is_zero(v[k]))
            continue;
        const bool neg = negative_lead(v[k]);
        const S magnitude = neg ? S(-v[k]) : v[k];
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += coefficient_prefix(magnitude) + "e" + std::to_string(k + 1);
    }
    return out.empty() ? "0" : out;
}

std::string args_text(const IndexTuple& args)
{
    std::string s;
    for (std::size_t i = 0; i < args.size(); ++i)
        s += (i ? ",e" : "e") + std::to_string(args[i] + 1);
    return s;
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string yes_no(const std::optional<bool>& b)
{
    return b ? yes_no(*b) : "-";
}

} // namespace

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Json algebra_to_json(const LieAlgebra& a)
{
    Json brackets = Json::array();
    for (const auto& [pair, v] : a.table())
        brackets.push_back({{"i", pair.first + 1}, {"j", pair.second + 1}, {"coeffs", coefficients_to_json(v)}});
    Json out{{"dim", a.dim()}, {"brackets", brackets}};
    if (!a.name().empty())
        out["name"] = a.name();
    return out;
}

LieAlgebra algebra_from_json(const Json& j, LieAlgebra::Validation validation)
{
    require_object(j, "algebra", {"dim", "name", "brackets"});
    const auto dim = static_cast<std::size_t>(integer(field(j, "dim", "algebra"), "dim", 1, 64));
    std::string name;
    if (auto it = j.find("name"); it != j.end()) {
        if (!it->is_string())
            schema_error("name", "expected a string");
        name = it->get<std::string>();
    }
    const Json& list = field(j, "brackets", "algebra");
    if (!list.is_array())
        schema_error("brackets", "expected an array");
    std::map<IndexPair, Vector> table;
    for (std::size_t n = 0; n < list.size(); ++n) {
        const std::string at = "brackets[" + std::to_string(n) + "]";
        require_object(list[n], at, {"i", "j", "coeffs"});
        const auto dim_ll = static_cast<long long>(dim);
        const auto i = static_cast<std::size_t>(integer(field(list[n], "i", at), at + ".i", 1, dim_ll));
        const auto jj = static_cast<std::size_t>(integer(field(list[n], "j", at), at + ".j", 1, dim_ll));
        if (jj <= i)
            schema_error(at, "requires i < j, got i = " + std::to_string(i) + ", j = " + std::to_string(jj));
        Vector v = coefficients<Rational>(field(list[n], "coeffs", at), dim, at + ".coeffs", rational);
        if (!table.emplace(IndexPair{i - 1, jj - 1}, std::move(v)).second)
            schema_error(at, "duplicate bracket [e" + std::to_string(i) + ",e" + std::to_string(jj) + "]");
    }
    return LieAlgebra(dim, table, validation, name);
}

Json cochain_to_json(const Cochain& c)
{
    return cochain_to_json(to_symbolic(c));
}

Json cochain_to_json(const SymbolicCochain& c, const std::map<Var, Rational>& params)
{
    Json entries = Json::array();
    for (const auto& [args, value] : c.entries()) {
        Json idx = Json::array();
        for (std::size_t a : args)
            idx.push_back(a + 1);
        entries.push_back({{"args", idx}, {"coeffs", coefficients_to_json(value)}});
    }
    Json out{{"q", c.degree()}, {"dim", c.dim()}, {"entries", entries}};
    if (!params.empty()) {
        Json p = Json::object();
        for (const auto& [v, value] : params)
            p[std::string(1, var_name(v))] = value.to_string();
        out["params"] = p;
    }
    return out;
}

CochainFile cochain_from_json(const Json& j)
{
    require_object(j, "cochain", {"q", "dim", "entries", "params"});
    const auto dim = static_cast<std::size_t>(integer(field(j, "dim", "cochain"), "dim", 1, 64));
    const auto q = static_cast<std::size_t>(integer(field(j, "q", "cochain"), "q", 0, static_cast<long long>(dim)));
    CochainFile file{SymbolicCochain(dim, q), {}};
    const Json& list = field(j, "entries", "cochain");
    if (!list.is_array())
        schema_error("entries", "expected an array");
    std::set<IndexTuple> seen;
    for (std::size_t n = 0; n < list.size(); ++n) {
        const std::string at = "entries[" + std::to_string(n) + "]";
        require_object(list[n], at, {"args", "coeffs"});
        const Json& args_json = field(list[n], "args", at);
        if (!args_json.is_array() || args_json.size() != q)
            schema_error(at + ".args", "expected " + std::to_string(q) + " indices");
        IndexTuple args;
        for (std::size_t a = 0; a < q; ++a) {
            const auto idx = static_cast<std::size_t>(
                integer(args_json[a], at + ".args[" + std::to_string(a) + "]", 1, static_cast<long long>(dim)));
            if (!args.empty() && idx - 1 <= args.back())
                schema_error(at + ".args", "indices must be strictly increasing");
            args.push_back(idx - 1);
        }
        if (!seen.insert(args).second)
            schema_error(at, "duplicate entry for (" + args_text(args) + ")");
        file.cochain.set(args, coefficients<PolyScalar>(field(list[n], "coeffs", at), dim, at + ".coeffs", polynomial));
    }
    if (auto it = j.find("params"); it != j.end()) {
        if (!it->is_object())
            schema_error("params", "expected an object");
        for (const auto& [key, value] : it->items()) {
            if (key != "p" && key != "q" && key != "r")
                schema_error("params", "unknown parameter \"" + key + "\"");
            const Var v = key == "p" ? Var::p : key == "q" ? Var::q : Var::r;
            file.params[v] = rational(value, "params." + key);
        }
    }
    return file;
}

Cochain resolve(const CochainFile& file)
{
    for (const auto& [args, value] : file.cochain.entries())
        for (const PolyScalar& coeff : value)
            for (const auto& [mono, c] : coeff.terms())
                for (int v = 0; v < 3; ++v)
                    if (mono[v] > 0 && !file.params.count(static_cast<Var>(v)))
                        throw ParseError(std::string("cochain uses parameter ") + var_name(static_cast<Var>(v))
                                         + " but \"params\" does not bind it");
    ParamPoint at;
    for (const auto& [v, value] : file.params)
        (v == Var::p ? at.p : v == Var::q ? at.q : at.r) = value;
    return substitute(file.cochain, at);
}

Json basis_change_to_json(const BasisChange& t)
{
    Json rows = Json::array();
    const RationalMatrix& m = t.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(m(i, k).to_string());
        rows.push_back(row);
    }
    return {{"dim", m.rows()}, {"matrix", rows}};
}

BasisChange basis_change_from_json(const Json& j)
{
    require_object(j, "basis change", {"dim", "matrix"});
    const auto dim = static_cast<std::size_t>(integer(field(j, "dim", "basis change"), "dim", 1, 64));
    const Json& rows = field(j, "matrix", "basis change");
    if (!rows.is_array() || rows.size() != dim)
        schema_error("matrix", "expected " + std::to_string(dim) + " rows");
    RationalMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string at = "matrix[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != dim)
            schema_error(at, "expected " + std::to_string(dim) + " entries");
        for (std::size_t k = 0; k < dim; ++k)
            m(i, k) = rational(rows[i][k], at + "[" + std::to_string(k) + "]");
    }
    return BasisChange(m);
}

Json deformation_to_json(const Deformation& d)
{
    Json terms = Json::array();
    for (const auto& [order, mu] : d.terms())
        terms.push_back({{"order", order}, {"cochain", cochain_to_json(mu)}});
    return {{"base", algebra_to_json(d.base())}, {"terms", terms}, {"truncation", d.truncation_order()}};
}

Deformation deformation_from_json(const Json& j)
{
    require_object(j, "deformation", {"base", "terms", "truncation"});
    const Json& base_json = field(j, "base", "deformation");
    LieAlgebra base = LieAlgebra::abelian(1);
    if (base_json.is_string()) {
        const std::string ref = base_json.get<std::string>();
        std::size_t used = 0;
        std::size_t n = 0;
        try {
            if (ref.size() > 1 && ref[0] == 'h')
                n = std::stoul(ref.substr(1), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used + 1 != ref.size() || n == 0)
            schema_error("base", "expected \"h<n>\" or an inline algebra");
        base = heisenberg(n);
    } else {
        base = algebra_from_json(base_json);
    }
    int truncation = Deformation::kDefaultTruncation;
    if (auto it = j.find("truncation"); it != j.end())
        truncation = static_cast<int>(integer(*it, "truncation", 1, 64));
    std::map<int, Cochain> terms;
    const Json& list = field(j, "terms", "deformation");
    if (!list.is_array())
        schema_error("terms", "expected an array");
    for (std::size_t n = 0; n < list.size(); ++n) {
        const std::string at = "terms[" + std::to_string(n) + "]";
        require_object(list[n], at, {"order", "cochain"});
        const int order = static_cast<int>(integer(field(list[n], "order", at), at + ".order", 1, 64));
        Cochain mu = resolve(cochain_from_json(field(list[n], "cochain", at)));
        if (mu.degree() != 2 || mu.dim() != base.dim())
            schema_error(at + ".cochain", "expected a 2-cochain on the base algebra");
        if (!terms.emplace(order, std::move(mu)).second)
            schema_error(at, "duplicate order " + std::to_string(order));
    }
    return Deformation(std::move(base), std::move(terms), truncation);
}

Json to_json(const CohomologyReport& r)
{
    Json out{{"degree", r.degree},         {"dim_cochains", r.dim_cochains},     {"rank_d", r.rank_d},
             {"rank_d_prev", r.rank_d_prev}, {"dim_kernel", r.dim_kernel},       {"dim_image_prev", r.dim_image_prev},
             {"dim_h", r.dim_h}};
    if (!r.representatives.empty()) {
        Json reps = Json::array();
        for (const auto& c : r.representatives)
            reps.push_back(cochain_to_json(c));
        out["representatives"] = reps;
    }
    return out;
}

Json to_json(const InvariantProfile& p)
{
    return {{"dim", p.dim}, {"center_dim", p.center_dim}, {"derived", p.derived}, {"lower_central", p.lower_central}};
}

Json to_json(const DefectReport& r)
{
    Json orders = Json::array();
    for (const auto& o : r.orders) {
        Json entry{{"order", o.order}, {"zero", o.is_zero}, {"coboundary", o.is_coboundary}};
        if (!o.is_zero)
            entry["defect"] = cochain_to_json(o.defect);
        orders.push_back(entry);
    }
    return {{"orders", orders}, {"all_zero", r.all_zero()}};
}

Json to_json(const ExtendabilityVerdict& v)
{
    return {{"exact_lie_bracket", v.exact_lie_bracket},
            {"obstructed_at", v.obstructed_at ? Json(*v.obstructed_at) : Json(nullptr)},
            {"obstruction_class_zero", optional_json(v.obstruction_class_zero)},
            {"obstruction", v.obstruction ? cochain_to_json(*v.obstruction) : Json(nullptr)}};
}

Json jacobi_to_json(const std::vector<LieAlgebra::JacobiViolation>& violations)
{
    Json list = Json::array();
    for (const auto& v : violations)
        list.push_back({{"triple", {v.i + 1, v.j + 1, v.k + 1}}, {"defect", coefficients_to_json(v.defect)}});
    return {{"valid", violations.empty()}, {"violations", list}};
}

Json to_json(const Reproduction& r)
{
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"label", row.label},
                        {"alias", row.alias},
                        {"cochain", cochain_to_json(row.cochain)},
                        {"is_cocycle", row.is_cocycle},
                        {"strict_extendable", row.strict_extendable},
                        {"obstructed_at", row.obstructed_at ? Json(*row.obstructed_at) : Json(nullptr)},
                        {"obstruction_class_zero", optional_json(row.obstruction_class_zero)},
                        {"lie_at_t1", row.lie_at_t1},
                        {"nilpotent_at_t1", optional_json(row.nilpotent_at_t1)},
                        {"solvable_at_t1", optional_json(row.solvable_at_t1)}});
    const ReproductionSummary& s = r.summary;
    Json pairs = Json::array();
    for (const auto& [a, b] : s.equal_class_pairs)
        pairs.push_back({a, b});
    Json isos = Json::array();
    for (const auto& c : r.generic_isomorphisms)
        isos.push_back({{"a", c.a},
                        {"b", c.b},
                        {"isomorphic", c.isomorphic},
                        {"method", c.method},
                        {"map", c.map ? basis_change_to_json(*c.map) : Json(nullptr)}});
    return {{"rows", rows},
            {"summary",
             {{"line", s.line()},
              {"representatives", s.representatives},
              {"cocycles", s.cocycles},
              {"real", s.real},
              {"infinitesimal_only", s.infinitesimal_only},
              {"distinct_classes", s.distinct_classes},
              {"span_dim", s.span_dim},
              {"generic_nilpotent_classes", s.generic_nilpotent_classes},
              {"equal_class_pairs", pairs}}},
            {"family_spans", r.family_spans},
            {"generic_members", r.generic_members},
            {"generic_isomorphisms", isos},
            {"confirmations", r.confirmations},
            {"notes", r.notes}};
}

Json document(const std::string& kind, Json body)
{
    return {{"kind", kind}, {"version", LIEDEF_VERSION}, {"result", std::move(body)}};
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

std::string format_vector(const Vector& v)
{
    return format_any(v);
}

std::string format_vector(const std::vector<PolyScalar>& v)
{
    return format_any(v);
}

std::string format_algebra(const LieAlgebra& a)
{
    std::string out;
    for (const auto& [pair, v] : a.table())
        out += "[e" + std::to_string(pair.first + 1) + ",e" + std::to_string(pair.second + 1) + "] = " + format_vector(v)
            + "\n";
    return out.empty() ? "abelian (all brackets zero)\n" : out;
}

std::string format_cochain(const Cochain& c)
{
    std::string out;
    for (const auto& [args, value] : c.entries())
        out += "(" + args_text(args) + ") -> " + format_vector(value) + "\n";
    return out.empty() ? "zero cochain\n" : out;
}

std::string format_deformation(const Deformation& d)
{
    const LieAlgebra& base = d.base();
    std::string out;
    for (std::size_t i = 0; i < base.dim(); ++i)
        for (std::size_t j = i + 1; j < base.dim(); ++j) {
            std::string line;
            const Vector b = base.basis_bracket(i, j);
            if (!is_zero_vector(b))
                line = format_vector(b);
            for (const auto& [order, mu] : d.terms()) {
                const Vector v = mu({i, j});
                if (is_zero_vector(v))
                    continue;
                const std::string t = order == 1 ? "t" : "t^" + std::to_string(order);
                line += (line.empty() ? "" : " + ") + t + "*(" + format_vector(v) + ")";
            }
            if (!line.empty())
                out += "[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "] = " + line + "\n";
        }
    return out.empty() ? "abelian (all brackets zero)\n" : out;
}

std::string format_matrix(const RationalMatrix& m)
{
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            width[k] = std::max(width[k], m(i, k).to_string().size());
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t k = 0; k < m.cols(); ++k)
            os << (k ? "  " : "") << std::setw(static_cast<int>(width[k])) << m(i, k).to_string();
        os << "\n";
    }
    return os.str();
}

std::string format_basis_change(const BasisChange& t)
{
    const RationalMatrix& m = t.matrix();
    std::string out;
    for (std::size_t k = 0; k < m.cols(); ++k) {
        Vector column(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            column[i] = m(i, k);
        Vector unit(m.rows());
        unit[k] = Rational(1);
        if (column == unit)
            continue;
        out += (out.empty() ? "e" : ", e") + std::to_string(k + 1) + "' = " + format_vector(column);
    }
    return out.empty() ? "identity" : out;
}

std::string format_reproduction(const Reproduction& r)
{
    std::ostringstream os;
    os << std::left << std::setw(11) << "label" << std::setw(7) << "alias" << std::setw(9) << "cocycle"
       << std::setw(12) << "extendable" << std::setw(22) << "obstruction" << std::setw(11) << "nilpotent"
       << "solvable\n";
    for (const auto& row : r.rows) {
        std::string obstruction = "-";
        if (row.obstructed_at) {
            obstruction = "order " + std::to_string(*row.obstructed_at);
            if (row.obstruction_class_zero)
                obstruction += *row.obstruction_class_zero ? ", class zero" : ", class nonzero";
        }
        os << std::setw(11) << row.label << std::setw(7) << row.alias << std::setw(9) << yes_no(row.is_cocycle)
           << std::setw(12) << yes_no(row.strict_extendable) << std::setw(22) << obstruction << std::setw(11)
           << yes_no(row.nilpotent_at_t1) << yes_no(row.solvable_at_t1) << "\n";
    }
    const ReproductionSummary& s = r.summary;
    os << "\nsummary: " << s.line() << "\n";
    os << "span of cocycle representatives in H^2: " << s.span_dim << "\n";
    for (const auto& [a, b] : s.equal_class_pairs)
        os << "same class: " << a << " and " << b << "\n";
    os << "family spans in H^2:";
    for (const auto& [name, dim] : r.family_spans)
        os << " " << name << "=" << dim;
    os << "\n\nzero-parameter members at t = 1: " << s.generic_nilpotent_classes << " isomorphism classes\n";
    for (const auto& c : r.generic_isomorphisms)
        os << "  " << c.a << (c.isomorphic ? " ~ " : " !~ ") << c.b << "  (" << c.method
           << (c.map ? ": " + format_basis_change(*c.map) : "") << ")\n";
    os << "\nconfirmations:\n";
    for (const auto& [claim, ok] : r.confirmations)
        os << "  " << claim << ": " << yes_no(ok) << "\n";
    if (!r.notes.empty()) {
        os << "\nnotes:\n";
        for (const auto& n : r.notes)
            os << "  " << n << "\n";
    }
    return os.str();
}

} // namespace liedef::io
