#include "liedef/catalog.hpp"
#include "liedef/errors.hpp"
#include "liedef/io.hpp"

#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace liedef;
using liedef::io::Json;
using liedef::testkit::Gen;

namespace {

std::string parse_error_of(const Json& j)
{
    try {
        io::algebra_from_json(j);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(Io, AlgebraRoundTrip)
{
    for (const char* label : {"d1", "d3", "d5(0:1)", "d7(0:0:1)"}) {
        const LieAlgebra a = testkit::member(label);
        EXPECT_EQ(io::algebra_from_json(io::algebra_to_json(a)), a);
    }
    const Json h2 = io::algebra_to_json(heisenberg(2));
    EXPECT_EQ(h2["brackets"][0]["i"], 1);
    EXPECT_EQ(h2["brackets"][0]["j"], 3);
    EXPECT_EQ(h2["brackets"][0]["coeffs"]["5"], "1");
}

TEST(Io, AlgebraSchemaErrorsNameTheLocation)
{
    const Json good = Json::parse(R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1"}}]})");
    EXPECT_EQ(io::algebra_from_json(good).dim(), 3u);

    Json bad = good;
    bad["brackets"][0]["j"] = 1;
    EXPECT_NE(parse_error_of(bad).find("brackets[0]"), std::string::npos);

    bad = good;
    bad["brackets"][0]["coeffs"] = Json::parse(R"({"4": "1"})");
    EXPECT_NE(parse_error_of(bad).find("brackets[0].coeffs"), std::string::npos);

    bad = good;
    bad["extra"] = 1;
    EXPECT_NE(parse_error_of(bad).find("unknown field"), std::string::npos);

    bad = good;
    bad["brackets"].push_back(good["brackets"][0]);
    EXPECT_FALSE(parse_error_of(bad).empty());

    bad = good;
    bad["brackets"][0]["coeffs"]["3"] = "1/0";
    EXPECT_FALSE(parse_error_of(bad).empty());

    bad = good;
    bad.erase("dim");
    EXPECT_NE(parse_error_of(bad).find("dim"), std::string::npos);
}

TEST(Io, AlgebraFailingJacobiIsRejectedWhenChecked)
{
    const Json j = Json::parse(R"({"dim": 3, "brackets": [
        {"i": 1, "j": 2, "coeffs": {"1": "1"}}, {"i": 1, "j": 3, "coeffs": {"2": "1"}}]})");
    EXPECT_THROW(io::algebra_from_json(j), NotALieAlgebra);
    EXPECT_NO_THROW(io::algebra_from_json(j, LieAlgebra::Validation::unchecked));
}

TEST(Io, CochainRoundTrip)
{
    Gen gen(71);
    for (int trial = 0; trial < 10; ++trial) {
        const Cochain c = gen.cochain(5, 1 + trial % 3);
        EXPECT_EQ(io::resolve(io::cochain_from_json(io::cochain_to_json(c))), c);
    }
}

TEST(Io, SymbolicCochainNeedsBoundParameters)
{
    const SymbolicCochain s = phi_symbolic(Family::phi4);
    const io::CochainFile unbound = io::cochain_from_json(io::cochain_to_json(s));
    EXPECT_THROW(io::resolve(unbound), Error);
    const std::map<Var, Rational> params{{Var::p, Rational(1)}, {Var::q, Rational(0)}};
    EXPECT_EQ(io::resolve(io::cochain_from_json(io::cochain_to_json(s, params))), testkit::labelled("d4(1:0)"));
    Json bad = io::cochain_to_json(s, params);
    bad["params"]["x"] = "1";
    EXPECT_THROW(io::cochain_from_json(bad), ParseError);
}

TEST(Io, BasisChangeRoundTrip)
{
    Gen gen(72);
    const BasisChange t(gen.invertible(4));
    EXPECT_EQ(io::basis_change_from_json(io::basis_change_to_json(t)).matrix(), t.matrix());
    const Json singular = Json::parse(R"({"dim": 2, "matrix": [["1", "1"], ["1", "1"]]})");
    EXPECT_THROW(io::basis_change_from_json(singular), SingularBasisChange);
}

TEST(Io, DeformationRoundTrip)
{
    const Deformation d = testkit::deformation_of("d6(0:1)").with_term(2, testkit::labelled("d2"));
    const Deformation back = io::deformation_from_json(io::deformation_to_json(d));
    EXPECT_EQ(back.base(), d.base());
    EXPECT_EQ(back.terms(), d.terms());
    EXPECT_EQ(back.truncation_order(), d.truncation_order());

    const Json shorthand = Json::parse(R"({"base": "h2", "terms": []})");
    EXPECT_EQ(io::deformation_from_json(shorthand).base(), heisenberg(2));
    EXPECT_THROW(io::deformation_from_json(Json::parse(R"({"base": "g2", "terms": []})")), ParseError);
}

TEST(Io, DocumentsAreDeterministic)
{
    const Json doc = io::document("cohomology", io::to_json(cohomology(heisenberg(2), 2)));
    const std::string text = io::dump(doc);
    EXPECT_EQ(text, io::dump(Json::parse(text)));
    EXPECT_EQ(text.back(), '\n');
    EXPECT_EQ(doc["result"]["dim_h"], 20);
    EXPECT_LT(text.find("\"kind\""), text.find("\"result\""));
}

TEST(Io, HumanFormatting)
{
    Vector v(5);
    v[1] = Rational(2);
    v[2] = Rational(-2);
    EXPECT_EQ(io::format_vector(v), "2e2 - 2e3");
    EXPECT_EQ(io::format_vector(Vector(3)), "0");
    RationalMatrix m = RationalMatrix::identity(5);
    m(3, 0) = Rational(1);
    EXPECT_EQ(io::format_basis_change(BasisChange(m)), "e1' = e1 + e4");
    EXPECT_EQ(io::format_basis_change(BasisChange::identity(2)), "identity");
    EXPECT_NE(io::format_algebra(heisenberg(2)).find("[e1,e3] = e5"), std::string::npos);
    EXPECT_NE(io::format_deformation(testkit::deformation_of("d1")).find(" + t*"), std::string::npos);
}
