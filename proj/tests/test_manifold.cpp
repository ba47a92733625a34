#include "doctest.h"

#include "ft/errors.hpp"
#include "ft/manifold.hpp"

#include <cstdio>
#include <fstream>

using namespace ft;

TEST_SUITE_BEGIN("manifold");

TEST_CASE("rational parsing and canonical printing")
{
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational("10000000000000000000000/3") ==
          Rational(Integer("10000000000000000000000")) / Rational(3));
    CHECK(to_string(parse_rational("-4/6")) == "-2/3");
    CHECK(to_string(parse_rational("8/4")) == "2");

    CHECK_THROWS_AS(parse_rational(""), validation_error);
    CHECK_THROWS_AS(parse_rational("a"), validation_error);
    CHECK_THROWS_AS(parse_rational("1/0"), validation_error);
    CHECK_THROWS_AS(parse_rational("1/-2"), validation_error);
    CHECK_THROWS_AS(parse_rational("+3"), validation_error);
    CHECK_THROWS_AS(parse_rational(" 1"), validation_error);
    CHECK_THROWS_AS(parse_rational("1.5"), validation_error);
}

TEST_CASE("torus preset satisfies all ring identities")
{
    ManifoldCohomology torus = torus_preset();
    CHECK(torus.dim() == 2);
    CHECK(torus.class_count() == 4);
    CHECK(torus.unit_index() == 0);
    std::size_t a = torus.index_of("a"), b = torus.index_of("b"), ab = torus.index_of("ab");
    CHECK(torus.cup(a, b, ab) == 1);
    CHECK(torus.cup(b, a, ab) == -1); // ab = -ba
    CHECK(torus.cup(a, a, ab) == 0);
    CHECK(torus.cup(torus.unit_index(), a, a) == 1);
}

TEST_CASE("sphere preset")
{
    ManifoldCohomology s2 = sphere_preset(1);
    CHECK(s2.dim() == 2);
    REQUIRE(s2.class_count() == 2);
    CHECK(s2.classes()[0].degree == 0);
    CHECK(s2.classes()[1].degree == 2);
    std::size_t w = s2.index_of("omega");
    CHECK(s2.cup(w, w, w) == 0);
    CHECK(s2.cup(w, w, s2.unit_index()) == 0);

    CHECK(sphere_preset(3).dim() == 6);
    CHECK_THROWS_AS(sphere_preset(0), usage_error);
    CHECK_THROWS_AS(sphere_preset(-2), usage_error);
}

TEST_CASE("validation rejects broken structure constants")
{
    using Cup = ManifoldCohomology::CupEntry;
    std::vector<CohomologyClass> surface = {{"1", 0}, {"a", 1}, {"b", 1}, {"ab", 2}};

    // commutativity: b cup a must be -ab
    CHECK_THROWS_WITH_AS(
        ManifoldCohomology("bad", 2, surface, {Cup{1, 2, 3, 1}, Cup{2, 1, 3, 1}}),
        doctest::Contains("graded commutativity"), validation_error);

    // degree additivity: a cup b cannot land in degree 1
    CHECK_THROWS_WITH_AS(ManifoldCohomology("bad", 2, surface, {Cup{1, 2, 2, 1}}),
                         doctest::Contains("degree additivity"), validation_error);

    // unit laws: 1 cup a = 2a
    CHECK_THROWS_WITH_AS(ManifoldCohomology("bad", 2, surface, {Cup{0, 1, 1, 2}}),
                         doctest::Contains("unit law"), validation_error);

    // no unit / two units
    CHECK_THROWS_WITH_AS(ManifoldCohomology("bad", 2, {{"a", 1}}, {}),
                         doctest::Contains("degree-0"), validation_error);
    CHECK_THROWS_WITH_AS(ManifoldCohomology("bad", 2, {{"1", 0}, {"e", 0}}, {}),
                         doctest::Contains("degree-0"), validation_error);

    // associativity: x cup x = s, s cup y = z, but x cup (x cup y) = 0
    std::vector<CohomologyClass> assoc = {{"1", 0}, {"x", 2}, {"y", 2}, {"s", 4}, {"z", 6}};
    std::vector<Cup> bad_cup = {Cup{1, 1, 3, 1}, Cup{3, 2, 4, 1}, Cup{2, 3, 4, 1}};
    CHECK_THROWS_WITH_AS(ManifoldCohomology("bad", 6, assoc, bad_cup),
                         doctest::Contains("associativity"), validation_error);

    CHECK_THROWS_AS(ManifoldCohomology("bad", 0, surface, {}), validation_error);
}

TEST_CASE("json round trip reproduces an identical model")
{
    for (const ManifoldCohomology& mc : {torus_preset(), sphere_preset(2)}) {
        std::string text = ManifoldCohomology::from_json_text(mc.to_json_text()).to_json_text();
        CHECK(text == mc.to_json_text());
        CHECK(ManifoldCohomology::from_json_text(text) == mc);
    }
}

TEST_CASE("json loading reports the failing identity")
{
    const char* missing_dim = R"({"name": "x", "classes": [{"name": "1", "degree": 0}]})";
    CHECK_THROWS_AS(ManifoldCohomology::from_json_text(missing_dim), validation_error);

    const char* numeric_coeff = R"({"name": "x", "dim": 2,
        "classes": [{"name": "1", "degree": 0}, {"name": "a", "degree": 1},
                    {"name": "b", "degree": 1}, {"name": "ab", "degree": 2}],
        "cup": [{"left": "a", "right": "b", "result": [{"class": "ab", "coeff": 1}]}]})";
    CHECK_THROWS_WITH_AS(ManifoldCohomology::from_json_text(numeric_coeff),
                         doctest::Contains("string"), validation_error);

    const char* unknown_class = R"({"name": "x", "dim": 2,
        "classes": [{"name": "1", "degree": 0}],
        "cup": [{"left": "q", "right": "q", "result": []}]})";
    CHECK_THROWS_WITH_AS(ManifoldCohomology::from_json_text(unknown_class),
                         doctest::Contains("unknown class"), validation_error);

    CHECK_THROWS_AS(ManifoldCohomology::from_json_text("not json"), validation_error);
    CHECK_THROWS_AS(ManifoldCohomology::load("/nonexistent/file.json"), validation_error);
}

TEST_CASE("explicit unit products are accepted when consistent")
{
    const char* text = R"({"name": "pt2", "dim": 2,
        "classes": [{"name": "1", "degree": 0}, {"name": "t", "degree": 2}],
        "cup": [{"left": "1", "right": "t", "result": [{"class": "t", "coeff": "1"}]}]})";
    ManifoldCohomology mc = ManifoldCohomology::from_json_text(text);
    CHECK(mc.cup(0, 1, 1) == 1);
}

TEST_CASE("resolve_manifold handles presets, sphere syntax and files")
{
    CHECK(resolve_manifold("torus") == torus_preset());
    CHECK(resolve_manifold("sphere:d=2") == sphere_preset(2));
    CHECK_THROWS_AS(resolve_manifold("sphere:d=0"), usage_error);
    CHECK_THROWS_AS(resolve_manifold("sphere:d=x"), usage_error);
    CHECK_THROWS_AS(resolve_manifold("sphere:d=2junk"), usage_error);

    std::string path = "resolve_manifold_test.json";
    {
        std::ofstream out(path);
        out << torus_preset().to_json_text();
    }
    CHECK(resolve_manifold(path) == torus_preset());
    std::remove(path.c_str());
}

TEST_SUITE_END();
