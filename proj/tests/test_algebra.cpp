#include "doctest.h"

#include "ft/algebra.hpp"
#include "ft/errors.hpp"

#include "test_util.hpp"

#include <random>

using namespace ft;
using ft_test::derivation_oracle;
using ft_test::multiply_oracle;
using ft_test::random_element;
using ft_test::random_monomial;

namespace {

// The eight-generator algebra of the torus model, declared in the order that
// fixes the normal form: v_1, v_a, v_b, v_ab, w_1, w_a, w_b, w_ab.
AlgebraPtr make_omega()
{
    return Algebra::make("omega", {{"v_1", 2, 1},
                                   {"v_a", 1, 1},
                                   {"v_b", 1, 1},
                                   {"v_ab", 0, 1},
                                   {"w_1", 3, 2},
                                   {"w_a", 2, 2},
                                   {"w_b", 2, 2},
                                   {"w_ab", 1, 2}});
}

Derivation make_torus_differential(const AlgebraPtr& omega)
{
    auto gen = [&](const char* name) { return Element::generator(omega, omega->index_of(name)); };
    Element v1 = gen("v_1"), va = gen("v_a"), vb = gen("v_b"), vab = gen("v_ab");
    return Derivation(omega, {{"w_1", v1 * v1},
                              {"w_a", Rational(2) * v1 * va},
                              {"w_b", Rational(2) * v1 * vb},
                              {"w_ab", Rational(2) * v1 * vab + Rational(2) * va * vb}});
}

} // namespace

TEST_SUITE_BEGIN("algebra");

TEST_CASE("monomial product signs and squares")
{
    auto omega = make_omega();
    auto gen = [&](const char* name) { return Element::generator(omega, omega->index_of(name)); };
    Element v1 = gen("v_1"), va = gen("v_a"), vb = gen("v_b"), vab = gen("v_ab");

    Element vavb = va * vb;
    CHECK(vavb.term_count() == 1);
    CHECK(vb * va == -vavb);
    CHECK((va * va).is_zero());
    CHECK((Rational(2) * v1) * (Rational(3) * v1 * vab) ==
          Rational(6) * (v1 * v1 * vab));
    CHECK((v1 * va) * vb == v1 * (va * vb));
}

TEST_CASE("unit and zero behave structurally")
{
    auto omega = make_omega();
    Element one = Element::unit(omega);
    Element zero = Element::zero(omega);
    Element va = Element::generator(omega, omega->index_of("v_a"));

    CHECK(one * va == va);
    CHECK(va * one == va);
    CHECK((zero * va).is_zero());
    CHECK(va + zero == va);
    CHECK(va - va == zero);
    CHECK((va * Rational(0)).is_zero());
    // odd exponent >= 2 collapses to zero at construction
    CHECK(Element::term(omega, Monomial({{omega->index_of("v_a"), 2}})).is_zero());
}

TEST_CASE("mixed ambient algebras are rejected")
{
    auto omega = make_omega();
    auto other = Algebra::make("other", {{"x", 1, 1}});
    Element va = Element::generator(omega, omega->index_of("v_a"));
    Element x = Element::generator(other, 0);
    CHECK_THROWS_AS(va * x, usage_error);
    CHECK_THROWS_AS(va + x, usage_error);
}

TEST_CASE("torus differential on generators and products")
{
    auto omega = make_omega();
    Derivation D = make_torus_differential(omega);
    auto gen = [&](const char* name) { return Element::generator(omega, omega->index_of(name)); };
    Element v1 = gen("v_1"), va = gen("v_a"), vb = gen("v_b"), vab = gen("v_ab");
    Element w1 = gen("w_1"), wab = gen("w_ab");

    CHECK(D(w1) == v1 * v1);
    CHECK(D(va * vb).is_zero());
    CHECK(D(vab).is_zero());
    // deg w_1 = 3 is odd, so the second Leibniz term flips sign
    CHECK(D(w1 * wab) ==
          v1 * v1 * wab - Rational(2) * v1 * vab * w1 - Rational(2) * va * vb * w1);
}

TEST_CASE("degree_of distinguishes homogeneous, mixed, zero")
{
    auto omega = make_omega();
    auto gen = [&](const char* name) { return Element::generator(omega, omega->index_of(name)); };
    Element v1 = gen("v_1"), va = gen("v_a"), vab = gen("v_ab");

    CHECK(degree_of(v1 * vab).homogeneous_of(2));
    CHECK(degree_of(v1 + va).kind == DegreeKind::Inhomogeneous);
    CHECK(degree_of(Element::zero(omega)).kind == DegreeKind::Zero);
    CHECK(weight_of(v1 * vab).homogeneous_of(2));
}

TEST_CASE("division by a generator tracks the Koszul sign")
{
    auto omega = make_omega();
    auto gen = [&](const char* name) { return Element::generator(omega, omega->index_of(name)); };
    Element v1 = gen("v_1"), va = gen("v_a"), vb = gen("v_b");

    Monomial m = (v1 * va * vb).terms().begin()->first;
    // dividing by v_b moves it left past v_a (odd): v_1 v_a v_b = -v_b * (v_1 v_a)
    auto quotient = divide_by_generator(*omega, m, omega->index_of("v_b"));
    REQUIRE(quotient.has_value());
    CHECK(quotient->second == -1);
    CHECK(Element::term(omega, quotient->first) == v1 * va);
    CHECK(!divide_by_generator(*omega, m, omega->index_of("w_1")).has_value());
}

TEST_CASE("product matches the transposition-counting oracle")
{
    auto omega = make_omega();
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        Monomial a = random_monomial(rng, *omega, 2);
        Monomial b = random_monomial(rng, *omega, 2);
        Element via_engine = Element::term(omega, a) * Element::term(omega, b);
        CHECK(via_engine == multiply_oracle(omega, a, b));
    }
}

TEST_CASE("multiplication is associative, unital, graded-commutative")
{
    auto omega = make_omega();
    std::mt19937 rng(7);
    Element one = Element::unit(omega);
    for (int trial = 0; trial < 100; ++trial) {
        Element a = random_element(rng, omega);
        Element b = random_element(rng, omega);
        Element c = random_element(rng, omega);
        CHECK((a * b) * c == a * (b * c));
        CHECK(one * a == a);
        CHECK(a * one == a);
        CHECK(a * (b + c) == a * b + a * c);
    }
    // graded commutativity on homogeneous monomials
    for (int trial = 0; trial < 200; ++trial) {
        Monomial ma = random_monomial(rng, *omega, 2);
        Monomial mb = random_monomial(rng, *omega, 2);
        Element a = Element::term(omega, ma), b = Element::term(omega, mb);
        int sign = (ma.degree(*omega) * mb.degree(*omega)) % 2 == 0 ? 1 : -1;
        CHECK(a * b == Rational(sign) * (b * a));
    }
}

TEST_CASE("derivations raise degree by one and obey Leibniz")
{
    auto omega = make_omega();
    Derivation D = make_torus_differential(omega);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Monomial m = random_monomial(rng, *omega, 2);
        Element dm = D(Element::term(omega, m));
        CHECK(degree_of(dm).zero_or_of(m.degree(*omega) + 1));
        CHECK(dm == derivation_oracle(D, m));
    }
    for (int trial = 0; trial < 100; ++trial) {
        Element a = random_element(rng, omega, 2);
        Element b = random_element(rng, omega, 2);
        CHECK(D(a + b) == D(a) + D(b));
    }
}

TEST_CASE("torus differential squares to zero on monomials of degree <= 12")
{
    auto omega = make_omega();
    Derivation D = make_torus_differential(omega);
    // exhaustive over bounded exponent vectors (odd <= 1, even <= 3)
    std::vector<Monomial> all;
    std::vector<Monomial::Entry> current;
    auto recurse = [&](auto&& self, GenIndex idx) -> void {
        if (idx == omega->size()) {
            all.emplace_back(current);
            return;
        }
        unsigned cap = omega->generator(idx).odd() ? 1 : 3;
        for (unsigned e = 0; e <= cap; ++e) {
            if (e > 0)
                current.emplace_back(idx, e);
            self(self, idx + 1);
            if (e > 0)
                current.pop_back();
        }
    };
    recurse(recurse, 0);
    int checked = 0;
    for (const Monomial& m : all) {
        if (m.degree(*omega) > 12)
            continue;
        CHECK(D(D(Element::term(omega, m))).is_zero());
        ++checked;
    }
    CHECK(checked > 1000);
}

TEST_CASE("derivation construction validates image degrees")
{
    auto omega = make_omega();
    Element va = Element::generator(omega, omega->index_of("v_a"));
    // deg v_a + 1 = 2, but the image has degree 1
    CHECK_THROWS_AS(Derivation(omega, {{"v_a", va}}), usage_error);
    CHECK_THROWS_AS(Derivation(omega, {{"nope", va}}), usage_error);
}

TEST_CASE("element printing is deterministic and readable")
{
    auto omega = make_omega();
    auto gen = [&](const char* name) { return Element::generator(omega, omega->index_of(name)); };
    Element v1 = gen("v_1"), vab = gen("v_ab");
    Element x = Rational(2) * v1 * v1 * vab - Rational(1, 2) * vab;
    CHECK(x.to_string() == "-1/2*v_ab + 2*v_1^2*v_ab");
    CHECK(Element::zero(omega).to_string() == "0");
    CHECK(Element::unit(omega).to_string() == "1");
}

TEST_SUITE_END();
