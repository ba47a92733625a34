#include "ft/model.hpp"

#include "ft/errors.hpp"

namespace ft {

ModelDGA build_model(const ManifoldCohomology& mc)
{
    if (mc.dim() % 2 != 0)
        throw unsupported_error("build_model: manifold '" + mc.name() +
                                "' has odd dimension " + std::to_string(mc.dim()));

    const int m = mc.dim();
    const std::size_t n = mc.class_count();

    // v's first, then w's, both in class order; this order fixes all signs.
    std::vector<Generator> generators;
    generators.reserve(2 * n);
    for (const CohomologyClass& c : mc.classes())
        generators.push_back({"v_" + c.name, m - c.degree, 1});
    for (const CohomologyClass& c : mc.classes())
        generators.push_back({"w_" + c.name, 2 * m - 1 - c.degree, 2});
    for (const Generator& g : generators)
        if (g.degree < 0)
            throw validation_error("build_model: class degree exceeds the manifold dimension");

    AlgebraPtr algebra = Algebra::make("model(" + mc.name() + ")", std::move(generators));

    std::map<std::string, Element> images;
    for (std::size_t k = 0; k < n; ++k) {
        Element dw = Element::zero(algebra);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& c = mc.cup(i, j, k);
                if (c == 0)
                    continue;
                Element vi = Element::generator(algebra, static_cast<GenIndex>(i));
                Element vj = Element::generator(algebra, static_cast<GenIndex>(j));
                dw += c * (vi * vj);
            }
        images["w_" + mc.classes()[k].name] = dw;
    }

    ModelDGA model{mc, algebra, Derivation(algebra, images), {}};

    if (m == 2) {
        int b1 = 0;
        for (const CohomologyClass& c : mc.classes())
            if (c.degree == 1)
                ++b1;
        if (b1 > 2)
            model.warnings.push_back(
                "surface with first Betti number " + std::to_string(b1) +
                " > 2 (genus >= 2): not nilpotent, outside the model theorem's hypotheses");
    }
    for (const CohomologyClass& c : mc.classes())
        if (c.degree % 2 != 0 && c.degree >= 3) {
            model.warnings.push_back(
                "odd-degree classes of degree >= 3 present: comultiplication signs follow the "
                "ordered-pair convention validated on surfaces and even spheres");
            break;
        }
    return model;
}

AlgebraPtr theta_algebra()
{
    static const AlgebraPtr algebra = Algebra::make("theta", {{"v_1", 2, 0},
                                                              {"v_a", 1, 0},
                                                              {"v_b", 1, 0},
                                                              {"w_1", 3, 0},
                                                              {"w_a", 2, 0},
                                                              {"w_b", 2, 0},
                                                              {"w_ab", 1, 0}});
    return algebra;
}

namespace {

Element theta_gen(const char* name)
{
    AlgebraPtr theta = theta_algebra();
    return Element::generator(theta, theta->index_of(name));
}

} // namespace

Complex theta_model()
{
    AlgebraPtr theta = theta_algebra();
    Element v1 = theta_gen("v_1"), va = theta_gen("v_a"), vb = theta_gen("v_b");
    Derivation d(theta, {{"w_1", v1 * v1},
                         {"w_a", Rational(2) * v1 * va},
                         {"w_b", Rational(2) * v1 * vb},
                         {"w_ab", Rational(2) * v1 + Rational(2) * va * vb}});
    return {theta, std::move(d)};
}

Complex theta0_model()
{
    AlgebraPtr theta = theta_algebra();
    Element v1 = theta_gen("v_1"), va = theta_gen("v_a"), vb = theta_gen("v_b");
    Derivation d0(theta, {{"w_ab", Rational(2) * v1 + Rational(2) * va * vb}});
    return {theta, std::move(d0)};
}

AlgebraPtr p_target_algebra()
{
    static const AlgebraPtr algebra = Algebra::make("theta_without_v1", {{"v_a", 1, 0},
                                                                         {"v_b", 1, 0},
                                                                         {"w_1", 3, 0},
                                                                         {"w_a", 2, 0},
                                                                         {"w_b", 2, 0},
                                                                         {"w_ab", 1, 0}});
    return algebra;
}

Morphism phi_map()
{
    AlgebraPtr theta = theta_algebra();
    Element v1 = theta_gen("v_1"), va = theta_gen("v_a"), vb = theta_gen("v_b");
    Element w1 = theta_gen("w_1"), wa = theta_gen("w_a"), wb = theta_gen("w_b");
    Element wab = theta_gen("w_ab");
    return Morphism(theta, theta,
                    {{"w_1", w1 - Rational(1, 2) * v1 * wab + Rational(1, 2) * vb * wa},
                     {"w_a", wa + va * wab},
                     {"w_b", wb + vb * wab}});
}

namespace {

void require_torus_shape(const ModelDGA& model)
{
    for (const char* name : {"v_1", "v_a", "v_b", "v_ab", "w_1", "w_a", "w_b", "w_ab"})
        if (!model.algebra->find(name))
            throw usage_error("expected a torus model; generator '" + std::string(name) +
                              "' is missing");
}

} // namespace

Morphism pi_map(const ModelDGA& torus_model)
{
    require_torus_shape(torus_model);
    AlgebraPtr theta = theta_algebra();
    return Morphism(torus_model.algebra, theta, {{"v_ab", Element::unit(theta)}});
}

Morphism p_map(const ModelDGA& torus_model)
{
    require_torus_shape(torus_model);
    AlgebraPtr target = p_target_algebra();
    Element va = Element::generator(target, target->index_of("v_a"));
    Element vb = Element::generator(target, target->index_of("v_b"));
    return Morphism(torus_model.algebra, target,
                    {{"v_ab", Element::unit(target)}, {"v_1", -(va * vb)}});
}

std::vector<Element> top_cocycle_basis(const ModelDGA& torus_model, int n)
{
    if (n < 2)
        throw usage_error("top_cocycle_basis: requires n >= 2");
    require_torus_shape(torus_model);

    const AlgebraPtr& omega = torus_model.algebra;
    const Derivation& D = torus_model.differential;
    const GenIndex v1 = omega->index_of("v_1");
    const GenIndex wa = omega->index_of("w_a");
    const GenIndex wb = omega->index_of("w_b");
    Element v1_el = Element::generator(omega, v1);
    Element w1_el = Element::generator(omega, omega->index_of("w_1"));
    Element vb_el = Element::generator(omega, omega->index_of("v_b"));

    // f runs over w_a^{n1} w_b^{n2} (n odd, 2n1+2n2+1 = n) or
    // v_b w_a^{n1+1} w_b^{n2} (n even, 2n1+2n2+4 = n)
    std::vector<Element> basis_inputs;
    if (n % 2 == 1) {
        int sum = (n - 1) / 2;
        for (int n1 = 0; n1 <= sum; ++n1) {
            int n2 = sum - n1;
            Monomial f({{wa, static_cast<unsigned>(n1)}, {wb, static_cast<unsigned>(n2)}});
            basis_inputs.push_back(Element::term(omega, f));
        }
    } else {
        int sum = (n - 4) / 2; // negative for n = 2: no solutions
        for (int n1 = 0; sum >= 0 && n1 <= sum; ++n1) {
            int n2 = sum - n1;
            Monomial f({{wa, static_cast<unsigned>(n1 + 1)}, {wb, static_cast<unsigned>(n2)}});
            basis_inputs.push_back(vb_el * Element::term(omega, f));
        }
    }

    std::vector<Element> cocycles;
    cocycles.reserve(basis_inputs.size());
    for (const Element& f : basis_inputs) {
        Element df = D(f);
        Element quotient = Element::zero(omega);
        for (const auto& [monomial, coefficient] : df.terms()) {
            auto divided = divide_by_generator(*omega, monomial, v1);
            if (!divided)
                throw internal_error("top_cocycle_basis: D(f) is not divisible by v_1");
            quotient += Element::term(omega, divided->first, coefficient * divided->second);
        }
        cocycles.push_back(v1_el * f - w1_el * quotient);
    }
    return cocycles;
}

} // namespace ft
