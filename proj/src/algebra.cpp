#include "ft/algebra.hpp"

#include "ft/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ft {

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(std::string name, std::vector<Generator> generators)
    : name_(std::move(name)), generators_(std::move(generators))
{
    for (const Generator& g : generators_) {
        if (g.name.empty())
            throw usage_error("algebra '" + name_ + "': generator with empty name");
        if (g.degree < 0 || g.weight < 0)
            throw usage_error("algebra '" + name_ + "': generator '" + g.name +
                              "' has negative degree or weight");
    }
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (generators_[i].name == generators_[j].name)
                throw usage_error("algebra '" + name_ + "': duplicate generator '" +
                                  generators_[i].name + "'");
    weight_graded_ = !generators_.empty() &&
                     std::all_of(generators_.begin(), generators_.end(),
                                 [](const Generator& g) { return g.weight >= 1; });
}

AlgebraPtr Algebra::make(std::string name, std::vector<Generator> generators)
{
    return AlgebraPtr(new Algebra(std::move(name), std::move(generators)));
}

const Generator& Algebra::generator(GenIndex index) const
{
    if (index >= generators_.size())
        throw usage_error("algebra '" + name_ + "': generator index out of range");
    return generators_[index];
}

std::optional<GenIndex> Algebra::find(std::string_view generator_name) const
{
    for (GenIndex i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == generator_name)
            return i;
    return std::nullopt;
}

GenIndex Algebra::index_of(std::string_view generator_name) const
{
    if (auto found = find(generator_name))
        return *found;
    throw usage_error("algebra '" + name_ + "': no generator named '" +
                      std::string(generator_name) + "'");
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end());
    // merge duplicates, drop zero exponents
    std::vector<Entry> merged;
    for (const Entry& e : entries_) {
        if (e.second == 0)
            continue;
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(e);
    }
    entries_ = std::move(merged);
}

unsigned Monomial::exponent(GenIndex index) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, GenIndex i) { return e.first < i; });
    return (it != entries_.end() && it->first == index) ? it->second : 0;
}

unsigned Monomial::total_exponent() const
{
    unsigned total = 0;
    for (const Entry& e : entries_)
        total += e.second;
    return total;
}

int Monomial::degree(const Algebra& algebra) const
{
    int d = 0;
    for (const Entry& e : entries_)
        d += static_cast<int>(e.second) * algebra.generator(e.first).degree;
    return d;
}

int Monomial::weight(const Algebra& algebra) const
{
    int w = 0;
    for (const Entry& e : entries_)
        w += static_cast<int>(e.second) * algebra.generator(e.first).weight;
    return w;
}

std::string Monomial::to_string(const Algebra& algebra) const
{
    if (is_unit())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const Entry& e : entries_) {
        if (!first)
            out << "*";
        out << algebra.generator(e.first).name;
        if (e.second > 1)
            out << "^" << e.second;
        first = false;
    }
    return out.str();
}

bool Monomial::operator<(const Monomial& other) const
{
    // Lexicographic on the dense exponent vector: at the first index where
    // the exponents differ, the smaller exponent wins.
    auto a = entries_.begin(), a_end = entries_.end();
    auto b = other.entries_.begin(), b_end = other.entries_.end();
    while (a != a_end && b != b_end) {
        if (a->first < b->first)
            return false; // this has a positive exponent where other has 0
        if (b->first < a->first)
            return true;
        if (a->second != b->second)
            return a->second < b->second;
        ++a;
        ++b;
    }
    return a == a_end && b != b_end;
}

// ---------------------------------------------------------------------------
// Monomial products and division

std::optional<std::pair<Monomial, int>> multiply_monomials(const Algebra& algebra,
                                                           const Monomial& a, const Monomial& b)
{
    std::vector<Monomial::Entry> merged;
    merged.reserve(a.entries().size() + b.entries().size());

    // Count of odd-generator occurrences of `a` not yet consumed; each odd
    // factor taken from `b` must move left past all of them.
    int odd_tail_a = 0;
    for (const auto& [index, exponent] : a.entries())
        if (algebra.generator(index).odd())
            ++odd_tail_a; // odd exponents are always exactly 1

    int sign_exponent = 0;
    auto ia = a.entries().begin(), a_end = a.entries().end();
    auto ib = b.entries().begin(), b_end = b.entries().end();
    while (ia != a_end || ib != b_end) {
        if (ib == b_end || (ia != a_end && ia->first < ib->first)) {
            if (algebra.generator(ia->first).odd())
                --odd_tail_a;
            merged.push_back(*ia);
            ++ia;
        } else if (ia == a_end || ib->first < ia->first) {
            if (algebra.generator(ib->first).odd())
                sign_exponent += odd_tail_a;
            merged.push_back(*ib);
            ++ib;
        } else {
            // same generator on both sides
            if (algebra.generator(ia->first).odd())
                return std::nullopt; // odd square is zero
            merged.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return std::make_pair(Monomial(std::move(merged)), sign_exponent % 2 == 0 ? 1 : -1);
}

std::optional<std::pair<Monomial, int>> divide_by_generator(const Algebra& algebra,
                                                            const Monomial& m, GenIndex g)
{
    if (m.exponent(g) == 0)
        return std::nullopt;
    int sign = 1;
    if (algebra.generator(g).odd()) {
        // moving g to the front passes every odd occurrence before it
        for (const auto& [index, exponent] : m.entries()) {
            if (index >= g)
                break;
            if (algebra.generator(index).odd())
                sign = -sign;
        }
    }
    std::vector<Monomial::Entry> rest;
    for (const auto& entry : m.entries()) {
        if (entry.first == g) {
            if (entry.second > 1)
                rest.emplace_back(entry.first, entry.second - 1);
        } else {
            rest.push_back(entry);
        }
    }
    return std::make_pair(Monomial(std::move(rest)), sign);
}

// ---------------------------------------------------------------------------
// Element

Element Element::zero(AlgebraPtr algebra)
{
    Element e;
    e.algebra_ = std::move(algebra);
    return e;
}

Element Element::unit(AlgebraPtr algebra)
{
    return term(std::move(algebra), Monomial(), 1);
}

Element Element::generator(AlgebraPtr algebra, GenIndex index)
{
    if (!algebra)
        throw usage_error("Element::generator: null algebra");
    algebra->generator(index); // range check
    return term(std::move(algebra), Monomial({{index, 1}}), 1);
}

Element Element::term(AlgebraPtr algebra, Monomial monomial, Rational coefficient)
{
    if (!algebra)
        throw usage_error("Element::term: null algebra");
    Element e;
    e.algebra_ = std::move(algebra);
    if (coefficient == 0)
        return e;
    for (const auto& [index, exponent] : monomial.entries()) {
        const Generator& g = e.algebra_->generator(index);
        if (g.odd() && exponent >= 2)
            return e; // odd power >= 2 is the zero element
    }
    e.terms_.emplace(std::move(monomial), std::move(coefficient));
    return e;
}

Rational Element::coefficient(const Monomial& monomial) const
{
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Monomial& monomial, const Rational& coefficient)
{
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Element::require_same_algebra(const Element& other) const
{
    if (algebra_ && other.algebra_ && algebra_ != other.algebra_)
        throw usage_error("elements over different algebras: '" + algebra_->name() + "' vs '" +
                          other.algebra_->name() + "'");
}

Element& Element::operator+=(const Element& other)
{
    require_same_algebra(other);
    if (!algebra_)
        algebra_ = other.algebra_;
    for (const auto& [monomial, coefficient] : other.terms_)
        add_term(monomial, coefficient);
    return *this;
}

Element& Element::operator-=(const Element& other)
{
    require_same_algebra(other);
    if (!algebra_)
        algebra_ = other.algebra_;
    for (const auto& [monomial, coefficient] : other.terms_)
        add_term(monomial, -coefficient);
    return *this;
}

Element& Element::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [monomial, coefficient] : terms_)
        coefficient *= scalar;
    return *this;
}

Element operator*(const Element& a, const Element& b)
{
    a.require_same_algebra(b);
    Element result;
    result.algebra_ = a.algebra_ ? a.algebra_ : b.algebra_;
    if (!result.algebra_)
        return result; // zero * zero with no ambient algebra
    const Algebra& algebra = *result.algebra_;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (auto product = multiply_monomials(algebra, ma, mb))
                result.add_term(product->first, ca * cb * product->second);
        }
    }
    return result;
}

Element& Element::operator*=(const Element& other)
{
    *this = *this * other;
    return *this;
}

Element Element::operator-() const
{
    Element result = *this;
    for (auto& [monomial, coefficient] : result.terms_)
        coefficient = -coefficient;
    return result;
}

bool Element::operator==(const Element& other) const
{
    require_same_algebra(other);
    return terms_ == other.terms_;
}

std::string Element::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [monomial, coefficient] : terms_) {
        Rational c = coefficient;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        if (c != 1 || monomial.is_unit()) {
            out << ft::to_string(c);
            if (!monomial.is_unit())
                out << "*";
        }
        if (!monomial.is_unit())
            out << monomial.to_string(*algebra_);
        first = false;
    }
    return out.str();
}

namespace {

DegreeResult grade_of(const Element& x, int (Monomial::*grade)(const Algebra&) const)
{
    if (x.is_zero())
        return {DegreeKind::Zero, 0};
    const Algebra& algebra = *x.algebra();
    DegreeResult result{DegreeKind::Homogeneous, 0};
    bool first = true;
    for (const auto& [monomial, coefficient] : x.terms()) {
        int d = (monomial.*grade)(algebra);
        if (first) {
            result.value = d;
            first = false;
        } else if (d != result.value) {
            return {DegreeKind::Inhomogeneous, 0};
        }
    }
    return result;
}

} // namespace

DegreeResult degree_of(const Element& x)
{
    return grade_of(x, &Monomial::degree);
}

DegreeResult weight_of(const Element& x)
{
    return grade_of(x, &Monomial::weight);
}

// ---------------------------------------------------------------------------
// Derivation

Derivation Derivation::zero(AlgebraPtr algebra)
{
    return Derivation(std::move(algebra), {});
}

Derivation::Derivation(AlgebraPtr algebra, const std::map<std::string, Element>& images)
    : algebra_(std::move(algebra))
{
    if (!algebra_)
        throw usage_error("Derivation: null algebra");
    images_.assign(algebra_->size(), Element::zero(algebra_));
    for (const auto& [name, image] : images) {
        GenIndex index = algebra_->index_of(name);
        if (image.algebra() && image.algebra() != algebra_)
            throw usage_error("Derivation: image of '" + name + "' lives in a different algebra");
        if (!degree_of(image).zero_or_of(algebra_->generator(index).degree + 1))
            throw usage_error("Derivation: image of '" + name +
                              "' is not homogeneous of degree deg+1");
        images_[index] = image;
    }
}

const Element& Derivation::image(GenIndex index) const
{
    algebra_->generator(index); // range check
    return images_[index];
}

Element Derivation::operator()(const Element& x) const
{
    if (x.algebra() && x.algebra() != algebra_)
        throw usage_error("Derivation applied to element of a different algebra");
    Element result = Element::zero(algebra_);
    for (const auto& [monomial, coefficient] : x.terms()) {
        // d(g1^e1 ... gk^ek) = sum over factors; for each position t the
        // remaining e_t - 1 copies of an even g_t stay in the prefix, and the
        // Leibniz sign is (-1)^(degree of everything left of the factor hit).
        const auto entries = monomial.entries();
        int prefix_degree = 0;
        for (std::size_t t = 0; t < entries.size(); ++t) {
            const auto [index, exponent] = entries[t];
            const Element& dg = images_[index];
            if (!dg.is_zero()) {
                std::vector<Monomial::Entry> pre(entries.begin(), entries.begin() + t);
                if (exponent > 1)
                    pre.emplace_back(index, exponent - 1);
                std::vector<Monomial::Entry> post(entries.begin() + t + 1, entries.end());

                Rational factor = coefficient * static_cast<int>(exponent);
                if (prefix_degree % 2 != 0)
                    factor = -factor;
                Element piece = Element::term(algebra_, Monomial(std::move(pre)), factor);
                piece *= dg;
                piece *= Element::term(algebra_, Monomial(std::move(post)), 1);
                result += piece;
            }
            prefix_degree += static_cast<int>(exponent) * algebra_->generator(index).degree;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(AlgebraPtr domain, AlgebraPtr codomain,
                   const std::map<std::string, Element>& images)
    : domain_(std::move(domain)), codomain_(std::move(codomain))
{
    if (!domain_ || !codomain_)
        throw usage_error("Morphism: null algebra");
    images_.reserve(domain_->size());
    for (GenIndex i = 0; i < domain_->size(); ++i) {
        const Generator& g = domain_->generator(i);
        auto it = images.find(g.name);
        Element image;
        if (it != images.end()) {
            image = it->second;
            if (image.algebra() && image.algebra() != codomain_)
                throw usage_error("Morphism: image of '" + g.name +
                                  "' lives outside the codomain");
        } else {
            auto target = codomain_->find(g.name);
            if (!target)
                throw usage_error("Morphism: no image given for '" + g.name +
                                  "' and the codomain has no generator of that name");
            image = Element::generator(codomain_, *target);
        }
        if (!degree_of(image).zero_or_of(g.degree))
            throw usage_error("Morphism: image of '" + g.name +
                              "' is not homogeneous of the generator's degree");
        images_.push_back(std::move(image));
    }
}

const Element& Morphism::image(GenIndex index) const
{
    domain_->generator(index); // range check
    return images_[index];
}

Element Morphism::apply(const Monomial& monomial) const
{
    Element result = Element::unit(codomain_);
    for (const auto& [index, exponent] : monomial.entries())
        for (unsigned k = 0; k < exponent; ++k)
            result *= images_[index];
    return result;
}

Element Morphism::operator()(const Element& x) const
{
    if (x.algebra() && x.algebra() != domain_)
        throw usage_error("Morphism applied to element outside its domain");
    Element result = Element::zero(codomain_);
    for (const auto& [monomial, coefficient] : x.terms()) {
        Element image = apply(monomial);
        image *= coefficient;
        result += image;
    }
    return result;
}

} // namespace ft
