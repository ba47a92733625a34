#pragma once

#include "ft/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ft {

using GenIndex = std::uint32_t;

/// One generator of a free graded-commutative algebra. Parity is degree mod 2:
/// odd generators anticommute and square to zero, even generators are
/// polynomial variables. `weight` is the extra lower grading (0 = unset).
struct Generator {
    std::string name;
    int degree = 0;
    int weight = 0;

    bool odd() const { return degree % 2 != 0; }
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A fixed, ordered generator list. Declaration order fixes the monomial
/// normal form and thereby every Koszul sign produced downstream.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    static AlgebraPtr make(std::string name, std::vector<Generator> generators);

    const std::string& name() const { return name_; }
    std::span<const Generator> generators() const { return generators_; }
    GenIndex size() const { return static_cast<GenIndex>(generators_.size()); }
    const Generator& generator(GenIndex index) const;
    std::optional<GenIndex> find(std::string_view generator_name) const;
    GenIndex index_of(std::string_view generator_name) const; // throws if absent

    /// True when every generator carries weight >= 1, so weight slices are finite.
    bool weight_graded() const { return weight_graded_; }

private:
    Algebra(std::string name, std::vector<Generator> generators);

    std::string name_;
    std::vector<Generator> generators_;
    bool weight_graded_ = false;
};

/// Normal-form monomial: exponents keyed by generator index, stored sparsely
/// in increasing index order with all exponents positive. The empty map is
/// the unit. Ordering is lexicographic on the dense exponent vector.
class Monomial {
public:
    using Entry = std::pair<GenIndex, unsigned>;

    Monomial() = default; // unit
    explicit Monomial(std::vector<Entry> entries);

    std::span<const Entry> entries() const { return entries_; }
    bool is_unit() const { return entries_.empty(); }
    unsigned exponent(GenIndex index) const;
    unsigned total_exponent() const;

    int degree(const Algebra& algebra) const;
    int weight(const Algebra& algebra) const;

    std::string to_string(const Algebra& algebra) const;

    bool operator==(const Monomial& other) const { return entries_ == other.entries_; }
    bool operator<(const Monomial& other) const;

private:
    std::vector<Entry> entries_;
};

/// Koszul-signed product of two normal-form monomials. Returns nothing when
/// an odd generator would acquire exponent >= 2; otherwise the merged
/// monomial together with the sign (+1/-1).
std::optional<std::pair<Monomial, int>> multiply_monomials(const Algebra& algebra,
                                                           const Monomial& a, const Monomial& b);

/// Splits m = g^e * rest and returns (rest, sign) where sign accounts for
/// moving one factor of g to the front. Nothing if g does not divide m.
std::optional<std::pair<Monomial, int>> divide_by_generator(const Algebra& algebra,
                                                            const Monomial& m, GenIndex g);

enum class DegreeKind { Zero, Homogeneous, Inhomogeneous };

struct DegreeResult {
    DegreeKind kind = DegreeKind::Zero;
    int value = 0; // meaningful only when kind == Homogeneous

    bool homogeneous_of(int d) const { return kind == DegreeKind::Homogeneous && value == d; }
    bool zero_or_of(int d) const { return kind == DegreeKind::Zero || homogeneous_of(d); }
};

/// Finite rational linear combination of monomials over one ambient algebra.
/// Zero coefficients are never stored, so equality is structural.
class Element {
public:
    Element() = default; // zero over no algebra; unifies with anything

    static Element zero(AlgebraPtr algebra);
    static Element unit(AlgebraPtr algebra);
    static Element generator(AlgebraPtr algebra, GenIndex index);
    /// Arbitrary term; collapses to zero when an odd generator has exponent >= 2.
    static Element term(AlgebraPtr algebra, Monomial monomial, Rational coefficient = 1);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient(const Monomial& monomial) const;

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Rational& scalar);
    Element& operator*=(const Element& other);
    Element operator-() const;

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Rational& s) { return a *= s; }
    friend Element operator*(const Rational& s, Element a) { return a *= s; }
    friend Element operator*(const Element& a, const Element& b);
    bool operator==(const Element& other) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& monomial, const Rational& coefficient);
    void require_same_algebra(const Element& other) const;

    AlgebraPtr algebra_;
    std::map<Monomial, Rational> terms_;
};

DegreeResult degree_of(const Element& x);
DegreeResult weight_of(const Element& x);

/// Degree +1 map given on generators and extended by the graded Leibniz rule
/// d(xy) = d(x)y + (-1)^{deg x} x d(y).
class Derivation {
public:
    static Derivation zero(AlgebraPtr algebra);
    /// Missing generators map to zero. Every image must be homogeneous of
    /// degree deg(g) + 1 (or zero).
    Derivation(AlgebraPtr algebra, const std::map<std::string, Element>& images);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Element& image(GenIndex index) const;
    Element operator()(const Element& x) const;

private:
    AlgebraPtr algebra_;
    std::vector<Element> images_;
};

/// Graded algebra morphism fixed by generator images, extended
/// multiplicatively. Generators without an explicit image map to the
/// same-named generator of the codomain, which must exist and agree in degree.
class Morphism {
public:
    Morphism(AlgebraPtr domain, AlgebraPtr codomain,
             const std::map<std::string, Element>& images);

    const AlgebraPtr& domain() const { return domain_; }
    const AlgebraPtr& codomain() const { return codomain_; }
    const Element& image(GenIndex index) const;
    Element operator()(const Element& x) const;
    Element apply(const Monomial& monomial) const;

private:
    AlgebraPtr domain_;
    AlgebraPtr codomain_;
    std::vector<Element> images_;
};

} // namespace ft
