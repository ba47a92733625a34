#pragma once

#include "ft/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace ft {

struct CohomologyClass {
    std::string name;
    int degree = 0;

    bool operator==(const CohomologyClass&) const = default;
};

/// Graded basis of H*(M) together with cup-product structure constants
/// c^k_{ij}, meaning e_i cup e_j = sum_k c^k_{ij} e_k. Construction validates
/// unit laws, graded commutativity, degree additivity and associativity.
class ManifoldCohomology {
public:
    struct CupEntry {
        std::size_t left = 0, right = 0, result = 0;
        Rational coefficient;
    };

    /// `cup` lists the nonzero non-implied constants; products with the unit
    /// are filled in automatically and may be restated as long as they agree.
    ManifoldCohomology(std::string name, int dim, std::vector<CohomologyClass> classes,
                       const std::vector<CupEntry>& cup);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    const std::vector<CohomologyClass>& classes() const { return classes_; }
    std::size_t class_count() const { return classes_.size(); }
    std::size_t unit_index() const { return unit_; }
    std::size_t index_of(const std::string& class_name) const;

    const Rational& cup(std::size_t i, std::size_t j, std::size_t k) const;

    bool operator==(const ManifoldCohomology& other) const;

    /// JSON schema:
    ///   {"name": str, "dim": int,
    ///    "classes": [{"name": str, "degree": int}, ...],
    ///    "cup": [{"left": str, "right": str,
    ///             "result": [{"class": str, "coeff": "p/q"}, ...]}, ...]}
    /// Omitted cup entries are zero; unit products may be omitted.
    static ManifoldCohomology from_json_text(const std::string& text);
    static ManifoldCohomology load(const std::string& path);
    std::string to_json_text() const;

private:
    void validate() const;
    Rational& cup_ref(std::size_t i, std::size_t j, std::size_t k);

    std::string name_;
    int dim_ = 0;
    std::vector<CohomologyClass> classes_;
    std::size_t unit_ = 0;
    std::vector<Rational> cup_; // dense [i][j][k], row-major
};

/// H*(torus): classes 1, a, b, ab with a cup b = ab = -(b cup a).
ManifoldCohomology torus_preset();

/// H*(S^{2d}): classes 1 and omega in degree 2d with omega cup omega = 0.
ManifoldCohomology sphere_preset(int d);

/// Resolves "torus", "sphere:d=<k>" or a file path.
ManifoldCohomology resolve_manifold(const std::string& spec);

} // namespace ft
