#pragma once

#include "ft/algebra.hpp"
#include "ft/manifold.hpp"

#include <string>
#include <vector>

namespace ft {

/// A free graded-commutative algebra with a differential. The weight grading,
/// when present, lives on the generators.
struct Complex {
    AlgebraPtr algebra;
    Derivation d;
};

/// The two-copy model of a manifold: one v-generator (weight 1) and one
/// w-generator (weight 2) per cohomology class, with D(v) = 0 and D(w) the
/// comultiplication pushed into quadratic v-monomials.
struct ModelDGA {
    ManifoldCohomology manifold;
    AlgebraPtr algebra;
    Derivation differential;
    std::vector<std::string> warnings;

    Complex complex() const { return {algebra, differential}; }
    Element gen(const std::string& name) const
    {
        return Element::generator(algebra, algebra->index_of(name));
    }
};

/// For a class e of degree r: deg v_e = m - r, deg w_e = 2m - 1 - r, and
/// D(w_{e_k}) = sum over ordered pairs (i, j) of c^k_{ij} v_{e_i} v_{e_j}.
/// Rejects odd-dimensional input.
ModelDGA build_model(const ManifoldCohomology& mc);

/// The seven-generator algebra obtained from the torus model by erasing
/// v_ab. Shared by the theta complexes and the maps between them.
AlgebraPtr theta_algebra();

/// (Theta, d): torus differential with v_ab set to 1, so d(w_ab) = 2v_1 + 2v_a v_b.
Complex theta_model();

/// (Theta, d0): only w_ab has a nonzero image, the same 2v_1 + 2v_a v_b.
Complex theta0_model();

/// Codomain of the boundary-killing map p: the theta algebra without v_1.
AlgebraPtr p_target_algebra();

/// Algebra isomorphism (Theta, d0) -> (Theta, d); identity on v's and w_ab.
Morphism phi_map();

/// Substitution v_ab -> 1 from the torus model into Theta; degree-preserving
/// and commutes with the differentials.
Morphism pi_map(const ModelDGA& torus_model);

/// Substitution v_ab -> 1, v_1 -> -v_a v_b; kills every D-boundary.
Morphism p_map(const ModelDGA& torus_model);

/// Explicit cocycle basis of the top nonvanishing degree n + 1 at weight n:
/// x(f) = v_1 f - w_1 (D(f) / v_1) over f in B_odd (n odd) or B_even (n even).
/// Size (n+1)/2 for odd n, (n-2)/2 for even n. Requires n >= 2.
std::vector<Element> top_cocycle_basis(const ModelDGA& torus_model, int n);

} // namespace ft
