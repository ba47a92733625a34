#pragma once

#include "ft/algebra.hpp"
#include "ft/model.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace ft {

/// All monomials of one bigraded (or singly graded) piece, sorted by the
/// exponent-lexicographic monomial order.
struct BasisSlice {
    std::optional<int> weight;
    int degree = 0;
    std::vector<Monomial> monomials;

    int dim() const { return static_cast<int>(monomials.size()); }
    /// Column index of a monomial, or nothing when absent.
    std::optional<int> index_of(const Monomial& m) const;
};

/// Monomials of weight n and degree i. With n unset, enumerates by degree
/// alone, which requires every generator to have positive degree; the weight
/// route requires every generator to have positive weight.
BasisSlice enumerate_basis(const AlgebraPtr& algebra, std::optional<int> n, int i);

inline BasisSlice enumerate_basis(const Complex& complex, std::optional<int> n, int i)
{
    return enumerate_basis(complex.algebra, n, i);
}

/// Largest degree of any monomial of weight n (0 for n = 0), or -1 when no
/// monomial has that weight.
int max_degree_at_weight(const Algebra& algebra, int n);

struct SparseEntry {
    int row = 0;
    int col = 0;
    Rational value;

    bool operator==(const SparseEntry&) const = default;
};

/// Coordinate-format matrix with exact rational entries: no duplicates, no
/// zeros, entries sorted by (col, row).
struct SparseRationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseEntry> entries;

    static SparseRationalMatrix make(int rows, int cols, std::vector<SparseEntry> entries);
};

SparseRationalMatrix transpose(const SparseRationalMatrix& m);
SparseRationalMatrix multiply(const SparseRationalMatrix& a, const SparseRationalMatrix& b);

/// Column j holds the coordinates of d(domain[j]) in the codomain basis.
/// A d-image monomial missing from the codomain slice is an enumeration bug
/// and raises internal_error.
SparseRationalMatrix assemble_differential(const Complex& complex, const BasisSlice& domain,
                                           const BasisSlice& codomain);

/// Same, for an algebra morphism between (possibly different) algebras.
SparseRationalMatrix assemble_morphism(const Morphism& f, const BasisSlice& domain,
                                       const BasisSlice& codomain);

/// Columns are the coordinate vectors of the given elements.
SparseRationalMatrix coordinate_matrix(const std::vector<Element>& elements,
                                       const BasisSlice& codomain);

/// Text dump: header "%%dims rows cols nnz", then 1-based "row col p/q" lines.
void write_matrix(std::ostream& out, const SparseRationalMatrix& m);

} // namespace ft
