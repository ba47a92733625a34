#include "ft/complex.hpp"

#include "ft/errors.hpp"

#include <algorithm>
#include <ostream>

namespace ft {

std::optional<int> BasisSlice::index_of(const Monomial& m) const
{
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
    if (it == monomials.end() || !(*it == m))
        return std::nullopt;
    return static_cast<int>(it - monomials.begin());
}

namespace {

// Exact feasibility table over (generator suffix, remaining weight, degree):
// a branch is explored only if some completion hits the target, which makes
// the enumeration output-linear. In degree mode the "weight" of a generator
// is its degree.
struct Enumerator {
    const Algebra& algebra;
    bool weight_mode;
    int target_budget; // weight (weight mode) or degree (degree mode)
    int target_degree;
    std::vector<std::vector<std::vector<char>>> feasible; // [idx][budget][degree]

    Enumerator(const Algebra& a, bool by_weight, int budget, int degree)
        : algebra(a), weight_mode(by_weight), target_budget(budget), target_degree(degree)
    {
        const int k = static_cast<int>(algebra.size());
        feasible.assign(k + 1, std::vector<std::vector<char>>(
                                   budget + 1, std::vector<char>(degree + 1, 0)));
        feasible[k][0][0] = 1;
        for (int idx = k - 1; idx >= 0; --idx) {
            const Generator& g = algebra.generator(idx);
            const int unit_budget = weight_mode ? g.weight : g.degree;
            const int unit_degree = g.degree;
            for (int w = 0; w <= budget; ++w)
                for (int d = 0; d <= degree; ++d) {
                    char ok = 0;
                    const unsigned cap = exponent_cap(g, w);
                    for (unsigned e = 0; e <= cap && !ok; ++e) {
                        int w2 = w - static_cast<int>(e) * unit_budget;
                        int d2 = d - static_cast<int>(e) * unit_degree;
                        if (w2 < 0 || d2 < 0)
                            break;
                        ok = feasible[idx + 1][w2][d2];
                    }
                    feasible[idx][w][d] = ok;
                }
        }
    }

    unsigned exponent_cap(const Generator& g, int remaining_budget) const
    {
        if (g.odd())
            return 1;
        const int unit = weight_mode ? g.weight : g.degree;
        return unit > 0 ? static_cast<unsigned>(remaining_budget / unit)
                        : static_cast<unsigned>(remaining_budget); // unreachable by construction
    }

    void run(std::vector<Monomial>& out)
    {
        if (!feasible[0][target_budget][target_degree])
            return;
        std::vector<Monomial::Entry> current;
        descend(0, target_budget, target_degree, current, out);
    }

    void descend(int idx, int w, int d, std::vector<Monomial::Entry>& current,
                 std::vector<Monomial>& out)
    {
        if (idx == static_cast<int>(algebra.size())) {
            out.emplace_back(current);
            return;
        }
        const Generator& g = algebra.generator(idx);
        const int unit_budget = weight_mode ? g.weight : g.degree;
        const int unit_degree = g.degree;
        const unsigned cap = exponent_cap(g, w);
        for (unsigned e = 0; e <= cap; ++e) {
            int w2 = w - static_cast<int>(e) * unit_budget;
            int d2 = d - static_cast<int>(e) * unit_degree;
            if (w2 < 0 || d2 < 0)
                break;
            if (!feasible[idx + 1][w2][d2])
                continue;
            if (e > 0)
                current.emplace_back(static_cast<GenIndex>(idx), e);
            descend(idx + 1, w2, d2, current, out);
            if (e > 0)
                current.pop_back();
        }
    }
};

} // namespace

BasisSlice enumerate_basis(const AlgebraPtr& algebra, std::optional<int> n, int i)
{
    if (!algebra)
        throw usage_error("enumerate_basis: null algebra");
    if (i < 0 || (n && *n < 0))
        throw usage_error("enumerate_basis: negative weight or degree");

    if (n) {
        if (!algebra->weight_graded())
            throw usage_error("enumerate_basis: algebra '" + algebra->name() +
                              "' carries no weight grading; call without a weight");
        Enumerator enumerator(*algebra, true, *n, i);
        BasisSlice slice{*n, i, {}};
        enumerator.run(slice.monomials);
        return slice;
    }

    for (const Generator& g : algebra->generators())
        if (g.degree <= 0)
            throw unsupported_error("enumerate_basis: generator '" + g.name +
                                    "' has degree 0; degree slices would be infinite");
    Enumerator enumerator(*algebra, false, i, i);
    BasisSlice slice{std::nullopt, i, {}};
    enumerator.run(slice.monomials);
    return slice;
}

int max_degree_at_weight(const Algebra& algebra, int n)
{
    if (n < 0)
        throw usage_error("max_degree_at_weight: negative weight");
    if (!algebra.weight_graded())
        throw usage_error("max_degree_at_weight: algebra is not weight-graded");

    // best[w] = largest degree of any monomial of exact weight w over the
    // generators seen so far; -1 marks unreachable weights.
    std::vector<int> best(n + 1, -1);
    best[0] = 0;
    for (const Generator& g : algebra.generators()) {
        std::vector<int> next = best;
        for (int w = 0; w <= n; ++w) {
            if (best[w] < 0)
                continue;
            const unsigned cap = g.odd() ? 1 : static_cast<unsigned>((n - w) / g.weight);
            for (unsigned e = 1; e <= cap; ++e) {
                int w2 = w + static_cast<int>(e) * g.weight;
                int d2 = best[w] + static_cast<int>(e) * g.degree;
                if (w2 <= n)
                    next[w2] = std::max(next[w2], d2);
            }
        }
        best = std::move(next);
    }
    return best[n];
}

// ---------------------------------------------------------------------------
// Sparse matrices

SparseRationalMatrix SparseRationalMatrix::make(int rows, int cols,
                                                std::vector<SparseEntry> entries)
{
    std::sort(entries.begin(), entries.end(), [](const SparseEntry& a, const SparseEntry& b) {
        return std::pair(a.col, a.row) < std::pair(b.col, b.row);
    });
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        const SparseEntry& e = entries[idx];
        if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
            throw internal_error("sparse matrix: entry out of range");
        if (e.value == 0)
            throw internal_error("sparse matrix: explicit zero entry");
        if (idx > 0 && entries[idx - 1].row == e.row && entries[idx - 1].col == e.col)
            throw internal_error("sparse matrix: duplicate entry");
    }
    return {rows, cols, std::move(entries)};
}

SparseRationalMatrix transpose(const SparseRationalMatrix& m)
{
    std::vector<SparseEntry> entries;
    entries.reserve(m.entries.size());
    for (const SparseEntry& e : m.entries)
        entries.push_back({e.col, e.row, e.value});
    return SparseRationalMatrix::make(m.cols, m.rows, std::move(entries));
}

SparseRationalMatrix multiply(const SparseRationalMatrix& a, const SparseRationalMatrix& b)
{
    if (a.cols != b.rows)
        throw usage_error("matrix multiply: dimension mismatch");
    std::map<std::pair<int, int>, Rational> accumulator;
    // group a's entries by column for direct lookup
    std::vector<std::vector<const SparseEntry*>> a_by_col(a.cols);
    for (const SparseEntry& e : a.entries)
        a_by_col[e.col].push_back(&e);
    for (const SparseEntry& eb : b.entries)
        for (const SparseEntry* ea : a_by_col[eb.row])
            accumulator[{ea->row, eb.col}] += ea->value * eb.value;
    std::vector<SparseEntry> entries;
    for (const auto& [position, value] : accumulator)
        if (value != 0)
            entries.push_back({position.first, position.second, value});
    return SparseRationalMatrix::make(a.rows, b.cols, std::move(entries));
}

namespace {

template <typename ImageFn>
SparseRationalMatrix assemble(const BasisSlice& domain, const BasisSlice& codomain,
                              const AlgebraPtr& domain_algebra, ImageFn&& image_of)
{
    std::vector<SparseEntry> entries;
    for (int j = 0; j < domain.dim(); ++j) {
        Element image = image_of(Element::term(domain_algebra, domain.monomials[j]));
        for (const auto& [monomial, coefficient] : image.terms()) {
            auto row = codomain.index_of(monomial);
            if (!row)
                throw internal_error("assemble: image monomial missing from codomain slice "
                                     "(enumeration bug)");
            entries.push_back({*row, j, coefficient});
        }
    }
    return SparseRationalMatrix::make(codomain.dim(), domain.dim(), std::move(entries));
}

} // namespace

SparseRationalMatrix assemble_differential(const Complex& complex, const BasisSlice& domain,
                                           const BasisSlice& codomain)
{
    if (codomain.degree != domain.degree + 1 || codomain.weight != domain.weight)
        throw usage_error("assemble_differential: codomain must be the (n, i+1) slice");
    return assemble(domain, codomain, complex.algebra,
                    [&](const Element& x) { return complex.d(x); });
}

SparseRationalMatrix assemble_morphism(const Morphism& f, const BasisSlice& domain,
                                       const BasisSlice& codomain)
{
    return assemble(domain, codomain, f.domain(), [&](const Element& x) { return f(x); });
}

SparseRationalMatrix coordinate_matrix(const std::vector<Element>& elements,
                                       const BasisSlice& codomain)
{
    std::vector<SparseEntry> entries;
    for (std::size_t j = 0; j < elements.size(); ++j) {
        for (const auto& [monomial, coefficient] : elements[j].terms()) {
            auto row = codomain.index_of(monomial);
            if (!row)
                throw internal_error("coordinate_matrix: monomial outside the codomain slice");
            entries.push_back({*row, static_cast<int>(j), coefficient});
        }
    }
    return SparseRationalMatrix::make(codomain.dim(), static_cast<int>(elements.size()),
                                      std::move(entries));
}

void write_matrix(std::ostream& out, const SparseRationalMatrix& m)
{
    out << "%%dims " << m.rows << " " << m.cols << " " << m.entries.size() << "\n";
    for (const SparseEntry& e : m.entries)
        out << e.row + 1 << " " << e.col + 1 << " " << to_string(e.value) << "\n";
}

} // namespace ft
