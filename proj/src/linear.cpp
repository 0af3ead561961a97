#include "exl/linear.hpp"

#include "exl/error.hpp"

#include <algorithm>

namespace exl {

namespace {

void normalize_leading(SparseVector& row) {
    Scalar inv = 1 / row.entries().front().second;
    row *= inv;
}

// Pivot rows keyed by pivot column, fully reduced (zero in every other pivot
// column, unit leading coefficient).
std::map<std::size_t, SparseVector> reduced_pivot_rows(const std::vector<SparseVector>& rows) {
    std::map<std::size_t, SparseVector> pivots;
    for (SparseVector row : rows) {
        while (!row.is_zero()) {
            auto lead = row.entries().front().first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                normalize_leading(row);
                pivots.emplace(lead, std::move(row));
                break;
            }
            Scalar factor = -row.entries().front().second;
            row.axpy(factor, it->second);
        }
    }
    // Back substitution, highest pivot first. Rows above are already reduced,
    // so subtracting them never reintroduces another pivot column.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        SparseVector& row = it->second;
        std::vector<std::pair<std::size_t, Scalar>> hits;
        for (const auto& [c, v] : row.entries())
            if (c != it->first && pivots.count(c))
                hits.emplace_back(c, v);
        for (const auto& [c, v] : hits)
            row.axpy(-v, pivots.at(c));
    }
    return pivots;
}

} // namespace

RowEchelon rref(const SparseMatrix& m) {
    auto pivots = reduced_pivot_rows(m.row_vectors());
    RowEchelon out;
    std::vector<SparseVector> rows;
    rows.reserve(m.rows());
    for (auto& [c, row] : pivots) {
        out.pivots.push_back(c);
        rows.push_back(std::move(row));
    }
    while (rows.size() < m.rows())
        rows.emplace_back(m.cols());
    out.reduced = SparseMatrix::from_rows(m.cols(), std::move(rows));
    return out;
}

SolveResult solve(const SparseMatrix& m, const SparseVector& rhs) {
    if (rhs.dimension() != m.rows())
        throw Error("solve: rhs dimension " + std::to_string(rhs.dimension()) + " != rows " +
                    std::to_string(m.rows()));
    const std::size_t n = m.cols();
    std::vector<SparseVector> augmented;
    augmented.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        SparseVector widened(n + 1);
        for (const auto& [c, v] : m.row(r).entries())
            widened.add(c, v);
        widened.add(n, rhs[r]);
        augmented.push_back(std::move(widened));
    }
    auto pivots = reduced_pivot_rows(augmented);
    if (auto it = pivots.find(n); it != pivots.end())
        return Unsolvable{it->second};

    SparseVector x(n);
    for (const auto& [c, row] : pivots)
        x.add(c, row[n]);
    return x;
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
    auto pivots = reduced_pivot_rows(m.row_vectors());
    const std::size_t n = m.cols();
    std::vector<std::size_t> free_index(n, n);
    std::vector<SparseVector> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (!pivots.count(c)) {
            free_index[c] = basis.size();
            basis.push_back(SparseVector::unit(n, c));
        }
    }
    for (const auto& [p, row] : pivots)
        for (const auto& [c, v] : row.entries())
            if (c != p)
                basis[free_index[c]].add(p, -v);
    return basis;
}

std::vector<SparseVector> image_basis(const SparseMatrix& m) {
    auto pivots = rref(m).pivots;
    auto cols = m.columns();
    std::vector<SparseVector> out;
    out.reserve(pivots.size());
    for (auto c : pivots)
        out.push_back(std::move(cols[c]));
    return out;
}

SpanResult in_span(const SparseVector& v, const std::vector<SparseVector>& basis) {
    for (const auto& b : basis)
        if (b.dimension() != v.dimension())
            throw Error("in_span: dimension mismatch");
    auto m = SparseMatrix::from_columns(v.dimension(), basis);
    auto result = solve(m, v);
    if (auto* x = std::get_if<SparseVector>(&result)) {
        std::vector<Scalar> coeffs = x->to_dense();
        coeffs.resize(basis.size());
        return coeffs;
    }
    EchelonBasis span(v.dimension());
    for (const auto& b : basis)
        span.insert(b);
    return NotInSpan{span.reduce(v)};
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
    if (v.dimension() != dimension_)
        throw Error("echelon basis: dimension mismatch");
    // Eliminate every entry that sits on a pivot column, left to right.
    std::size_t pos = 0;
    while (pos < v.entries().size()) {
        const auto& [c, coeff] = v.entries()[pos];
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        Scalar factor = -coeff;
        v.axpy(factor, it->second);
        // entries before pos are untouched: pivot rows start at their pivot.
    }
    return v;
}

bool EchelonBasis::insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.is_zero())
        return false;
    normalize_leading(v);
    auto lead = v.entries().front().first;
    rows_.emplace(lead, std::move(v));
    return true;
}

} // namespace exl
