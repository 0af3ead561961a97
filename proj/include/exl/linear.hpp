#ifndef EXL_LINEAR_HPP
#define EXL_LINEAR_HPP

#include "exl/sparse.hpp"

#include <map>
#include <variant>
#include <vector>

namespace exl {

struct RowEchelon {
    SparseMatrix reduced;            ///< pivot rows in pivot order, then zero rows
    std::vector<std::size_t> pivots; ///< ascending pivot columns
};

/// Reduced row echelon form. The RREF of a matrix is unique, so the result
/// does not depend on the elimination order.
RowEchelon rref(const SparseMatrix& m);

/// The system m x = rhs is inconsistent. `witness` is the RREF row of the
/// augmented matrix [m | rhs] that reads 0 = nonzero.
struct Unsolvable {
    SparseVector witness;
};

using SolveResult = std::variant<SparseVector, Unsolvable>;

/// One exact solution, with every free variable set to zero.
SolveResult solve(const SparseMatrix& m, const SparseVector& rhs);

/// One basis vector per free column of rref(m), in ascending column order.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// The columns of m at the pivot columns of rref(m).
std::vector<SparseVector> image_basis(const SparseMatrix& m);

/// `residual` is v reduced against the span; nonzero by construction.
struct NotInSpan {
    SparseVector residual;
};

using SpanResult = std::variant<std::vector<Scalar>, NotInSpan>;

/// Expansion coefficients of v in `basis` (basis assumed independent; for a
/// dependent list the free-variable-zero solution is returned).
SpanResult in_span(const SparseVector& v, const std::vector<SparseVector>& basis);

/// Incrementally built echelon basis of a subspace. Rows are stored with a
/// unit leading coefficient; only leading entries are eliminated.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dimension) : dimension_(dimension) {}

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Remainder of v modulo the span (zero iff v is in the span).
    SparseVector reduce(SparseVector v) const;
    bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

    /// Adds v to the span; returns false when v was already in it.
    bool insert(SparseVector v);

private:
    std::size_t dimension_;
    std::map<std::size_t, SparseVector> rows_;
};

} // namespace exl

#endif
