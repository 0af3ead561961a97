#ifndef EXL_SPARSE_HPP
#define EXL_SPARSE_HPP

#include "exl/scalar.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace exl {

/// Sparse vector over Q. Entries are kept sorted by index and never zero.
class SparseVector {
public:
    using Entry = std::pair<std::size_t, Scalar>;

    SparseVector() = default;
    explicit SparseVector(std::size_t dimension) : dimension_(dimension) {}

    static SparseVector unit(std::size_t dimension, std::size_t index, const Scalar& value = 1);
    static SparseVector from_dense(const std::vector<Scalar>& values);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t nnz() const noexcept { return entries_.size(); }
    bool is_zero() const noexcept { return entries_.empty(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    /// Value at `index` (zero when not stored).
    Scalar operator[](std::size_t index) const;
    void set(std::size_t index, const Scalar& value);
    void add(std::size_t index, const Scalar& value);

    std::optional<std::size_t> leading_index() const;
    std::vector<Scalar> to_dense() const;

    /// this += a * x
    void axpy(const Scalar& a, const SparseVector& x);

    SparseVector& operator+=(const SparseVector& other);
    SparseVector& operator-=(const SparseVector& other);
    SparseVector& operator*=(const Scalar& factor);

    friend SparseVector operator+(SparseVector lhs, const SparseVector& rhs) { return lhs += rhs; }
    friend SparseVector operator-(SparseVector lhs, const SparseVector& rhs) { return lhs -= rhs; }
    friend SparseVector operator*(const Scalar& a, SparseVector v) { return v *= a; }
    friend SparseVector operator-(SparseVector v) { return v *= Scalar(-1); }
    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.dimension_ == b.dimension_ && a.entries_ == b.entries_;
    }

    /// Concatenation (used for stacking equation blocks).
    static SparseVector concat(const std::vector<SparseVector>& parts);

private:
    void check_index(std::size_t index) const;

    std::size_t dimension_ = 0;
    std::vector<Entry> entries_;
};

/// Row-major sparse matrix over Q.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
    static SparseMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& columns);
    static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const SparseVector& row(std::size_t r) const { return rows_.at(r); }
    const std::vector<SparseVector>& row_vectors() const noexcept { return rows_; }

    Scalar at(std::size_t r, std::size_t c) const { return rows_.at(r)[c]; }
    void set(std::size_t r, std::size_t c, const Scalar& v) { rows_.at(r).set(c, v); }
    void add(std::size_t r, std::size_t c, const Scalar& v) { rows_.at(r).add(c, v); }

    std::size_t nnz() const;
    SparseVector multiply(const SparseVector& x) const;
    SparseVector column(std::size_t c) const;
    std::vector<SparseVector> columns() const;
    SparseMatrix transpose() const;

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

private:
    std::size_t cols_ = 0;
    std::vector<SparseVector> rows_;
};

} // namespace exl

#endif
