#include "exl/sparse.hpp"

#include "exl/error.hpp"

#include <algorithm>

namespace exl {

SparseVector SparseVector::unit(std::size_t dimension, std::size_t index, const Scalar& value) {
    SparseVector v(dimension);
    v.set(index, value);
    return v;
}

SparseVector SparseVector::from_dense(const std::vector<Scalar>& values) {
    SparseVector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != 0)
            v.entries_.emplace_back(i, values[i]);
    return v;
}

void SparseVector::check_index(std::size_t index) const {
    if (index >= dimension_)
        throw Error("sparse vector index " + std::to_string(index) + " out of range " +
                    std::to_string(dimension_));
}

Scalar SparseVector::operator[](std::size_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == index)
        return it->second;
    return 0;
}

void SparseVector::set(std::size_t index, const Scalar& value) {
    check_index(index);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    bool present = it != entries_.end() && it->first == index;
    if (value == 0) {
        if (present)
            entries_.erase(it);
    } else if (present) {
        it->second = value;
    } else {
        entries_.emplace(it, index, value);
    }
}

void SparseVector::add(std::size_t index, const Scalar& value) {
    if (value == 0)
        return;
    check_index(index);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) {
        it->second += value;
        if (it->second == 0)
            entries_.erase(it);
    } else {
        entries_.emplace(it, index, value);
    }
}

std::optional<std::size_t> SparseVector::leading_index() const {
    if (entries_.empty())
        return std::nullopt;
    return entries_.front().first;
}

std::vector<Scalar> SparseVector::to_dense() const {
    std::vector<Scalar> out(dimension_);
    for (const auto& [i, v] : entries_)
        out[i] = v;
    return out;
}

void SparseVector::axpy(const Scalar& a, const SparseVector& x) {
    if (x.dimension_ != dimension_)
        throw Error("dimension mismatch in axpy");
    if (a == 0 || x.entries_.empty())
        return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + x.entries_.size());
    auto i = entries_.begin();
    auto j = x.entries_.begin();
    while (i != entries_.end() || j != x.entries_.end()) {
        if (j == x.entries_.end() || (i != entries_.end() && i->first < j->first)) {
            merged.push_back(std::move(*i));
            ++i;
        } else if (i == entries_.end() || j->first < i->first) {
            merged.emplace_back(j->first, a * j->second);
            ++j;
        } else {
            Scalar s = i->second + a * j->second;
            if (s != 0)
                merged.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    entries_ = std::move(merged);
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
    axpy(1, other);
    return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
    axpy(-1, other);
    return *this;
}

SparseVector& SparseVector::operator*=(const Scalar& factor) {
    if (factor == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_)
        e.second *= factor;
    return *this;
}

SparseVector SparseVector::concat(const std::vector<SparseVector>& parts) {
    std::size_t total = 0;
    for (const auto& p : parts)
        total += p.dimension();
    SparseVector out(total);
    std::size_t offset = 0;
    for (const auto& p : parts) {
        for (const auto& [i, v] : p.entries_)
            out.entries_.emplace_back(offset + i, v);
        offset += p.dimension();
    }
    return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, SparseVector(cols)) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
    SparseMatrix m;
    m.cols_ = cols;
    for (const auto& r : rows)
        if (r.dimension() != cols)
            throw Error("row dimension mismatch");
    m.rows_ = std::move(rows);
    return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& columns) {
    SparseMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].dimension() != rows)
            throw Error("column dimension mismatch");
        // Appending in column order keeps every row sorted.
        for (const auto& [r, v] : columns[c].entries())
            m.rows_[r].add(c, v);
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<SparseVector> out;
    for (const auto& r : rows) {
        if (r.size() != cols)
            throw Error("ragged dense matrix");
        out.push_back(SparseVector::from_dense(r));
    }
    return from_rows(cols, std::move(out));
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_)
        n += r.nnz();
    return n;
}

SparseVector SparseMatrix::multiply(const SparseVector& x) const {
    if (x.dimension() != cols_)
        throw Error("matrix-vector dimension mismatch");
    SparseVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar acc = 0;
        const auto& a = rows_[r].entries();
        const auto& b = x.entries();
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (i->first < j->first)
                ++i;
            else if (j->first < i->first)
                ++j;
            else {
                acc += i->second * j->second;
                ++i;
                ++j;
            }
        }
        out.set(r, acc);
    }
    return out;
}

SparseVector SparseMatrix::column(std::size_t c) const {
    if (c >= cols_)
        throw Error("column index out of range");
    SparseVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar v = rows_[r][c];
        if (v != 0)
            out.add(r, v);
    }
    return out;
}

std::vector<SparseVector> SparseMatrix::columns() const {
    return transpose().rows_;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r].entries())
            t.rows_[c].add(r, v);
    return t;
}

} // namespace exl
