#include "exl/algebra.hpp"

#include "exl/error.hpp"
#include "exl/linear.hpp"

#include <variant>

namespace exl {

namespace {

// "E11", or "E11+2*E22" for a non-basis combination.
std::string combination_label(const std::vector<std::string>& labels, const Element& v) {
    if (v.nnz() == 1 && v.entries().front().second == 1)
        return labels[v.entries().front().first];
    std::string out;
    for (const auto& [i, c] : v.entries()) {
        if (!out.empty() && c > 0)
            out += "+";
        if (c == -1)
            out += "-";
        else if (c != 1)
            out += to_string(c) + "*";
        out += labels[i];
    }
    return out.empty() ? "0" : out;
}

} // namespace

Algebra::Algebra(std::vector<std::string> basis_labels)
    : labels_(std::move(basis_labels)),
      table_(labels_.size() * labels_.size(), SparseVector(labels_.size())) {}

const SparseVector& Algebra::product(std::size_t i, std::size_t j) const {
    if (i >= dimension() || j >= dimension())
        throw Error("basis index out of range in product");
    return table_[i * dimension() + j];
}

void Algebra::set_product(std::size_t i, std::size_t j, SparseVector value) {
    if (i >= dimension() || j >= dimension())
        throw Error("basis index out of range in set_product");
    if (value.dimension() != dimension())
        throw Error("product vector has wrong dimension");
    table_[i * dimension() + j] = std::move(value);
}

Element Algebra::multiply(const Element& x, const Element& y) const {
    if (x.dimension() != dimension() || y.dimension() != dimension())
        throw Error("multiply: element dimension mismatch");
    Element out(dimension());
    for (const auto& [i, a] : x.entries())
        for (const auto& [j, b] : y.entries())
            out.axpy(a * b, product(i, j));
    return out;
}

std::optional<AssociativityFailure> validate_algebra(const Algebra& a) {
    const auto n = a.dimension();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& ij = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Element left(n);
                for (const auto& [m, c] : ij.entries())
                    left.axpy(c, a.product(m, k));
                Element right = a.multiply(a.basis_element(i), a.product(j, k));
                if (left != right)
                    return AssociativityFailure{i, j, k};
            }
        }
    return std::nullopt;
}

Algebra opposite_algebra(const Algebra& a) {
    Algebra op(a.labels());
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t j = 0; j < a.dimension(); ++j)
            op.set_product(i, j, a.product(j, i));
    return op;
}

std::string IdealViolation::describe() const {
    switch (kind) {
    case Kind::bad_dimension:
        return "ideal basis vector " + std::to_string(ideal_index) + " has the wrong dimension";
    case Kind::dependent_basis:
        return "ideal basis vector " + std::to_string(ideal_index) + " is linearly dependent on earlier ones";
    case Kind::not_two_sided:
        return std::string(left_product ? "a*x" : "x*a") + " with parent basis element " +
               std::to_string(parent_index) + " and ideal vector " + std::to_string(ideal_index) +
               " leaves the ideal";
    }
    return {};
}

std::optional<IdealViolation> validate_ideal(const Ideal& ideal) {
    const auto& a = ideal.parent;
    EchelonBasis span(a.dimension());
    for (std::size_t x = 0; x < ideal.basis_vectors.size(); ++x) {
        const auto& v = ideal.basis_vectors[x];
        if (v.dimension() != a.dimension())
            return IdealViolation{IdealViolation::Kind::bad_dimension, 0, x, false, {}};
        if (!span.insert(v))
            return IdealViolation{IdealViolation::Kind::dependent_basis, 0, x, false, {}};
    }
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        auto e = a.basis_element(i);
        for (std::size_t x = 0; x < ideal.basis_vectors.size(); ++x) {
            const auto& v = ideal.basis_vectors[x];
            auto left = a.multiply(e, v);
            if (!span.contains(left))
                return IdealViolation{IdealViolation::Kind::not_two_sided, i, x, true, left};
            auto right = a.multiply(v, e);
            if (!span.contains(right))
                return IdealViolation{IdealViolation::Kind::not_two_sided, i, x, false, right};
        }
    }
    return std::nullopt;
}

bool SplitBasis::in_ideal(const Element& split_coords) const {
    if (split_coords.dimension() != dimension())
        throw Error("in_ideal: dimension mismatch");
    return split_coords.is_zero() || split_coords.entries().back().first < ideal_count_;
}

Element SplitBasis::to_split(const Element& parent_coords) const {
    return inverse_.multiply(parent_coords);
}

Element SplitBasis::to_parent(const Element& split_coords) const {
    if (split_coords.dimension() != dimension())
        throw Error("to_parent: dimension mismatch");
    Element out(dimension());
    for (const auto& [i, c] : split_coords.entries())
        out.axpy(c, basis_[i]);
    return out;
}

SplitBasis make_split_basis(const Ideal& ideal, const std::optional<std::vector<Element>>& complement_hint) {
    if (auto bad = validate_algebra(ideal.parent))
        throw Error("algebra is not associative at (" + std::to_string(bad->i) + "," +
                    std::to_string(bad->j) + "," + std::to_string(bad->k) + ")");
    if (auto bad = validate_ideal(ideal))
        throw Error("invalid ideal: " + bad->describe());

    const auto n = ideal.parent.dimension();
    SplitBasis s;
    s.ideal_ = ideal;
    s.basis_ = ideal.basis_vectors;
    s.ideal_count_ = ideal.basis_vectors.size();

    EchelonBasis span(n);
    for (const auto& v : s.basis_)
        span.insert(v);
    if (complement_hint) {
        for (const auto& h : *complement_hint) {
            if (h.dimension() != n)
                throw Error("complement hint vector has the wrong dimension");
            if (!span.insert(h))
                throw Error("complement hint vector is dependent on the ideal or earlier hints");
            s.basis_.push_back(h);
        }
        if (s.basis_.size() != n)
            throw Error("complement hint does not complete the ideal to a basis");
    } else {
        for (std::size_t i = 0; i < n && s.basis_.size() < n; ++i) {
            auto e = Element::unit(n, i);
            if (span.insert(e))
                s.basis_.push_back(std::move(e));
        }
    }

    auto basis_matrix = SparseMatrix::from_columns(n, s.basis_);
    std::vector<SparseVector> inverse_columns;
    for (std::size_t i = 0; i < n; ++i) {
        auto x = solve(basis_matrix, Element::unit(n, i));
        inverse_columns.push_back(std::get<SparseVector>(x));
    }
    s.inverse_ = SparseMatrix::from_columns(n, inverse_columns);

    std::vector<std::string> labels;
    for (const auto& v : s.basis_)
        labels.push_back(combination_label(ideal.parent.labels(), v));
    s.adapted_ = Algebra(labels);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s.adapted_.set_product(i, j, s.to_split(ideal.parent.multiply(s.basis_[i], s.basis_[j])));

    const auto k = s.ideal_count_;
    s.ideal_algebra_ = Algebra(std::vector<std::string>(labels.begin(), labels.begin() + k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const auto& p = s.adapted_.product(i, j);
            SparseVector r(k);
            for (const auto& [m, c] : p.entries()) {
                if (m >= k)
                    throw Error("ideal is not closed under multiplication");
                r.add(m, c);
            }
            s.ideal_algebra_.set_product(i, j, std::move(r));
        }
    return s;
}

Element QuotientAlgebra::project(const Element& parent_coords) const {
    auto split_coords = split.to_split(parent_coords);
    const auto k = split.ideal_count();
    Element out(algebra.dimension());
    for (const auto& [i, c] : split_coords.entries())
        if (i >= k)
            out.add(i - k, c);
    return out;
}

QuotientAlgebra quotient(const SplitBasis& split) {
    QuotientAlgebra q;
    q.source = split.parent();
    q.split = split;
    const auto n = split.dimension();
    const auto k = split.ideal_count();
    const auto& labels = split.adapted().labels();
    q.algebra = Algebra(std::vector<std::string>(labels.begin() + k, labels.end()));
    for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j) {
            Element r(n - k);
            for (const auto& [m, c] : split.adapted().product(i, j).entries())
                if (m >= k)
                    r.add(m - k, c);
            q.algebra.set_product(i - k, j - k, std::move(r));
        }

    const auto& a = q.source;
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t j = 0; j < a.dimension(); ++j) {
            auto lhs = q.project(a.product(i, j));
            auto rhs = q.algebra.multiply(q.project(a.basis_element(i)), q.project(a.basis_element(j)));
            if (lhs != rhs)
                throw Error("projection to the quotient is not multiplicative at (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
        }
    return q;
}

} // namespace exl
