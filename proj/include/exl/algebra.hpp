#ifndef EXL_ALGEBRA_HPP
#define EXL_ALGEBRA_HPP

#include "exl/sparse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace exl {

/// An element of an algebra, in coordinates of some fixed basis.
using Element = SparseVector;

/// Finite-dimensional associative (not necessarily unital) algebra over Q,
/// given by structure constants: product(i, j) holds the coordinates of the
/// product of basis elements i and j.
class Algebra {
public:
    Algebra() = default;
    /// All products zero.
    explicit Algebra(std::vector<std::string> basis_labels);

    std::size_t dimension() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    const SparseVector& product(std::size_t i, std::size_t j) const;
    void set_product(std::size_t i, std::size_t j, SparseVector value);

    Element basis_element(std::size_t i) const { return Element::unit(dimension(), i); }
    Element zero() const { return Element(dimension()); }
    Element multiply(const Element& x, const Element& y) const;

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<SparseVector> table_;
};

struct AssociativityFailure {
    std::size_t i, j, k; ///< (e_i e_j) e_k != e_i (e_j e_k)
};

/// Checks all dimension^3 associativity identities; reports the first
/// failing triple in lexicographic order.
std::optional<AssociativityFailure> validate_algebra(const Algebra& a);

/// Transposed structure constants. Involutive.
Algebra opposite_algebra(const Algebra& a);

/// Two-sided ideal, spanned by `basis_vectors` (coordinates in the parent).
struct Ideal {
    Algebra parent;
    std::vector<Element> basis_vectors;
};

struct IdealViolation {
    enum class Kind { dependent_basis, not_two_sided, bad_dimension };
    Kind kind;
    std::size_t parent_index = 0; ///< parent basis element a
    std::size_t ideal_index = 0;  ///< ideal basis vector x
    bool left_product = false;    ///< true: a*x escaped, false: x*a escaped
    Element product;              ///< the escaping product
    std::string describe() const;
};

/// Checks linear independence and two-sidedness of the ideal basis.
std::optional<IdealViolation> validate_ideal(const Ideal& ideal);

/// A basis B = B_I followed by lifts of a basis of A/I, together with the
/// algebra's structure constants re-expressed in B. Every tensor index in a
/// Chain refers to positions in `ordered_basis()`; positions below
/// `ideal_count()` are the ideal's basis.
class SplitBasis {
public:
    SplitBasis() = default;

    const Ideal& ideal() const noexcept { return ideal_; }
    const Algebra& parent() const noexcept { return ideal_.parent; }
    const std::vector<Element>& ordered_basis() const noexcept { return basis_; }
    std::size_t ideal_count() const noexcept { return ideal_count_; }
    std::size_t dimension() const noexcept { return basis_.size(); }

    /// Structure constants in the ordered basis.
    const Algebra& adapted() const noexcept { return adapted_; }
    /// The ideal as an algebra in its own right (first ideal_count indices).
    const Algebra& ideal_algebra() const noexcept { return ideal_algebra_; }

    bool is_ideal_index(std::size_t i) const noexcept { return i < ideal_count_; }
    /// True when the element (split coordinates) lies in I.
    bool in_ideal(const Element& split_coords) const;

    Element to_split(const Element& parent_coords) const;
    Element to_parent(const Element& split_coords) const;

private:
    friend SplitBasis make_split_basis(const Ideal&, const std::optional<std::vector<Element>>&);

    Ideal ideal_;
    std::vector<Element> basis_;
    std::size_t ideal_count_ = 0;
    SparseMatrix inverse_; // parent coords -> split coords
    Algebra adapted_;
    Algebra ideal_algebra_;
};

/// Completes the ideal basis to a basis of A. Without a hint, the first
/// standard coordinate vectors that raise the rank are appended.
/// Throws exl::Error if the ideal is invalid or the hint is not complementary.
SplitBasis make_split_basis(const Ideal& ideal,
                            const std::optional<std::vector<Element>>& complement_hint = std::nullopt);

struct QuotientAlgebra {
    Algebra source;
    SplitBasis split;
    Algebra algebra; ///< A/I in the basis of complement images

    /// Image of a parent-coordinate element in A/I.
    Element project(const Element& parent_coords) const;
};

/// A/I; the multiplicativity of the projection is checked on all basis pairs.
QuotientAlgebra quotient(const SplitBasis& split);

} // namespace exl

#endif
