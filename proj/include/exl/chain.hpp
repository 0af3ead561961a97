#ifndef EXL_CHAIN_HPP
#define EXL_CHAIN_HPP

#include "exl/algebra.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace exl {

/// Slot indices f_0, ..., f_n of a pure tensor in the standard tensor basis.
using TensorIndex = std::vector<std::uint32_t>;

/// Sparse element of C_n(A) = A^{(n+1)} over the standard tensor basis of a
/// SplitBasis. The chain does not own its context: operations take the
/// algebra or split they are evaluated in.
class Chain {
public:
    using Terms = std::map<TensorIndex, Scalar>;

    Chain() = default;
    explicit Chain(int degree);

    static Chain pure(TensorIndex slots, const Scalar& coeff = 1);

    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Scalar coefficient(const TensorIndex& slots) const;
    void add(const TensorIndex& slots, const Scalar& coeff);

    Chain& operator+=(const Chain& other);
    Chain& operator-=(const Chain& other);
    Chain& operator*=(const Scalar& factor);

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator-(Chain a) { return a *= Scalar(-1); }
    friend Chain operator*(const Scalar& s, Chain a) { return a *= s; }
    friend bool operator==(const Chain& a, const Chain& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    void check_degree(const Chain& other) const;

    int degree_ = 0;
    Terms terms_;
};

/// Adds coeff * (slots[0] (x) ... (x) slots[n]) expanded multilinearly.
void add_tensor_product(Chain& into, std::span<const Element> slots, const Scalar& coeff = 1);
Chain tensor_product(std::span<const Element> slots, const Scalar& coeff = 1);

/// Hochschild differential. Rejects degree 0.
Chain boundary_b(const Algebra& a, const Chain& c);
/// Bar differential b' (b without the wrap-around term). Rejects degree 0.
Chain bar_boundary(const Algebra& a, const Chain& c);
/// t(f_0 (x) ... (x) f_n) = (-1)^n f_n (x) f_0 (x) ... (x) f_{n-1}.
Chain cyclic_t(const Chain& c);

/// Lexicographically least signed rotation of a pure tensor. `vanishes` is
/// set when two rotations coincide with opposite signs, i.e. the tensor is
/// zero in the coinvariants.
struct CanonicalRotation {
    TensorIndex slots;
    int sign = 1;
    bool vanishes = false;
};
CanonicalRotation canonical_rotation(const TensorIndex& slots);

/// Chain in canonical form modulo image(1 - t): every stored index tuple is
/// its own canonical rotation. Two chains are equal in CC_n iff their
/// canonical forms compare equal.
class CyclicChain {
public:
    CyclicChain() = default;

    const Chain& chain() const noexcept { return chain_; }
    int degree() const noexcept { return chain_.degree(); }
    bool is_zero() const noexcept { return chain_.is_zero(); }

    friend bool operator==(const CyclicChain&, const CyclicChain&) = default;

private:
    friend CyclicChain canonicalize_cyclic(const Chain& c);
    Chain chain_;
};

CyclicChain canonicalize_cyclic(const Chain& c);

/// Least p with c in F_p C_n(A): slots 0..n-p in I for every stored tuple.
int filtration_level(const SplitBasis& split, const Chain& c);
/// Least p with c in the cyclic filtration: n-p+1 cyclically successive
/// slots in I for every stored tuple.
int cyclic_filtration_level(const SplitBasis& split, const Chain& c);
/// Every stored tuple has at least one ideal slot, i.e. c lies in C_n(A,I).
bool relative_membership(const SplitBasis& split, const Chain& c);
/// Every slot of every tuple is in I, i.e. c lies in C_n(I).
bool in_ideal_chains(const SplitBasis& split, const Chain& c);

} // namespace exl

#endif
