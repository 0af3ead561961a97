#include "exl/chain.hpp"

#include "exl/error.hpp"

#include <algorithm>

namespace exl {

Chain::Chain(int degree) : degree_(degree) {
    if (degree < 0)
        throw Error("chain degree must be non-negative");
}

Chain Chain::pure(TensorIndex slots, const Scalar& coeff) {
    if (slots.empty())
        throw Error("a pure tensor needs at least one slot");
    Chain c(static_cast<int>(slots.size()) - 1);
    c.add(slots, coeff);
    return c;
}

Scalar Chain::coefficient(const TensorIndex& slots) const {
    auto it = terms_.find(slots);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Chain::add(const TensorIndex& slots, const Scalar& coeff) {
    if (slots.size() != static_cast<std::size_t>(degree_) + 1)
        throw Error("tensor has " + std::to_string(slots.size()) + " slots, chain degree is " +
                    std::to_string(degree_));
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(slots, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Chain::check_degree(const Chain& other) const {
    if (other.degree_ != degree_ && !other.is_zero())
        throw Error("adding chains of degree " + std::to_string(degree_) + " and " +
                    std::to_string(other.degree_));
}

Chain& Chain::operator+=(const Chain& other) {
    if (is_zero() && other.degree_ != degree_) {
        *this = other;
        return *this;
    }
    check_degree(other);
    for (const auto& [k, v] : other.terms_)
        add(k, v);
    return *this;
}

Chain& Chain::operator-=(const Chain& other) {
    if (is_zero() && other.degree_ != degree_) {
        *this = -Chain(other);
        return *this;
    }
    check_degree(other);
    for (const auto& [k, v] : other.terms_)
        add(k, -v);
    return *this;
}

Chain& Chain::operator*=(const Scalar& factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= factor;
    return *this;
}

void add_tensor_product(Chain& into, std::span<const Element> slots, const Scalar& coeff) {
    if (slots.size() != static_cast<std::size_t>(into.degree()) + 1)
        throw Error("tensor_product: slot count does not match chain degree");
    if (coeff == 0)
        return;
    for (const auto& s : slots)
        if (s.is_zero())
            return;
    TensorIndex idx(slots.size());
    // Odometer over the supports of the slots.
    std::vector<std::size_t> pos(slots.size(), 0);
    while (true) {
        Scalar c = coeff;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            const auto& [index, value] = slots[i].entries()[pos[i]];
            idx[i] = static_cast<std::uint32_t>(index);
            c *= value;
        }
        into.add(idx, c);
        std::size_t i = slots.size();
        while (i > 0) {
            --i;
            if (++pos[i] < slots[i].nnz())
                break;
            pos[i] = 0;
            if (i == 0)
                return;
        }
    }
}

Chain tensor_product(std::span<const Element> slots, const Scalar& coeff) {
    if (slots.empty())
        throw Error("tensor_product needs at least one slot");
    Chain c(static_cast<int>(slots.size()) - 1);
    add_tensor_product(c, slots, coeff);
    return c;
}

namespace {

// Adds sign * (tuple with slots i, i+1 merged through the product).
void add_merged(const Algebra& a, Chain& out, const TensorIndex& t, std::size_t i, const Scalar& coeff) {
    TensorIndex merged;
    merged.reserve(t.size() - 1);
    merged.insert(merged.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
    merged.push_back(0);
    merged.insert(merged.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 2, t.end());
    for (const auto& [m, c] : a.product(t[i], t[i + 1]).entries()) {
        merged[i] = static_cast<std::uint32_t>(m);
        out.add(merged, coeff * c);
    }
}

Chain differential(const Algebra& a, const Chain& c, bool wrap_around) {
    const int n = c.degree();
    if (n < 1)
        throw Error("boundary of a degree-0 chain is not defined");
    Chain out(n - 1);
    for (const auto& [t, coeff] : c.terms()) {
        for (int i = 0; i < n; ++i)
            add_merged(a, out, t, static_cast<std::size_t>(i), i % 2 == 0 ? coeff : Scalar(-coeff));
        if (wrap_around) {
            // (-1)^n f_n f_0 (x) f_1 (x) ... (x) f_{n-1}
            TensorIndex rotated(t.size());
            rotated[0] = t.back();
            std::copy(t.begin(), t.end() - 1, rotated.begin() + 1);
            add_merged(a, out, rotated, 0, n % 2 == 0 ? coeff : Scalar(-coeff));
        }
    }
    return out;
}

} // namespace

Chain boundary_b(const Algebra& a, const Chain& c) { return differential(a, c, true); }

Chain bar_boundary(const Algebra& a, const Chain& c) { return differential(a, c, false); }

Chain cyclic_t(const Chain& c) {
    const int n = c.degree();
    Chain out(n);
    for (const auto& [t, coeff] : c.terms()) {
        TensorIndex r(t.size());
        r[0] = t.back();
        std::copy(t.begin(), t.end() - 1, r.begin() + 1);
        out.add(r, n % 2 == 0 ? coeff : Scalar(-coeff));
    }
    return out;
}

CanonicalRotation canonical_rotation(const TensorIndex& slots) {
    const std::size_t m = slots.size();
    const std::size_t n = m - 1;
    CanonicalRotation best{slots, 1, false};
    TensorIndex r(m);
    // t^j moves the last j slots to the front with sign (-1)^{n j}.
    for (std::size_t j = 1; j < m; ++j) {
        for (std::size_t i = 0; i < m; ++i)
            r[i] = slots[(i + m - j) % m];
        int sign = (n * j) % 2 == 0 ? 1 : -1;
        if (r < best.slots) {
            best.slots = r;
            best.sign = sign;
            best.vanishes = false;
        } else if (r == best.slots && sign != best.sign) {
            best.vanishes = true;
        }
    }
    return best;
}

CyclicChain canonicalize_cyclic(const Chain& c) {
    CyclicChain out;
    out.chain_ = Chain(c.degree());
    for (const auto& [t, coeff] : c.terms()) {
        auto rot = canonical_rotation(t);
        if (rot.vanishes)
            continue;
        out.chain_.add(rot.slots, rot.sign > 0 ? coeff : Scalar(-coeff));
    }
    return out;
}

int filtration_level(const SplitBasis& split, const Chain& c) {
    const int n = c.degree();
    int level = 0;
    for (const auto& [t, coeff] : c.terms()) {
        int leading = 0;
        while (leading <= n && split.is_ideal_index(t[static_cast<std::size_t>(leading)]))
            ++leading;
        level = std::max(level, n + 1 - leading);
    }
    return level;
}

int cyclic_filtration_level(const SplitBasis& split, const Chain& c) {
    const int n = c.degree();
    const int m = n + 1;
    int level = 0;
    for (const auto& [t, coeff] : c.terms()) {
        int longest = 0;
        int run = 0;
        // Two passes around the cycle catch runs that wrap past slot n.
        for (int i = 0; i < 2 * m; ++i) {
            run = split.is_ideal_index(t[static_cast<std::size_t>(i % m)]) ? run + 1 : 0;
            longest = std::max(longest, std::min(run, m));
        }
        level = std::max(level, m - longest);
    }
    return level;
}

bool relative_membership(const SplitBasis& split, const Chain& c) {
    for (const auto& [t, coeff] : c.terms())
        if (std::none_of(t.begin(), t.end(), [&](auto i) { return split.is_ideal_index(i); }))
            return false;
    return true;
}

bool in_ideal_chains(const SplitBasis& split, const Chain& c) {
    for (const auto& [t, coeff] : c.terms())
        if (!std::all_of(t.begin(), t.end(), [&](auto i) { return split.is_ideal_index(i); }))
            return false;
    return true;
}

} // namespace exl
