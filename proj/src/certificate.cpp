#include "exl/certificate.hpp"

#include <algorithm>

namespace exl {

namespace {

// Straight from the formula: sum_{i<n} (-1)^i (.. f_i f_{i+1} ..) plus
// (-1)^n f_n f_0 (x) f_1 ... f_{n-1}; bar drops the last term.
Chain expand_boundary(const Algebra& a, const Chain& c, bool wrap) {
    const int n = c.degree();
    Chain out(n > 0 ? n - 1 : 0);
    if (n == 0)
        return out;
    for (const auto& [t, coeff] : c.terms()) {
        for (int i = 0; i <= n; ++i) {
            if (i == n && !wrap)
                break;
            std::uint32_t left = i < n ? t[static_cast<std::size_t>(i)] : t.back();
            std::uint32_t right = i < n ? t[static_cast<std::size_t>(i) + 1] : t.front();
            Scalar sign = i % 2 == 0 ? 1 : -1;
            for (const auto& [m, v] : a.product(left, right).entries()) {
                TensorIndex r;
                if (i < n) {
                    for (int s = 0; s < i; ++s)
                        r.push_back(t[static_cast<std::size_t>(s)]);
                    r.push_back(static_cast<std::uint32_t>(m));
                    for (int s = i + 2; s <= n; ++s)
                        r.push_back(t[static_cast<std::size_t>(s)]);
                } else {
                    r.push_back(static_cast<std::uint32_t>(m));
                    for (int s = 1; s < n; ++s)
                        r.push_back(t[static_cast<std::size_t>(s)]);
                }
                out.add(r, sign * coeff * v);
            }
        }
    }
    return out;
}

// Normal form modulo image(1 - t), computed by walking the orbit with t
// itself: each step moves the last slot to the front with sign (-1)^n.
Chain orbit_normal_form(const Chain& c) {
    const int n = c.degree();
    Chain out(n);
    for (const auto& [t, coeff] : c.terms()) {
        TensorIndex current = t;
        int sign = 1;
        TensorIndex best = t;
        int best_sign = 1;
        bool killed = false;
        for (int step = 0; step < n; ++step) {
            std::rotate(current.begin(), current.end() - 1, current.end());
            if (n % 2 == 1)
                sign = -sign;
            if (current < best) {
                best = current;
                best_sign = sign;
                killed = false;
            } else if (current == best && sign != best_sign) {
                killed = true;
            }
        }
        if (!killed)
            out.add(best, best_sign * coeff);
    }
    return out;
}

bool all_slots(const SplitBasis& split, const Chain& c, bool need_all) {
    for (const auto& [t, coeff] : c.terms()) {
        auto count = std::count_if(t.begin(), t.end(), [&](auto i) { return i < split.ideal_count(); });
        if (need_all ? count != static_cast<std::ptrdiff_t>(t.size()) : count == 0)
            return false;
    }
    return true;
}

bool in_space(const SplitBasis& split, const Chain& c, ChainSpace space) {
    for (const auto& [t, coeff] : c.terms())
        for (auto i : t)
            if (i >= split.dimension())
                return false;
    switch (space) {
    case ChainSpace::ambient: return true;
    case ChainSpace::ideal: return all_slots(split, c, true);
    case ChainSpace::relative: return all_slots(split, c, false);
    }
    return false;
}

Verdict fail(std::string reason, Chain residual = {}) {
    return Verdict{Mismatch{std::move(reason), std::move(residual)}};
}

Chain prefix(const Element& e, const Chain& c) {
    Chain out(c.degree() + 1);
    for (const auto& [t, coeff] : c.terms())
        for (const auto& [i, v] : e.entries()) {
            TensorIndex r{static_cast<std::uint32_t>(i)};
            r.insert(r.end(), t.begin(), t.end());
            out.add(r, coeff * v);
        }
    return out;
}

} // namespace

Verdict verify_certificate(const SplitBasis& split, const BoundaryCertificate& cert) {
    const auto& a = split.adapted();
    const int n = std::max(cert.lhs.degree(), cert.rhs.degree());
    if (cert.witness.degree() != n + 1 && !cert.witness.is_zero())
        return fail("witness degree is not n + 1");
    for (const auto* c : {&cert.lhs, &cert.rhs, &cert.witness})
        if (!in_space(split, *c, cert.space))
            return fail("a chain leaves the " + to_string(cert.space) + " chain group");
    Chain witness = cert.witness.is_zero() ? Chain(n + 1) : cert.witness;
    Chain db = expand_boundary(a, witness, cert.kind != ComplexKind::bar);
    Chain residual = (cert.lhs - cert.rhs) - db;
    if (cert.kind == ComplexKind::cyclic)
        residual = orbit_normal_form(residual);
    if (!residual.is_zero())
        return fail("lhs - rhs - b(witness) does not vanish", residual);
    return {};
}

Verdict verify_certificate(const SplitBasis& split, const DescentCertificate& cert) {
    const auto& a = split.adapted();
    const int n = cert.input.degree();
    if (n < 1)
        return fail("descent certificate of degree 0");
    if (cert.unit.dimension() != split.dimension() || !std::all_of(cert.unit.entries().begin(), cert.unit.entries().end(),
                                                                    [&](const auto& e) { return e.first < split.ideal_count(); }))
        return fail("unit does not lie in the ideal");
    if (!(cert.defect - prefix(cert.unit, expand_boundary(a, cert.input, true))).is_zero())
        return fail("recorded defect is not e (x) b(phi)");
    Chain homotopy = cert.homotopy.is_zero() ? Chain(n + 1) : cert.homotopy;
    Chain residual = cert.input - cert.output - expand_boundary(a, homotopy, true) - cert.defect;
    if (!residual.is_zero())
        return fail("phi - phi' - b(G) - e (x) b(phi) does not vanish", residual);
    return {};
}

Verdict verify_certificate(const SplitBasis& split, const InverseResult& result) {
    const auto& a = split.adapted();
    const int n = result.input.degree();
    if (!all_slots(split, result.output, true))
        return fail("psi has a slot outside the ideal");
    if (result.mode == InverseMode::closed_formula && result.output != result.formula_output)
        return fail("closed-formula result does not report the formula output", result.output - result.formula_output);
    if (result.schedule.units.size() != static_cast<std::size_t>(n) ||
        result.schedule.targets.size() != static_cast<std::size_t>(n))
        return fail("unit schedule has the wrong length");
    for (std::size_t i = 0; i < result.schedule.units.size(); ++i) {
        const auto& e = result.schedule.units[i];
        if (!std::all_of(e.entries().begin(), e.entries().end(),
                         [&](const auto& x) { return x.first < split.ideal_count(); }))
            return fail("schedule unit e_" + std::to_string(i + 1) + " is outside the ideal");
        for (const auto& s : result.schedule.targets[i])
            if (a.multiply(e, s) != s)
                return fail("schedule unit e_" + std::to_string(i + 1) + " is not a left unit for a target");
    }
    if (n >= 1) {
        auto db = orbit_normal_form(expand_boundary(a, result.output, true));
        if (!db.is_zero())
            return fail("psi is not a cycle in CC_n(I)", db);
    }
    const auto& cert = result.certificate;
    if (cert.kind != ComplexKind::cyclic || cert.space != ChainSpace::relative)
        return fail("certificate is not a relative cyclic certificate");
    if (cert.lhs != result.output || cert.rhs != result.input)
        return fail("certificate does not claim rho(psi) == phi");
    return verify_certificate(split, cert);
}

} // namespace exl
