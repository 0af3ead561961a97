#include "exl/excision.hpp"

#include "exl/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace exl {

namespace {

std::vector<Element> slot_elements(const Algebra& a, const TensorIndex& t) {
    std::vector<Element> out;
    out.reserve(t.size());
    for (auto i : t)
        out.push_back(a.basis_element(i));
    return out;
}

std::string dump_system(const SparseMatrix& m, const SparseVector& rhs) {
    std::ostringstream os;
    os << "system " << m.rows() << " x " << m.cols() << " (" << m.nnz() << " nonzeros)\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << "  row " << r << ":";
        for (const auto& [c, v] : m.row(r).entries())
            os << " [" << c << "]=" << to_string(v);
        os << " | " << to_string(rhs[r]) << "\n";
    }
    return os.str();
}

void require_split_element(const SplitBasis& split, const Element& e) {
    if (e.dimension() != split.dimension())
        throw Error("unit has the wrong dimension");
    if (!split.in_ideal(e))
        throw Error("unit does not lie in the ideal");
}

} // namespace

Chain rho(const SplitBasis& split, const Chain& c) {
    if (!in_ideal_chains(split, c))
        throw Error("rho: chain has a slot outside the ideal");
    return c;
}

CyclicChain rho(const SplitBasis& split, const CyclicChain& c) {
    rho(split, c.chain());
    return c;
}

Chain rotate_to_ideal_initial(const SplitBasis& split, const Chain& c) {
    const int n = c.degree();
    const std::size_t m = static_cast<std::size_t>(n) + 1;
    Chain out(n);
    for (const auto& [t, coeff] : c.terms()) {
        auto first = std::find_if(t.begin(), t.end(), [&](auto i) { return split.is_ideal_index(i); });
        if (first == t.end())
            throw Error("rotate_to_ideal_initial: a term has no ideal slot (not a relative chain)");
        auto j = static_cast<std::size_t>(first - t.begin());
        if (j == 0) {
            out.add(t, coeff);
            continue;
        }
        // t^{m-j} brings slot j to the front; sign (-1)^{n (m-j)}.
        std::size_t power = m - j;
        TensorIndex r(t.begin() + static_cast<std::ptrdiff_t>(j), t.end());
        r.insert(r.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(j));
        bool odd = (static_cast<std::size_t>(n) * power) % 2 == 1;
        out.add(r, odd ? Scalar(-coeff) : coeff);
    }
    return out;
}

Chain prepend(const Element& e, const Chain& c) {
    Chain out(c.degree() + 1);
    TensorIndex idx;
    for (const auto& [t, coeff] : c.terms()) {
        idx.assign(1, 0);
        idx.insert(idx.end(), t.begin(), t.end());
        for (const auto& [i, v] : e.entries()) {
            idx[0] = static_cast<std::uint32_t>(i);
            out.add(idx, v * coeff);
        }
    }
    return out;
}

Chain act_on_initial_slot(const Algebra& a, const Element& e, const Chain& c) {
    Chain out(c.degree());
    TensorIndex idx;
    for (const auto& [t, coeff] : c.terms()) {
        auto head = a.multiply(e, a.basis_element(t[0]));
        idx = t;
        for (const auto& [i, v] : head.entries()) {
            idx[0] = static_cast<std::uint32_t>(i);
            out.add(idx, v * coeff);
        }
    }
    return out;
}

std::variant<Element, NoLocalUnit> initial_slot_unit(const SplitBasis& split, const Chain& c) {
    std::set<std::uint32_t> heads;
    for (const auto& [t, coeff] : c.terms())
        heads.insert(t[0]);
    std::vector<Element> targets;
    for (auto h : heads)
        targets.push_back(split.adapted().basis_element(h));
    return find_local_left_unit(split, targets);
}

DescentCertificate descent_step(const SplitBasis& split, const Chain& phi, const Element& e) {
    const int n = phi.degree();
    if (n < 1)
        throw Error("descent_step needs degree >= 1");
    require_split_element(split, e);
    if (filtration_level(split, phi) > n)
        throw Error("descent_step: some initial slot is outside the ideal (input not in F_n)");
    const auto& a = split.adapted();
    auto residual = act_on_initial_slot(a, e, phi) - phi;
    if (!residual.is_zero())
        throw DescentPreconditionError("descent_step: unit is not a left unit on the initial slots", residual);

    DescentCertificate cert;
    cert.input = phi;
    cert.unit = e;
    cert.output = Chain(n);
    cert.homotopy = prepend(e, phi);
    cert.defect = prepend(e, boundary_b(a, phi));

    const Scalar step_sign = n % 2 == 1 ? 1 : -1; // (-1)^{n+1}
    std::vector<Element> slots;
    for (const auto& [t, coeff] : phi.terms()) {
        auto f = slot_elements(a, t);
        const Element& last = f.back();
        // e (x) f_n f_0 (x) f_1 ... f_{n-1}
        slots.assign(1, e);
        slots.push_back(a.multiply(last, f.front()));
        slots.insert(slots.end(), f.begin() + 1, f.end() - 1);
        add_tensor_product(cert.output, slots, step_sign * coeff);
        // f_n e (x) f_0 (x) ... f_{n-1}
        slots.assign(1, a.multiply(last, e));
        slots.insert(slots.end(), f.begin(), f.end() - 1);
        add_tensor_product(cert.output, slots, -step_sign * coeff);
    }
    return cert;
}

std::vector<DescentCertificate> iterated_descent(const SplitBasis& split, const Chain& phi,
                                                 const UnitSchedule& schedule) {
    if (static_cast<int>(schedule.degree()) != phi.degree())
        throw Error("iterated_descent: schedule length does not match the degree");
    std::vector<DescentCertificate> steps;
    Chain current = phi;
    for (std::size_t i = schedule.degree(); i >= 1; --i) {
        steps.push_back(descent_step(split, current, schedule.unit(i)));
        current = steps.back().output;
    }
    return steps;
}

BoundaryCertificate concatenate_descents(const std::vector<DescentCertificate>& steps) {
    if (steps.empty())
        throw Error("concatenate_descents: no steps");
    BoundaryCertificate cert;
    cert.kind = ComplexKind::hochschild;
    cert.space = ChainSpace::relative;
    cert.lhs = steps.front().input;
    cert.rhs = steps.back().output;
    cert.witness = Chain(cert.lhs.degree() + 1);
    for (const auto& s : steps) {
        if (!s.defect.is_zero())
            throw Error("concatenate_descents: input is not a strict cycle");
        cert.witness += s.homotopy;
    }
    return cert;
}

Chain explicit_inverse(const SplitBasis& split, const Chain& phi, const UnitSchedule& schedule) {
    const int n = phi.degree();
    if (static_cast<int>(schedule.degree()) != n)
        throw Error("explicit_inverse: schedule length does not match the degree");
    const auto& a = split.adapted();
    auto mul = [&a](const Element& x, const Element& y) { return a.multiply(x, y); };
    Chain psi(n);
    for (const auto& [t, coeff] : phi.terms()) {
        auto terms = explicit_inverse_terms(slot_elements(a, t), schedule.units, mul);
        for (const auto& term : terms)
            add_tensor_product(psi, term.slots, term.sign > 0 ? coeff : Scalar(-coeff));
    }
    return psi;
}

std::variant<BoundaryCertificate, Unsolvable> find_boundary_certificate(const SplitBasis& split, ComplexKind kind,
                                                                        ChainSpace space, const Chain& lhs,
                                                                        const Chain& rhs) {
    const int n = std::max(lhs.degree(), rhs.degree());
    Chain diff = lhs - rhs;
    ChainBasis here(split, kind, space, n);
    ChainBasis above(split, kind, space, n + 1);
    auto target = here.coordinates(diff);
    auto m = boundary_matrix(split, above, here);
    auto x = solve(m, target);
    if (auto* bad = std::get_if<Unsolvable>(&x))
        return *bad;
    return BoundaryCertificate{kind, space, lhs, rhs, above.chain(std::get<SparseVector>(x))};
}

Chain corrected_descent(const SplitBasis& split, const Chain& phi, const UnitSchedule& schedule) {
    if (static_cast<int>(schedule.degree()) != phi.degree())
        throw Error("corrected_descent: schedule length does not match the degree");
    Chain current = phi;
    for (std::size_t i = schedule.degree(); i >= 1; --i) {
        auto step = descent_step(split, current, schedule.unit(i));
        current = step.output + step.defect;
    }
    return current;
}

namespace {

bool covers(const SplitBasis& split, const UnitSchedule& schedule, const Chain& phi) {
    const auto& a = split.adapted();
    const std::size_t n = schedule.degree();
    if (n == 0)
        return true;
    for (const auto& [t, coeff] : phi.terms()) {
        auto f0 = a.basis_element(t[0]);
        if (a.multiply(schedule.unit(n), f0) != f0)
            return false;
        for (std::size_t i = 2; i <= n; ++i) {
            const auto& ei = schedule.unit(i);
            const auto& below = schedule.unit(i - 1);
            auto fe = a.multiply(a.basis_element(t[i]), ei);
            if (a.multiply(below, ei) != ei || a.multiply(below, fe) != fe)
                return false;
        }
    }
    return true;
}

} // namespace

InverseResult inverse_excision(const SplitBasis& split, const Chain& phi, const UnitSchedule& schedule,
                               InverseMode mode) {
    const int n = phi.degree();
    if (static_cast<int>(schedule.degree()) != n)
        throw Error("inverse_excision: schedule length does not match the degree");
    if (filtration_level(split, phi) > n)
        throw Error("inverse_excision: input is not in F_n C_n(A,I) (an initial slot is outside the ideal)");
    if (!covers(split, schedule, phi))
        throw Error("inverse_excision: schedule does not provide local units for this input");
    const auto& a = split.adapted();
    if (n >= 1 && !canonicalize_cyclic(boundary_b(a, phi)).is_zero())
        throw Error("inverse_excision: input is not a cycle in CC_n(A,I)");

    InverseResult result;
    result.input = phi;
    result.schedule = schedule;
    result.mode = mode;
    result.formula_output = explicit_inverse(split, phi, schedule);
    result.output = mode == InverseMode::closed_formula ? result.formula_output
                                                        : corrected_descent(split, phi, schedule);
    result.correction = result.output - result.formula_output;
    if (!in_ideal_chains(split, result.output))
        throw Error("internal error: explicit inverse left the ideal");
    if (n >= 1) {
        result.strict_boundary = boundary_b(a, result.output);
        result.cyclic_cycle = canonicalize_cyclic(result.strict_boundary).is_zero();
    } else {
        result.strict_boundary = Chain(0);
        result.cyclic_cycle = true;
    }

    auto lhs = rho(split, result.output);
    auto found = find_boundary_certificate(split, ComplexKind::cyclic, ChainSpace::relative, lhs, phi);
    if (std::holds_alternative<Unsolvable>(found)) {
        ChainBasis here(split, ComplexKind::cyclic, ChainSpace::relative, n);
        ChainBasis above(split, ComplexKind::cyclic, ChainSpace::relative, n + 1);
        throw CertificateSearchFailure(
            "no boundary certificate for rho(psi) == phi in CC_" + std::to_string(n) + "(A,I)",
            dump_system(boundary_matrix(split, above, here), here.coordinates(lhs - phi)));
    }
    result.certificate = std::get<BoundaryCertificate>(std::move(found));
    return result;
}

std::variant<std::vector<InverseResult>, NoLocalUnit>
inverse_excision_class(const SplitBasis& split, const std::vector<CyclicChain>& classes, InverseMode mode) {
    std::vector<InverseResult> results;
    if (classes.empty())
        return results;
    const int n = classes.front().degree();
    std::vector<Chain> lifts;
    std::set<TensorIndex> tensors;
    for (const auto& c : classes) {
        if (c.degree() != n && !c.is_zero())
            throw Error("inverse_excision_class: classes of different degrees");
        if (!relative_membership(split, c.chain()))
            throw Error("inverse_excision_class: class is not relative (a term has no ideal slot)");
        Chain lift = c.is_zero() ? Chain(n) : rotate_to_ideal_initial(split, c.chain());
        for (const auto& [t, coeff] : lift.terms())
            tensors.insert(t);
        lifts.push_back(std::move(lift));
    }
    auto schedule = build_unit_schedule(split, {tensors.begin(), tensors.end()}, n);
    if (auto* bad = std::get_if<NoLocalUnit>(&schedule))
        return *bad;
    for (const auto& lift : lifts)
        results.push_back(inverse_excision(split, lift, std::get<UnitSchedule>(schedule), mode));
    return results;
}

} // namespace exl
