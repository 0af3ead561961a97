#ifndef EXL_EXCISION_HPP
#define EXL_EXCISION_HPP

#include "exl/error.hpp"
#include "exl/homology.hpp"
#include "exl/local_units.hpp"

#include <variant>

namespace exl {

/// Claim: lhs - rhs = b(witness) in the given complex (modulo 1 - t for
/// cyclic). The witness has degree n + 1 and lives in `space`.
struct BoundaryCertificate {
    ComplexKind kind = ComplexKind::cyclic;
    ChainSpace space = ChainSpace::relative;
    Chain lhs;
    Chain rhs;
    Chain witness;
};

/// One descent step phi -> phi' with the homotopy G = sum lambda_j e (x) phi_j.
/// Exact identity: phi - phi' = b(G) + defect, where defect = e (x) b(phi)
/// vanishes for strict cycles.
struct DescentCertificate {
    Chain input;
    Chain output;
    Chain homotopy;
    Chain defect;
    Element unit; ///< split coordinates
};

enum class InverseMode {
    /// phi -> phi' + e (x) b(phi) at every step (= phi - b(G)). Agrees with
    /// the closed formula on strict Hochschild cycles and stays homologous
    /// when b(phi) only vanishes modulo 1 - t.
    cycle_corrected,
    /// The 2^n-term closed formula alone.
    closed_formula,
};

/// Explicit inverse of the excision map on one class representative.
struct InverseResult {
    Chain input;  ///< lift of the class with every initial slot in I
    UnitSchedule schedule;
    InverseMode mode = InverseMode::cycle_corrected;
    Chain formula_output; ///< closed 2^n-term formula applied to input
    Chain output; ///< psi, a chain of C_n(I)
    Chain correction; ///< output - formula_output
    BoundaryCertificate certificate; ///< rho(psi) == input in CC_n(A,I)
    bool cyclic_cycle = false;       ///< b(psi) vanishes in CC_{n-1}(I)
    Chain strict_boundary;           ///< b(psi) in C_{n-1}(I), diagnostic only
};

/// Raised when e does not act as a left unit on slot 0 of phi.
/// `residual` = (e . slot 0)(phi) - phi, nonzero.
class DescentPreconditionError : public Error {
public:
    DescentPreconditionError(const std::string& what, Chain residual)
        : Error(what), residual_(std::move(residual)) {}
    const Chain& residual() const noexcept { return residual_; }

private:
    Chain residual_;
};

/// No boundary certificate exists: the claimed homology is false. Carries a
/// printable dump of the linear system that was solved.
class CertificateSearchFailure : public Error {
public:
    CertificateSearchFailure(const std::string& what, std::string system_dump)
        : Error(what), dump_(std::move(system_dump)) {}
    const std::string& system_dump() const noexcept { return dump_; }

private:
    std::string dump_;
};

/// rho: C_n(I) -> C_n(A,I), the inclusion of tensors. Index tuples are shared
/// between I and A, so this validates and returns the same tuples.
Chain rho(const SplitBasis& split, const Chain& c);
CyclicChain rho(const SplitBasis& split, const CyclicChain& c);

/// Rotates every term so that its first ideal slot moves to position 0,
/// with the sign of t. The result represents the same class in CC_n and
/// lies in F_n C_n(A,I). Rejects terms without an ideal slot.
Chain rotate_to_ideal_initial(const SplitBasis& split, const Chain& c);

/// e (x) c, degree raised by one.
Chain prepend(const Element& e, const Chain& c);

/// Left-multiplies slot 0 of every term by e.
Chain act_on_initial_slot(const Algebra& a, const Element& e, const Chain& c);

/// Local left unit for the initial slots of c's terms.
std::variant<Element, NoLocalUnit> initial_slot_unit(const SplitBasis& split, const Chain& c);

/// phi'_j = (-1)^{n+1} (e (x) f_n f_0 (x) f_1 ... f_{n-1} - f_n e (x) f_0 ... f_{n-1}).
/// Requires degree >= 1, every initial slot in I, and e acting as a left unit
/// on slot 0 of phi.
DescentCertificate descent_step(const SplitBasis& split, const Chain& phi, const Element& e);

/// n steps with e_n, e_{n-1}, ..., e_1 of the schedule.
std::vector<DescentCertificate> iterated_descent(const SplitBasis& split, const Chain& phi,
                                                 const UnitSchedule& schedule);

/// Folds descents of a strict Hochschild cycle into one relative boundary
/// certificate (witness = sum of homotopies). Requires every defect to vanish.
BoundaryCertificate concatenate_descents(const std::vector<DescentCertificate>& steps);

template <class Slot>
struct SignedTensor {
    int sign = 1;
    std::vector<Slot> slots;
};

/// The 2^n signed terms of the explicit inverse for one pure tensor
/// f_0 (x) ... (x) f_n, given units = (e_1, ..., e_n). Evaluated by iterating
/// the descent step from e_n down to e_1: at each step the last slot g is
/// removed and either e (x) g.g_0 or g.e (x) g_0 is put in front, with the
/// step sign (-1)^{n+1} and an extra minus for the second choice.
///
/// Slot only needs to be copyable; `mul(x, y)` returns the product x y.
template <class Slot, class Multiply>
std::vector<SignedTensor<Slot>> explicit_inverse_terms(const std::vector<Slot>& tensor,
                                                       const std::vector<Slot>& units, Multiply&& mul) {
    if (tensor.empty() || units.size() + 1 != tensor.size())
        throw Error("explicit inverse: need n units for a tensor with n + 1 slots");
    const std::size_t n = units.size();
    const int step_sign = (n + 1) % 2 == 0 ? 1 : -1;

    std::vector<SignedTensor<Slot>> current{{1, tensor}};
    for (std::size_t i = 1; i <= n; ++i) {
        const Slot& e = units[n - i];
        std::vector<SignedTensor<Slot>> next;
        next.reserve(2 * current.size());
        for (const auto& term : current) {
            const Slot& last = term.slots.back();

            SignedTensor<Slot> plus{term.sign * step_sign, {}};
            plus.slots.reserve(n + 1);
            plus.slots.push_back(e);
            plus.slots.push_back(mul(last, term.slots.front()));
            plus.slots.insert(plus.slots.end(), term.slots.begin() + 1, term.slots.end() - 1);

            SignedTensor<Slot> minus{-term.sign * step_sign, {}};
            minus.slots.reserve(n + 1);
            minus.slots.push_back(mul(last, e));
            minus.slots.insert(minus.slots.end(), term.slots.begin(), term.slots.end() - 1);

            next.push_back(std::move(plus));
            next.push_back(std::move(minus));
        }
        current = std::move(next);
    }
    return current;
}

/// psi = sum_j lambda_j (explicit inverse of phi_j), expanded in the
/// standard tensor basis.
Chain explicit_inverse(const SplitBasis& split, const Chain& phi, const UnitSchedule& schedule);

/// Finds eta with lhs - rhs = b(eta) in the (kind, space) complex by exact
/// solve over the degree n+1 chain group.
std::variant<BoundaryCertificate, Unsolvable> find_boundary_certificate(const SplitBasis& split, ComplexKind kind,
                                                                        ChainSpace space, const Chain& lhs,
                                                                        const Chain& rhs);

/// Iterates phi -> phi - b(e_i (x) phi) for i = n..1. Each step goes through
/// descent_step, so the same preconditions apply.
Chain corrected_descent(const SplitBasis& split, const Chain& phi, const UnitSchedule& schedule);

/// Explicit inverse of excision on one lift phi in F_n C_n(A,I), plus a
/// certificate for rho(psi) == phi in CC_n(A,I). Throws
/// CertificateSearchFailure if no certificate exists.
InverseResult inverse_excision(const SplitBasis& split, const Chain& phi, const UnitSchedule& schedule,
                               InverseMode mode = InverseMode::cycle_corrected);

/// Rotates each class to an F_n lift, builds one schedule over all pure
/// tensors of all lifts, then inverts each class with that schedule.
std::variant<std::vector<InverseResult>, NoLocalUnit>
inverse_excision_class(const SplitBasis& split, const std::vector<CyclicChain>& classes,
                       InverseMode mode = InverseMode::cycle_corrected);

} // namespace exl

#endif
