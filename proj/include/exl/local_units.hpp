#ifndef EXL_LOCAL_UNITS_HPP
#define EXL_LOCAL_UNITS_HPP

#include "exl/chain.hpp"
#include "exl/linear.hpp"

#include <variant>

namespace exl {

/// No e in I satisfies e*s = s for all targets. `level` is the schedule
/// index i of the unit e_i being solved for (0 for a direct request).
struct NoLocalUnit {
    std::size_t level = 0;
    std::vector<Element> targets; ///< split coordinates
    Unsolvable witness;           ///< inconsistent row of the unit system
    std::string describe() const;
};

/// Solves e*s = s (all s in targets) for e in span(I), free variables zero.
/// Targets and result are in split coordinates; targets must lie in I.
std::variant<Element, NoLocalUnit> find_local_left_unit(const SplitBasis& split,
                                                        const std::vector<Element>& targets);

/// Local units e_1, ..., e_n for the explicit inverse formula.
/// units[i-1] is e_i; targets[i-1] is the set e_i was solved against.
struct UnitSchedule {
    std::vector<Element> units;
    std::vector<std::vector<Element>> targets;

    std::size_t degree() const noexcept { return units.size(); }
    const Element& unit(std::size_t i) const { return units.at(i - 1); } ///< e_i, 1-based

    friend bool operator==(const UnitSchedule&, const UnitSchedule&) = default;
};

/// e_n is a local left unit for all f_0-slots; going down, e_{i-1} is one
/// for {e_i} together with every f_i e_i. One uniform choice serves all
/// given tensors. Every tensor must have degree n and f_0 in I.
std::variant<UnitSchedule, NoLocalUnit> build_unit_schedule(const SplitBasis& split,
                                                            const std::vector<TensorIndex>& tensors, int n);

/// Re-multiplies every recorded target: e_i * s == s.
bool schedule_is_sound(const SplitBasis& split, const UnitSchedule& schedule);

} // namespace exl

#endif
