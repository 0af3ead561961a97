#include "exl/local_units.hpp"

#include "exl/error.hpp"

#include <algorithm>

namespace exl {

std::string NoLocalUnit::describe() const {
    std::string out = "no local left unit";
    if (level > 0)
        out += " for e_" + std::to_string(level);
    out += " (" + std::to_string(targets.size()) + " target(s); the unit system is inconsistent)";
    return out;
}

std::variant<Element, NoLocalUnit> find_local_left_unit(const SplitBasis& split,
                                                        const std::vector<Element>& targets) {
    const auto& a = split.adapted();
    const auto n = split.dimension();
    const auto k = split.ideal_count();
    for (const auto& s : targets) {
        if (s.dimension() != n)
            throw Error("local unit target has the wrong dimension");
        if (!split.in_ideal(s))
            throw Error("local unit target does not lie in the ideal");
    }

    // Unknown x_a for each ideal basis element; one block of equations
    // sum_a x_a (b_a s) = s per target.
    std::vector<SparseVector> columns;
    for (std::size_t col = 0; col < k; ++col) {
        std::vector<SparseVector> blocks;
        for (const auto& s : targets)
            blocks.push_back(a.multiply(a.basis_element(col), s));
        columns.push_back(SparseVector::concat(blocks));
    }
    auto rhs = SparseVector::concat(targets);
    auto m = SparseMatrix::from_columns(rhs.dimension(), columns);
    auto result = solve(m, rhs);
    if (auto* bad = std::get_if<Unsolvable>(&result))
        return NoLocalUnit{0, targets, *bad};

    const auto& x = std::get<SparseVector>(result);
    Element e(n);
    for (const auto& [i, c] : x.entries())
        e.add(i, c);
    return e;
}

namespace {

void add_target(std::vector<Element>& set, Element s) {
    if (s.is_zero())
        return;
    if (std::find(set.begin(), set.end(), s) == set.end())
        set.push_back(std::move(s));
}

} // namespace

std::variant<UnitSchedule, NoLocalUnit> build_unit_schedule(const SplitBasis& split,
                                                            const std::vector<TensorIndex>& tensors, int n) {
    if (n < 0)
        throw Error("negative degree for unit schedule");
    const auto& a = split.adapted();
    for (const auto& t : tensors) {
        if (t.size() != static_cast<std::size_t>(n) + 1)
            throw Error("unit schedule: tensor degree does not match n");
        if (!split.is_ideal_index(t[0]))
            throw Error("unit schedule: tensor has its initial slot outside the ideal");
    }

    UnitSchedule schedule;
    schedule.units.resize(static_cast<std::size_t>(n));
    schedule.targets.resize(static_cast<std::size_t>(n));
    if (n == 0)
        return schedule;

    std::vector<Element> targets;
    for (const auto& t : tensors)
        add_target(targets, a.basis_element(t[0]));

    for (int i = n; i >= 1; --i) {
        auto found = find_local_left_unit(split, targets);
        if (auto* bad = std::get_if<NoLocalUnit>(&found)) {
            bad->level = static_cast<std::size_t>(i);
            return *bad;
        }
        auto& e = std::get<Element>(found);
        schedule.units[static_cast<std::size_t>(i) - 1] = e;
        schedule.targets[static_cast<std::size_t>(i) - 1] = targets;
        if (i == 1)
            break;
        // Targets for e_{i-1}: e_i and every f_i e_i.
        std::vector<Element> next;
        add_target(next, e);
        for (const auto& t : tensors)
            add_target(next, a.multiply(a.basis_element(t[static_cast<std::size_t>(i)]), e));
        targets = std::move(next);
    }
    return schedule;
}

bool schedule_is_sound(const SplitBasis& split, const UnitSchedule& schedule) {
    if (schedule.units.size() != schedule.targets.size())
        return false;
    const auto& a = split.adapted();
    for (std::size_t i = 0; i < schedule.units.size(); ++i) {
        const auto& e = schedule.units[i];
        if (e.dimension() != split.dimension() || !split.in_ideal(e))
            return false;
        for (const auto& s : schedule.targets[i])
            if (a.multiply(e, s) != s)
                return false;
    }
    return true;
}

} // namespace exl
