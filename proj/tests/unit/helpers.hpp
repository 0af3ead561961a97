#ifndef EXL_TESTS_UNIT_HELPERS_HPP
#define EXL_TESTS_UNIT_HELPERS_HPP

#include "support.hpp"

#include <doctest.h>

namespace unit_helpers {

using namespace exl;

inline SparseVector vec(std::initializer_list<int> values) {
    std::vector<Scalar> v;
    for (int x : values)
        v.emplace_back(x);
    return SparseVector::from_dense(v);
}

inline SparseMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Scalar>> m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (int x : r)
            m.back().emplace_back(x);
    }
    return SparseMatrix::from_dense(m);
}

// T2 written out by hand: E11 E11 = E11, E11 E12 = E12, E12 E22 = E12,
// E22 E22 = E22, all other products zero.
inline Algebra hand_t2() {
    Algebra a({"E11", "E12", "E22"});
    a.set_product(0, 0, SparseVector::unit(3, 0));
    a.set_product(0, 1, SparseVector::unit(3, 1));
    a.set_product(1, 2, SparseVector::unit(3, 1));
    a.set_product(2, 2, SparseVector::unit(3, 2));
    return a;
}

inline SplitBasis t2_split() { return make_split_basis(Ideal{hand_t2(), {vec({1, 0, 0}), vec({0, 1, 0})}}); }

constexpr std::uint32_t E11 = 0, E12 = 1, E22 = 2;

} // namespace unit_helpers

#endif
