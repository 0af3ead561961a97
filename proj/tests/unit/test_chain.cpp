#include "helpers.hpp"

using namespace exl;
using namespace unit_helpers;

TEST_CASE("boundary examples") {
    auto a = hand_t2();
    CHECK(boundary_b(a, Chain::pure({E11, E12})) == Chain::pure({E12}));
    // b(f0 (x) f1) = f0 f1 - f1 f0 on every pair
    for (std::uint32_t i = 0; i < 3; ++i)
        for (std::uint32_t j = 0; j < 3; ++j) {
            Chain expected(0);
            for (const auto& [k, c] : a.product(i, j).entries())
                expected.add({static_cast<std::uint32_t>(k)}, c);
            for (const auto& [k, c] : a.product(j, i).entries())
                expected.add({static_cast<std::uint32_t>(k)}, -c);
            CHECK(boundary_b(a, Chain::pure({i, j})) == expected);
            Chain bar(0);
            for (const auto& [k, c] : a.product(i, j).entries())
                bar.add({static_cast<std::uint32_t>(k)}, c);
            CHECK(bar_boundary(a, Chain::pure({i, j})) == bar);
        }
    CHECK_THROWS(boundary_b(a, Chain::pure({E11})));
    CHECK_THROWS(bar_boundary(a, Chain::pure({E11})));
}

TEST_CASE("cyclic operator") {
    CHECK(cyclic_t(Chain::pure({E11, E22})) == Chain::pure({E22, E11}, -1));
    CHECK(cyclic_t(Chain::pure({E12})) == Chain::pure({E12}));
    CHECK(cyclic_t(Chain::pure({E11, E12, E22})) == Chain::pure({E22, E11, E12}));
}

TEST_CASE("canonical rotations") {
    auto r = canonical_rotation({E12, E11});
    CHECK(r.slots == TensorIndex{E11, E12});
    CHECK(r.sign == -1);
    CHECK(canonical_rotation({E11, E11}).vanishes);
    CHECK_FALSE(canonical_rotation({E11, E11, E11}).vanishes);
    CHECK(canonical_rotation({E11, E11, E11, E11}).vanishes); // t fixes it with sign -1
    CHECK_FALSE(canonical_rotation({E11, E12, E11, E12}).vanishes); // t^2 fixes it with sign +1

    Chain c = Chain::pure({E12, E11}, 2) + Chain::pure({E22, E12}, Scalar(1, 3));
    CHECK(canonicalize_cyclic(Chain::pure({E12, E11})).chain() == Chain::pure({E11, E12}, -1));
    CHECK(canonicalize_cyclic(c) == canonicalize_cyclic(cyclic_t(c)));
    CHECK(canonicalize_cyclic(c - cyclic_t(c)).is_zero());
    CHECK(canonicalize_cyclic(canonicalize_cyclic(c).chain()) == canonicalize_cyclic(c));
}

TEST_CASE("tensor products expand multilinearly") {
    std::vector<Element> slots{vec({1, 1, 0}), vec({0, 0, 2})};
    Chain c = tensor_product(slots, 3);
    CHECK(c == Chain::pure({E11, E22}, 6) + Chain::pure({E12, E22}, 6));
}

TEST_CASE("filtration levels and membership") {
    auto split = t2_split();
    CHECK(filtration_level(split, Chain::pure({E11, E12, E11})) == 0);
    CHECK(filtration_level(split, Chain::pure({E22, E11})) == 2);
    CHECK(cyclic_filtration_level(split, Chain::pure({E22, E11})) == 1);
    CHECK(filtration_level(split, Chain::pure({E11, E22})) == 1);
    CHECK(filtration_level(split, Chain(2)) == 0);
    CHECK(cyclic_filtration_level(split, Chain::pure({E12, E22, E11})) == 1); // wrap-around run of two
    CHECK(cyclic_filtration_level(split, Chain::pure({E22, E22})) == 2);

    CHECK(relative_membership(split, Chain::pure({E11, E22})));
    CHECK_FALSE(relative_membership(split, Chain::pure({E22, E22})));
    CHECK(relative_membership(split, Chain(1)));
    CHECK(in_ideal_chains(split, Chain::pure({E11, E12})));
}

TEST_CASE("chains reject mismatched degrees") {
    Chain c(1);
    CHECK_THROWS(c.add({E11}, 1));
    CHECK_THROWS(Chain::pure({E11, E12}) + Chain::pure({E11}));
    CHECK((Chain(0) + Chain::pure({E11, E12})).degree() == 1);
}

TEST_CASE("randomized chain identities on the demo corpus") {
    std::mt19937 rng(5);
    for (const auto& d : demo_corpus()) {
        auto split = make_split_basis(d.ideal);
        const auto& a = split.adapted();
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k < 20; ++k) {
                auto c = testing_support::random_chain(rng, split, n, 3, 0, true);
                auto bc = boundary_b(a, c);
                if (n >= 2)
                    CHECK(boundary_b(a, bc).is_zero());
                CHECK(relative_membership(split, bc));
                CHECK(canonicalize_cyclic(c) == canonicalize_cyclic(cyclic_t(c)));
            }
    }
}
