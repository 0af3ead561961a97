#include "helpers.hpp"

#include <cstdlib>

using namespace exl;
using namespace unit_helpers;

TEST_CASE("HC_0 of the corner ideal") {
    auto split = t2_split();
    auto hi = homology(split, ComplexKind::cyclic, ChainSpace::ideal, 0);
    CHECK(hi.dimension == 1);
    REQUIRE(hi.representative_cycles.size() == 1);
    CHECK(hi.representative_cycles[0] == Chain::pure({E11}));
    CHECK(homology(split, ComplexKind::cyclic, ChainSpace::relative, 0).dimension == 1);
    CHECK(homology(split, ComplexKind::cyclic, ChainSpace::ambient, 0).dimension == 2);
}

TEST_CASE("HC of M2 is 1,0,1,0") {
    auto split = testing_support::demo_split("matrix2");
    for (int n = 0; n <= 3; ++n)
        CHECK(homology(split, ComplexKind::cyclic, ChainSpace::ambient, n).dimension == (n % 2 == 0 ? 1u : 0u));
}

TEST_CASE("HH of M2 is Q in degree 0 only") {
    auto split = testing_support::demo_split("matrix2");
    CHECK(homology(split, ComplexKind::hochschild, ChainSpace::ambient, 0).dimension == 1);
    for (int n = 1; n <= 2; ++n)
        CHECK(homology(split, ComplexKind::hochschild, ChainSpace::ambient, n).dimension == 0);
}

TEST_CASE("zero algebra has no homology") {
    Algebra zero({"z"});
    auto split = make_split_basis(Ideal{zero, {}});
    // zero multiplication on a line: every tensor is a cycle, nothing is a boundary
    Algebra empty(std::vector<std::string>{});
    auto e = make_split_basis(Ideal{empty, {}});
    for (int n = 0; n <= 3; ++n) {
        CHECK(homology(e, ComplexKind::cyclic, ChainSpace::ambient, n).dimension == 0);
        CHECK(homology(e, ComplexKind::hochschild, ChainSpace::ambient, n).dimension == 0);
    }
    CHECK(homology(split, ComplexKind::hochschild, ChainSpace::ambient, 2).dimension == 1);
}

TEST_CASE("representatives are cycles, independent modulo boundaries") {
    for (const auto& d : demo_corpus()) {
        auto split = make_split_basis(d.ideal);
        for (auto kind : {ComplexKind::hochschild, ComplexKind::cyclic})
            for (int n = 1; n <= 2; ++n) {
                auto r = homology(split, kind, ChainSpace::ambient, n);
                CHECK(r.representative_cycles.size() == r.dimension);
                for (const auto& c : r.representative_cycles) {
                    auto bc = boundary_b(split.adapted(), c);
                    if (kind == ComplexKind::cyclic)
                        CHECK(canonicalize_cyclic(bc).is_zero());
                    else
                        CHECK(bc.is_zero());
                }
            }
    }
}

TEST_CASE("degree cap") {
    auto split = t2_split();
    CHECK_THROWS_AS(homology(split, ComplexKind::cyclic, ChainSpace::ambient, 5), ResourceLimit);
    CHECK_NOTHROW(homology(split, ComplexKind::cyclic, ChainSpace::ambient, 5, HomologyOptions{5}));
    CHECK(configured_max_degree() >= 1);
}

TEST_CASE("chain bases") {
    auto split = t2_split();
    ChainBasis relative(split, ComplexKind::hochschild, ChainSpace::relative, 1);
    CHECK(relative.size() == 9 - 1);
    ChainBasis ideal(split, ComplexKind::hochschild, ChainSpace::ideal, 1);
    CHECK(ideal.size() == 4);
    ChainBasis cyclic(split, ComplexKind::cyclic, ChainSpace::ambient, 1);
    CHECK(cyclic.size() == 3); // (0,1) (0,2) (1,2); diagonal tuples vanish
    CHECK_THROWS(ideal.coordinates(Chain::pure({E22, E11})));
    auto c = Chain::pure({E12, E11}, 3);
    CHECK(cyclic.chain(cyclic.coordinates(c)) == canonicalize_cyclic(c).chain());
}

TEST_CASE("complex names") {
    CHECK(parse_complex_kind("hh") == ComplexKind::hochschild);
    CHECK(parse_complex_kind("hc") == ComplexKind::cyclic);
    CHECK(parse_complex_kind("bar") == ComplexKind::bar);
    CHECK(parse_chain_space("A") == ChainSpace::ambient);
    CHECK(parse_chain_space("I") == ChainSpace::ideal);
    CHECK(parse_chain_space("relative") == ChainSpace::relative);
    CHECK_THROWS(parse_complex_kind("cc"));
}

TEST_CASE("dense oracle agrees with hand values") {
    auto m2 = testing_support::to_oracle(demo_extension("matrix2"));
    for (int n = 0; n <= 2; ++n)
        CHECK(oracle::homology_dimension(m2, oracle::Complex::cyclic, oracle::Space::ambient, n) ==
              (n % 2 == 0 ? 1u : 0u));
    auto t2 = testing_support::to_oracle(demo_extension("t2-corner"));
    CHECK(oracle::homology_dimension(t2, oracle::Complex::cyclic, oracle::Space::ideal, 0) == 1);
    CHECK(oracle::homology_dimension(t2, oracle::Complex::cyclic, oracle::Space::relative, 0) == 1);
    CHECK(oracle::rank({{1, 2}, {2, 4}}) == 1);
    CHECK(oracle::rank({{0, 1}, {1, 0}}) == 2);
}
