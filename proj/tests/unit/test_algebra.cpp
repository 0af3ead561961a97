#include "helpers.hpp"

using namespace exl;
using namespace unit_helpers;

TEST_CASE("validate_algebra") {
    Algebra idem({"e"});
    idem.set_product(0, 0, SparseVector::unit(1, 0));
    CHECK_FALSE(validate_algebra(idem));

    // e0 e0 = e1, e0 e1 = e0: (e0 e0) e0 = e1 e0 = 0 but e0 (e0 e0) = e0 e1 = e0.
    Algebra bad({"e0", "e1"});
    bad.set_product(0, 0, SparseVector::unit(2, 1));
    bad.set_product(0, 1, SparseVector::unit(2, 0));
    auto failure = validate_algebra(bad);
    REQUIRE(failure);
    CHECK(failure->i == 0);
    CHECK(failure->j == 0);
    CHECK(failure->k == 0);

    CHECK_FALSE(validate_algebra(hand_t2()));
    for (const auto& d : demo_corpus())
        CHECK_FALSE(validate_algebra(d.algebra));
}

TEST_CASE("demo t2-corner matches the hand-written algebra") {
    CHECK(demo_extension("t2-corner").algebra == hand_t2());
}

TEST_CASE("validate_ideal") {
    auto t2 = hand_t2();
    CHECK_FALSE(validate_ideal(Ideal{t2, {vec({1, 0, 0}), vec({0, 1, 0})}}));
    CHECK_FALSE(validate_ideal(Ideal{t2, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}}));

    auto v = validate_ideal(Ideal{t2, {vec({0, 0, 1})}});
    REQUIRE(v);
    CHECK(v->kind == IdealViolation::Kind::not_two_sided);
    CHECK(v->product == vec({0, 1, 0})); // E12 E22 = E12

    auto dep = validate_ideal(Ideal{t2, {vec({1, 0, 0}), vec({2, 0, 0})}});
    REQUIRE(dep);
    CHECK(dep->kind == IdealViolation::Kind::dependent_basis);
}

TEST_CASE("split bases") {
    auto t2 = hand_t2();
    auto split = t2_split();
    CHECK(split.ideal_count() == 2);
    CHECK(split.ordered_basis() == std::vector<Element>{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});

    auto none = make_split_basis(Ideal{t2, {}});
    CHECK(none.ideal_count() == 0);
    CHECK(none.dimension() == 3);

    auto all = make_split_basis(Ideal{t2, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}});
    CHECK(all.ideal_count() == 3);

    // Non-standard ideal basis: coordinates convert both ways.
    auto skew = make_split_basis(Ideal{t2, {vec({1, 1, 0}), vec({0, 1, 0})}});
    CHECK(skew.ideal_count() == 2);
    auto x = vec({2, -1, 5});
    CHECK(skew.to_parent(skew.to_split(x)) == x);
    CHECK(skew.in_ideal(skew.to_split(vec({3, 7, 0}))));
    CHECK_FALSE(skew.in_ideal(skew.to_split(vec({0, 0, 1}))));

    CHECK_THROWS(make_split_basis(Ideal{t2, {vec({1, 0, 0}), vec({0, 1, 0})}},
                                  std::vector<Element>{vec({1, 1, 0})}));
    auto hinted = make_split_basis(Ideal{t2, {vec({1, 0, 0}), vec({0, 1, 0})}},
                                   std::vector<Element>{vec({1, 0, 1})});
    CHECK(hinted.ordered_basis().back() == vec({1, 0, 1}));
}

TEST_CASE("quotients") {
    auto q = quotient(t2_split());
    REQUIRE(q.algebra.dimension() == 1);
    CHECK(q.algebra.product(0, 0) == SparseVector::unit(1, 0));
    CHECK(q.project(vec({1, 1, 0})).is_zero());
    CHECK(q.project(vec({0, 0, 2})) == vec({2}));

    auto t2 = hand_t2();
    CHECK(quotient(make_split_basis(Ideal{t2, {}})).algebra.dimension() == 3);
    CHECK(quotient(make_split_basis(Ideal{t2, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}}))
              .algebra.dimension() == 0);

    // Any hint gives the same quotient dimension and a multiplicative projection.
    auto hinted = quotient(make_split_basis(Ideal{t2, {vec({1, 0, 0}), vec({0, 1, 0})}},
                                            std::vector<Element>{vec({3, -2, 1})}));
    CHECK(hinted.algebra.dimension() == 1);
    CHECK(hinted.algebra.product(0, 0) == SparseVector::unit(1, 0));
}

TEST_CASE("opposite algebra") {
    auto t2 = hand_t2();
    auto op = opposite_algebra(t2);
    CHECK(op.product(1, 0) == SparseVector::unit(3, 1)); // E12 * E11 = E12 in the opposite
    CHECK(op.product(0, 1).is_zero());
    CHECK(opposite_algebra(op) == t2);
    CHECK_FALSE(validate_algebra(op));
    const auto& m2 = demo_extension("matrix2").algebra;
    CHECK_FALSE(validate_algebra(opposite_algebra(m2)));

    Algebra commutative({"x", "y"});
    commutative.set_product(0, 1, SparseVector::unit(2, 1));
    commutative.set_product(1, 0, SparseVector::unit(2, 1));
    CHECK(opposite_algebra(commutative) == commutative);
}

TEST_CASE("demo corpus hypotheses") {
    for (const auto& d : demo_corpus()) {
        CAPTURE(d.name);
        CHECK_FALSE(validate_ideal(d.ideal));
        auto split = make_split_basis(d.ideal);
        std::vector<Element> basis;
        for (std::size_t i = 0; i < split.ideal_count(); ++i)
            basis.push_back(SparseVector::unit(split.dimension(), i));
        CHECK(std::holds_alternative<Element>(find_local_left_unit(split, basis)));
        CHECK(split.ideal_count() + quotient(split).algebra.dimension() == split.dimension());
        CHECK_FALSE(d.documentation.empty());
    }
    CHECK(make_split_basis(demo_extension("matrix2").ideal).ideal_count() == 4);
    CHECK(make_split_basis(demo_extension("direct-sum").ideal).ideal_count() == 4);
    CHECK(demo_extension("direct-sum").algebra.dimension() == 5);
    CHECK_THROWS(demo_extension("nope"));
}
