#include "helpers.hpp"

#include <random>

using namespace exl;
using namespace unit_helpers;

TEST_CASE("scalars are canonical and floats are rejected") {
    CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
    CHECK(to_string(parse_scalar("4/2")) == "2");
    CHECK(to_string(parse_scalar("0/7")) == "0");
    CHECK(parse_scalar("+5") == 5);
    CHECK_THROWS_AS(parse_scalar("1.5"), Error);
    CHECK_THROWS_AS(parse_scalar("1/0"), Error);
    CHECK_THROWS_AS(parse_scalar("1e3"), Error);
    CHECK_THROWS_AS(parse_scalar(""), Error);
}

TEST_CASE("sparse vectors never store zeros") {
    SparseVector v(4);
    v.set(2, 3);
    v.add(2, -3);
    CHECK(v.is_zero());
    CHECK(v.entries().empty());
    CHECK_THROWS(v.set(4, 1));
}

TEST_CASE("rref examples") {
    auto id = rref(SparseMatrix::identity(2));
    CHECK(id.reduced == SparseMatrix::identity(2));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});

    auto zero = rref(SparseMatrix(2, 3));
    CHECK(zero.reduced == SparseMatrix(2, 3));
    CHECK(zero.pivots.empty());

    auto r = rref(mat({{1, 2}, {2, 4}}));
    CHECK(r.reduced == mat({{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("solve examples") {
    auto v = vec({3, -1});
    CHECK(std::get<SparseVector>(solve(SparseMatrix::identity(2), v)) == v);
    CHECK(std::get<SparseVector>(solve(mat({{1, 1}}), vec({2}))) == vec({2, 0}));
    auto bad = solve(mat({{1}, {1}}), vec({1, 2}));
    REQUIRE(std::holds_alternative<Unsolvable>(bad));
    CHECK(!std::get<Unsolvable>(bad).witness.is_zero());
    CHECK_THROWS(solve(mat({{1, 1}}), vec({1, 2})));
}

TEST_CASE("kernel, image and span examples") {
    CHECK(kernel_basis(SparseMatrix::identity(3)).empty());
    CHECK(image_basis(SparseMatrix(3, 2)).empty());
    auto coeffs = in_span(vec({1, 1}), {vec({1, 0}), vec({0, 1})});
    CHECK(std::get<std::vector<Scalar>>(coeffs) == std::vector<Scalar>{1, 1});
    CHECK(std::holds_alternative<NotInSpan>(in_span(vec({1, 1}), {vec({1, 0})})));
    CHECK_THROWS(in_span(vec({1, 1, 0}), {vec({1, 0})}));
}

namespace {

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    SparseMatrix m(rows, cols);
    std::uniform_int_distribution<int> value(-3, 3), density(0, 3);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (density(rng) == 0)
                m.set(r, c, Scalar(value(rng)));
    return m;
}

} // namespace

TEST_CASE("randomized: rank-nullity, kernel, image, solve") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        auto m = random_matrix(rng, rows, cols);
        auto r = rref(m);
        auto kernel = kernel_basis(m);
        CHECK(kernel.size() + r.pivots.size() == cols);
        for (const auto& k : kernel)
            CHECK(m.multiply(k).is_zero());
        CHECK(image_basis(m).size() == r.pivots.size());

        // rhs in the image: solution exists, reproduces rhs, deterministic.
        SparseVector x(cols);
        for (std::size_t c = 0; c < cols; ++c)
            x.set(c, Scalar(static_cast<int>(rng() % 5) - 2));
        auto rhs = m.multiply(x);
        auto s1 = solve(m, rhs);
        auto s2 = solve(m, rhs);
        REQUIRE(std::holds_alternative<SparseVector>(s1));
        CHECK(m.multiply(std::get<SparseVector>(s1)) == rhs);
        CHECK(std::get<SparseVector>(s1) == std::get<SparseVector>(s2));
        // free variables are zero
        for (const auto& [c, v] : std::get<SparseVector>(s1).entries())
            CHECK(std::find(r.pivots.begin(), r.pivots.end(), c) != r.pivots.end());
    }
}

TEST_CASE("echelon basis tracks a span") {
    EchelonBasis b(3);
    CHECK(b.insert(vec({1, 1, 0})));
    CHECK(b.insert(vec({0, 1, 1})));
    CHECK_FALSE(b.insert(vec({1, 2, 1})));
    CHECK(b.rank() == 2);
    CHECK(b.contains(vec({1, 0, -1})));
    CHECK_FALSE(b.contains(vec({0, 0, 1})));
}
