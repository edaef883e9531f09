#include <catch2/catch_amalgamated.hpp>

#include "cicone/linalg.hpp"

using namespace cicone;

static RatVec rv(std::initializer_list<int> xs)
{
    RatVec v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}

static IntVec iv(std::initializer_list<int> xs)
{
    IntVec v;
    for (int x : xs) v.push_back(Int(x));
    return v;
}

TEST_CASE("rank of the identity")
{
    RatMat m{rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})};
    CHECK(rank(m) == 3);
}

TEST_CASE("rank with dependent rows")
{
    RatMat m{rv({1, 2, 3}), rv({2, 4, 6}), rv({0, 1, 1})};
    CHECK(rank(m) == 2);
}

TEST_CASE("kernel of the all-ones row")
{
    RatMat m{rv({1, 1, 1})};
    const std::vector<RatVec> k = kernel_basis(m);
    REQUIRE(k.size() == 2);
    for (const RatVec& v : k) {
        CHECK(dot(m[0], v) == 0);
        CHECK_FALSE(is_zero(v));
    }
    // independence
    RatMat kk = {k[0], k[1]};
    CHECK(rank(kk) == 2);
}

TEST_CASE("solve on the identity")
{
    RatMat m{rv({1, 0}), rv({0, 1})};
    const auto x = solve_linear(m, rv({3, 4}));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 3);
    CHECK((*x)[1] == 4);
}

TEST_CASE("solve detects inconsistency")
{
    RatMat m{rv({1, 1}), rv({1, 1})};
    CHECK_FALSE(solve_linear(m, rv({1, 2})).has_value());
}

TEST_CASE("solve on a rectangular system returns some solution")
{
    RatMat m{rv({1, 1, 1})};
    const auto x = solve_linear(m, rv({5}));
    REQUIRE(x.has_value());
    CHECK(dot(m[0], *x) == 5);
}

TEST_CASE("primitive scales rationals to coprime integers")
{
    CHECK(primitive(RatVec{Rat(2, 3), Rat(-4, 3), Rat(0)}) == iv({1, -2, 0}));
    CHECK(primitive(rv({5, 0, 0})) == iv({1, 0, 0}));
    // positive scaling only: the sign pattern is preserved
    CHECK(primitive(rv({-2, -4})) == iv({-1, -2}));
    CHECK_THROWS_AS(primitive(rv({0, 0})), ZeroVectorError);
}

TEST_CASE("inverse round trip")
{
    RatMat m{rv({2, 1}), rv({7, 4})};
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Rat s = 0;
            for (std::size_t k = 0; k < 2; ++k) s += m[i][k] * (*inv)[k][j];
            CHECK(s == (i == j ? 1 : 0));
        }
    CHECK_FALSE(inverse(RatMat{rv({1, 2}), rv({2, 4})}).has_value());
}

TEST_CASE("integer rank accumulator matches rational rank")
{
    const std::vector<IntVec> rows{iv({2, 4, 1}), iv({0, 3, 3}), iv({2, 1, -2}), iv({4, 8, 2})};
    IntRankAccumulator acc(3);
    for (const IntVec& r : rows) acc.add(r);
    CHECK(acc.rank() == rank_int(rows));
    CHECK(acc.rank() == 2);
}
