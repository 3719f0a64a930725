#include "doctest.h"

#include <numeric>
#include <random>
#include <stdexcept>

#include "spectile/group.hpp"
#include "oracles.hpp"

using namespace spectile;
using spectile::testutil::rng_below;

namespace {

// Fraction addition mod 1, reduced: used to state biadditivity exactly.
Frac add_mod1(const Frac& a, const Frac& b) {
    std::int64_t den = a.den * b.den;
    std::int64_t num = (a.num * b.den + b.num * a.den) % den;
    if (num < 0)
        num += den;
    return reduced_frac(num, den);
}

} // namespace

TEST_CASE("reduced_frac normalizes to lowest terms with positive denominator") {
    CHECK(reduced_frac(2, 8) == Frac{1, 4});
    CHECK(reduced_frac(6, 8) == Frac{3, 4});
    CHECK(reduced_frac(0, 5) == Frac{0, 1});
    CHECK(reduced_frac(8, 8) == Frac{1, 1});
    CHECK(reduced_frac(-1, 8) == Frac{-1, 8});
    CHECK(reduced_frac(3, -9) == Frac{-1, 3});
    CHECK_THROWS_AS(reduced_frac(1, 0), std::invalid_argument);
}

TEST_CASE("make_group computes order and exponent") {
    GroupSpec g = make_group({6, 4});
    CHECK(g.order == 24);
    CHECK(g.exponent == 12);
    CHECK(g.dim() == 2);

    GroupSpec c8 = make_group({8});
    CHECK(c8.order == 8);
    CHECK(c8.exponent == 8);

    GroupSpec cube = make_group({2, 2, 2});
    CHECK(cube.order == 8);
    CHECK(cube.exponent == 2);

    CHECK_THROWS_AS(make_group({}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({0}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({-3}), std::invalid_argument);
    // Order overflow guard: 2^32 x 2^32 exceeds the limit.
    CHECK_THROWS_AS(make_group({1LL << 32, 1LL << 32}), std::invalid_argument);
}

TEST_CASE("element codec is a bijection on every index") {
    for (const auto& moduli :
         {std::vector<std::int64_t>{12}, {2, 4}, {2, 2, 2}, {10, 10, 10, 10}, {3, 5, 7}}) {
        GroupSpec g = make_group(moduli);
        REQUIRE(g.order <= 10'000);
        for (std::int64_t i = 0; i < g.order; ++i) {
            GroupElement e = element_at(g, i);
            CHECK(element_valid(g, e));
            CHECK(index_of(g, e) == i);
        }
    }
}

TEST_CASE("codec places coordinate 0 as the most significant digit") {
    GroupSpec g = make_group({2, 4});
    CHECK(element_at(g, 0) == GroupElement{0, 0});
    CHECK(element_at(g, 1) == GroupElement{0, 1});
    CHECK(element_at(g, 4) == GroupElement{1, 0});
    CHECK(index_of(g, {1, 3}) == 7);
}

TEST_CASE("element arithmetic wraps per coordinate") {
    GroupSpec g = make_group({6, 4});
    CHECK(elem_combine(g, {5, 3}, {2, 2}, CombineOp::Add) == GroupElement{1, 1});
    CHECK(elem_combine(g, {1, 0}, {2, 1}, CombineOp::Sub) == GroupElement{5, 3});
    CHECK(elem_neg(g, {0, 0}) == GroupElement{0, 0});
    CHECK(elem_neg(g, {1, 3}) == GroupElement{5, 1});
    CHECK(zero_element(g) == GroupElement{0, 0});
    CHECK_THROWS_AS(index_of(g, {6, 0}), std::invalid_argument);
    CHECK_THROWS_AS(index_of(g, {0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(index_of(g, {0}), std::invalid_argument);
}

TEST_CASE("pairing values are reduced with denominator dividing the exponent") {
    GroupSpec g = make_group({6, 4});
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        GroupElement lam = element_at(g, static_cast<std::int64_t>(rng_below(rng, 24)));
        GroupElement a = element_at(g, static_cast<std::int64_t>(rng_below(rng, 24)));
        Frac f = pairing(g, lam, a);
        CHECK(g.exponent % f.den == 0);
        CHECK(std::gcd(f.num, f.den) == 1);
        CHECK(f.num >= 0);
        CHECK(f.num < f.den);
    }
}

TEST_CASE("pairing is biadditive and symmetric") {
    for (const auto& moduli : {std::vector<std::int64_t>{8, 8, 8}, {6, 4}, {12}}) {
        GroupSpec g = make_group(moduli);
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 100; ++trial) {
            auto pick = [&] {
                return element_at(g, static_cast<std::int64_t>(
                                         rng_below(rng, static_cast<std::uint64_t>(g.order))));
            };
            GroupElement lam = pick(), a = pick(), b = pick();
            Frac lhs = pairing(g, lam, elem_combine(g, a, b, CombineOp::Add));
            Frac rhs = add_mod1(pairing(g, lam, a), pairing(g, lam, b));
            CHECK(lhs == rhs);
            CHECK(pairing(g, lam, a) == pairing(g, a, lam));
        }
    }
}

TEST_CASE("pairing on Z_8 matches k*a/8") {
    GroupSpec g = make_group({8});
    CHECK(pairing(g, {1}, {1}) == Frac{1, 8});
    CHECK(pairing(g, {2}, {2}) == Frac{1, 2});
    CHECK(pairing(g, {3}, {4}) == Frac{1, 2});
    CHECK(pairing(g, {0}, {5}) == Frac{0, 1});
}

TEST_CASE("format_element prints coordinates in parentheses") {
    GroupSpec g = make_group({8, 8, 8});
    CHECK(format_element({0, 2, 7}) == "(0,2,7)");
    GroupSpec c6 = make_group({6});
    CHECK(format_element({4}) == "(4)");
}

TEST_CASE("within_cap respects the enumeration cap") {
    GroupSpec g = make_group({1 << 12});
    CHECK(g.within_cap());
    GroupSpec big = make_group({1LL << 30});
    CHECK_FALSE(big.within_cap());
}
