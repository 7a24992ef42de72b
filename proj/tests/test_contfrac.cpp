#include <doctest.h>

#include "reebspec/contfrac.hpp"
#include "test_util.hpp"

using namespace reebspec;

TEST_CASE("continued fraction of sqrt(2) is [1; 2,2,2,...]") {
    auto cf = continued_fraction(QuadExt::sqrt_of(2), 10);
    REQUIRE(cf.quotients.size() == 10);
    CHECK(cf.quotients[0] == 1);
    for (std::size_t i = 1; i < 10; ++i) CHECK(cf.quotients[i] == 2);
    REQUIRE(cf.period.size() == 1);
    CHECK(cf.period[0] == 2);
}

TEST_CASE("continued fraction of the golden ratio is [1; 1,1,...]") {
    auto cf = continued_fraction(QuadExt(1, 1, 2, 5), 8);
    for (const auto& a : cf.quotients) CHECK(a == 1);
    REQUIRE(cf.period.size() == 1);
    CHECK(cf.period[0] == 1);
}

TEST_CASE("continued fraction of 1/sqrt(2) is [0; 1,2,2,...]") {
    auto cf = continued_fraction(QuadExt(0, 1, 2, 2), 8);
    CHECK(cf.quotients[0] == 0);
    CHECK(cf.quotients[1] == 1);
    for (std::size_t i = 2; i < 8; ++i) CHECK(cf.quotients[i] == 2);
    REQUIRE(cf.period.size() == 1);
    CHECK(cf.period[0] == 2);
}

TEST_CASE("rational input is rejected") {
    CHECK_THROWS_AS(continued_fraction(QuadExt(Rat(3, 7)), 5), RationalInputError);
}

TEST_CASE("convergents satisfy |a - p/q| < 1/q^2") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        QuadExt a = testutil::random_quad(rng);
        auto cf = continued_fraction(a, 12);
        for (const auto& [p, q] : convergents(cf.quotients)) {
            if (q == 0) continue;
            QuadExt diff = a - QuadExt(Int(p), 0, Int(q), 0);
            if (diff.sign() < 0) diff = -diff;
            CHECK(diff < QuadExt(Rat(1, 1) / Rat(Int(q * q))));
        }
    }
}

TEST_CASE("quotients reproduce the value: floor recursion") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        QuadExt x = testutil::random_quad(rng);
        auto cf = continued_fraction(x, 6);
        QuadExt cur = x;
        for (const auto& a : cf.quotients) {
            CHECK(quad_floor(cur) == a);
            cur = QuadExt(1L) / (cur - QuadExt(Rat(a)));
        }
    }
}
