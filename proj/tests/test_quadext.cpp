#include <doctest.h>

#include "reebspec/quadext.hpp"
#include "test_util.hpp"

using namespace reebspec;

namespace {
QuadExt sqrt2() { return QuadExt::sqrt_of(2); }
}

TEST_CASE("quad arithmetic examples") {
    // (1+sqrt2)(2-sqrt2) = sqrt2
    QuadExt a(1, 1, 1, 2), b(2, -1, 1, 2);
    CHECK(a * b == sqrt2());

    // x/x = 1
    QuadExt x(3, -5, 7, 6);
    CHECK(x / x == QuadExt(1L));

    // coordinate-wise addition
    QuadExt lhs = QuadExt(0, 1, 2, 2) + QuadExt(-1, 1, 2, 2);
    CHECK(lhs == QuadExt(-1, 2, 2, 2));
}

TEST_CASE("quad arithmetic mixes rationals into any field") {
    QuadExt r(Rat(3, 4));
    CHECK((r + sqrt2()) - sqrt2() == r);
    CHECK(r * QuadExt::sqrt_of(5) == QuadExt(0, 3, 4, 5));
}

TEST_CASE("quad errors") {
    CHECK_THROWS_AS(sqrt2() + QuadExt::sqrt_of(3), FieldMismatchError);
    CHECK_THROWS_AS(sqrt2() / QuadExt(0L), DivisionByZeroError);
    CHECK_THROWS_AS(QuadExt(0, 1, 1, 4), DomainError);   // perfect square
    CHECK_THROWS_AS(QuadExt(0, 1, 1, 12), DomainError);  // not squarefree
}

TEST_CASE("quad_floor examples") {
    CHECK(quad_floor(QuadExt(3, 2, 2, 2)) == 2);   // 2.914...
    CHECK(quad_floor(QuadExt(Rat(7, 2))) == 3);
    CHECK(quad_floor(-sqrt2()) == -2);             // -1.414...
}

TEST_CASE("quad_compare examples") {
    CHECK(quad_compare(sqrt2(), QuadExt(Rat(3, 2))) == Ordering::LT);
    QuadExt x(5, -3, 11, 7);
    CHECK(quad_compare(x, x) == Ordering::EQ);
    CHECK(quad_compare(QuadExt(1, 1, 1, 2), QuadExt(-1, 2, 1, 2)) == Ordering::GT);
}

TEST_CASE("floor contract: f <= a < f+1 for 10^4 random values") {
    std::mt19937_64 rng(20260824);
    for (int i = 0; i < 10000; ++i) {
        QuadExt a = testutil::random_quad(rng);
        Int f = quad_floor(a);
        CHECK(quad_compare(QuadExt(Rat(f)), a) != Ordering::GT);
        CHECK(quad_compare(a, QuadExt(Rat(Int(f + 1)))) == Ordering::LT);
        // independent float oracle
        CHECK(f == testutil::mpf_floor(testutil::quad_to_mpf(a)));
    }
}

TEST_CASE("floor shift: floor(a+n) = floor(a)+n") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        QuadExt a = testutil::random_quad(rng);
        long n = static_cast<long>(rng() % 2001) - 1000;
        CHECK(quad_floor(a + QuadExt(n)) == quad_floor(a) + n);
    }
}

TEST_CASE("sign agrees with float oracle") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        QuadExt a = testutil::random_quad(rng);
        mpf_class v = testutil::quad_to_mpf(a);
        CHECK(a.sign() == sgn(v));
    }
}

TEST_CASE("parse and print round trip") {
    CHECK(parse_quad("(0+1*sqrt(2))/2") == QuadExt(0, 1, 2, 2));
    CHECK(parse_quad("(3-2*sqrt(5))/4") == QuadExt(3, -2, 4, 5));
    CHECK(parse_quad("7/2") == QuadExt(Rat(7, 2)));
    CHECK(parse_quad("-3") == QuadExt(-3L));
    CHECK(parse_quad("(1+1*sqrt(2))") == QuadExt(1, 1, 1, 2));

    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        QuadExt a = testutil::random_quad(rng);
        CHECK(parse_quad(a.str()) == a);
    }
    CHECK_THROWS_AS(parse_quad("sqrt(2)"), ParseError);
    CHECK_THROWS_AS(parse_quad("(1+2*sqrt(2))/0"), ParseError);
    CHECK_THROWS_AS(parse_quad("1.5"), ParseError);
}

TEST_CASE("normalization makes equality a coordinate check") {
    CHECK(QuadExt(2, 4, 6, 2) == QuadExt(1, 2, 3, 2));
    CHECK(QuadExt(1, 1, -1, 2) == QuadExt(-1, -1, 1, 2));
    // rational results forget the field tag
    CHECK((sqrt2() * sqrt2()) == QuadExt(2L));
    CHECK((sqrt2() - sqrt2()).d() == 0);
}

TEST_CASE("enclosure brackets the value and narrows") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        QuadExt a = testutil::random_quad(rng);
        auto [lo64, hi64] = a.enclosure(64);
        auto [lo128, hi128] = a.enclosure(128);
        CHECK(QuadExt(lo64) <= a);
        CHECK(a <= QuadExt(hi64));
        CHECK(hi128 - lo128 <= hi64 - lo64);
    }
}
