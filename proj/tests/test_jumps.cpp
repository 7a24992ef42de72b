#include <doctest.h>

#include <set>

#include "reebspec/jumps.hpp"
#include "test_util.hpp"

using namespace reebspec;

namespace {

QuadExt inv_sqrt2() { return QuadExt(0, 1, 2, 2); }           // 1/sqrt2 = sqrt2/2
QuadExt inv_sqrt2_minus_half() { return QuadExt(-1, 1, 2, 2); }  // 1/sqrt2 - 1/2
QuadExt golden_frac() { return QuadExt(-1, 1, 2, 5); }        // (sqrt5-1)/2

}  // namespace

TEST_CASE("jump_sequence examples") {
    auto a = jump_sequence(inv_sqrt2(), 6);
    CHECK(a.terms == std::vector<Int>{1, 2, 4, 5, 7, 8});

    auto b = jump_sequence(inv_sqrt2_minus_half(), 5);
    CHECK(b.terms == std::vector<Int>{4, 9, 14, 19, 24});

    auto c = jump_sequence(golden_frac(), 3);
    CHECK(c.terms == std::vector<Int>{1, 3, 4});

    CHECK_THROWS_AS(jump_sequence(QuadExt(Rat(1, 3)), 3), DomainError);
    CHECK_THROWS_AS(jump_sequence(QuadExt(1, 1, 1, 2), 3), DomainError);
}

TEST_CASE("is_jump examples") {
    CHECK_FALSE(is_jump(inv_sqrt2(), Int(3)));
    CHECK(is_jump(inv_sqrt2(), Int(4)));
    CHECK(is_jump(inv_sqrt2(), Int(1)));
}

TEST_CASE("membership/sequence coherence") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        QuadExt xi = testutil::random_unit_irrational(rng, 2);
        auto js = jump_sequence(xi, 30);
        std::set<Int> jumps(js.terms.begin(), js.terms.end());
        for (Int k(1); k <= js.terms.back(); ++k)
            CHECK(is_jump(xi, k) == (jumps.count(k) == 1));
    }
}

TEST_CASE("sandwich identity j_n*xi <= n < (j_n+1)*xi") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        QuadExt xi = testutil::random_unit_irrational(rng, 5);
        auto js = jump_sequence(xi, 50);
        for (std::size_t n = 1; n <= js.terms.size(); ++n) {
            QuadExt nq(static_cast<long>(n));
            CHECK(QuadExt(Rat(js.terms[n - 1])) * xi <= nq);
            CHECK(nq < QuadExt(Rat(Int(js.terms[n - 1] + 1))) * xi);
        }
    }
}

TEST_CASE("subsequence: paper example xi2 = xi1 - 1/2") {
    auto r = is_jump_subsequence(inv_sqrt2_minus_half(), inv_sqrt2(), 10000);
    CHECK(r.holds);
    CHECK(r.horizon == 10000);
}

TEST_CASE("subsequence fails across unrelated values, with witness") {
    // same field, no affine relation with positive slope keeping jumps nested
    QuadExt xi2 = inv_sqrt2();
    QuadExt xi1 = QuadExt(-1, 1, 1, 2);  // sqrt2 - 1
    auto r = is_jump_subsequence(xi2, xi1, 1000);
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(is_jump(xi2, *r.witness) == true);
    CHECK_FALSE(is_jump(xi1, *r.witness));

    CHECK_THROWS_AS(is_jump_subsequence(inv_sqrt2(), golden_frac(), 10),
                    FieldMismatchError);
}

TEST_CASE("identical values are trivially subsequences") {
    auto r = is_jump_subsequence(golden_frac(), golden_frac(), 500);
    CHECK(r.holds);
}

TEST_CASE("find_affine_relation examples") {
    auto r1 = find_affine_relation(inv_sqrt2(), inv_sqrt2_minus_half());
    REQUIRE(r1.has_value());
    CHECK(r1->first == Rat(1));
    CHECK(r1->second == Rat(-1, 2));

    auto r2 = find_affine_relation(inv_sqrt2(), QuadExt(0, 1, 4, 2));
    REQUIRE(r2.has_value());
    CHECK(r2->first == Rat(1, 2));
    CHECK(r2->second == 0);

    auto r3 = find_affine_relation(inv_sqrt2(), QuadExt(Rat(3, 7)));
    REQUIRE(r3.has_value());
    CHECK(r3->first == 0);  // degenerate: rational target
    CHECK(r3->second == Rat(3, 7));

    CHECK_THROWS_AS(find_affine_relation(inv_sqrt2(), QuadExt::sqrt_of(5)),
                    FieldMismatchError);
}

TEST_CASE("subsequence implies positive slope (constructed families)") {
    std::mt19937_64 rng(47);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
        QuadExt xi1 = testutil::random_unit_irrational(rng, 2);
        std::uniform_int_distribution<long> kpick(1, 5);
        // xi2 = xi1/k always nests its jumps into j(xi1)
        QuadExt xi2 = xi1 / QuadExt(kpick(rng));
        if (trial % 2 == 0 && (xi1 - QuadExt(Rat(1, 2))).sign() > 0)
            xi2 = xi1 - QuadExt(Rat(1, 2));  // the paper's q != 0 family
        auto sub = is_jump_subsequence(xi2, xi1, 1000);
        if (!sub.holds) continue;
        auto rel = find_affine_relation(xi1, xi2);
        REQUIRE(rel.has_value());
        CHECK(rel->first > 0);
        ++checked;
    }
    CHECK(checked == 40);
}

TEST_CASE("find_common_jump examples") {
    auto k1 = find_common_jump(inv_sqrt2(), inv_sqrt2_minus_half(), Int(100));
    REQUIRE(k1.has_value());
    CHECK(*k1 == 4);

    auto k2 = find_common_jump(golden_frac(), golden_frac(), Int(100));
    REQUIRE(k2.has_value());
    CHECK(*k2 == jump_sequence(golden_frac(), 1).terms[0]);

    auto k3 = find_common_jump(golden_frac(), QuadExt(-1, 1, 4, 5), Int(100));
    REQUIRE(k3.has_value());
    CHECK(*k3 == 3);
}

TEST_CASE("scaling family: j_n(xi/k) = j_{nk}(xi)") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        QuadExt xi = testutil::random_unit_irrational(rng, 3);
        for (long k = 2; k <= 4; ++k) {
            QuadExt scaled = xi / QuadExt(k);
            auto fine = jump_sequence(xi, 40);
            auto coarse = jump_sequence(scaled, 40 / static_cast<std::size_t>(k));
            for (std::size_t n = 1; n <= coarse.terms.size(); ++n)
                CHECK(coarse.terms[n - 1] == fine.terms[n * static_cast<std::size_t>(k) - 1]);
        }
    }
}

TEST_CASE("kotschick_factor examples") {
    QuadExt q4(0, 1, 4, 2), q8(0, 1, 8, 2);
    auto k1 = kotschick_factor(q4, q8);
    REQUIRE(k1.has_value());
    CHECK(*k1 == 2);

    auto k2 = kotschick_factor(q4, q4);
    REQUIRE(k2.has_value());
    CHECK(*k2 == 1);

    CHECK_FALSE(kotschick_factor(q4, QuadExt(-1, 2, 8, 2)).has_value());
    CHECK_THROWS_AS(kotschick_factor(inv_sqrt2(), q8), DomainError);  // xi1 > 1/2
}

TEST_CASE("quasimorphism_defect examples") {
    QuadExt q4(0, 1, 4, 2), q8(0, 1, 8, 2);
    auto d1 = quasimorphism_defect(q4, q8, 500);
    CHECK(d1.defect == 0);

    auto d2 = quasimorphism_defect(q4, q4, 500);
    CHECK(d2.defect == 0);

    auto d3 = quasimorphism_defect(inv_sqrt2(), inv_sqrt2_minus_half(), 500);
    CHECK(d3.paper_bound == 2);  // [3/sqrt2]
    CHECK(d3.defect <= d3.paper_bound);

    CHECK_THROWS_AS(quasimorphism_defect(QuadExt(-1, 1, 1, 2), inv_sqrt2(), 50),
                    SubsequenceViolationError);
}
