#include <doctest.h>

#include "reebspec/torus.hpp"
#include "test_util.hpp"

using namespace reebspec;

namespace {

Basis b12() { return make_basis({"1", "sqrt(2)"}); }
Basis b123() { return make_basis({"1", "sqrt(2)", "sqrt(3)"}); }

LinComb lc(const Basis& b, std::vector<Rat> c) { return LinComb(b, std::move(c)); }

}  // namespace

TEST_CASE("rational_span_dim examples") {
    TorusTranslation third({LinComb::constant(b12(), Rat(1, 3))});
    CHECK(rational_span_dim(third) == 1);  // l = 0

    TorusTranslation dense1({lc(b12(), {Rat(-1), Rat(1)})});  // sqrt2 - 1
    CHECK(rational_span_dim(dense1) == 2);  // l = 1

    TorusTranslation dense2({lc(b123(), {Rat(-1), Rat(1), Rat(0)}),
                             lc(b123(), {Rat(-1), Rat(0), Rat(1)})});
    CHECK(rational_span_dim(dense2) == 3);  // l = 2
}

TEST_CASE("relation_lattice examples") {
    TorusTranslation t1({lc(b12(), {Rat(0), Rat(1, 2)}), lc(b12(), {Rat(0), Rat(1, 4)})});
    CHECK(relation_lattice(t1) == IntMat{{Int(1), Int(-2), Int(0)}});

    TorusTranslation t2({lc(b123(), {Rat(-1), Rat(1), Rat(0)}),
                         lc(b123(), {Rat(-1), Rat(0), Rat(1)})});
    CHECK(relation_lattice(t2).empty());

    TorusTranslation t3({LinComb::constant(b12(), Rat(1, 2)),
                         LinComb::constant(b12(), Rat(1, 3))});
    CHECK(relation_lattice(t3) == IntMat{{Int(2), Int(0), Int(-1)}, {Int(0), Int(3), Int(-1)}});
}

TEST_CASE("span dim + relation rank = n + 1") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<long> c(-8, 8);
        std::uniform_int_distribution<long> den(1, 6);
        std::vector<LinComb> coords;
        std::size_t n = 1 + trial % 3;
        Basis b = b123();
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rat> row = {Rat(c(rng), den(rng)), Rat(c(rng), den(rng)),
                                    Rat(trial % 2 ? c(rng) : 0, den(rng))};
            for (auto& r : row) r.canonicalize();
            coords.push_back(lc(b, row));
        }
        TorusTranslation t(std::move(coords));
        CHECK(rational_span_dim(t) + relation_lattice(t).size() == n + 1);
    }
}

TEST_CASE("orbit_points examples") {
    TorusTranslation third({LinComb::constant(b12(), Rat(1, 3))});
    auto pts = orbit_points(third, 5);
    REQUIRE(pts.size() == 6);
    std::vector<Rat> expect = {Rat(0), Rat(1, 3), Rat(2, 3), Rat(0), Rat(1, 3), Rat(2, 3)};
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(pts[i][0].rational_value() == expect[i]);

    TorusTranslation irr({lc(b12(), {Rat(-1), Rat(1)})});
    auto pts2 = orbit_points(irr, 2);
    CHECK(pts2[1][0] == lc(b12(), {Rat(-1), Rat(1)}));
    CHECK(pts2[2][0] == lc(b12(), {Rat(-2), Rat(2)}));  // 0.828..., no wrap

    TorusTranslation q34({LinComb::constant(b12(), Rat(3, 4))});
    auto pts3 = orbit_points(q34, 2);
    CHECK(pts3[2][0].rational_value() == Rat(1, 2));
}

TEST_CASE("closure_description examples") {
    TorusTranslation third({LinComb::constant(b12(), Rat(1, 3))});
    auto cd1 = closure_description(third);
    CHECK(cd1.l == 0);
    CHECK(cd1.d == 3);
    REQUIRE(cd1.representatives.size() == 3);
    CHECK(cd1.representatives[1][0].rational_value() == Rat(1, 3));
    CHECK(cd1.representatives[2][0].rational_value() == Rat(2, 3));

    TorusTranslation halves(
        {lc(b12(), {Rat(0), Rat(1, 2)}), lc(b12(), {Rat(0), Rat(1, 4)})});
    auto cd2 = closure_description(halves);
    CHECK(cd2.l == 1);
    CHECK(cd2.d == 1);
    // subtorus direction is the line (2u, u)
    REQUIRE(cd2.subtorus_basis.size() == 1);
    CHECK(cd2.subtorus_basis[0] == IntVec{Int(2), Int(1)});

    // relation with a gcd-2 character: xi = ((sqrt2-1)/2, 1/2 + (sqrt2-1)/2)
    TorusTranslation twist({lc(b12(), {Rat(-1, 2), Rat(1, 2)}),
                            lc(b12(), {Rat(0), Rat(1, 2)})});
    auto cd3 = closure_description(twist);
    CHECK(cd3.l == 1);
    CHECK(cd3.d == 2);
}

TEST_CASE("coset count matches a brute-force orbit scan") {
    // two points lie in the same coset iff their difference annihilates
    // every rational direction integrally
    auto brute_d = [](const TorusTranslation& t, std::size_t span) {
        IntMat sat = rational_direction_lattice(t);
        std::size_t d = 1;
        for (; d <= span; ++d) {
            bool in_base = true;
            for (const auto& v : sat) {
                Rat dot(0);
                for (std::size_t i = 0; i < t.n(); ++i)
                    dot += Rat(v[i]) * t.xi[i].coeffs()[0] * Rat(static_cast<long>(d));
                dot.canonicalize();
                if (!rat_is_integer(dot)) in_base = false;
            }
            if (in_base) break;
        }
        return d;
    };
    std::vector<TorusTranslation> cases = {
        TorusTranslation({LinComb::constant(b12(), Rat(1, 3))}),
        TorusTranslation({lc(b12(), {Rat(-1, 2), Rat(1, 2)}), lc(b12(), {Rat(0), Rat(1, 2)})}),
        TorusTranslation({lc(b12(), {Rat(1, 5), Rat(1, 2)}), lc(b12(), {Rat(0), Rat(1, 2)})}),
        TorusTranslation({LinComb::constant(b12(), Rat(5, 6)),
                          lc(b12(), {Rat(0), Rat(1, 3)})})};
    for (const auto& t : cases)
        CHECK(closure_description(t).d == brute_d(t, 100));
}

TEST_CASE("orbit points satisfy every relation exactly, l=0 periodicity") {
    TorusTranslation t({LinComb::constant(b12(), Rat(2, 5)),
                        LinComb::constant(b12(), Rat(1, 5))});
    auto cd = closure_description(t);
    CHECK(cd.l == 0);
    CHECK(cd.d == 5);
    auto pts = orbit_points(t, 12);
    for (std::size_t m = 0; m + 5 < pts.size(); ++m)
        for (std::size_t i = 0; i < t.n(); ++i)
            CHECK(pts[m][i] == pts[m + 5][i]);
}

TEST_CASE("density_check examples") {
    TorusTranslation dense1({lc(b12(), {Rat(-1), Rat(1)})});
    auto r1 = density_check(dense1, Rat(1, 100), 200);
    CHECK(r1.dense_to_eps);

    TorusTranslation third({LinComb::constant(b12(), Rat(1, 3))});
    auto r2 = density_check(third, Rat(2, 5), 3);
    CHECK(r2.dense_to_eps);
    CHECK(r2.worst_gap < 1e-9);  // closure is 3 points, all hit exactly

    // too few orbit points leave a certified gap
    auto r3 = density_check(dense1, Rat(1, 100), 20);
    CHECK_FALSE(r3.dense_to_eps);
}

TEST_CASE("rotation_hit examples") {
    QuadExt step(1, 1, 1, 2);  // 1 + sqrt2
    QuadExt target(Rat(5, 4));
    CHECK(rotation_hit(Int(3), step, target, Rat(1, 100), Int(1000)) == 3);

    QuadExt small(-1, 1, 1, 2);  // sqrt2 - 1
    CHECK(rotation_hit(Int(1), small, QuadExt(0L), Rat(1, 2), Int(10)) == 1);

    CHECK_THROWS_AS(
        rotation_hit(Int(3), step, target, Rat(1, 100000000), Int(100)),
        NotFoundError);
    CHECK_THROWS_AS(rotation_hit(Int(3), QuadExt(Rat(1, 2)), target, Rat(1, 10), Int(10)),
                    DomainError);
}

TEST_CASE("rotation_hit result is re-verified exactly and is minimal") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        QuadExt step = testutil::random_unit_irrational(rng, 2) + QuadExt(1L);
        QuadExt target(Rat(static_cast<long>(rng() % 7), 4));
        Int v(3);
        Rat tol(1, 50);
        Int k = rotation_hit(v, step, target, tol, Int(100000));
        QuadExt vq{Rat(v)};
        auto dist = [&](const Int& kk) {
            QuadExt x = step * QuadExt(Rat(kk));
            x = x - QuadExt(Rat(quad_floor(x / vq))) * vq;
            QuadExt diff = x - target;
            if (diff.sign() < 0) diff = -diff;
            QuadExt wrap = vq - diff;
            return diff < wrap ? diff : wrap;
        };
        CHECK(dist(k) < QuadExt(tol));
        for (Int j(1); j < k; ++j) CHECK_FALSE(dist(j) < QuadExt(tol));
    }
}
