#include <doctest.h>

#include "reebspec/lincomb.hpp"
#include "test_util.hpp"

using namespace reebspec;

namespace {

LinComb make(const Basis& basis, std::vector<Rat> coeffs) {
    return LinComb(basis, std::move(coeffs));
}

}  // namespace

TEST_CASE("lincomb_floor examples") {
    Basis b = make_basis({"1", "sqrt(2)", "sqrt(3)"});
    // 5*(sqrt2-1) + 3*(sqrt3-1) = -8 + 5 sqrt2 + 3 sqrt3 = 4.267...
    CHECK(lincomb_floor(make(b, {Rat(-8), Rat(5), Rat(3)})) == 4);
    // rational short-circuit
    CHECK(lincomb_floor(make(b, {Rat(7, 2), Rat(0), Rat(0)})) == 3);
    // sqrt2 + sqrt3 = 3.146...
    CHECK(lincomb_floor(make(b, {Rat(0), Rat(1), Rat(1)})) == 3);
}

TEST_CASE("lincomb_floor agrees with quad_floor on a {1, sqrt(d)} basis") {
    Basis b = make_basis({"1", "sqrt(2)"});
    std::mt19937_64 rng(31);
    for (int i = 0; i < 2000; ++i) {
        std::uniform_int_distribution<long> c(-60, 60);
        std::uniform_int_distribution<long> den(1, 30);
        Rat u(c(rng), den(rng));
        Rat v(c(rng), den(rng));
        u.canonicalize();
        v.canonicalize();
        QuadExt q = QuadExt(u) + QuadExt(v) * QuadExt::sqrt_of(2);
        CHECK(lincomb_floor(make(b, {u, v})) == quad_floor(q));
    }
}

TEST_CASE("precision cap surfaces as an explicit error") {
    // adversarial constant whose enclosure always straddles the integer 1
    auto vec = std::make_shared<std::vector<NamedConstant>>();
    vec->push_back(unit_constant());
    vec->push_back(NamedConstant{"almost_one", [](unsigned bits) {
                                     Rat eps(Int(1), Int(Int(1) << std::min(bits, 900u)));
                                     return RatInterval{1 - eps, 1 + eps};
                                 }});
    LinComb x(Basis(vec), {Rat(0), Rat(1)});
    CHECK_THROWS_AS(lincomb_floor(x, 1024), PrecisionExhaustedError);
}

TEST_CASE("arithmetic and comparison") {
    Basis b = make_basis({"1", "sqrt(2)"});
    LinComb x = make(b, {Rat(1, 2), Rat(1)});
    LinComb y = make(b, {Rat(0), Rat(2)});
    CHECK(lincomb_compare(x, y) == Ordering::LT);  // 1.91 < 2.83
    CHECK(lincomb_compare(x, x) == Ordering::EQ);
    CHECK((x + y) == make(b, {Rat(1, 2), Rat(3)}));
    CHECK((y - x) == make(b, {Rat(-1, 2), Rat(1)}));
    CHECK(x.scaled(Rat(2)) == make(b, {Rat(1), Rat(2)}));
    CHECK_THROWS_AS(x + LinComb::constant(make_basis({"1", "sqrt(3)"}), Rat(1)),
                    FieldMismatchError);
}

TEST_CASE("mod-1 reduction lands in [0,1)") {
    Basis b = make_basis({"1", "sqrt(2)"});
    std::mt19937_64 rng(77);
    for (int i = 0; i < 300; ++i) {
        std::uniform_int_distribution<long> c(-50, 50);
        LinComb x = make(b, {Rat(c(rng), 7), Rat(c(rng), 5)});
        LinComb r = lincomb_mod1(x);
        CHECK(lincomb_floor(r) == 0);
        // difference is an integer
        LinComb diff = x - r;
        CHECK(diff.is_rational_by_coords());
        CHECK(rat_is_integer(diff.rational_value()));
    }
}

TEST_CASE("refinement never escapes an earlier enclosure") {
    Basis b = make_basis({"1", "sqrt(2)", "sqrt(3)"});
    LinComb x = make(b, {Rat(-3, 7), Rat(22, 3), Rat(-9, 4)});
    RatInterval prev = x.enclosure(64);
    for (unsigned bits = 128; bits <= 1024; bits *= 2) {
        RatInterval cur = x.enclosure(bits).meet(prev);
        CHECK(cur.lo >= prev.lo);
        CHECK(cur.hi <= prev.hi);
        prev = cur;
    }
}
