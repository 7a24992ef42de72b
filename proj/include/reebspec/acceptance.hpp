#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "reebspec/jumps.hpp"
#include "reebspec/spectrum.hpp"
#include "reebspec/torus.hpp"

namespace reebspec::acceptance {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
};

namespace detail {

// Independent high-precision float evaluation (does not touch the exact
// floor/compare machinery it is used to check). 192 bits > 50 digits.
inline mpf_class to_mpf(const QuadExt& x, unsigned prec_bits = 192) {
    mpf_class root(0, prec_bits);
    mpf_sqrt_ui(root.get_mpf_t(), x.d() == 0 ? 1 : x.d());
    if (x.d() == 0) root = 0;
    mpf_class p(x.p(), prec_bits), q(x.q(), prec_bits), s(x.s(), prec_bits);
    return (p + q * root) / s;
}

inline Int mpf_floor_int(const mpf_class& v) {
    mpf_class f(0, v.get_prec());
    mpf_floor(f.get_mpf_t(), v.get_mpf_t());
    Int z;
    mpz_set_f(z.get_mpz_t(), f.get_mpf_t());
    return z;
}

inline const unsigned long kD[] = {2, 3, 5, 6, 7, 10, 11, 13, 15, 17, 19, 21};

inline QuadExt random_unit_irrational(std::mt19937_64& rng, unsigned long d) {
    std::uniform_int_distribution<long> coeff(1, 40);
    std::uniform_int_distribution<long> den(1, 40);
    while (true) {
        QuadExt x(Int(coeff(rng) - 20), Int(coeff(rng)), Int(den(rng)), d);
        QuadExt frac = x - QuadExt(Rat(quad_floor(x)));
        if (frac.sign() > 0 && !frac.is_rational()) return frac;
    }
}

inline std::vector<QuadExt> random_ratios(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<QuadExt> out;
    for (int i = 0; i < count; ++i) {
        unsigned long d = kD[static_cast<std::size_t>(i) % std::size(kD)];
        out.push_back(QuadExt(1L) + QuadExt(9L) * random_unit_irrational(rng, d));
    }
    return out;
}

template <class F>
CriterionResult run(int id, std::string name, double budget_s, F body) {
    auto t0 = std::chrono::steady_clock::now();
    bool passed = false;
    std::string detail;
    try {
        std::optional<std::string> err = body();
        passed = !err.has_value();
        if (err) detail = *err;
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (passed && secs > budget_s) {
        passed = false;
        std::ostringstream os;
        os << "time budget exceeded: " << secs << " s > " << budget_s << " s";
        detail = os.str();
    }
    return {id, std::move(name), passed, std::move(detail), secs};
}

}  // namespace detail

// 1. E(1, sqrt2): good iterates to degree 24 hit {2,4,...,24} once each in
// a pinned action order, cross-checked against a 50-digit float oracle.
inline CriterionResult criterion1() {
    return detail::run(1, "ellipsoid spectrum table E(1,sqrt2) to degree 24", 1.0, []()
                           -> std::optional<std::string> {
        Spectrum s = ellipsoid_spectrum(EllipsoidParams(QuadExt(1L), QuadExt::sqrt_of(2)));
        auto its = enumerate_iterates_by_degree(s, Int(24));
        const std::vector<std::pair<std::string, long>> want = {
            {"g1", 1}, {"g2", 1}, {"g1", 2}, {"g2", 2}, {"g1", 3}, {"g1", 4},
            {"g2", 3}, {"g1", 5}, {"g2", 4}, {"g1", 6}, {"g1", 7}, {"g2", 5}};
        if (its.size() != 12) return "expected 12 iterates";
        std::set<Int> degrees;
        for (std::size_t i = 0; i < 12; ++i) {
            if (!its[i].good) return "bad iterate in E(1,sqrt2) table";
            if (its[i].parent->label != want[i].first || its[i].k != want[i].second)
                return "action order mismatch at position " + std::to_string(i);
            degrees.insert(its[i].degree);
        }
        for (Int d(2); d <= 24; d += 2)
            if (!degrees.count(d)) return "missing degree " + d.get_str();

        // float oracle: re-enumerate with 192-bit arithmetic only
        struct Row {
            mpf_class action;
            std::string label;
            long k;
            Int deg;
        };
        std::vector<Row> oracle;
        for (const auto& o : s.orbits) {
            mpf_class x = detail::to_mpf(o.kind.elliptic().alpha) + o.kind.r();
            mpf_class a = detail::to_mpf(o.action);
            for (long k = 1;; ++k) {
                Int deg = 2 * detail::mpf_floor_int(mpf_class(x * k));
                if (deg > 24) break;
                oracle.push_back({mpf_class(a * k), o.label, k, deg});
            }
        }
        std::stable_sort(oracle.begin(), oracle.end(),
                         [](const Row& u, const Row& v) { return u.action < v.action; });
        if (oracle.size() != its.size()) return "oracle row count mismatch";
        for (std::size_t i = 0; i < its.size(); ++i) {
            if (oracle[i].label != its[i].parent->label || oracle[i].k != its[i].k ||
                oracle[i].deg != its[i].degree)
                return "oracle disagrees at position " + std::to_string(i);
        }
        return std::nullopt;
    });
}

// 2. For 50 random quadratic ratios, rank 1 at every even degree in
// [2,200] and nothing else.
inline CriterionResult criterion2() {
    return detail::run(2, "even-degree ranks for 50 random ellipsoids", 30.0, []()
                           -> std::optional<std::string> {
        for (const QuadExt& rho : detail::random_ratios(20240824, 50)) {
            Spectrum s = ellipsoid_spectrum(EllipsoidParams(QuadExt(1L), rho));
            auto ranks = hc_ranks(s, Int(200));
            if (ranks.size() != 100) return "rank table size != 100 for rho=" + rho.str();
            for (Int d(2); d <= 200; d += 2) {
                auto it = ranks.find(d);
                if (it == ranks.end() || it->second != 1)
                    return "rank != 1 at degree " + d.get_str() + " for rho=" + rho.str();
            }
        }
        return std::nullopt;
    });
}

// 3. Ordering condition: action order equals degree order for every
// criterion-2 spectrum, action cap 1000*a1.
inline CriterionResult criterion3() {
    return detail::run(3, "ordering condition on criterion-2 spectra", 60.0, []()
                           -> std::optional<std::string> {
        for (const QuadExt& rho : detail::random_ratios(20240824, 50)) {
            Spectrum s = ellipsoid_spectrum(EllipsoidParams(QuadExt(1L), rho));
            if (!check_condition_O(s, QuadExt(1000L)).holds)
                return "ordering violated for rho=" + rho.str();
        }
        return std::nullopt;
    });
}

// 4. Realization round trip with field-exact identities.
inline CriterionResult criterion4() {
    return detail::run(4, "realization round trip for 100 random ratios", 30.0, []()
                           -> std::optional<std::string> {
        for (const QuadExt& rho : detail::random_ratios(424242, 100)) {
            Realization r = realize_from_ratio(rho);
            if (r.alpha1 != QuadExt(1L) / rho) return "alpha1 identity failed";
            if ((QuadExt(r.r2) + r.alpha2) / (QuadExt(1L) + r.alpha1) != rho)
                return "ratio identity failed";
            if (quad_floor(QuadExt(1L) / r.alpha1) + 1 != r.r2) return "r2 identity failed";
            auto verdict = classify(ellipsoid_spectrum(r.ellipsoid), Int(200));
            const auto* c = std::get_if<ConsistentTwoOrbit>(&verdict);
            if (!c) return "classify not consistent for rho=" + rho.str();
            if (c->alpha1 != r.alpha1 || c->alpha2 != r.alpha2 || c->r1 != r.r1 ||
                c->r2 != r.r2)
                return "round-trip tuple mismatch for rho=" + rho.str();
        }
        return std::nullopt;
    });
}

// 5. Index superadditivity over 10^4 random (orbit, partition) cases.
inline CriterionResult criterion5() {
    return detail::run(5, "index superadditivity, 10^4 random partitions", 10.0, []()
                           -> std::optional<std::string> {
        std::mt19937_64 rng(5150);
        std::uniform_int_distribution<int> nparts(1, 6);
        std::uniform_int_distribution<long> part(1, 33);
        std::uniform_int_distribution<long> rpick(-2, 5);
        std::uniform_int_distribution<int> kindpick(0, 2);
        for (int i = 0; i < 10000; ++i) {
            long r = rpick(rng);
            OrbitKind kind = [&] {
                switch (kindpick(rng)) {
                    case 0:
                        return OrbitKind(Elliptic{r, detail::random_unit_irrational(
                                                        rng, detail::kD[i % std::size(detail::kD)])});
                    case 1:
                        return OrbitKind(EvenHyperbolic{r});
                    default:
                        return OrbitKind(OddHyperbolic{r});
                }
            }();
            SimpleOrbit o("o", QuadExt(1L), kind);
            std::vector<long> parts(static_cast<std::size_t>(nparts(rng)));
            for (auto& p : parts) p = part(rng);
            auto chk = check_superadditivity(o, parts);
            if (!chk.holds)
                return "superadditivity failed at case " + std::to_string(i);
        }
        return std::nullopt;
    });
}

// 6. Jump sequences: (a) the xi2 = xi1 - 1/2 worked example, (b) common
// jumps for 50 constructed relation triples, (c) the alpha1 = A1/A2 bridge
// on the criterion-2 spectra, horizon 10^4.
inline CriterionResult criterion6() {
    return detail::run(6, "jump subsequence, common jumps, action-ratio bridge", 60.0, []()
                           -> std::optional<std::string> {
        QuadExt xi1(0, 1, 2, 2);      // 1/sqrt2
        QuadExt xi2(-1, 1, 2, 2);     // 1/sqrt2 - 1/2
        if (!is_jump_subsequence(xi2, xi1, 10000).holds)
            return "(a) subsequence check failed";
        auto rel = find_affine_relation(xi1, xi2);
        if (!rel || rel->first != Rat(1) || rel->second != Rat(-1, 2))
            return "(a) affine relation not (1, -1/2)";

        std::mt19937_64 rng(606060);
        for (int i = 0; i < 50; ++i) {
            QuadExt a = detail::random_unit_irrational(
                rng, detail::kD[static_cast<std::size_t>(i) % std::size(detail::kD)]);
            QuadExt b;
            if (i % 2 == 0) {
                b = a / QuadExt(1 + i % 5);
            } else if ((a - QuadExt(Rat(1, 2))).sign() > 0) {
                b = a - QuadExt(Rat(1, 2));
            } else {
                b = a / QuadExt(2L);
            }
            auto k = find_common_jump(a, b, Int(10000));
            if (!k) return "(b) no common jump within 10^4 at case " + std::to_string(i);
            if (!is_jump(a, *k) || !is_jump(b, *k))
                return "(b) reported common jump fails recheck";
        }

        for (const QuadExt& rho : detail::random_ratios(20240824, 50)) {
            Spectrum s = ellipsoid_spectrum(EllipsoidParams(QuadExt(1L), rho));
            QuadExt from_floquet = s.orbits[0].kind.elliptic().alpha;
            QuadExt from_actions = s.orbits[0].action / s.orbits[1].action;
            if (from_floquet != from_actions) return "(c) alpha1 != A1/A2";
            if (jump_sequence(from_floquet, 10000).terms !=
                jump_sequence(from_actions, 10000).terms)
                return "(c) jump sequences differ";
        }
        return std::nullopt;
    });
}

// 7. Scaled jumps: xi2 = xi1/k recovers k and has quasimorphism defect 0.
inline CriterionResult criterion7() {
    return detail::run(7, "integer scaling factor and zero defect", 10.0, []()
                           -> std::optional<std::string> {
        std::mt19937_64 rng(777);
        for (long k = 1; k <= 5; ++k) {
            for (int trial = 0; trial < 5; ++trial) {
                QuadExt xi1 =
                    detail::random_unit_irrational(rng, detail::kD[trial % 5]) / QuadExt(2L);
                QuadExt xi2 = xi1 / QuadExt(k);
                auto factor = kotschick_factor(xi1, xi2);
                if (!factor || *factor != k)
                    return "factor != " + std::to_string(k) + " for xi1=" + xi1.str();
                auto defect = quasimorphism_defect(xi1, xi2, 500);
                if (defect.defect != 0)
                    return "nonzero defect for xi1=" + xi1.str() + ", k=" + std::to_string(k);
            }
        }
        return std::nullopt;
    });
}

// 8. Torus closure trichotomy: dense, degenerate, and rational cases.
inline CriterionResult criterion8() {
    return detail::run(8, "torus closure trichotomy", 120.0, []()
                           -> std::optional<std::string> {
        Basis b123 = make_basis({"1", "sqrt(2)", "sqrt(3)"});
        TorusTranslation dense({LinComb(b123, {Rat(-1), Rat(1), Rat(0)}),
                                LinComb(b123, {Rat(-1), Rat(0), Rat(1)})});
        if (rational_span_dim(dense) != 3) return "dense case: span dim != 3";
        if (!density_check(dense, Rat(1, 50), 100000).dense_to_eps)
            return "dense case: eps=0.02 net not covered by 10^5 points";

        Basis b12 = make_basis({"1", "sqrt(2)"});
        TorusTranslation degen({LinComb(b12, {Rat(0), Rat(1, 2)}),
                                LinComb(b12, {Rat(0), Rat(1, 4)})});
        auto cd = closure_description(degen);
        if (cd.relation_basis != IntMat{{Int(1), Int(-2), Int(0)}})
            return "degenerate case: relation basis mismatch";
        if (cd.l != 1 || cd.d != 1) return "degenerate case: (l, d) != (1, 1)";
        auto pts = orbit_points(degen, 500);
        for (const auto& pt : pts) {
            LinComb lhs = pt[0] - pt[1].scaled(Rat(2));
            if (!lhs.is_rational_by_coords() || !rat_is_integer(lhs.rational_value()))
                return "degenerate case: relation m=(1,-2,0) violated on the orbit";
        }

        TorusTranslation rational({LinComb::constant(b12, Rat(1, 3))});
        auto cdr = closure_description(rational);
        if (cdr.l != 0 || cdr.d != 3) return "rational case: (l, d) != (0, 3)";
        auto rpts = orbit_points(rational, 9);
        for (std::size_t m = 0; m + 3 < rpts.size(); ++m)
            if (!(rpts[m][0] == rpts[m + 3][0])) return "rational case: period != 3";
        return std::nullopt;
    });
}

// 9. Collision searches: the odd-hyperbolic pair at degree 14, 100 random
// mixed pairs, and the non-convex spectrum with its witness.
inline CriterionResult criterion9() {
    return detail::run(9, "collision case searches", 60.0, []()
                           -> std::optional<std::string> {
        Spectrum hyp({SimpleOrbit("a", QuadExt(1L), OrbitKind(OddHyperbolic{1})),
                      SimpleOrbit("b", QuadExt::sqrt_of(2), OrbitKind(OddHyperbolic{2}))});
        auto c14 = find_degree_collision(hyp, Int(100));
        if (!c14 || c14->first.degree != 14) return "odd-hyperbolic pair: no collision at 14";

        std::mt19937_64 rng(909090);
        std::uniform_int_distribution<long> rpick(1, 4);
        for (int i = 0; i < 100; ++i) {
            QuadExt alpha = detail::random_unit_irrational(
                rng, detail::kD[static_cast<std::size_t>(i) % std::size(detail::kD)]);
            Spectrum mixed(
                {SimpleOrbit("a", QuadExt(1L), OrbitKind(OddHyperbolic{1})),
                 SimpleOrbit("b", QuadExt(1L), OrbitKind(Elliptic{rpick(rng), alpha}))});
            auto c = find_degree_collision(mixed, Int(10000));
            if (!c) return "mixed pair " + std::to_string(i) + ": no collision to 10^4";
            if (c->first.degree != c->second.degree)
                return "mixed pair " + std::to_string(i) + ": witness degrees differ";
        }

        Spectrum flat({SimpleOrbit("h", QuadExt(1L), OrbitKind(EvenHyperbolic{1})),
                       SimpleOrbit("e", QuadExt::sqrt_of(2),
                                   OrbitKind(Elliptic{0, QuadExt(0, 1, 2, 2)}))});
        auto verdict = classify(flat, Int(200));
        if (!std::holds_alternative<NotDynamicallyConvex>(verdict))
            return "non-convex spectrum not rejected";
        auto witness = find_degree_collision(flat, Int(200));
        if (!witness || witness->first.degree != witness->second.degree)
            return "non-convex spectrum: no collision witness to 200";
        return std::nullopt;
    });
}

// 10. rotation_hit finds the k=3 hit at tol 1e-2 and a hit at tol 1e-6
// within 10^7 steps; both re-verified with exact arithmetic.
inline CriterionResult criterion10() {
    return detail::run(10, "rotation hits on R/3Z with step 1+sqrt2", 10.0, []()
                           -> std::optional<std::string> {
        QuadExt step(1, 1, 1, 2);
        QuadExt target(Rat(5, 4));
        QuadExt v(3L);
        auto dist = [&](const Int& k) {
            QuadExt x = step * QuadExt(Rat(k));
            x = x - QuadExt(Rat(quad_floor(x / v))) * v;
            QuadExt diff = x - target;
            if (diff.sign() < 0) diff = -diff;
            QuadExt wrap = v - diff;
            return diff < wrap ? diff : wrap;
        };
        Int k1 = rotation_hit(Int(3), step, target, Rat(1, 100), Int(1000));
        if (k1 != 3) return "tol 1e-2 hit is not k=3";
        if (!(dist(k1) < QuadExt(Rat(1, 100)))) return "tol 1e-2 hit fails exact recheck";
        Int k2 = rotation_hit(Int(3), step, target, Rat(1, 1000000), Int(10000000));
        if (k2 > 10000000) return "tol 1e-6 hit beyond 10^7";
        if (!(dist(k2) < QuadExt(Rat(1, 1000000))))
            return "tol 1e-6 hit fails exact recheck";
        return std::nullopt;
    });
}

inline std::vector<CriterionResult> run_all() {
    return {criterion1(), criterion2(), criterion3(), criterion4(), criterion5(),
            criterion6(), criterion7(), criterion8(), criterion9(), criterion10()};
}

// One line per criterion; returns 0 iff all pass.
inline int report(std::ostream& os) {
    int failures = 0;
    for (const CriterionResult& r : run_all()) {
        std::ostringstream line;
        line << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "  (" << r.seconds << " s)";
        if (!r.passed) line << "  -- " << r.detail;
        os << line.str() << "\n";
        if (!r.passed) ++failures;
    }
    if (failures == 0)
        os << "all 10 acceptance criteria passed\n";
    else
        os << failures << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace reebspec::acceptance
