#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "reebspec/errors.hpp"
#include "reebspec/orbit.hpp"
#include "reebspec/quadext.hpp"

namespace reebspec {

// E(a1,a2) with a1 < a2 and irrational axis ratio. Actions are stored in
// units of pi, so the action of the short orbit is a1 itself.
struct EllipsoidParams {
    QuadExt a1, a2;

    EllipsoidParams(QuadExt a1_, QuadExt a2_) : a1(std::move(a1_)), a2(std::move(a2_)) {
        if (a1.sign() <= 0 || a2.sign() <= 0)
            throw DomainError("ellipsoid parameters must be positive");
        if (!(a1 < a2)) throw DomainError("ellipsoid requires a1 < a2");
        if ((a1 / a2).is_rational())
            throw DomainError("ellipsoid axis ratio must be irrational");
    }
};

struct Spectrum {
    std::vector<SimpleOrbit> orbits;

    explicit Spectrum(std::vector<SimpleOrbit> os) : orbits(std::move(os)) {
        std::set<std::string> labels;
        for (const auto& o : orbits)
            if (!labels.insert(o.label).second)
                throw DomainError("duplicate orbit label: " + o.label);
    }
};

// A self-contained copy of an iterate used as witness data in results.
struct IterateRef {
    std::string label;
    long k;
    Int cz;
    Int degree;
    QuadExt action;
    bool good;
};

inline IterateRef make_ref(const IteratedOrbit& it) {
    return {it.parent->label, it.k, it.cz, it.degree, it.action, it.good};
}

struct ActionTieDetail : ActionTieError {
    ActionTieDetail(IterateRef a_, IterateRef b_)
        : ActionTieError("action tie between " + a_.label + "^" +
                         std::to_string(a_.k) + " and " + b_.label + "^" +
                         std::to_string(b_.k)),
          a(std::move(a_)),
          b(std::move(b_)) {}
    IterateRef a, b;
};

// The two simple orbits of an irrational ellipsoid, read off the Reeb flow
// z_i(t) = e^{2it/a_i}: gamma1 = (r=1, alpha=a1/a2), gamma2 =
// (r=[a2/a1]+1, alpha=a2/a1-[a2/a1]), with actions a1 and a2.
inline Spectrum ellipsoid_spectrum(const EllipsoidParams& e) {
    QuadExt ratio = e.a2 / e.a1;  // > 1, irrational
    Int fl = quad_floor(ratio);
    long r2 = fl.get_si() + 1;
    std::vector<SimpleOrbit> orbits;
    orbits.emplace_back("g1", e.a1, OrbitKind(Elliptic{1, e.a1 / e.a2}));
    orbits.emplace_back("g2", e.a2,
                        OrbitKind(Elliptic{r2, ratio - QuadExt(Rat(fl))}));
    return Spectrum(std::move(orbits));
}

namespace detail {

inline void check_enumerable(const SimpleOrbit& o) {
    bool ok;
    if (o.kind.is_elliptic())
        ok = o.kind.r() >= 0;
    else if (o.kind.is_even_hyperbolic())
        ok = o.kind.r() >= 1;
    else
        ok = o.kind.r() >= 0;
    if (!ok)
        throw DomainError("orbit " + o.label +
                          ": degrees are not increasing in k, enumeration by "
                          "cap would not terminate");
}

inline void sort_by_action(std::vector<IteratedOrbit>& its) {
    std::stable_sort(its.begin(), its.end(),
                     [](const IteratedOrbit& x, const IteratedOrbit& y) {
                         return x.action < y.action;
                     });
    for (std::size_t i = 1; i < its.size(); ++i) {
        if (its[i - 1].action == its[i].action)
            throw ActionTieDetail(make_ref(its[i - 1]), make_ref(its[i]));
    }
}

}  // namespace detail

// All iterates (bad ones included, flagged) with degree <= cap, sorted by
// strictly increasing action.
inline std::vector<IteratedOrbit> enumerate_iterates_by_degree(const Spectrum& s,
                                                               const Int& degree_cap) {
    if (degree_cap < 1) throw DomainError("degree cap must be positive");
    std::vector<IteratedOrbit> its;
    for (const auto& o : s.orbits) {
        detail::check_enumerable(o);
        // degrees are nondecreasing in k for enumerable orbits
        for (long k = 1;; ++k) {
            IteratedOrbit it = iterate_orbit(o, k);
            if (it.degree > degree_cap) break;
            its.push_back(std::move(it));
        }
    }
    detail::sort_by_action(its);
    return its;
}

inline std::vector<IteratedOrbit> enumerate_iterates_by_action(const Spectrum& s,
                                                               const QuadExt& action_cap) {
    if (action_cap.sign() <= 0) throw DomainError("action cap must be positive");
    std::vector<IteratedOrbit> its;
    for (const auto& o : s.orbits) {
        Int kmax = quad_floor(action_cap / o.action);
        for (long k = 1; Int(k) <= kmax; ++k) its.push_back(iterate_orbit(o, k));
    }
    detail::sort_by_action(its);
    return its;
}

struct ConditionOCheck {
    bool holds;
    std::optional<std::pair<IterateRef, IterateRef>> violation;
};

// Condition (O): the orderings of good iterates by action and by degree
// coincide, i.e. degrees are strictly increasing along the action order.
inline ConditionOCheck check_condition_O(const std::vector<IteratedOrbit>& by_action) {
    const IteratedOrbit* prev = nullptr;
    for (const auto& it : by_action) {
        if (!it.good) continue;
        if (prev && !(prev->degree < it.degree))
            return {false, std::make_pair(make_ref(*prev), make_ref(it))};
        prev = &it;
    }
    return {true, std::nullopt};
}

inline ConditionOCheck check_condition_O(const Spectrum& s, const QuadExt& action_cap) {
    return check_condition_O(enumerate_iterates_by_action(s, action_cap));
}

// Generator counts per degree; with vanishing differential these are the
// homology ranks.
inline std::map<Int, long> hc_ranks(const Spectrum& s, const Int& degree_cap) {
    std::map<Int, long> ranks;
    for (const auto& it : enumerate_iterates_by_degree(s, degree_cap))
        if (it.good) ++ranks[it.degree];
    return ranks;
}

// Smallest-degree pair of distinct good iterates sharing a degree, up to
// the cap.
inline std::optional<std::pair<IterateRef, IterateRef>> find_degree_collision(
    const Spectrum& s, const Int& degree_cap) {
    std::map<Int, std::vector<IterateRef>> by_degree;
    for (const auto& o : s.orbits) {
        detail::check_enumerable(o);
        for (long k = 1;; ++k) {
            IteratedOrbit it = iterate_orbit(o, k);
            if (it.degree > degree_cap) break;
            if (it.good) by_degree[it.degree].push_back(make_ref(it));
        }
    }
    for (const auto& [deg, refs] : by_degree)
        if (refs.size() >= 2) return std::make_pair(refs[0], refs[1]);
    return std::nullopt;
}

// Consecutive degree differences of an elliptic orbit; each lies in
// {2r, 2(r+1)}.
inline std::vector<Int> degree_gap_structure(const SimpleOrbit& o, long K) {
    if (!o.kind.is_elliptic())
        throw KindError("degree_gap_structure requires an elliptic orbit");
    if (K < 2) throw DomainError("degree_gap_structure: K must be >= 2");
    std::vector<Int> diffs;
    Int prev = degree(o, 1);
    for (long k = 2; k <= K; ++k) {
        Int cur = degree(o, k);
        diffs.push_back(cur - prev);
        prev = cur;
    }
    return diffs;
}

struct Realization {
    QuadExt alpha1, alpha2;
    long r1;
    long r2;
    EllipsoidParams ellipsoid;
};

// Solves the realization data for an action ratio rho = A2/A1 > 1:
// alpha1 = A1/A2, alpha2 = rho - [rho], r1 = 1, r2 = [rho] + 1, realized by
// the ellipsoid (1, rho) up to scale. The defining identities are verified
// exactly before returning.
inline Realization realize_from_ratio(const QuadExt& rho) {
    if (rho.is_rational()) throw DomainError("realize_from_ratio: rho must be irrational");
    if ((rho - QuadExt(1L)).sign() <= 0)
        throw DomainError("realize_from_ratio: rho must exceed 1");
    QuadExt one{1L};
    QuadExt alpha1 = one / rho;
    Int fl = quad_floor(rho);
    QuadExt alpha2 = rho - QuadExt(Rat(fl));
    long r2 = fl.get_si() + 1;

    // A2/A1 = (r2 + alpha2)/(1 + alpha1)
    QuadExt lhs = (QuadExt(r2) + alpha2) / (one + alpha1);
    if (lhs != rho) throw DomainError("realization identity A2/A1 check failed");
    // r2 = [1/alpha1] + 1
    if (quad_floor(one / alpha1) + 1 != r2)
        throw DomainError("realization identity r2 check failed");

    return {alpha1, alpha2, 1, r2, EllipsoidParams(one, rho)};
}

struct ConsistentTwoOrbit {
    EllipsoidParams ellipsoid;
    QuadExt alpha1, alpha2;
    long r1, r2;
};
struct InconsistentCollision {
    IterateRef a, b;
};
struct InconsistentGap {
    Int missing_degree;
};
struct NotDynamicallyConvex {
    ConvexityWitness witness;
};
struct OddDegreePresence {
    IterateRef witness;
};
struct ActionTie {
    IterateRef a, b;
};

using ClassificationResult =
    std::variant<ConsistentTwoOrbit, InconsistentCollision, InconsistentGap,
                 NotDynamicallyConvex, OddDegreePresence, ActionTie>;

namespace detail {

// Per-degree uniqueness over good iterates. A collision (the paper's
// Case 1/2 witnesses) outranks a gap; within each kind the smallest degree
// wins.
inline std::optional<ClassificationResult> degree_ladder_violation(
    const std::vector<IteratedOrbit>& its, const Int& degree_cap) {
    std::map<Int, std::vector<IterateRef>> by_degree;
    for (const auto& it : its)
        if (it.good) by_degree[it.degree].push_back(make_ref(it));
    for (const auto& [deg, refs] : by_degree)
        if (refs.size() >= 2) return InconsistentCollision{refs[0], refs[1]};
    for (Int deg(2); deg <= degree_cap; deg += 2)
        if (!by_degree.count(deg)) return InconsistentGap{deg};
    return std::nullopt;
}

}  // namespace detail

// Vanishing-differential consistency pipeline, in fixed order: dynamical
// convexity, no odd-degree good iterate, exactly one good iterate per even
// degree in [2, cap], condition (O), then realization of the two-orbit
// data through the action ratio.
inline ClassificationResult classify(const Spectrum& s, const Int& degree_cap,
                                     bool check_convexity = true) {
    if (degree_cap < 4) throw DomainError("classify: degree cap must be >= 4");

    if (check_convexity) {
        auto conv = is_dynamically_convex(s.orbits, 16);
        if (!conv.convex) return NotDynamicallyConvex{*conv.witness};
    }

    std::vector<IteratedOrbit> its;
    try {
        its = enumerate_iterates_by_degree(s, degree_cap);
    } catch (const ActionTieDetail& tie) {
        return ActionTie{tie.a, tie.b};
    }

    for (const auto& it : its) {
        Int parity;
        mpz_mod_ui(parity.get_mpz_t(), it.degree.get_mpz_t(), 2);
        if (it.good && parity != 0) return OddDegreePresence{make_ref(it)};
    }

    if (auto bad = detail::degree_ladder_violation(its, degree_cap)) return *bad;

    auto ocheck = check_condition_O(its);
    if (!ocheck.holds)
        return InconsistentCollision{ocheck.violation->first, ocheck.violation->second};

    if (s.orbits.size() == 2) {
        const SimpleOrbit& g1 =
            (s.orbits[0].action < s.orbits[1].action) ? s.orbits[0] : s.orbits[1];
        const SimpleOrbit& g2 =
            (s.orbits[0].action < s.orbits[1].action) ? s.orbits[1] : s.orbits[0];
        QuadExt rho = g2.action / g1.action;
        if (rho.is_rational()) {
            // rational ratio: the tie pair exists beyond the enumerated range
            Rat r = rho.as_rat();
            long k1 = static_cast<long>(r.get_num().get_si());
            long k2 = static_cast<long>(r.get_den().get_si());
            return ActionTie{make_ref(iterate_orbit(g1, k1)), make_ref(iterate_orbit(g2, k2))};
        }
        Realization want = realize_from_ratio(rho);
        bool match = g1.kind.is_elliptic() && g2.kind.is_elliptic() &&
                     g1.kind.r() == want.r1 && g2.kind.r() == want.r2 &&
                     g1.kind.elliptic().alpha == want.alpha1 &&
                     g2.kind.elliptic().alpha == want.alpha2;
        if (match)
            return ConsistentTwoOrbit{EllipsoidParams(g1.action, g2.action),
                                      want.alpha1, want.alpha2, want.r1, want.r2};
    }

    // every finite check passed but the data is not eq:ra-shaped; the
    // contradiction must surface at a higher degree, so search further
    for (Int cap = degree_cap * 2; cap <= degree_cap * 64; cap *= 2) {
        std::vector<IteratedOrbit> wide;
        try {
            wide = enumerate_iterates_by_degree(s, cap);
        } catch (const ActionTieDetail& tie) {
            return ActionTie{tie.a, tie.b};
        }
        if (auto bad = detail::degree_ladder_violation(wide, cap)) return *bad;
        auto wide_o = check_condition_O(wide);
        if (!wide_o.holds)
            return InconsistentCollision{wide_o.violation->first,
                                         wide_o.violation->second};
    }
    throw DomainError(
        "spectrum passes every check to 64x the requested cap but does not "
        "match the two-orbit realization data; raise the degree cap");
}

}  // namespace reebspec
