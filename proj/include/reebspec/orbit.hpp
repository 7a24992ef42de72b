#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reebspec/errors.hpp"
#include "reebspec/quadext.hpp"

namespace reebspec {

// Elliptic: non-real Floquet multiplier e^{2*pi*i*alpha}, alpha in (0,1)
// irrational. Even hyperbolic: positive real multiplier. Odd hyperbolic:
// negative real multiplier. r is the rotation integer of the chosen
// disk-spanning trivialization.
struct Elliptic {
    long r;
    QuadExt alpha;
};
struct EvenHyperbolic {
    long r;
};
struct OddHyperbolic {
    long r;
};

class OrbitKind {
public:
    OrbitKind(Elliptic e) : v_(std::move(e)) {
        const QuadExt& a = std::get<Elliptic>(v_).alpha;
        if (a.is_rational())
            throw DomainError("elliptic alpha must be irrational (nondegeneracy)");
        if (a.sign() <= 0 || (a - QuadExt(1L)).sign() >= 0)
            throw DomainError("elliptic alpha must lie in (0,1)");
    }
    OrbitKind(EvenHyperbolic e) : v_(e) {}
    OrbitKind(OddHyperbolic o) : v_(o) {}

    bool is_elliptic() const { return std::holds_alternative<Elliptic>(v_); }
    bool is_even_hyperbolic() const { return std::holds_alternative<EvenHyperbolic>(v_); }
    bool is_odd_hyperbolic() const { return std::holds_alternative<OddHyperbolic>(v_); }

    const Elliptic& elliptic() const { return std::get<Elliptic>(v_); }

    long r() const {
        if (is_elliptic()) return std::get<Elliptic>(v_).r;
        if (is_even_hyperbolic()) return std::get<EvenHyperbolic>(v_).r;
        return std::get<OddHyperbolic>(v_).r;
    }

private:
    std::variant<Elliptic, EvenHyperbolic, OddHyperbolic> v_;
};

struct SimpleOrbit {
    std::string label;
    QuadExt action;
    OrbitKind kind;

    SimpleOrbit(std::string label_, QuadExt action_, OrbitKind kind_)
        : label(std::move(label_)), action(std::move(action_)), kind(std::move(kind_)) {
        if (action.sign() <= 0) throw DomainError("orbit action must be positive");
    }
};

// CZ(gamma^k): 2kr + 2[k*alpha] + 1 (elliptic), 2kr (even hyperbolic),
// (2r+1)k (odd hyperbolic).
inline Int cz_index(const SimpleOrbit& o, long k) {
    if (k < 1) throw DomainError("iterate multiplicity k must be >= 1");
    long r = o.kind.r();
    if (o.kind.is_elliptic()) {
        Int fl = quad_floor(o.kind.elliptic().alpha * QuadExt(k));
        return Int(2 * Int(k) * r + 2 * fl + 1);
    }
    if (o.kind.is_even_hyperbolic()) return Int(2 * Int(k) * r);
    return Int(Int(2 * r + 1) * k);
}

// Grading of the linearized contact homology complex: |gamma^k| = CZ - 1.
inline Int degree(const SimpleOrbit& o, long k) { return cz_index(o, k) - 1; }

// Even iterates of odd-hyperbolic orbits are bad and excluded from the
// chain complex.
inline bool is_good(const SimpleOrbit& o, long k) {
    if (k < 1) throw DomainError("iterate multiplicity k must be >= 1");
    return !(o.kind.is_odd_hyperbolic() && k % 2 == 0);
}

struct IteratedOrbit {
    const SimpleOrbit* parent;
    long k;
    Int cz;
    Int degree;
    QuadExt action;
    bool good;
};

inline IteratedOrbit iterate_orbit(const SimpleOrbit& o, long k) {
    Int cz = cz_index(o, k);
    return {&o, k, cz, Int(cz - 1), o.action * QuadExt(k), is_good(o, k)};
}

struct SuperadditivityCheck {
    Int lhs;  // |gamma^(k1+...+ks)|
    Int rhs;  // sum of |gamma^(ki)|
    bool holds;
};

inline SuperadditivityCheck check_superadditivity(const SimpleOrbit& o,
                                                  const std::vector<long>& parts) {
    if (parts.empty()) throw DomainError("partition must be nonempty");
    long total = 0;
    Int rhs(0);
    for (long k : parts) {
        if (k < 1) throw DomainError("partition entries must be positive");
        total += k;
        rhs += degree(o, k);
    }
    Int lhs = degree(o, total);
    return {lhs, rhs, lhs >= rhs};
}

struct ConvexityWitness {
    std::string label;
    long k;
    Int cz;
};

struct ConvexityResult {
    bool convex;
    std::optional<ConvexityWitness> witness;  // first violating iterate
};

// Dynamical convexity: CZ(gamma^k) >= 3 for every orbit and k <= k_max.
// For r >= 1 (elliptic / odd hyperbolic) and r >= 2 (even hyperbolic) the
// index is minimized at k = 1, so the cap only guards low-r detection.
inline ConvexityResult is_dynamically_convex(const std::vector<SimpleOrbit>& orbits,
                                             long k_max) {
    if (k_max < 1) throw DomainError("k_max must be >= 1");
    for (const auto& o : orbits) {
        for (long k = 1; k <= k_max; ++k) {
            Int cz = cz_index(o, k);
            if (cz < 3) return {false, ConvexityWitness{o.label, k, cz}};
        }
    }
    return {true, std::nullopt};
}

}  // namespace reebspec
