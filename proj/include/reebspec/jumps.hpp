#pragma once

#include <optional>
#include <vector>

#include "reebspec/errors.hpp"
#include "reebspec/quadext.hpp"
#include "reebspec/rational.hpp"

namespace reebspec {

namespace detail {

inline void require_unit_interval_irrational(const QuadExt& xi, const char* who) {
    if (xi.is_rational())
        throw DomainError(std::string(who) + ": xi must be irrational");
    if (xi.sign() <= 0 || (xi - QuadExt(1L)).sign() >= 0)
        throw DomainError(std::string(who) + ": xi must lie in (0,1)");
}

}  // namespace detail

// j_n(xi) = [n/xi], the position of the n-th jump of the floor sequence
// {[k*xi]}.
struct JumpSequence {
    QuadExt xi;
    std::vector<Int> terms;  // j_1 < j_2 < ... < j_N
};

inline Int jump_term(const QuadExt& xi, const Int& n) {
    return quad_floor(QuadExt(Rat(n)) / xi);
}

inline JumpSequence jump_sequence(const QuadExt& xi, std::size_t N) {
    detail::require_unit_interval_irrational(xi, "jump_sequence");
    if (N < 1) throw DomainError("jump_sequence: N must be >= 1");
    JumpSequence js{xi, {}};
    js.terms.reserve(N);
    for (std::size_t n = 1; n <= N; ++n) {
        Int jn = jump_term(xi, Int(static_cast<unsigned long>(n)));
        // sanity identity j_n*xi <= n < (j_n+1)*xi
        QuadExt nq(Rat(static_cast<long>(n)));
        if (!((QuadExt(Rat(jn)) * xi <= nq) && (nq < QuadExt(Rat(jn + 1)) * xi)))
            throw DomainError("jump_sequence: sandwich identity failed");
        js.terms.push_back(jn);
    }
    return js;
}

// k is a jump of xi iff [(k+1)*xi] = [k*xi] + 1.
inline bool is_jump(const QuadExt& xi, const Int& k) {
    detail::require_unit_interval_irrational(xi, "is_jump");
    if (k < 1) throw DomainError("is_jump: k must be >= 1");
    Int lo = quad_floor(xi * QuadExt(Rat(k)));
    Int hi = quad_floor(xi * QuadExt(Rat(Int(k + 1))));
    return hi == lo + 1;
}

struct SubsequenceCheck {
    bool holds;
    std::size_t horizon;            // number of xi2-jumps examined
    std::optional<Int> witness;     // first xi2-jump missing from j(xi1)
};

// Is j(xi2) a subsequence of j(xi1), checked for the first N terms of
// j(xi2)?
inline SubsequenceCheck is_jump_subsequence(const QuadExt& xi2, const QuadExt& xi1,
                                            std::size_t N) {
    detail::require_unit_interval_irrational(xi1, "is_jump_subsequence");
    detail::require_unit_interval_irrational(xi2, "is_jump_subsequence");
    if (!xi1.is_rational() && !xi2.is_rational() && xi1.d() != xi2.d())
        throw FieldMismatchError("is_jump_subsequence: cross-field pair rejected");
    for (std::size_t n = 1; n <= N; ++n) {
        Int k = jump_term(xi2, Int(static_cast<unsigned long>(n)));
        if (!is_jump(xi1, k)) return {false, N, k};
    }
    return {true, N, std::nullopt};
}

// Exact solve of xi2 = p*xi1 + q over the shared field's basis {1, sqrt(d)}.
// Returns nullopt when no rational relation exists.
inline std::optional<std::pair<Rat, Rat>> find_affine_relation(const QuadExt& xi1,
                                                               const QuadExt& xi2) {
    if (!xi1.is_rational() && !xi2.is_rational() && xi1.d() != xi2.d())
        throw FieldMismatchError("find_affine_relation: field mismatch");
    // coordinates over {1, sqrt(d)}: xi = u + v*sqrt(d)
    Rat u1(xi1.p(), xi1.s()), v1(xi1.q(), xi1.s());
    Rat u2(xi2.p(), xi2.s()), v2(xi2.q(), xi2.s());
    u1.canonicalize(); v1.canonicalize();
    u2.canonicalize(); v2.canonicalize();
    // p*v1 = v2 and p*u1 + q = u2
    if (v1 == 0) {
        if (v2 != 0) return std::nullopt;  // rational xi1 cannot reach irrational xi2
        return std::make_pair(Rat(0), u2);
    }
    Rat p = v2 / v1;
    Rat q = u2 - p * u1;
    return std::make_pair(p, q);
}

// Smallest common jump of xi2 and xi3 within [1, bound].
inline std::optional<Int> find_common_jump(const QuadExt& xi2, const QuadExt& xi3,
                                           const Int& bound) {
    detail::require_unit_interval_irrational(xi2, "find_common_jump");
    detail::require_unit_interval_irrational(xi3, "find_common_jump");
    // walk the (sparser) jump sequence of the smaller xi
    const QuadExt& walk = (xi2 < xi3) ? xi2 : xi3;
    const QuadExt& other = (xi2 < xi3) ? xi3 : xi2;
    for (Int n(1);; ++n) {
        Int k = jump_term(walk, n);
        if (k > bound) return std::nullopt;
        if (is_jump(other, k)) return k;
    }
}

// Remark-level check: with xi1 <= 1/2 and j(xi2) a subsequence of j(xi1),
// xi1 must equal k*xi2 for an integer k >= 1. Returns that k when the exact
// coordinate ratio is a positive integer.
inline std::optional<Int> kotschick_factor(const QuadExt& xi1, const QuadExt& xi2) {
    detail::require_unit_interval_irrational(xi1, "kotschick_factor");
    detail::require_unit_interval_irrational(xi2, "kotschick_factor");
    if ((xi1 - QuadExt(Rat(1, 2))).sign() > 0)
        throw DomainError("kotschick_factor: requires xi1 <= 1/2");
    QuadExt ratio = xi1 / xi2;
    if (!ratio.is_integer()) return std::nullopt;
    Int k = ratio.p();
    if (k < 1) return std::nullopt;
    return k;
}

struct QuasimorphismDefect {
    Int defect;       // max |m(a+b) - m(a) - m(b)| over a+b <= N
    Int paper_bound;  // [3*xi1]
};

// m is defined by j_n(xi2) = j_{m(n)}(xi1); the subsequence hypothesis makes
// m(n) = [(j_n(xi2)+1)*xi1] well defined.
inline QuasimorphismDefect quasimorphism_defect(const QuadExt& xi1, const QuadExt& xi2,
                                                std::size_t N) {
    detail::require_unit_interval_irrational(xi1, "quasimorphism_defect");
    detail::require_unit_interval_irrational(xi2, "quasimorphism_defect");
    std::vector<Int> m(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        Int k = jump_term(xi2, Int(static_cast<unsigned long>(n)));
        if (!is_jump(xi1, k))
            throw SubsequenceViolationError(
                "quasimorphism_defect: j(xi2) is not a subsequence of j(xi1) at n=" +
                std::to_string(n));
        m[n] = quad_floor(xi1 * QuadExt(Rat(Int(k + 1))));
    }
    Int worst(0);
    for (std::size_t a = 1; a <= N; ++a) {
        for (std::size_t b = a; a + b <= N; ++b) {
            Int dev = abs(m[a + b] - m[a] - m[b]);
            if (dev > worst) worst = dev;
        }
    }
    return {worst, quad_floor(xi1 * QuadExt(3L))};
}

}  // namespace reebspec
