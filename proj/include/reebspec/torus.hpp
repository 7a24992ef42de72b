#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "reebspec/errors.hpp"
#include "reebspec/intlinalg.hpp"
#include "reebspec/lincomb.hpp"
#include "reebspec/quadext.hpp"

namespace reebspec {

// Translation of T^n = R^n/Z^n by (xi_1,...,xi_n); all coordinates share
// one constant basis and are reduced into [0,1) at construction.
struct TorusTranslation {
    std::vector<LinComb> xi;

    explicit TorusTranslation(std::vector<LinComb> coords) : xi(std::move(coords)) {
        if (xi.empty()) throw DomainError("torus dimension must be >= 1");
        for (auto& c : xi) {
            if (c.basis() != xi[0].basis() && c.basis()->size() != xi[0].basis()->size())
                throw FieldMismatchError("torus coordinates must share one basis");
            c = lincomb_mod1(c);
        }
    }

    std::size_t n() const { return xi.size(); }
    const Basis& basis() const { return xi[0].basis(); }

    // Rational coordinate matrix of (xi_1,...,xi_n, 1) over the basis.
    RatMat coordinate_rows() const {
        RatMat m;
        for (const auto& c : xi) m.push_back(c.coeffs());
        std::vector<Rat> one(basis()->size(), Rat(0));
        one[0] = 1;
        m.push_back(one);
        return m;
    }
};

// dim_Q Span_Q(xi_1,...,xi_n,1) = l + 1.
inline std::size_t rational_span_dim(const TorusTranslation& t) {
    return rational_rank(t.coordinate_rows());
}

namespace detail {

// Clears denominators column-wise; the integer left kernel is unchanged.
inline IntMat scale_to_integers(const RatMat& m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    IntMat out(m.size(), IntVec(cols, Int(0)));
    for (std::size_t j = 0; j < cols; ++j) {
        Int l(1);
        for (const auto& row : m)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row[j].get_den_mpz_t());
        for (std::size_t i = 0; i < m.size(); ++i) {
            Rat v = m[i][j] * Rat(l);
            v.canonicalize();
            out[i][j] = v.get_num();
        }
    }
    return out;
}

}  // namespace detail

// Canonical integer basis of {m in Z^(n+1) : m_1 xi_1 + ... + m_n xi_n +
// m_(n+1) = 0}.
inline IntMat relation_lattice(const TorusTranslation& t) {
    return integer_left_kernel(detail::scale_to_integers(t.coordinate_rows()));
}

// Saturation lattice {v in Z^n : v . xi is rational}: kernel of the
// irrational coordinate columns only.
inline IntMat rational_direction_lattice(const TorusTranslation& t) {
    std::size_t cols = t.basis()->size();
    RatMat m;
    for (const auto& c : t.xi)
        m.emplace_back(c.coeffs().begin() + 1, c.coeffs().end());
    if (cols == 1)
        for (auto& row : m) row.assign(1, Rat(0));  // keep a column so shapes stay sane
    return integer_left_kernel(detail::scale_to_integers(m));
}

inline std::vector<std::vector<LinComb>> orbit_points(const TorusTranslation& t,
                                                      std::size_t M);

struct ClosureDescription {
    IntMat relation_basis;                          // rows in Z^(n+1)
    std::size_t l;                                  // subtorus dimension
    Int d;                                          // coset count
    IntMat subtorus_basis;                          // rows in Z^n spanning the l-torus
    std::vector<std::vector<LinComb>> representatives;  // tau^j(0), j < d
};

// Lemma-level closure data: the orbit closure is d translates of the
// connected l-torus annihilating every rational direction.
inline ClosureDescription closure_description(const TorusTranslation& t) {
    std::size_t n = t.n();
    ClosureDescription out;
    out.relation_basis = relation_lattice(t);
    out.l = n - out.relation_basis.size();

    IntMat sat = rational_direction_lattice(t);
    // coset count: order of the character v -> v.xi mod 1 on the saturation
    out.d = 1;
    for (const auto& v : sat) {
        Rat dot(0);
        for (std::size_t i = 0; i < n; ++i) dot += Rat(v[i]) * t.xi[i].coeffs()[0];
        dot.canonicalize();
        Int den = dot.get_den();
        mpz_lcm(out.d.get_mpz_t(), out.d.get_mpz_t(), den.get_mpz_t());
    }

    // integer directions annihilated by every saturation vector
    if (sat.empty()) {
        out.subtorus_basis.assign(n, IntVec(n, Int(0)));
        for (std::size_t i = 0; i < n; ++i) out.subtorus_basis[i][i] = 1;
    } else {
        IntMat satT(n, IntVec(sat.size(), Int(0)));
        for (std::size_t k = 0; k < sat.size(); ++k)
            for (std::size_t i = 0; i < n; ++i) satT[i][k] = sat[k][i];
        out.subtorus_basis = integer_left_kernel(satT);
    }

    std::size_t reps = static_cast<std::size_t>(out.d.get_ui());
    out.representatives = orbit_points(t, reps == 0 ? 0 : reps - 1);
    return out;
}

// tau^m(0) for m = 0..M, exact and reduced into [0,1)^n.
inline std::vector<std::vector<LinComb>> orbit_points(const TorusTranslation& t,
                                                      std::size_t M) {
    std::vector<std::vector<LinComb>> pts;
    pts.reserve(M + 1);
    std::vector<LinComb> cur;
    for (const auto& c : t.xi) cur.push_back(LinComb::constant(c.basis(), Rat(0)));
    pts.push_back(cur);
    for (std::size_t m = 1; m <= M; ++m) {
        for (std::size_t i = 0; i < t.n(); ++i) {
            LinComb next = cur[i] + t.xi[i];
            // next lies in [0,2); wrap once when it reaches 1
            LinComb excess = next.shifted(Rat(-1));
            if (excess.is_rational_by_coords() ? sgn(excess.rational_value()) >= 0
                                               : excess.sign() > 0)
                next = excess;
            cur[i] = next;
        }
        pts.push_back(cur);
    }
    return pts;
}

struct DensityCheck {
    bool dense_to_eps;
    double worst_gap;       // largest net-point distance to the orbit
    std::size_t net_points;
};

// Finite density certificate: every point of an eps/2-net of the described
// closure must lie within eps (sup metric) of an orbit point with index <=
// M. Also re-checks, exactly, that every orbit point satisfies every
// relation-lattice equation.
inline DensityCheck density_check(const TorusTranslation& t, const Rat& eps,
                                  std::size_t M) {
    if (sgn(eps) <= 0) throw DomainError("density_check: eps must be positive");
    std::size_t n = t.n();
    ClosureDescription cd = closure_description(t);
    auto pts = orbit_points(t, M);

    // exact relation check on every orbit point
    for (const auto& p : pts) {
        for (const auto& m : cd.relation_basis) {
            LinComb comb = LinComb::constant(t.basis(), Rat(0));
            for (std::size_t i = 0; i < n; ++i) comb = comb + p[i].scaled(Rat(m[i]));
            if (!comb.is_rational_by_coords() || !rat_is_integer(comb.rational_value()))
                throw DomainError("orbit point violates a relation-lattice equation");
        }
    }

    // double shadows of orbit points, hashed into cells of side eps
    double epsd = eps.get_d();
    std::vector<std::vector<double>> shadow(pts.size(), std::vector<double>(n));
    std::map<std::vector<long>, std::vector<std::size_t>> grid;
    long cells = std::max(1L, static_cast<long>(std::floor(1.0 / epsd)));
    for (std::size_t k = 0; k < pts.size(); ++k) {
        std::vector<long> cell(n);
        for (std::size_t i = 0; i < n; ++i) {
            shadow[k][i] = pts[k][i].to_double();
            cell[i] = std::min(cells - 1, static_cast<long>(shadow[k][i] * cells));
        }
        grid[cell].push_back(k);
    }

    auto torus_dist = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double d = std::fabs(a[i] - b[i]);
            d = std::min(d, 1.0 - d);
            worst = std::max(worst, d);
        }
        return worst;
    };

    auto nearest = [&](const std::vector<double>& x) {
        double best = 1.0;
        std::vector<long> base(n);
        for (std::size_t i = 0; i < n; ++i)
            base[i] = static_cast<long>(std::floor(x[i] * cells));
        std::vector<long> cell(n);
        std::size_t combos = 1;
        for (std::size_t i = 0; i < n; ++i) combos *= 3;
        for (std::size_t c = 0; c < combos; ++c) {
            std::size_t rem = c;
            for (std::size_t i = 0; i < n; ++i) {
                long off = static_cast<long>(rem % 3) - 1;
                rem /= 3;
                cell[i] = ((base[i] + off) % cells + cells) % cells;
            }
            auto it = grid.find(cell);
            if (it == grid.end()) continue;
            for (std::size_t k : it->second) best = std::min(best, torus_dist(x, shadow[k]));
        }
        return best;
    };

    // net over each coset: rep + subtorus_basis * grid(delta)
    double maxrow = 0.0;
    for (const auto& w : cd.subtorus_basis) {
        double s = 0.0;
        for (const auto& e : w) s += std::fabs(e.get_d());
        maxrow = std::max(maxrow, s);
    }
    std::size_t steps = 1;
    if (cd.l > 0)
        steps = static_cast<std::size_t>(std::ceil(2.0 * maxrow / epsd));

    DensityCheck res{true, 0.0, 0};
    std::vector<std::size_t> idx(cd.l, 0);
    for (const auto& rep : cd.representatives) {
        std::vector<double> rep_d(n);
        for (std::size_t i = 0; i < n; ++i) rep_d[i] = rep[i].to_double();
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<double> x = rep_d;
            for (std::size_t a = 0; a < cd.l; ++a) {
                double ta = static_cast<double>(idx[a]) / static_cast<double>(steps);
                for (std::size_t i = 0; i < n; ++i)
                    x[i] += ta * cd.subtorus_basis[a][i].get_d();
            }
            for (std::size_t i = 0; i < n; ++i) x[i] -= std::floor(x[i]);
            double gap = nearest(x);
            res.worst_gap = std::max(res.worst_gap, gap);
            ++res.net_points;
            if (gap >= epsd) res.dense_to_eps = false;
            // advance the l-dimensional grid index
            std::size_t a = 0;
            for (; a < cd.l; ++a) {
                if (++idx[a] < steps) break;
                idx[a] = 0;
            }
            if (cd.l == 0 || a == cd.l) break;
        }
    }
    return res;
}

// Smallest k <= k_max with dist(k*step, target) < tol on the circle
// R/(v*Z). The scan runs in doubles with periodic exact resynchronization;
// every candidate is confirmed by exact field arithmetic before it is
// returned, so the answer is never wrong, only the cap can be too small.
inline Int rotation_hit(const Int& v, const QuadExt& step, const QuadExt& target,
                        const Rat& tol, const Int& k_max) {
    if (v < 1) throw DomainError("rotation_hit: v must be a positive integer");
    if (step.is_rational()) throw DomainError("rotation_hit: step must be irrational");
    if (sgn(tol) <= 0) throw DomainError("rotation_hit: tol must be positive");

    QuadExt vq{Rat(v)};
    auto mod_v = [&](const QuadExt& x) {
        Int f = quad_floor(x / vq);
        return x - QuadExt(Rat(f)) * vq;
    };
    QuadExt tgt = mod_v(target);
    QuadExt tolq{tol};
    auto exact_hit = [&](const Int& k) {
        QuadExt pos = mod_v(step * QuadExt(Rat(k)));
        QuadExt diff = pos - tgt;
        if (diff.sign() < 0) diff = -diff;
        QuadExt wrap = vq - diff;
        const QuadExt& dist = (diff < wrap) ? diff : wrap;
        return dist < tolq;
    };

    double vd = v.get_d();
    double theta = mod_v(step).to_double();
    double td = tgt.to_double();
    double told = tol.get_d();
    const double margin = 1e-7 * vd + 1e-12;
    double x = 0.0;
    constexpr unsigned long kResync = 1u << 20;
    for (Int k(1); k <= k_max; ++k) {
        x += theta;
        if (x >= vd) x -= vd;
        double diff = std::fabs(x - td);
        double dist = std::min(diff, vd - diff);
        if (dist < told + margin && exact_hit(k)) return k;
        if (mpz_fdiv_ui(k.get_mpz_t(), kResync) == 0)
            x = mod_v(step * QuadExt(Rat(k))).to_double();
    }
    throw NotFoundError("rotation_hit: no hit within k_max", k_max.get_si());
}

}  // namespace reebspec
