#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "reebspec/errors.hpp"
#include "reebspec/quadext.hpp"

namespace reebspec {

struct ContinuedFraction {
    std::vector<Int> quotients;  // a_0; a_1, a_2, ...
    std::vector<Int> period;     // empty if no repeat seen within n_terms
    std::size_t preperiod = 0;   // index where the detected cycle starts
};

// Continued fraction expansion of a quadratic irrational. The sequence of
// normalized complete quotients is finite, so the expansion is eventually
// periodic and the cycle is detected by a state repeat.
inline ContinuedFraction continued_fraction(const QuadExt& a, std::size_t n_terms) {
    if (a.is_rational())
        throw RationalInputError("continued_fraction requires an irrational input");
    ContinuedFraction out;
    QuadExt x = a;
    using State = std::tuple<Int, Int, Int>;
    std::map<State, std::size_t> seen;
    bool cycle_found = false;
    for (std::size_t i = 0; i < n_terms; ++i) {
        if (!cycle_found) {
            State st{x.p(), x.q(), x.s()};
            auto [it, fresh] = seen.emplace(st, i);
            if (!fresh) {
                out.preperiod = it->second;
                out.period.assign(out.quotients.begin() + it->second,
                                  out.quotients.end());
                cycle_found = true;
            }
        }
        Int ai = quad_floor(x);
        out.quotients.push_back(ai);
        x = QuadExt(Rat(1)) / (x - QuadExt(Rat(ai)));
    }
    if (!cycle_found) {
        // one more state check so that exactly-period-length requests succeed
        State st{x.p(), x.q(), x.s()};
        auto it = seen.find(st);
        if (it != seen.end()) {
            out.preperiod = it->second;
            out.period.assign(out.quotients.begin() + it->second,
                              out.quotients.end());
        }
    }
    return out;
}

// Convergents p_n/q_n of a partial-quotient list.
inline std::vector<std::pair<Int, Int>> convergents(const std::vector<Int>& quotients) {
    std::vector<std::pair<Int, Int>> out;
    Int pm1(1), pm2(0), qm1(0), qm2(1);
    for (const Int& a : quotients) {
        Int p = a * pm1 + pm2;
        Int q = a * qm1 + qm2;
        out.emplace_back(p, q);
        pm2 = pm1; pm1 = p;
        qm2 = qm1; qm1 = q;
    }
    return out;
}

}  // namespace reebspec
