#pragma once

#include <gmpxx.h>

#include <string>

#include "reebspec/errors.hpp"

namespace reebspec {

using Int = mpz_class;
using Rat = mpq_class;

inline Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

// Floor of sqrt(n) for n >= 0.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Parses "p/s" or "p" with arbitrary-precision integers.
inline Rat parse_rat(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw ParseError("invalid rational literal: '" + text + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

}  // namespace reebspec
