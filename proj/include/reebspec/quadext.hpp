#pragma once

#include <regex>
#include <string>
#include <utility>

#include "reebspec/errors.hpp"
#include "reebspec/rational.hpp"

namespace reebspec {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

namespace detail {

// d must be a squarefree positive non-square to tag a quadratic field.
inline void validate_field_tag(unsigned long d) {
    if (d < 2) throw DomainError("field tag d must be >= 2, got " + std::to_string(d));
    for (unsigned long f = 2; f * f <= d; ++f) {
        if (d % (f * f) == 0)
            throw DomainError("field tag d must be squarefree, got " + std::to_string(d));
    }
}

}  // namespace detail

// Exact element (p + q*sqrt(d))/s of Q(sqrt(d)), s > 0, gcd(p,q,s) = 1.
// Rational values carry d = 0 and mix freely with any field.
class QuadExt {
public:
    QuadExt() : p_(0), q_(0), s_(1), d_(0) {}

    QuadExt(const Rat& r)
        : p_(r.get_num()), q_(0), s_(r.get_den()), d_(0) {}

    QuadExt(long n) : p_(n), q_(0), s_(1), d_(0) {}

    QuadExt(Int p, Int q, Int s, unsigned long d)
        : p_(std::move(p)), q_(std::move(q)), s_(std::move(s)), d_(d) {
        if (s_ == 0) throw DomainError("QuadExt denominator s must be nonzero");
        if (q_ != 0) detail::validate_field_tag(d_);
        normalize();
    }

    static QuadExt sqrt_of(unsigned long d) { return QuadExt(0, 1, 1, d); }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& s() const { return s_; }
    unsigned long d() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_integer() const { return q_ == 0 && s_ == 1; }

    Rat as_rat() const {
        if (q_ != 0) throw DomainError("QuadExt value is irrational");
        Rat r(p_, s_);
        r.canonicalize();
        return r;
    }

    // Sign of p + q*sqrt(d), decided by sign-safe squaring.
    int sign() const {
        int sp = sgn(p_), sq = sgn(q_);
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        Int lhs = p_ * p_;
        Int rhs = q_ * q_ * Int(d_);
        int c = cmp(lhs, rhs);
        if (c == 0) return 0;  // cannot happen for valid d, kept for safety
        return c > 0 ? sp : sq;
    }

    QuadExt operator-() const {
        QuadExt r(*this);
        r.p_ = -r.p_;
        r.q_ = -r.q_;
        return r;
    }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        unsigned long d = joined_field(a, b);
        return QuadExt(a.p_ * b.s_ + b.p_ * a.s_, a.q_ * b.s_ + b.q_ * a.s_,
                       a.s_ * b.s_, d);
    }

    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }

    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        unsigned long d = joined_field(a, b);
        return QuadExt(a.p_ * b.p_ + a.q_ * b.q_ * Int(d),
                       a.p_ * b.q_ + a.q_ * b.p_, a.s_ * b.s_, d);
    }

    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
        unsigned long d = joined_field(a, b);
        if (b.is_zero()) throw DivisionByZeroError("QuadExt division by zero");
        // 1/b = s*(p - q*sqrt(d)) / (p^2 - q^2 d)
        Int norm = b.p_ * b.p_ - b.q_ * b.q_ * Int(d);
        QuadExt num(a.p_ * b.p_ - a.q_ * b.q_ * Int(d),
                    a.q_ * b.p_ - a.p_ * b.q_, a.s_, d);
        return QuadExt(num.p_ * b.s_, num.q_ * b.s_, num.s_ * norm, num.q_ == 0 ? 0ul : d);
    }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        if (a.q_ != 0 && b.q_ != 0 && a.d_ != b.d_) return false;
        return a.p_ == b.p_ && a.q_ == b.q_ && a.s_ == b.s_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }
    friend bool operator<(const QuadExt& a, const QuadExt& b) { return (a - b).sign() < 0; }
    friend bool operator>(const QuadExt& a, const QuadExt& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const QuadExt& a, const QuadExt& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const QuadExt& a, const QuadExt& b) { return (a - b).sign() >= 0; }

    // Certified enclosure [lo, hi] with width <= 2/2^bits (before the /s).
    std::pair<Rat, Rat> enclosure(unsigned bits) const {
        if (q_ == 0) {
            Rat v(p_, s_);
            v.canonicalize();
            return {v, v};
        }
        Int scale = Int(1) << bits;
        Int t = isqrt(q_ * q_ * Int(d_) * scale * scale);
        // q*sqrt(d) in [t, t+1]/2^bits for q > 0, mirrored for q < 0
        Int den = s_ * scale;
        Rat lo, hi;
        if (q_ > 0) {
            lo = Rat(Int(p_ * scale + t), den);
            hi = Rat(Int(p_ * scale + t + 1), den);
        } else {
            lo = Rat(Int(p_ * scale - t - 1), den);
            hi = Rat(Int(p_ * scale - t), den);
        }
        lo.canonicalize();
        hi.canonicalize();
        return {lo, hi};
    }

    double to_double() const {
        auto [lo, hi] = enclosure(64);
        return (lo.get_d() + hi.get_d()) / 2.0;
    }

    std::string str() const {
        if (q_ == 0) {
            if (s_ == 1) return p_.get_str();
            return p_.get_str() + "/" + s_.get_str();
        }
        std::string out = "(" + p_.get_str();
        out += (q_ > 0) ? "+" : "-";
        out += Int(abs(q_)).get_str() + "*sqrt(" + std::to_string(d_) + "))/" + s_.get_str();
        return out;
    }

private:
    static unsigned long joined_field(const QuadExt& a, const QuadExt& b) {
        if (a.q_ != 0 && b.q_ != 0 && a.d_ != b.d_)
            throw FieldMismatchError("QuadExt field mismatch: sqrt(" +
                                     std::to_string(a.d_) + ") vs sqrt(" +
                                     std::to_string(b.d_) + ")");
        return a.q_ != 0 ? a.d_ : b.d_;
    }

    void normalize() {
        if (s_ < 0) {
            p_ = -p_;
            q_ = -q_;
            s_ = -s_;
        }
        Int g = gcd(gcd(p_, q_), s_);
        if (g > 1) {
            p_ /= g;
            q_ /= g;
            s_ /= g;
        }
        if (q_ == 0) d_ = 0;
    }

    Int p_, q_, s_;
    unsigned long d_;
};

inline Ordering quad_compare(const QuadExt& a, const QuadExt& b) {
    int s = (a - b).sign();
    return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

// Exact floor: the unique f with f <= a < f+1.
inline Int quad_floor(const QuadExt& a) {
    if (a.is_rational()) return rat_floor(a.as_rat());
    // floor(q*sqrt(d)) via integer sqrt; q^2 d is never a perfect square here
    Int t = isqrt(a.q() * a.q() * Int(a.d()));
    Int fq = (a.q() > 0) ? t : Int(-t - 1);
    Int n;
    mpz_fdiv_q(n.get_mpz_t(), Int(a.p() + fq).get_mpz_t(), a.s().get_mpz_t());
    // estimate is exact or one too small
    while (a >= QuadExt(Rat(n + 1))) n += 1;
    while (a < QuadExt(Rat(n))) n -= 1;
    return n;
}

inline Int quad_ceil(const QuadExt& a) {
    if (a.is_rational()) return rat_ceil(a.as_rat());
    return quad_floor(a) + 1;
}

// Accepts "(p+q*sqrt(d))/s", "(p-q*sqrt(d))/s" (the "/s" optional) and
// plain rationals "p/s" or "p".
inline QuadExt parse_quad(const std::string& text) {
    static const std::regex quad_re(
        R"(^\s*\(\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*(?:/\s*([+-]?\d+)\s*)?$)");
    static const std::regex rat_re(R"(^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$)");
    std::smatch m;
    if (std::regex_match(text, m, quad_re)) {
        Int p(m[1].str());
        Int q(m[3].str());
        if (m[2].str() == "-") q = -q;
        unsigned long d = std::stoul(m[4].str());
        Int s = m[5].matched ? Int(m[5].str()) : Int(1);
        if (s == 0) throw ParseError("zero denominator in '" + text + "'");
        return QuadExt(p, q, s, d);
    }
    if (std::regex_match(text, m, rat_re)) {
        Int p(m[1].str());
        Int s = m[2].matched ? Int(m[2].str()) : Int(1);
        if (s == 0) throw ParseError("zero denominator in '" + text + "'");
        return QuadExt(p, 0, s, 0);
    }
    throw ParseError("invalid scalar literal: '" + text + "'");
}

}  // namespace reebspec
