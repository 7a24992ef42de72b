#pragma once

#include <utility>
#include <vector>

#include "reebspec/errors.hpp"
#include "reebspec/interval.hpp"
#include "reebspec/rational.hpp"

namespace reebspec {

inline constexpr unsigned kFloorStartBits = 128;
inline constexpr unsigned kFloorMaxBits = 16384;

// Rational combination of named irrational basis constants. Basis element 0
// is always the constant 1, so pure rationals short-circuit every certified
// decision. The caller asserts Q-linear independence of the basis.
class LinComb {
public:
    LinComb(Basis basis, std::vector<Rat> coeffs)
        : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
        if (!basis_ || basis_->empty() || (*basis_)[0].name != "1")
            throw DomainError("LinComb basis must start with the constant 1");
        if (coeffs_.size() != basis_->size())
            throw DomainError("LinComb coefficient count does not match basis");
        for (auto& c : coeffs_) c.canonicalize();
    }

    static LinComb constant(const Basis& basis, const Rat& value) {
        std::vector<Rat> coeffs(basis->size(), Rat(0));
        coeffs[0] = value;
        return LinComb(basis, std::move(coeffs));
    }

    const Basis& basis() const { return basis_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_rational_by_coords() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    Rat rational_value() const {
        if (!is_rational_by_coords())
            throw DomainError("LinComb has irrational components");
        return coeffs_[0];
    }

    friend LinComb operator+(const LinComb& a, const LinComb& b) {
        check_same_basis(a, b);
        std::vector<Rat> c(a.coeffs_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
        return LinComb(a.basis_, std::move(c));
    }

    friend LinComb operator-(const LinComb& a, const LinComb& b) {
        check_same_basis(a, b);
        std::vector<Rat> c(a.coeffs_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
        return LinComb(a.basis_, std::move(c));
    }

    LinComb scaled(const Rat& f) const {
        std::vector<Rat> c(coeffs_);
        for (auto& x : c) x *= f;
        return LinComb(basis_, std::move(c));
    }

    LinComb shifted(const Rat& f) const {
        std::vector<Rat> c(coeffs_);
        c[0] += f;
        return LinComb(basis_, std::move(c));
    }

    friend bool operator==(const LinComb& a, const LinComb& b) {
        check_same_basis(a, b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    RatInterval enclosure(unsigned bits) const {
        RatInterval acc = RatInterval::point(0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            acc = acc + (*basis_)[i].enclose(bits).scaled(coeffs_[i]);
        }
        return acc;
    }

    // Exact sign; nonzero irrational coefficients imply a nonzero value
    // under the independence assertion.
    int sign(unsigned max_bits = kFloorMaxBits) const {
        if (is_rational_by_coords()) return sgn(coeffs_[0]);
        RatInterval iv = enclosure(kFloorStartBits);
        for (unsigned bits = kFloorStartBits;; bits *= 2) {
            if (sgn(iv.lo) > 0) return 1;
            if (sgn(iv.hi) < 0) return -1;
            if (bits >= max_bits) break;
            iv = iv.meet(enclosure(bits * 2));
        }
        throw PrecisionExhaustedError("LinComb sign undecided at " +
                                      std::to_string(max_bits) + " bits");
    }

    double to_double() const {
        RatInterval iv = enclosure(96);
        return (iv.lo.get_d() + iv.hi.get_d()) / 2.0;
    }

private:
    static void check_same_basis(const LinComb& a, const LinComb& b) {
        if (a.basis_ == b.basis_) return;
        if (a.basis_->size() != b.basis_->size())
            throw FieldMismatchError("LinComb basis mismatch");
        for (std::size_t i = 0; i < a.basis_->size(); ++i)
            if ((*a.basis_)[i].name != (*b.basis_)[i].name)
                throw FieldMismatchError("LinComb basis mismatch at element " +
                                         std::to_string(i));
    }

    Basis basis_;
    std::vector<Rat> coeffs_;
};

// Certified floor. Rational-by-coordinates values are exact; otherwise the
// enclosure is refined (doubling precision) until it contains no integer.
inline Int lincomb_floor(const LinComb& x, unsigned max_bits = kFloorMaxBits) {
    if (x.is_rational_by_coords()) return rat_floor(x.rational_value());
    RatInterval iv = x.enclosure(kFloorStartBits);
    for (unsigned bits = kFloorStartBits;; bits *= 2) {
        if (!iv.contains_integer()) return iv.certified_floor();
        if (bits >= max_bits) break;
        iv = iv.meet(x.enclosure(bits * 2));
    }
    throw PrecisionExhaustedError("lincomb_floor undecided at " +
                                  std::to_string(max_bits) +
                                  " bits (value suspiciously close to an integer)");
}

inline Ordering lincomb_compare(const LinComb& a, const LinComb& b,
                                unsigned max_bits = kFloorMaxBits) {
    if (a == b) return Ordering::EQ;
    int s = (a - b).sign(max_bits);
    return s < 0 ? Ordering::LT : Ordering::GT;
}

// Reduction into [0,1): subtracts the certified floor from coefficient 0.
inline LinComb lincomb_mod1(const LinComb& x, unsigned max_bits = kFloorMaxBits) {
    Int f = lincomb_floor(x, max_bits);
    return x.shifted(Rat(Int(-f)));
}

}  // namespace reebspec
