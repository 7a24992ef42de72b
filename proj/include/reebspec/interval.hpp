#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "reebspec/errors.hpp"
#include "reebspec/quadext.hpp"
#include "reebspec/rational.hpp"

namespace reebspec {

// Closed rational interval [lo, hi], lo <= hi.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static RatInterval point(const Rat& v) { return {v, v}; }

    Rat width() const { return hi - lo; }

    bool contains_integer() const { return rat_ceil(lo) <= rat_floor(hi); }

    // Only meaningful when !contains_integer() or lo is that integer.
    Int certified_floor() const { return rat_floor(lo); }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }

    RatInterval scaled(const Rat& c) const {
        if (sgn(c) >= 0) return {Rat(c * lo), Rat(c * hi)};
        return {Rat(c * hi), Rat(c * lo)};
    }

    // Intersection keeps successive refinements nested.
    RatInterval meet(const RatInterval& o) const {
        Rat l = lo > o.lo ? lo : o.lo;
        Rat h = hi < o.hi ? hi : o.hi;
        if (l > h) throw DomainError("disjoint refinement enclosures");
        return {l, h};
    }
};

// A named real constant with an interval-refinement oracle: for a requested
// precision it returns an enclosure of width <= 2^(1-bits).
struct NamedConstant {
    std::string name;
    std::function<RatInterval(unsigned bits)> enclose;
};

using Basis = std::shared_ptr<const std::vector<NamedConstant>>;

inline NamedConstant unit_constant() {
    return {"1", [](unsigned) { return RatInterval::point(Rat(1)); }};
}

inline NamedConstant sqrt_constant(unsigned long d) {
    detail::validate_field_tag(d);
    return {"sqrt(" + std::to_string(d) + ")", [d](unsigned bits) {
                auto [lo, hi] = QuadExt::sqrt_of(d).enclosure(bits);
                return RatInterval{lo, hi};
            }};
}

// Builds a basis from names "1", "sqrt(d)". Element 0 must be "1".
inline Basis make_basis(const std::vector<std::string>& names) {
    if (names.empty() || names[0] != "1")
        throw DomainError("basis element 0 must be the constant \"1\"");
    auto vec = std::make_shared<std::vector<NamedConstant>>();
    static const std::regex sqrt_re(R"(^sqrt\((\d+)\)$)");
    for (const auto& name : names) {
        if (name == "1") {
            vec->push_back(unit_constant());
            continue;
        }
        std::smatch m;
        if (std::regex_match(name, m, sqrt_re)) {
            vec->push_back(sqrt_constant(std::stoul(m[1].str())));
            continue;
        }
        throw ParseError("unknown basis constant '" + name + "'");
    }
    return vec;
}

}  // namespace reebspec
