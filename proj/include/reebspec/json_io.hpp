#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "reebspec/lincomb.hpp"
#include "reebspec/orbit.hpp"
#include "reebspec/quadext.hpp"
#include "reebspec/spectrum.hpp"
#include "reebspec/torus.hpp"

namespace reebspec {

using Json = nlohmann::json;

inline Json quad_to_json(const QuadExt& x) { return x.str(); }

inline QuadExt quad_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("scalar must be a string literal");
    return parse_quad(j.get<std::string>());
}

inline Json lincomb_to_json(const LinComb& x) {
    Json basis = Json::array();
    for (const auto& c : *x.basis()) basis.push_back(c.name);
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(rat_str(c));
    return Json{{"basis", basis}, {"coeffs", coeffs}};
}

inline LinComb lincomb_from_json(const Json& j) {
    if (!j.contains("basis") || !j.contains("coeffs"))
        throw ParseError("LinComb JSON needs \"basis\" and \"coeffs\"");
    std::vector<std::string> names;
    for (const auto& b : j.at("basis")) names.push_back(b.get<std::string>());
    Basis basis = make_basis(names);
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rat(c.get<std::string>()));
    return LinComb(basis, std::move(coeffs));
}

inline Json orbit_to_json(const SimpleOrbit& o) {
    Json kind;
    if (o.kind.is_elliptic()) {
        kind["elliptic"] = {{"r", o.kind.r()},
                            {"alpha", quad_to_json(o.kind.elliptic().alpha)}};
    } else if (o.kind.is_even_hyperbolic()) {
        kind["even_hyperbolic"] = {{"r", o.kind.r()}};
    } else {
        kind["odd_hyperbolic"] = {{"r", o.kind.r()}};
    }
    return Json{{"label", o.label}, {"action", quad_to_json(o.action)}, {"kind", kind}};
}

inline SimpleOrbit orbit_from_json(const Json& j) {
    std::string label = j.at("label").get<std::string>();
    QuadExt action = quad_from_json(j.at("action"));
    const Json& kind = j.at("kind");
    if (kind.contains("elliptic")) {
        const Json& e = kind.at("elliptic");
        return SimpleOrbit(label, action,
                           OrbitKind(Elliptic{e.at("r").get<long>(),
                                              quad_from_json(e.at("alpha"))}));
    }
    if (kind.contains("even_hyperbolic"))
        return SimpleOrbit(
            label, action,
            OrbitKind(EvenHyperbolic{kind.at("even_hyperbolic").at("r").get<long>()}));
    if (kind.contains("odd_hyperbolic"))
        return SimpleOrbit(
            label, action,
            OrbitKind(OddHyperbolic{kind.at("odd_hyperbolic").at("r").get<long>()}));
    throw ParseError("orbit kind must be elliptic, even_hyperbolic or odd_hyperbolic");
}

inline Json spectrum_to_json(const Spectrum& s) {
    Json arr = Json::array();
    for (const auto& o : s.orbits) arr.push_back(orbit_to_json(o));
    return Json{{"orbits", arr}};
}

inline Spectrum spectrum_from_json(const Json& j) {
    const Json& arr = j.is_array() ? j : j.at("orbits");
    std::vector<SimpleOrbit> orbits;
    for (const auto& o : arr) orbits.push_back(orbit_from_json(o));
    return Spectrum(std::move(orbits));
}

inline Json iterate_to_json(const IterateRef& it) {
    return Json{{"label", it.label},   {"k", it.k},
                {"cz", it.cz.get_str()}, {"degree", it.degree.get_str()},
                {"action", quad_to_json(it.action)}, {"good", it.good}};
}

inline Json classification_to_json(const ClassificationResult& r) {
    Json out;
    if (const auto* c = std::get_if<ConsistentTwoOrbit>(&r)) {
        out["verdict"] = "consistent_two_orbit";
        out["ellipsoid"] = {{"a1", quad_to_json(c->ellipsoid.a1)},
                            {"a2", quad_to_json(c->ellipsoid.a2)}};
        out["alpha1"] = quad_to_json(c->alpha1);
        out["alpha2"] = quad_to_json(c->alpha2);
        out["r1"] = c->r1;
        out["r2"] = c->r2;
    } else if (const auto* c = std::get_if<InconsistentCollision>(&r)) {
        out["verdict"] = "inconsistent_collision";
        out["witness"] = {iterate_to_json(c->a), iterate_to_json(c->b)};
    } else if (const auto* c = std::get_if<InconsistentGap>(&r)) {
        out["verdict"] = "inconsistent_gap";
        out["missing_degree"] = c->missing_degree.get_str();
    } else if (const auto* c = std::get_if<NotDynamicallyConvex>(&r)) {
        out["verdict"] = "not_dynamically_convex";
        out["witness"] = {{"label", c->witness.label},
                          {"k", c->witness.k},
                          {"cz", c->witness.cz.get_str()}};
    } else if (const auto* c = std::get_if<OddDegreePresence>(&r)) {
        out["verdict"] = "odd_degree_presence";
        out["witness"] = iterate_to_json(c->witness);
    } else if (const auto* c = std::get_if<ActionTie>(&r)) {
        out["verdict"] = "action_tie";
        out["witness"] = {iterate_to_json(c->a), iterate_to_json(c->b)};
    }
    return out;
}

inline Json closure_to_json(const ClosureDescription& cd) {
    Json rel = Json::array();
    for (const auto& row : cd.relation_basis) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(e.get_str());
        rel.push_back(r);
    }
    Json sub = Json::array();
    for (const auto& row : cd.subtorus_basis) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(e.get_str());
        sub.push_back(r);
    }
    Json reps = Json::array();
    for (const auto& pt : cd.representatives) {
        Json p = Json::array();
        for (const auto& c : pt) p.push_back(lincomb_to_json(c));
        reps.push_back(p);
    }
    return Json{{"relation_basis", rel},
                {"subtorus_dimension", cd.l},
                {"coset_count", cd.d.get_str()},
                {"subtorus_basis", sub},
                {"representatives", reps}};
}

}  // namespace reebspec
