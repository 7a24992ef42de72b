// Command-line front end: exact Reeb-orbit spectra, jump sequences, torus
// translations, and the vanishing-differential consistency classifier.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reebspec/acceptance.hpp"
#include "reebspec/contfrac.hpp"
#include "reebspec/json_io.hpp"

namespace {

using namespace reebspec;

struct OutputOpts {
    std::string format = "json";
    std::string path = "-";
    int digits = 12;
};

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    cmd->add_option("--output", out.path, "Output path, - for stdout")
        ->capture_default_str();
    cmd->add_option("--digits", out.digits, "Decimal digits in table display")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

std::string decimal(const QuadExt& x, int digits) {
    mpf_class v = acceptance::detail::to_mpf(x, 64 + 4 * static_cast<unsigned>(digits));
    std::vector<char> buf(static_cast<std::size_t>(digits) + 128);
    gmp_snprintf(buf.data(), buf.size(), "%.*Ff", digits, v.get_mpf_t());
    return buf.data();
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_text(const OutputOpts& out, const std::string& text) {
    if (out.path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path);
    if (!f) throw ParseError("cannot open output path: " + out.path);
    f << text;
}

std::string render_csv(const Table& t) {
    std::ostringstream os;
    auto row = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << (i ? "," : "") << cells[i];
        os << "\n";
    };
    row(t.header);
    for (const auto& r : t.rows) row(r);
    return os.str();
}

std::string render_table(const Table& t) {
    std::vector<std::size_t> width(t.header.size());
    auto widen = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            width[i] = std::max(width[i], cells[i].size());
    };
    widen(t.header);
    for (const auto& r : t.rows) widen(r);
    std::ostringstream os;
    auto row = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << cells[i] << std::string(width[i] - cells[i].size(), ' ');
            if (i + 1 < cells.size()) os << "  ";
        }
        os << "\n";
    };
    row(t.header);
    for (const auto& r : t.rows) row(r);
    return os.str();
}

// Flatten a JSON payload into key,value pairs for commands without a
// natural table shape.
Table kv_table(const Json& payload) {
    Table t{{"key", "value"}, {}};
    for (auto it = payload.begin(); it != payload.end(); ++it) {
        const Json& v = it.value();
        t.rows.push_back({it.key(), v.is_string() ? v.get<std::string>() : v.dump()});
    }
    return t;
}

void emit(const OutputOpts& out, const Json& payload,
          const std::optional<Table>& table = std::nullopt) {
    if (out.format == "json") {
        write_text(out, payload.dump(2) + "\n");
    } else if (out.format == "csv") {
        write_text(out, render_csv(table ? *table : kv_table(payload)));
    } else {
        write_text(out, render_table(table ? *table : kv_table(payload)));
    }
}

Json read_json_input(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open input path: " + path);
        return Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON input: ") + e.what());
    }
}

Table iterate_table(const std::vector<IteratedOrbit>& its, int digits) {
    Table t{{"label", "k", "cz", "degree", "action", "action_decimal", "good"}, {}};
    for (const auto& it : its)
        t.rows.push_back({it.parent->label, std::to_string(it.k), it.cz.get_str(),
                          it.degree.get_str(), it.action.str(),
                          decimal(it.action, digits), it.good ? "1" : "0"});
    return t;
}

int verdict_exit_code(const ClassificationResult& r) {
    return std::holds_alternative<ConsistentTwoOrbit>(r) ? 0 : 1;
}

// --- subcommand state ------------------------------------------------------

struct CzArgs {
    std::string kind = "elliptic";
    long r = 1;
    std::string alpha;
    std::string action = "1";
    long k = 1;
    OutputOpts out;
};

int run_cz(const CzArgs& a) {
    OrbitKind kind = [&] {
        if (a.kind == "elliptic") {
            if (a.alpha.empty()) throw ParseError("elliptic orbits need --alpha");
            return OrbitKind(Elliptic{a.r, parse_quad(a.alpha)});
        }
        if (a.kind == "even_hyperbolic") return OrbitKind(EvenHyperbolic{a.r});
        return OrbitKind(OddHyperbolic{a.r});
    }();
    if (a.k < 1) throw ParseError("--k must be >= 1");
    SimpleOrbit o("orbit", parse_quad(a.action), kind);
    std::vector<IteratedOrbit> its;
    for (long k = 1; k <= a.k; ++k) its.push_back(iterate_orbit(o, k));
    Json iterates = Json::array();
    for (const auto& it : its) iterates.push_back(iterate_to_json(make_ref(it)));
    Json payload{{"command", "cz"}, {"orbit", orbit_to_json(o)}, {"iterates", iterates}};
    emit(a.out, payload, iterate_table(its, a.out.digits));
    return 0;
}

struct JumpsArgs {
    std::string op = "sequence";
    std::string xi, xi1, xi2;
    std::size_t terms = 20;
    std::size_t horizon = 10000;
    long cap = 10000;
    OutputOpts out;
};

int run_jumps(const JumpsArgs& a) {
    Json payload{{"command", "jumps"}, {"op", a.op}};
    int code = 0;
    if (a.op == "sequence") {
        if (a.xi.empty()) throw ParseError("sequence needs --xi");
        QuadExt xi = parse_quad(a.xi);
        auto js = jump_sequence(xi, a.terms);
        Json terms = Json::array();
        for (const auto& t : js.terms) terms.push_back(t.get_str());
        payload["xi"] = xi.str();
        payload["terms"] = terms;
        Table t{{"n", "j_n"}, {}};
        for (std::size_t n = 0; n < js.terms.size(); ++n)
            t.rows.push_back({std::to_string(n + 1), js.terms[n].get_str()});
        emit(a.out, payload, t);
        return 0;
    }
    if (a.xi1.empty() || a.xi2.empty())
        throw ParseError(a.op + " needs --xi1 and --xi2");
    QuadExt xi1 = parse_quad(a.xi1), xi2 = parse_quad(a.xi2);
    payload["xi1"] = xi1.str();
    payload["xi2"] = xi2.str();
    if (a.op == "subsequence") {
        auto r = is_jump_subsequence(xi2, xi1, a.horizon);
        payload["holds"] = r.holds;
        payload["horizon"] = r.horizon;
        if (r.witness) payload["witness"] = r.witness->get_str();
        code = r.holds ? 0 : 1;
    } else if (a.op == "relation") {
        auto rel = find_affine_relation(xi1, xi2);
        payload["found"] = rel.has_value();
        if (rel) {
            payload["p"] = rat_str(rel->first);
            payload["q"] = rat_str(rel->second);
        }
    } else if (a.op == "common") {
        auto k = find_common_jump(xi1, xi2, Int(a.cap));
        if (!k) throw NotFoundError("no common jump", a.cap);
        payload["k"] = k->get_str();
    } else {
        throw ParseError("unknown jumps op: " + a.op);
    }
    emit(a.out, payload);
    return code;
}

struct TorusArgs {
    std::string op = "closure";
    std::string coords = "-";
    std::string eps = "1/50";
    std::size_t points = 10000;
    OutputOpts out;
};

int run_torus(const TorusArgs& a) {
    Json in = read_json_input(a.coords);
    if (!in.is_array()) throw ParseError("torus input must be a JSON array of LinComb");
    std::vector<LinComb> coords;
    for (const auto& c : in) coords.push_back(lincomb_from_json(c));
    TorusTranslation t(std::move(coords));
    Json payload{{"command", "torus"}, {"op", a.op}};
    int code = 0;
    if (a.op == "span") {
        payload["rational_span_dim"] = rational_span_dim(t);
    } else if (a.op == "lattice") {
        Json rows = Json::array();
        for (const auto& row : relation_lattice(t)) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(e.get_str());
            rows.push_back(r);
        }
        payload["relation_basis"] = rows;
    } else if (a.op == "closure") {
        payload["closure"] = closure_to_json(closure_description(t));
    } else if (a.op == "density") {
        Rat eps = parse_rat(a.eps);
        auto r = density_check(t, eps, a.points);
        payload["eps"] = rat_str(eps);
        payload["points"] = a.points;
        payload["dense_to_eps"] = r.dense_to_eps;
        payload["worst_gap"] = r.worst_gap;
        code = r.dense_to_eps ? 0 : 1;
    } else {
        throw ParseError("unknown torus op: " + a.op);
    }
    emit(a.out, payload);
    return code;
}

struct EllipsoidArgs {
    std::string a1 = "1";
    std::string a2;
    long degree_cap = 200;
    std::string action_cap;
    OutputOpts out;
};

int run_ellipsoid(const EllipsoidArgs& a) {
    EllipsoidParams e(parse_quad(a.a1), parse_quad(a.a2));
    Spectrum s = ellipsoid_spectrum(e);
    std::vector<IteratedOrbit> its =
        a.action_cap.empty()
            ? enumerate_iterates_by_degree(s, Int(a.degree_cap))
            : enumerate_iterates_by_action(s, parse_quad(a.action_cap));
    Json iterates = Json::array();
    for (const auto& it : its) iterates.push_back(iterate_to_json(make_ref(it)));
    Json payload = spectrum_to_json(s);
    payload["command"] = "ellipsoid";
    payload["iterates"] = iterates;
    emit(a.out, payload, iterate_table(its, a.out.digits));
    return 0;
}

struct RealizeArgs {
    std::string ratio;
    OutputOpts out;
};

int run_realize(const RealizeArgs& a) {
    Realization r = realize_from_ratio(parse_quad(a.ratio));
    Json payload{{"command", "realize"},
                 {"ratio", (r.ellipsoid.a2 / r.ellipsoid.a1).str()},
                 {"alpha1", quad_to_json(r.alpha1)},
                 {"alpha2", quad_to_json(r.alpha2)},
                 {"r1", r.r1},
                 {"r2", r.r2},
                 {"ellipsoid", Json{{"a1", quad_to_json(r.ellipsoid.a1)},
                                    {"a2", quad_to_json(r.ellipsoid.a2)}}}};
    emit(a.out, payload);
    return 0;
}

struct ClassifyArgs {
    std::string spectrum = "-";
    long degree_cap = 200;
    bool no_convexity = false;
    OutputOpts out;
};

int run_classify(const ClassifyArgs& a) {
    Spectrum s = spectrum_from_json(read_json_input(a.spectrum));
    ClassificationResult r = classify(s, Int(a.degree_cap), !a.no_convexity);
    Json payload = classification_to_json(r);
    payload["command"] = "classify";
    payload["degree_cap"] = a.degree_cap;
    emit(a.out, payload);
    return verdict_exit_code(r);
}

struct CollideArgs {
    std::string spectrum = "-";
    long degree_cap = 200;
    OutputOpts out;
};

int run_collide(const CollideArgs& a) {
    Spectrum s = spectrum_from_json(read_json_input(a.spectrum));
    auto c = find_degree_collision(s, Int(a.degree_cap));
    Json payload{{"command", "collide"}, {"degree_cap", a.degree_cap}};
    payload["found"] = c.has_value();
    if (c) payload["witness"] = {iterate_to_json(c->first), iterate_to_json(c->second)};
    emit(a.out, payload);
    return c ? 1 : 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Exact Reeb orbit spectra, jump sequences, and torus dynamics"};
    app.require_subcommand(1);

    CzArgs cz;
    auto* cz_cmd = app.add_subcommand("cz", "Conley-Zehnder index / degree table");
    cz_cmd->add_option("--kind", cz.kind, "Orbit kind")
        ->check(CLI::IsMember({"elliptic", "even_hyperbolic", "odd_hyperbolic"}))
        ->capture_default_str();
    cz_cmd->add_option("--r", cz.r, "Rotation integer r")->capture_default_str();
    cz_cmd->add_option("--alpha", cz.alpha, "Elliptic rotation part, scalar text");
    cz_cmd->add_option("--action", cz.action, "Orbit action, scalar text")
        ->capture_default_str();
    cz_cmd->add_option("--k", cz.k, "Largest iterate")->capture_default_str();
    add_output_opts(cz_cmd, cz.out);

    JumpsArgs jm;
    auto* jm_cmd = app.add_subcommand("jumps", "Jump sequences and relations");
    jm_cmd->add_option("--op", jm.op, "sequence | subsequence | relation | common")
        ->check(CLI::IsMember({"sequence", "subsequence", "relation", "common"}))
        ->capture_default_str();
    jm_cmd->add_option("--xi", jm.xi, "Scalar for sequence");
    jm_cmd->add_option("--xi1", jm.xi1, "First scalar");
    jm_cmd->add_option("--xi2", jm.xi2, "Second scalar");
    jm_cmd->add_option("--terms", jm.terms, "Sequence length")->capture_default_str();
    jm_cmd->add_option("--horizon", jm.horizon, "Subsequence horizon")
        ->capture_default_str();
    jm_cmd->add_option("--cap", jm.cap, "Common-jump search cap")->capture_default_str();
    add_output_opts(jm_cmd, jm.out);

    TorusArgs to;
    auto* to_cmd = app.add_subcommand("torus", "Torus translation closures");
    to_cmd->add_option("--op", to.op, "span | lattice | closure | density")
        ->check(CLI::IsMember({"span", "lattice", "closure", "density"}))
        ->capture_default_str();
    to_cmd->add_option("--coords", to.coords, "JSON array of LinComb, path or -")
        ->capture_default_str();
    to_cmd->add_option("--eps", to.eps, "Density resolution, rational text")
        ->capture_default_str();
    to_cmd->add_option("--points", to.points, "Orbit points for density")
        ->capture_default_str();
    add_output_opts(to_cmd, to.out);

    EllipsoidArgs el;
    auto* el_cmd = app.add_subcommand("ellipsoid", "Irrational ellipsoid spectrum");
    el_cmd->add_option("--a1", el.a1, "Short axis, scalar text")->capture_default_str();
    el_cmd->add_option("--a2", el.a2, "Long axis, scalar text")->required();
    el_cmd->add_option("--degree-cap", el.degree_cap, "Degree cap")->capture_default_str();
    el_cmd->add_option("--action-cap", el.action_cap, "Action cap, scalar text");
    add_output_opts(el_cmd, el.out);

    RealizeArgs re;
    auto* re_cmd = app.add_subcommand("realize", "Realization data from an action ratio");
    re_cmd->add_option("--ratio", re.ratio, "Action ratio > 1, scalar text")->required();
    add_output_opts(re_cmd, re.out);

    ClassifyArgs cl;
    auto* cl_cmd = app.add_subcommand("classify", "Consistency verdict for a spectrum");
    cl_cmd->add_option("--spectrum", cl.spectrum, "Spectrum JSON, path or -")
        ->capture_default_str();
    cl_cmd->add_option("--degree-cap", cl.degree_cap, "Degree cap")->capture_default_str();
    cl_cmd->add_flag("--no-convexity", cl.no_convexity, "Skip the convexity check");
    add_output_opts(cl_cmd, cl.out);

    CollideArgs co;
    auto* co_cmd = app.add_subcommand("collide", "Degree collision search");
    co_cmd->add_option("--spectrum", co.spectrum, "Spectrum JSON, path or -")
        ->capture_default_str();
    co_cmd->add_option("--degree-cap", co.degree_cap, "Degree cap")->capture_default_str();
    add_output_opts(co_cmd, co.out);

    auto* ve_cmd = app.add_subcommand("verify", "Run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cz_cmd->parsed()) return run_cz(cz);
    if (jm_cmd->parsed()) return run_jumps(jm);
    if (to_cmd->parsed()) return run_torus(to);
    if (el_cmd->parsed()) return run_ellipsoid(el);
    if (re_cmd->parsed()) return run_realize(re);
    if (cl_cmd->parsed()) return run_classify(cl);
    if (co_cmd->parsed()) return run_collide(co);
    if (ve_cmd->parsed()) return reebspec::acceptance::report(std::cout);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const reebspec::PrecisionExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const reebspec::NotFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const reebspec::ActionTieError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
