// Command-line front end: polynomial parsing, subcommand dispatch, JSON or
// text output, and the built-in constructions.
//
// Exit codes: 0 success, 2 input error (diagnostic on stderr), 1 violated
// internal identity.

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "triplane/poly_io.hpp"
#include "triplane/report_json.hpp"

using namespace triplane;

namespace {

struct GlobalOpts {
    bool json = false;
    std::string vars = "x,y,t";
    std::string sign = "plus";
    std::string field = "qext";

    VarSet var_set() const {
        std::vector<std::string> names;
        std::string cur;
        for (char c : vars) {
            if (c == ',') {
                if (!cur.empty()) names.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        if (!cur.empty()) names.push_back(cur);
        return VarSet(names);
    }
    cover::SignConvention convention() const {
        return sign == "minus" ? cover::SignConvention::minus : cover::SignConvention::plus;
    }
    bool allow_ext() const { return field != "q"; }
};

std::map<std::string, Rat> parse_bindings(const std::string& text) {
    std::map<std::string, Rat> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        if (cur.empty()) continue;
        auto eq = cur.find('=');
        if (eq == std::string::npos) throw ParseError("binding must look like name=value", 0);
        out[cur.substr(0, eq)] = rat_from_string(cur.substr(eq + 1));
    }
    return out;
}

PlanePoint parse_point(const std::string& text) {
    std::string body = text;
    for (char& c : body)
        if (c == '(' || c == ')' || c == '[' || c == ']' || c == ':') c = ' ';
    std::istringstream is(body);
    std::vector<Rat> coords;
    std::string tok;
    while (is >> tok) coords.push_back(rat_from_string(tok));
    if (coords.size() != 3) throw ParseError("point needs three coordinates", 0);
    return PlanePoint(coords[0], coords[1], coords[2]);
}

void emit(const GlobalOpts& g, const nlohmann::json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string describe_branch(const cover::BranchCurve& bc) {
    std::ostringstream os;
    os << "branch: " << format(bc.full) << "\n";
    os << "  content " << to_string(bc.content) << ", factors:";
    for (const auto& [f, e] : bc.factors) os << " (" << format(f) << ")^" << e;
    os << "\n  reduced: " << format(bc.reduced) << "\n";
    os << "  double part: " << format(bc.double_part) << "\n";
    if (bc.has_triple_component) os << "  TRIPLE COMPONENT present\n";
    return os.str();
}

int run_branch(const GlobalOpts& g, const std::string& a_text, const std::string& b_text) {
    VarSet vs = g.var_set();
    HPoly a = a_text == "0" ? HPoly(vs) : parse_hpoly(a_text, vs);
    HPoly b = parse_hpoly(b_text, vs);
    cover::CoverDatum datum(a, b);
    auto bc = cover::branch_curve(datum);
    std::ostringstream os;
    os << describe_branch(bc);
    nlohmann::json j = to_json(bc);
    if (auto pencil = cover::lines_in_pencil_check(bc.full)) {
        os << "  pencil of lines through " << point_str(pencil->center) << ":";
        for (const auto& [l, m] : pencil->lines) os << " (" << format(l) << ")^" << m;
        os << "\n";
        j["pencil_of_lines"] = to_json(*pencil);
    }
    emit(g, j, os.str());
    return 0;
}

int run_classify(const GlobalOpts& g, const std::string& a_text, const std::string& b_text) {
    VarSet vs = g.var_set();
    HPoly a = a_text == "0" ? HPoly(vs) : parse_hpoly(a_text, vs);
    HPoly b = parse_hpoly(b_text, vs);
    cover::CoverDatum datum(a, b);
    auto rep = classify::branch_census(datum);
    std::ostringstream os;
    os << describe_branch(rep.branch);
    os << (rep.cyclic ? "cyclic cover\n" : "ordinary (non-cyclic) cover\n");
    if (rep.double_witness) os << "all components double: witness g = " << format(rep.double_witness->g) << "\n";
    os << "census: " << rep.census.records.size() << " located singular points, "
       << rep.census.cusp_count << " cusps ("
       << (rep.census.cusp_count_certified ? "certified" : "not certified") << ")\n";
    os << "matches:\n";
    for (const auto& m : rep.matches) os << "  " << m.name << " [" << m.confidence << "]\n";
    for (const auto& a2 : rep.annotations) os << "note: " << a2 << "\n";
    emit(g, to_json(rep), os.str());
    return 0;
}

int run_constants(const GlobalOpts& g, const std::vector<std::string>& e_polys,
                  const std::vector<std::string>& abcd, const std::vector<std::string>& net,
                  const std::string& bindings_text) {
    auto bindings = parse_bindings(bindings_text);
    std::optional<algebra::StructureConstants> sc;
    if (!net.empty()) {
        if (net.size() != 4) throw DomainError("--net needs p,q,r,s");
        auto mc = algebra::net_to_monic_cubic(rat_from_string(net[0]), rat_from_string(net[1]),
                                              rat_from_string(net[2]), rat_from_string(net[3]));
        sc = algebra::from_monic_cubic(mc);
    } else if (!e_polys.empty()) {
        if (e_polys.size() != 3) throw DomainError("--e needs three polynomials e0 e1 e2");
        VarSet vs = g.var_set();
        algebra::MonicCubic mc(parse_poly(e_polys[0], vs, bindings),
                               parse_poly(e_polys[1], vs, bindings),
                               parse_poly(e_polys[2], vs, bindings));
        sc = algebra::from_monic_cubic(mc);
    } else if (!abcd.empty()) {
        if (abcd.size() != 4) throw DomainError("--abcd needs four polynomials");
        VarSet vs = g.var_set();
        sc = algebra::StructureConstants(parse_poly(abcd[0], vs, bindings),
                                         parse_poly(abcd[1], vs, bindings),
                                         parse_poly(abcd[2], vs, bindings),
                                         parse_poly(abcd[3], vs, bindings));
    } else {
        throw DomainError("constants: provide --e, --abcd, or --net");
    }
    auto abc = algebra::derive_ABC(*sc);
    auto res = algebra::verify_relations(*sc, abc);
    std::ostringstream os;
    os << "a = " << format(sc->a) << "\nb = " << format(sc->b) << "\nc = " << format(sc->c)
       << "\nd = " << format(sc->d) << "\nA = " << format(abc.A) << "\nB = " << format(abc.B)
       << "\nC = " << format(abc.C) << "\nD = " << format(abc.D) << "\n";
    os << "relation residuals all zero: " << (res.all_zero() ? "yes" : "NO") << "\n";
    emit(g, to_json(*sc, abc, res), os.str());
    if (!res.all_zero()) throw InternalCheckError("structure constant relations violated");
    return 0;
}

int run_singular(const GlobalOpts& g, const std::string& poly_text) {
    HPoly f = parse_hpoly(poly_text, g.var_set());
    auto census = sing::rational_singular_locus(f, g.allow_ext());
    std::ostringstream os;
    os << "singular census of " << format(f) << "\n";
    os << "completeness: " << census.completeness() << ", aggregate degree "
       << census.aggregate_degree << "\n";
    for (const auto& r : census.records)
        os << "  " << point_str(r.point) << "  mult " << r.multiplicity << "  "
           << sing::kind_name(r.kind, r.k) << "\n";
    os << "cusps: " << census.cusp_count << (census.cusp_count_certified ? " (certified)" : "")
       << "\n";
    emit(g, to_json(census), os.str());
    return 0;
}

int run_imult(const GlobalOpts& g, const std::string& f_text, const std::string& g_text,
              const std::string& point_text) {
    VarSet vs = g.var_set();
    HPoly f = parse_hpoly(f_text, vs);
    HPoly h = parse_hpoly(g_text, vs);
    PlanePoint p = parse_point(point_text);
    int im = sing::intersection_multiplicity(f, h, p);
    nlohmann::json j;
    j["schema"] = 1;
    j["intersection_multiplicity"] = im;
    j["point"] = to_json(p);
    emit(g, j, std::to_string(im) + "\n");
    return 0;
}

int run_linsys(const GlobalOpts& g, const std::string& what, const std::string& system_text) {
    auto s = linsys::parse_system(system_text);
    std::ostringstream os;
    nlohmann::json j;
    j["schema"] = 1;
    j["system"] = s.str();
    if (what == "inv") {
        auto inv = linsys::invariants(s);
        os << s.str() << ": vdim " << inv.virtual_dim << ", genus " << inv.genus << ", C^2 "
           << inv.self_int << ", K.C " << inv.k_dot_c << "\n";
        j["invariants"] = to_json(inv);
    } else if (what == "adjoint") {
        auto adj = linsys::adjoint(s);
        os << "adjoint of " << s.str() << " = " << adj.str() << "\n";
        j["adjoint"] = adj.str();
    } else if (what == "normalize") {
        auto norm = linsys::normalize(s);
        os << s.str() << " ->";
        for (const auto& st : norm.trace) os << "\n  " << st.describe();
        os << "\n  normal form " << norm.normal_form.str() << "\n";
        j["normal_form"] = norm.normal_form.str();
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& st : norm.trace) steps.push_back(st.describe());
        j["steps"] = steps;
        j["flagged_negative_multiplicity"] = norm.has_flagged_negative;
    } else if (what == "empty") {
        auto cert = linsys::is_empty(s);
        os << s.str() << ": " << (cert.empty ? "empty" : "not proven empty");
        if (cert.empty) os << " (" << cert.reason << ")";
        os << "\n";
        for (const auto& st : cert.chain) os << "  " << st.describe() << "\n";
        j["certificate"] = to_json(cert);
    } else {
        throw DomainError("linsys action must be inv|adjoint|normalize|empty");
    }
    emit(g, j, os.str());
    return 0;
}

int run_double_detect(const GlobalOpts& g, const std::string& a_text, const std::string& b_text) {
    VarSet vs = g.var_set();
    cover::CoverDatum datum(parse_hpoly(a_text, vs), parse_hpoly(b_text, vs));
    std::ostringstream os;
    nlohmann::json j;
    j["schema"] = 1;
    try {
        auto w = cover::detect_all_double(datum);
        if (w) {
            os << "all-double branch: lambda = " << to_string(w->lambda) << ", g = " << format(w->g)
               << "\n";
            if (w->radicand) os << "field: Q(sqrt(" << w->radicand->str() << "))\n";
            j["witness"] = to_json(*w);
        } else {
            os << "branch is not of the form lambda * g^2\n";
            j["witness"] = nullptr;
        }
    } catch (const ExtensionNeededError& e) {
        os << "extension needed: " << e.what() << "\n";
        j["extension_needed"] = e.what();
    }
    emit(g, j, os.str());
    return 0;
}

int run_examples(const GlobalOpts& g, bool run_all, bool list_catalog) {
    std::ostringstream os;
    nlohmann::json j;
    j["schema"] = 1;
    if (list_catalog) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : classify::catalog()) {
            os << e.name << " (degree " << e.branch_degree << "): " << e.component_profile << "\n";
            entries.push_back(to_json(e));
        }
        j["catalog"] = entries;
        emit(g, j, os.str());
        return 0;
    }
    auto results = classify::run_builtin_examples();
    bool all_ok = true;
    nlohmann::json items = nlohmann::json::array();
    for (const auto& r : results) {
        os << (r.ok ? "[ok]   " : "[FAIL] ") << r.name << ": " << r.description << "\n";
        if (!r.detail.empty()) os << "       " << r.detail << "\n";
        items.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        all_ok = all_ok && r.ok;
    }
    j["examples"] = items;
    j["all_ok"] = all_ok;
    emit(g, j, os.str());
    if (run_all && !all_ok) throw InternalCheckError("a built-in example identity failed");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for triple covers of the plane defined by z^3 + 3az + b"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "emit JSON instead of text");
    app.add_option("--vars", g.vars, "comma-separated variable names (default x,y,t)");
    app.add_option("--sign", g.sign, "cubic surface convention: plus (z^3+3b2z+b3) or minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    app.add_option("--field", g.field, "q: rational points only; qext: allow one quadratic extension")
        ->check(CLI::IsMember({"q", "qext"}));

    std::string a_text, b_text, poly_text, point_text, action, system_text, bindings;
    std::vector<std::string> e_polys, abcd, net;
    bool run_all = false, list_catalog = false;

    auto* cmd_branch = app.add_subcommand("branch", "branch curve 4a^3+b^2 of a cover datum");
    cmd_branch->add_option("a", a_text, "polynomial a (degree 2d, or 0)")->required();
    cmd_branch->add_option("b", b_text, "polynomial b (degree 3d)")->required();

    auto* cmd_classify = app.add_subcommand("classify", "full census and catalog match");
    cmd_classify->add_option("a", a_text)->required();
    cmd_classify->add_option("b", b_text)->required();

    auto* cmd_constants = app.add_subcommand("constants", "structure constants and discriminant");
    cmd_constants->add_option("--e", e_polys, "e0 e1 e2 of a monic cubic")->expected(3);
    cmd_constants->add_option("--abcd", abcd, "structure constants directly")->expected(4);
    cmd_constants->add_option("--net", net, "net parameters p q r s")->expected(4);
    cmd_constants->add_option("--bind", bindings, "numeric bindings, e.g. p=1,q=2");

    auto* cmd_singular = app.add_subcommand("singular", "rational singular locus of a plane curve");
    cmd_singular->add_option("poly", poly_text)->required();

    auto* cmd_imult = app.add_subcommand("imult", "intersection multiplicity of two curves at a point");
    cmd_imult->add_option("F", a_text)->required();
    cmd_imult->add_option("G", b_text)->required();
    cmd_imult->add_option("point", point_text, "e.g. \"(0:1:1)\"")->required();

    auto* cmd_linsys = app.add_subcommand("linsys", "linear system calculus");
    cmd_linsys->add_option("action", action, "inv|adjoint|normalize|empty")->required();
    cmd_linsys->add_option("system", system_text, "\"d; m1 m2 ...\"")->required();

    auto* cmd_double = app.add_subcommand("double-detect", "all-components-double analysis");
    cmd_double->add_option("a", a_text)->required();
    cmd_double->add_option("b", b_text)->required();

    auto* cmd_examples = app.add_subcommand("examples", "built-in constructions");
    cmd_examples->add_flag("--run-all", run_all, "exit nonzero unless every identity holds");
    cmd_examples->add_flag("--catalog", list_catalog, "list the classification catalog instead");

    // Polynomials routinely start with '-'; after a purely positional
    // subcommand, everything that follows is data, so inject the "--"
    // separator on the user's behalf.
    std::vector<std::string> args;
    {
        const std::set<std::string> positional_cmds{"branch",  "classify",      "singular",
                                                    "imult",   "double-detect", "linsys"};
        bool injected = false;
        for (int i = 1; i < argc; ++i) {
            args.emplace_back(argv[i]);
            if (!injected && positional_cmds.count(args.back())) {
                args.emplace_back("--");
                injected = true;
            }
        }
    }
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cmd_branch->parsed()) return run_branch(g, a_text, b_text);
        if (cmd_classify->parsed()) return run_classify(g, a_text, b_text);
        if (cmd_constants->parsed()) return run_constants(g, e_polys, abcd, net, bindings);
        if (cmd_singular->parsed()) return run_singular(g, poly_text);
        if (cmd_imult->parsed()) return run_imult(g, a_text, b_text, point_text);
        if (cmd_linsys->parsed()) return run_linsys(g, action, system_text);
        if (cmd_double->parsed()) return run_double_detect(g, a_text, b_text);
        if (cmd_examples->parsed()) return run_examples(g, run_all, list_catalog);
    } catch (const InternalCheckError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
