#include "triplane/classify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "triplane/poly_io.hpp"
#include "triplane/structure.hpp"

namespace triplane::classify {

namespace {

// Multiset of (degree, exponent) pairs of the squarefree factors.
std::vector<std::pair<int, int>> factor_profile(const cover::BranchCurve& b) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [f, e] : b.factors) out.emplace_back(*f.degree(), e);
    std::sort(out.begin(), out.end());
    return out;
}

bool profile_is(const std::vector<std::pair<int, int>>& profile,
                std::vector<std::pair<int, int>> want) {
    std::sort(want.begin(), want.end());
    return profile == want;
}

} // namespace

ClassificationReport branch_census(const cover::CoverDatum& datum) {
    ClassificationReport rep;
    rep.branch = cover::branch_curve(datum);
    rep.cyclic = cover::is_cyclic(datum);
    rep.common_square = cover::common_square_part(datum);

    if (!rep.cyclic && !rep.common_square) {
        try {
            rep.double_witness = cover::detect_all_double(datum);
        } catch (const ExtensionNeededError& e) {
            rep.double_witness_note = e.what();
        }
        if (rep.double_witness) {
            // A smooth cover with an all-double branch would be cyclic; this
            // one is not, so the surface is singular over h = k = 0, a
            // zero-dimensional scheme of length d^2.
            rep.annotations.push_back(
                "cover surface singular over h=k=0 (scheme of length " +
                std::to_string(datum.d() * datum.d()) + ")");
        }
    }

    rep.pencil_of_lines = cover::lines_in_pencil_check(rep.branch.full);

    rep.census = sing::rational_singular_locus(rep.branch.reduced);
    try {
        rep.cusp_census = sing::cusp_census_via_ab(datum);
    } catch (const DomainError&) {
        // cyclic datum or common component: no transversality accounting
    }

    // Component splitting of the reduced branch.
    std::vector<QPoly> components;
    auto add_component = [&](const QPoly& c) {
        QPoly cc = canonical_scale(c);
        if (cc.degree() <= 0) return;
        for (const auto& known : components)
            if (known == cc) return;
        components.push_back(cc);
    };
    if (rep.pencil_of_lines)
        for (const auto& [line, mult] : rep.pencil_of_lines->lines) add_component(line.poly());
    // a = -s^2 makes the branch split as (b - 2 s^3)(b + 2 s^3).
    if (!datum.a().is_zero()) {
        auto sq = perfect_power_up_to_scalar(-datum.a().poly(), 2);
        if (sq && is_square(sq->first)) {
            QPoly s = sq->second.scaled(*exact_sqrt(sq->first));
            QPoly two_s3 = s.pow(3).scaled(Rat(2));
            add_component(datum.b().poly() - two_s3);
            add_component(datum.b().poly() + two_s3);
        }
    }
    // Binary-form factors of small squarefree factors of the branch.
    for (const auto& [f, e] : rep.branch.factors) {
        int active = 0;
        for (int i = 0; i < f.vars().size(); ++i)
            if (f.poly().depends_on(i)) ++active;
        if (active <= 2 && *f.degree() <= 12) {
            auto bf = binary_form_factor(f);
            for (const auto& [fac, ee] : bf.factors) add_component(fac.poly());
        }
    }
    QPoly rest = rep.branch.reduced.poly();
    for (const auto& c : components) {
        while (true) {
            auto q = try_divide(rest, c);
            if (!q) break;
            rest = *q;
            rep.component_degrees.push_back(c.degree());
        }
    }
    if (rest.degree() > 0) rep.component_degrees.push_back(rest.degree());
    std::sort(rep.component_degrees.begin(), rep.component_degrees.end());
    rep.unfactored_remainder_degree = std::max(rest.degree(), 0);

    // ---- catalog matching by necessary conditions ----
    if (rep.cyclic) {
        rep.annotations.push_back("cyclic cover: no ordinary-triple-plane catalog entry applies");
        return rep;
    }
    auto profile = factor_profile(rep.branch);
    int full_deg = *rep.branch.full.degree();
    int d = datum.d();
    bool census_certified = rep.census.cusp_count_certified;

    for (const auto& entry : catalog()) {
        std::optional<std::string> confidence;
        if (entry.pencil_of_lines) {
            if (rep.pencil_of_lines &&
                rep.pencil_of_lines->line_count_with_multiplicity() == entry.branch_degree &&
                entry.branch_degree == full_deg)
                confidence = "pencil structure with matching line count";
        } else if (entry.branch_degree == 4 && d == 1) {
            if (entry.name == "quartic-three-cusps" && profile_is(profile, {{1, 2}, {4, 1}}))
                confidence = "conductor line squared times an unsplit quartic";
            if (entry.name == "cuspidal-cubic-plus-flex-tangent" &&
                profile_is(profile, {{1, 3}, {3, 1}}))
                confidence = "line (with conductor square) plus residual cubic";
        } else if (entry.branch_degree == 6 && d == 1) {
            bool squarefree_sextic = profile_is(profile, {{6, 1}});
            if (entry.name == "sextic-six-cusps" && squarefree_sextic) {
                if (census_certified && rep.census.cusp_count == 6)
                    confidence = "census: exactly 6 located cusps";
                else if (!census_certified || rep.census.cusp_count <= 6)
                    confidence = "irreducible-degree profile (census incomplete)";
            }
            if (entry.name == "dual-cubic-sextic" && squarefree_sextic) {
                if (census_certified && rep.census.cusp_count == 9)
                    confidence = "census: exactly 9 located cusps";
                else if (!census_certified)
                    confidence = "irreducible-degree profile (census incomplete)";
            }
            if (entry.name == "two-smooth-cubics" && profile_is(profile, {{3, 1}, {3, 1}}))
                confidence = "two cubic components";
        } else if (entry.branch_degree == 10 && d == 2) {
            // Conductor line squared times a decic.
            if (profile_is(profile, {{1, 2}, {10, 1}}))
                confidence = "degree profile only";
        } else if (entry.branch_degree == 12 && d == 2) {
            if (profile_is(profile, {{12, 1}})) confidence = "degree profile only";
        }
        if (confidence) rep.matches.push_back({entry.name, *confidence});
    }
    return rep;
}

namespace {

ExampleResult run_one(const std::string& name, const std::string& description,
                      const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        return {name, description, true, detail};
    } catch (const std::exception& e) {
        return {name, description, false, e.what()};
    }
}

} // namespace

std::vector<ExampleResult> run_builtin_examples() {
    std::vector<ExampleResult> out;
    VarSet vs = VarSet::xyt();
    auto var = [&](int i) { return HPoly(QPoly::variable(vs, i)); };
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw InternalCheckError("assertion failed: " + what);
    };

    out.push_back(run_one("three-double-lines",
                          "branch of a = -(x^2+xy+y^2)/3, b = -xy(x+y) is -1/27 ((x-y)(x+2y)(2x+y))^2",
                          [&] {
        HPoly a = parse_hpoly("-(x^2+x*y+y^2)/3", vs);
        HPoly b = parse_hpoly("-(x^2*y+x*y^2)", vs);
        cover::CoverDatum datum(a, b);
        HPoly g = parse_hpoly("(x-y)*(x+2*y)*(2*x+y)", vs);
        require(cover::branch_poly(a, b) == (g * g).scaled(Rat(-1, 27)),
                "branch equals -(1/27) g^2");
        auto pencil = cover::lines_in_pencil_check(cover::branch_poly(a, b));
        require(pencil.has_value() && pencil->lines.size() == 3, "three pencil lines");
        for (const auto& [line, mult] : pencil->lines)
            require(*line.degree() == 1 && mult == 2, "each line doubled");
        return std::string("branch = -1/27 ((x-y)(x+2y)(2x+y))^2 through ") +
               point_str(pencil->center);
    }));

    out.push_back(run_one("pencil-pair", "(h,k) = (x,y): branch (x^3-y^3)^2, witness roundtrip",
                          [&] {
        auto datum = cover::build_from_pencil_pair(var(0), var(1));
        auto w = cover::detect_all_double(datum);
        require(w.has_value(), "witness exists");
        require(w->lambda == 1 && !w->radicand, "rational witness with lambda 1");
        return "g = " + format(w->g);
    }));

    out.push_back(run_one("cayley", "c1 = y, d1 = t: branch x^3 (4y^3 + x t^2)", [&] {
        auto proj = cover::build_cayley_projection(var(1), var(2));
        require(proj.residual_cubic == parse_hpoly("4*y^3+x*t^2", vs), "residual cubic");
        auto census = sing::rational_singular_locus(proj.residual_cubic);
        require(census.records.size() == 1 && census.records[0].kind == sing::SingKind::cusp,
                "one ordinary cusp on the residual cubic");
        int im = sing::intersection_multiplicity(proj.line, proj.residual_cubic,
                                                 PlanePoint(Rat(0), Rat(0), Rat(1)));
        require(im == 3, "flex line meets the cubic with multiplicity 3");
        return "cusp at " + point_str(census.records[0].point);
    }));

    out.push_back(run_one("cubic-surface-split",
                          "b2 = x^2, b3 = y^3 - t^3 (minus convention): two cubics, contact 3",
                          [&] {
        auto proj = cover::build_cubic_surface_projection(
            parse_hpoly("x^2", vs), parse_hpoly("y^3-t^3", vs), cover::SignConvention::minus);
        require(proj.cubic_split.has_value(), "branch splits into two cubics");
        PlanePoint p(Rat(0), Rat(1), Rat(1));
        int im = sing::intersection_multiplicity(proj.cubic_split->first, proj.cubic_split->second, p);
        require(im == 3, "intersection multiplicity 3 at (0:1:1)");
        return "split: (" + format(proj.cubic_split->first) + ") (" +
               format(proj.cubic_split->second) + ")";
    }));

    out.push_back(run_one("cyclic", "a = 0, b = x^3+y^3+t^3: cyclic cover with branch b^2", [&] {
        cover::CoverDatum datum(HPoly(vs), parse_hpoly("x^3+y^3+t^3", vs));
        require(cover::is_cyclic(datum), "cyclic");
        auto bc = cover::branch_curve(datum);
        require(bc.double_part == bc.reduced, "branch is everywhere double");
        return std::string("branch = (x^3+y^3+t^3)^2");
    }));

    out.push_back(run_one("common-factor", "a = xy, b = xt^2: x^2 divides the branch", [&] {
        cover::CoverDatum datum(parse_hpoly("x*y", vs), parse_hpoly("x*t^2", vs));
        auto cs = cover::common_square_part(datum);
        require(cs.has_value() && cs->c == var(0), "common factor x");
        return "branch = x^2 (4xy^3 + t^4)";
    }));

    out.push_back(run_one("depressed-cubic", "e2 = 3x: z^3+3x z^2 depresses to a = -x^2, b = 2x^3",
                          [&] {
        auto datum = cover::depress_cubic(parse_hpoly("3*x", vs), HPoly(vs), HPoly(vs));
        require(datum.a() == parse_hpoly("-x^2", vs) && datum.b() == parse_hpoly("2*x^3", vs),
                "depressed coefficients");
        return "a = -x^2, b = 2x^3";
    }));

    out.push_back(run_one("tangency", "conic tangent to the cubic: one non-transversal correction",
                          [&] {
        cover::CoverDatum datum(parse_hpoly("x*t+y^2", vs),
                                parse_hpoly("x*t^2+2*y^2*t+y^3+x^3", vs));
        auto cc = sing::cusp_census_via_ab(datum);
        require(cc.expected == 6, "expected 6 = deg a * deg b");
        require(cc.corrections.size() == 1, "exactly one correction");
        return "correction at " + point_str(cc.corrections[0].point) + " of type " +
               sing::kind_name(cc.corrections[0].kind, cc.corrections[0].k);
    }));

    return out;
}

} // namespace triplane::classify
