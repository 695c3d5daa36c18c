#include <doctest.h>

#include "triplane/classify.hpp"
#include "triplane/poly_io.hpp"
#include "triplane/report_json.hpp"

using namespace triplane;
using namespace triplane::classify;

namespace {

const VarSet vs = VarSet::xyt();
HPoly H(const std::string& s) { return parse_hpoly(s, vs); }

} // namespace

TEST_CASE("catalog counts per degree") {
    CHECK(catalog_for_degree(4).size() == 3);
    CHECK(catalog_for_degree(6).size() == 4);
    CHECK(catalog_for_degree(8).size() == 2);
    CHECK(catalog_for_degree(10).size() >= 6);
    CHECK(catalog_for_degree(12).size() == 2);
}

TEST_CASE("catalog carries the splitting types and the open case") {
    bool saw_open = false;
    for (const auto& e : catalog()) {
        CHECK(e.branch_degree % 2 == 0);
        CHECK(e.branch_degree >= 4);
        if (e.kodaira == Kodaira::open) {
            saw_open = true;
            bool pg_open_or_zero = !e.p_g.has_value() || *e.p_g == 0;
            CHECK(pg_open_or_zero);
            CHECK(e.q == 1);
        }
        if (e.name == "quartic-three-cusps") CHECK(e.tschirnhausen.label == "O(-1)+O(-1)");
        if (e.name == "sextic-six-cusps") {
            CHECK(e.tschirnhausen.label == "O(-1)+O(-2)");
            CHECK(e.sc_degrees == std::vector<int>{1, 0, 3, 2});
        }
        if (e.name == "octic-twelve-cusps") {
            CHECK(e.tschirnhausen.label == "O(-2)+O(-2)");
            CHECK(e.moduli == 12);
        }
        if (e.name == "quartic-surface-projection") {
            CHECK(e.tschirnhausen.label == "O(-2)+O(-3)");
            CHECK(e.sc_degrees == std::vector<int>{2, 1, 4, 3});
            CHECK(e.expected_cusps == 18);
            CHECK(e.moduli == 21);
        }
        if (e.name == "rational-decic-iv") {
            CHECK(e.tschirnhausen.label == "Omega^1(-1)");
            CHECK(e.expected_cusps == 21);
        }
        if (e.name == "canonical-triple-plane") CHECK(e.expected_cusps == 24);
        if (e.name == "elliptic-trisection-plane") CHECK(e.expected_cusps == 27);
    }
    CHECK(saw_open);
}

TEST_CASE("verify_catalog_consistency reproduces the numerology") {
    auto rep = verify_catalog_consistency();
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.ok);
    }
    CHECK(rep.all_ok());
    bool saw10 = false, saw8 = false;
    for (const auto& c : rep.checks) {
        if (c.name == "moduli-degree-10") saw10 = true;
        if (c.name == "moduli-degree-8") saw8 = true;
    }
    CHECK(saw10);
    CHECK(saw8);
}

TEST_CASE("branch census of the pencil pair matches the pencil family") {
    auto rep = branch_census(cover::build_from_pencil_pair(H("x"), H("y")));
    CHECK(!rep.cyclic);
    REQUIRE(rep.double_witness.has_value());
    REQUIRE(rep.pencil_of_lines.has_value());
    CHECK(rep.pencil_of_lines->line_count_with_multiplicity() == 6);
    bool matched = false;
    for (const auto& m : rep.matches)
        if (m.name == "six-lines-pencil") matched = true;
    CHECK(matched);
    bool annotated = false;
    for (const auto& a : rep.annotations)
        if (a.find("singular over h=k=0") != std::string::npos) annotated = true;
    CHECK(annotated);
}

TEST_CASE("branch census of the Cayley projection matches the flex-tangent entry") {
    auto proj = cover::build_cayley_projection(H("y"), H("t"));
    REQUIRE(proj.datum.has_value());
    auto rep = branch_census(*proj.datum);
    bool matched = false;
    for (const auto& m : rep.matches)
        if (m.name == "cuspidal-cubic-plus-flex-tangent") matched = true;
    CHECK(matched);
    // Component degrees 1 + 3 cover the reduced quartic.
    CHECK(rep.component_degrees == std::vector<int>{1, 3});
    CHECK(rep.unfactored_remainder_degree == 0);
}

TEST_CASE("branch census of the reducible cubic-surface projection") {
    auto proj = cover::build_cubic_surface_projection(H("x^2"), H("y^3-t^3"),
                                                      cover::SignConvention::minus);
    auto rep = branch_census(proj.datum);
    bool matched = false;
    for (const auto& m : rep.matches)
        if (m.name == "two-smooth-cubics") matched = true;
    CHECK(matched);
    CHECK(rep.component_degrees == std::vector<int>{3, 3});
}

TEST_CASE("cyclic covers never match ordinary entries") {
    auto rep = branch_census(cover::CoverDatum(HPoly(vs), H("x^3+y^3+t^3")));
    CHECK(rep.cyclic);
    CHECK(rep.matches.empty());
}

TEST_CASE("every built-in example identity holds") {
    for (const auto& r : run_builtin_examples()) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.ok);
    }
}

TEST_CASE("JSON reports round-trip their polynomial fields") {
    auto rep = branch_census(cover::build_from_pencil_pair(H("x"), H("y")));
    auto j = to_json(rep);
    CHECK(j["schema"] == 1);
    // Every polynomial string re-parses to an equal polynomial.
    HPoly full = parse_hpoly(j["branch"]["full"].get<std::string>(), vs);
    CHECK(full == rep.branch.full);
    HPoly reduced = parse_hpoly(j["branch"]["reduced"].get<std::string>(), vs);
    CHECK(reduced == rep.branch.reduced);
    for (const auto& f : j["branch"]["factors"]) {
        HPoly fac = parse_hpoly(f["factor"].get<std::string>(), vs);
        CHECK(!fac.is_zero());
    }
    // Witness halves re-parse as rational polynomials.
    const auto& w = j["double_witness"];
    HPoly g = parse_hpoly(w["g"].get<std::string>(), vs);
    CHECK(g == rep.double_witness->g);
    QPoly h_rat = parse_poly(w["h"]["rational_part"].get<std::string>(), vs);
    QPoly h_rad = parse_poly(w["h"]["radical_part"].get<std::string>(), vs);
    CHECK(h_rat + h_rad == split_ext(rep.double_witness->h.poly()).rational_part +
                               split_ext(rep.double_witness->h.poly()).radical_part);
}

TEST_CASE("census of a built-in constructor matches at least one entry of its degree") {
    // Spec invariant: every built-in constructor's census matches at least
    // one catalog entry of the right degree.
    auto d1 = cover::build_from_pencil_pair(H("x"), H("y"));
    CHECK(!branch_census(d1).matches.empty());
    auto proj = cover::build_cayley_projection(H("y"), H("t"));
    CHECK(!branch_census(*proj.datum).matches.empty());
    auto d3 = cover::build_cubic_surface_projection(H("x^2"), H("y^3-t^3"),
                                                    cover::SignConvention::minus);
    CHECK(!branch_census(d3.datum).matches.empty());
}
