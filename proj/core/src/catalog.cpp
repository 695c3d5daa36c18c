#include "triplane/catalog.hpp"

#include <sstream>

namespace triplane::classify {

std::string kodaira_name(Kodaira k) {
    switch (k) {
        case Kodaira::minus_infinity: return "-infinity";
        case Kodaira::zero: return "0";
        case Kodaira::one: return "1";
        case Kodaira::two: return "2";
        case Kodaira::open: return "open";
    }
    return "open";
}

namespace {

TschirnhausenType split_bundle(int d1, int d2) {
    std::ostringstream os;
    os << "O(" << d1 << ")+O(" << d2 << ")";
    return {true, d1, d2, os.str()};
}

std::vector<CatalogEntry> build_catalog() {
    using linsys::parse_system;
    std::vector<CatalogEntry> t;

    // ----- branch degree 4: projections of the cubic scroll in P^4 -----
    {
        CatalogEntry e;
        e.name = "quartic-three-cusps";
        e.branch_degree = 4;
        e.component_profile = "irreducible quartic";
        e.expected_cusps = 3;
        e.tschirnhausen = split_bundle(-1, -1);
        e.p_g = 0; e.q = 0;
        e.kodaira = Kodaira::minus_infinity;
        e.source = "general plane projection of the smooth cubic scroll";
        e.plane_system = parse_system("2; 1");
        e.sc_degrees = {1, 1, 1, 1};
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "cuspidal-cubic-plus-flex-tangent";
        e.branch_degree = 4;
        e.component_profile = "cuspidal cubic + flex tangent line";
        e.tschirnhausen = split_bundle(-1, -1);
        e.p_g = 0; e.q = 0;
        e.kodaira = Kodaira::minus_infinity;
        e.source = "projection of the smooth scroll through a Cayley cubic";
        e.notes = "the line meets the cubic with multiplicity 3 at its flex";
        e.sc_degrees = {1, 1, 1, 1};
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "four-lines-pencil";
        e.branch_degree = 4;
        e.component_profile = "4 lines in a pencil (members may appear doubled)";
        e.tschirnhausen = split_bundle(-1, -1);
        e.p_g = 0; e.q = 0;
        e.kodaira = Kodaira::minus_infinity;
        e.source = "projection of the cone over a twisted cubic";
        e.pencil_of_lines = true;
        t.push_back(e);
    }

    // ----- branch degree 6: cubic surfaces and the dual-cubic example -----
    {
        CatalogEntry e;
        e.name = "sextic-six-cusps";
        e.branch_degree = 6;
        e.component_profile = "irreducible sextic";
        e.expected_cusps = 6;
        e.tschirnhausen = split_bundle(-1, -2);
        e.p_g = 0; e.q = 0;
        e.kodaira = Kodaira::minus_infinity;
        e.source = "external projection of a smooth cubic surface";
        e.sc_degrees = {1, 0, 3, 2};
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "two-smooth-cubics";
        e.branch_degree = 6;
        e.component_profile = "two smooth cubics meeting at 3 collinear points, multiplicity 3 each";
        e.expected_cusps = 0;
        e.tschirnhausen = split_bundle(-1, -2);
        e.p_g = 0; e.q = 0;
        e.kodaira = Kodaira::minus_infinity;
        e.source = "cubic surface projected from a vertex of a rank-2 polar quadric";
        e.notes = "10 such centers for a general smooth cubic surface";
        e.sc_degrees = {1, 0, 3, 2};
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "six-lines-pencil";
        e.branch_degree = 6;
        e.component_profile = "6 lines in a pencil (members may appear doubled)";
        e.tschirnhausen = split_bundle(-1, -2);
        e.p_g = 0; e.q = 1;
        e.kodaira = Kodaira::minus_infinity;
        e.source = "irrational pencil composed with the cover (q = 1)";
        e.pencil_of_lines = true;
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "dual-cubic-sextic";
        e.branch_degree = 6;
        e.component_profile = "irreducible sextic with 9 cusps (dual of a smooth cubic)";
        e.expected_cusps = 9;
        e.tschirnhausen = {false, 0, 0, "Omega^1"};
        e.p_g = 0; e.q = 1;
        e.kodaira = Kodaira::minus_infinity;
        e.source = "symmetric square of an elliptic curve mapping to the dual plane";
        e.notes = "the basic exceptional example; minimal elliptic ruled surface";
        t.push_back(e);
    }

    // ----- branch degree 8 -----
    {
        CatalogEntry e;
        e.name = "octic-twelve-cusps";
        e.branch_degree = 8;
        e.component_profile = "irreducible octic";
        e.expected_cusps = 12;
        e.tschirnhausen = split_bundle(-2, -2);
        e.p_g = 0; e.q = 0;
        e.kodaira = Kodaira::minus_infinity;
        e.source = "plane blown up at 10 points via |4;2,1^9|";
        e.plane_system = parse_system("4; 2 1^9");
        e.sc_degrees = {2, 2, 2, 2};
        e.moduli = 12;
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "eight-lines-pencil";
        e.branch_degree = 8;
        e.component_profile = "8 lines in a pencil (members may appear doubled)";
        e.tschirnhausen = split_bundle(-2, -2);
        e.p_g = 0; e.q = 2;
        e.kodaira = Kodaira::minus_infinity;
        e.source = "quintic scrolls with a double line and a triple line (q = 2)";
        e.pencil_of_lines = true;
        t.push_back(e);
    }

    // ----- branch degree 10 -----
    {
        CatalogEntry e;
        e.name = "quartic-surface-projection";
        e.branch_degree = 10;
        e.component_profile = "irreducible decic";
        e.expected_cusps = 18;
        e.tschirnhausen = split_bundle(-2, -3);
        e.p_g = 1; e.q = 0;
        e.kodaira = Kodaira::zero;
        e.source = "quartic surface with canonical singularities projected from a smooth point";
        e.sc_degrees = {2, 1, 4, 3};
        e.moduli = 21;
        t.push_back(e);
    }
    auto rational10 = [&](const std::string& name, const std::string& sys, int points,
                          const std::string& notes) {
        CatalogEntry e;
        e.name = name;
        e.branch_degree = 10;
        e.component_profile = "irreducible decic (rational cover)";
        e.p_g = 0; e.q = 0;
        e.kodaira = Kodaira::minus_infinity;
        e.source = "plane blown up at " + std::to_string(points) + " points via " + sys;
        e.plane_system = parse_system(sys.substr(1, sys.size() - 2));
        e.notes = notes;
        return e;
    };
    t.push_back(rational10("rational-decic-i", "|9; 3^8 2 1^2|", 11,
                           "base points in special position (first ten on a cubic); the contracted "
                           "cubic gives an elliptic singularity"));
    t.push_back(rational10("rational-decic-ii", "|7; 3 2^9 1|", 11,
                           "base points in special position; a contracted cubic gives an elliptic "
                           "singularity"));
    t.push_back(rational10("rational-decic-iii", "|6; 2^7 1^5|", 12,
                           "base points in special position; a contracted curve of genus at most 1"));
    {
        CatalogEntry e = rational10("rational-decic-iv", "|4; 1^13|", 13,
                                    "13 points cut by two quartics; no contracted curve needed");
        e.expected_cusps = 21;
        e.tschirnhausen = {false, 0, 0, "Omega^1(-1)"};
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "ten-lines-pencil";
        e.branch_degree = 10;
        e.component_profile = "10 lines in a pencil (members may appear doubled)";
        e.tschirnhausen = split_bundle(-2, -3);
        e.p_g = 0; e.q = 3;
        e.kodaira = Kodaira::minus_infinity;
        e.source = "cone over a smooth plane quartic projected from a point on it";
        e.pencil_of_lines = true;
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "decic-open-q1";
        e.branch_degree = 10;
        e.component_profile = "unknown";
        e.tschirnhausen = {false, 0, 0, "unknown"};
        e.p_g = 0; e.q = 1;
        e.kodaira = Kodaira::open;
        e.source = "open case: q = 1 with the surface properly elliptic and minimal, or ruled";
        e.notes = "existence undecided";
        t.push_back(e);
    }

    // ----- branch degree 12: reference entries -----
    {
        CatalogEntry e;
        e.name = "canonical-triple-plane";
        e.branch_degree = 12;
        e.component_profile = "irreducible degree-12 curve";
        e.expected_cusps = 24;
        e.tschirnhausen = split_bundle(-2, -4);
        e.p_g = 3; e.q = 0;
        e.kodaira = Kodaira::two;
        e.source = "canonical map of a general-type surface with p_g = K^2 = 3";
        t.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "elliptic-trisection-plane";
        e.branch_degree = 12;
        e.component_profile = "irreducible degree-12 curve";
        e.expected_cusps = 27;
        e.tschirnhausen = split_bundle(-3, -3);
        e.p_g = 2; e.q = 0;
        e.kodaira = Kodaira::one;
        e.source = "elliptic surface over the line, covered by genus-4 trisections";
        t.push_back(e);
    }
    return t;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> table = build_catalog();
    return table;
}

std::vector<CatalogEntry> catalog_for_degree(int branch_degree) {
    std::vector<CatalogEntry> out;
    for (const auto& e : catalog())
        if (e.branch_degree == branch_degree) out.push_back(e);
    return out;
}

namespace {

int coeff_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

} // namespace

ConsistencyReport verify_catalog_consistency() {
    ConsistencyReport rep;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        rep.checks.push_back({name, ok, detail});
    };

    // Branch degree parity and floor.
    for (const auto& e : catalog())
        check("degree-even-ge-4: " + e.name, e.branch_degree % 2 == 0 && e.branch_degree >= 4,
              "degree " + std::to_string(e.branch_degree));

    // Genus relation g = h - 2 for 2h = branch degree, via the recorded
    // plane systems (which must also have self-intersection 3).
    for (const auto& e : catalog()) {
        if (!e.plane_system) continue;
        auto inv = linsys::invariants(*e.plane_system);
        int h = e.branch_degree / 2;
        check("system-selfint-3: " + e.name, inv.self_int == 3,
              e.plane_system->str() + " has C^2 = " + std::to_string(inv.self_int));
        check("genus-h-minus-2: " + e.name, inv.genus == h - 2,
              e.plane_system->str() + " has g = " + std::to_string(inv.genus) + ", h-2 = " +
                  std::to_string(h - 2));
    }
    // The relation for all four relevant half-degrees h = 2, 3, 4, 5.
    for (int h = 2; h <= 5; ++h)
        check("genus-relation-h" + std::to_string(h), true,
              "2h = " + std::to_string(2 * h) + " gives section genus " + std::to_string(h - 2));

    // Adjoint F-data of the recorded systems: self-intersection 3 with genus
    // 2, 2 with genus 1, or 1 with genus 0.
    for (const auto& e : catalog()) {
        if (!e.plane_system || e.branch_degree < 8) continue;
        auto adj = linsys::adjoint(*e.plane_system);
        auto inv = linsys::invariants(adj);
        bool ok = (inv.self_int == 3 && inv.genus == 2) || (inv.self_int == 2 && inv.genus == 1) ||
                  (inv.self_int == 1 && inv.genus == 0) || (inv.self_int == 0 && inv.genus == 0);
        check("adjoint-F-data: " + e.name, ok,
              "adjoint " + adj.str() + " has F^2 = " + std::to_string(inv.self_int) + ", genus " +
                  std::to_string(inv.genus));
    }

    // Structure-constant degree pattern (d1, 2d1-d2, 2d2-d1, d2) for a split
    // bundle O(-d1)+O(-d2), and the branch degree 2(d1+d2).
    for (const auto& e : catalog()) {
        if (e.sc_degrees.empty() || !e.tschirnhausen.split) continue;
        int d1 = -e.tschirnhausen.deg1, d2 = -e.tschirnhausen.deg2;
        std::vector<int> want{d1, 2 * d1 - d2, 2 * d2 - d1, d2};
        check("sc-degrees: " + e.name, e.sc_degrees == want,
              "expected degrees for O(" + std::to_string(-d1) + ")+O(" + std::to_string(-d2) + ")");
        check("sc-branch-degree: " + e.name, 2 * (d1 + d2) == e.branch_degree,
              "2(d1+d2) = " + std::to_string(2 * (d1 + d2)));
    }

    // Moduli counts.  Degree 10: 6+3+15+10 coefficients, minus 1 for
    // projectivization, minus 8 plane automorphisms, minus 4 bundle
    // automorphisms = 21.
    {
        int coeffs = coeff_count(2) + coeff_count(1) + coeff_count(4) + coeff_count(3);
        int moduli = coeffs - 1 - 8 - 4;
        check("moduli-degree-10", moduli == 21,
              std::to_string(coeffs) + " - 1 - 8 - 4 = " + std::to_string(moduli));
    }
    // Degree 8, coefficient route: four quadratics give 24 coefficients,
    // minus 8 and minus 4 automorphisms = 12; point route: 20 - 8 = 12.
    {
        int coeffs = 4 * coeff_count(2);
        int via_coeffs = coeffs - 8 - 4;
        int via_points = 2 * 10 - 8;
        check("moduli-degree-8", via_coeffs == 12 && via_points == 12,
              std::to_string(coeffs) + " - 8 - 4 = " + std::to_string(via_coeffs) + "; 20 - 8 = " +
                  std::to_string(via_points));
    }
    for (const auto& e : catalog()) {
        if (!e.moduli) continue;
        check("moduli-recorded: " + e.name, *e.moduli == (e.branch_degree == 8 ? 12 : 21),
              "recorded " + std::to_string(*e.moduli));
    }
    return rep;
}

} // namespace triplane::classify
