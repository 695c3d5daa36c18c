#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triplane/cover.hpp"
#include "triplane/point.hpp"

namespace triplane::sing {

enum class SingKind { node, cusp, tacnode, a_k, ordinary_multiple, unclassified };

std::string kind_name(SingKind kind, std::optional<int> k);

struct SingularityRecord {
    XPlanePoint point;
    int multiplicity = 0;
    SingKind kind = SingKind::unclassified;
    std::optional<int> k; // a_k index (node=1, cusp=2, tacnode=3)

    bool is_ordinary_cusp() const { return kind == SingKind::cusp; }
};

// Order of vanishing at p (0 iff p is not on the curve).
int multiplicity_at(const XHPoly& f, const XPlanePoint& p);
int multiplicity_at(const HPoly& f, const PlanePoint& p);

// a_k classification of a double point: k = ord(disc) - 1 in a verified
// v-general frame drawn from a fixed substitution sequence (8 retries, then
// `unclassified`).
SingularityRecord classify_double_point(const XHPoly& f, const XPlanePoint& p);
SingularityRecord classify_double_point(const HPoly& f, const PlanePoint& p);

// Local intersection number by the classical recursive reduction.  Throws
// when F and G share a component through p.
int intersection_multiplicity(const XHPoly& f, const XHPoly& g, const XPlanePoint& p);
int intersection_multiplicity(const HPoly& f, const HPoly& g, const PlanePoint& p);

struct SingularCensus {
    std::vector<SingularityRecord> records;
    bool extended = false;    // some located point needed a quadratic extension
    int aggregate_degree = 0; // unlocated eliminant degree (indicator, not points)
    bool reduced_input = false; // non-squarefree input was replaced by its reduced part
    int cusp_count = 0;         // located ordinary cusps
    bool cusp_count_certified = false;
    std::string completeness() const { return aggregate_degree > 0 ? "over-Q-only" : "extended"; }
};

// All singular points with rational coordinates (plus, optionally, points
// over one quadratic extension); everything else is aggregate-accounted.
// Refuses perfect powers (singular along a component).
SingularCensus rational_singular_locus(const HPoly& f, bool allow_quadratic_extension = true);

struct CuspCensus {
    int expected = 0;                 // deg(a) * deg(b) = 6 d^2
    int certified_transversal = 0;    // rational common zeros with rank-2 Jacobian
    std::vector<XPlanePoint> transversal_points;
    std::vector<SingularityRecord> corrections; // non-transversal points, classified on the branch
};

// Census of the branch cusps through the common zeros of (a, b); requires
// gcd(a, b) constant (in particular a != 0).
CuspCensus cusp_census_via_ab(const cover::CoverDatum& datum);

// Common zeros of a finite-intersection system of homogeneous curves.
// Exposed because both the singular census and the cusp census build on it.
struct SystemSolution {
    std::vector<XPlanePoint> points; // verified; rational ones have trivial radical parts
    int aggregate_degree = 0;
    bool extended = false;
};
SystemSolution solve_common_zeros(const std::vector<HPoly>& polys, bool allow_quadratic_extension);

} // namespace triplane::sing
