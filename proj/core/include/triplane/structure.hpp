#pragma once

#include <optional>
#include <string>
#include <utility>

#include "triplane/hpoly.hpp"
#include "triplane/point.hpp"

namespace triplane::algebra {

// Coefficients of the monic cubic X^3 + e2 X^2 + e1 X + e0.  Either
// homogeneous of degrees (d, 2d, 3d) or affine; not all zero.
struct MonicCubic {
    QPoly e0, e1, e2;

    MonicCubic(QPoly e0_, QPoly e1_, QPoly e2_);
};

// The multiplication data in trace-zero generators z, w:
//   z^2 =  2A + a z + b w
//   z w = -B  - d z - a w
//   w^2 =  2C + c z + d w
struct StructureConstants {
    QPoly a, b, c, d;

    StructureConstants(QPoly a_, QPoly b_, QPoly c_, QPoly d_);
    const VarSet& vars() const { return a.vars(); }
};

struct DerivedABC {
    QPoly A, B, C, D; // A = a^2-bd, B = ad-bc, C = d^2-ac, D = B^2-4AC
};

// a = 2 e2/3, b = 1, c = e1 e2 - e0, d = (e2^2 + e1)/3.
StructureConstants from_monic_cubic(const MonicCubic& mc);

DerivedABC derive_ABC(const StructureConstants& sc);

struct RelationResiduals {
    QPoly res_A, res_B, res_C;
    bool all_zero() const { return res_A.is_zero() && res_B.is_zero() && res_C.is_zero(); }
};

// Residuals of A-(a^2-bd), B-(ad-bc), C-(d^2-ac) for a supplied ABC triple.
RelationResiduals verify_relations(const StructureConstants& sc, const DerivedABC& abc);

// b2 = a^2 - d and b3 = 3ad - 2a^3 - c; requires b == 1.  The associated
// cover z^3 - 3 b2 z + b3 has discriminant branch exactly D = B^2 - 4AC.
std::pair<QPoly, QPoly> cubic_surface_from_constants(const StructureConstants& sc);

struct FlexTangentReport {
    bool flex_configuration; // a == b
    QPoly discriminant;      // D = B^2 - 4AC
    // Present when a == b: D = a * residual_cubic with
    // residual = 4a^2 c + a c^2 - 6acd - 3ad^2 + 4d^3.
    std::optional<QPoly> residual_cubic;
    std::optional<PlanePoint> flex_point; // a = d = 0
    std::optional<PlanePoint> cusp_point; // a = d and d = c
    std::string note;
};

// Requires four linear polynomials; throws on a == 0.
FlexTangentReport flex_tangent_case(const StructureConstants& sc);

// From the net x^2, xy + px + qy, y^2 + rx + sy (q != 0): after dividing by q
// and renaming p/q -> p, r/q -> r, the cubic in beta has
// e0 = r v - p w, e1 = p s - r - w, e2 = s + p over affine coordinates (v, w).
MonicCubic net_to_monic_cubic(const Rat& p, const Rat& q, const Rat& r, const Rat& s,
                              const VarSet& vw = VarSet({"v", "w"}));

// Homogenization of an affine bivariate polynomial for the singularity
// toolkit; the new variable is appended as the line at infinity.
HPoly homogenize_at_infinity(const QPoly& f, const std::string& new_var = "t");

} // namespace triplane::algebra
