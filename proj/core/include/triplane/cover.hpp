#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "triplane/factor.hpp"
#include "triplane/point.hpp"

namespace triplane::cover {

// The plane triple-cover datum z^3 + 3 a z + b with deg a = 2d, deg b = 3d.
class CoverDatum {
public:
    CoverDatum(HPoly a, HPoly b);

    const HPoly& a() const { return a_; }
    const HPoly& b() const { return b_; }
    int d() const { return d_; }

private:
    HPoly a_, b_;
    int d_;
};

// 4a^3 + b^2 for raw polynomials (also usable for degenerate shapes).
HPoly branch_poly(const HPoly& a, const HPoly& b);

struct BranchCurve {
    HPoly full;        // 4a^3 + b^2, degree 6d
    HPoly reduced;     // squarefree part, canonical scale
    HPoly double_part; // product of the exponent >= 2 factors, each once
    Rat content;       // full = content * prod factors
    bool has_triple_component;
    std::vector<std::pair<HPoly, int>> factors; // squarefree decomposition of full
};

// Throws DegenerateBranchError when 4a^3 + b^2 vanishes identically.
BranchCurve branch_curve(const CoverDatum& datum);
BranchCurve branch_curve_of(const HPoly& a, const HPoly& b);

bool is_cyclic(const CoverDatum& datum);

struct CommonSquarePart {
    HPoly c;     // gcd(a, b), positive degree
    HPoly alpha; // a / c
    HPoly beta;  // b / c
};

// Present when gcd(a, b) has positive degree; c^2 then divides the branch and
// the cover surface is singular along z = c = beta = 0.
std::optional<CommonSquarePart> common_square_part(const CoverDatum& datum);

struct DoubleBranchWitness {
    HPoly g;     // primitive: full branch = lambda * g^2
    Rat lambda;  // 1 whenever lambda was a rational square (absorbed into g)
    std::optional<Int> radicand; // nullopt: witness over Q; else over Q(sqrt(radicand))
    XHPoly h, k; // b = -(h^3+k^3), a = -h*k over the marked field
    QuadExt unit;   // cube-root-of-unity style scalar applied to k during normalization
    bool swapped_sign; // witness built from -g rather than +g
};

// Detects branches of the shape lambda * g^2 and recovers the pencil pair.
// Pre: a != 0 and gcd(a, b) constant.  Throws ExtensionNeededError when the
// square exists but cube extraction leaves the supported field.
std::optional<DoubleBranchWitness> detect_all_double(const CoverDatum& datum);

// (a, b) = (-h k, -(h^3 + k^3)); the branch equals (h^3 - k^3)^2 exactly.
CoverDatum build_from_pencil_pair(const HPoly& h, const HPoly& k);

enum class SignConvention { plus, minus };

struct CubicSurfaceProjection {
    CoverDatum datum;   // a = +b2 (plus) or -b2 (minus), b = b3
    SignConvention convention;
    HPoly branch_report; // 4 b2^3 + b3^2 (plus) or 4 b2^3 - b3^2 (minus)
    // Present under the minus convention when b2 is a perfect square s^2:
    // the two cubics (b3 - 2 s^3, b3 + 2 s^3).
    std::optional<std::pair<HPoly, HPoly>> cubic_split;
};

CubicSurfaceProjection build_cubic_surface_projection(const HPoly& b2, const HPoly& b3,
                                                      SignConvention convention = SignConvention::plus);

struct CayleyProjection {
    HPoly a, b;  // b2 = x c1, b3 = x^2 d1
    std::optional<CoverDatum> datum; // absent when d1 == 0 (b vanishes)
    HPoly line;           // the factor x
    HPoly residual_cubic; // 4 c1^3 + x d1^2
    bool degenerate;      // d1 == 0: branch collapses to 4 x^3 c1^3
};

// Branch discriminant factors as x^3 (4 c1^3 + x d1^2); the true branch is
// the line plus the residual cuspidal cubic.
CayleyProjection build_cayley_projection(const HPoly& c1, const HPoly& d1);

struct PencilOfLines {
    PlanePoint center;
    // Irreducible factors through the center with their multiplicity in B; a
    // degree-e factor stands for e conjugate lines.
    std::vector<std::pair<HPoly, int>> lines;
    int line_count_with_multiplicity() const {
        int n = 0;
        for (const auto& [f, m] : lines) n += (f.degree() ? *f.degree() : 0) * m;
        return n;
    }
};

// Present iff the reduced part of B has a point of multiplicity equal to its
// degree; the form through that point is then split into lines over Q.
std::optional<PencilOfLines> lines_in_pencil_check(const HPoly& B);

// Tschirnhausen depression of z^3 + e2 z^2 + e1 z + e0 via z -> z - e2/3.
CoverDatum depress_cubic(const HPoly& e2, const HPoly& e1, const HPoly& e0);

} // namespace triplane::cover
