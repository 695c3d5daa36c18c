#include "triplane/cover.hpp"

#include "triplane/mat3.hpp"
#include "triplane/poly_io.hpp"

namespace triplane::cover {

CoverDatum::CoverDatum(HPoly a, HPoly b) : a_(std::move(a)), b_(std::move(b)) {
    if (b_.is_zero()) throw DomainError("cover datum requires b != 0");
    a_.poly().require_same_vars(b_.poly());
    int db = *b_.degree();
    if (db % 3 != 0 || db == 0) throw DomainError("deg b must be a positive multiple of 3");
    d_ = db / 3;
    if (!a_.is_zero() && *a_.degree() != 2 * d_)
        throw DomainError("deg a must be 2d = " + std::to_string(2 * d_) +
                          ", got " + std::to_string(*a_.degree()));
}

HPoly branch_poly(const HPoly& a, const HPoly& b) {
    QPoly full = a.poly().pow(3).scaled(Rat(4)) + b.poly() * b.poly();
    return HPoly(std::move(full));
}

BranchCurve branch_curve_of(const HPoly& a, const HPoly& b) {
    HPoly full = branch_poly(a, b);
    if (full.is_zero()) throw DegenerateBranchError();
    BranchCurve out;
    out.full = full;
    auto dec = squarefree_decompose(full.poly());
    out.content = dec.content;
    QPoly reduced = QPoly::constant(full.vars(), Rat(1));
    QPoly dbl = QPoly::constant(full.vars(), Rat(1));
    out.has_triple_component = false;
    for (const auto& [f, e] : dec.factors) {
        reduced = reduced * f;
        if (e >= 2) dbl = dbl * f;
        if (e >= 3) out.has_triple_component = true;
        out.factors.emplace_back(HPoly(f), e);
    }
    out.reduced = HPoly(canonical_scale(reduced));
    out.double_part = HPoly(canonical_scale(dbl));
    return out;
}

BranchCurve branch_curve(const CoverDatum& datum) { return branch_curve_of(datum.a(), datum.b()); }

bool is_cyclic(const CoverDatum& datum) { return datum.a().is_zero(); }

std::optional<CommonSquarePart> common_square_part(const CoverDatum& datum) {
    QPoly g = gcd(datum.a().poly(), datum.b().poly());
    if (g.degree() <= 0) return std::nullopt;
    CommonSquarePart out;
    out.c = HPoly(g);
    out.alpha = HPoly(divide_exact(datum.a().poly(), g));
    out.beta = HPoly(divide_exact(datum.b().poly(), g));
    // 4a^3 + b^2 = c^2 (4 c alpha^3 + beta^2): c^2 divides the branch.
    HPoly full = branch_poly(datum.a(), datum.b());
    if (!full.is_zero())
        internal_check(try_divide(full.poly(), g * g).has_value(),
                       "common square part must divide the branch");
    return out;
}

std::optional<DoubleBranchWitness> detect_all_double(const CoverDatum& datum) {
    if (datum.a().is_zero()) throw DomainError("detect_all_double requires a != 0");
    if (!is_coprime(datum.a().poly(), datum.b().poly()))
        throw DomainError("detect_all_double requires gcd(a, b) constant");
    HPoly full = branch_poly(datum.a(), datum.b());
    if (full.is_zero()) throw DegenerateBranchError();
    auto sq = perfect_power_up_to_scalar(full.poly(), 2);
    if (!sq) return std::nullopt;
    auto [lambda0, g0] = *sq;

    DoubleBranchWitness w;
    QuadExt sqrt_lambda; // the exact square root of lambda0 in the working field
    if (is_square(lambda0)) {
        Rat s = *exact_sqrt(lambda0);
        w.g = HPoly(g0.scaled(s));
        w.lambda = Rat(1);
        w.radicand = std::nullopt;
        sqrt_lambda = QuadExt(Rat(1));
    } else {
        w.g = HPoly(g0);
        w.lambda = lambda0;
        sqrt_lambda = QuadExt::sqrt_of(lambda0);
        w.radicand = sqrt_lambda.radicand();
    }

    // G = sqrt(lambda) * g satisfies G^2 = branch; P = (G-b)/2 and
    // Q = (-G-b)/2 then give P Q = -a^3 and P + Q = -b.
    XHPoly G = XHPoly::unchecked(w.g.poly().map_coeffs<QuadExt>(
        [&](const Rat& c) { return QuadExt(c) * sqrt_lambda; }));
    XHPoly bx = lift_to_ext(datum.b());
    XHPoly ax = lift_to_ext(datum.a());
    QuadExt half(Rat(1, 2));
    XHPoly P = (G - bx).scaled(half);
    XHPoly Q = ((-G) - bx).scaled(half);
    internal_check(!P.is_zero() && !Q.is_zero(), "all-double witness: P, Q must be nonzero");

    auto extract_cube = [&](const XHPoly& f, const char* which) -> XHPoly {
        auto pw = perfect_power_up_to_scalar(f.poly(), 3);
        if (!pw)
            throw ExtensionNeededError(std::string("square branch found, but ") + which +
                                       " is not a cube over the working field");
        auto cbrt = pw->first.cbrt();
        if (!cbrt)
            throw ExtensionNeededError(std::string("square branch found, but the cube scalar of ") +
                                       which + " has no cube root in the working field");
        return XHPoly::unchecked(pw->second.scaled(*cbrt));
    };
    XHPoly h = extract_cube(P, "P = (g-b)/2");
    XHPoly k = extract_cube(Q, "Q = (-g-b)/2");

    // (h k)^3 = -P Q = a^3, so h k = unit * a with unit^3 = 1; normalize k.
    XPoly prod = h.poly() * k.poly();
    XPoly minus_a = (-ax).poly();
    auto unit_poly = try_divide(minus_a, prod);
    internal_check(unit_poly.has_value() && unit_poly->is_constant(),
                   "all-double witness: hk and a differ by more than a scalar");
    QuadExt unit = unit_poly->constant_value();
    internal_check(unit * unit * unit == QuadExt(Rat(1)),
                   "all-double witness: unit is not a cube root of 1");
    k = XHPoly::unchecked(k.poly().scaled(unit));
    w.unit = unit;

    internal_check(h.poly() * k.poly() == minus_a, "all-double witness: a != -h k");
    internal_check(h.pow(3).poly() + k.pow(3).poly() == (-bx).poly(),
                   "all-double witness: b != -(h^3 + k^3)");
    internal_check(gcd(h.poly(), k.poly()).is_constant(), "all-double witness: h, k share a factor");
    w.h = std::move(h);
    w.k = std::move(k);
    return w;
}

CoverDatum build_from_pencil_pair(const HPoly& h, const HPoly& k) {
    if (h.is_zero() || k.is_zero()) throw DomainError("pencil pair requires nonzero h, k");
    if (*h.degree() != *k.degree()) throw DomainError("pencil pair requires equal degrees");
    if (!is_coprime(h.poly(), k.poly()))
        throw DomainError("pencil pair requires gcd(h, k) constant");
    HPoly a = HPoly(-(h.poly() * k.poly()));
    HPoly b = HPoly(-(h.pow(3).poly() + k.pow(3).poly()));
    CoverDatum datum(a, b);
    HPoly g = h.pow(3) - k.pow(3);
    internal_check(branch_poly(a, b) == g * g, "pencil pair: branch != (h^3-k^3)^2");
    return datum;
}

CubicSurfaceProjection build_cubic_surface_projection(const HPoly& b2, const HPoly& b3,
                                                      SignConvention convention) {
    if (!b2.is_zero() && *b2.degree() != 2) throw DomainError("b2 must be quadratic or zero");
    if (b3.is_zero() || *b3.degree() != 3) throw DomainError("b3 must be cubic");
    HPoly a = convention == SignConvention::plus ? b2 : -b2;
    CubicSurfaceProjection out{CoverDatum(a, b3), convention, HPoly(b2.vars()), std::nullopt};
    HPoly four_b2_cubed = b2.pow(3).scaled(Rat(4));
    HPoly b3_sq = b3 * b3;
    out.branch_report = convention == SignConvention::plus ? four_b2_cubed + b3_sq
                                                           : four_b2_cubed - b3_sq;
    if (convention == SignConvention::minus && !b2.is_zero()) {
        auto sq = perfect_power_up_to_scalar(b2.poly(), 2);
        if (sq && is_square(sq->first)) {
            HPoly s = HPoly(sq->second.scaled(*exact_sqrt(sq->first)));
            HPoly two_s3 = s.pow(3).scaled(Rat(2));
            HPoly c1 = b3 - two_s3, c2 = b3 + two_s3;
            internal_check(c1 * c2 == -out.branch_report,
                           "cubic surface split: (b3-2s^3)(b3+2s^3) != b3^2-4b2^3");
            out.cubic_split = std::make_pair(c1, c2);
        }
    }
    return out;
}

CayleyProjection build_cayley_projection(const HPoly& c1, const HPoly& d1) {
    if (c1.is_zero() || *c1.degree() != 1) throw DomainError("c1 must be a nonzero linear form");
    if (!d1.is_zero() && *d1.degree() != 1) throw DomainError("d1 must be linear or zero");
    const VarSet& vs = c1.vars();
    HPoly x = HPoly(QPoly::variable(vs, 0));
    CayleyProjection out;
    out.a = x * c1;            // b2
    out.b = x * x * d1;        // b3
    out.line = x;
    out.residual_cubic = c1.pow(3).scaled(Rat(4)) + x * d1 * d1;
    out.degenerate = d1.is_zero();
    internal_check(branch_poly(out.a, out.b) == x.pow(3) * out.residual_cubic,
                   "cayley projection: 4 b2^3 + b3^2 != x^3 (4 c1^3 + x d1^2)");
    if (!out.b.is_zero()) out.datum = CoverDatum(out.a, out.b);
    return out;
}

std::optional<PencilOfLines> lines_in_pencil_check(const HPoly& B) {
    if (B.is_zero()) throw DomainError("lines_in_pencil_check on zero");
    if (B.vars().size() != 3) throw DomainError("lines_in_pencil_check needs three variables");
    auto dec = squarefree_decompose(B.poly());
    QPoly reduced = QPoly::constant(B.vars(), Rat(1));
    for (const auto& [f, e] : dec.factors) reduced = reduced * f;
    int n = reduced.degree();
    if (n <= 0) return std::nullopt;

    // All order (n-1) partials of the reduced curve are linear forms; a point
    // of multiplicity n is their common zero.
    std::vector<QPoly> linear_forms;
    std::vector<QPoly> frontier{reduced};
    for (int round = 0; round < n - 1; ++round) {
        std::vector<QPoly> next;
        for (const auto& f : frontier)
            for (int v = 0; v < 3; ++v) next.push_back(f.diff(v));
        frontier = std::move(next);
    }
    for (auto& f : frontier)
        if (!f.is_zero()) linear_forms.push_back(f);
    internal_check(!linear_forms.empty(), "pencil check: all high partials vanish");

    // Nullspace of the coefficient matrix (rows = linear forms).
    std::vector<std::array<Rat, 3>> rows;
    for (const auto& f : linear_forms) {
        std::array<Rat, 3> row{Rat(0), Rat(0), Rat(0)};
        for (const auto& [e, c] : f.terms())
            for (int v = 0; v < 3; ++v)
                if (e[static_cast<std::size_t>(v)] == 1) row[static_cast<std::size_t>(v)] = c;
        rows.push_back(row);
    }
    // Gaussian elimination.
    std::size_t rank = 0;
    std::array<int, 3> pivot_col{-1, -1, -1};
    for (int col = 0; col < 3 && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[rank]);
        Rat inv = Rat(1) / rows[rank][static_cast<std::size_t>(col)];
        for (auto& v : rows[rank]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            Rat c = rows[r][static_cast<std::size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < 3; ++j)
                rows[r][static_cast<std::size_t>(j)] -= c * rows[rank][static_cast<std::size_t>(j)];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::array<Rat, 3> center{Rat(0), Rat(0), Rat(0)};
    if (rank == 3) return std::nullopt;
    if (rank == 2) {
        int free_col = 3 - pivot_col[0] - pivot_col[1];
        center[static_cast<std::size_t>(free_col)] = 1;
        for (std::size_t r = 0; r < 2; ++r)
            center[static_cast<std::size_t>(pivot_col[r])] =
                -rows[r][static_cast<std::size_t>(free_col)];
    } else if (rank == 1) {
        // Reduced curve is a single line; pick any point on it.
        int p = pivot_col[0];
        int other = (p + 1) % 3;
        center[static_cast<std::size_t>(other)] = 1;
        center[static_cast<std::size_t>(p)] = -rows[0][static_cast<std::size_t>(other)];
    } else {
        return std::nullopt;
    }
    PlanePoint pt(center[0], center[1], center[2]);

    // Move the center to (0:0:1): columns of m are the two standard basis
    // vectors away from pt's chart, then pt itself (pt[chart] = 1 keeps m
    // invertible).  The reduced curve must become a binary form in the
    // first two new coordinates.
    int ch = pt.chart();
    std::array<int, 2> others{};
    for (int i = 0, j = 0; i < 3; ++i)
        if (i != ch) others[static_cast<std::size_t>(j++)] = i;
    Mat3 m{};
    for (int r = 0; r < 3; ++r) {
        m[static_cast<std::size_t>(r)][0] = (r == others[0]) ? 1 : 0;
        m[static_cast<std::size_t>(r)][1] = (r == others[1]) ? 1 : 0;
        m[static_cast<std::size_t>(r)][2] = pt[r];
    }
    HPoly moved = HPoly(reduced).substitute(m);
    if (moved.poly().degree_in(2) > 0) {
        // Multiplicity at the candidate is lower than the degree after all.
        return std::nullopt;
    }
    auto bf = binary_form_factor(moved);
    PencilOfLines out{pt, {}};
    Mat3 mi = inverse3(m);
    for (const auto& [fac, e] : bf.factors) {
        (void)e;
        // An irreducible factor of degree e through the center stands for e
        // conjugate lines of the pencil.
        HPoly back = fac.substitute(mi);
        // Multiplicity of this line inside B: the exponent of the squarefree
        // factor of B it divides.
        int mult = 0;
        QPoly bl = canonical_scale(back.poly());
        for (const auto& [f, ee] : dec.factors)
            if (try_divide(f, bl).has_value()) { mult = ee; break; }
        internal_check(mult > 0, "pencil of lines: line factor not found in B");
        out.lines.emplace_back(HPoly(bl), mult);
    }
    return out;
}

CoverDatum depress_cubic(const HPoly& e2, const HPoly& e1, const HPoly& e0) {
    if (e2.is_zero() && e1.is_zero() && e0.is_zero())
        throw DomainError("depress_cubic: all coefficients vanish");
    int d = -1;
    if (!e2.is_zero()) d = *e2.degree();
    else if (!e1.is_zero()) {
        if (*e1.degree() % 2 != 0) throw DomainError("depress_cubic: deg e1 must be 2d");
        d = *e1.degree() / 2;
    } else {
        if (*e0.degree() % 3 != 0) throw DomainError("depress_cubic: deg e0 must be 3d");
        d = *e0.degree() / 3;
    }
    auto check = [&](const HPoly& p, int want, const char* name) {
        if (!p.is_zero() && *p.degree() != want)
            throw DomainError(std::string("depress_cubic: deg ") + name + " must be " +
                              std::to_string(want));
    };
    check(e2, d, "e2");
    check(e1, 2 * d, "e1");
    check(e0, 3 * d, "e0");
    QPoly a = e1.poly().scaled(Rat(1, 3)) - (e2.poly() * e2.poly()).scaled(Rat(1, 9));
    QPoly b = e2.poly().pow(3).scaled(Rat(2, 27)) - (e1.poly() * e2.poly()).scaled(Rat(1, 3)) +
              e0.poly();
    return CoverDatum(HPoly(a), HPoly(b));
}

} // namespace triplane::cover
