#include "triplane/singular.hpp"

#include <algorithm>
#include <numeric>

#include "triplane/mat3.hpp"
#include "triplane/resultant.hpp"

namespace triplane::sing {

std::string kind_name(SingKind kind, std::optional<int> k) {
    switch (kind) {
        case SingKind::node: return "node (a_1)";
        case SingKind::cusp: return "cusp (a_2)";
        case SingKind::tacnode: return "tacnode (a_3)";
        case SingKind::a_k: return "a_" + std::to_string(k.value_or(0));
        case SingKind::ordinary_multiple: return "ordinary multiple point";
        case SingKind::unclassified: return "unclassified";
    }
    return "unclassified";
}

namespace {

// Local equation of f at p in the canonical affine chart, translated so that
// p sits at the origin.  On return u_var < v_var are the two chart variables.
XPoly local_equation(const XHPoly& f, const XPlanePoint& p, int& u_var, int& v_var) {
    const VarSet& vs = f.vars();
    if (vs.size() != 3) throw DomainError("local analysis requires three variables");
    int ch = p.chart();
    int uv[2], j = 0;
    for (int i = 0; i < 3; ++i)
        if (i != ch) uv[j++] = i;
    u_var = uv[0];
    v_var = uv[1];
    std::vector<XPoly> images;
    for (int i = 0; i < 3; ++i) {
        if (i == ch) {
            images.push_back(XPoly::constant(vs, QuadExt(Rat(1))));
        } else {
            images.push_back(XPoly::variable(vs, i) + XPoly::constant(vs, p[i]));
        }
    }
    return f.poly().compose(images, vs);
}

XPoly restrict_to_zero(const XPoly& f, int var) {
    const VarSet& vs = f.vars();
    std::vector<XPoly> images;
    for (int i = 0; i < vs.size(); ++i)
        images.push_back(i == var ? XPoly::zero(vs) : XPoly::variable(vs, i));
    return f.compose(images, vs);
}

// Is the polynomial a monomial c * var^k (or a nonzero constant)?
bool is_monomial_in(const XPoly& f, int var) {
    if (f.is_zero()) return false;
    if (f.terms().size() != 1) return false;
    const Exp& e = f.terms().begin()->first;
    for (int i = 0; i < 3; ++i)
        if (i != var && e[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

const std::array<std::array<int, 4>, 8> kFrameSeq = {{
    // (u,v) |-> (a u + b v, c u + d v), row-major a b c d; all unimodular.
    {{1, 0, 0, 1}},
    {{0, 1, 1, 0}},
    {{0, 1, 1, 1}},
    {{0, 1, 1, -1}},
    {{0, 1, 1, 2}},
    {{1, 2, 0, 1}},
    {{0, 1, 1, -2}},
    {{0, 1, 1, 3}},
}};

XPoly shear2(const XPoly& f, int u_var, int v_var, const std::array<int, 4>& m) {
    const VarSet& vs = f.vars();
    std::vector<XPoly> images;
    for (int i = 0; i < vs.size(); ++i) images.push_back(XPoly::variable(vs, i));
    images[static_cast<std::size_t>(u_var)] =
        XPoly::variable(vs, u_var).scaled(QuadExt(Rat(m[0]))) +
        XPoly::variable(vs, v_var).scaled(QuadExt(Rat(m[1])));
    images[static_cast<std::size_t>(v_var)] =
        XPoly::variable(vs, u_var).scaled(QuadExt(Rat(m[2]))) +
        XPoly::variable(vs, v_var).scaled(QuadExt(Rat(m[3])));
    return f.compose(images, vs);
}

} // namespace

int multiplicity_at(const XHPoly& f, const XPlanePoint& p) {
    if (f.is_zero()) throw DomainError("multiplicity of the zero polynomial");
    int u, v;
    return std::max(local_equation(f, p, u, v).order(), 0);
}

int multiplicity_at(const HPoly& f, const PlanePoint& p) {
    return multiplicity_at(lift_to_ext(f), lift_to_ext(p));
}

SingularityRecord classify_double_point(const XHPoly& f, const XPlanePoint& p) {
    int u, v;
    XPoly g = local_equation(f, p, u, v);
    SingularityRecord rec{p, g.order(), SingKind::unclassified, std::nullopt};
    if (rec.multiplicity != 2) throw DomainError("classify_double_point: multiplicity is not 2");

    for (const auto& frame : kFrameSeq) {
        XPoly h = shear2(g, u, v, frame);
        // Guard 1: v-general of order exactly 2 on the axis u = 0.
        XPoly h0 = restrict_to_zero(h, u);
        if (h0.is_zero() || h0.low_degree_in(v) != 2) continue;
        // Guard 2: no degree drop of the v-leading coefficient at u = 0.
        if (h0.degree_in(v) != h.degree_in(v)) continue;
        // Guard 3: on u = 0, the only common zero of (h, dh/dv) is v = 0.
        XPoly hv = h.diff(v);
        XPoly hv0 = restrict_to_zero(hv, u);
        XPoly common = gcd(h0, hv0);
        if (!is_monomial_in(common, v)) continue;

        XPoly disc = resultant(h, hv, v);
        if (disc.is_zero()) break; // non-reduced germ; report unclassified
        int k = disc.low_degree_in(u) - 1;
        internal_check(k >= 1, "a_k classifier: discriminant order below 2 at a double point");
        // Tangent-cone cross-check: k = 1 iff the degree-2 part splits.
        XPoly cone(g.vars());
        for (const auto& [e, c] : g.terms())
            if (exp_total(e) == 2) cone.add_term(e, c);
        QuadExt qa = cone.coeff_of(u, 2).constant_value();
        QuadExt qb(Rat(0));
        for (const auto& [e, c] : cone.terms())
            if (e[static_cast<std::size_t>(u)] == 1) qb = c;
        QuadExt qc = cone.coeff_of(v, 2).coeff_of(u, 0).constant_value();
        QuadExt cone_disc = qb * qb - QuadExt(Rat(4)) * qa * qc;
        internal_check((k == 1) == !cone_disc.is_zero(),
                       "a_k classifier: tangent cone disagrees with discriminant order");
        rec.k = k;
        rec.kind = k == 1 ? SingKind::node : k == 2 ? SingKind::cusp : k == 3 ? SingKind::tacnode : SingKind::a_k;
        return rec;
    }
    return rec; // unclassified
}

SingularityRecord classify_double_point(const HPoly& f, const PlanePoint& p) {
    return classify_double_point(lift_to_ext(f), lift_to_ext(p));
}

namespace {

int order_in(const XPoly& f, int var) {
    return f.is_zero() ? -1 : f.low_degree_in(var);
}

} // namespace

int intersection_multiplicity(const XHPoly& F, const XHPoly& G, const XPlanePoint& p) {
    if (F.is_zero() || G.is_zero()) throw DomainError("intersection with a zero curve");
    XPoly shared = gcd(F.poly(), G.poly());
    if (!shared.is_constant()) {
        XHPoly sh = XHPoly::unchecked(shared);
        if (multiplicity_at(sh, p) > 0)
            throw DomainError("curves share a component through the point");
    }
    int u, v;
    XPoly f = local_equation(F, p, u, v);
    XPoly g = local_equation(G, p, u, v);
    XPoly vpoly = XPoly::variable(f.vars(), v);
    auto value_at_origin = [&](const XPoly& h) {
        return restrict_to_zero(restrict_to_zero(h, u), v);
    };
    int total = 0;
    for (int guard = 0; guard < 100000; ++guard) {
        if (!value_at_origin(f).is_zero() || !value_at_origin(g).is_zero()) return total;
        XPoly f0 = restrict_to_zero(f, v); // f(u, 0)
        XPoly g0 = restrict_to_zero(g, v);
        if (f0.is_zero() && g0.is_zero())
            throw DomainError("curves share the local component v = 0 through the point");
        if (f0.is_zero()) { std::swap(f, g); std::swap(f0, g0); }
        if (g0.is_zero()) {
            g = divide_exact(g, vpoly);
            total += order_in(f0, u);
            continue;
        }
        int df = f0.degree_in(u), dg = g0.degree_in(u);
        if (df > dg) { std::swap(f, g); std::swap(f0, g0); std::swap(df, dg); }
        QuadExt c = g0.coeff_of(u, dg).constant_value() / f0.coeff_of(u, df).constant_value();
        XPoly shift = XPoly::monomial(f.vars(), [&] { Exp e{0, 0, 0}; e[static_cast<std::size_t>(u)] = dg - df; return e; }(), c);
        g = g - shift * f;
    }
    throw InternalCheckError("intersection multiplicity reduction did not terminate");
}

int intersection_multiplicity(const HPoly& f, const HPoly& g, const PlanePoint& p) {
    return intersection_multiplicity(lift_to_ext(f), lift_to_ext(g), lift_to_ext(p));
}

namespace {

const std::array<Mat3, 8> census_frames() {
    auto mk = [](std::initializer_list<int> v) {
        Mat3 m{};
        auto it = v.begin();
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Rat(*it++);
        return m;
    };
    return {mk({1, 0, 0, 0, 1, 0, 0, 0, 1}), mk({1, 0, 1, 0, 1, 0, 0, 0, 1}),
            mk({1, 0, 0, 0, 1, 1, 0, 0, 1}), mk({1, 1, 0, 0, 1, 0, 0, 0, 1}),
            mk({1, 0, 0, 0, 1, 0, 1, 0, 1}), mk({0, 0, 1, 0, 1, 0, 1, 0, 0}),
            mk({1, 0, 2, 0, 1, 1, 0, 0, 1}), mk({1, 2, 3, 0, 1, 2, 0, 0, 1})};
}

QPoly dehomog_chart2(const QPoly& f) {
    const VarSet& vs = f.vars();
    std::vector<QPoly> images{QPoly::variable(vs, 0), QPoly::variable(vs, 1),
                              QPoly::constant(vs, Rat(1))};
    return f.compose(images, vs);
}

QPoly specialize(const QPoly& f, int var, const Rat& value) {
    const VarSet& vs = f.vars();
    std::vector<QPoly> images;
    for (int i = 0; i < vs.size(); ++i)
        images.push_back(i == var ? QPoly::constant(vs, value) : QPoly::variable(vs, i));
    return f.compose(images, vs);
}

XPoly specialize_ext(const QPoly& f, int var, const QuadExt& value) {
    XPoly lifted = lift_to_ext(f);
    const VarSet& vs = f.vars();
    std::vector<XPoly> images;
    for (int i = 0; i < vs.size(); ++i)
        images.push_back(i == var ? XPoly::constant(vs, value) : XPoly::variable(vs, i));
    return lifted.compose(images, vs);
}

bool eval_zero_at(const std::vector<HPoly>& polys, const XPlanePoint& pt) {
    for (const auto& f : polys) {
        std::vector<QuadExt> coords{pt[0], pt[1], pt[2]};
        if (!lift_to_ext(f).poly().eval(coords).is_zero()) return false;
    }
    return true;
}

// Roots in v of a univariate-over-QuadExt polynomial, degree 1 only (higher
// degrees over the extension would need nesting).
std::optional<QuadExt> linear_root_ext(const XPoly& f, int var) {
    if (f.is_zero() || f.degree_in(var) != 1) return std::nullopt;
    QuadExt c1 = f.coeff_of(var, 1).constant_value();
    QuadExt c0 = f.coeff_of(var, 0).constant_value();
    return -c0 / c1;
}

} // namespace

SystemSolution solve_common_zeros(const std::vector<HPoly>& polys_in,
                                  bool allow_quadratic_extension) {
    std::vector<HPoly> polys;
    for (const auto& p : polys_in)
        if (!p.is_zero()) polys.push_back(p);
    if (polys.size() < 2)
        throw DomainError("solve_common_zeros needs at least two nonzero forms");
    const VarSet& vs = polys[0].vars();

    for (const Mat3& frame : census_frames()) {
        Mat3 inv = inverse3(frame);
        std::vector<QPoly> affine;
        std::vector<QPoly> at_infinity;
        std::vector<HPoly> moved;
        for (const auto& f : polys) {
            HPoly g = f.substitute(frame);
            moved.push_back(g);
            QPoly aff = dehomog_chart2(g.poly());
            if (!aff.is_zero()) affine.push_back(aff);
            QPoly inf = specialize(g.poly(), 2, Rat(0));
            at_infinity.push_back(inf);
        }
        // Need a coprime affine pair to eliminate with.
        int pa = -1, pb = -1;
        for (std::size_t i = 0; i < affine.size() && pa < 0; ++i)
            for (std::size_t j = i + 1; j < affine.size(); ++j)
                if (!affine[i].is_constant() && !affine[j].is_constant() &&
                    is_coprime(affine[i], affine[j])) {
                    pa = static_cast<int>(i);
                    pb = static_cast<int>(j);
                    break;
                }
        // The line at infinity must not lie in the common zero set.
        bool infinity_degenerate = true;
        for (const auto& f : at_infinity)
            if (!f.is_zero()) infinity_degenerate = false;
        if (pa < 0 || infinity_degenerate) continue;

        const QPoly& A = affine[static_cast<std::size_t>(pa)];
        const QPoly& B = affine[static_cast<std::size_t>(pb)];
        // Eliminate v (variable 1): a univariate in u remains.
        QPoly elim = resultant(A, B, 1);
        internal_check(!elim.is_zero(), "coprime pair produced a zero resultant");
        // Sharpen the aggregate with every other coprime eliminant available.
        for (std::size_t i = 0; i < affine.size(); ++i) {
            if (static_cast<int>(i) == pa || static_cast<int>(i) == pb) continue;
            if (affine[i].is_constant()) { elim = QPoly::constant(vs, Rat(1)); continue; }
            if (is_coprime(affine[i], A)) elim = gcd(elim, resultant(A, affine[i], 1));
        }

        SystemSolution out;
        auto push_point = [&](const XPlanePoint& pt) {
            for (const auto& q : out.points)
                if (q == pt) return;
            if (!eval_zero_at(polys, pt)) return;
            out.points.push_back(pt);
            if (!is_rational(pt)) out.extended = true;
        };

        QPoly remaining = elim.is_constant() ? elim : canonical_scale([&] {
            auto dec = squarefree_decompose(elim);
            QPoly r = QPoly::constant(vs, Rat(1));
            for (const auto& [f, e] : dec.factors) r = r * f;
            return r;
        }());

        if (!remaining.is_constant()) {
            for (const auto& root : rational_roots(remaining, 0)) {
                const Rat& u0 = root.value;
                QPoly av = specialize(A, 0, u0), bv = specialize(B, 0, u0);
                QPoly gv = gcd(av, bv);
                if (gv.is_constant()) {
                    // extraneous eliminant root; discount it from the aggregate
                } else {
                    for (const auto& vr : rational_roots(gv, 1)) {
                        std::array<Rat, 3> in_frame{u0, vr.value, Rat(1)};
                        auto orig = apply3(frame, in_frame);
                        push_point(XPlanePoint(QuadExt(orig[0]), QuadExt(orig[1]), QuadExt(orig[2])));
                    }
                    if (allow_quadratic_extension && gv.degree_in(1) == 2) {
                        Rat qa = gv.coeff_of(1, 2).constant_value();
                        Rat qb = gv.coeff_of(1, 1).constant_value();
                        Rat qc = gv.coeff_of(1, 0).constant_value();
                        if (qb * qb - 4 * qa * qc != 0 && !is_square(qb * qb - 4 * qa * qc)) {
                            auto [r1, r2] = quadratic_roots_ext(qa, qb, qc);
                            for (const QuadExt& vr : {r1, r2}) {
                                QuadExt uu(u0);
                                QuadExt xx = QuadExt(frame[0][0]) * uu + QuadExt(frame[0][1]) * vr + QuadExt(frame[0][2]);
                                QuadExt yy = QuadExt(frame[1][0]) * uu + QuadExt(frame[1][1]) * vr + QuadExt(frame[1][2]);
                                QuadExt tt = QuadExt(frame[2][0]) * uu + QuadExt(frame[2][1]) * vr + QuadExt(frame[2][2]);
                                try {
                                    push_point(XPlanePoint(xx, yy, tt));
                                } catch (const Error&) {
                                }
                            }
                        }
                    }
                }
                QPoly lin = QPoly::variable(vs, 0) - QPoly::constant(vs, u0);
                while (auto q = try_divide(remaining, lin)) remaining = *q;
            }
            // Quadratic u-values over one extension.
            if (allow_quadratic_extension && !remaining.is_constant() &&
                remaining.degree_in(0) <= 12) {
                auto fac = factor_univariate(remaining, 0);
                for (const auto& [irr, e] : fac.factors) {
                    (void)e;
                    if (irr.degree_in(0) != 2) continue;
                    Rat qa = irr.coeff_of(0, 2).constant_value();
                    Rat qb = irr.coeff_of(0, 1).constant_value();
                    Rat qc = irr.coeff_of(0, 0).constant_value();
                    auto [u1, u2] = quadratic_roots_ext(qa, qb, qc);
                    bool located_both = true;
                    for (const QuadExt& u0 : {u1, u2}) {
                        XPoly av = specialize_ext(A, 0, u0), bv = specialize_ext(B, 0, u0);
                        XPoly gv = gcd(av, bv);
                        auto vroot = linear_root_ext(gv, 1);
                        if (!vroot) { located_both = false; continue; }
                        QuadExt xx = QuadExt(frame[0][0]) * u0 + QuadExt(frame[0][1]) * *vroot + QuadExt(frame[0][2]);
                        QuadExt yy = QuadExt(frame[1][0]) * u0 + QuadExt(frame[1][1]) * *vroot + QuadExt(frame[1][2]);
                        QuadExt tt = QuadExt(frame[2][0]) * u0 + QuadExt(frame[2][1]) * *vroot + QuadExt(frame[2][2]);
                        try {
                            push_point(XPlanePoint(xx, yy, tt));
                        } catch (const Error&) {
                            located_both = false;
                        }
                    }
                    if (located_both) remaining = divide_exact(remaining, irr);
                }
            }
            out.aggregate_degree += std::max(remaining.degree(), 0);
        }

        // Points on the (transformed) line at infinity: common zeros of the
        // binary restrictions.
        QPoly ginf(vs);
        for (const auto& f : at_infinity) {
            if (f.is_zero()) continue;
            ginf = ginf.is_zero() ? f : gcd(ginf, f);
            if (ginf.is_constant()) break;
        }
        if (!ginf.is_constant() && !ginf.is_zero()) {
            HPoly binform = HPoly::unchecked(canonical_scale(ginf));
            if (*binform.degree() <= 12) {
                auto bf = binary_form_factor(binform);
                int leftover = 0;
                for (const auto& [fac, e] : bf.factors) {
                    (void)e;
                    if (*fac.degree() != 1) { leftover += *fac.degree(); continue; }
                    Rat cx = fac.poly().coeff_of(0, 1).constant_value();
                    Rat cy = fac.poly().coeff_of(1, 1).constant_value();
                    std::array<Rat, 3> in_frame{-cy, cx, Rat(0)};
                    auto orig = apply3(frame, in_frame);
                    push_point(XPlanePoint(QuadExt(orig[0]), QuadExt(orig[1]), QuadExt(orig[2])));
                }
                out.aggregate_degree += leftover;
            } else {
                out.aggregate_degree += *binform.degree();
            }
        }
        return out;
    }
    throw DomainError("no usable elimination frame found (system may be positive-dimensional)");
}

SingularCensus rational_singular_locus(const HPoly& f, bool allow_quadratic_extension) {
    if (f.is_zero()) throw DomainError("singular locus of the zero polynomial");
    SingularCensus census;
    auto dec = squarefree_decompose(f.poly());
    int exp_gcd = 0;
    bool has_multiple = false;
    for (const auto& [fac, e] : dec.factors) {
        exp_gcd = exp_gcd == 0 ? e : std::gcd(exp_gcd, e);
        if (e >= 2) has_multiple = true;
    }
    if (exp_gcd >= 2)
        throw DomainError("perfect power: the curve is singular along a whole component");
    QPoly reduced = QPoly::constant(f.vars(), Rat(1));
    for (const auto& [fac, e] : dec.factors) reduced = reduced * fac;
    census.reduced_input = has_multiple;
    HPoly R = HPoly(canonical_scale(reduced));
    if (*R.degree() <= 1) {
        census.cusp_count_certified = true;
        return census;
    }

    std::vector<HPoly> partials{R.diff(0), R.diff(1), R.diff(2)};
    auto sol = solve_common_zeros(partials, allow_quadratic_extension);
    census.aggregate_degree = sol.aggregate_degree;
    census.extended = sol.extended;
    XHPoly Rx = lift_to_ext(R);
    for (const auto& p : sol.points) {
        int mult = multiplicity_at(Rx, p);
        if (mult < 2) continue; // resultant artifact that survived partial checks
        if (mult == 2) {
            census.records.push_back(classify_double_point(Rx, p));
        } else {
            // Ordinary m-fold iff the degree-m tangent cone is squarefree.
            int u, v;
            XPoly local = local_equation(Rx, p, u, v);
            XPoly cone(local.vars());
            for (const auto& [e, c] : local.terms())
                if (exp_total(e) == mult) cone.add_term(e, c);
            bool ordinary = is_coprime(cone, cone.diff(u)) && is_coprime(cone, cone.diff(v));
            SingularityRecord rec{p, mult,
                                  ordinary ? SingKind::ordinary_multiple : SingKind::unclassified,
                                  std::nullopt};
            census.records.push_back(rec);
        }
    }
    bool any_unclassified = false;
    for (const auto& r : census.records) {
        if (r.kind == SingKind::cusp) ++census.cusp_count;
        if (r.kind == SingKind::unclassified) any_unclassified = true;
    }
    census.cusp_count_certified = (census.aggregate_degree == 0) && !any_unclassified;
    return census;
}

CuspCensus cusp_census_via_ab(const cover::CoverDatum& datum) {
    const HPoly& a = datum.a();
    const HPoly& b = datum.b();
    if (a.is_zero() || !is_coprime(a.poly(), b.poly()))
        throw DomainError("cusp census requires a, b without common component");
    CuspCensus out;
    out.expected = *a.degree() * *b.degree();
    auto sol = solve_common_zeros({a, b}, true);
    HPoly branch = cover::branch_poly(a, b);
    XHPoly branch_x = lift_to_ext(branch);
    std::array<XHPoly, 3> ja{lift_to_ext(a.diff(0)), lift_to_ext(a.diff(1)), lift_to_ext(a.diff(2))};
    std::array<XHPoly, 3> jb{lift_to_ext(b.diff(0)), lift_to_ext(b.diff(1)), lift_to_ext(b.diff(2))};
    for (const auto& p : sol.points) {
        std::vector<QuadExt> coords{p[0], p[1], p[2]};
        std::array<QuadExt, 3> ra, rb;
        for (int i = 0; i < 3; ++i) {
            ra[static_cast<std::size_t>(i)] = ja[static_cast<std::size_t>(i)].is_zero()
                                                  ? QuadExt(Rat(0))
                                                  : ja[static_cast<std::size_t>(i)].poly().eval(coords);
            rb[static_cast<std::size_t>(i)] = jb[static_cast<std::size_t>(i)].is_zero()
                                                  ? QuadExt(Rat(0))
                                                  : jb[static_cast<std::size_t>(i)].poly().eval(coords);
        }
        // Rank 2 iff some 2x2 minor of the Jacobian is nonzero.
        bool rank2 = false;
        for (int i = 0; i < 3 && !rank2; ++i)
            for (int j = i + 1; j < 3 && !rank2; ++j)
                if (!(ra[static_cast<std::size_t>(i)] * rb[static_cast<std::size_t>(j)] -
                      ra[static_cast<std::size_t>(j)] * rb[static_cast<std::size_t>(i)])
                         .is_zero())
                    rank2 = true;
        if (rank2) {
            out.transversal_points.push_back(p);
            if (is_rational(p)) ++out.certified_transversal;
        } else {
            int mult = multiplicity_at(branch_x, p);
            if (mult == 2) {
                out.corrections.push_back(classify_double_point(branch_x, p));
            } else {
                out.corrections.push_back(
                    SingularityRecord{p, mult, SingKind::unclassified, std::nullopt});
            }
        }
    }
    return out;
}

} // namespace triplane::sing
