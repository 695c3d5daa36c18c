#include "triplane/structure.hpp"

namespace triplane::algebra {

MonicCubic::MonicCubic(QPoly e0_, QPoly e1_, QPoly e2_)
    : e0(std::move(e0_)), e1(std::move(e1_)), e2(std::move(e2_)) {
    e0.require_same_vars(e1);
    e0.require_same_vars(e2);
    if (e0.is_zero() && e1.is_zero() && e2.is_zero())
        throw DomainError("monic cubic: e0, e1, e2 must not all vanish");
}

StructureConstants::StructureConstants(QPoly a_, QPoly b_, QPoly c_, QPoly d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    a.require_same_vars(b);
    a.require_same_vars(c);
    a.require_same_vars(d);
}

StructureConstants from_monic_cubic(const MonicCubic& mc) {
    const VarSet& vs = mc.e0.vars();
    QPoly a = mc.e2.scaled(Rat(2, 3));
    QPoly b = QPoly::constant(vs, Rat(1));
    QPoly c = mc.e1 * mc.e2 - mc.e0;
    QPoly d = (mc.e2 * mc.e2 + mc.e1).scaled(Rat(1, 3));
    return StructureConstants(std::move(a), std::move(b), std::move(c), std::move(d));
}

DerivedABC derive_ABC(const StructureConstants& sc) {
    DerivedABC out;
    out.A = sc.a * sc.a - sc.b * sc.d;
    out.B = sc.a * sc.d - sc.b * sc.c;
    out.C = sc.d * sc.d - sc.a * sc.c;
    out.D = out.B * out.B - (out.A * out.C).scaled(Rat(4));
    return out;
}

RelationResiduals verify_relations(const StructureConstants& sc, const DerivedABC& abc) {
    RelationResiduals r;
    r.res_A = abc.A - (sc.a * sc.a - sc.b * sc.d);
    r.res_B = abc.B - (sc.a * sc.d - sc.b * sc.c);
    r.res_C = abc.C - (sc.d * sc.d - sc.a * sc.c);
    return r;
}

std::pair<QPoly, QPoly> cubic_surface_from_constants(const StructureConstants& sc) {
    if (!(sc.b == QPoly::constant(sc.vars(), Rat(1))))
        throw DomainError("cubic_surface_from_constants requires b = 1 (scale first)");
    QPoly b2 = sc.a * sc.a - sc.d;
    QPoly b3 = (sc.a * sc.d).scaled(Rat(3)) - sc.a.pow(3).scaled(Rat(2)) - sc.c;
    return {b2, b3};
}

namespace {

// Intersection of two independent linear forms on the projective plane.
std::optional<PlanePoint> line_intersection(const QPoly& l1, const QPoly& l2) {
    if (l1.vars().size() != 3) return std::nullopt;
    std::array<std::array<Rat, 3>, 2> m{};
    for (int r = 0; r < 2; ++r) {
        const QPoly& l = r == 0 ? l1 : l2;
        for (const auto& [e, c] : l.terms())
            for (int v = 0; v < 3; ++v)
                if (e[static_cast<std::size_t>(v)] == 1) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(v)] = c;
    }
    // Cross product of the two coefficient rows.
    Rat x = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    Rat y = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    Rat t = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (x == 0 && y == 0 && t == 0) return std::nullopt; // parallel / dependent
    return PlanePoint(x, y, t);
}

bool is_linear_form(const QPoly& p) { return !p.is_zero() && p.degree() == 1 && p.is_homogeneous(); }

} // namespace

FlexTangentReport flex_tangent_case(const StructureConstants& sc) {
    if (sc.a.is_zero()) throw DomainError("flex_tangent_case: a vanishes identically");
    for (const QPoly* p : {&sc.a, &sc.b, &sc.c, &sc.d})
        if (!p->is_zero() && p->degree() != 1)
            throw DomainError("flex_tangent_case expects linear structure constants");
    FlexTangentReport out;
    DerivedABC abc = derive_ABC(sc);
    out.discriminant = abc.D;
    out.flex_configuration = (sc.a == sc.b);
    if (!out.flex_configuration) {
        out.note = "generic three-cusp quartic expected";
        return out;
    }
    // D = a (4a^2 c + a c^2 - 6acd - 3ad^2 + 4d^3).
    QPoly residual = (sc.a * sc.a * sc.c).scaled(Rat(4)) + sc.a * sc.c * sc.c -
                     (sc.a * sc.c * sc.d).scaled(Rat(6)) - (sc.a * sc.d * sc.d).scaled(Rat(3)) +
                     sc.d.pow(3).scaled(Rat(4));
    internal_check(sc.a * residual == abc.D, "flex case: D != a * residual cubic");
    out.residual_cubic = residual;
    if (is_linear_form(sc.a) && is_linear_form(sc.d)) {
        out.flex_point = line_intersection(sc.a, sc.d);
        QPoly ad = sc.a - sc.d, dc = sc.d - sc.c;
        if (!ad.is_zero() && !dc.is_zero() && is_linear_form(ad) && is_linear_form(dc))
            out.cusp_point = line_intersection(ad, dc);
    } else {
        out.note = "constants case: the flex tangent is the line at infinity";
    }
    return out;
}

MonicCubic net_to_monic_cubic(const Rat& p, const Rat& q, const Rat& r, const Rat& s,
                              const VarSet& vw) {
    if (q == 0) throw DomainError("net_to_monic_cubic requires q != 0");
    if (vw.size() < 2) throw DomainError("net_to_monic_cubic needs two affine variables");
    Rat pq = p / q, rq = r / q;
    QPoly v = QPoly::variable(vw, 0), w = QPoly::variable(vw, 1);
    QPoly e0 = v.scaled(rq) - w.scaled(pq);
    QPoly e1 = QPoly::constant(vw, pq * s - rq) - w;
    QPoly e2 = QPoly::constant(vw, s + pq);
    return MonicCubic(std::move(e0), std::move(e1), std::move(e2));
}

HPoly homogenize_at_infinity(const QPoly& f, const std::string& new_var) {
    const VarSet& vs = f.vars();
    if (vs.size() >= 3) {
        // Already three variables: require that the polynomial is affine in
        // the first two and homogenize at the third.
        if (f.depends_on(2)) throw DomainError("homogenize: third variable already occurs");
        return homogenize(f, 2);
    }
    std::vector<std::string> names;
    for (int i = 0; i < vs.size(); ++i) names.push_back(vs.name(i));
    std::string nv = new_var;
    while (vs.index_of(nv) >= 0) nv += "0";
    names.push_back(nv);
    VarSet target(names);
    QPoly lifted(target);
    for (const auto& [e, c] : f.terms()) lifted.add_term(e, c);
    return homogenize(lifted, 2);
}

} // namespace triplane::algebra
