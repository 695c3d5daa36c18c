#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "triplane/mpoly.hpp"

namespace triplane {

// Quotient a/b or nullopt when b does not divide a exactly.
template <typename K>
std::optional<MPoly<K>> try_divide(const MPoly<K>& a, const MPoly<K>& b) {
    a.require_same_vars(b);
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    MPoly<K> q(a.vars()), r = a;
    while (!r.is_zero()) {
        const Exp& er = r.leading_exp();
        const Exp& eb = b.leading_exp();
        Exp e{er[0] - eb[0], er[1] - eb[1], er[2] - eb[2]};
        if (e[0] < 0 || e[1] < 0 || e[2] < 0) return std::nullopt;
        K c = r.leading_coeff() / b.leading_coeff();
        MPoly<K> t = MPoly<K>::monomial(a.vars(), e, c);
        q += t;
        r -= t * b;
    }
    return q;
}

template <typename K>
MPoly<K> divide_exact(const MPoly<K>& a, const MPoly<K>& b) {
    auto q = try_divide(a, b);
    if (!q) throw DomainError("inexact polynomial division");
    return *q;
}

// Canonical form over Q: integer coefficients with gcd 1 and positive leading
// coefficient.  content * part == input.
struct PrimitivePart {
    Rat content;
    QPoly part;
};

inline PrimitivePart make_primitive(const QPoly& f) {
    if (f.is_zero()) return {Rat(0), f};
    Int l = 1, g = 0;
    for (const auto& [e, c] : f.terms()) {
        l = boost::multiprecision::lcm(l, den(c));
    }
    for (const auto& [e, c] : f.terms()) {
        g = gcd(g, num(c) * (l / den(c)));
    }
    Rat content(g, l);
    if (sign(f.leading_coeff()) < 0) content = -content;
    return {content, f.divided_by(content)};
}

// gcd output normalization: primitive with positive leading coefficient over
// Q, monic over an extension field.
inline QPoly canonical_scale(const QPoly& f) { return f.is_zero() ? f : make_primitive(f).part; }
inline XPoly canonical_scale(const XPoly& f) {
    return f.is_zero() ? f : f.divided_by(f.leading_coeff());
}

namespace detail {

// Pseudo-remainder of a by b in variable v (scaled remainder; callers take
// primitive parts anyway).
template <typename K>
MPoly<K> prem(const MPoly<K>& a, const MPoly<K>& b, int v) {
    int db = b.degree_in(v);
    MPoly<K> lcb = b.coeff_of(v, db);
    MPoly<K> r = a;
    MPoly<K> xv = MPoly<K>::variable(a.vars(), v);
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int dr = r.degree_in(v);
        MPoly<K> lcr = r.coeff_of(v, dr);
        r = r * lcb - lcr * b * xv.pow(static_cast<unsigned>(dr - db));
    }
    return r;
}

} // namespace detail

template <typename K>
MPoly<K> gcd(const MPoly<K>& a, const MPoly<K>& b);

// gcd of the coefficients of f with respect to variable v.
template <typename K>
MPoly<K> content_in(const MPoly<K>& f, int v) {
    MPoly<K> c(f.vars());
    for (const auto& coeff : f.coeffs_in(v)) {
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? canonical_scale(coeff) : gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return c.is_zero() ? c : canonical_scale(c);
}

template <typename K>
MPoly<K> gcd(const MPoly<K>& a, const MPoly<K>& b) {
    a.require_same_vars(b);
    const VarSet& vs = a.vars();
    if (a.is_zero()) return canonical_scale(b);
    if (b.is_zero()) return canonical_scale(a);
    if (a.is_constant() || b.is_constant()) return MPoly<K>::constant(vs, K(1));
    int v = -1;
    for (int i = 0; i < vs.size(); ++i)
        if (a.depends_on(i) || b.depends_on(i)) { v = i; break; }
    if (v < 0) return MPoly<K>::constant(vs, K(1));
    if (!a.depends_on(v)) return gcd(a, content_in(b, v));
    if (!b.depends_on(v)) return gcd(content_in(a, v), b);

    MPoly<K> ca = content_in(a, v), cb = content_in(b, v);
    MPoly<K> pa = divide_exact(a, ca), pb = divide_exact(b, cb);
    MPoly<K> cont = gcd(ca, cb);

    // Primitive PRS in v.
    while (true) {
        if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
        if (pb.is_zero()) break;
        if (pb.degree_in(v) == 0) { pa = MPoly<K>::constant(vs, K(1)); break; }
        MPoly<K> r = detail::prem(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero()) { pb = r; break; }
        MPoly<K> cr = content_in(r, v);
        pb = divide_exact(r, cr);
    }
    return canonical_scale(cont * pa);
}

template <typename K>
bool is_coprime(const MPoly<K>& a, const MPoly<K>& b) {
    return gcd(a, b).is_constant();
}

// F = content * prod factors[i].first ^ factors[i].second, with the factors
// pairwise coprime, squarefree, primitive and in canonical scale.
template <typename K>
struct SquarefreeDecomp {
    K content;
    std::vector<std::pair<MPoly<K>, int>> factors;

    MPoly<K> multiply_back(const VarSet& vs) const {
        MPoly<K> r = MPoly<K>::constant(vs, content);
        for (const auto& [f, e] : factors) r = r * f.pow(static_cast<unsigned>(e));
        return r;
    }
    int max_exponent() const {
        int m = 0;
        for (const auto& [f, e] : factors) m = std::max(m, e);
        return m;
    }
};

namespace detail {

template <typename K>
void yun(const MPoly<K>& f, int v, std::vector<std::pair<MPoly<K>, int>>& out) {
    MPoly<K> fp = f.diff(v);
    MPoly<K> g = gcd(f, fp);
    MPoly<K> c = divide_exact(f, g);
    MPoly<K> d = divide_exact(fp, g) - c.diff(v);
    for (int i = 1; !c.is_constant(); ++i) {
        MPoly<K> ai = gcd(c, d);
        if (!ai.is_constant()) out.emplace_back(canonical_scale(ai), i);
        c = divide_exact(c, ai);
        d = divide_exact(d, ai) - c.diff(v);
    }
}

} // namespace detail

template <typename K>
SquarefreeDecomp<K> squarefree_decompose(const MPoly<K>& f) {
    if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
    const VarSet& vs = f.vars();
    SquarefreeDecomp<K> out;
    std::vector<MPoly<K>> stack{f};
    while (!stack.empty()) {
        MPoly<K> g = std::move(stack.back());
        stack.pop_back();
        if (g.is_constant()) continue;
        int v = -1;
        for (int i = 0; i < vs.size(); ++i)
            if (g.depends_on(i)) { v = i; break; }
        MPoly<K> cv = content_in(g, v);
        MPoly<K> p = divide_exact(g, cv);
        if (!cv.is_constant()) stack.push_back(cv);
        detail::yun(p, v, out.factors);
    }
    // Exponent-merge factors found along different content branches.
    // Branch factors are pairwise coprime by construction, so plain collect
    // suffices; derive the content by exact division.
    MPoly<K> prod = MPoly<K>::constant(vs, K(1));
    for (const auto& [fac, e] : out.factors) prod = prod * fac.pow(static_cast<unsigned>(e));
    MPoly<K> c = divide_exact(f, prod);
    internal_check(c.is_constant(), "squarefree decomposition: non-constant content residue");
    out.content = c.constant_value();
    return out;
}

// F = lambda * G^k with G primitive/canonical, if such a G exists.
template <typename K>
std::optional<std::pair<K, MPoly<K>>> perfect_power_up_to_scalar(const MPoly<K>& f, int k) {
    if (f.is_zero()) throw DomainError("perfect power test on the zero polynomial");
    if (k < 2) throw DomainError("perfect power exponent must be at least 2");
    auto dec = squarefree_decompose(f);
    MPoly<K> root = MPoly<K>::constant(f.vars(), K(1));
    for (const auto& [fac, e] : dec.factors) {
        if (e % k != 0) return std::nullopt;
        root = root * fac.pow(static_cast<unsigned>(e / k));
    }
    root = canonical_scale(root);
    MPoly<K> lam = divide_exact(f, root.pow(static_cast<unsigned>(k)));
    internal_check(lam.is_constant(), "perfect power: non-scalar residue");
    return std::make_pair(lam.constant_value(), root);
}

} // namespace triplane
