#pragma once

#include <array>
#include <optional>

#include "triplane/polygcd.hpp"

namespace triplane {

// A homogeneous polynomial in three variables.  The zero polynomial carries
// no degree (nullopt marker).
template <typename K>
class BasicHPoly {
public:
    BasicHPoly() : p_(VarSet::xyt()) {}
    explicit BasicHPoly(VarSet vs) : p_(std::move(vs)) {}
    explicit BasicHPoly(MPoly<K> p) : p_(std::move(p)) { validate(); }

    const MPoly<K>& poly() const { return p_; }
    const VarSet& vars() const { return p_.vars(); }
    bool is_zero() const { return p_.is_zero(); }
    std::optional<int> degree() const {
        if (p_.is_zero()) return std::nullopt;
        return p_.degree();
    }

    BasicHPoly operator-() const { return BasicHPoly(-p_, nocheck{}); }
    friend BasicHPoly operator+(const BasicHPoly& a, const BasicHPoly& b) {
        a.require_addable(b);
        return BasicHPoly(a.p_ + b.p_, nocheck{});
    }
    friend BasicHPoly operator-(const BasicHPoly& a, const BasicHPoly& b) {
        a.require_addable(b);
        return BasicHPoly(a.p_ - b.p_, nocheck{});
    }
    friend BasicHPoly operator*(const BasicHPoly& a, const BasicHPoly& b) {
        return BasicHPoly(a.p_ * b.p_, nocheck{});
    }
    BasicHPoly pow(unsigned k) const { return BasicHPoly(p_.pow(k), nocheck{}); }
    BasicHPoly scaled(const K& c) const { return BasicHPoly(p_.scaled(c), nocheck{}); }
    BasicHPoly divided_by(const K& c) const { return BasicHPoly(p_.divided_by(c), nocheck{}); }
    BasicHPoly diff(int var) const { return BasicHPoly(p_.diff(var), nocheck{}); }

    // Invertible rational linear change of coordinates: var_i -> sum_j M[i][j] var_j.
    BasicHPoly substitute(const std::array<std::array<Rat, 3>, 3>& m) const {
        Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det == 0) throw DomainError("singular substitution matrix");
        if (vars().size() != 3) throw DomainError("linear substitution requires three variables");
        std::vector<MPoly<K>> images;
        for (int i = 0; i < 3; ++i) {
            MPoly<K> img(vars());
            for (int j = 0; j < 3; ++j) {
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) continue;
                img += MPoly<K>::variable(vars(), j).scaled(K(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
            }
            images.push_back(std::move(img));
        }
        return BasicHPoly(p_.compose(images, vars()), nocheck{});
    }

    friend bool operator==(const BasicHPoly& a, const BasicHPoly& b) { return a.p_ == b.p_; }
    friend bool operator!=(const BasicHPoly& a, const BasicHPoly& b) { return !(a == b); }

    static BasicHPoly unchecked(MPoly<K> p) { return BasicHPoly(std::move(p), nocheck{}); }

private:
    struct nocheck {};
    BasicHPoly(MPoly<K> p, nocheck) : p_(std::move(p)) {
#ifndef NDEBUG
        validate();
#endif
    }
    void validate() const {
        if (p_.is_homogeneous()) return;
        int hi = p_.degree();
        int lo = p_.order();
        throw NotHomogeneousError(lo, hi);
    }
    void require_addable(const BasicHPoly& o) const {
        if (is_zero() || o.is_zero()) return;
        if (p_.degree() != o.p_.degree())
            throw DomainError("degree mismatch on add/sub: " + std::to_string(p_.degree()) +
                              " vs " + std::to_string(o.p_.degree()));
    }

    MPoly<K> p_;
};

using HPoly = BasicHPoly<Rat>;
using XHPoly = BasicHPoly<QuadExt>;

inline XHPoly lift_to_ext(const HPoly& p) { return XHPoly::unchecked(lift_to_ext(p.poly())); }

// Chart var = 1; keeps the three-variable set (chart variable just stops
// appearing).
template <typename K>
MPoly<K> dehomogenize(const BasicHPoly<K>& f, int chart) {
    const VarSet& vs = f.vars();
    std::vector<MPoly<K>> images;
    for (int i = 0; i < vs.size(); ++i)
        images.push_back(i == chart ? MPoly<K>::constant(vs, K(1)) : MPoly<K>::variable(vs, i));
    return f.poly().compose(images, vs);
}

// Homogenizes a polynomial with respect to `at_var` up to its total degree.
template <typename K>
BasicHPoly<K> homogenize(const MPoly<K>& f, int at_var) {
    if (f.is_zero()) return BasicHPoly<K>(f.vars());
    if (f.depends_on(at_var)) throw DomainError("homogenization variable already occurs");
    int d = f.degree();
    MPoly<K> r(f.vars());
    for (const auto& [e, c] : f.terms()) {
        Exp h = e;
        h[static_cast<std::size_t>(at_var)] = d - exp_total(e);
        r.add_term(h, c);
    }
    return BasicHPoly<K>(std::move(r));
}

} // namespace triplane
