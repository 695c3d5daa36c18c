#pragma once

#include <algorithm>
#include <array>
#include <initializer_list>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "triplane/quadext.hpp"
#include "triplane/rational.hpp"

namespace triplane {

inline bool coeff_is_zero(const Rat& r) { return r == 0; }
inline bool coeff_is_zero(const QuadExt& q) { return q.is_zero(); }

// An ordered set of 1..3 variable names.  Polynomial operations require both
// operands to share the variable set.
class VarSet {
public:
    VarSet() : VarSet({"x", "y", "t"}) {}
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty() || names_.size() > 3)
            throw DomainError("VarSet supports 1 to 3 variables");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw DomainError("duplicate variable name " + names_[i]);
    }
    static VarSet xyt() { return VarSet(); }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    int index_of(std::string_view n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return -1;
    }
    bool operator==(const VarSet& o) const { return names_ == o.names_; }
    bool operator!=(const VarSet& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
};

using Exp = std::array<int, 3>;

inline int exp_total(const Exp& e) { return e[0] + e[1] + e[2]; }

// Graded lexicographic, highest first, with var 0 > var 1 > var 2.
struct GrlexGreater {
    bool operator()(const Exp& a, const Exp& b) const {
        int da = exp_total(a), db = exp_total(b);
        if (da != db) return da > db;
        return a > b; // array lexicographic
    }
};

template <typename K>
class MPoly {
public:
    using TermMap = std::map<Exp, K, GrlexGreater>;

    MPoly() : vars_(VarSet::xyt()) {}
    explicit MPoly(VarSet vars) : vars_(std::move(vars)) {}

    static MPoly zero(const VarSet& vs) { return MPoly(vs); }
    static MPoly constant(const VarSet& vs, K c) {
        MPoly p(vs);
        if (!coeff_is_zero(c)) p.terms_.emplace(Exp{0, 0, 0}, std::move(c));
        return p;
    }
    static MPoly variable(const VarSet& vs, int i) {
        if (i < 0 || i >= vs.size()) throw DomainError("variable index out of range");
        MPoly p(vs);
        Exp e{0, 0, 0};
        e[static_cast<std::size_t>(i)] = 1;
        p.terms_.emplace(e, K(1));
        return p;
    }
    static MPoly monomial(const VarSet& vs, Exp e, K c) {
        MPoly p(vs);
        for (int i = vs.size(); i < 3; ++i)
            if (e[static_cast<std::size_t>(i)] != 0) throw DomainError("monomial exponent beyond variable set");
        if (!coeff_is_zero(c)) p.terms_.emplace(e, std::move(c));
        return p;
    }

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0, 0});
    }
    K constant_value() const {
        if (terms_.empty()) return K(0);
        if (!is_constant()) throw DomainError("polynomial is not constant");
        return terms_.begin()->second;
    }

    // Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : exp_total(terms_.begin()->first); }
    int degree_in(int var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
        return terms_.empty() ? -1 : d;
    }
    int low_degree_in(int var) const {
        if (terms_.empty()) return -1;
        int d = INT32_MAX;
        for (const auto& [e, c] : terms_) d = std::min(d, e[static_cast<std::size_t>(var)]);
        return d;
    }
    // Minimal total degree of a term (order of vanishing at the origin).
    int order() const {
        if (terms_.empty()) return -1;
        int d = INT32_MAX;
        for (const auto& [e, c] : terms_) d = std::min(d, exp_total(e));
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = degree();
        for (const auto& [e, c] : terms_)
            if (exp_total(e) != d) return false;
        return true;
    }
    bool depends_on(int var) const { return degree_in(var) > 0; }

    const Exp& leading_exp() const {
        if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
        return terms_.begin()->first;
    }
    const K& leading_coeff() const {
        if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
        return terms_.begin()->second;
    }

    void add_term(const Exp& e, const K& c) {
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    MPoly& operator+=(const MPoly& o) {
        require_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        require_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.require_same_vars(b);
        MPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly scaled(const K& c) const {
        MPoly r(vars_);
        if (coeff_is_zero(c)) return r;
        for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
        return r;
    }
    MPoly divided_by(const K& c) const {
        if (coeff_is_zero(c)) throw DomainError("division by zero scalar");
        return scaled(K(1) / c);
    }

    MPoly pow(unsigned k) const {
        MPoly r = constant(vars_, K(1));
        MPoly base = *this;
        while (k) {
            if (k & 1u) r = r * base;
            base = base * base;
            k >>= 1u;
        }
        return r;
    }

    MPoly diff(int var) const {
        MPoly r(vars_);
        auto v = static_cast<std::size_t>(var);
        for (const auto& [e, c] : terms_) {
            if (e[v] == 0) continue;
            Exp d = e;
            d[v] -= 1;
            r.add_term(d, c * K(e[v]));
        }
        return r;
    }

    // Coefficients with respect to `var`: result[i] has var-exponent zero.
    std::vector<MPoly> coeffs_in(int var) const {
        int d = std::max(degree_in(var), 0);
        std::vector<MPoly> out(static_cast<std::size_t>(d) + 1, MPoly(vars_));
        auto v = static_cast<std::size_t>(var);
        for (const auto& [e, c] : terms_) {
            Exp r = e;
            int i = r[v];
            r[v] = 0;
            out[static_cast<std::size_t>(i)].add_term(r, c);
        }
        return out;
    }
    MPoly coeff_of(int var, int power) const {
        MPoly out(vars_);
        auto v = static_cast<std::size_t>(var);
        for (const auto& [e, c] : terms_) {
            if (e[v] != power) continue;
            Exp r = e;
            r[v] = 0;
            out.add_term(r, c);
        }
        return out;
    }

    // Substitutes images[i] (over `target` variables) for variable i.
    MPoly compose(const std::vector<MPoly>& images, const VarSet& target) const {
        if (static_cast<int>(images.size()) != vars_.size())
            throw DomainError("compose: one image per variable required");
        // Cache powers of each image.
        std::array<std::vector<MPoly>, 3> powers;
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (images[i].vars() != target) throw DomainError("compose: image over wrong variables");
            powers[i] = {MPoly::constant(target, K(1))};
        }
        auto power_of = [&](std::size_t i, int k) -> const MPoly& {
            auto& cache = powers[i];
            while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
            return cache[static_cast<std::size_t>(k)];
        };
        MPoly r(target);
        for (const auto& [e, c] : terms_) {
            MPoly term = MPoly::constant(target, c);
            for (std::size_t i = 0; i < images.size(); ++i)
                if (e[i] > 0) term = term * power_of(i, e[i]);
            r += term;
        }
        return r;
    }

    K eval(const std::vector<K>& point) const {
        if (static_cast<int>(point.size()) != vars_.size())
            throw DomainError("eval: one value per variable required");
        K r(0);
        for (const auto& [e, c] : terms_) {
            K term = c;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (int k = 0; k < e[i]; ++k) term *= point[i];
            r += term;
        }
        return r;
    }

    // Coefficient-wise map into another scalar type (e.g. Rat -> QuadExt).
    template <typename K2, typename F>
    MPoly<K2> map_coeffs(F&& f) const {
        MPoly<K2> r(vars_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    void require_same_vars(const MPoly& o) const {
        if (vars_ != o.vars_) throw DomainError("operands use different variable names");
    }

private:
    VarSet vars_;
    TermMap terms_;
};

using QPoly = MPoly<Rat>;
using XPoly = MPoly<QuadExt>;

inline XPoly lift_to_ext(const QPoly& p) {
    return p.map_coeffs<QuadExt>([](const Rat& c) { return QuadExt(c); });
}

// Exact restriction of an extension-coefficient polynomial: P0 + P1*sqrt(d).
struct ExtSplit {
    QPoly rational_part;
    QPoly radical_part;
    Int radicand = 0;
};

inline ExtSplit split_ext(const XPoly& p) {
    ExtSplit s{QPoly(p.vars()), QPoly(p.vars()), 0};
    for (const auto& [e, c] : p.terms()) {
        s.rational_part.add_term(e, c.rational_part());
        s.radical_part.add_term(e, c.radical_coeff());
        if (c.radicand() != 0) {
            if (s.radicand != 0 && s.radicand != c.radicand())
                throw NestedRadicalError("polynomial mixes radicands");
            s.radicand = c.radicand();
        }
    }
    return s;
}

} // namespace triplane
