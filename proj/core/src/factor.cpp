#include "triplane/factor.hpp"

#include <algorithm>
#include <numeric>

namespace triplane {

namespace {

// Dense univariate integer polynomials, little-endian coefficients.
using ZPoly = std::vector<Int>;

void strip(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly from_mpoly(const QPoly& f, int var) {
    for (int i = 0; i < f.vars().size(); ++i)
        if (i != var && f.depends_on(i))
            throw DomainError("polynomial is not univariate in the requested variable");
    auto prim = make_primitive(f);
    ZPoly out(static_cast<std::size_t>(f.degree_in(var)) + 1, Int(0));
    for (const auto& [e, c] : prim.part.terms())
        out[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] = num(c);
    strip(out);
    return out;
}

QPoly to_mpoly(const ZPoly& f, const VarSet& vs, int var) {
    QPoly out(vs);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        Exp e{0, 0, 0};
        e[static_cast<std::size_t>(var)] = static_cast<int>(i);
        out.add_term(e, Rat(f[i]));
    }
    return out;
}

Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    // Extended Euclid.
    Int old_r = mod_pos(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r; r = tmp;
        tmp = old_s - q * s;
        old_s = s; s = tmp;
    }
    if (old_r != 1) throw InternalCheckError("mod_inverse: not invertible");
    return mod_pos(old_s, m);
}

ZPoly zp_reduce(const ZPoly& f, const Int& m) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_pos(f[i], m);
    strip(r);
    return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod_pos(r[i + j] + a[i] * b[j], m);
    strip(r);
    return r;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int v = (i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0));
        r[i] = mod_pos(v, m);
    }
    strip(r);
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int v = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
        r[i] = mod_pos(v, m);
    }
    strip(r);
    return r;
}

ZPoly zp_scale(const ZPoly& a, const Int& c, const Int& m) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_pos(a[i] * c, m);
    strip(r);
    return r;
}

// Division with invertible leading coefficient of b modulo m.
std::pair<ZPoly, ZPoly> zp_divmod(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (b.empty()) throw InternalCheckError("zp_divmod: zero divisor");
    ZPoly r = a, q;
    Int lc_inv = mod_inverse(b.back(), m);
    int db = zdeg(b);
    if (zdeg(r) >= db) q.assign(static_cast<std::size_t>(zdeg(r) - db) + 1, Int(0));
    while (zdeg(r) >= db) {
        int shift = zdeg(r) - db;
        Int c = mod_pos(r.back() * lc_inv, m);
        q[static_cast<std::size_t>(shift)] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::size_t k = static_cast<std::size_t>(shift) + i;
            r[k] = mod_pos(r[k] - c * b[i], m);
        }
        strip(r);
    }
    strip(q);
    return {q, r};
}

ZPoly zp_make_monic(const ZPoly& f, const Int& m) {
    if (f.empty()) return f;
    return zp_scale(f, mod_inverse(f.back(), m), m);
}

ZPoly zp_gcd(ZPoly a, ZPoly b, const Int& p) {
    while (!b.empty()) {
        auto [q, r] = zp_divmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : zp_make_monic(a, p);
}

ZPoly zp_diff(const ZPoly& f, const Int& m) {
    if (f.size() <= 1) return {};
    ZPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mod_pos(f[i] * Int(i), m);
    strip(r);
    return r;
}

ZPoly zp_powmod(ZPoly base, Int e, const ZPoly& mod, const Int& p) {
    ZPoly r{Int(1)};
    base = zp_divmod(base, mod, p).second;
    while (e > 0) {
        if ((e & 1) != 0) r = zp_divmod(zp_mul(r, base, p), mod, p).second;
        base = zp_divmod(zp_mul(base, base, p), mod, p).second;
        e >>= 1;
    }
    return r;
}

// Berlekamp factorization of a monic squarefree polynomial over F_p.
std::vector<ZPoly> berlekamp(const ZPoly& f, const Int& p) {
    int n = zdeg(f);
    if (n <= 1) return {f};
    // Q matrix: column i = x^(i*p) mod f, rows are coefficients.
    std::vector<ZPoly> xp_powers(static_cast<std::size_t>(n));
    ZPoly x{Int(0), Int(1)};
    ZPoly xp = zp_powmod(x, p, f, p);
    ZPoly cur{Int(1)};
    for (int i = 0; i < n; ++i) {
        xp_powers[static_cast<std::size_t>(i)] = cur;
        cur = zp_divmod(zp_mul(cur, xp, p), f, p).second;
    }
    // Build (Q - I) as an n x n matrix over F_p and compute a nullspace basis.
    std::vector<std::vector<Int>> m(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
    for (int col = 0; col < n; ++col) {
        const ZPoly& q = xp_powers[static_cast<std::size_t>(col)];
        for (int row = 0; row < n; ++row) {
            Int v = row < static_cast<int>(q.size()) ? q[static_cast<std::size_t>(row)] : Int(0);
            if (row == col) v -= 1;
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = mod_pos(v, p);
        }
    }
    // Gaussian elimination to find the nullspace.
    std::vector<int> pivot_col_of_row;
    std::vector<bool> col_is_pivot(static_cast<std::size_t>(n), false);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int row = rank; row < n; ++row)
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) { sel = row; break; }
        if (sel < 0) continue;
        std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(rank)]);
        Int inv = mod_inverse(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p);
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] =
                mod_pos(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] * inv, p);
        for (int row = 0; row < n; ++row) {
            if (row == rank) continue;
            Int c = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < n; ++j)
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j) ] = mod_pos(
                    m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -
                        c * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)],
                    p);
        }
        pivot_col_of_row.push_back(col);
        col_is_pivot[static_cast<std::size_t>(col)] = true;
        ++rank;
    }
    std::vector<ZPoly> basis;
    for (int col = 0; col < n; ++col) {
        if (col_is_pivot[static_cast<std::size_t>(col)]) continue;
        ZPoly v(static_cast<std::size_t>(n), Int(0));
        v[static_cast<std::size_t>(col)] = 1;
        for (int row = 0; row < rank; ++row) {
            int pc = pivot_col_of_row[static_cast<std::size_t>(row)];
            v[static_cast<std::size_t>(pc)] =
                mod_pos(-m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)], p);
        }
        strip(v);
        basis.push_back(std::move(v));
    }
    std::vector<ZPoly> factors{f};
    const std::size_t target = basis.size() + 1; // nullspace dim = number of irreducible factors
    for (const ZPoly& v : basis) {
        if (factors.size() >= target) break;
        if (zdeg(v) < 1) continue; // skip the constant vector
        std::vector<ZPoly> next;
        for (const ZPoly& h : factors) {
            if (zdeg(h) <= 1) { next.push_back(h); continue; }
            ZPoly rem = h;
            for (Int c = 0; c < p && zdeg(rem) > 0; ++c) {
                ZPoly shifted = zp_sub(v, ZPoly{c}, p);
                ZPoly g = zp_gcd(rem, shifted, p);
                if (zdeg(g) > 0 && zdeg(g) < zdeg(rem)) {
                    next.push_back(g);
                    rem = zp_divmod(rem, g, p).first;
                }
            }
            if (zdeg(rem) > 0) next.push_back(rem);
        }
        factors = std::move(next);
    }
    return factors;
}

struct LiftPair {
    ZPoly g, h, s, t; // f == g*h, s*g + t*h == 1 (mod the current modulus)
};

// One quadratic Hensel step: modulus m -> m^2 (f, g, h monic).
LiftPair hensel_step(const ZPoly& f, const LiftPair& in, const Int& m) {
    Int m2 = m * m;
    ZPoly e = zp_sub(zp_reduce(f, m2), zp_mul(in.g, in.h, m2), m2);
    auto [q, r] = zp_divmod(zp_mul(in.s, e, m2), in.h, m2);
    ZPoly g2 = zp_add(in.g, zp_add(zp_mul(in.t, e, m2), zp_mul(q, in.g, m2), m2), m2);
    ZPoly h2 = zp_add(in.h, r, m2);
    ZPoly b = zp_sub(zp_add(zp_mul(in.s, g2, m2), zp_mul(in.t, h2, m2), m2), ZPoly{Int(1)}, m2);
    auto [c, d] = zp_divmod(zp_mul(in.s, b, m2), h2, m2);
    ZPoly s2 = zp_sub(in.s, d, m2);
    ZPoly t2 = zp_sub(zp_sub(in.t, zp_mul(in.t, b, m2), m2), zp_mul(c, g2, m2), m2);
    return {g2, h2, s2, t2};
}

// Lifts the monic factorization f == prod(monic_factors) from mod p to mod
// p^(2^levels) by a factor tree of quadratic steps.
void hensel_tree(const ZPoly& f, std::vector<ZPoly> modular, const Int& p, int levels,
                 std::vector<ZPoly>& out) {
    if (modular.size() == 1) {
        Int mod = p;
        for (int i = 0; i < levels; ++i) mod *= mod;
        out.push_back(zp_reduce(f, mod));
        return;
    }
    std::size_t half = modular.size() / 2;
    std::vector<ZPoly> left(modular.begin(), modular.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<ZPoly> right(modular.begin() + static_cast<std::ptrdiff_t>(half), modular.end());
    ZPoly g{Int(1)}, h{Int(1)};
    for (const auto& x : left) g = zp_mul(g, x, p);
    for (const auto& x : right) h = zp_mul(h, x, p);
    // Bezout cofactors mod p via the extended Euclid.
    ZPoly old_r = g, r = h, old_s{Int(1)}, s{}, old_t{}, t{Int(1)};
    while (!r.empty()) {
        auto [q, rem] = zp_divmod(old_r, r, p);
        old_r = std::exchange(r, rem);
        ZPoly ns = zp_sub(old_s, zp_mul(q, s, p), p);
        old_s = std::exchange(s, ns);
        ZPoly nt = zp_sub(old_t, zp_mul(q, t, p), p);
        old_t = std::exchange(t, nt);
    }
    internal_check(zdeg(old_r) == 0, "hensel_tree: factors not coprime");
    Int inv = mod_inverse(old_r[0], p);
    LiftPair pair{g, h, zp_scale(old_s, inv, p), zp_scale(old_t, inv, p)};
    Int m = p;
    for (int i = 0; i < levels; ++i) {
        pair = hensel_step(f, pair, m);
        m *= m;
    }
    hensel_tree(pair.g, std::move(left), p, levels, out);
    hensel_tree(pair.h, std::move(right), p, levels, out);
}

Int centered(const Int& a, const Int& m) {
    Int r = mod_pos(a, m);
    if (2 * r > m) r -= m;
    return r;
}

ZPoly z_primitive(ZPoly f) {
    strip(f);
    if (f.empty()) return f;
    Int g = 0;
    for (const Int& c : f) g = gcd(g, c);
    if (f.back() < 0) g = -g;
    for (Int& c : f) c /= g;
    return f;
}

bool z_divides(const ZPoly& d, const ZPoly& f, ZPoly* quotient) {
    // Exact division over Z (d primitive, nonzero).
    ZPoly r = f, q;
    if (zdeg(r) < zdeg(d)) return false;
    q.assign(static_cast<std::size_t>(zdeg(r) - zdeg(d)) + 1, Int(0));
    while (zdeg(r) >= zdeg(d) && !r.empty()) {
        if (r.back() % d.back() != 0) return false;
        Int c = r.back() / d.back();
        int shift = zdeg(r) - zdeg(d);
        q[static_cast<std::size_t>(shift)] = c;
        for (std::size_t i = 0; i < d.size(); ++i)
            r[static_cast<std::size_t>(shift) + i] -= c * d[i];
        strip(r);
    }
    if (!r.empty()) return false;
    if (quotient) *quotient = q;
    return true;
}

const int kPrimeList[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
                          47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103,
                          107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
                          179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241};

// Finds a prime not dividing lc(f) with f squarefree mod p.
Int good_prime(const ZPoly& f) {
    for (int p_small : kPrimeList) {
        Int p(p_small);
        if (f.back() % p == 0) continue;
        ZPoly fp = zp_reduce(f, p);
        if (zdeg(fp) != zdeg(f)) continue;
        ZPoly g = zp_gcd(fp, zp_diff(fp, p), p);
        if (zdeg(g) == 0) return p;
    }
    throw InternalCheckError("no suitable factorization prime found");
}

// Coefficient bound for factors of f (Mignotte-style, deliberately generous).
Int factor_bound(const ZPoly& f) {
    Int height = 0;
    for (const Int& c : f) height = std::max(height, Int(boost::multiprecision::abs(c)));
    Int b = height * Int(boost::multiprecision::abs(f.back())) * (Int(zdeg(f)) + 1);
    return b << static_cast<unsigned>(zdeg(f) + 1);
}

struct LiftedFactorization {
    Int modulus;
    std::vector<ZPoly> factors; // monic mod modulus
};

LiftedFactorization lift_factorization(const ZPoly& f) {
    Int p = good_prime(f);
    ZPoly fp = zp_make_monic(zp_reduce(f, p), p);
    std::vector<ZPoly> modular = berlekamp(fp, p);
    Int bound = 2 * factor_bound(f) + 1;
    int levels = 0;
    Int mod = p;
    while (mod < bound) { mod *= mod; ++levels; }
    ZPoly f_monic_modm = zp_scale(zp_reduce(f, mod), mod_inverse(mod_pos(f.back(), mod), mod), mod);
    std::vector<ZPoly> lifted;
    if (modular.size() == 1) {
        lifted.push_back(f_monic_modm);
    } else {
        hensel_tree(f_monic_modm, std::move(modular), p, levels, lifted);
    }
    return {mod, std::move(lifted)};
}

// Zassenhaus recombination: returns the irreducible factors of a primitive
// squarefree f with positive leading coefficient.
std::vector<ZPoly> factor_squarefree(ZPoly f) {
    std::vector<ZPoly> out;
    if (zdeg(f) == 1) { out.push_back(f); return out; }
    auto lifted = lift_factorization(f);
    const Int& m = lifted.modulus;
    std::vector<ZPoly> pool = lifted.factors;
    std::size_t subset_size = 1;
    while (2 * subset_size <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(subset_size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            ZPoly cand{mod_pos(f.back(), m)};
            for (std::size_t i : idx) cand = zp_mul(cand, pool[i], m);
            for (Int& c : cand) c = centered(c, m);
            strip(cand);
            cand = z_primitive(std::move(cand));
            ZPoly q;
            if (!cand.empty() && z_divides(cand, f, &q)) {
                out.push_back(cand);
                f = z_primitive(std::move(q));
                std::vector<ZPoly> rest;
                for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) { ++j; continue; }
                    rest.push_back(pool[i]);
                }
                pool = std::move(rest);
                found = true;
                break;
            }
            // next combination
            std::size_t k = subset_size;
            while (k > 0 && idx[k - 1] == pool.size() - subset_size + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (zdeg(f) >= 1) out.push_back(f);
    return out;
}

} // namespace

std::vector<RationalRoot> rational_roots(const QPoly& f, int var) {
    if (f.is_zero()) throw DomainError("rational_roots of the zero polynomial");
    std::vector<RationalRoot> out;
    auto dec = squarefree_decompose(f);
    for (const auto& [fac, e] : dec.factors) {
        if (!fac.depends_on(var)) continue;
        ZPoly z = from_mpoly(fac, var);
        // Factor out x^k.
        std::size_t low = 0;
        while (low < z.size() && z[low] == 0) ++low;
        if (low > 0) {
            out.push_back({Rat(0), e});
            z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(low));
        }
        if (zdeg(z) < 1) continue;
        if (zdeg(z) == 1) {
            out.push_back({Rat(-z[0], z[1]), e});
            continue;
        }
        auto lifted = lift_factorization(z);
        const Int& m = lifted.modulus;
        for (const ZPoly& h : lifted.factors) {
            if (zdeg(h) != 1) continue;
            // h = x + a (monic); candidate root is -a lifted, times lc handling.
            ZPoly cand{mod_pos(z.back(), m)};
            cand = zp_mul(cand, h, m);
            for (Int& c : cand) c = centered(c, m);
            strip(cand);
            cand = z_primitive(std::move(cand));
            if (cand.size() == 2 && z_divides(cand, z, nullptr))
                out.push_back({Rat(-cand[0], cand[1]), e});
        }
    }
    return out;
}

UnivariateFactors factor_univariate(const QPoly& f, int var) {
    if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
    if (f.degree_in(var) > 12)
        throw DomainError("univariate factorization limited to degree 12");
    UnivariateFactors out;
    auto prim = make_primitive(f);
    out.content = prim.content;
    auto dec = squarefree_decompose(prim.part);
    out.content *= Rat(dec.content);
    for (const auto& [fac, e] : dec.factors) {
        ZPoly z = from_mpoly(fac, var);
        std::size_t low = 0;
        while (low < z.size() && z[low] == 0) ++low;
        if (low > 0) {
            out.factors.emplace_back(QPoly::variable(f.vars(), var), e);
            z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(low));
        }
        if (zdeg(z) == 0) continue;
        for (const ZPoly& irr : factor_squarefree(z))
            out.factors.emplace_back(to_mpoly(irr, f.vars(), var), e);
    }
    return out;
}

HPoly BinaryFormFactors::multiply_back(const VarSet& vs) const {
    HPoly r = HPoly::unchecked(QPoly::constant(vs, content));
    for (const auto& [f, e] : factors) r = r * f.pow(static_cast<unsigned>(e));
    return r;
}

BinaryFormFactors binary_form_factor(const HPoly& f) {
    if (f.is_zero()) throw DomainError("binary form factorization of zero");
    const VarSet& vs = f.vars();
    std::vector<int> active;
    for (int i = 0; i < vs.size(); ++i)
        if (f.poly().depends_on(i)) active.push_back(i);
    if (active.size() > 2) throw DomainError("not a binary form: three variables occur");
    if (*f.degree() > 12) throw DomainError("binary form factorization limited to degree 12");
    BinaryFormFactors out;
    if (active.empty()) {
        out.content = f.poly().constant_value();
        return out;
    }
    int u = active[0];
    int v = active.size() == 2 ? active[1] : (u + 1) % vs.size();
    int n = *f.degree();
    // f = sum c_i u^i v^(n-i): dropping the v-powers leaves a univariate in
    // u; the missing top v-powers give a v^k factor.
    QPoly uni(vs);
    for (const auto& [ex, c] : f.poly().terms()) {
        Exp e{0, 0, 0};
        e[static_cast<std::size_t>(u)] = ex[static_cast<std::size_t>(u)];
        uni.add_term(e, c);
    }
    int du = uni.degree_in(u);
    auto uf = factor_univariate(uni, u);
    out.content = uf.content;
    if (n - du > 0) out.factors.emplace_back(HPoly(QPoly::variable(vs, v)), n - du);
    for (const auto& [fac, e] : uf.factors) {
        // Homogenize u-polynomial with v.
        QPoly h(vs);
        int d = fac.degree_in(u);
        for (const auto& [ex, c] : fac.terms()) {
            Exp he = ex;
            he[static_cast<std::size_t>(v)] = d - ex[static_cast<std::size_t>(u)];
            h.add_term(he, c);
        }
        out.factors.emplace_back(HPoly(std::move(h)), e);
    }
    internal_check(out.multiply_back(vs) == f, "binary form factorization: multiply-back failed");
    return out;
}

std::pair<QuadExt, QuadExt> quadratic_roots_ext(const Rat& a, const Rat& b, const Rat& c) {
    if (a == 0) throw DomainError("quadratic_roots_ext: leading coefficient is zero");
    Rat disc = b * b - 4 * a * c;
    QuadExt s = QuadExt::sqrt_of(disc);
    QuadExt two_a = QuadExt(2 * a);
    QuadExt mb = QuadExt(-b);
    return {(mb + s) / two_a, (mb - s) / two_a};
}

} // namespace triplane
