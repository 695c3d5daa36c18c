#include "triplane/quadext.hpp"

namespace triplane {

QuadExt::QuadExt(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (b_ == 0) { d_ = 0; return; }
    auto split = squarefree_split(d_);
    if (split.squarefree == 0 || split.squarefree == 1)
        throw DomainError("QuadExt radicand must not be a perfect square");
    d_ = split.squarefree;
    b_ *= Rat(split.square_root);
}

QuadExt QuadExt::sqrt_of(const Rat& r) {
    if (auto s = exact_sqrt(r)) return QuadExt(*s);
    // sqrt(p/q) = sqrt(p*q)/q
    Int pq = num(r) * den(r);
    auto split = squarefree_split(pq);
    return QuadExt(Rat(0), Rat(split.square_root, den(r)), split.squarefree);
}

const Rat& QuadExt::as_rational() const {
    if (b_ != 0) throw DomainError("QuadExt value is not rational: " + str());
    return a_;
}

Int QuadExt::join(const QuadExt& x, const QuadExt& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_)
        throw NestedRadicalError("cannot combine sqrt(" + x.d_.str() + ") with sqrt(" + y.d_.str() + ")");
    return x.d_;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = join(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    if (b_ == 0) d_ = 0;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = join(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    if (b_ == 0) d_ = 0;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    Int d = join(*this, o);
    Rat a = a_ * o.a_ + Rat(d) * b_ * o.b_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = (b_ == 0) ? Int(0) : d;
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.is_zero()) throw DomainError("QuadExt division by zero");
    Int d = join(*this, o);
    Rat n = o.norm();
    // 1/(a+b sqrt d) = (a - b sqrt d)/norm
    QuadExt inv(o.a_ / n, -o.b_ / n, d, nocheck_tag{});
    *this *= inv;
    return *this;
}

std::optional<QuadExt> QuadExt::cbrt() const {
    if (is_rational()) {
        if (auto r = exact_cbrt(a_)) return QuadExt(*r);
        return std::nullopt;
    }
    // (x + y sqrt d)^3 = a + b sqrt d forces the norm to be a rational cube,
    // x to satisfy 4x^3 - 3cx = a with c = cbrt(norm), and y^2 = (x^2-c)/d.
    auto c = exact_cbrt(norm());
    if (!c) return std::nullopt;
    // Rational roots x of 4x^3 - 3cx - a: clear denominators and try divisors
    // via the cubic's own structure; degree 3, so test roots of the form found
    // by the rational root theorem on small integers after scaling.
    // 4x^3 - 3cx - a = 0. Substitute x = u/w with w = common denominator.
    Int w = boost::multiprecision::lcm(boost::multiprecision::lcm(den(*c), den(a_)), Int(2));
    // Integer polynomial: 4u^3 - 3(c w^2) u - a w^3 = 0.
    Int A3 = 4, A1 = -3 * num(*c) * (w / den(*c)) * w, A0 = -num(a_) * (w / den(a_)) * w * w;
    // Try u among divisors of A0 over divisors of 4w ... keep it simple: the
    // candidates are bounded; walk divisors of A0 when A0 != 0.
    auto eval = [&](const Rat& x) { return 4 * x * x * x - 3 * (*c) * x - a_; };
    std::optional<Rat> root;
    if (A0 == 0) {
        if (eval(Rat(0)) == 0) root = Rat(0);
        // remaining: 4x^2 = 3c
        if (!root) {
            Rat cand2 = 3 * (*c) / 4;
            if (auto s = exact_sqrt(cand2)) root = *s;
        }
    } else {
        Int bound = boost::multiprecision::abs(A0);
        for (Int u = 1; u * u <= bound; ++u) {
            if (bound % u != 0) continue;
            for (const Int& uu : {Int(u), Int(bound / u)}) {
                for (int su : {1, -1}) {
                    for (const Int& dd : {Int(1), Int(2), Int(4)}) {
                        Rat x(su * uu, dd * w);
                        if (eval(x) == 0) { root = x; break; }
                    }
                    if (root) break;
                }
                if (root) break;
            }
            if (root) break;
        }
    }
    (void)A3; (void)A1;
    if (!root) return std::nullopt;
    Rat y2 = (*root * *root - *c) / Rat(d_);
    auto y = exact_sqrt(y2);
    if (!y) return std::nullopt;
    for (const Rat& yy : {Rat(*y), Rat(-*y)}) {
        QuadExt cand(*root, yy, d_, nocheck_tag{});
        if (cand * cand * cand == *this) return cand;
    }
    return std::nullopt;
}

std::string QuadExt::str() const {
    if (b_ == 0) return to_string(a_);
    std::string s;
    if (a_ != 0) s += to_string(a_) + (b_ > 0 ? " + " : " - ");
    else if (b_ < 0) s += "-";
    Rat ab = b_ < 0 ? -b_ : b_;
    if (ab != 1) s += to_string(ab) + "*";
    s += "sqrt(" + d_.str() + ")";
    return s;
}

} // namespace triplane
