#pragma once

#include <optional>
#include <string>

#include "triplane/rational.hpp"

namespace triplane {

// An element a + b*sqrt(d) of a real or imaginary quadratic extension of Q.
// d is a nonsquare integer, normalized by squarefree_split so the radical is
// in lowest form.  Elements with b == 0 carry no radicand (d == 0 sentinel)
// and combine with any field.  One radical per computation: combining two
// elements with different nonzero radicands throws NestedRadicalError.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rat rational) : a_(std::move(rational)), b_(0), d_(0) {} // NOLINT: implicit by design
    QuadExt(int n) : a_(n), b_(0), d_(0) {}                           // NOLINT

    // a + b*sqrt(d); d must not be a perfect square (that includes 0 and 1).
    QuadExt(Rat a, Rat b, Int d);

    static QuadExt sqrt_of(const Rat& r); // exact if square, else adjoins the radical

    const Rat& rational_part() const { return a_; }
    const Rat& radical_coeff() const { return b_; }
    const Int& radicand() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    // The rational value; throws if a radical part is present.
    const Rat& as_rational() const;

    QuadExt conjugate() const { return QuadExt(a_, -b_, d_, nocheck_tag{}); }
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; } // a^2 - d b^2

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_, nocheck_tag{}); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { x += y; return x; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { x -= y; return x; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { x *= y; return x; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { x /= y; return x; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // Cube root within the same field, when it exists.
    std::optional<QuadExt> cbrt() const;

    std::string str() const;

private:
    struct nocheck_tag {};
    QuadExt(Rat a, Rat b, Int d, nocheck_tag) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (b_ == 0) d_ = 0;
    }
    // Resolves the common radicand or throws.
    static Int join(const QuadExt& x, const QuadExt& y);

    Rat a_, b_;
    Int d_;
};

} // namespace triplane
