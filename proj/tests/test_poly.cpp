#include <doctest.h>

#include <random>

#include "triplane/mat3.hpp"
#include "triplane/poly_io.hpp"
#include "triplane/resultant.hpp"

using namespace triplane;

namespace {

const VarSet vs = VarSet::xyt();

QPoly P(const std::string& s) { return parse_poly(s, vs); }
HPoly H(const std::string& s) { return parse_hpoly(s, vs); }

QPoly random_poly(std::mt19937_64& rng, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> coef(-9, 9), den(1, 3), deg(0, max_deg);
    QPoly p(vs);
    int terms = std::uniform_int_distribution<int>(1, max_terms)(rng);
    for (int i = 0; i < terms; ++i) {
        int d = deg(rng);
        int a = std::uniform_int_distribution<int>(0, d)(rng);
        int b = std::uniform_int_distribution<int>(0, d - a)(rng);
        Exp e{a, b, d - a - b};
        p.add_term(e, Rat(coef(rng), den(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("parsing matches the grammar") {
    CHECK(P("x^2 + 2*x*y") == P("2*x*y+x^2"));
    CHECK(P("x^2 + 2*x*y").degree() == 2);
    CHECK(P("x^2 + 2*x*y").terms().size() == 2);
    CHECK(P("4*x^3*t - 27*y^2*x^2").degree() == 4);
    CHECK(P("1/2*x - x/2").is_zero());
    CHECK(P("-(x^2+x*y+y^2)/3") == P("x^2+x*y+y^2").scaled(Rat(-1, 3)));
    CHECK(P("5") == QPoly::constant(vs, Rat(5)));
    CHECK_THROWS_AS(P("x + + y"), ParseError);
    CHECK_THROWS_AS(P("q"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("x^2/y"), ParseError);
}

TEST_CASE("bindings substitute rational values") {
    std::map<std::string, Rat> binds{{"p", Rat(2)}, {"s", Rat(1, 2)}};
    CHECK(parse_poly("p*x + s*y", vs, binds) == P("2*x + 1/2*y"));
}

TEST_CASE("homogeneity is validated with both degrees") {
    CHECK_THROWS_AS(H("x + y^2"), NotHomogeneousError);
    try {
        H("x + y^2");
    } catch (const NotHomogeneousError& e) {
        CHECK(e.first_degree() == 1);
        CHECK(e.second_degree() == 2);
    }
    CHECK(*H("4*x^3*t - 27*y^2*x^2").degree() == 4);
}

TEST_CASE("format is canonical and round-trips") {
    CHECK(format(P("2*x*y + x^2")) == "x^2 + 2*x*y");
    CHECK(format(P("y - x")) == "-x + y");
    CHECK(format(QPoly(vs)) == "0");
    CHECK(format(P("-1/27*x^6")) == "-1/27*x^6");
    std::mt19937_64 rng(20240101);
    for (int i = 0; i < 50; ++i) {
        QPoly p = random_poly(rng, 4, 6);
        std::string s = format(p);
        CHECK(parse_poly(s, vs) == p);
        CHECK(format(parse_poly(s, vs)) == s);
    }
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 60; ++i) {
        QPoly a = random_poly(rng, 4, 6), b = random_poly(rng, 4, 6), c = random_poly(rng, 4, 6);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("hand-expanded product of pencil lines") {
    CHECK(P("(x-y)*(x+2*y)*(2*x+y)") == P("2*x^3+3*x^2*y-3*x*y^2-2*y^3"));
}

TEST_CASE("derivative and substitution basics") {
    CHECK(P("x^3-y^3").diff(0) == P("3*x^2"));
    CHECK(P("x^3-y^3").diff(2).is_zero());
    HPoly f = H("x^2+y^2");
    CHECK(f.substitute(identity3()) == f);
    // x -> x+y, y -> y, t -> t is invertible; a singular matrix is rejected.
    Mat3 shear = identity3();
    shear[0][1] = 1;
    CHECK(f.substitute(shear) == H("x^2+2*x*y+2*y^2"));
    Mat3 sing{};
    CHECK_THROWS_AS(f.substitute(sing), DomainError);
}

TEST_CASE("degree mismatch on homogeneous add is an error") {
    CHECK_THROWS_AS(H("x^2") + H("x^3"), DomainError);
    CHECK((H("x^2") + HPoly(vs)) == H("x^2"));
}

TEST_CASE("resultant: shared factors and Sylvester values") {
    // Same polynomial: vanishes.
    QPoly f = P("x^2-t^2"); // z := x here
    CHECK(resultant(f, f, 0).is_zero());
    // resultant(z-x, z-y, z) = +/- (x-y) with z the first variable: use t as z.
    QPoly g1 = P("t-x"), g2 = P("t-y");
    QPoly r = resultant(g1, g2, 2);
    CHECK((r == P("x-y") || r == P("y-x")));
    // resultant(y^2-x^3, 2y, y) = 4x^3 up to sign.
    QPoly h1 = P("y^2-x^3"), h2 = P("2*y");
    QPoly r2 = resultant(h1, h2, 1);
    CHECK((r2 == P("4*x^3") || r2 == P("-4*x^3")));
}

TEST_CASE("resultant vanishes exactly when a common factor involves the variable") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        QPoly c = random_poly(rng, 2, 3), a = random_poly(rng, 2, 3), b = random_poly(rng, 2, 3);
        if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
        QPoly f = c * a, g = c * b;
        if (f.degree_in(2) <= 0 || g.degree_in(2) <= 0) continue;
        if (c.degree_in(2) > 0) {
            CHECK(resultant(f, g, 2).is_zero());
        } else {
            QPoly r = resultant(f, g, 2);
            bool share = !is_coprime(f, g) && gcd(f, g).degree_in(2) > 0;
            CHECK(r.is_zero() == share);
        }
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("bareiss determinant agrees with cofactor expansion on a 3x3 sample") {
    auto m = std::vector<std::vector<QPoly>>{
        {P("x"), P("y"), P("t")},
        {P("y"), P("t"), P("x")},
        {P("t"), P("x"), P("y")},
    };
    QPoly det = det_bareiss(m, vs);
    QPoly expect = P("3*x*y*t - x^3 - y^3 - t^3");
    CHECK(det == expect);
}

TEST_CASE("homogenize and dehomogenize are mutually inverse on t-free-top polys") {
    QPoly affine = P("x^2 + 3*x*y + y^2 + x + 1");
    HPoly h = homogenize(affine, 2);
    CHECK(h.poly().is_homogeneous());
    CHECK(dehomogenize(h, 2) == affine);
}
