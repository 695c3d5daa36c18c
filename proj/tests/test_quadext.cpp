#include <doctest.h>

#include "triplane/mpoly.hpp"

using namespace triplane;

TEST_CASE("radicand normalization strips square parts") {
    QuadExt a(Rat(0), Rat(1), Int(12)); // sqrt(12) = 2 sqrt(3)
    CHECK(a.radicand() == 3);
    CHECK(a.radical_coeff() == 2);
    CHECK_THROWS_AS(QuadExt(Rat(0), Rat(1), Int(4)), DomainError);
    CHECK_THROWS_AS(QuadExt(Rat(0), Rat(1), Int(1)), DomainError);
}

TEST_CASE("field arithmetic in Q(sqrt(-3))") {
    QuadExt u(Rat(1, 2), Rat(1, 2), Int(-3)); // primitive 6th root of unity
    QuadExt one(Rat(1));
    CHECK(u.norm() == 1);
    // u satisfies u^2 - u + 1 = 0.
    CHECK((u * u - u + one).is_zero());
    // -u^2 is a primitive cube root of unity: (-u^2)^3 = 1.
    QuadExt omega = -(u * u);
    CHECK((omega * omega * omega) == one);
    CHECK(omega != one);
    // Division undoes multiplication.
    QuadExt b(Rat(2, 3), Rat(-5), Int(-3));
    CHECK((b * u) / u == b);
    CHECK_THROWS_AS(b / QuadExt(Rat(0)), DomainError);
}

TEST_CASE("mixing radicands is rejected") {
    QuadExt a(Rat(0), Rat(1), Int(2));
    QuadExt b(Rat(0), Rat(1), Int(3));
    CHECK_THROWS_AS(a + b, NestedRadicalError);
    // Rational elements combine with anything.
    CHECK((a + QuadExt(Rat(5))).radicand() == 2);
}

TEST_CASE("sqrt_of") {
    CHECK(QuadExt::sqrt_of(Rat(9, 4)) == QuadExt(Rat(3, 2)));
    QuadExt s = QuadExt::sqrt_of(Rat(-1, 27));
    CHECK(s.radicand() == -3);
    CHECK(s * s == QuadExt(Rat(-1, 27)));
}

TEST_CASE("cube roots within the field") {
    // Rational cube.
    CHECK(QuadExt(Rat(27, 8)).cbrt().value() == QuadExt(Rat(3, 2)));
    CHECK(!QuadExt(Rat(2)).cbrt().has_value());
    // A cube of a generic element of Q(sqrt(-3)).
    QuadExt z(Rat(1, 2), Rat(3, 2), Int(-3));
    QuadExt z3 = z * z * z;
    auto r = z3.cbrt();
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) * (*r) == z3);
    // Cube roots of unity exist in Q(sqrt(-3)).
    QuadExt omega(Rat(-1, 2), Rat(1, 2), Int(-3));
    CHECK(omega * omega * omega == QuadExt(Rat(1)));
    auto rr = QuadExt(Rat(1)).cbrt();
    REQUIRE(rr.has_value());
    // In Q(sqrt(2)) the only cube root of 1 is 1 itself.
    QuadExt one_in_q2 = QuadExt(Rat(8)).cbrt().value();
    CHECK(one_in_q2 == QuadExt(Rat(2)));
}

TEST_CASE("extension-coefficient polynomials split into rational and radical parts") {
    VarSet vs = VarSet::xyt();
    XPoly p(vs);
    p.add_term(Exp{1, 0, 0}, QuadExt(Rat(1, 2), Rat(1, 3), Int(-3)));
    p.add_term(Exp{0, 1, 0}, QuadExt(Rat(2)));
    auto s = split_ext(p);
    CHECK(s.radicand == -3);
    CHECK(s.rational_part.degree() == 1);
    CHECK(s.radical_part.degree() == 1);
}
