#include <doctest.h>

#include <random>

#include "triplane/factor.hpp"
#include "triplane/poly_io.hpp"

using namespace triplane;

namespace {

const VarSet vs = VarSet::xyt();
QPoly P(const std::string& s) { return parse_poly(s, vs); }
HPoly H(const std::string& s) { return parse_hpoly(s, vs); }

QPoly random_nonzero(std::mt19937_64& rng, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_deg);
    for (;;) {
        QPoly p(vs);
        int terms = std::uniform_int_distribution<int>(1, max_terms)(rng);
        for (int i = 0; i < terms; ++i) {
            int d = deg(rng);
            int a = std::uniform_int_distribution<int>(0, d)(rng);
            int b = std::uniform_int_distribution<int>(0, d - a)(rng);
            p.add_term(Exp{a, b, d - a - b}, Rat(coef(rng)));
        }
        if (!p.is_zero()) return p;
    }
}

} // namespace

TEST_CASE("exact division") {
    QPoly f = P("x^2-y^2"), g = P("x-y");
    CHECK(divide_exact(f, g) == P("x+y"));
    CHECK(!try_divide(P("x^2+y^2"), g).has_value());
    CHECK_THROWS_AS(divide_exact(f, QPoly(vs)), DomainError);
}

TEST_CASE("gcd of structured products") {
    QPoly c = P("x+y"), a = P("x^2+t^2"), b = P("y-t");
    CHECK(gcd(c * a, c * b) == canonical_scale(c));
    CHECK(gcd(P("x*y"), P("x*t^2")) == P("x"));
    CHECK(is_coprime(P("x^2+y*t"), P("y")));
    // gcd is insensitive to rational scaling.
    CHECK(gcd((c * a).scaled(Rat(-3, 7)), (c * b).scaled(Rat(2, 5))) == canonical_scale(c));
}

TEST_CASE("squarefree decomposition: spec values") {
    // x^2 y -> content 1, {x: 2, y: 1}
    auto d1 = squarefree_decompose(P("x^2*y"));
    CHECK(d1.content == Rat(1));
    CHECK(d1.factors.size() == 2);
    CHECK(d1.multiply_back(vs) == P("x^2*y"));

    // (x-y)^2 (x+2y)^2 (2x+y)^2: the exponent-2 part has total degree 3.
    QPoly lines = P("(x-y)*(x+2*y)*(2*x+y)");
    auto d2 = squarefree_decompose(lines * lines);
    int deg_exp2 = 0;
    for (const auto& [f, e] : d2.factors)
        if (e == 2) deg_exp2 += f.degree();
    CHECK(deg_exp2 == 3);
    CHECK(d2.multiply_back(vs) == lines * lines);

    // 4x^3 + 4x^2 y = 4 x^2 (x+y)
    auto d3 = squarefree_decompose(P("4*x^3+4*x^2*y"));
    CHECK(d3.content == Rat(4));
    bool saw_x2 = false, saw_xy = false;
    for (const auto& [f, e] : d3.factors) {
        if (f == P("x") && e == 2) saw_x2 = true;
        if (f == P("x+y") && e == 1) saw_xy = true;
    }
    CHECK(saw_x2);
    CHECK(saw_xy);
}

TEST_CASE("squarefree multiply-back is exact on random products") {
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 100) {
        QPoly f = QPoly::constant(vs, Rat(1));
        int nf = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int i = 0; i < nf; ++i) {
            QPoly g = random_nonzero(rng, 2, 3);
            int e = std::uniform_int_distribution<int>(1, 3)(rng);
            f = f * g.pow(static_cast<unsigned>(e));
        }
        if (f.is_constant() || f.degree() > 14) continue;
        auto dec = squarefree_decompose(f);
        CHECK(dec.multiply_back(vs) == f);
        for (std::size_t i = 0; i < dec.factors.size(); ++i) {
            for (std::size_t j = i + 1; j < dec.factors.size(); ++j)
                CHECK(is_coprime(dec.factors[i].first, dec.factors[j].first));
        }
        ++done;
    }
}

TEST_CASE("perfect power extraction") {
    QPoly g = P("x^3-y^3");
    auto sq = perfect_power_up_to_scalar(g * g, 2);
    REQUIRE(sq.has_value());
    CHECK(sq->first == Rat(1));
    CHECK(sq->second == g);

    QPoly lines = P("(x-y)*(x+2*y)*(2*x+y)");
    auto sq2 = perfect_power_up_to_scalar((lines * lines).scaled(Rat(-1, 27)), 2);
    REQUIRE(sq2.has_value());
    CHECK(sq2->second.pow(2).scaled(sq2->first) == (lines * lines).scaled(Rat(-1, 27)));

    CHECK(!perfect_power_up_to_scalar(P("x^3+y^3"), 3).has_value());
}

TEST_CASE("perfect power recovers random cubes and squares up to sign") {
    std::mt19937_64 rng(99);
    for (int k : {2, 3}) {
        int done = 0;
        while (done < 30) {
            QPoly g = random_nonzero(rng, 3, 3);
            if (g.is_constant()) continue;
            Rat lambda(std::uniform_int_distribution<int>(-6, 6)(rng),
                       std::uniform_int_distribution<int>(1, 4)(rng));
            if (lambda == 0) continue;
            QPoly f = g.pow(static_cast<unsigned>(k)).scaled(lambda);
            auto r = perfect_power_up_to_scalar(f, k);
            REQUIRE(r.has_value());
            CHECK(r->second.pow(static_cast<unsigned>(k)).scaled(r->first) == f);
            QPoly gp = canonical_scale(g);
            CHECK((r->second == gp || r->second == -gp));
            ++done;
        }
    }
}

TEST_CASE("binary form factorization: classical identities") {
    auto f1 = binary_form_factor(H("x^3-y^3"));
    CHECK(f1.factors.size() == 2);
    bool linear = false, quadratic = false;
    for (const auto& [f, e] : f1.factors) {
        if (f == H("x-y")) linear = true;
        if (f == H("x^2+x*y+y^2")) quadratic = true;
        CHECK(e == 1);
    }
    CHECK(linear);
    CHECK(quadratic);

    auto f2 = binary_form_factor(H("x^2+y^2"));
    CHECK(f2.factors.size() == 1);
    CHECK(f2.factors[0].first == H("x^2+y^2"));

    auto f3 = binary_form_factor(H("x^4-5*x^2*y^2+4*y^4"));
    CHECK(f3.factors.size() == 4);
    for (const auto& [f, e] : f3.factors) CHECK(*f.degree() == 1);

    CHECK_THROWS_AS(binary_form_factor(H("x*y*t")), DomainError);
}

TEST_CASE("binary form factorization in other variable pairs and with multiplicities") {
    auto f = binary_form_factor(H("(y^2+t^2)*(y-t)^2*t"));
    CHECK(f.multiply_back(vs) == H("(y^2+t^2)*(y-t)^2*t"));
    int total = 0;
    for (const auto& [fac, e] : f.factors) total += *fac.degree() * e;
    CHECK(total == 5);
}

TEST_CASE("rational roots at degrees beyond the factorization cap") {
    // (x-2)(x+3)(2x-1)(x^2+1)(x^8+x+7) has degree 13.
    QPoly f = P("(x-2)*(x+3)*(2*x-1)*(x^2+1)*(x^8+x+7)");
    auto roots = rational_roots(f, 0);
    REQUIRE(roots.size() == 3);
    std::vector<Rat> vals;
    for (const auto& r : roots) {
        vals.push_back(r.value);
        CHECK(r.multiplicity == 1);
    }
    std::sort(vals.begin(), vals.end());
    CHECK(vals == std::vector<Rat>{Rat(-3), Rat(1, 2), Rat(2)});

    auto none = rational_roots(P("x^2+1"), 0);
    CHECK(none.empty());

    auto with_mult = rational_roots(P("(x-1)^3*(3*x+2)"), 0);
    REQUIRE(with_mult.size() == 2);
    for (const auto& r : with_mult)
        CHECK(((r.value == Rat(1) && r.multiplicity == 3) ||
               (r.value == Rat(-2, 3) && r.multiplicity == 1)));
}

TEST_CASE("factor_univariate multiply-back on random products") {
    std::mt19937_64 rng(555);
    int done = 0;
    while (done < 25) {
        QPoly f = QPoly::constant(vs, Rat(1));
        int nf = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int i = 0; i < nf; ++i) {
            int d = std::uniform_int_distribution<int>(1, 3)(rng);
            QPoly g(vs);
            for (int j = 0; j <= d; ++j)
                g.add_term(Exp{j, 0, 0}, Rat(std::uniform_int_distribution<int>(-4, 4)(rng)));
            if (g.is_zero() || g.degree_in(0) < 1) { --i; continue; }
            f = f * g;
        }
        if (f.degree_in(0) > 12 || f.degree_in(0) < 1) continue;
        auto fac = factor_univariate(f, 0);
        QPoly back = QPoly::constant(vs, fac.content);
        for (const auto& [g, e] : fac.factors) back = back * g.pow(static_cast<unsigned>(e));
        CHECK(back == f);
        ++done;
    }
}

TEST_CASE("quadratic roots over one extension") {
    auto [r1, r2] = quadratic_roots_ext(Rat(1), Rat(1), Rat(1)); // x^2+x+1
    CHECK((r1 * r1 + r1 + QuadExt(Rat(1))).is_zero());
    CHECK((r2 * r2 + r2 + QuadExt(Rat(1))).is_zero());
    CHECK(r1.radicand() == -3);
}
