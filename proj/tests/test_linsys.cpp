#include <doctest.h>

#include <random>

#include "triplane/linsys.hpp"

using namespace triplane;
using namespace triplane::linsys;

namespace {

LinearSystem S(const std::string& text) { return parse_system(text); }

} // namespace

TEST_CASE("parsing and canonical display") {
    CHECK(S("7; 3 3 3 3 3 3").str() == "|7; 3^6|");
    CHECK(S("4; 2,1^9").str() == "|4; 2, 1^9|");
    CHECK(S("1").str() == "|1|");
    CHECK(S("5; 1 0 3").str() == "|5; 3, 1|");
    CHECK_THROWS_AS(S(""), ParseError);
}

TEST_CASE("numerical invariants of the classification systems") {
    auto inv = invariants(S("4; 2 1^9"));
    CHECK(inv.self_int == 3);
    CHECK(inv.genus == 2);
    CHECK(inv.k_dot_c == -1);
    CHECK(inv.virtual_dim == 2);

    auto lines = invariants(S("1"));
    CHECK(lines.self_int == 1);
    CHECK(lines.genus == 0);
    CHECK(lines.virtual_dim == 2);

    auto q13 = invariants(S("4; 1^13"));
    CHECK(q13.self_int == 3);
    CHECK(q13.genus == 3);
    CHECK(q13.k_dot_c == 1);
    CHECK(q13.virtual_dim == 1);

    for (const char* sys : {"9; 3^8 2 1^2", "7; 3 2^9 1", "6; 2^7 1^5", "4; 1^13"}) {
        auto i = invariants(S(sys));
        CHECK(i.self_int == 3);
        CHECK(i.genus == 3);
        CHECK(i.k_dot_c == 1);
    }
}

TEST_CASE("adjoint table") {
    CHECK(adjoint(S("4; 2 1^9")) == S("1; 1"));
    CHECK(adjoint(S("9; 3^8 2 1^2")) == S("6; 2^8 1"));
    CHECK(adjoint(S("7; 3 2^9 1")) == S("4; 2 1^9"));
    CHECK(adjoint(S("6; 2^7 1^5")) == S("3; 1^7"));
    CHECK(adjoint(S("4; 1^13")) == S("1"));
}

TEST_CASE("adjoint F-data: self-intersection and genus per half-degree") {
    auto f1 = invariants(adjoint(S("9; 3^8 2 1^2")));
    CHECK(f1.self_int == 3);
    CHECK(f1.genus == 2);
    auto f2 = invariants(adjoint(S("6; 2^7 1^5")));
    CHECK(f2.self_int == 2);
    CHECK(f2.genus == 1);
    auto f3 = invariants(adjoint(S("4; 1^13")));
    CHECK(f3.self_int == 1);
    CHECK(f3.genus == 0);
    auto f0 = invariants(adjoint(S("4; 2 1^9")));
    CHECK(f0.self_int == 0);
    CHECK(f0.genus == 0);
}

TEST_CASE("cremona step: the quoted reduction and the standard involution") {
    CHECK(cremona_step(S("7; 3^6"), 0, 1, 2) == S("5; 3^3 1^3"));
    CHECK(cremona_step(S("1"), 0, 1, 2) == S("2; 1^3"));
    CHECK(cremona_step(S("2; 1 1 1"), 0, 1, 2) == S("1"));
    CHECK_THROWS_AS(cremona_step(S("1"), 0, 0, 1), DomainError);
}

TEST_CASE("cremona step preserves invariants and is an involution") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(0, 10)(rng);
        int d = std::uniform_int_distribution<int>(1, 12)(rng);
        std::vector<int> m;
        for (int i = 0; i < n; ++i) m.push_back(std::uniform_int_distribution<int>(0, 5)(rng));
        LinearSystem s(d, m);
        std::size_t i = std::uniform_int_distribution<std::size_t>(0, 11)(rng);
        std::size_t j = (i + 1 + std::uniform_int_distribution<std::size_t>(0, 9)(rng)) % 12;
        std::size_t k = 12; // always a virtual zero
        if (i == j) j = (j + 1) % 12;
        if (i == j) continue;
        LinearSystem s2 = cremona_step(s, i, j, k);
        auto a = invariants(s), b = invariants(s2);
        CHECK(a.self_int == b.self_int);
        CHECK(a.genus == b.genus);
        CHECK(a.k_dot_c == b.k_dot_c);
        CHECK(a.virtual_dim == b.virtual_dim);
        CHECK(cremona_step(s2, i, j, k) == s);
    }
}

TEST_CASE("normalize") {
    auto n1 = normalize(S("7; 3^6"));
    CHECK(!n1.trace.empty());
    CHECK(n1.trace[0].result == S("5; 3^3 1^3"));

    auto n2 = normalize(S("4; 2 1^9"));
    CHECK(n2.trace.empty());
    CHECK(n2.normal_form == S("4; 2 1^9"));

    auto n3 = normalize(S("3; 1^7"));
    CHECK(n3.trace.empty());
}

TEST_CASE("split_fixed_components") {
    auto sp = split_fixed_components(S("5; 3^3 1^3"));
    CHECK(sp.fixed.size() == 3);
    CHECK(sp.residual == S("2; 1^6"));

    auto none = split_fixed_components(S("2; 1^6"));
    CHECK(none.fixed.empty());

    auto line = split_fixed_components(S("1; 1 1"));
    CHECK(line.fixed.size() == 1);
    CHECK(line.residual == S("0"));
}

TEST_CASE("is_empty: certificates and one-sidedness") {
    auto c1 = is_empty(S("7; 3^6"));
    CHECK(c1.empty);
    // The chain passes through |5;3^3,1^3| and |2;1^6|.
    bool through_5 = false, through_2 = false;
    for (const auto& st : c1.chain) {
        if (st.result == S("5; 3^3 1^3")) through_5 = true;
        if (st.result == S("2; 1^6")) through_2 = true;
    }
    CHECK(through_5);
    CHECK(through_2);
    // And |2;1^6| itself has negative virtual dimension.
    CHECK(invariants(S("2; 1^6")).virtual_dim == -1);

    CHECK(!is_empty(S("1")).empty);
    auto c3 = is_empty(S("3; 2 1^4"));
    CHECK(!c3.empty);
    CHECK(c3.reason == "no emptiness proof found");
    CHECK(invariants(S("3; 2 1^4")).virtual_dim == 2);

    // The classification systems must not be provably empty.
    for (const char* sys : {"4; 2 1^9", "9; 3^8 2 1^2", "7; 3 2^9 1", "6; 2^7 1^5", "4; 1^13"})
        CHECK(!is_empty(S(sys)).empty);
}

TEST_CASE("pencil branch bound") {
    CHECK(pencil_branch_bound(0, 1) == 4);
    CHECK(pencil_branch_bound(1, 1) == 6);
    CHECK(pencil_branch_bound(3, 1) == 10);
    CHECK(pencil_branch_bound(1, 3) == 18);
    CHECK_THROWS_AS(pencil_branch_bound(-1, 1), DomainError);
}
