#include <doctest.h>

#include "folsurf/lattice.hpp"

using namespace folsurf;

TEST_SUITE_BEGIN("lattice");

static ExceptionalLattice chain(std::vector<int> self_ints, std::vector<CurveMeta> meta = {}) {
    int n = static_cast<int>(self_ints.size());
    std::vector<std::vector<Int>> g(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) {
        g[i][i] = self_ints[i];
        if (i + 1 < n) g[i][i + 1] = g[i + 1][i] = 1;
    }
    return ExceptionalLattice(std::move(g), std::move(meta));
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(ExceptionalLattice({{Int(0)}}), InputError);
    CHECK_THROWS_AS(ExceptionalLattice({{Int(-2), Int(-1)}, {Int(-1), Int(-2)}}), InputError);
    CHECK_THROWS_AS(ExceptionalLattice({{Int(-2), Int(1)}, {Int(0), Int(-2)}}), InputError);
}

TEST_CASE("negative definiteness and determinant") {
    auto a2 = chain({-2, -2});
    CHECK(a2.negative_definite());
    CHECK(a2.determinant() == 3);
    auto l74 = chain({-2, -4});
    CHECK(l74.negative_definite());
    CHECK(l74.determinant() == 7);
    // a (-1)-curve chain with an adjacency that fails definiteness
    ExceptionalLattice bad({{Int(-1), Int(2)}, {Int(2), Int(-1)}});
    CHECK_FALSE(bad.negative_definite());
    CHECK_THROWS_AS(bad.solve({Rat(1), Rat(1)}), DomainError);
}

TEST_CASE("mumford pullback") {
    auto a1 = chain({-2});
    CHECK(mumford_pullback(a1, {{Rat(1)}, {}}) == std::vector<Rat>{Rat(1, 2)});
    auto a2 = chain({-2, -2});
    auto a = mumford_pullback(a2, {{Rat(1), Rat(0)}, {}});
    CHECK(a == std::vector<Rat>{Rat(2, 3), Rat(1, 3)});
    CHECK(mumford_pullback(a2, {{Rat(0), Rat(0)}, {}}) == std::vector<Rat>{Rat(0), Rat(0)});
}

TEST_CASE("intersection numbers") {
    // single -n curve, transversal divisors through opposite ends
    for (int n = 2; n <= 9; ++n) {
        ExceptionalLattice l({{Int(-n)}});
        Rat v = intersection_number(l, {{Rat(1)}, {}}, {{Rat(1)}, {}}, Rat(0));
        CHECK(v == Rat(1, n));
    }
    auto a1 = chain({-2});
    CHECK(intersection_number(a1, {{Rat(1)}, {}}, {{Rat(1)}, {}}, Rat(0)) == Rat(1, 2));
    // disjoint divisors: pairing equals cross
    CHECK(intersection_number(a1, {{Rat(0)}, {}}, {{Rat(0)}, {}}, Rat(5)) == Rat(5));
    // symmetry
    auto l = chain({-2, -3});
    WeilDivisorData d1{{Rat(1), Rat(0)}, {}}, d2{{Rat(0), Rat(2)}, {}};
    CHECK(intersection_number(l, d1, d2, Rat(0)) == intersection_number(l, d2, d1, Rat(0)));
}

TEST_CASE("ordinary discrepancies") {
    // ADE lattices of (-2)-curves have zero discrepancies
    auto a3 = chain({-2, -2, -2});
    for (const auto& x : ordinary_discrepancies(a3)) CHECK(x == 0);
    // single (-3) rational curve
    ExceptionalLattice m3({{Int(-3)}});
    CHECK(ordinary_discrepancies(m3) == std::vector<Rat>{Rat(-1, 3)});
    // 1/7(1,4): chain (-2,-4)
    auto l74 = chain({-2, -4});
    CHECK(ordinary_discrepancies(l74) == std::vector<Rat>{Rat(-2, 7), Rat(-4, 7)});
    // nodal curve without chi refused
    CurveMeta nodal;
    nodal.nodal = true;
    ExceptionalLattice ln({{Int(-2)}}, {nodal});
    CHECK_THROWS_AS(ordinary_discrepancies(ln), DomainError);
}

TEST_CASE("foliated discrepancies") {
    // chain of (-2)-F-curves with z_total = 2 everywhere: zero vector
    CurveMeta f2;
    f2.z_total = 2;
    auto l = chain({-2, -2, -2}, {f2, f2, f2});
    for (const auto& x : foliated_discrepancies(l)) CHECK(x == 0);
    // single non-invariant (-1)-curve with tangency 0: discrepancy -1
    CurveMeta ni;
    ni.invariant = false;
    ni.tang_total = 0;
    ExceptionalLattice l1({{Int(-1)}}, {ni});
    CHECK(foliated_discrepancies(l1) == std::vector<Rat>{Rat(-1)});
    // F-chains have strictly positive foliated discrepancies
    for (auto self_ints : {std::vector<int>{-2}, {-2, -2}, {-3, -2}, {-2, -2, -3, -2}}) {
        std::vector<CurveMeta> meta(self_ints.size());
        for (std::size_t i = 0; i < meta.size(); ++i) meta[i].z_total = i == 0 ? 1 : 2;
        auto lc = chain(self_ints, meta);
        for (const auto& x : foliated_discrepancies(lc)) CHECK(x > 0);
    }
    CurveMeta missing;
    ExceptionalLattice lm({{Int(-2)}}, {missing});
    CHECK_THROWS_AS(foliated_discrepancies(lm), DomainError);
}

TEST_CASE("cartier pullback has integer coefficients") {
    auto a2 = chain({-2, -2});
    // b = gram * (-1, -2) = (2-2... ) pick integer vector c and set b = -gram*c
    std::vector<Rat> c{Rat(3), Rat(5)};
    std::vector<Rat> b(2);
    for (int i = 0; i < 2; ++i) {
        Rat acc(0);
        for (int j = 0; j < 2; ++j) acc += Rat(a2.gram()[i][j]) * c[j];
        b[i] = -acc;
    }
    CHECK(mumford_pullback(a2, {b, {}}) == c);
}

TEST_CASE("epsilon canonical test") {
    auto zero = epsilon_canonical_test(Rat(0), Rat(0), Rat(1, 8));
    CHECK(zero.pass);
    REQUIRE(zero.threshold.has_value());
    CHECK(*zero.threshold == 0);
    for (int d = 1; d <= 6; ++d) {
        auto r = epsilon_canonical_test(Rat(-1), Rat(d), Rat(1, 5));
        REQUIRE(r.threshold.has_value());
        CHECK(*r.threshold == Rat(1, 1 + d));
        CHECK(r.pass == (Rat(1, 5) >= Rat(1, 1 + d)));
    }
    auto fail = epsilon_canonical_test(Rat(1), Rat(-1), Rat(1, 8));
    CHECK_FALSE(fail.pass);
    CHECK_FALSE(fail.threshold.has_value());
}

TEST_SUITE_END();
