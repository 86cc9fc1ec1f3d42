#include <doctest.h>

#include <numeric>
#include <string>

#include "folsurf/blowup.hpp"

using namespace folsurf;

TEST_SUITE_BEGIN("blowup");

static PlaneGerm linear_diag(int m, int n) {
    return PlaneGerm::parse(std::to_string(m) + "*x*dx + " + std::to_string(n) + "*y*dy");
}

// Number of blowups needed for m*x*dx + n*y*dy: one per step of the
// subtractive Euclid walk from (m, n) down to (1, 1), plus the final one.
static int expected_blowups(int m, int n) {
    int steps = 0;
    while (m != 1 || n != 1) {
        if (m > n)
            m -= n;
        else
            n -= m;
        ++steps;
    }
    return steps + 1;
}

TEST_CASE("single blowup charts") {
    auto bu = blow_up_origin(linear_diag(2, 5));
    CHECK(bu.center_was_singular);
    CHECK(bu.exceptional.invariant);
    CHECK(bu.chart1.saturation_order == 1);
    CHECK(bu.chart1.germ.f() == Poly::x() * Rat(2));
    CHECK(bu.chart1.germ.g() == Poly::y() * Rat(3));
    CHECK(bu.chart2.saturation_order == 1);
    CHECK(bu.chart2.germ.f() == Poly::x() * Rat(-3));
    CHECK(bu.chart2.germ.g() == Poly::y() * Rat(5));
}

TEST_CASE("radial germ is dicritical") {
    auto bu = blow_up_origin(linear_diag(1, 1));
    CHECK_FALSE(bu.exceptional.invariant);
    CHECK_FALSE(bu.chart1.germ.is_singular_at_origin());

    auto forest = seidenberg_reduce(linear_diag(1, 1));
    CHECK(forest.blowup_count() == 1);
    CHECK(forest.depth == 1);
    REQUIRE(forest.curves.size() == 1);
    CHECK_FALSE(forest.curves[0].invariant);
    CHECK(forest.curves[0].self_int == -1);
    CHECK(forest.curves[0].tang_total == 0);
    CHECK(forest.curves[0].singular_points.empty());
    CHECK(forest.edges.empty());
    auto rep = verify_pos_rat_structure(forest);
    CHECK(rep.pass());
    CHECK(rep.non_invariant_id == 0);
    CHECK(rep.foliated == std::vector<Rat>{Rat(-1)});
}

TEST_CASE("reduced germ needs no blowup") {
    auto forest = seidenberg_reduce(PlaneGerm::parse("-3*x*dx + 2*y*dy"));
    CHECK(forest.blowup_count() == 0);
    CHECK(forest.curves.empty());
    CHECK_THROWS_AS(verify_pos_rat_structure(forest), DomainError);
}

TEST_CASE("eigenvalue ratio 2/3") {
    auto forest = seidenberg_reduce(linear_diag(3, 2));
    CHECK(forest.blowup_count() == 3);
    REQUIRE(forest.curves.size() == 3);
    CHECK(forest.curves[0].self_int == -3);
    CHECK(forest.curves[1].self_int == -2);
    CHECK(forest.curves[2].self_int == -1);
    CHECK(forest.curves[0].invariant);
    CHECK(forest.curves[1].invariant);
    CHECK_FALSE(forest.curves[2].invariant);
    CHECK(forest.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
    CHECK(forest.curves[0].z_total() == 1);
    CHECK(forest.curves[1].z_total() == 1);

    auto lat = forest_lattice(forest);
    CHECK(lat.negative_definite());
    CHECK(lat.determinant() == -1);

    auto rep = verify_pos_rat_structure(forest);
    CHECK(rep.pass());
    CHECK(rep.non_invariant_id == 2);
    CHECK(rep.foliated == std::vector<Rat>{Rat(0), Rat(0), Rat(-1)});

    for (const auto& e : cs_audit(forest)) CHECK(e.pass);
}

TEST_CASE("blowup counts follow the euclid walk") {
    CHECK(seidenberg_reduce(linear_diag(5, 2)).blowup_count() == 4);
    for (int m = 1; m <= 7; ++m) {
        for (int n = 1; n <= m; ++n) {
            if (std::gcd(m, n) != 1) continue;
            CAPTURE(m);
            CAPTURE(n);
            auto forest = seidenberg_reduce(linear_diag(m, n));
            CHECK(forest.blowup_count() == expected_blowups(m, n));
            CHECK(verify_pos_rat_structure(forest).pass());
            auto audit = cs_audit(forest);
            CHECK(audit.size() + 1 == forest.curves.size());
            for (const auto& e : audit) CHECK(e.pass);
        }
    }
}

TEST_CASE("semi-reduced stop criterion") {
    // positive rational ratio: semi-reduced already, no blowup needed
    auto forest = seidenberg_reduce(linear_diag(3, 2), 64, StopCriterion::SemiReduced);
    CHECK(forest.blowup_count() == 0);
    // negative ratio is fully reduced, identical under both criteria
    CHECK(seidenberg_reduce(PlaneGerm::parse("x*dx - y*dy"), 64, StopCriterion::SemiReduced)
              .blowup_count() == 0);
}

TEST_CASE("dicritical tangency point") {
    // leading part is y*(x*dx + y*dy); the cubic term leaves one tangency
    auto v = PlaneGerm::parse("x*y*dx + (y^2 + x^3)*dy");
    auto forest = seidenberg_reduce(v);
    CHECK(forest.blowup_count() == 1);
    REQUIRE(forest.curves.size() == 1);
    const auto& e = forest.curves[0];
    CHECK_FALSE(e.invariant);
    CHECK(e.tang_total == 1);
    REQUIRE(e.tangency_points.size() == 1);
    CHECK(e.tangency_points[0].locus == "@/1@(0,0)");
    CHECK(e.tangency_points[0].order == 1);
    CHECK(e.singular_points.empty());
    // nonzero tangency order fails the structure check at clause 2
    auto rep = verify_pos_rat_structure(forest);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.unique_non_invariant);
}

TEST_CASE("depth exhaustion") {
    CHECK_THROWS_AS(seidenberg_reduce(linear_diag(5, 2), 2), DomainError);
    CHECK_THROWS_AS(seidenberg_reduce(linear_diag(3, 2), 0), InputError);
}

TEST_SUITE_END();
