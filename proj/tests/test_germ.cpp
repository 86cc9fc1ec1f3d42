#include <doctest.h>

#include <random>

#include "folsurf/germ.hpp"

using namespace folsurf;

TEST_SUITE_BEGIN("germ");

TEST_CASE("parse simple germs") {
    PlaneGerm v = PlaneGerm::parse("x*dx + 4*y*dy");
    CHECK(v.f() == Poly::x());
    CHECK(v.g() == Poly::y() * Rat(4));

    PlaneGerm w = PlaneGerm::parse("2*x*dx + 5*y*dy");
    CHECK(w.f() == Poly::x() * Rat(2));
    CHECK(w.g() == Poly::y() * Rat(5));
}

TEST_CASE("parse saturates common factors") {
    PlaneGerm v = PlaneGerm::parse("x*(x*dx + y*dy)");
    CHECK(v.f() == Poly::x());
    CHECK(v.g() == Poly::y());
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(PlaneGerm::parse("x*dx + "), ParseError);
    CHECK_THROWS_AS(PlaneGerm::parse("x&y"), ParseError);
    CHECK_THROWS_AS(PlaneGerm::parse("x*y"), ParseError);  // no dx/dy
    CHECK_THROWS_AS(PlaneGerm::parse("dx*dy"), ParseError);
    CHECK_THROWS_AS(PlaneGerm::parse("t*x*dx + y*dy"), ParseError);
    CHECK_THROWS_AS(PlaneGerm::parse("0*dx + 0*dy"), InputError);
    try {
        PlaneGerm::parse("x*dx % y*dy");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
    }
}

TEST_CASE("printer round-trips") {
    for (const char* text : {"x*dx + 4*y*dy", "2*x*dx + 5*y*dy", "x*dx - y*dy",
                             "x^2*y*dx + 3*x*dy - 1/2*dy", "dx", "-dx + y^3*dy"}) {
        PlaneGerm v = PlaneGerm::parse(text);
        PlaneGerm w = PlaneGerm::parse(v.to_string());
        CHECK(w.f() == v.f());
        CHECK(w.g() == v.g());
    }
    CHECK(PlaneGerm::parse("x*dx + 4*y*dy").to_string() == "x*dx + 4*y*dy");
}

TEST_CASE("classify: positive rational ratio is not reduced") {
    auto c = classify_at_origin(PlaneGerm::parse("x*dx + 4*y*dy"));
    CHECK(c.kind == GermKind::NonDegenerate);
    CHECK(c.semi_reduced);
    CHECK_FALSE(c.reduced);
    REQUIRE(c.lambda.has_value());
    CHECK(c.lambda->as_rational() == Rat(1, 4));  // representative of {4, 1/4}
}

TEST_CASE("classify: negative ratio is reduced") {
    auto c = classify_at_origin(PlaneGerm::parse("x*dx - y*dy"));
    CHECK(c.kind == GermKind::NonDegenerate);
    CHECK(c.reduced);
    CHECK(c.lambda->as_rational() == Rat(-1));
}

TEST_CASE("classify: saddle-node") {
    auto c = classify_at_origin(PlaneGerm::parse("x*dx + y^2*dy"));
    CHECK(c.kind == GermKind::SaddleNode);
    CHECK(c.semi_reduced);
    CHECK(c.reduced);
    CHECK(c.lambda->as_rational() == Rat(0));
}

TEST_CASE("classify: complex pair is reduced") {
    // (x+y)dx + (-x+y)dy: char poly t^2 - 2t + 2, disc -4
    auto c = classify_at_origin(PlaneGerm::parse("(x+y)*dx + (-x+y)*dy"));
    CHECK(c.kind == GermKind::NonDegenerate);
    CHECK_FALSE(c.eigen_real);
    CHECK(c.reduced);
    CHECK_FALSE(c.lambda.has_value());  // ratio irrational
}

TEST_CASE("classify: irrational real ratio is reduced") {
    // x*dx + (x+3y)*dy has eigenvalues 1, 3 -> rational; use trace 1 det -1:
    // f = y, g = x + y: eigenvalues (1 +- sqrt 5)/2, ratio irrational
    auto c = classify_at_origin(PlaneGerm::parse("y*dx + (x+y)*dy"));
    CHECK(c.kind == GermKind::NonDegenerate);
    CHECK(c.eigen_real);
    CHECK(c.reduced);
    REQUIRE(c.lambda.has_value());
    CHECK_FALSE(c.lambda->is_rational());
}

TEST_CASE("classify: nonsingular and nilpotent") {
    auto c = classify_at_origin(PlaneGerm::parse("dx"));
    CHECK(c.kind == GermKind::NonSingular);
    CHECK_FALSE(c.semi_reduced);
    CHECK_FALSE(c.reduced);
    auto n = classify_at_origin(PlaneGerm::parse("y*dx + x^2*dy"));
    CHECK(n.kind == GermKind::NilpotentOrDegenerate);
    CHECK_FALSE(n.semi_reduced);
}

TEST_CASE("classification is invariant under linear conjugation") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coef(-3, 3);
    PlaneGerm v = PlaneGerm::parse("2*x*dx + 5*y*dy");
    auto base = classify_at_origin(v);
    int done = 0;
    while (done < 12) {
        Rat p(coef(rng)), q(coef(rng)), r(coef(rng)), s(coef(rng));
        if (p * s - q * r == 0) continue;
        // w = M^{-1} v(Mx) with M = [[p,q],[r,s]]
        Poly nx = Poly::x() * p + Poly::y() * q;
        Poly ny = Poly::x() * r + Poly::y() * s;
        Poly fc = v.f().compose(nx, ny), gc = v.g().compose(nx, ny);
        Rat det = p * s - q * r;
        Poly nf = (fc * s - gc * q) * (1 / det);
        Poly ng = (gc * p - fc * r) * (1 / det);
        auto c = classify_at_origin(PlaneGerm(nf, ng));
        CHECK(c.kind == base.kind);
        CHECK(c.reduced == base.reduced);
        CHECK(*c.lambda == *base.lambda);
        ++done;
    }
}

TEST_CASE("eigen pair closed under reciprocal (swap x,y)") {
    for (const char* text : {"2*x*dx + 5*y*dy", "x*dx - 3*y*dy", "y*dx + (x+y)*dy"}) {
        PlaneGerm v = PlaneGerm::parse(text);
        auto a = classify_at_origin(v);
        auto b = classify_at_origin(v.swapped());
        CHECK(*a.lambda == *b.lambda);
    }
}

TEST_CASE("singular points with rational coordinates") {
    auto pts = singular_points_rational(PlaneGerm::parse("x*dx + y*dy"), 8);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].x == 0);
    CHECK(pts[0].y == 0);

    auto two = singular_points_rational(PlaneGerm::parse("(x^2-x)*dx + y*dy"), 8);
    REQUIRE(two.size() == 2);
    CHECK(two[0].x == 0);
    CHECK(two[1].x == 1);
    CHECK(two[1].y == 0);

    CHECK(singular_points_rational(PlaneGerm::parse("dx"), 8).empty());
    CHECK_THROWS_AS(singular_points_rational(PlaneGerm::parse("x^9*dx + y*dy"), 8), DomainError);
}

TEST_CASE("eigenvalue function of a family") {
    ParamGerm v = ParamGerm::parse("x*dx + t*y*dy");
    RatFun s = eigenvalue_function(v);
    // (1+t)^2 / t
    CHECK(s.num() == UPoly(std::vector<Rat>{Rat(1), Rat(2), Rat(1)}));
    CHECK(s.den() == UPoly(std::vector<Rat>{Rat(0), Rat(1)}));

    auto one = solve_lambda(v, Rat(1));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Rat(1));

    auto four = solve_lambda(v, Rat(4));
    REQUIRE(four.size() == 2);
    CHECK(four[0] == Rat(1, 4));
    CHECK(four[1] == Rat(4));
}

TEST_CASE("family with upper-triangular linear part") {
    ParamGerm v = ParamGerm::parse("(t*x+y)*dx + y*dy");
    RatFun s = eigenvalue_function(v);
    CHECK(s.num() == UPoly(std::vector<Rat>{Rat(1), Rat(2), Rat(1)}));
    CHECK(s.den() == UPoly(std::vector<Rat>{Rat(0), Rat(1)}));
    CHECK_THROWS_AS(eigenvalue_function(ParamGerm::parse("y*dx")), DomainError);
}

TEST_CASE("family evaluation at a parameter value") {
    ParamGerm v = ParamGerm::parse("x*dx + t*y*dy");
    PlaneGerm w = v.at(Rat(5));
    CHECK(w.g() == Poly::y() * Rat(5));
    auto c = classify_at_origin(v.at(Rat(-2)));
    CHECK(c.reduced);
}

TEST_SUITE_END();
