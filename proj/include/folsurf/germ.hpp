#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folsurf/poly.hpp"
#include "folsurf/scalar.hpp"

namespace folsurf {

// Plane vector field v = f*dx + g*dy, kept saturated (gcd(f,g) = 1).
class PlaneGerm {
public:
    PlaneGerm(Poly f, Poly g);

    const Poly& f() const { return f_; }
    const Poly& g() const { return g_; }

    // Dual 1-form is g*dx - f*dy.
    bool is_singular_at_origin() const;
    bool vanishes_at(const Rat& x0, const Rat& y0) const;

    // Linear part at the origin: {a, b, c, d} with f = a*x + b*y + h.o.t.,
    // g = c*x + d*y + h.o.t.
    std::array<Rat, 4> linear_part() const;

    PlaneGerm translated(const Rat& x0, const Rat& y0) const;
    // Swap x <-> y together with f <-> g (same field, mirrored chart).
    PlaneGerm swapped() const;

    std::string to_string() const;
    static PlaneGerm parse(const std::string& text);

private:
    Poly f_, g_;
};

enum class GermKind { NonSingular, NonDegenerate, SaddleNode, NilpotentOrDegenerate };

std::string germ_kind_name(GermKind k);

struct SingularityClass {
    GermKind kind = GermKind::NonSingular;
    bool semi_reduced = false;
    bool reduced = false;
    // False for a complex-conjugate eigenvalue pair; lambda is then known
    // rational only in the trace-zero case (lambda = -1).
    bool eigen_real = true;
    // Canonical representative of the unordered pair {lambda, 1/lambda}:
    // the one with |value| <= 1, nonnegative on ties.
    std::optional<Scalar> lambda;
    Rat trace, det;

    std::string to_string() const;
};

SingularityClass classify_at_origin(const PlaneGerm& v);

struct SingularPoint {
    Rat x, y;
    SingularityClass cls;
};

// All common rational zeros of (f, g), via resultants + rational roots.
// Singular points with irrational coordinates are not found.
std::vector<SingularPoint> singular_points_rational(const PlaneGerm& v, int degree_cap);

// One-parameter family: coefficients are rational functions in t.
class ParamGerm {
public:
    using Exp = std::pair<int, int>;

    ParamGerm(std::map<Exp, RatFun> f, std::map<Exp, RatFun> g);

    const std::map<Exp, RatFun>& f_terms() const { return f_; }
    const std::map<Exp, RatFun>& g_terms() const { return g_; }
    RatFun f_coeff(int i, int j) const;
    RatFun g_coeff(int i, int j) const;

    PlaneGerm at(const Rat& t) const;

    static ParamGerm parse(const std::string& text);

private:
    std::map<Exp, RatFun> f_, g_;
};

// s(t) = trace^2/det of the linear part; lambda(t) + 1/lambda(t) = s(t) - 2.
RatFun eigenvalue_function(const ParamGerm& v);

// Rational t with eigenvalue ratio lambda0 (up to reciprocal), sorted.
std::vector<Rat> solve_lambda(const ParamGerm& v, const Rat& lambda0);

}  // namespace folsurf
