#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folsurf/upoly.hpp"

namespace folsurf {

// Sparse bivariate polynomial over Q in x, y.
class Poly {
public:
    using Exp = std::pair<int, int>;  // (x exponent, y exponent)

    Poly() = default;
    Poly(const Rat& c);  // NOLINT
    static Poly monomial(int i, int j, const Rat& c = Rat(1));
    static Poly x() { return monomial(1, 0); }
    static Poly y() { return monomial(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Exp, Rat>& terms() const { return terms_; }
    Rat coeff(int i, int j) const;
    int deg_x() const;
    int deg_y() const;
    int total_degree() const;  // -1 for zero
    int order() const;         // minimal total degree of a term; -1 for zero

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Rat eval(const Rat& x, const Rat& y) const;
    Poly derivative_x() const;
    Poly derivative_y() const;
    Poly swap_xy() const;
    Poly translate(const Rat& a, const Rat& b) const;  // p(x+a, y+b)
    Poly compose(const Poly& px, const Poly& py) const;
    Poly truncate_total_degree(int n) const;  // keep terms of total degree <= n

    UPoly restrict_x0() const;  // p(0, y) as a polynomial in y
    UPoly restrict_y0() const;  // p(x, 0) as a polynomial in x

    std::optional<Poly> divide_exact(const Poly& d) const;
    bool divisible_by(const Poly& d) const { return divide_exact(d).has_value(); }

    static Poly gcd(const Poly& a, const Poly& b);

    // Substitute y -> y + s(x), truncating at total degree n.
    Poly shift_y_series(const UPoly& s, int n) const;

    // Graded-lex term order, "x^2*y + 3*x - 1/2" style.
    std::string to_string() const;

private:
    std::map<Exp, Rat> terms_;
    void add_term(int i, int j, const Rat& c);
};

// Resultant of p and q with respect to y: a polynomial in x.
UPoly resultant_y(const Poly& p, const Poly& q);

}  // namespace folsurf
