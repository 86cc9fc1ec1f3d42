#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folsurf/rational.hpp"

namespace folsurf {

// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of t^i.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rat& c) { coeffs_ = {c}; trim(); }  // NOLINT
    explicit UPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UPoly variable() { return UPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static UPoly monomial(int k, const Rat& c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Lowest nonzero exponent; -1 for the zero polynomial.
    int order() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int i) const;
    Rat leading() const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rat& c) const;
    bool operator==(const UPoly& o) const { return coeffs_ == o.coeffs_; }

    Rat eval(const Rat& x) const;
    UPoly derivative() const;
    UPoly translate(const Rat& a) const;  // p(t + a)

    // Euclidean division over the field Q.
    std::pair<UPoly, UPoly> divrem(const UPoly& d) const;
    std::optional<UPoly> divide_exact(const UPoly& d) const;

    static UPoly gcd(UPoly a, UPoly b);  // monic

    // Truncated power-series inverse: q with p*q == 1 mod t^n (needs p(0) != 0).
    UPoly inverse_series(int n) const;
    UPoly truncate(int n) const;  // drop terms t^k with k >= n

    // All rational roots (without multiplicity info; use root_multiplicity).
    std::vector<Rat> rational_roots() const;
    int root_multiplicity(const Rat& r) const;

    std::string to_string(const std::string& var) const;

private:
    std::vector<Rat> coeffs_;
    void trim();
};

// Rational function in one variable, kept reduced with monic denominator.
class RatFun {
public:
    RatFun() : num_(Rat(0)), den_(Rat(1)) {}
    RatFun(UPoly num, UPoly den);
    RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string(const std::string& var) const;

private:
    UPoly num_, den_;
    void reduce();
};

}  // namespace folsurf
