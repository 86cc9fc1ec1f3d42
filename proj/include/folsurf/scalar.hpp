#pragma once

#include <optional>
#include <string>

#include "folsurf/rational.hpp"

namespace folsurf {

// Exact number: either a rational, or a + b*sqrt(d) in one fixed real
// quadratic extension. Arithmetic mixing two distinct extensions throws.
class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(const Rat& r) : a_(r), b_(0), d_(0) {}  // NOLINT: implicit by design
    Scalar(long n) : a_(n), b_(0), d_(0) {}        // NOLINT

    // a + b*sqrt(d); d must be squarefree and >= 2 when b != 0.
    static Scalar quadratic(const Rat& a, const Rat& b, const Int& d);

    // Exact square root of a nonnegative rational.
    static Scalar sqrt_of(const Rat& r);

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    const Int& radicand() const { return d_; }

    // Rational value; throws if irrational.
    const Rat& as_rational() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Sign of the real value (-1, 0, 1).
    int sign() const;
    bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }

    Scalar reciprocal() const;

    // True iff the value is a positive rational (the "lambda in Q+" test).
    bool is_positive_rational() const { return is_rational() && a_ > 0; }

    std::string to_string() const;

private:
    Rat a_, b_;
    Int d_;  // 0 encodes "rational"

    void normalize();
    void check_compatible(const Scalar& o) const;
};

}  // namespace folsurf
