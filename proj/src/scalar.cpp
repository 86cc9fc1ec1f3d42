#include "folsurf/scalar.hpp"

namespace folsurf {

Scalar Scalar::quadratic(const Rat& a, const Rat& b, const Int& d) {
    if (b != 0 && d < 2) throw DomainError("quadratic scalar needs d >= 2");
    Scalar s;
    s.a_ = a;
    s.b_ = b;
    s.d_ = d;
    s.normalize();
    return s;
}

Scalar Scalar::sqrt_of(const Rat& r) {
    if (r < 0) throw DomainError("sqrt of a negative rational");
    if (r == 0) return Scalar(Rat(0));
    Rat root;
    if (rat_is_square(r, root)) return Scalar(root);
    // r = n/m: sqrt(r) = sqrt(n*m)/m
    Int nm = rat_num(r) * rat_den(r);
    auto [sq, d] = squarefree_decompose(nm);
    return quadratic(Rat(0), Rat(sq, rat_den(r)), d);
}

void Scalar::normalize() {
    if (b_ == 0) d_ = 0;
}

void Scalar::check_compatible(const Scalar& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
        throw DomainError("mixing distinct quadratic extensions: sqrt(" + d_.str() +
                          ") vs sqrt(" + o.d_.str() + ")");
}

const Rat& Scalar::as_rational() const {
    if (!is_rational()) throw DomainError("scalar is irrational: " + to_string());
    return a_;
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    s.a_ = -s.a_;
    s.b_ = -s.b_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_compatible(o);
    Scalar s;
    s.a_ = a_ + o.a_;
    s.b_ = b_ + o.b_;
    s.d_ = d_ != 0 ? d_ : o.d_;
    s.normalize();
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_compatible(o);
    Int d = d_ != 0 ? d_ : o.d_;
    Scalar s;
    s.a_ = a_ * o.a_ + b_ * o.b_ * Rat(d);
    s.b_ = a_ * o.b_ + b_ * o.a_;
    s.d_ = d;
    s.normalize();
    return s;
}

Scalar Scalar::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    if (is_rational()) return Scalar(Rat(1) / a_);
    // 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d)
    Rat norm = a_ * a_ - b_ * b_ * Rat(d_);
    if (norm == 0) throw DomainError("non-squarefree radicand in scalar");
    return quadratic(a_ / norm, -b_ / norm, d_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.reciprocal(); }

bool Scalar::operator==(const Scalar& o) const {
    return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
}

int Scalar::sign() const {
    if (b_ == 0) return rat_sign(a_);
    if (a_ == 0) return rat_sign(b_);
    int sa = rat_sign(a_), sb = rat_sign(b_);
    if (sa == sb) return sa;
    // sign(a + b sqrt d) with opposite signs: compare a^2 vs b^2 d
    int cmp = rat_sign(a_ * a_ - b_ * b_ * Rat(d_));
    return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

std::string Scalar::to_string() const {
    if (is_rational()) return rat_to_string(a_);
    std::string out = rat_to_string(a_);
    out += (b_ > 0 ? "+" : "-");
    Rat ab = b_ > 0 ? b_ : Rat(-b_);
    if (ab != 1) out += rat_to_string(ab) + "*";
    out += "sqrt(" + d_.str() + ")";
    return out;
}

}  // namespace folsurf
