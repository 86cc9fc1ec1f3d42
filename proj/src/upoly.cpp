#include "folsurf/upoly.hpp"

#include <algorithm>

namespace folsurf {

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly UPoly::monomial(int k, const Rat& c) {
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return UPoly(std::move(v));
}

int UPoly::order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

Rat UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

Rat UPoly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

UPoly UPoly::operator-() const {
    std::vector<Rat> v(coeffs_);
    for (auto& c : v) c = -c;
    return UPoly(std::move(v));
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return UPoly(std::move(v));
}

UPoly UPoly::operator*(const Rat& c) const {
    std::vector<Rat> v(coeffs_);
    for (auto& x : v) x *= c;
    return UPoly(std::move(v));
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) return UPoly();
    std::vector<Rat> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rat(Int(i));
    return UPoly(std::move(v));
}

UPoly UPoly::translate(const Rat& a) const {
    // Horner on p(t+a)
    UPoly result;
    UPoly shift(std::vector<Rat>{a, Rat(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        result = result * shift + UPoly(*it);
    return result;
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& d) const {
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    UPoly r = *this;
    std::vector<Rat> q(std::max<int>(degree() - d.degree() + 1, 0), Rat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rat c = r.leading() / d.leading();
        q[k] = c;
        r = r - d * UPoly::monomial(k, c);
    }
    return {UPoly(std::move(q)), r};
}

std::optional<UPoly> UPoly::divide_exact(const UPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.leading());
}

UPoly UPoly::inverse_series(int n) const {
    if (coeff(0) == 0) throw DomainError("series inverse needs nonzero constant term");
    std::vector<Rat> inv(n, Rat(0));
    inv[0] = Rat(1) / coeff(0);
    for (int k = 1; k < n; ++k) {
        Rat acc(0);
        for (int i = 1; i <= k; ++i) acc += coeff(i) * inv[k - i];
        inv[k] = -acc / coeff(0);
    }
    return UPoly(std::move(inv));
}

UPoly UPoly::truncate(int n) const {
    if (n <= 0) return UPoly();
    std::vector<Rat> v(coeffs_.begin(),
                       coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), n));
    return UPoly(std::move(v));
}

namespace {

std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> primes, exps_base;
    std::vector<int> exps;
    for (Int p = 2; p * p <= n && p < 1000000; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        primes.push_back(p);
        exps.push_back(e);
    }
    if (n > 1) {
        primes.push_back(n);
        exps.push_back(1);
    }
    std::vector<Int> divs{1};
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::vector<Int> next;
        Int pk = 1;
        for (int e = 0; e <= exps[i]; ++e) {
            for (const auto& d : divs) next.push_back(d * pk);
            pk *= primes[i];
        }
        divs = std::move(next);
    }
    return divs;
}

}  // namespace

std::vector<Rat> UPoly::rational_roots() const {
    std::vector<Rat> roots;
    if (is_zero() || is_constant()) return roots;
    // Scale to a primitive integer polynomial and strip the power of t.
    Int denlcm = 1;
    for (const auto& c : coeffs_) denlcm = lcm_int(denlcm, rat_den(c));
    std::vector<Int> ic(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        ic[i] = rat_num(coeffs_[i]) * (denlcm / rat_den(coeffs_[i]));
    std::size_t lo = 0;
    while (ic[lo] == 0) ++lo;
    if (lo > 0) roots.push_back(Rat(0));
    if (lo + 1 == ic.size()) return roots;
    Int a0 = ic[lo], an = ic.back();
    for (const auto& p : positive_divisors(a0)) {
        for (const auto& q : positive_divisors(an)) {
            if (gcd_int(p, q) != 1) continue;
            for (int s : {1, -1}) {
                Rat cand(s * p, q);
                if (eval(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

int UPoly::root_multiplicity(const Rat& r) const {
    if (is_zero()) throw DomainError("root multiplicity in zero polynomial");
    UPoly p = *this;
    UPoly lin(std::vector<Rat>{-r, Rat(1)});
    int m = 0;
    while (true) {
        auto q = p.divide_exact(lin);
        if (!q) return m;
        p = *q;
        ++m;
    }
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0 ? " + " : " - ");
        else if (c < 0) out += "-";
        Rat ac = c > 0 ? c : Rat(-c);
        bool unit = (ac == 1 && i > 0);
        if (!unit) out += rat_to_string(ac);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RatFun::RatFun(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    reduce();
}

void RatFun::reduce() {
    UPoly g = UPoly::gcd(num_, den_);
    if (!g.is_zero() && g.degree() > 0) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    Rat lead = den_.leading();
    num_ = num_ * (Rat(1) / lead);
    den_ = den_ * (Rat(1) / lead);
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}
RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw DomainError("division by zero rational function");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

std::string RatFun::to_string(const std::string& var) const {
    if (den_ == UPoly(Rat(1))) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace folsurf
