#include "folsurf/poly.hpp"

#include <algorithm>

namespace folsurf {

Poly::Poly(const Rat& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

Poly Poly::monomial(int i, int j, const Rat& c) {
    Poly p;
    if (c != 0) p.terms_[{i, j}] = c;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
}

Rat Poly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::deg_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int Poly::deg_y() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

int Poly::order() const {
    if (terms_.empty()) return -1;
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = e.first + e.second;
        if (d < 0 || t < d) d = t;
    }
    return d;
}

void Poly::add_term(int i, int j, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
        terms_[{i, j}] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p;
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e.first, e.second, c);
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly p;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            p.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return p;
}

Poly Poly::operator*(const Rat& c) const {
    Poly p;
    if (c == 0) return p;
    for (const auto& [e, k] : terms_) p.terms_[e] = k * c;
    return p;
}

Rat Poly::eval(const Rat& x, const Rat& y) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < e.first; ++i) t *= x;
        for (int j = 0; j < e.second; ++j) t *= y;
        acc += t;
    }
    return acc;
}

Poly Poly::derivative_x() const {
    Poly p;
    for (const auto& [e, c] : terms_)
        if (e.first > 0) p.add_term(e.first - 1, e.second, c * Rat(e.first));
    return p;
}

Poly Poly::derivative_y() const {
    Poly p;
    for (const auto& [e, c] : terms_)
        if (e.second > 0) p.add_term(e.first, e.second - 1, c * Rat(e.second));
    return p;
}

Poly Poly::swap_xy() const {
    Poly p;
    for (const auto& [e, c] : terms_) p.terms_[{e.second, e.first}] = c;
    return p;
}

Poly Poly::compose(const Poly& px, const Poly& py) const {
    std::vector<Poly> xp{Poly(Rat(1))}, yp{Poly(Rat(1))};
    auto xpow = [&](int k) -> const Poly& {
        while (static_cast<int>(xp.size()) <= k) xp.push_back(xp.back() * px);
        return xp[k];
    };
    auto ypow = [&](int k) -> const Poly& {
        while (static_cast<int>(yp.size()) <= k) yp.push_back(yp.back() * py);
        return yp[k];
    };
    Poly out;
    for (const auto& [e, c] : terms_) out = out + xpow(e.first) * ypow(e.second) * c;
    return out;
}

Poly Poly::translate(const Rat& a, const Rat& b) const {
    return compose(Poly::x() + Poly(a), Poly::y() + Poly(b));
}

Poly Poly::truncate_total_degree(int n) const {
    Poly p;
    for (const auto& [e, c] : terms_)
        if (e.first + e.second <= n) p.terms_[e] = c;
    return p;
}

UPoly Poly::restrict_x0() const {
    std::vector<Rat> v(deg_y() + 1 > 0 ? deg_y() + 1 : 0, Rat(0));
    for (const auto& [e, c] : terms_)
        if (e.first == 0) v[e.second] = c;
    return UPoly(std::move(v));
}

UPoly Poly::restrict_y0() const {
    std::vector<Rat> v(deg_x() + 1 > 0 ? deg_x() + 1 : 0, Rat(0));
    for (const auto& [e, c] : terms_)
        if (e.second == 0) v[e.first] = c;
    return UPoly(std::move(v));
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    Poly r = *this, q;
    // Graded-lex leading term of d.
    auto lead = [](const Poly& p) {
        auto best = p.terms_.begin();
        for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it) {
            auto key = [](const Exp& e) { return std::make_tuple(e.first + e.second, e.first); };
            if (key(it->first) > key(best->first)) best = it;
        }
        return *best;
    };
    auto [de, dc] = lead(d);
    while (!r.is_zero()) {
        auto [re, rc] = lead(r);
        int di = re.first - de.first, dj = re.second - de.second;
        if (di < 0 || dj < 0) return std::nullopt;
        Poly m = monomial(di, dj, rc / dc);
        q = q + m;
        r = r - m * d;
    }
    return q;
}

namespace {

// View as a polynomial in y with coefficients in Q[x].
std::vector<UPoly> to_y_coeffs(const Poly& p) {
    std::vector<std::vector<Rat>> raw(p.deg_y() + 1 > 0 ? p.deg_y() + 1 : 0);
    for (auto& row : raw) row.assign(p.deg_x() + 1 > 0 ? p.deg_x() + 1 : 1, Rat(0));
    for (const auto& [e, c] : p.terms()) raw[e.second][e.first] = c;
    std::vector<UPoly> out;
    out.reserve(raw.size());
    for (auto& row : raw) out.emplace_back(std::move(row));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

Poly from_y_coeffs(const std::vector<UPoly>& v) {
    Poly p;
    for (std::size_t j = 0; j < v.size(); ++j)
        for (int i = 0; i <= v[j].degree(); ++i)
            p = p + Poly::monomial(i, static_cast<int>(j), v[j].coeff(i));
    return p;
}

UPoly content_y(const std::vector<UPoly>& v) {
    UPoly g;
    for (const auto& c : v) g = UPoly::gcd(g, c);
    return g;
}

std::vector<UPoly> divide_by_content(const std::vector<UPoly>& v, const UPoly& cont) {
    std::vector<UPoly> out;
    out.reserve(v.size());
    for (const auto& c : v) {
        auto q = c.divide_exact(cont);
        if (!q) throw DomainError("content division failed");
        out.push_back(*q);
    }
    return out;
}

// Pseudo-remainder of a by b in y over Q[x].
std::vector<UPoly> prem_y(std::vector<UPoly> a, const std::vector<UPoly>& b) {
    int db = static_cast<int>(b.size()) - 1;
    const UPoly& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db) {
        int k = static_cast<int>(a.size()) - 1 - db;
        UPoly la = a.back();
        // a := lb*a - la*y^k*b
        for (auto& c : a) c = c * lb;
        for (int i = 0; i <= db; ++i) a[i + k] = a[i + k] - la * b[i];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto va = to_y_coeffs(a), vb = to_y_coeffs(b);
    UPoly ca = content_y(va), cb = content_y(vb);
    UPoly cg = UPoly::gcd(ca, cb);
    auto pa = divide_by_content(va, ca);
    auto pb = divide_by_content(vb, cb);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    // Primitive PRS on the y-primitive parts.
    while (pb.size() > 1) {
        auto r = prem_y(pa, pb);
        if (r.empty()) {
            // pb divides pa: gcd of primitive parts is pb
            Poly g = from_y_coeffs(pb);
            return g * from_y_coeffs({cg});
        }
        UPoly cr = content_y(r);
        pa = std::move(pb);
        pb = divide_by_content(r, cr);
    }
    // Primitive parts are coprime in y; gcd is the content gcd.
    return from_y_coeffs({cg});
}

Poly Poly::shift_y_series(const UPoly& s, int n) const {
    Poly sy = Poly::y();
    for (int i = 0; i <= s.degree(); ++i)
        sy = sy + Poly::monomial(i, 0, s.coeff(i));
    Poly out;
    // Truncate intermediate powers to keep the series substitution cheap.
    std::vector<Poly> yp{Poly(Rat(1))};
    auto ypow = [&](int k) -> const Poly& {
        while (static_cast<int>(yp.size()) <= k)
            yp.push_back((yp.back() * sy).truncate_total_degree(n));
        return yp[k];
    };
    for (const auto& [e, c] : terms_)
        out = out + (Poly::monomial(e.first, 0, c) * ypow(e.second)).truncate_total_degree(n);
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exp, Rat>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::string out;
    for (const auto& [e, c] : sorted) {
        if (!out.empty()) out += (c > 0 ? " + " : " - ");
        else if (c < 0) out += "-";
        Rat ac = c > 0 ? c : Rat(-c);
        bool monic = (ac == 1 && (e.first > 0 || e.second > 0));
        std::string term;
        if (!monic) term = rat_to_string(ac);
        auto var = [&term](const char* v, int k) {
            if (k == 0) return;
            if (!term.empty()) term += "*";
            term += v;
            if (k > 1) term += "^" + std::to_string(k);
        };
        var("x", e.first);
        var("y", e.second);
        out += term;
    }
    return out;
}

UPoly resultant_y(const Poly& p, const Poly& q) {
    auto a = to_y_coeffs(p), b = to_y_coeffs(q);
    int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
    if (m < 0 || n < 0) return UPoly();
    if (m == 0 && n == 0) return UPoly(Rat(1));
    int size = m + n;
    std::vector<std::vector<UPoly>> M(size, std::vector<UPoly>(size, UPoly()));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[r][r + m - i] = a[i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[n + r][r + n - i] = b[i];
    // Fraction-free Bareiss elimination over Q[x].
    UPoly prev(Rat(1));
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (M[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < size; ++r)
                if (!M[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return UPoly();  // singular: resultant 0
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                UPoly t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                auto d = t.divide_exact(prev);
                if (!d) throw DomainError("Bareiss exact division failed");
                M[i][j] = *d;
            }
            M[i][k] = UPoly();
        }
        prev = M[k][k];
    }
    UPoly det = M[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

}  // namespace folsurf
