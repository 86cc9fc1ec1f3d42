#include "folsurf/localindex.hpp"

#include <algorithm>

namespace folsurf {

BranchSpec BranchSpec::smooth(Poly p) {
    if (p.coeff(0, 0) != 0) throw InputError("smooth branch must pass through the origin");
    if (p.coeff(1, 0) == 0 && p.coeff(0, 1) == 0)
        throw InputError("smooth branch needs a nonzero linear part");
    return {Smooth, std::move(p), Rat(0), 0, 0};
}

BranchSpec BranchSpec::cuspidal(const Rat& a, int m, int n) {
    if (a == 0) throw InputError("cuspidal branch needs a nonzero coefficient");
    if (m < 2 || n < 2) throw InputError("cuspidal branch needs m, n >= 2; use a smooth branch");
    if (gcd_int(Int(m), Int(n)) != 1) throw InputError("cuspidal branch needs gcd(m,n) = 1");
    return {Cuspidal, {}, a, m, n};
}

Poly BranchSpec::equation() const {
    switch (kind) {
        case AxisX0: return Poly::x();
        case AxisY0: return Poly::y();
        case Smooth: return defining;
        case Cuspidal:
            return Poly::monomial(m, 0, a) - Poly::monomial(0, n);
    }
    return {};
}

std::string BranchSpec::to_string() const {
    switch (kind) {
        case AxisX0: return "x=0";
        case AxisY0: return "y=0";
        case Smooth: return defining.to_string() + "=0";
        case Cuspidal: return equation().to_string() + "=0";
    }
    return "?";
}

namespace {

Poly lie_derivative(const PlaneGerm& v, const Poly& p) {
    return v.f() * p.derivative_x() + v.g() * p.derivative_y();
}

// ---------------------------------------------------------------------------
// Straightening a smooth branch to y = 0.

struct Straightened {
    Poly f, g;  // field components in coordinates where the branch is y = 0
};

// y-coefficients of p as polynomials in x.
std::vector<UPoly> y_coeffs(const Poly& p) {
    std::vector<std::vector<Rat>> raw(std::max(p.deg_y() + 1, 0));
    for (auto& row : raw) row.assign(std::max(p.deg_x() + 1, 1), Rat(0));
    for (const auto& [e, c] : p.terms()) raw[e.second][e.first] = c;
    std::vector<UPoly> out;
    out.reserve(raw.size());
    for (auto& row : raw) out.emplace_back(std::move(row));
    return out;
}

// p(x, s(x)) truncated mod x^trunc.
UPoly subst_series(const Poly& p, const UPoly& s, int trunc) {
    UPoly acc;
    auto cs = y_coeffs(p);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = (acc * s + *it).truncate(trunc);
    return acc;
}

// Solve p(x, s(x)) = 0 mod x^trunc with s(0) = 0; needs p_y(0,0) != 0.
UPoly solve_branch_series(const Poly& p, int trunc) {
    Rat py0 = p.coeff(0, 1);
    UPoly s;
    for (int k = 1; k < trunc; ++k) {
        UPoly e = subst_series(p, s, k + 1);
        Rat c = e.coeff(k);
        if (c != 0) s = s + UPoly::monomial(k, -c / py0);
    }
    return s;
}

// Move a smooth branch to y = 0 (swapping x and y first when the branch is
// tangent to the y axis).
Straightened straighten(const PlaneGerm& v, const BranchSpec& branch, int trunc) {
    if (branch.kind == BranchSpec::AxisY0) return {v.f(), v.g()};
    if (branch.kind == BranchSpec::AxisX0) {
        PlaneGerm w = v.swapped();
        return {w.f(), w.g()};
    }
    Poly p = branch.defining;
    Poly f = v.f(), g = v.g();
    if (p.coeff(0, 1) == 0) {
        p = p.swap_xy();
        Poly nf = g.swap_xy(), ng = f.swap_xy();
        f = nf;
        g = ng;
    }
    UPoly s = solve_branch_series(p, trunc);
    Poly fs = f.shift_y_series(s, trunc);
    Poly gs = g.shift_y_series(s, trunc);
    UPoly ds = s.derivative();
    Poly dsp;
    for (int i = 0; i <= ds.degree(); ++i) dsp = dsp + Poly::monomial(i, 0, ds.coeff(i));
    return {fs, (gs - dsp * fs).truncate_total_degree(trunc)};
}

// Split g = g0(x) + y*ghat; for an invariant branch g0 vanishes (exactly for
// axes, to high order after truncated straightening).
bool split_invariant(const Poly& g, int trunc, Poly& ghat, bool exact) {
    UPoly g0 = g.restrict_y0();
    if (exact) {
        if (!g0.is_zero()) return false;
    } else {
        if (!g0.is_zero() && g0.order() < trunc - 4) return false;
    }
    Poly h;
    for (const auto& [e, c] : g.terms())
        if (e.second >= 1) h = h + Poly::monomial(e.first, e.second - 1, c);
    ghat = h;
    return true;
}

// CS and Z for the straightened branch y = 0: Z = ord_x f(x,0) and
// CS = Res_{x=0} (g/y)(x,0) / f(x,0) dx.
IndexRecord axis_cs_z(const Poly& f, const Poly& g, int trunc, bool exact) {
    Poly ghat;
    if (!split_invariant(g, trunc, ghat, exact)) throw DomainError("branch is not invariant");
    UPoly d = f.restrict_y0();
    UPoly r = ghat.restrict_y0();
    IndexRecord out;
    out.source = IndexRecord::SeriesOracle;
    if (d.is_zero()) throw DomainError("field vanishes identically on the branch");
    int z = d.order();
    out.z = z;
    // d = x^z * u with u(0) != 0
    std::vector<Rat> uc(d.degree() - z + 1);
    for (int i = 0; i <= d.degree() - z; ++i) uc[i] = d.coeff(i + z);
    UPoly u(std::move(uc));
    UPoly inv = u.inverse_series(z + 1);
    Rat res(0);
    for (int i = 0; i <= z - 1; ++i) res += r.coeff(i) * inv.coeff(z - 1 - i);
    out.cs = Scalar(res);
    return out;
}

// ---------------------------------------------------------------------------
// Cuspidal branch: restriction to the parametrization x = t^n, y = alpha*t^m
// with alpha^n = a, coefficients in Q[alpha]/(alpha^n - a).

using AlgNum = std::vector<Rat>;  // length n

AlgNum alg_zero(int n) { return AlgNum(n, Rat(0)); }

bool alg_is_zero(const AlgNum& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

void alg_add(AlgNum& x, const AlgNum& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
}

AlgNum alg_mul(const AlgNum& x, const AlgNum& y, const Rat& a) {
    int n = static_cast<int>(x.size());
    AlgNum out = alg_zero(n);
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            if (i + j < n)
                out[i + j] += x[i] * y[j];
            else
                out[i + j - n] += x[i] * y[j] * a;
        }
    }
    return out;
}

AlgNum alg_neg(const AlgNum& x) {
    AlgNum out = x;
    for (auto& c : out) c = -c;
    return out;
}

// Inverse in Q[alpha]/(alpha^n - a) via the multiplication matrix.
AlgNum alg_inverse(const AlgNum& b, const Rat& a) {
    int n = static_cast<int>(b.size());
    // columns: b * alpha^j
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n + 1, Rat(0)));
    for (int j = 0; j < n; ++j) {
        AlgNum pw = alg_zero(n);
        pw[j] = 1;
        AlgNum col = alg_mul(b, pw, a);
        for (int i = 0; i < n; ++i) M[i][j] = col[i];
    }
    M[0][n] = 1;  // solve M v = (1,0,...,0)
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw DomainError("series oracle: leading coefficient not invertible");
        std::swap(M[col], M[piv]);
        Rat lead = M[col][col];
        for (auto& x : M[col]) x /= lead;
        for (int r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rat fac = M[r][col];
            for (int c2 = col; c2 <= n; ++c2) M[r][c2] -= fac * M[col][c2];
        }
    }
    AlgNum out(n);
    for (int i = 0; i < n; ++i) out[i] = M[i][n];
    return out;
}

// Restrict a polynomial to the branch: x^i y^j -> alpha^j t^(n*i + m*j).
std::map<int, AlgNum> restrict_to_cusp(const Poly& p, int m, int n, const Rat& a) {
    std::map<int, AlgNum> out;
    for (const auto& [e, c] : p.terms()) {
        int expo = n * e.first + m * e.second;
        int q = e.second / n, r = e.second % n;
        Rat coef = c;
        for (int i = 0; i < q; ++i) coef *= a;
        auto it = out.find(expo);
        if (it == out.end()) it = out.emplace(expo, alg_zero(n)).first;
        it->second[r] += coef;
    }
    for (auto it = out.begin(); it != out.end();)
        it = alg_is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

IndexRecord cuspidal_cs_z(const PlaneGerm& v, const BranchSpec& branch) {
    int m = branch.m, n = branch.n;
    Poly C = branch.equation();
    auto kq = lie_derivative(v, C).divide_exact(C);
    if (!kq) throw DomainError("branch is not invariant");
    // C_y * omega = (-f) dC + C * (k dx): h = -f, eta = k dx
    Poly h = -v.f();
    auto B = restrict_to_cusp(h, m, n, branch.a);
    if (B.empty()) throw DomainError("field vanishes identically on the branch");
    auto A = restrict_to_cusp(*kq, m, n, branch.a);
    int o = B.begin()->first;
    IndexRecord out;
    out.source = IndexRecord::SeriesOracle;
    out.z = o - m * (n - 1);  // ord(h) - ord(C_y) along the branch
    // residue: CS = -n * [t^-n] (k/h)|_C
    int smax = -1;
    for (const auto& [e, c] : A) smax = std::max(smax, o - n - e);
    AlgNum coeff = alg_zero(n);
    if (smax >= 0) {
        // V = inverse of the unit part of B, to length smax+1
        std::vector<AlgNum> V(smax + 1, alg_zero(n));
        AlgNum b0inv = alg_inverse(B.begin()->second, branch.a);
        V[0] = b0inv;
        for (int s = 1; s <= smax; ++s) {
            AlgNum acc = alg_zero(n);
            for (int i = 1; i <= s; ++i) {
                auto it = B.find(o + i);
                if (it == B.end()) continue;
                alg_add(acc, alg_mul(it->second, V[s - i], branch.a));
            }
            V[s] = alg_neg(alg_mul(b0inv, acc, branch.a));
        }
        for (const auto& [e, c] : A) {
            int s = o - n - e;
            if (s >= 0) alg_add(coeff, alg_mul(c, V[s], branch.a));
        }
    }
    for (std::size_t i = 1; i < coeff.size(); ++i)
        if (coeff[i] != 0) throw DomainError("series oracle: irrational residue on cuspidal branch");
    out.cs = Scalar(Rat(-n) * coeff[0]);
    return out;
}

}  // namespace

bool branch_invariant(const PlaneGerm& v, const BranchSpec& branch, int trunc) {
    switch (branch.kind) {
        case BranchSpec::AxisX0: return v.f().divisible_by(Poly::x());
        case BranchSpec::AxisY0: return v.g().divisible_by(Poly::y());
        case BranchSpec::Cuspidal:
            return lie_derivative(v, branch.equation()).divide_exact(branch.equation()).has_value();
        case BranchSpec::Smooth: {
            Straightened s = straighten(v, branch, trunc);
            Poly ghat;
            return split_invariant(s.g, trunc, ghat, /*exact=*/false);
        }
    }
    return false;
}

IndexRecord series_oracle_cs_z(const PlaneGerm& v, const BranchSpec& branch, int trunc) {
    if (branch.kind == BranchSpec::Cuspidal) return cuspidal_cs_z(v, branch);
    bool exact = branch.kind != BranchSpec::Smooth;
    Straightened s = straighten(v, branch, trunc);
    IndexRecord r = axis_cs_z(s.f, s.g, trunc, exact);
    if (!exact) {
        // stabilization check across two truncation levels
        Straightened s2 = straighten(v, branch, trunc + 4);
        IndexRecord r2 = axis_cs_z(s2.f, s2.g, trunc + 4, exact);
        if (r2.z != r.z || !(r2.cs == r.cs))
            throw DomainError("series oracle: truncation insufficient");
    }
    return r;
}

IndexRecord closed_form_cs_z(const PlaneGerm& v, const BranchSpec& branch) {
    if (branch.kind == BranchSpec::Cuspidal) {
        if (!lie_derivative(v, branch.equation()).divide_exact(branch.equation()))
            throw DomainError("branch is not invariant");
        IndexRecord out;
        out.cs = Scalar(Rat(branch.m) * Rat(branch.n));
        out.z = 1 - (branch.m - 1) * (branch.n - 1);
        out.source = IndexRecord::ClosedForm;
        return out;
    }
    bool exact = branch.kind != BranchSpec::Smooth;
    int trunc = 32;
    Straightened s = straighten(v, branch, trunc);
    Poly ghat;
    if (!split_invariant(s.g, trunc, ghat, exact)) throw DomainError("branch is not invariant");
    IndexRecord out;
    if (s.f.coeff(0, 0) != 0) {
        // nonsingular point of the foliation on the branch
        out.cs = Scalar(Rat(0));
        out.z = 0;
        return out;
    }
    Rat a = s.f.coeff(1, 0);   // tangent eigenvalue along the branch
    Rat d = ghat.coeff(0, 0);  // transverse eigenvalue
    Rat det = a * d;  // linear part is triangular: g has no pure-x linear term
    if (det != 0) {
        out.cs = Scalar(d / a);
        out.z = 1;
        return out;
    }
    if (d != 0 && a == 0) {
        // weak separatrix of a saddle-node: nu and k+1 from the series route
        IndexRecord r = axis_cs_z(s.f, s.g, trunc, exact);
        r.source = IndexRecord::ClosedForm;
        return r;
    }
    if (a != 0 && d == 0) {
        // strong separatrix of a saddle-node
        out.cs = Scalar(Rat(0));
        out.z = 1;
        return out;
    }
    // outside the closed-form table: degenerate linear part
    return series_oracle_cs_z(v, branch);
}

Scalar camacho_sad(const PlaneGerm& v, const BranchSpec& branch) {
    return closed_form_cs_z(v, branch).cs;
}

int z_index(const PlaneGerm& v, const BranchSpec& branch) {
    return closed_form_cs_z(v, branch).z;
}

// ---------------------------------------------------------------------------
// Tangency order via plane intersection multiplicity at the origin.

namespace {

int mult_origin(Poly F, Poly G, int depth = 0) {
    if (depth > 512) throw DomainError("intersection multiplicity recursion limit");
    if (F.eval(Rat(0), Rat(0)) != 0 || G.eval(Rat(0), Rat(0)) != 0) return 0;
    if (F.is_zero() || G.is_zero()) throw DomainError("infinite intersection multiplicity");
    while (true) {
        UPoly r = F.restrict_y0();
        UPoly s = G.restrict_y0();
        if (r.is_zero() && s.is_zero()) throw DomainError("infinite intersection multiplicity");
        if (r.is_zero()) {
            Poly F1 = *F.divide_exact(Poly::y());
            return s.order() + mult_origin(F1, G, depth + 1);
        }
        if (s.is_zero()) {
            Poly G1 = *G.divide_exact(Poly::y());
            return r.order() + mult_origin(F, G1, depth + 1);
        }
        if (r.degree() > s.degree()) {
            std::swap(F, G);
            std::swap(r, s);
        }
        // cancel the leading x-term of G(x,0) against F(x,0)
        Rat c = s.leading() / r.leading();
        G = G - F * Poly::monomial(s.degree() - r.degree(), 0, c);
    }
}

}  // namespace

int tangency_order(const PlaneGerm& v, const Poly& curve, const Rat& x0, const Rat& y0) {
    Poly C = curve.translate(x0, y0);
    if (C.coeff(0, 0) != 0) throw InputError("curve does not pass through the point");
    PlaneGerm w = v.translated(x0, y0);
    Poly L = w.f() * C.derivative_x() + w.g() * C.derivative_y();
    if (L.is_zero() || L.divide_exact(C).has_value())
        throw DomainError("tangency undefined, curve invariant");
    Poly g = Poly::gcd(C, L);
    if (!g.is_constant() && g.eval(Rat(0), Rat(0)) == 0)
        throw DomainError("infinite intersection multiplicity");
    return mult_origin(C, L);
}

}  // namespace folsurf
