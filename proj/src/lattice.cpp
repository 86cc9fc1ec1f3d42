#include "folsurf/lattice.hpp"

#include <algorithm>

namespace folsurf {

Rat CurveMeta::chi_value() const {
    if (chi) return *chi;
    if (nodal) throw DomainError("nodal curve needs an explicit chi value");
    return Rat(2 - 2 * genus);
}

ExceptionalLattice::ExceptionalLattice(std::vector<std::vector<Int>> gram,
                                       std::vector<CurveMeta> meta)
    : gram_(std::move(gram)), meta_(std::move(meta)) {
    std::size_t n = gram_.size();
    for (const auto& row : gram_)
        if (row.size() != n) throw InputError("gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_[i][i] > -1) throw InputError("gram diagonal entries must be <= -1");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (gram_[i][j] != gram_[j][i]) throw InputError("gram matrix is not symmetric");
            if (gram_[i][j] < 0) throw InputError("gram off-diagonal entries must be >= 0");
        }
    }
    if (meta_.empty()) meta_.resize(n);
    if (meta_.size() != n) throw InputError("curve metadata length mismatch");
}

namespace {

// Bareiss fraction-free determinant of an integer matrix.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

bool ExceptionalLattice::negative_definite() const {
    // leading principal minors alternate: (-1)^k det_k > 0
    int n = rank();
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = gram_[i][j];
        Int d = bareiss_det(std::move(sub));
        if ((k % 2 == 0 && d <= 0) || (k % 2 == 1 && d >= 0)) return false;
    }
    return true;
}

Int ExceptionalLattice::determinant() const { return bareiss_det(gram_); }

std::vector<Rat> ExceptionalLattice::solve(const std::vector<Rat>& rhs) const {
    int n = rank();
    if (static_cast<int>(rhs.size()) != n) throw InputError("rhs length mismatch");
    if (!negative_definite())
        throw DomainError("lattice is not negative definite");
    // scale the rhs to integers, then run Bareiss on the augmented matrix
    Int scale = 1;
    for (const auto& r : rhs) scale = lcm_int(scale, rat_den(r));
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = gram_[i][j];
        m[i][n] = rat_num(rhs[i]) * (scale / rat_den(rhs[i]));
    }
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw DomainError("singular lattice system");
            std::swap(m[k], m[piv]);
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j <= n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        for (int i = k + 1; i < n; ++i) m[i][k] = 0;
        prev = m[k][k];
    }
    std::vector<Rat> a(n);
    for (int i = n - 1; i >= 0; --i) {
        Rat acc(m[i][n]);
        for (int j = i + 1; j < n; ++j) acc -= Rat(m[i][j]) * a[j];
        a[i] = acc / Rat(m[i][i]);
    }
    for (auto& x : a) x /= Rat(scale);
    // re-verify orthogonality
    for (int i = 0; i < n; ++i) {
        Rat acc(0);
        for (int j = 0; j < n; ++j) acc += Rat(gram_[i][j]) * a[j];
        if (acc != rhs[i]) throw DomainError("lattice solve verification failed");
    }
    return a;
}

std::vector<Rat> mumford_pullback(const ExceptionalLattice& lat, const WeilDivisorData& d) {
    std::vector<Rat> rhs(d.b.size());
    for (std::size_t i = 0; i < d.b.size(); ++i) rhs[i] = -d.b[i];
    return lat.solve(rhs);
}

Rat intersection_number(const ExceptionalLattice& lat, const WeilDivisorData& d1,
                        const WeilDivisorData& d2, const Rat& cross) {
    if (d1.b.size() != d2.b.size() || static_cast<int>(d1.b.size()) != lat.rank())
        throw InputError("divisor data rank mismatch");
    std::vector<Rat> a2 = mumford_pullback(lat, d2);
    Rat out = cross;
    // (f*D1)*(f*D2) = cross + b1 . a2  (the remaining terms cancel by
    // orthogonality of the pullbacks)
    for (std::size_t i = 0; i < d1.b.size(); ++i) out += d1.b[i] * a2[i];
    return out;
}

std::vector<Rat> ordinary_discrepancies(const ExceptionalLattice& lat) {
    int n = lat.rank();
    std::vector<Rat> rhs(n);
    for (int i = 0; i < n; ++i) {
        const CurveMeta& m = lat.meta()[i];
        // K_Y * E_i = -chi - E_i^2
        rhs[i] = -m.chi_value() - Rat(lat.gram()[i][i]);
    }
    return lat.solve(rhs);
}

std::vector<Rat> foliated_discrepancies(const ExceptionalLattice& lat) {
    int n = lat.rank();
    std::vector<Rat> rhs(n);
    for (int i = 0; i < n; ++i) {
        const CurveMeta& m = lat.meta()[i];
        if (m.invariant) {
            if (!m.z_total) throw DomainError("invariant curve without z_total");
            rhs[i] = Rat(*m.z_total) - m.chi_value();
        } else {
            if (!m.tang_total) throw DomainError("non-invariant curve without tang_total");
            rhs[i] = Rat(*m.tang_total) - Rat(lat.gram()[i][i]);
        }
    }
    return lat.solve(rhs);
}

EpsilonResult epsilon_canonical_test(const Rat& fol, const Rat& ord, const Rat& eps) {
    EpsilonResult out;
    Rat slope = ord - fol;
    out.value_at_eps = (1 - eps) * fol + eps * ord;
    out.pass = slope >= 0 && out.value_at_eps >= 0;
    if (slope >= 0) {
        if (fol >= 0)
            out.threshold = Rat(0);
        else if (slope > 0)
            out.threshold = fol / (fol - ord);
        // fol < 0 with zero slope: never nonnegative, no threshold
    }
    return out;
}

}  // namespace folsurf
