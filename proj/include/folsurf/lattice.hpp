#pragma once

#include <optional>
#include <vector>

#include "folsurf/rational.hpp"

namespace folsurf {

struct CurveMeta {
    int genus = 0;
    bool invariant = true;
    std::optional<int> z_total;     // invariant curves
    std::optional<int> tang_total;  // non-invariant curves
    bool nodal = false;
    // Virtual Euler characteristic -K_X*C - C^2; defaults to 2 - 2g for
    // smooth curves. Required for nodal curves.
    std::optional<Rat> chi;

    Rat chi_value() const;
};

// Negative-definite intersection lattice of exceptional curves.
class ExceptionalLattice {
public:
    explicit ExceptionalLattice(std::vector<std::vector<Int>> gram,
                                std::vector<CurveMeta> meta = {});

    int rank() const { return static_cast<int>(gram_.size()); }
    const std::vector<std::vector<Int>>& gram() const { return gram_; }
    const std::vector<CurveMeta>& meta() const { return meta_; }
    CurveMeta& meta_at(int i) { return meta_[i]; }

    bool negative_definite() const;
    Int determinant() const;

    // Exact solution of gram * a = rhs (fraction-free elimination).
    std::vector<Rat> solve(const std::vector<Rat>& rhs) const;

private:
    std::vector<std::vector<Int>> gram_;
    std::vector<CurveMeta> meta_;
};

struct WeilDivisorData {
    std::vector<Rat> b;  // b_i = Dtilde * E_i
    std::optional<Rat> self_pairing;
};

// Coefficients a with (Dtilde + sum a_j E_j) * E_i = 0 for all i.
std::vector<Rat> mumford_pullback(const ExceptionalLattice& lat, const WeilDivisorData& d);

// Pairing of the two full pullbacks; cross is Dtilde1 * Dtilde2.
Rat intersection_number(const ExceptionalLattice& lat, const WeilDivisorData& d1,
                        const WeilDivisorData& d2, const Rat& cross);

// a with K_Y - sum a_j E_j orthogonal to every E_i (K_Y*E_i = 2g - 2 - E_i^2).
std::vector<Rat> ordinary_discrepancies(const ExceptionalLattice& lat);

// Same for K_G, with K_G*E_i = z_total - chi (invariant) or tang - E_i^2
// (non-invariant).
std::vector<Rat> foliated_discrepancies(const ExceptionalLattice& lat);

struct EpsilonResult {
    bool pass;
    Rat value_at_eps;
    std::optional<Rat> threshold;  // smallest eps that passes, when slope >= 0
};

// Affine test a(t) = (1-t)*fol + t*ord: passes iff the slope is >= 0 and
// a(eps) >= 0.
EpsilonResult epsilon_canonical_test(const Rat& fol, const Rat& ord, const Rat& eps);

}  // namespace folsurf
