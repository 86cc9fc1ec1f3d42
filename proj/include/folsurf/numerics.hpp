#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folsurf/quotsing.hpp"
#include "folsurf/rational.hpp"

namespace folsurf {

struct SingularityKind {
    enum Tag {
        CartierPoint,
        MildLcNonCanonical,
        GorensteinCanonical,
        TwoGorensteinCanonical,
        NonQGorensteinCanonical,  // cusp
        Terminal,
    };
    Tag tag = CartierPoint;
    std::optional<QuotSingularity> quot;  // Terminal only

    static SingularityKind cartier() { return {CartierPoint, std::nullopt}; }
    static SingularityKind mild_lc() { return {MildLcNonCanonical, std::nullopt}; }
    static SingularityKind gorenstein() { return {GorensteinCanonical, std::nullopt}; }
    static SingularityKind two_gorenstein() { return {TwoGorensteinCanonical, std::nullopt}; }
    static SingularityKind cusp() { return {NonQGorensteinCanonical, std::nullopt}; }
    static SingularityKind terminal(const Int& n, const Int& q) {
        return {Terminal, QuotSingularity(n, q)};
    }

    std::string name() const;
};

// Local Riemann-Roch contribution of m*K_F at the singularity; absent where
// the closed formulas do not apply (terminal points away from m = 1 and
// index-killing m).
std::optional<Rat> local_contribution(const SingularityKind& kind, const Int& m);

struct InvariantSheet {
    Rat KF2, KFKX;
    Int chiO = 0;
    std::vector<SingularityKind> sing;
    // indices; absent encodes infinity
    std::optional<Int> i_X, i_KX, i_F, i_Q;
    std::optional<Int> i_P;

    void validate() const;  // positivity, i_Q | i_F when both finite
};

// P(m) = m^2/2 * KF2 - m/2 * KFKX + chiO + sum of local contributions.
class HilbertFunction {
public:
    explicit HilbertFunction(InvariantSheet sheet);

    const InvariantSheet& sheet() const { return sheet_; }
    Rat operator()(const Int& m) const;  // DomainError when a term is undefined
    Int eval_integer(const Int& m) const;  // additionally asserts integrality

private:
    InvariantSheet sheet_;
};

HilbertFunction hilbert_function(InvariantSheet sheet);

struct ExtractedInvariants {
    Rat B1, B2;  // K_F^2 and K_F * K_X
    Int B3, B4;  // chi(O_X) and the cusp count
    Rat sum_a;   // sum of a(x, K_F) read off P(1)
    Rat sigma_bound;  // |Sigma| <= 4 * (-sum_a)
};

// Recovers the invariants from sampled Hilbert values. Requires samples at
// m = 0, m = 1 and at least three positive multiples of lcm(2, 1..C2_hint)
// (index-killing values, e.g. multiples of (2*C2_hint)!).
ExtractedInvariants extract_invariants(const std::map<Int, Rat>& samples, int C2_hint);

// i(P) = C2!, a common multiple of every local index up to C2.
Int i_p_from_c2(int C2);

struct BoundsRecord {
    Rat gamma;             // max{2*KFKX/KF2 + 3*i_Q, 0}
    int nef_multiple = 3;  // m*i(G)*(K_G + D) nef from here
    int ample_multiple = 4;
    Rat delta;
    Int alpha;  // minimal with (alpha*i_KY + 3)^2 > delta and alpha*i_KY + 3 > delta/2
    Rat degree_bound;  // (alpha*i_KY*(gamma + 4*i_F))^2 * KF2
    std::optional<Int> i_P;
};

// delta defaults to 8 (smooth/du Val) or 4*(edim-1) over terminal quotient
// data, whichever is larger.
BoundsRecord effective_bounds(const InvariantSheet& sheet, const Int& i_KY,
                              std::optional<Rat> delta = std::nullopt);

}  // namespace folsurf
