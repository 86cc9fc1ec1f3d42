#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folsurf/dualgraph.hpp"
#include "folsurf/lattice.hpp"
#include "folsurf/rational.hpp"

namespace folsurf {

// Cyclic quotient singularity of type 1/n(1,q).
struct QuotSingularity {
    Int n, q;

    QuotSingularity(Int n_, Int q_);

    // Normal form of 1/n(a,b): multiply the weights by a^{-1} mod n.
    static QuotSingularity from_weights(const Int& n, const Int& a, const Int& b);
};

struct HJData {
    std::vector<Int> res_chain;   // n/q = [b_1,...,b_r], self-intersections -b_i
    std::vector<Int> edim_chain;  // n/(n-q) = [a_1,...,a_k]
    int edim_bound = 0;           // k + 2
};

// Minus-sign continued fraction [b_1,...,b_r] = b_1 - 1/(b_2 - 1/(...)).
Rat hj_evaluate(const std::vector<Int>& chain);

HJData hj_expand(const QuotSingularity& s);

// Intersection lattice of the resolution chain (genus-0 invariant curves).
ExceptionalLattice resolution_lattice(const HJData& hj);

// Linear form c0 + c1*lambda.
struct LinForm {
    Rat c0, c1;

    Rat at(const Rat& lambda) const { return c0 + c1 * lambda; }
    // The unique rational zero; absent for constant nonzero forms.
    std::optional<Rat> zero() const;
    std::string to_string() const;
};

// One chart of the resolved quotient with the diagonal field x*dx + lambda*y*dy
// pulled back: partial_c = xi_form * xi dxi + eta_form * eta deta.
struct ChartField {
    std::pair<Int, Int> xi_exp, eta_exp;  // xi = x^a y^b as (a, b)
    LinForm xi_form, eta_form;            // (a + b*lambda, c + d*lambda)
};

struct QuotFoliation {
    QuotSingularity s;
    HJData hj;
    std::vector<ChartField> charts;  // r + 1; E_j = {xi_j = 0} = {eta_{j-1} = 0}
    // lambda_j making E_j non-invariant, one entry per exceptional curve
    std::vector<Rat> lambda_j;
    std::optional<Rat> lambda;    // evaluation point, absent in symbolic mode
    std::vector<bool> invariant;  // per curve, evaluated mode only
};

QuotFoliation quotient_foliation_charts(const QuotSingularity& s);
QuotFoliation quotient_foliation_charts(const QuotSingularity& s, const Rat& lambda);

struct ChainProfile {
    DualGraph fragment;        // nodes E_1..E_r with ids 0..r-1
    bool lambda_positive;      // fragment is an ordinary reduced chain otherwise
    int non_invariant = -1;    // node id, or -1 when every curve is invariant
    int semi_reduced_points = 0;  // non-reduced but semi-reduced singularities
};

// Dual-graph fragment of the resolved chain for a concrete rational lambda.
ChainProfile generalized_chain_profile(const QuotSingularity& s, const Rat& lambda);

}  // namespace folsurf
