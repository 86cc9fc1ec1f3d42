#pragma once

#include <string>
#include <utility>
#include <vector>

#include "folsurf/germ.hpp"
#include "folsurf/lattice.hpp"
#include "folsurf/localindex.hpp"

namespace folsurf {

// One chart of the blowup at the origin. Chart 1 has coordinates (x, y')
// with y = x*y' and exceptional locus x = 0; chart 2 has (x', y) with
// x = x'*y and exceptional locus y = 0.
struct ChartGerm {
    PlaneGerm germ;
    int chart_id;          // 1 or 2
    int saturation_order;  // power of the exceptional coordinate divided out
};

struct CurvePoint {
    int point_id;
    std::string locus;
    SingularityClass cls;
    Scalar cs;  // Camacho-Sad index along this curve at the point
    int z = 0;
};

struct TangencyPoint {
    std::string locus;
    int order;
};

struct ExceptionalCurve {
    int id = 0;
    int self_int = -1;
    bool invariant = true;
    std::vector<CurvePoint> singular_points;
    std::vector<TangencyPoint> tangency_points;  // non-invariant curves
    int tang_total = 0;  // includes points with irrational coordinates

    int z_total() const;
    Scalar cs_total() const;
};

struct BlowupResult {
    ChartGerm chart1, chart2;
    ExceptionalCurve exceptional;  // seed: id 0, self_int -1, invariance set
    bool center_was_singular;
};

BlowupResult blow_up_origin(const PlaneGerm& v);

struct BlowupNode {
    int id;
    std::string locus;  // chart path + coordinates of the center
    bool center_was_singular;
    std::vector<int> curves_through;  // incidence: curve ids through the center
};

enum class StopCriterion { Reduced, SemiReduced };

struct ResolutionForest {
    std::string input;  // canonical form of the reduced germ
    std::vector<BlowupNode> nodes;
    std::vector<ExceptionalCurve> curves;
    std::vector<std::pair<int, int>> edges;
    int depth = 0;  // longest chain of nested blowups

    int blowup_count() const { return static_cast<int>(nodes.size()); }
};

ResolutionForest seidenberg_reduce(const PlaneGerm& v, int max_depth = 64,
                                   StopCriterion stop = StopCriterion::Reduced);

// Intersection lattice of the exceptional curves, with z/tangency metadata.
ExceptionalLattice forest_lattice(const ResolutionForest& forest);

struct PosRatReport {
    bool is_string = false;
    bool unique_non_invariant = false;
    int non_invariant_id = -1;
    bool flanks_are_f_chains = false;
    bool discrepancy_ok = false;
    std::vector<Rat> foliated;
    std::string detail;  // first violated clause, empty when all hold

    bool pass() const {
        return is_string && unique_non_invariant && flanks_are_f_chains && discrepancy_ok;
    }
};

// Checks the four structural conclusions for the reduction of a germ with
// positive rational eigenvalue ratio at a smooth point.
PosRatReport verify_pos_rat_structure(const ResolutionForest& forest);

struct CsAuditEntry {
    int curve_id;
    Scalar cs_sum;
    Int self_int;
    bool pass;
};

// Camacho-Sad conservation: sum of CS indices on each invariant curve must
// equal its self-intersection.
std::vector<CsAuditEntry> cs_audit(const ResolutionForest& forest);

}  // namespace folsurf
