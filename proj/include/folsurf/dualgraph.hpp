#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folsurf/blowup.hpp"
#include "folsurf/germ.hpp"
#include "folsurf/localindex.hpp"

namespace folsurf {

// Singularity annotation at an incidence point of a curve. The index record
// (CS and Z values) is optional; detection degrades to whatever is present.
struct SingAnnotation {
    int point_id = -1;
    GermKind kind = GermKind::NonDegenerate;
    bool reduced = true;
    std::optional<Scalar> lambda;
    std::optional<IndexRecord> index;
};

struct CurveNode {
    int id = 0;
    int self_int = -1;
    int genus = 0;
    bool invariant = true;
    std::optional<int> z_total;
    std::vector<SingAnnotation> sing_annotations;
    std::optional<int> tang_total;  // non-invariant curves
};

struct GraphEdge {
    int a, b;      // a == b encodes a self-loop (rational curve with a node)
    int mult = 1;  // self-loops cap at 2
};

struct DualGraph {
    std::vector<CurveNode> nodes;
    std::vector<GraphEdge> edges;
};

// Throws InputError on dangling edge ids, multiplicity < 1, or a self-loop
// of multiplicity > 2.
void validate_graph(const DualGraph& g);

// Nodes and annotations of a reduction forest, edges with multiplicity 1.
DualGraph to_dual_graph(const ResolutionForest& forest);

struct PatternReport {
    // per-node tags: "(-1)-F-curve", "(-2)-F-curve", "bad tail",
    // "insufficient data"
    std::map<int, std::vector<std::string>> node_tags;
    std::vector<std::vector<int>> hj_strings;  // path components, end to end
    std::vector<std::vector<int>> f_chains;    // z pattern 1,2,...,2
    std::vector<std::vector<int>> generalized_chains;
    std::vector<std::vector<int>> egl_cycles;  // cycles of (-2)-F-curves
    std::vector<std::string> violations;
};

PatternReport detect_patterns(const DualGraph& g);

enum class PatternKind {
    FChain,
    TwoFCurvesBadTail,
    MinusTwoChain,
    GeneralizedChain,
    NonInvariantTangZero,
    AnType,
    DnType,
    EGL,
    Unknown,
};

std::string pattern_kind_name(PatternKind k);

struct ComponentClass {
    PatternKind kind = PatternKind::Unknown;  // AnType, DnType, EGL or Unknown
    PatternKind via = PatternKind::Unknown;   // matched sub-pattern, if any
    std::string detail;
};

// Classifies one connected component (given by its node ids).
ComponentClass classify_component(const DualGraph& g, const std::vector<int>& component);

struct ChainBoundary {
    enum Kind { OneSingularity, GivenLambda } kind;
    Scalar lambda1;

    // First point is a saddle-node; propagation starts with lambda_2 = E_2^2.
    static ChainBoundary one_singularity() { return {OneSingularity, Scalar()}; }
    static ChainBoundary given(const Scalar& l) { return {GivenLambda, l}; }
};

struct ChainPropagation {
    // lambda per chain node, in chain order; absent before the boundary or
    // after a saddle-node interrupts the recursion
    std::vector<std::optional<Scalar>> lambda;
    std::vector<int> saddle_nodes;  // positions whose lambda vanished
    bool f_chain_certificate = false;  // all lambda_k < -1
    bool orientation_forward = true;   // lambda is unique up to reciprocal
};

// lambda_k = E_k^2 - 1/lambda_{k-1} along a Hirzebruch-Jung string.
ChainPropagation propagate_chain_eigenvalues(const std::vector<CurveNode>& chain,
                                             const ChainBoundary& boundary);

struct EglCheck {
    bool pass = false;
    std::vector<int> missing;  // nodes without annotations
    bool cs_checked = false;   // CS sums compared against self-intersections
    std::string detail;
};

// Cycle of (-2)-F-curves, length >= 2: all singularities must be reduced and
// non-degenerate; with full index records the CS sum per node must equal the
// self-intersection.
EglCheck egl_singularity_check(const DualGraph& g, const std::vector<int>& cycle);

}  // namespace folsurf
