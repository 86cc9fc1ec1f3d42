#include "folsurf/dualgraph.hpp"

#include <algorithm>

namespace folsurf {

void validate_graph(const DualGraph& g) {
    std::map<int, int> pos;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        if (pos.count(g.nodes[i].id)) throw InputError("duplicate node id");
        pos[g.nodes[i].id] = static_cast<int>(i);
    }
    for (const auto& e : g.edges) {
        if (!pos.count(e.a) || !pos.count(e.b)) throw InputError("edge references unknown node");
        if (e.mult < 1) throw InputError("edge multiplicity must be >= 1");
        if (e.a == e.b && e.mult > 2) throw InputError("self-loop multiplicity exceeds 2");
    }
}

DualGraph to_dual_graph(const ResolutionForest& forest) {
    DualGraph g;
    for (const auto& c : forest.curves) {
        CurveNode n;
        n.id = c.id;
        n.self_int = c.self_int;
        n.invariant = c.invariant;
        if (c.invariant)
            n.z_total = c.z_total();
        else
            n.tang_total = c.tang_total;
        for (const auto& sp : c.singular_points) {
            SingAnnotation a;
            a.point_id = sp.point_id;
            a.kind = sp.cls.kind;
            a.reduced = sp.cls.reduced;
            a.lambda = sp.cls.lambda;
            if (c.invariant) a.index = IndexRecord{sp.cs, sp.z, IndexRecord::ClosedForm};
            n.sing_annotations.push_back(std::move(a));
        }
        g.nodes.push_back(std::move(n));
    }
    for (const auto& [a, b] : forest.edges) g.edges.push_back({a, b, 1});
    return g;
}

namespace {

struct GraphView {
    const DualGraph* g;
    std::map<int, int> pos;  // node id -> index
    std::vector<std::vector<std::pair<int, int>>> adj;  // (index, mult), loops excluded
    std::vector<int> loop_mult;  // self-loop multiplicity per node
    std::vector<int> degree;     // multiplicity-weighted, loops count twice

    explicit GraphView(const DualGraph& graph) : g(&graph) {
        validate_graph(graph);
        int n = static_cast<int>(graph.nodes.size());
        adj.resize(n);
        loop_mult.assign(n, 0);
        degree.assign(n, 0);
        for (int i = 0; i < n; ++i) pos[graph.nodes[i].id] = i;
        for (const auto& e : graph.edges) {
            int a = pos[e.a], b = pos[e.b];
            if (a == b) {
                loop_mult[a] += e.mult;
                degree[a] += 2 * e.mult;
                continue;
            }
            adj[a].push_back({b, e.mult});
            adj[b].push_back({a, e.mult});
            degree[a] += e.mult;
            degree[b] += e.mult;
        }
    }

    const CurveNode& node(int i) const { return g->nodes[i]; }

    std::vector<std::vector<int>> components() const {
        int n = static_cast<int>(adj.size());
        std::vector<bool> seen(n, false);
        std::vector<std::vector<int>> out;
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            std::vector<int> comp, stack{s};
            seen[s] = true;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                comp.push_back(u);
                for (auto [w, m] : adj[u])
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    bool is_path(const std::vector<int>& comp) const {
        int m = 0;
        for (int i : comp) {
            if (loop_mult[i] > 0 || degree[i] > 2) return false;
            for (auto [w, mult] : adj[i]) {
                if (mult != 1) return false;
                ++m;
            }
        }
        return m / 2 == static_cast<int>(comp.size()) - 1;
    }

    bool is_cycle(const std::vector<int>& comp) const {
        if (comp.size() < 2) return false;
        int m = 0;
        for (int i : comp) {
            if (loop_mult[i] > 0 || degree[i] != 2) return false;
            for (auto [w, mult] : adj[i]) m += mult;
        }
        return m / 2 == static_cast<int>(comp.size());
    }

    // End-to-end order of a path component, starting at the endpoint with
    // the smaller node id.
    std::vector<int> path_order(const std::vector<int>& comp) const {
        if (comp.size() == 1) return comp;
        std::vector<int> ends;
        for (int i : comp)
            if (degree[i] <= 1) ends.push_back(i);
        int start = ends[0];
        if (ends.size() == 2 && node(ends[1]).id < node(ends[0]).id) start = ends[1];
        std::vector<int> order{start};
        int prev = -1, cur = start;
        while (true) {
            int nxt = -1;
            for (auto [w, m] : adj[cur])
                if (w != prev) nxt = w;
            if (nxt < 0) break;
            order.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        return order;
    }

    std::vector<int> ids(const std::vector<int>& idx) const {
        std::vector<int> out;
        for (int i : idx) out.push_back(node(i).id);
        return out;
    }
};

bool annotations_reduced_nondeg(const CurveNode& n) {
    for (const auto& a : n.sing_annotations)
        if (!a.reduced || a.kind != GermKind::NonDegenerate) return false;
    return true;
}

// F-chain condition with fixed orientation: z pattern 1, 2, ..., 2.
bool f_chain_oriented(const GraphView& v, const std::vector<int>& order) {
    for (std::size_t k = 0; k < order.size(); ++k) {
        const CurveNode& n = v.node(order[k]);
        if (!n.invariant || n.genus != 0 || n.self_int > -2) return false;
        if (!n.z_total || *n.z_total != (k == 0 ? 1 : 2)) return false;
        if (!annotations_reduced_nondeg(n)) return false;
    }
    return true;
}

bool f_chain_either(const GraphView& v, const std::vector<int>& order) {
    std::vector<int> rev(order.rbegin(), order.rend());
    return f_chain_oriented(v, order) || f_chain_oriented(v, rev);
}

// Ordered generalized chain: left flank, the non-invariant node, right flank.
std::optional<std::vector<int>> generalized_chain(const GraphView& v,
                                                  const std::vector<int>& order) {
    int j = -1;
    for (std::size_t k = 0; k < order.size(); ++k)
        if (!v.node(order[k]).invariant) {
            if (j >= 0) return std::nullopt;
            j = static_cast<int>(k);
        }
    if (j < 0) return std::nullopt;
    const CurveNode& c = v.node(order[j]);
    if (c.genus != 0 || !c.tang_total || *c.tang_total != 0) return std::nullopt;
    std::vector<int> left(order.begin(), order.begin() + j);
    std::reverse(left.begin(), left.end());  // adjacent to the center first
    std::vector<int> right(order.begin() + j + 1, order.end());
    if (!f_chain_oriented(v, left) || !f_chain_oriented(v, right)) return std::nullopt;
    return order;
}

bool egl_cycle_nodes(const GraphView& v, const std::vector<int>& comp) {
    for (int i : comp) {
        const CurveNode& n = v.node(i);
        if (!n.invariant || n.genus != 0 || !n.z_total || *n.z_total != 2) return false;
    }
    return true;
}

}  // namespace

PatternReport detect_patterns(const DualGraph& g) {
    GraphView v(g);
    PatternReport rep;
    int n = static_cast<int>(g.nodes.size());

    auto is_tagged_f1 = [&](int i) {
        const CurveNode& c = v.node(i);
        return c.invariant && c.genus == 0 && c.z_total && *c.z_total == 1;
    };
    for (int i = 0; i < n; ++i) {
        const CurveNode& c = v.node(i);
        auto& tags = rep.node_tags[c.id];
        if (c.invariant && !c.z_total) tags.push_back("insufficient data");
        if (!c.invariant && !c.tang_total) tags.push_back("insufficient data");
        if (c.invariant && c.genus == 0 && c.z_total) {
            if (*c.z_total == 1) tags.push_back("(-1)-F-curve");
            if (*c.z_total == 2) tags.push_back("(-2)-F-curve");
            if (*c.z_total == 3 && c.self_int <= -2) {
                int flank = 0;
                for (auto [w, m] : v.adj[i])
                    if (is_tagged_f1(w) && v.node(w).self_int == -2) ++flank;
                if (flank >= 2) tags.push_back("bad tail");
            }
        }
    }

    for (const auto& comp : v.components()) {
        if (v.is_path(comp)) {
            auto order = v.path_order(comp);
            bool hj = true;
            for (int i : comp) {
                const CurveNode& c = v.node(i);
                if (c.genus != 0 || c.self_int > -2) hj = false;
            }
            if (hj) {
                rep.hj_strings.push_back(v.ids(order));
                if (f_chain_either(v, order)) rep.f_chains.push_back(v.ids(order));
                bool all_minus_two = true;
                int non_reduced = 0;
                for (int i : comp) {
                    if (v.node(i).self_int != -2) all_minus_two = false;
                    for (const auto& a : v.node(i).sing_annotations)
                        if (!a.reduced) ++non_reduced;
                }
                if (all_minus_two && non_reduced >= 2)
                    rep.violations.push_back(
                        "more than one non-reduced singularity on a (-2)-chain");
            }
            if (auto gc = generalized_chain(v, order)) rep.generalized_chains.push_back(v.ids(*gc));
        } else if (v.is_cycle(comp) && egl_cycle_nodes(v, comp)) {
            rep.egl_cycles.push_back(v.ids(comp));
        }
    }
    return rep;
}

std::string pattern_kind_name(PatternKind k) {
    switch (k) {
        case PatternKind::FChain: return "f-chain";
        case PatternKind::TwoFCurvesBadTail: return "bad-tail";
        case PatternKind::MinusTwoChain: return "(-2)-chain";
        case PatternKind::GeneralizedChain: return "generalized-chain";
        case PatternKind::NonInvariantTangZero: return "non-invariant-tang-zero";
        case PatternKind::AnType: return "An";
        case PatternKind::DnType: return "Dn";
        case PatternKind::EGL: return "egl";
        case PatternKind::Unknown: return "unknown";
    }
    return "unknown";
}

ComponentClass classify_component(const DualGraph& g, const std::vector<int>& component) {
    GraphView v(g);
    std::vector<int> comp;
    for (int id : component) {
        auto it = v.pos.find(id);
        if (it == v.pos.end()) throw InputError("component references unknown node");
        comp.push_back(it->second);
    }
    std::sort(comp.begin(), comp.end());

    if (comp.size() == 1 && v.loop_mult[comp[0]] > 0) {
        const CurveNode& c = v.node(comp[0]);
        if (c.genus == 0)
            return {PatternKind::EGL, PatternKind::Unknown, "rational curve with one node"};
        return {PatternKind::Unknown, PatternKind::Unknown, "self-loop on a non-rational curve"};
    }
    if (v.is_cycle(comp)) {
        if (egl_cycle_nodes(v, comp))
            return {PatternKind::EGL, PatternKind::Unknown, "cycle of (-2)-F-curves"};
        return {PatternKind::Unknown, PatternKind::Unknown, "cycle outside the taxonomy"};
    }
    if (v.is_path(comp)) {
        auto order = v.path_order(comp);
        int non_inv = 0;
        for (int i : comp)
            if (!v.node(i).invariant) ++non_inv;
        if (non_inv == 0 && f_chain_either(v, order))
            return {PatternKind::AnType, PatternKind::FChain, "chain of invariant curves"};
        if (non_inv == 1) {
            if (comp.size() == 1) {
                const CurveNode& c = v.node(comp[0]);
                if (c.genus == 0 && c.tang_total && *c.tang_total == 0 &&
                    c.sing_annotations.empty())
                    return {PatternKind::AnType, PatternKind::NonInvariantTangZero,
                            "non-invariant curve with tangency order zero"};
            } else if (generalized_chain(v, order)) {
                return {PatternKind::AnType, PatternKind::GeneralizedChain,
                        "non-invariant curve flanked by F-chains"};
            }
        }
        return {PatternKind::Unknown, PatternKind::Unknown, "path outside the taxonomy"};
    }
    // Dn: a tree with one degree-3 node (the bad tail) carrying two leaf
    // (-1)-F-curves of self-intersection -2 and a (-2)-chain.
    int edge_total = 0;
    bool simple_tree = true;
    int branch = -1;
    for (int i : comp) {
        if (v.loop_mult[i] > 0) simple_tree = false;
        for (auto [w, m] : v.adj[i]) {
            if (m != 1) simple_tree = false;
            ++edge_total;
        }
        if (v.degree[i] > 3) simple_tree = false;
        if (v.degree[i] == 3) {
            if (branch >= 0) simple_tree = false;
            branch = i;
        }
    }
    if (simple_tree && branch >= 0 && edge_total / 2 == static_cast<int>(comp.size()) - 1) {
        const CurveNode& b = v.node(branch);
        bool tail_ok = b.invariant && b.genus == 0 && b.self_int <= -2 && b.z_total &&
                       *b.z_total == 3;
        std::vector<int> leaves, rest;
        for (auto [w, m] : v.adj[branch]) {
            const CurveNode& c = v.node(w);
            bool leaf_f1 = v.degree[w] == 1 && c.invariant && c.genus == 0 &&
                           c.self_int == -2 && c.z_total && *c.z_total == 1;
            (leaf_f1 ? leaves : rest).push_back(w);
        }
        bool chain_ok = leaves.size() == 2 && rest.size() == 1;
        if (chain_ok) {
            int prev = branch, cur = rest[0];
            while (cur >= 0) {
                const CurveNode& c = v.node(cur);
                if (!c.invariant || c.genus != 0 || c.self_int != -2 || !c.z_total ||
                    *c.z_total != 2)
                    chain_ok = false;
                int nxt = -1;
                for (auto [w, m] : v.adj[cur])
                    if (w != prev) nxt = w;
                prev = cur;
                cur = nxt;
            }
        }
        if (tail_ok && chain_ok)
            return {PatternKind::DnType, PatternKind::TwoFCurvesBadTail,
                    "bad tail with two (-1)-F-curves and a (-2)-chain"};
    }
    return {PatternKind::Unknown, PatternKind::Unknown, "no clause matches"};
}

ChainPropagation propagate_chain_eigenvalues(const std::vector<CurveNode>& chain,
                                             const ChainBoundary& boundary) {
    if (chain.empty()) throw InputError("empty chain");
    for (const auto& n : chain)
        if (n.self_int > -2 || n.genus != 0)
            throw InputError("chain is not a Hirzebruch-Jung string");
    int n = static_cast<int>(chain.size());
    ChainPropagation out;
    out.lambda.assign(n, std::nullopt);
    int start;
    if (boundary.kind == ChainBoundary::GivenLambda) {
        out.lambda[0] = boundary.lambda1;
        start = 0;
    } else {
        for (const auto& c : chain)
            if (c.self_int != -2)
                throw InputError("one-singularity boundary requires a (-2)-chain");
        if (n < 2) throw InputError("one-singularity boundary needs length >= 2");
        out.saddle_nodes.push_back(0);  // the first point is a saddle-node
        out.lambda[1] = Scalar(Rat(chain[1].self_int));
        start = 1;
    }
    bool interrupted = false;
    for (int k = start; k < n; ++k) {
        if (k > start) {
            if (out.lambda[k - 1]->is_zero()) {
                out.saddle_nodes.push_back(k);
                interrupted = true;
                break;
            }
            out.lambda[k] = Scalar(Rat(chain[k].self_int)) - out.lambda[k - 1]->reciprocal();
        }
        if (out.lambda[k]->is_zero() && k == n - 1) out.saddle_nodes.push_back(k + 1);
    }
    out.f_chain_certificate = !interrupted;
    for (const auto& l : out.lambda)
        if (l && !(*l < Scalar(Rat(-1)))) out.f_chain_certificate = false;
    return out;
}

EglCheck egl_singularity_check(const DualGraph& g, const std::vector<int>& cycle) {
    GraphView v(g);
    if (cycle.size() < 2) throw InputError("cycle length must be >= 2");
    std::vector<int> comp;
    for (int id : cycle) {
        auto it = v.pos.find(id);
        if (it == v.pos.end()) throw InputError("cycle references unknown node");
        comp.push_back(it->second);
    }
    std::sort(comp.begin(), comp.end());
    if (!v.is_cycle(comp) || !egl_cycle_nodes(v, comp))
        throw InputError("component is not a cycle of (-2)-F-curves");

    EglCheck out;
    bool reduced_ok = true, all_indexed = true, cs_ok = true;
    for (int i : comp) {
        const CurveNode& c = v.node(i);
        if (c.sing_annotations.empty()) out.missing.push_back(c.id);
        Scalar cs_sum(Rat(0));
        for (const auto& a : c.sing_annotations) {
            if (!a.reduced || a.kind != GermKind::NonDegenerate) reduced_ok = false;
            if (a.index)
                cs_sum = cs_sum + a.index->cs;
            else
                all_indexed = false;
        }
        if (all_indexed && cs_sum != Scalar(Rat(c.self_int))) cs_ok = false;
    }
    out.cs_checked = all_indexed && out.missing.empty();
    out.pass = reduced_ok && out.missing.empty() && (!out.cs_checked || cs_ok);
    if (!reduced_ok)
        out.detail = "a singularity on the cycle is not reduced non-degenerate";
    else if (!out.missing.empty())
        out.detail = "nodes without singularity annotations";
    else if (out.cs_checked && !cs_ok)
        out.detail = "Camacho-Sad sum differs from a self-intersection";
    return out;
}

}  // namespace folsurf
