#include "folsurf/blowup.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace folsurf {

int ExceptionalCurve::z_total() const {
    int z = 0;
    for (const auto& p : singular_points) z += p.z;
    return z;
}

Scalar ExceptionalCurve::cs_total() const {
    Scalar s(Rat(0));
    for (const auto& p : singular_points) s = s + p.cs;
    return s;
}

namespace {

int x_order(const Poly& p) {
    int o = std::numeric_limits<int>::max();
    for (const auto& [e, c] : p.terms()) o = std::min(o, e.first);
    return o;
}

int y_order(const Poly& p) {
    int o = std::numeric_limits<int>::max();
    for (const auto& [e, c] : p.terms()) o = std::min(o, e.second);
    return o;
}

Poly shift_x(const Poly& p, int k) {
    Poly out;
    for (const auto& [e, c] : p.terms()) out = out + Poly::monomial(e.first - k, e.second, c);
    return out;
}

Poly shift_y(const Poly& p, int k) {
    Poly out;
    for (const auto& [e, c] : p.terms()) out = out + Poly::monomial(e.first, e.second - k, c);
    return out;
}

Poly pull1(const Poly& p) { return p.compose(Poly::x(), Poly::x() * Poly::y()); }
Poly pull2(const Poly& p) { return p.compose(Poly::x() * Poly::y(), Poly::y()); }

// Proper transform: pull back and strip the full power of the exceptional
// coordinate.
Poly proper1(const Poly& p) {
    Poly q = pull1(p);
    return q.is_zero() ? q : shift_x(q, x_order(q));
}

Poly proper2(const Poly& p) {
    Poly q = pull2(p);
    return q.is_zero() ? q : shift_y(q, y_order(q));
}

}  // namespace

BlowupResult blow_up_origin(const PlaneGerm& v) {
    bool singular = v.is_singular_at_origin();
    Poly f1 = pull1(v.f()), g1 = pull1(v.g());
    Poly a1 = Poly::x() * f1;
    Poly b1 = g1 - Poly::y() * f1;
    int s1 = std::min(a1.is_zero() ? std::numeric_limits<int>::max() : x_order(a1),
                      b1.is_zero() ? std::numeric_limits<int>::max() : x_order(b1));
    PlaneGerm c1(shift_x(a1, s1), b1.is_zero() ? b1 : shift_x(b1, s1));

    Poly f2 = pull2(v.f()), g2 = pull2(v.g());
    Poly a2 = f2 - Poly::x() * g2;
    Poly b2 = Poly::y() * g2;
    int s2 = std::min(a2.is_zero() ? std::numeric_limits<int>::max() : y_order(a2),
                      b2.is_zero() ? std::numeric_limits<int>::max() : y_order(b2));
    PlaneGerm c2(a2.is_zero() ? a2 : shift_y(a2, s2), shift_y(b2, s2));

    bool inv1 = c1.f().divisible_by(Poly::x());
    bool inv2 = c2.g().divisible_by(Poly::y());
    if (inv1 != inv2) throw DomainError("chart disagreement on exceptional invariance");

    BlowupResult out{ChartGerm{std::move(c1), 1, s1}, ChartGerm{std::move(c2), 2, s2},
                     ExceptionalCurve{}, singular};
    out.exceptional.invariant = inv1;
    return out;
}

namespace {

struct PointRec {
    int id;
    std::string locus;
    PlaneGerm germ;
    std::map<int, Poly> branches;  // curve id -> local equation at the origin
    SingularityClass cls;
    int depth = 0;
    bool processed = false;
};

struct CurveBirth {
    PlaneGerm chart1, chart2;
    std::string locus;  // center the curve was born from
};

bool needs_blowup(const SingularityClass& cls, StopCriterion stop) {
    if (cls.kind == GermKind::NonSingular) return false;
    return stop == StopCriterion::Reduced ? !cls.reduced : !cls.semi_reduced;
}

BranchSpec branch_for(const Poly& h) {
    if (h == Poly::x()) return BranchSpec::axis_x0();
    if (h == Poly::y()) return BranchSpec::axis_y0();
    return BranchSpec::smooth(h);
}

}  // namespace

ResolutionForest seidenberg_reduce(const PlaneGerm& v, int max_depth, StopCriterion stop) {
    if (max_depth < 1) throw InputError("max_depth must be >= 1");
    ResolutionForest forest;
    forest.input = v.to_string();
    std::vector<PointRec> pts;
    pts.push_back({0, "@", v, {}, classify_at_origin(v), 0, false});
    std::vector<CurveBirth> births;
    std::set<std::pair<int, int>> edges;

    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].processed || !needs_blowup(pts[i].cls, stop)) continue;
        if (forest.blowup_count() >= max_depth)
            throw DomainError("blowup depth exhausted at germ " + pts[i].germ.to_string());
        PointRec p = pts[i];
        pts[i].processed = true;

        BlowupResult bu = blow_up_origin(p.germ);
        int eid = static_cast<int>(forest.curves.size());
        ExceptionalCurve curve;
        curve.id = eid;
        curve.invariant = bu.exceptional.invariant;
        forest.curves.push_back(curve);
        births.push_back({bu.chart1.germ, bu.chart2.germ, p.locus});

        BlowupNode node;
        node.id = forest.blowup_count();
        node.locus = p.locus;
        node.center_was_singular = bu.center_was_singular;
        for (const auto& [c, h] : p.branches) node.curves_through.push_back(c);
        forest.nodes.push_back(node);
        forest.depth = std::max(forest.depth, p.depth + 1);

        // curves through the center: drop one from the self-intersection,
        // separate them from each other, and attach them to the new curve
        for (const auto& [c, h] : p.branches) {
            forest.curves[c].self_int -= 1;
            edges.insert({std::min(c, eid), std::max(c, eid)});
            for (const auto& [c2, h2] : p.branches)
                if (c2 > c) edges.erase({c, c2});
        }

        // transformed local equations of the old curves in both charts
        std::map<int, Poly> br1, br2;
        for (const auto& [c, h] : p.branches) {
            br1[c] = proper1(h);
            br2[c] = proper2(h);
        }

        // singular points of the saturated pullback on E, chart 1 (finite t)
        UPoly fa = bu.chart1.germ.f().restrict_x0();
        UPoly fb = bu.chart1.germ.g().restrict_x0();
        if (fa.is_zero() && fb.is_zero())
            throw DomainError("exceptional curve contained in the singular locus");
        UPoly sing = fa.is_zero() ? fb : (fb.is_zero() ? fa : UPoly::gcd(fa, fb));
        if (!sing.is_constant()) {
            auto roots = sing.rational_roots();
            int covered = 0;
            for (const auto& r : roots) covered += sing.root_multiplicity(r);
            if (covered < sing.degree())
                throw DomainError("irrational singular point on the exceptional curve over " +
                                  p.locus);
            for (const auto& r : roots) {
                PlaneGerm vg = bu.chart1.germ.translated(Rat(0), r);
                std::map<int, Poly> nb;
                nb[eid] = Poly::x();
                for (const auto& [c, h] : br1)
                    if (h.eval(Rat(0), r) == 0) nb[c] = h.translate(Rat(0), r);
                SingularityClass cls = classify_at_origin(vg);
                pts.push_back({static_cast<int>(pts.size()),
                               p.locus + "/1@(0," + rat_to_string(r) + ")", std::move(vg),
                               std::move(nb), cls, p.depth + 1, false});
            }
        }
        // corner point t = infinity, chart 2 origin
        if (bu.chart2.germ.is_singular_at_origin()) {
            std::map<int, Poly> nb;
            nb[eid] = Poly::y();
            for (const auto& [c, h] : br2)
                if (h.eval(Rat(0), Rat(0)) == 0) nb[c] = h;
            SingularityClass cls = classify_at_origin(bu.chart2.germ);
            pts.push_back({static_cast<int>(pts.size()), p.locus + "/2@(0,0)", bu.chart2.germ,
                           std::move(nb), cls, p.depth + 1, false});
        }
    }

    // collect per-curve singularity data from the leaf points
    for (const auto& p : pts) {
        if (p.processed) continue;
        for (const auto& [c, h] : p.branches) {
            ExceptionalCurve& curve = forest.curves[c];
            CurvePoint cp;
            cp.point_id = p.id;
            cp.locus = p.locus;
            cp.cls = p.cls;
            if (curve.invariant) {
                IndexRecord rec = closed_form_cs_z(p.germ, branch_for(h));
                cp.cs = rec.cs;
                cp.z = rec.z;
            }
            curve.singular_points.push_back(cp);
        }
    }

    // tangency bookkeeping for non-invariant curves, from their birth charts
    std::set<std::string> center_loci;
    for (const auto& n : forest.nodes) center_loci.insert(n.locus);
    for (auto& curve : forest.curves) {
        if (curve.invariant) continue;
        const CurveBirth& b = births[curve.id];
        UPoly a0 = b.chart1.f().restrict_x0();  // v(x) on E in chart 1
        int total = 0;
        if (!a0.is_zero()) {
            total += a0.degree();
            for (const auto& r : a0.rational_roots()) {
                std::string locus = b.locus + "/1@(0," + rat_to_string(r) + ")";
                int ord = a0.root_multiplicity(r);
                if (center_loci.count(locus)) {
                    total -= ord;  // the point was blown up later
                    continue;
                }
                curve.tangency_points.push_back({locus, ord});
            }
        }
        UPoly b0 = b.chart2.g().restrict_y0();  // v(y) on E near t = infinity
        int corner = b0.is_zero() ? 0 : b0.order();
        if (corner > 0) {
            std::string locus = b.locus + "/2@(0,0)";
            if (center_loci.count(locus)) {
                corner = 0;
            } else {
                curve.tangency_points.push_back({locus, corner});
            }
        }
        curve.tang_total = total + corner;
    }

    forest.edges.assign(edges.begin(), edges.end());
    return forest;
}

ExceptionalLattice forest_lattice(const ResolutionForest& forest) {
    int n = static_cast<int>(forest.curves.size());
    std::vector<std::vector<Int>> gram(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) gram[i][i] = forest.curves[i].self_int;
    for (const auto& [a, b] : forest.edges) gram[a][b] = gram[b][a] = 1;
    std::vector<CurveMeta> meta(n);
    for (int i = 0; i < n; ++i) {
        meta[i].invariant = forest.curves[i].invariant;
        if (forest.curves[i].invariant)
            meta[i].z_total = forest.curves[i].z_total();
        else
            meta[i].tang_total = forest.curves[i].tang_total;
    }
    return ExceptionalLattice(std::move(gram), std::move(meta));
}

PosRatReport verify_pos_rat_structure(const ResolutionForest& forest) {
    if (forest.curves.empty())
        throw DomainError("precondition failure: forest has no exceptional curves");
    PosRatReport rep;
    int n = static_cast<int>(forest.curves.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : forest.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // clause 1: the exceptional support is a string
    bool path = static_cast<int>(forest.edges.size()) == n - 1;
    for (const auto& nb : adj) path = path && nb.size() <= 2;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    rep.is_string = path && count == n;
    if (!rep.is_string) {
        rep.detail = "clause 1: exceptional support is not a string";
        return rep;
    }
    // clause 2: unique non-invariant curve with tangency order zero
    std::vector<int> non_inv;
    for (const auto& c : forest.curves)
        if (!c.invariant) non_inv.push_back(c.id);
    rep.unique_non_invariant = non_inv.size() == 1 && forest.curves[non_inv[0]].tang_total == 0;
    if (!rep.unique_non_invariant) {
        rep.detail = "clause 2: expected exactly one non-invariant curve with tangency 0";
        return rep;
    }
    rep.non_invariant_id = non_inv[0];
    // clause 3: both flanks are F-chains starting next to the non-invariant curve
    auto f_chain = [&](std::vector<int> flank) {
        for (std::size_t k = 0; k < flank.size(); ++k) {
            const ExceptionalCurve& c = forest.curves[flank[k]];
            if (!c.invariant || c.self_int > -2) return false;
            for (const auto& sp : c.singular_points)
                if (!sp.cls.reduced || sp.cls.kind != GermKind::NonDegenerate) return false;
            if (c.z_total() != (k == 0 ? 1 : 2)) return false;
        }
        return true;
    };
    rep.flanks_are_f_chains = true;
    for (int start : adj[rep.non_invariant_id]) {
        std::vector<int> flank;
        int prev = rep.non_invariant_id, cur = start;
        while (true) {
            flank.push_back(cur);
            int nxt = -1;
            for (int w : adj[cur])
                if (w != prev) nxt = w;
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
        }
        if (!f_chain(flank)) rep.flanks_are_f_chains = false;
    }
    if (!rep.flanks_are_f_chains) {
        rep.detail = "clause 3: a flank is not an F-chain";
        return rep;
    }
    // clause 4: foliated discrepancy -1 on the non-invariant curve, 0 elsewhere
    rep.foliated = foliated_discrepancies(forest_lattice(forest));
    rep.discrepancy_ok = true;
    for (int i = 0; i < n; ++i) {
        Rat expect = i == rep.non_invariant_id ? Rat(-1) : Rat(0);
        if (rep.foliated[i] != expect) rep.discrepancy_ok = false;
    }
    if (!rep.discrepancy_ok) rep.detail = "clause 4: foliated discrepancy vector mismatch";
    return rep;
}

std::vector<CsAuditEntry> cs_audit(const ResolutionForest& forest) {
    std::vector<CsAuditEntry> out;
    for (const auto& c : forest.curves) {
        if (!c.invariant) continue;
        CsAuditEntry e;
        e.curve_id = c.id;
        e.cs_sum = c.cs_total();
        e.self_int = c.self_int;
        e.pass = e.cs_sum == Scalar(Rat(c.self_int));
        out.push_back(e);
    }
    return out;
}

}  // namespace folsurf
