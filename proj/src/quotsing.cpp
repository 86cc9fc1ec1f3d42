#include "folsurf/quotsing.hpp"

#include <algorithm>

namespace folsurf {

QuotSingularity::QuotSingularity(Int n_, Int q_) : n(std::move(n_)), q(std::move(q_)) {
    if (n <= 0 || q <= 0 || q >= n) throw InputError("quotient type needs 0 < q < n");
    if (gcd_int(n, q) != 1) throw InputError("quotient type needs gcd(n, q) = 1");
}

QuotSingularity QuotSingularity::from_weights(const Int& n, const Int& a, const Int& b) {
    if (n <= 0) throw InputError("quotient order must be positive");
    Int am = ((a % n) + n) % n, bm = ((b % n) + n) % n;
    if (gcd_int(am, n) != 1) throw InputError("first weight is not invertible mod n");
    // a^{-1} mod n by extended Euclid
    Int t0 = 0, t1 = 1, r0 = n, r1 = am;
    while (r1 != 0) {
        Int quo = r0 / r1;
        Int t2 = t0 - quo * t1, r2 = r0 - quo * r1;
        t0 = t1;
        t1 = t2;
        r0 = r1;
        r1 = r2;
    }
    Int inv = ((t0 % n) + n) % n;
    return QuotSingularity(n, (bm * inv) % n);
}

Rat hj_evaluate(const std::vector<Int>& chain) {
    if (chain.empty()) throw InputError("empty continued fraction");
    Rat val(chain.back());
    for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) val = Rat(*it) - 1 / val;
    return val;
}

namespace {

std::vector<Int> hj_chain(Int n, Int q) {
    std::vector<Int> out;
    while (q > 0) {
        Int b = (n + q - 1) / q;
        out.push_back(b);
        Int next = b * q - n;
        n = q;
        q = next;
    }
    return out;
}

}  // namespace

HJData hj_expand(const QuotSingularity& s) {
    HJData hj;
    hj.res_chain = hj_chain(s.n, s.q);
    hj.edim_chain = hj_chain(s.n, s.n - s.q);
    hj.edim_bound = static_cast<int>(hj.edim_chain.size()) + 2;
    if (hj_evaluate(hj.res_chain) != Rat(s.n) / Rat(s.q) ||
        hj_evaluate(hj.edim_chain) != Rat(s.n) / Rat(s.n - s.q))
        throw DomainError("continued fraction recomposition failed");
    return hj;
}

ExceptionalLattice resolution_lattice(const HJData& hj) {
    int r = static_cast<int>(hj.res_chain.size());
    std::vector<std::vector<Int>> gram(r, std::vector<Int>(r, 0));
    for (int i = 0; i < r; ++i) {
        gram[i][i] = -hj.res_chain[i];
        if (i + 1 < r) gram[i][i + 1] = gram[i + 1][i] = 1;
    }
    return ExceptionalLattice(std::move(gram), std::vector<CurveMeta>(r));
}

std::optional<Rat> LinForm::zero() const {
    if (c1 == 0) return std::nullopt;
    return -c0 / c1;
}

std::string LinForm::to_string() const {
    if (c1 == 0) return rat_to_string(c0);
    std::string l = c1 == 1 ? "L" : (c1 == -1 ? "-L" : rat_to_string(c1) + "*L");
    if (c0 == 0) return l;
    return l + (c0 > 0 ? " + " + rat_to_string(c0) : " - " + rat_to_string(-c0));
}

namespace {

QuotFoliation build_charts(const QuotSingularity& s) {
    QuotFoliation out{s, hj_expand(s), {}, {}, std::nullopt, {}};
    int r = static_cast<int>(out.hj.res_chain.size());
    // lattice vectors s_{-1} = (-1, 0), s_0 = (0, 1), s_k = b_k s_{k-1} - s_{k-2};
    // a pair (alpha, beta) gives the monomial x^(alpha*n - beta*q) y^beta
    std::vector<std::pair<Int, Int>> sv(r + 1);
    std::pair<Int, Int> prev{-1, 0};
    sv[0] = {0, 1};
    for (int k = 1; k <= r; ++k) {
        const Int& b = out.hj.res_chain[k - 1];
        sv[k] = {b * sv[k - 1].first - prev.first, b * sv[k - 1].second - prev.second};
        prev = sv[k - 1];
    }
    auto exps = [&](const std::pair<Int, Int>& v) {
        return std::pair<Int, Int>{v.first * s.n - v.second * s.q, v.second};
    };
    std::pair<Int, Int> sm1{-1, 0};
    for (int c = 0; c <= r; ++c) {
        const auto& tangent = c == 0 ? sm1 : sv[c - 1];
        ChartField f;
        f.xi_exp = exps(sv[c]);
        f.eta_exp = exps({-tangent.first, -tangent.second});
        f.xi_form = {Rat(f.xi_exp.first), Rat(f.xi_exp.second)};
        f.eta_form = {Rat(f.eta_exp.first), Rat(f.eta_exp.second)};
        out.charts.push_back(std::move(f));
    }
    for (int j = 1; j <= r; ++j) {
        auto z = out.charts[j].eta_form.zero();  // eta_j = xi_{j-1}^{-1} up to units
        if (!z) throw DomainError("chart form unexpectedly constant");
        out.lambda_j.push_back(*z);
    }
    return out;
}

}  // namespace

QuotFoliation quotient_foliation_charts(const QuotSingularity& s) { return build_charts(s); }

QuotFoliation quotient_foliation_charts(const QuotSingularity& s, const Rat& lambda) {
    QuotFoliation out = build_charts(s);
    out.lambda = lambda;
    for (const auto& lj : out.lambda_j) out.invariant.push_back(lj != lambda);
    return out;
}

namespace {

// Canonical representative of {r, 1/r}: absolute value <= 1, positive on ties.
Scalar canonical_ratio(const Rat& r) {
    Rat v = r;
    if (abs(rat_num(v)) > abs(rat_den(v))) v = 1 / v;
    return Scalar(v);
}

}  // namespace

ChainProfile generalized_chain_profile(const QuotSingularity& s, const Rat& lambda) {
    if (lambda == 0) throw InputError("lambda must be nonzero");
    QuotFoliation qf = quotient_foliation_charts(s, lambda);
    int r = static_cast<int>(qf.hj.res_chain.size());
    ChainProfile out;
    out.lambda_positive = lambda > 0;

    for (int j = 0; j < r; ++j) {
        CurveNode n;
        n.id = j;
        n.self_int = -static_cast<int>(qf.hj.res_chain[j].convert_to<long>());
        n.invariant = qf.invariant[j];
        if (!n.invariant) {
            n.tang_total = 0;
            out.non_invariant = j;
        }
        out.fragment.nodes.push_back(std::move(n));
    }
    for (int j = 0; j + 1 < r; ++j) out.fragment.edges.push_back({j, j + 1, 1});

    for (int c = 0; c <= r; ++c) {
        Rat a = qf.charts[c].xi_form.at(lambda);
        Rat b = qf.charts[c].eta_form.at(lambda);
        if (a == 0 || b == 0) continue;  // regular for the saturated foliation
        Rat ratio = a / b;
        bool reduced = ratio < 0;
        if (!reduced) ++out.semi_reduced_points;
        auto annotate = [&](int node, const Rat& cs) {
            SingAnnotation ann;
            ann.point_id = c;
            ann.kind = GermKind::NonDegenerate;
            ann.reduced = reduced;
            ann.lambda = canonical_ratio(ratio);
            ann.index = IndexRecord{Scalar(cs), 1, IndexRecord::ClosedForm};
            out.fragment.nodes[node].sing_annotations.push_back(std::move(ann));
        };
        if (c >= 1) annotate(c - 1, a / b);      // E_c = {xi_c = 0}
        if (c <= r - 1) annotate(c, b / a);      // E_{c+1} = {eta_c = 0}
    }
    for (auto& n : out.fragment.nodes)
        if (n.invariant) n.z_total = static_cast<int>(n.sing_annotations.size());
    return out;
}

}  // namespace folsurf
