#include "folsurf/numerics.hpp"

#include <algorithm>

namespace folsurf {

std::string SingularityKind::name() const {
    switch (tag) {
        case CartierPoint: return "cartier";
        case MildLcNonCanonical: return "mild-lc";
        case GorensteinCanonical: return "gorenstein";
        case TwoGorensteinCanonical: return "2-gorenstein";
        case NonQGorensteinCanonical: return "cusp";
        case Terminal:
            return "terminal(" + quot->n.str() + "," + quot->q.str() + ")";
    }
    return "unknown";
}

std::optional<Rat> local_contribution(const SingularityKind& kind, const Int& m) {
    if (m < 0) throw InputError("m must be nonnegative");
    switch (kind.tag) {
        case SingularityKind::CartierPoint:
        case SingularityKind::MildLcNonCanonical:
        case SingularityKind::GorensteinCanonical:
            return Rat(0);
        case SingularityKind::TwoGorensteinCanonical:
            return m % 2 == 0 ? Rat(0) : Rat(-1, 2);
        case SingularityKind::NonQGorensteinCanonical:
            return m == 0 ? Rat(0) : Rat(-1);
        case SingularityKind::Terminal: {
            const Int& n = kind.quot->n;
            if (m % n == 0) return Rat(0);
            if (m == 1) return Rat(1 - n) / Rat(2 * n);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

void InvariantSheet::validate() const {
    for (const auto& idx : {i_X, i_KX, i_F, i_Q, i_P})
        if (idx && *idx <= 0) throw InputError("indices must be positive");
    if (i_Q && i_F && *i_F % *i_Q != 0) throw InputError("i_Q must divide i_F");
}

HilbertFunction::HilbertFunction(InvariantSheet sheet) : sheet_(std::move(sheet)) {
    sheet_.validate();
}

Rat HilbertFunction::operator()(const Int& m) const {
    if (m < 0) throw InputError("m must be nonnegative");
    Rat mm(m);
    Rat val = mm * mm * sheet_.KF2 / 2 - mm * sheet_.KFKX / 2 + Rat(sheet_.chiO);
    for (const auto& k : sheet_.sing) {
        auto c = local_contribution(k, m);
        if (!c)
            throw DomainError("local contribution undefined at m = " + m.str() + " for " +
                              k.name());
        val += *c;
    }
    return val;
}

Int HilbertFunction::eval_integer(const Int& m) const {
    Rat v = (*this)(m);
    if (rat_den(v) != 1) throw DomainError("Hilbert value is not an integer at m = " + m.str());
    return rat_num(v);
}

HilbertFunction hilbert_function(InvariantSheet sheet) {
    return HilbertFunction(std::move(sheet));
}

ExtractedInvariants extract_invariants(const std::map<Int, Rat>& samples, int C2_hint) {
    if (C2_hint < 1) throw InputError("C2 hint must be positive");
    auto p0 = samples.find(0);
    auto p1 = samples.find(1);
    if (p0 == samples.end() || p1 == samples.end())
        throw InputError("samples must include m = 0 and m = 1");
    if (rat_den(p0->second) != 1) throw DomainError("P(0) must be an integer");

    Int period = 2;
    for (int k = 2; k <= C2_hint; ++k) period = lcm_int(period, Int(k));
    std::vector<std::pair<Int, Rat>> killing;
    for (const auto& [m, v] : samples)
        if (m > 0 && m % period == 0) killing.push_back({m, v});
    if (killing.size() < 3)
        throw InputError("need at least three index-killing samples (multiples of " +
                         period.str() + ")");

    // On index-killing m the corrections reduce to -B4, so P is an honest
    // quadratic there: fit it from three samples and check the rest.
    Rat m1(killing[0].first), m2(killing[1].first), m3(killing[2].first);
    Rat v1 = killing[0].second, v2 = killing[1].second, v3 = killing[2].second;
    Rat d21 = (v2 - v1) / (m2 - m1);
    Rat d32 = (v3 - v2) / (m3 - m2);
    Rat quad = (d32 - d21) / (m3 - m1);
    Rat lin = d21 - quad * (m1 + m2);
    Rat cst = v1 - quad * m1 * m1 - lin * m1;
    for (const auto& [m, v] : killing)
        if (quad * Rat(m) * Rat(m) + lin * Rat(m) + cst != v)
            throw DomainError("index-killing samples are not on one quadratic");

    ExtractedInvariants out;
    out.B1 = 2 * quad;
    out.B2 = -2 * lin;
    out.B3 = rat_num(p0->second);
    Rat b4 = Rat(out.B3) - cst;
    if (rat_den(b4) != 1 || b4 < 0) throw DomainError("inconsistent samples: bad cusp count");
    out.B4 = rat_num(b4);
    out.sum_a = p1->second - (out.B1 - out.B2) / 2 - Rat(out.B3);
    out.sigma_bound = 4 * -out.sum_a;
    return out;
}

Int i_p_from_c2(int C2) {
    if (C2 < 1) throw InputError("C2 must be positive");
    Int f = 1;
    for (int k = 2; k <= C2; ++k) f *= k;
    return f;
}

BoundsRecord effective_bounds(const InvariantSheet& sheet, const Int& i_KY,
                              std::optional<Rat> delta) {
    sheet.validate();
    if (sheet.KF2 <= 0) throw DomainError("K_F^2 must be positive");
    if (i_KY <= 0) throw InputError("i(K_Y) must be positive");
    if (!sheet.i_Q) throw DomainError("finite i_Q required");
    if (!sheet.i_F) throw DomainError("finite i_F required");

    BoundsRecord out;
    Rat gamma = 2 * sheet.KFKX / sheet.KF2 + 3 * Rat(*sheet.i_Q);
    out.gamma = std::max(gamma, Rat(0));

    if (delta) {
        out.delta = *delta;
    } else {
        out.delta = Rat(8);  // smooth points and du Val singularities
        for (const auto& k : sheet.sing)
            if (k.tag == SingularityKind::Terminal) {
                Rat d = 4 * Rat(hj_expand(*k.quot).edim_bound - 1);
                out.delta = std::max(out.delta, d);
            }
    }

    out.alpha = 1;
    while (true) {
        Rat base = Rat(out.alpha * i_KY) + 3;
        if (base * base > out.delta && base > out.delta / 2) break;
        ++out.alpha;
    }

    Rat lead = Rat(out.alpha * i_KY) * (out.gamma + 4 * Rat(*sheet.i_F));
    out.degree_bound = lead * lead * sheet.KF2;
    out.i_P = sheet.i_P;
    return out;
}

}  // namespace folsurf
