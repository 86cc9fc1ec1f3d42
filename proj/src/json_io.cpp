#include "folsurf/json_io.hpp"

#include <sstream>

namespace folsurf {

Json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw InputError("expected a rational as \"p/q\" or an integer");
}

Json scalar_json(const Scalar& s) {
    if (s.is_rational()) return rat_json(s.as_rational());
    return Json{{"a", rat_json(s.rational_part())},
                {"b", rat_json(s.radical_part())},
                {"d", s.radicand().str()}};
}

Json classification_json(const SingularityClass& cls) {
    Json j;
    j["kind"] = germ_kind_name(cls.kind);
    j["reduced"] = cls.reduced;
    j["semi_reduced"] = cls.semi_reduced;
    if (cls.kind != GermKind::NonSingular) {
        j["eigen_real"] = cls.eigen_real;
        j["trace"] = rat_json(cls.trace);
        j["det"] = rat_json(cls.det);
        j["lambda"] = cls.lambda ? scalar_json(*cls.lambda) : Json(nullptr);
    }
    return j;
}

Json index_record_json(const IndexRecord& rec) {
    return Json{{"cs", scalar_json(rec.cs)},
                {"z", rec.z},
                {"source", rec.source == IndexRecord::ClosedForm ? "closed-form"
                                                                 : "series-oracle"}};
}

Json forest_json(const ResolutionForest& forest) {
    Json j;
    j["input"] = forest.input;
    j["blowups"] = forest.blowup_count();
    j["depth"] = forest.depth;
    Json nodes = Json::array();
    for (const auto& n : forest.nodes) {
        nodes.push_back(Json{{"id", n.id},
                             {"locus", n.locus},
                             {"center_singular", n.center_was_singular},
                             {"curves_through", n.curves_through}});
    }
    j["nodes"] = nodes;
    Json curves = Json::array();
    for (const auto& c : forest.curves) {
        Json cj{{"id", c.id}, {"self_int", c.self_int}, {"invariant", c.invariant}};
        if (c.invariant) {
            cj["z_total"] = c.z_total();
        } else {
            cj["tang_total"] = c.tang_total;
            Json tp = Json::array();
            for (const auto& t : c.tangency_points)
                tp.push_back(Json{{"locus", t.locus}, {"order", t.order}});
            cj["tangency_points"] = tp;
        }
        Json sp = Json::array();
        for (const auto& p : c.singular_points) {
            Json pj{{"point", p.point_id},
                    {"locus", p.locus},
                    {"class", classification_json(p.cls)}};
            if (c.invariant) {
                pj["cs"] = scalar_json(p.cs);
                pj["z"] = p.z;
            }
            sp.push_back(pj);
        }
        cj["singular_points"] = sp;
        curves.push_back(cj);
    }
    j["curves"] = curves;
    Json edges = Json::array();
    for (const auto& [a, b] : forest.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = edges;
    return j;
}

Json reduce_report_json(const PlaneGerm& v, const ResolutionForest& forest) {
    Json j = forest_json(forest);
    j["classification"] = classification_json(classify_at_origin(v));
    Json audit = Json::array();
    for (const auto& e : cs_audit(forest)) {
        audit.push_back(Json{{"curve", e.curve_id},
                             {"cs_sum", scalar_json(e.cs_sum)},
                             {"self_int", e.self_int.str()},
                             {"pass", e.pass}});
    }
    j["audit"] = audit;
    if (!forest.curves.empty()) {
        auto lat = forest_lattice(forest);
        Json disc;
        Json ord = Json::array();
        for (const auto& a : ordinary_discrepancies(lat)) ord.push_back(rat_json(a));
        disc["ordinary"] = ord;
        Json fol = Json::array();
        for (const auto& a : foliated_discrepancies(lat)) fol.push_back(rat_json(a));
        disc["foliated"] = fol;
        j["discrepancies"] = disc;
        auto rep = verify_pos_rat_structure(forest);
        Json st{{"is_string", rep.is_string},
                {"unique_non_invariant", rep.unique_non_invariant},
                {"flanks_are_f_chains", rep.flanks_are_f_chains},
                {"discrepancy_ok", rep.discrepancy_ok},
                {"pass", rep.pass()}};
        if (rep.non_invariant_id >= 0) st["non_invariant"] = rep.non_invariant_id;
        if (!rep.detail.empty()) st["detail"] = rep.detail;
        j["structure"] = st;
    }
    return j;
}

std::string forest_dot(const ResolutionForest& forest) {
    std::ostringstream out;
    out << "graph forest {\n";
    for (const auto& c : forest.curves) {
        out << "  E" << c.id << " [label=\"E" << c.id + 1 << " (" << c.self_int << ")\""
            << (c.invariant ? "" : ", color=red") << "];\n";
    }
    for (const auto& [a, b] : forest.edges) out << "  E" << a << " -- E" << b << ";\n";
    out << "}\n";
    return out.str();
}

Json graph_json(const DualGraph& g) {
    Json j;
    Json nodes = Json::array();
    for (const auto& n : g.nodes) {
        Json nj{{"id", n.id},
                {"self_int", n.self_int},
                {"genus", n.genus},
                {"invariant", n.invariant}};
        if (n.z_total) nj["z_total"] = *n.z_total;
        if (n.tang_total) nj["tang_total"] = *n.tang_total;
        Json ann = Json::array();
        for (const auto& a : n.sing_annotations) {
            Json aj{{"point", a.point_id},
                    {"kind", germ_kind_name(a.kind)},
                    {"reduced", a.reduced}};
            if (a.lambda) aj["lambda"] = scalar_json(*a.lambda);
            if (a.index) aj["index"] = index_record_json(*a.index);
            ann.push_back(aj);
        }
        nj["annotations"] = ann;
        nodes.push_back(nj);
    }
    j["nodes"] = nodes;
    Json edges = Json::array();
    for (const auto& e : g.edges)
        edges.push_back(Json{{"a", e.a}, {"b", e.b}, {"mult", e.mult}});
    j["edges"] = edges;
    return j;
}

DualGraph graph_from_json(const Json& j) {
    DualGraph g;
    if (!j.contains("nodes")) throw InputError("graph JSON needs a nodes array");
    for (const auto& nj : j.at("nodes")) {
        CurveNode n;
        n.id = nj.at("id").get<int>();
        n.self_int = nj.at("self_int").get<int>();
        n.genus = nj.value("genus", 0);
        n.invariant = nj.value("invariant", true);
        if (nj.contains("z_total")) n.z_total = nj.at("z_total").get<int>();
        if (nj.contains("tang_total")) n.tang_total = nj.at("tang_total").get<int>();
        for (const auto& aj : nj.value("annotations", Json::array())) {
            SingAnnotation a;
            a.point_id = aj.value("point", -1);
            a.reduced = aj.value("reduced", true);
            std::string kind = aj.value("kind", "non_degenerate");
            if (kind == germ_kind_name(GermKind::NonSingular)) a.kind = GermKind::NonSingular;
            else if (kind == germ_kind_name(GermKind::SaddleNode)) a.kind = GermKind::SaddleNode;
            else if (kind == germ_kind_name(GermKind::NilpotentOrDegenerate))
                a.kind = GermKind::NilpotentOrDegenerate;
            else a.kind = GermKind::NonDegenerate;
            if (aj.contains("lambda") && aj.at("lambda").is_string())
                a.lambda = Scalar(rat_from_json(aj.at("lambda")));
            if (aj.contains("index")) {
                IndexRecord rec;
                rec.cs = Scalar(rat_from_json(aj.at("index").at("cs")));
                rec.z = aj.at("index").at("z").get<int>();
                a.index = rec;
            }
            n.sing_annotations.push_back(std::move(a));
        }
        g.nodes.push_back(std::move(n));
    }
    for (const auto& ej : j.value("edges", Json::array())) {
        if (ej.is_array())
            g.edges.push_back({ej.at(0).get<int>(), ej.at(1).get<int>(), 1});
        else
            g.edges.push_back(
                {ej.at("a").get<int>(), ej.at("b").get<int>(), ej.value("mult", 1)});
    }
    validate_graph(g);
    return g;
}

Json pattern_report_json(const PatternReport& rep) {
    Json j;
    Json tags = Json::object();
    for (const auto& [id, ts] : rep.node_tags) tags[std::to_string(id)] = ts;
    j["node_tags"] = tags;
    j["hj_strings"] = rep.hj_strings;
    j["f_chains"] = rep.f_chains;
    j["generalized_chains"] = rep.generalized_chains;
    j["egl_cycles"] = rep.egl_cycles;
    j["violations"] = rep.violations;
    return j;
}

Json component_class_json(const ComponentClass& cls) {
    Json j{{"kind", pattern_kind_name(cls.kind)}, {"via", pattern_kind_name(cls.via)}};
    if (!cls.detail.empty()) j["detail"] = cls.detail;
    return j;
}

std::string graph_dot(const DualGraph& g) {
    std::ostringstream out;
    out << "graph dual {\n";
    for (const auto& n : g.nodes) {
        out << "  C" << n.id << " [label=\"C" << n.id << " (" << n.self_int << ")";
        if (n.z_total) out << " z=" << *n.z_total;
        out << "\"" << (n.invariant ? "" : ", color=red") << "];\n";
    }
    for (const auto& e : g.edges) {
        for (int k = 0; k < e.mult; ++k) out << "  C" << e.a << " -- C" << e.b << ";\n";
    }
    out << "}\n";
    return out.str();
}

ExceptionalLattice lattice_from_json(const Json& j) {
    if (!j.contains("gram")) throw InputError("lattice JSON needs a gram matrix");
    std::vector<std::vector<Int>> gram;
    for (const auto& row : j.at("gram")) {
        std::vector<Int> r;
        for (const auto& e : row) r.push_back(Int(e.get<long long>()));
        gram.push_back(std::move(r));
    }
    std::vector<CurveMeta> meta;
    for (const auto& mj : j.value("meta", Json::array())) {
        CurveMeta m;
        m.genus = mj.value("genus", 0);
        m.invariant = mj.value("invariant", true);
        if (mj.contains("z_total")) m.z_total = mj.at("z_total").get<int>();
        if (mj.contains("tang_total")) m.tang_total = mj.at("tang_total").get<int>();
        m.nodal = mj.value("nodal", false);
        if (mj.contains("chi")) m.chi = rat_from_json(mj.at("chi"));
        meta.push_back(std::move(m));
    }
    return ExceptionalLattice(std::move(gram), std::move(meta));
}

WeilDivisorData divisor_from_json(const Json& j, int rank) {
    WeilDivisorData d;
    for (const auto& e : j.at("b")) d.b.push_back(rat_from_json(e));
    if (static_cast<int>(d.b.size()) != rank)
        throw InputError("divisor coefficient count differs from the lattice rank");
    if (j.contains("self")) d.self_pairing = rat_from_json(j.at("self"));
    return d;
}

InvariantSheet sheet_from_json(const Json& j) {
    InvariantSheet s;
    s.KF2 = rat_from_json(j.at("KF2"));
    s.KFKX = rat_from_json(j.at("KFKX"));
    s.chiO = Int(j.value("chiO", 0));
    for (const auto& kj : j.value("sing", Json::array())) {
        if (kj.is_string()) {
            std::string k = kj.get<std::string>();
            if (k == "cartier") s.sing.push_back(SingularityKind::cartier());
            else if (k == "mild-lc") s.sing.push_back(SingularityKind::mild_lc());
            else if (k == "gorenstein") s.sing.push_back(SingularityKind::gorenstein());
            else if (k == "2-gorenstein") s.sing.push_back(SingularityKind::two_gorenstein());
            else if (k == "cusp") s.sing.push_back(SingularityKind::cusp());
            else throw InputError("unknown singularity kind: " + k);
        } else {
            s.sing.push_back(SingularityKind::terminal(Int(kj.at("n").get<long long>()),
                                                       Int(kj.at("q").get<long long>())));
        }
    }
    auto idx = [&](const char* key) -> std::optional<Int> {
        if (!j.contains(key)) return std::nullopt;
        return Int(j.at(key).get<long long>());
    };
    s.i_X = idx("i_X");
    s.i_KX = idx("i_KX");
    s.i_F = idx("i_F");
    s.i_Q = idx("i_Q");
    s.i_P = idx("i_P");
    s.validate();
    return s;
}

Json bounds_json(const BoundsRecord& b) {
    Json j{{"gamma", rat_json(b.gamma)},
           {"nef_multiple", b.nef_multiple},
           {"ample_multiple", b.ample_multiple},
           {"delta", rat_json(b.delta)},
           {"alpha", b.alpha.str()},
           {"degree_bound", rat_json(b.degree_bound)}};
    if (b.i_P) j["i_P"] = b.i_P->str();
    return j;
}

Json extracted_json(const ExtractedInvariants& e) {
    return Json{{"B1", rat_json(e.B1)},
                {"B2", rat_json(e.B2)},
                {"B3", e.B3.str()},
                {"B4", e.B4.str()},
                {"sum_a", rat_json(e.sum_a)},
                {"sigma_bound", rat_json(e.sigma_bound)}};
}

Json quot_json(const QuotFoliation& qf) {
    Json j{{"n", qf.s.n.str()}, {"q", qf.s.q.str()}};
    Json hj;
    Json res = Json::array(), ed = Json::array();
    for (const auto& b : qf.hj.res_chain) res.push_back(b.str());
    for (const auto& a : qf.hj.edim_chain) ed.push_back(a.str());
    hj["res_chain"] = res;
    hj["edim_chain"] = ed;
    hj["edim_bound"] = qf.hj.edim_bound;
    j["hj"] = hj;
    Json charts = Json::array();
    for (const auto& c : qf.charts) {
        auto coord = [](const std::pair<Int, Int>& exp, const LinForm& form) {
            return Json{{"exp", Json::array({exp.first.str(), exp.second.str()})},
                        {"form", form.to_string()}};
        };
        charts.push_back(Json{{"xi", coord(c.xi_exp, c.xi_form)},
                              {"eta", coord(c.eta_exp, c.eta_form)}});
    }
    j["charts"] = charts;
    Json lj = Json::array();
    for (const auto& l : qf.lambda_j) lj.push_back(rat_json(l));
    j["lambda_j"] = lj;
    if (qf.lambda) {
        j["lambda"] = rat_json(*qf.lambda);
        j["invariant"] = qf.invariant;
    }
    return j;
}

Json chain_profile_json(const ChainProfile& p) {
    Json j;
    j["fragment"] = graph_json(p.fragment);
    j["lambda_positive"] = p.lambda_positive;
    j["non_invariant"] = p.non_invariant;
    j["semi_reduced_points"] = p.semi_reduced_points;
    std::vector<int> ids;
    for (const auto& n : p.fragment.nodes) ids.push_back(n.id);
    if (!ids.empty()) j["classification"] = component_class_json(
        classify_component(p.fragment, ids));
    return j;
}

}  // namespace folsurf
