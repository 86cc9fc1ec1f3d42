#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "folsurf/batch.hpp"
#include "folsurf/json_io.hpp"

namespace folsurf {
namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    try {
        Json j;
        in >> j;
        return j;
    } catch (const Json::parse_error& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
}

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw InputError("expected an integer, got \"" + s + "\"");
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

StopCriterion parse_stop(const std::string& s) {
    if (s == "reduced") return StopCriterion::Reduced;
    if (s == "semi-reduced") return StopCriterion::SemiReduced;
    throw InputError("stop criterion must be \"reduced\" or \"semi-reduced\"");
}

// Branch syntax: "x=0", "y=0", "cusp:a:m:n", or a polynomial (smooth branch).
BranchSpec parse_branch(const std::string& s) {
    if (s == "x=0") return BranchSpec::axis_x0();
    if (s == "y=0") return BranchSpec::axis_y0();
    if (s.rfind("cusp:", 0) == 0) {
        std::vector<std::string> parts;
        std::size_t pos = 5;
        while (pos <= s.size()) {
            std::size_t next = s.find(':', pos);
            if (next == std::string::npos) next = s.size();
            parts.push_back(s.substr(pos, next - pos));
            pos = next + 1;
        }
        if (parts.size() != 3) throw InputError("cuspidal branch syntax is cusp:a:m:n");
        return BranchSpec::cuspidal(rat_from_string(parts[0]),
                                    static_cast<int>(parse_int(parts[1])),
                                    static_cast<int>(parse_int(parts[2])));
    }
    PlaneGerm carrier = PlaneGerm::parse("(" + s + ")*dx + 1*dy");
    return BranchSpec::smooth(carrier.f());
}

std::string reduce_text(const Json& report) {
    std::ostringstream out;
    out << "input: " << report.at("input").get<std::string>() << "\n";
    out << "blowups: " << report.at("blowups") << "  depth: " << report.at("depth") << "\n";
    for (const auto& c : report.at("curves")) {
        out << "E" << c.at("id") << ": self " << c.at("self_int")
            << (c.at("invariant").get<bool>() ? " invariant" : " non-invariant");
        if (c.contains("z_total")) out << " z=" << c.at("z_total");
        if (c.contains("tang_total")) out << " tang=" << c.at("tang_total");
        out << " sing=" << c.at("singular_points").size() << "\n";
    }
    out << "classification: " << report.at("classification").at("kind").get<std::string>()
        << (report.at("classification").at("reduced").get<bool>() ? " (reduced)" : "") << "\n";
    if (report.contains("structure"))
        out << "structure check: "
            << (report.at("structure").at("pass").get<bool>() ? "pass" : "fail") << "\n";
    return out.str();
}

std::vector<std::vector<int>> graph_components(const DualGraph& g) {
    std::map<int, std::vector<int>> adj;
    for (const auto& n : g.nodes) adj[n.id];
    for (const auto& e : g.edges) {
        if (e.a != e.b) {
            adj[e.a].push_back(e.b);
            adj[e.b].push_back(e.a);
        }
    }
    std::map<int, bool> seen;
    std::vector<std::vector<int>> comps;
    for (const auto& n : g.nodes) {
        if (seen[n.id]) continue;
        std::vector<int> comp, stack{n.id};
        seen[n.id] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

int run(int argc, char** argv) {
    CLI::App app{"exact birational calculus for foliated surface germs"};
    app.require_subcommand(1);

    std::string expr, corpus, stop_str = "reduced", format = "json";
    int max_depth = 64, trunc = 32;
    bool serial = false;

    auto* reduce = app.add_subcommand("reduce", "reduce a germ to (semi-)reduced form");
    reduce->add_option("expr", expr, "germ expression f*dx + g*dy");
    reduce->add_option("--corpus", corpus, "newline-delimited germ expressions");
    reduce->add_flag("--serial", serial, "disable parallel corpus processing");
    reduce->add_option("--stop", stop_str, "reduced | semi-reduced");
    reduce->add_option("--max-depth", max_depth, "blowup budget");
    reduce->add_option("--format", format, "json | dot | text");
    reduce->callback([&] {
        StopCriterion stop = parse_stop(stop_str);
        if (!corpus.empty()) {
            auto lines = read_corpus(corpus);
            auto results = serial ? process_corpus_serial(lines, stop, max_depth)
                                  : process_corpus_parallel(lines, stop, max_depth);
            emit(Json(results));
            return;
        }
        if (expr.empty()) throw InputError("reduce needs a germ expression or --corpus");
        PlaneGerm v = PlaneGerm::parse(expr);
        ResolutionForest forest = seidenberg_reduce(v, max_depth, stop);
        if (format == "dot")
            std::cout << forest_dot(forest);
        else if (format == "text")
            std::cout << reduce_text(reduce_report_json(v, forest));
        else if (format == "json")
            emit(reduce_report_json(v, forest));
        else
            throw InputError("format must be json, dot or text");
    });

    auto* classify = app.add_subcommand("classify", "classify the singularity at the origin");
    classify->add_option("expr", expr, "germ expression")->required();
    classify->callback([&] { emit(classification_json(classify_at_origin(PlaneGerm::parse(expr)))); });

    std::string branch_str;
    auto* indices = app.add_subcommand("indices", "CS and Z indices along an invariant branch");
    indices->add_option("expr", expr, "germ expression")->required();
    indices->add_option("--branch", branch_str, "x=0 | y=0 | cusp:a:m:n | polynomial")->required();
    indices->add_option("--trunc", trunc, "series truncation order");
    indices->callback([&] {
        PlaneGerm v = PlaneGerm::parse(expr);
        BranchSpec branch = parse_branch(branch_str);
        if (!branch_invariant(v, branch, trunc))
            throw DomainError("branch " + branch.to_string() + " is not invariant");
        IndexRecord closed = closed_form_cs_z(v, branch);
        IndexRecord oracle = series_oracle_cs_z(v, branch, trunc);
        emit(Json{{"branch", branch.to_string()},
                  {"invariant", true},
                  {"closed_form", index_record_json(closed)},
                  {"series_oracle", index_record_json(oracle)},
                  {"agree", closed.cs == oracle.cs && closed.z == oracle.z}});
    });

    std::string graph_file, lambda1_str;
    bool one_sing = false;
    auto* graph = app.add_subcommand("graph", "pattern detection on a dual graph");
    graph->add_option("file", graph_file, "graph JSON")->required();
    auto* opt_l1 = graph->add_option("--lambda1", lambda1_str,
                                     "propagate eigenvalues from lambda_1 along HJ strings");
    graph->add_flag("--one-singularity", one_sing, "propagate with the one-singularity boundary")
        ->excludes(opt_l1);
    graph->add_option("--format", format, "json | dot");
    graph->callback([&] {
        DualGraph g = graph_from_json(load_json(graph_file));
        if (format == "dot") {
            std::cout << graph_dot(g);
            return;
        }
        if (format != "json") throw InputError("format must be json or dot");
        PatternReport rep = detect_patterns(g);
        Json out{{"patterns", pattern_report_json(rep)}};
        Json comps = Json::array();
        for (const auto& comp : graph_components(g))
            comps.push_back(Json{{"nodes", comp},
                                 {"class", component_class_json(classify_component(g, comp))}});
        out["components"] = comps;
        Json egl = Json::array();
        for (const auto& cycle : rep.egl_cycles) {
            EglCheck chk = egl_singularity_check(g, cycle);
            Json cj{{"cycle", cycle},
                    {"pass", chk.pass},
                    {"cs_checked", chk.cs_checked},
                    {"missing", chk.missing}};
            if (!chk.detail.empty()) cj["detail"] = chk.detail;
            egl.push_back(cj);
        }
        out["egl_checks"] = egl;
        if (one_sing || !lambda1_str.empty()) {
            ChainBoundary boundary =
                one_sing ? ChainBoundary::one_singularity()
                         : ChainBoundary::given(Scalar(rat_from_string(lambda1_str)));
            std::map<int, const CurveNode*> by_id;
            for (const auto& n : g.nodes) by_id[n.id] = &n;
            Json props = Json::array();
            for (const auto& str : rep.hj_strings) {
                std::vector<CurveNode> chain;
                for (int id : str) chain.push_back(*by_id.at(id));
                ChainPropagation p = propagate_chain_eigenvalues(chain, boundary);
                Json lj = Json::array();
                for (const auto& l : p.lambda) lj.push_back(l ? scalar_json(*l) : Json(nullptr));
                props.push_back(Json{{"chain", str},
                                     {"lambda", lj},
                                     {"saddle_nodes", p.saddle_nodes},
                                     {"f_chain_certificate", p.f_chain_certificate},
                                     {"orientation_forward", p.orientation_forward}});
            }
            out["propagation"] = props;
        }
        emit(out);
    });

    std::string pullback_file;
    auto* pullback = app.add_subcommand("pullback", "Mumford pullbacks and discrepancies");
    pullback->add_option("file", pullback_file, "lattice + divisor JSON")->required();
    pullback->callback([&] {
        Json in = load_json(pullback_file);
        ExceptionalLattice lat = lattice_from_json(in);
        Json out{{"rank", lat.rank()},
                 {"negative_definite", lat.negative_definite()},
                 {"determinant", lat.determinant().str()}};
        Json pulls = Json::array();
        for (const auto& dj : in.value("divisors", Json::array())) {
            WeilDivisorData d = divisor_from_json(dj, lat.rank());
            Json pj;
            Json coeffs = Json::array();
            for (const auto& a : mumford_pullback(lat, d)) coeffs.push_back(rat_json(a));
            pj["coefficients"] = coeffs;
            if (d.self_pairing)
                pj["self_pairing"] = rat_json(intersection_number(lat, d, d, *d.self_pairing));
            pulls.push_back(pj);
        }
        out["pullbacks"] = pulls;
        Json ord = Json::array();
        std::vector<Rat> ordinary = ordinary_discrepancies(lat);
        for (const auto& a : ordinary) ord.push_back(rat_json(a));
        out["ordinary_discrepancies"] = ord;
        if (in.contains("meta")) {
            std::vector<Rat> foliated = foliated_discrepancies(lat);
            Json fol = Json::array();
            for (const auto& a : foliated) fol.push_back(rat_json(a));
            out["foliated_discrepancies"] = fol;
            if (in.contains("eps")) {
                Rat eps = rat_from_json(in.at("eps"));
                Json tests = Json::array();
                for (int i = 0; i < lat.rank(); ++i) {
                    EpsilonResult r = epsilon_canonical_test(foliated[i], ordinary[i], eps);
                    Json tj{{"curve", i},
                            {"pass", r.pass},
                            {"value_at_eps", rat_json(r.value_at_eps)}};
                    if (r.threshold) tj["threshold"] = rat_json(*r.threshold);
                    tests.push_back(tj);
                }
                out["epsilon_test"] = tests;
            }
        }
        emit(out);
    });

    std::string n_str, q_str, lambda_str;
    bool symbolic = false;
    auto* quot = app.add_subcommand("quot", "resolved charts of a 1/n(1,q) quotient foliation");
    quot->add_option("n", n_str, "order of the cyclic group")->required();
    quot->add_option("q", q_str, "weight, coprime to n")->required();
    auto* opt_lambda = quot->add_option("--lambda", lambda_str, "evaluate at this eigenvalue ratio");
    quot->add_flag("--symbolic", symbolic, "keep lambda symbolic (default)")->excludes(opt_lambda);
    quot->callback([&] {
        QuotSingularity s(parse_int(n_str), parse_int(q_str));
        if (lambda_str.empty()) {
            emit(quot_json(quotient_foliation_charts(s)));
            return;
        }
        Rat lambda = rat_from_string(lambda_str);
        Json out = quot_json(quotient_foliation_charts(s, lambda));
        out["profile"] = chain_profile_json(generalized_chain_profile(s, lambda));
        emit(out);
    });

    std::string sheet_file, extract_file;
    std::vector<std::string> eval_strs;
    int c2 = 0;
    auto* rr = app.add_subcommand("rr", "Riemann-Roch values and invariant extraction");
    rr->add_option("--sheet", sheet_file, "invariant sheet JSON");
    rr->add_option("--eval", eval_strs, "evaluate P at these m");
    rr->add_option("--extract", extract_file, "samples JSON {\"m\": value}");
    rr->add_option("--c2", c2, "index bound at terminal points (extraction)");
    rr->callback([&] {
        Json out;
        if (!extract_file.empty()) {
            if (c2 < 1) throw InputError("--extract needs --c2 >= 1");
            std::map<Int, Rat> samples;
            for (const auto& [k, vj] : load_json(extract_file).items())
                samples[parse_int(k)] = rat_from_json(vj);
            out["extracted"] = extracted_json(extract_invariants(samples, c2));
        }
        if (!sheet_file.empty() && !eval_strs.empty()) {
            HilbertFunction P = hilbert_function(sheet_from_json(load_json(sheet_file)));
            Json values = Json::array();
            for (const auto& ms : eval_strs) {
                Int m = parse_int(ms);
                Json vj{{"m", m.str()}};
                try {
                    vj["value"] = rat_json(P(m));
                } catch (const DomainError&) {
                    vj["value"] = nullptr;
                }
                values.push_back(vj);
            }
            out["values"] = values;
        }
        if (out.empty())
            throw InputError("rr needs --sheet with --eval, or --extract with --c2");
        emit(out);
    });

    std::string iky_str, delta_str;
    auto* bounds = app.add_subcommand("bounds", "effective very-ampleness bounds");
    bounds->add_option("--sheet", sheet_file, "invariant sheet JSON")->required();
    bounds->add_option("--iky", iky_str, "index of K_Y")->required();
    bounds->add_option("--delta", delta_str, "override the delta bound");
    bounds->callback([&] {
        InvariantSheet sheet = sheet_from_json(load_json(sheet_file));
        std::optional<Rat> delta;
        if (!delta_str.empty()) delta = rat_from_string(delta_str);
        emit(bounds_json(effective_bounds(sheet, parse_int(iky_str), delta)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << Json{{"error", Json{{"type", "input"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 2;
    }
    return 0;
}

}  // namespace
}  // namespace folsurf

int main(int argc, char** argv) {
    try {
        return folsurf::run(argc, argv);
    } catch (const folsurf::InputError& e) {
        std::cerr << folsurf::Json{{"error", folsurf::Json{{"type", "input"},
                                                           {"message", e.what()}}}}
                         .dump(2)
                  << "\n";
        return 2;
    } catch (const folsurf::DomainError& e) {
        std::cerr << folsurf::Json{{"error", folsurf::Json{{"type", "domain"},
                                                           {"message", e.what()}}}}
                         .dump(2)
                  << "\n";
        return 1;
    }
}
