// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. argv[1] is the path to the folsurf CLI (determinism check).
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "folsurf/blowup.hpp"
#include "folsurf/dualgraph.hpp"
#include "folsurf/json_io.hpp"
#include "folsurf/numerics.hpp"
#include "folsurf/quotsing.hpp"

using namespace folsurf;

namespace {

struct Check {
    std::ostringstream log;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "    FAILED: " << what << "\n";
        }
    }
};

PlaneGerm linear_diag(int m, int n) {
    return PlaneGerm::parse(std::to_string(n) + "*x*dx + " + std::to_string(m) + "*y*dy");
}

int euclid_blowups(int m, int n) {
    int steps = 0;
    while (m != n) {
        if (m > n) m -= n;
        else n -= m;
        ++steps;
    }
    return steps + 1;
}

// 1. Positive rational eigenvalue suite: structure check + blowup count.
void crit_pos_rat(Check& c) {
    auto t0 = std::chrono::steady_clock::now();
    for (int m = 1; m <= 12; ++m) {
        for (int n = 1; n <= m; ++n) {
            if (std::gcd(m, n) != 1) continue;
            auto forest = seidenberg_reduce(linear_diag(m, n));
            std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            c.require(forest.blowup_count() == euclid_blowups(m, n), tag + " blowup count");
            c.require(verify_pos_rat_structure(forest).pass(), tag + " structure clauses");
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 10.0, "runtime " + std::to_string(secs) + "s exceeds 10s");
}

// 2. 1/7(1,4) golden charts: exact linear forms, non-invariance loci.
void crit_quot_golden(Check& c) {
    QuotFoliation qf = quotient_foliation_charts(QuotSingularity(7, 4));
    c.require(qf.hj.res_chain == std::vector<Int>({2, 4}), "7/4 = [2,4]");
    c.require(qf.charts.size() == 3, "three charts");
    auto form_is = [](const LinForm& f, long c0, long c1) {
        return f.c0 == Rat(c0) && f.c1 == Rat(c1);
    };
    c.require(form_is(qf.charts[0].xi_form, -4, 1), "chart 0 xi form (lambda - 4)");
    c.require(form_is(qf.charts[0].eta_form, 7, 0), "chart 0 eta form 7");
    c.require(form_is(qf.charts[1].xi_form, -1, 2), "chart 1 xi form (2 lambda - 1)");
    c.require(form_is(qf.charts[1].eta_form, 4, -1), "chart 1 eta form (4 - lambda)");
    c.require(form_is(qf.charts[2].xi_form, 0, 7), "chart 2 xi form 7 lambda");
    c.require(form_is(qf.charts[2].eta_form, 1, -2), "chart 2 eta form (1 - 2 lambda)");
    c.require(qf.lambda_j == std::vector<Rat>({Rat(4), Rat(1, 2)}), "lambda_j = {4, 1/2}");
    auto at4 = quotient_foliation_charts(QuotSingularity(7, 4), Rat(4));
    c.require(at4.invariant == std::vector<bool>({false, true}), "E1 non-invariant at 4");
    auto at12 = quotient_foliation_charts(QuotSingularity(7, 4), Rat(1, 2));
    c.require(at12.invariant == std::vector<bool>({true, false}), "E2 non-invariant at 1/2");
}

// 3. CS conservation and the two K_G pairings on every suite-1 forest.
void crit_cs_conservation(Check& c) {
    for (int m = 1; m <= 12; ++m) {
        for (int n = 1; n <= m; ++n) {
            if (std::gcd(m, n) != 1) continue;
            auto forest = seidenberg_reduce(linear_diag(m, n));
            std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            for (const auto& e : cs_audit(forest))
                c.require(e.pass, tag + " CS sum on curve " + std::to_string(e.curve_id));
            auto lat = forest_lattice(forest);
            auto a = foliated_discrepancies(lat);
            for (int i = 0; i < lat.rank(); ++i) {
                Rat via_solve = 0;
                for (int j = 0; j < lat.rank(); ++j)
                    via_solve += a[j] * Rat(lat.gram()[i][j]);
                const CurveMeta& meta = lat.meta()[i];
                Rat via_index = meta.invariant
                                    ? Rat(*meta.z_total) - meta.chi_value()
                                    : Rat(*meta.tang_total) - Rat(lat.gram()[i][i]);
                c.require(via_solve == via_index,
                          tag + " K_G pairing on curve " + std::to_string(i));
            }
        }
    }
}

// 4. Series oracle vs closed forms on axes and the cuspidal branch.
void crit_index_oracle(Check& c) {
    auto agree = [&](const PlaneGerm& v, const BranchSpec& b, const std::string& tag) {
        IndexRecord cf = closed_form_cs_z(v, b);
        IndexRecord so = series_oracle_cs_z(v, b);
        c.require(cf.cs == so.cs && cf.z == so.z, tag);
    };
    for (int m = 1; m <= 7; ++m) {
        for (int n = 1; n <= 7; ++n) {
            if (std::gcd(m, n) != 1) continue;
            PlaneGerm v = linear_diag(m, n);
            std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            agree(v, BranchSpec::axis_x0(), tag + " x=0");
            agree(v, BranchSpec::axis_y0(), tag + " y=0");
            if (m >= 2 && n >= 2)
                agree(v, BranchSpec::cuspidal(Rat(2), m, n), tag + " cusp");
        }
    }
}

// 5. Eigenvalue recursion on all-(-2) chains with the one-singularity boundary.
void crit_chain_recursion(Check& c) {
    for (int len = 2; len <= 10; ++len) {
        std::vector<CurveNode> chain;
        for (int i = 0; i < len; ++i) chain.push_back({i, -2, 0, true, 2, {}, {}});
        auto p = propagate_chain_eigenvalues(chain, ChainBoundary::one_singularity());
        std::string tag = "length " + std::to_string(len);
        c.require(p.saddle_nodes == std::vector<int>({0}), tag + " saddle at position 0");
        c.require(!p.lambda[0].has_value(), tag + " no lambda before the boundary");
        for (int k = 1; k < len; ++k) {
            c.require(p.lambda[k] && *p.lambda[k] == Scalar(Rat(-(k + 1), k)),
                      tag + " lambda_" + std::to_string(k + 1) + " = -(k)/(k-1)");
            if (k >= 2)
                c.require(p.lambda[k - 1]->reciprocal() + *p.lambda[k] == Scalar(Rat(-2)),
                          tag + " step identity at " + std::to_string(k + 1));
        }
        c.require(p.f_chain_certificate, tag + " certificate");
    }
}

// 6. HJ chain lattices: definiteness, determinant, pullback denominators.
void crit_mumford(Check& c) {
    for (long n = 2; n <= 50; ++n) {
        for (long q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            auto lat = resolution_lattice(hj_expand(QuotSingularity(n, q)));
            std::string tag = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
            c.require(lat.negative_definite(), tag + " negative definite");
            Int det = lat.determinant();
            c.require(det == Int(n) || det == -Int(n), tag + " |det| = n");
            for (int i = 0; i < lat.rank(); ++i) {
                WeilDivisorData d;
                d.b.assign(lat.rank(), Rat(0));
                d.b[i] = 1;
                for (const auto& a : mumford_pullback(lat, d))
                    c.require(boost::multiprecision::denominator(Rat(a * n)) == 1,
                              tag + " denominator divides n");
            }
        }
    }
    auto a1 = resolution_lattice(hj_expand(QuotSingularity(2, 1)));
    auto coeff = mumford_pullback(a1, {{Rat(1)}, std::nullopt});
    c.require(coeff == std::vector<Rat>({Rat(1, 2)}), "A_1 coefficient 1/2");
}

// 7. Riemann-Roch roundtrip plus the cusp drop.
void crit_rr_roundtrip(Check& c) {
    std::mt19937 rng(909090);
    const int C2 = 9;
    Int L = 1;
    for (int k = 2; k <= C2; ++k) L = boost::multiprecision::lcm(L, Int(k));
    for (int trial = 0; trial < 200; ++trial) {
        InvariantSheet s;
        s.KF2 = Rat(1 + static_cast<int>(rng() % 20));
        s.KFKX = Rat(static_cast<int>(rng() % 21) - 10);
        s.chiO = static_cast<int>(rng() % 7) - 3;
        int cusps = static_cast<int>(rng() % 4);
        for (int i = 0; i < cusps; ++i) s.sing.push_back(SingularityKind::cusp());
        int others = static_cast<int>(rng() % 4);
        for (int i = 0; i < others; ++i) {
            switch (rng() % 4) {
                case 0: s.sing.push_back(SingularityKind::gorenstein()); break;
                case 1: s.sing.push_back(SingularityKind::two_gorenstein()); break;
                case 2: s.sing.push_back(SingularityKind::mild_lc()); break;
                default: {
                    int nn = 2 + static_cast<int>(rng() % (C2 - 1));
                    int qq = 1 + static_cast<int>(rng() % (nn - 1));
                    while (std::gcd(nn, qq) != 1) qq = 1 + static_cast<int>(rng() % (nn - 1));
                    s.sing.push_back(SingularityKind::terminal(nn, qq));
                }
            }
        }
        HilbertFunction P = hilbert_function(s);
        std::map<Int, Rat> samples;
        for (const Int& m : {Int(0), Int(1), L, Int(2 * L), Int(5 * L)}) samples[m] = P(m);
        auto e = extract_invariants(samples, C2);
        std::string tag = "trial " + std::to_string(trial);
        c.require(e.B1 == s.KF2, tag + " B1");
        c.require(e.B2 == s.KFKX, tag + " B2");
        c.require(e.B3 == s.chiO, tag + " B3");
        c.require(e.B4 == cusps, tag + " B4");
        InvariantSheet s2 = s;
        s2.sing.push_back(SingularityKind::cusp());
        HilbertFunction P2 = hilbert_function(s2);
        c.require(P2(0) == P(0), tag + " cusp leaves P(0)");
        for (const Int& m : {Int(1), L, Int(2 * L)})
            c.require(P2(m) == P(m) - 1, tag + " cusp drops P by 1");
    }
}

// 8. The local-contribution table.
void crit_contribution_table(Check& c) {
    for (const Int& m : {Int(0), Int(1), Int(2), Int(3), Int(7), Int(12)}) {
        for (auto kind : {SingularityKind::cartier(), SingularityKind::mild_lc(),
                          SingularityKind::gorenstein()})
            c.require(local_contribution(kind, m) == Rat(0), kind.name() + " is 0");
        auto tg = local_contribution(SingularityKind::two_gorenstein(), m);
        c.require(tg == (m % 2 == 0 ? Rat(0) : Rat(-1, 2)), "2-Gorenstein parity");
        auto cusp = local_contribution(SingularityKind::cusp(), m);
        c.require(cusp == (m == 0 ? Rat(0) : Rat(-1)), "cusp step");
    }
    auto t52 = SingularityKind::terminal(5, 2);
    c.require(local_contribution(t52, 1) == Rat(-2, 5), "terminal (1-n)/(2n) at m=1");
    c.require(local_contribution(SingularityKind::terminal(2, 1), 1) == Rat(-1, 4),
              "terminal (2,1) at m=1");
    c.require(local_contribution(t52, 5) == Rat(0), "terminal 0 at n | m");
    c.require(local_contribution(t52, 10) == Rat(0), "terminal 0 at n | m");
    c.require(!local_contribution(t52, 3).has_value(), "terminal undefined elsewhere");
}

// 9. Epsilon-canonical thresholds.
void crit_epsilon(Check& c) {
    for (int d = 0; d <= 10; ++d) {
        Rat thr(1, 1 + d);
        auto r = epsilon_canonical_test(Rat(-1), Rat(d), thr);
        c.require(r.pass && r.threshold == thr, "threshold 1/(1+d), d=" + std::to_string(d));
        auto below = epsilon_canonical_test(Rat(-1), Rat(d), thr - Rat(1, 1000));
        c.require(!below.pass, "fails below the threshold, d=" + std::to_string(d));
    }
    for (const Rat& eps : {Rat(1, 100), Rat(1, 2), Rat(99, 100)})
        c.require(epsilon_canonical_test(Rat(0), Rat(0), eps).pass, "all-zero passes");
}

std::string run_capture(const std::string& cmd) {
    std::string out;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return "<popen failed>";
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int rc = pclose(p);
    out += "\n[exit " + std::to_string(rc) + "]";
    return out;
}

// 10. Two runs of the full CLI suite are byte-identical.
void crit_determinism(Check& c, const std::string& cli) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "folsurf_accept";
    fs::create_directories(dir);
    auto write = [&](const char* name, const std::string& text) {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    };
    std::string corpus = write("corpus.txt",
                               "2*x*dx + 5*y*dy\n3*x*dx + 2*y*dy\n"
                               "x*y*dx + (y^2 + x^3)*dy\n-3*x*dx + 2*y*dy\n");
    std::string graph = write("graph.json",
                              R"({"nodes":[{"id":0,"self_int":-2,"invariant":true,"z_total":1},)"
                              R"({"id":1,"self_int":-2,"invariant":true,"z_total":2}],)"
                              R"("edges":[[0,1]]})");
    std::string lat = write("lat.json",
                            R"({"gram":[[-2,1],[1,-2]],"meta":[{"z_total":2},{"z_total":1}],)"
                            R"("divisors":[{"b":["1","0"],"self":"-1"}],"eps":"1/4"})");
    std::string sheet = write("sheet.json",
                              R"({"KF2":"2","KFKX":"4","chiO":1,)"
                              R"("sing":["cusp",{"n":3,"q":1}],"i_F":6,"i_Q":3})");
    std::vector<std::string> cmds = {
        cli + " classify \"x*dx - y*dy\"",
        cli + " reduce \"2*x*dx+5*y*dy\"",
        cli + " reduce \"3*x*dx + 2*y*dy\" --format dot",
        cli + " reduce --corpus " + corpus,
        cli + " reduce --corpus " + corpus + " --serial",
        cli + " quot 7 4 --symbolic",
        cli + " quot 7 4 --lambda 3",
        cli + " indices \"2*x*dx + 3*y*dy\" --branch x=0",
        cli + " graph " + graph + " --one-singularity",
        cli + " pullback " + lat,
        cli + " rr --sheet " + sheet + " --eval 0 1 6",
        cli + " bounds --sheet " + sheet + " --iky 6",
    };
    for (const auto& cmd : cmds) {
        std::string first = run_capture(cmd);
        std::string second = run_capture(cmd);
        c.require(!first.empty() && first == second, "outputs differ for: " + cmd);
    }
    std::string serial = run_capture(cli + " reduce --corpus " + corpus + " --serial");
    std::string parallel = run_capture(cli + " reduce --corpus " + corpus);
    c.require(serial == parallel, "serial and parallel corpus outputs differ");
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"positive-rational reduction suite", crit_pos_rat},
        {"1/7(1,4) golden charts", crit_quot_golden},
        {"Camacho-Sad conservation", crit_cs_conservation},
        {"index closed forms vs series oracle", crit_index_oracle},
        {"chain eigenvalue recursion", crit_chain_recursion},
        {"Mumford pairing on HJ lattices", crit_mumford},
        {"Riemann-Roch roundtrip", crit_rr_roundtrip},
        {"local-contribution table", crit_contribution_table},
        {"epsilon-canonical thresholds", crit_epsilon},
    };
    std::string cli = argc > 1 ? argv[1] : "";
    int failures = 0;
    int num = 0;
    auto report = [&](const std::string& name, Check& c) {
        ++num;
        std::printf("[%2d] %-40s %s\n", num, name.c_str(), c.ok ? "PASS" : "FAIL");
        if (!c.ok) {
            std::fputs(c.log.str().c_str(), stdout);
            ++failures;
        }
    };
    for (auto& [name, fn] : criteria) {
        Check c;
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        report(name, c);
    }
    {
        Check c;
        if (cli.empty()) {
            c.require(false, "no CLI path given");
        } else {
            try {
                crit_determinism(c, cli);
            } catch (const std::exception& e) {
                c.require(false, std::string("exception: ") + e.what());
            }
        }
        report("CLI determinism", c);
    }
    return failures;
}
