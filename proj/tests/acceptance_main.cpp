// Acceptance suite: drives the CLI and the core library through the
// headline results and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "core/channel.hpp"
#include "core/gaussian.hpp"
#include "core/io.hpp"
#include "core/multiletter.hpp"
#include "core/rng.hpp"
#include "core/search.hpp"
#include "core/sim.hpp"
#include "json.hpp"

using namespace acmac;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& name, const std::function<std::string()>& body) {
    std::string detail;
    bool ok = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    if (detail.rfind("FAIL", 0) == 0) ok = false;
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

std::string cli_path() {
    const char* p = std::getenv("ACMAC_CLI");
    if (p == nullptr) throw std::runtime_error("ACMAC_CLI not set");
    return p;
}

int run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " > /tmp/acmac_acc_stdout.txt 2>&1";
    const int rc = std::system(cmd.c_str());
    return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RegionHull hull_from_json_file(const std::string& path) {
    const auto j = nlohmann::json::parse(slurp(path));
    std::vector<RatePair> verts;
    for (const auto& v : j.at("vertices")) {
        verts.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    }
    return RegionHull(std::move(verts));
}

InnerParams mod_pmf_half(const DelaySet& ds) {
    const auto rows = pow_checked(2, ds.window(), kMaxTensorStates);
    return InnerParams{Pmf({0.5, 0.5}),
                       ConditionalPmf::constant_row(static_cast<int>(rows),
                                                    Pmf({0.0, 0.0, 0.5, 0.5}))};
}

InnerParams mod_pmf_point(const DelaySet& ds) {
    const auto rows = pow_checked(2, ds.window(), kMaxTensorStates);
    return InnerParams{Pmf::point_mass(2, 1),
                       ConditionalPmf::uniform(static_cast<int>(rows), 4)};
}

bool near(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Independent evaluator of the single-window sum cap for the binary additive
// channel with crossover p and delay set {0,1}: windows (v1, v2), X2 row
// probabilities q[v] = P(x2 = 1 | v). Direct scalar arithmetic throughout.
double binary_inner_sum_oracle(double p, double px1_one, const double q[4]) {
    double min_sum = 1e300;
    for (int d = 0; d <= 1; ++d) {
        const double pv1[2] = {1.0 - px1_one, px1_one};
        double p_y1 = 0.0;                       // P(y = 1)
        double p_y1_given_x1[2] = {0.0, 0.0};    // P(y = 1, x1 = a)
        double i2 = 0.0;
        for (int v = 0; v < 4; ++v) {
            const int v1 = v >> 1, v2 = v & 1;
            const double pv = pv1[v1] * pv1[v2];
            const int slot = d == 1 ? v1 : v2;
            const double t = q[v] * (1.0 - p) + (1.0 - q[v]) * p;  // P(x2 xor z = 1)
            const double y1 = slot == 0 ? t : 1.0 - t;
            p_y1 += pv * y1;
            p_y1_given_x1[slot] += pv * y1;
            i2 += pv * (binary_entropy(t) - binary_entropy(p));
        }
        double h_y_given_x1 = 0.0;
        for (int a = 0; a < 2; ++a) {
            if (pv1[a] > 0.0) {
                h_y_given_x1 += pv1[a] * binary_entropy(p_y1_given_x1[a] / pv1[a]);
            }
        }
        const double i1 = binary_entropy(p_y1) - h_y_given_x1;
        min_sum = std::min(min_sum, std::max(0.0, i1) + std::max(0.0, i2));
    }
    return min_sum;
}

}  // namespace

int main() {
    const std::string tmp = "/tmp/acmac_acceptance";
    if (std::system(("mkdir -p " + tmp).c_str()) != 0) {
        std::fprintf(stderr, "cannot create %s\n", tmp.c_str());
        return 1;
    }

    criterion(1, "synchronous mod-channel triangle via `inner`", [&] {
        const auto t0 = std::chrono::steady_clock::now();
        const std::string prefix = tmp + "/c1_inner";
        if (run_cli("inner builtin:mod --out " + prefix) != 0) return std::string("FAIL: cli");
        const double elapsed = seconds_since(t0);
        const RegionHull hull = hull_from_json_file(prefix + ".json");
        const double s11 = support(hull, 1, 1);
        if (!near(s11, 2.0, 1e-6)) return "FAIL: support(1,1)=" + io::format_g9(s11);
        if (!contains_point(hull, {2.0, 0.0}, 1e-6)) return std::string("FAIL: misses (2,0)");
        if (!contains_point(hull, {0.0, 2.0}, 1e-6)) return std::string("FAIL: misses (0,2)");
        if (elapsed >= 10.0) return "FAIL: took " + io::format_g9(elapsed) + "s";
        return "support(1,1)=" + io::format_g9(s11) + ", " + io::format_g9(elapsed) + "s";
    });

    const auto trapezoid_checks = [&](int dmax, const char* tag) -> std::string {
        const std::string flag = dmax > 0 ? " --d-max " + std::to_string(dmax) : "";
        const std::string pi = tmp + "/" + tag + "_ai";
        const std::string po = tmp + "/" + tag + "_ao";
        if (run_cli("accmac_inner builtin:mod" + flag + " --out " + pi) != 0 ||
            run_cli("accmac_outer builtin:mod" + flag + " --out " + po) != 0) {
            return "FAIL: cli";
        }
        for (const std::string& prefix : {pi, po}) {
            const RegionHull hull = hull_from_json_file(prefix + ".json");
            if (!contains_point(hull, {1.0, 1.0}, 1e-6)) return "FAIL: misses (1,1) " + prefix;
            if (!contains_point(hull, {0.0, 2.0}, 1e-6)) return "FAIL: misses (0,2) " + prefix;
            if (support(hull, 1, 0) > 1.0 + 1e-6) return "FAIL: R1 cap violated " + prefix;
        }
        // The two corner-achieving input laws, evaluated directly.
        const DiscreteChannel ch = build_mod_channel().channel;
        const DelaySet ds(0, dmax);
        const BoundResult corner = accmac_inner_point(ch, ds, mod_pmf_half(ds));
        if (!near(corner.pentagon.a, 2.0, 1e-12) || !near(corner.pentagon.b, 1.0, 1e-12) ||
            !near(corner.pentagon.c, 1.0, 1e-12)) {
            return std::string("FAIL: half/half law misses the (1,1) corner");
        }
        const BoundResult axis = accmac_inner_point(ch, ds, mod_pmf_point(ds));
        if (!near(axis.pentagon.a, 2.0, 1e-12) || !near(axis.pentagon.b, 2.0, 1e-12) ||
            !near(std::min(axis.pentagon.c, axis.pentagon.a), 0.0, 1e-12)) {
            return std::string("FAIL: point-mass law misses the (0,2) corner");
        }
        return std::string();
    };

    criterion(2, "codeword-cognition trapezoid via `accmac_inner`/`accmac_outer`",
              [&] { return trapezoid_checks(0, "c2"); });

    criterion(3, "trapezoid corners unchanged under bounded asynchronism",
              [&] { return trapezoid_checks(1, "c3"); });

    criterion(4, "binary additive sum-rate cap 1 - H2(p)", [&] {
        const SearchConfig cfg;
        for (double p : {0.0, 0.11, 0.25, 0.5}) {
            const DiscreteChannel ch = build_binary_additive(p).channel;
            const DelaySet ds(0, 1);
            const double cap = 1.0 - binary_entropy(p);
            const InnerSearchResult res = search_inner(ch, ds, cfg);
            const double found = support(res.acmac_hull, 1, 1);
            if (found < cap - 1e-3) {
                return "FAIL: p=" + io::format_g9(p) + " found " + io::format_g9(found);
            }
            for (const auto& e : res.trace) {
                if (e.acmac.pentagon.a > cap + 1e-9) {
                    return "FAIL: p=" + io::format_g9(p) + " exceeded cap by " +
                           io::format_g9(e.acmac.pentagon.a - cap);
                }
            }
            // Independent grid oracle over the window-conditional laws.
            double oracle_best = 0.0;
            double q[4];
            for (int i = 0; i <= 20; ++i) {
                for (int j0 = 0; j0 <= 10; ++j0) {
                    for (int j1 = 0; j1 <= 10; ++j1) {
                        for (int j2 = 0; j2 <= 10; ++j2) {
                            for (int j3 = 0; j3 <= 10; ++j3) {
                                q[0] = j0 * 0.1;
                                q[1] = j1 * 0.1;
                                q[2] = j2 * 0.1;
                                q[3] = j3 * 0.1;
                                const double v = binary_inner_sum_oracle(p, i * 0.05, q);
                                oracle_best = std::max(oracle_best, v);
                                if (v > cap + 1e-9) {
                                    return "FAIL: oracle beat the cap at p=" + io::format_g9(p);
                                }
                            }
                        }
                    }
                }
            }
            if (oracle_best < cap - 1e-3) {
                return "FAIL: oracle max " + io::format_g9(oracle_best) + " at p=" +
                       io::format_g9(p);
            }
        }
        return std::string();
    });

    criterion(5, "Gaussian closed forms and containment", [&] {
        const GaussianSpec spec(0.5, 1.0, 1.0);
        const GaussianSample o0 = gaussian_outer_point(spec, 0.0);
        if (!near(o0.sum_cap, 0.660964, 1e-4) || !near(o0.r2_cap, 0.5, 1e-4)) {
            return std::string("FAIL: outer(rho=0)");
        }
        const GaussianSample omax = gaussian_outer_point(spec, 1.0 / std::sqrt(2.0));
        if (!near(omax.sum_cap, 0.903677, 1e-4) || !near(omax.r2_cap, 0.0, 1e-4)) {
            return std::string("FAIL: outer(rho=1/sqrt2)");
        }
        const GaussianCurve outer = gaussian_outer(spec, 101);
        const GaussianCurve inner = gaussian_inner(spec, 101, 51);
        if (!contains(outer.hull, inner.hull, 1e-6)) {
            return std::string("FAIL: inner hull escapes the outer hull");
        }
        const GaussianSample i0 = gaussian_inner_point(spec, 0.0, spec.p2);
        if (!near(i0.sum_cap, o0.sum_cap, 1e-9)) return std::string("FAIL: rho=0 identity");
        return "outer(0)=(" + io::format_g9(o0.sum_cap) + "," + io::format_g9(o0.r2_cap) + ")";
    });

    criterion(6, "inner and outer pentagons coincide without asynchronism", [&] {
        Rng rng(2024);
        double worst = 0.0;
        for (int t = 0; t < 200; ++t) {
            const DiscreteChannel ch =
                random_channel(2 + rng.uniform_int(2), 2 + rng.uniform_int(2),
                               2 + rng.uniform_int(3), 7000 + static_cast<std::uint64_t>(t));
            const DelaySet ds(0, 0);
            const auto rows = pow_checked(ch.x1_size(), 1, kMaxTensorStates);
            std::vector<double> vals;
            for (std::int64_t r = 0; r < rows; ++r) {
                const auto row = rng.simplex(ch.x2_size());
                vals.insert(vals.end(), row.begin(), row.end());
            }
            const InnerParams ip{
                Pmf(rng.simplex(ch.x1_size())),
                ConditionalPmf(static_cast<int>(rows), ch.x2_size(), std::move(vals))};
            const BoundResult in = inner_point(ch, ds, ip);
            const BoundResult out = outer_point(ch, ds, extend_inner_params(ch, ds, ip));
            worst = std::max(worst, std::abs(in.pentagon.a - out.pentagon.a));
            worst = std::max(worst, std::abs(in.pentagon.b - out.pentagon.b));
        }
        if (worst > 1e-9) return "FAIL: worst gap " + io::format_g9(worst);
        return "worst gap " + io::format_g9(worst);
    });

    criterion(7, "edge-discard gap bound on the multi-letter points", [&] {
        Rng rng(555);
        double worst_slack = 0.0;
        const int d_pairs[3][2] = {{0, 1}, {1, 0}, {1, 1}};
        for (int t = 0; t < 50; ++t) {
            const int n = 4 + 2 * (t % 3);  // 4, 6, 8
            const DelaySet ds(d_pairs[(t / 3) % 3][0], d_pairs[(t / 3) % 3][1]);
            const DiscreteChannel ch =
                random_channel(2, 2, 2, 9000 + static_cast<std::uint64_t>(t));
            const auto single = rng.simplex(4);
            // i.i.d. product law over (x1, x2) letter pairs.
            std::vector<double> joint;
            const std::int64_t in1 = 1 << n, in2 = 1 << n;
            joint.resize(static_cast<size_t>(in1 * in2));
            for (std::int64_t i1 = 0; i1 < in1; ++i1) {
                for (std::int64_t i2 = 0; i2 < in2; ++i2) {
                    double w = 1.0;
                    for (int i = 0; i < n; ++i) {
                        const int a = static_cast<int>((i1 >> i) & 1);
                        const int b = static_cast<int>((i2 >> i) & 1);
                        w *= single[static_cast<size_t>(a) * 2 + b];
                    }
                    joint[static_cast<size_t>(i1 * in2 + i2)] = w;
                }
            }
            const NLetterLaw law = NLetterLaw::from_joint(n, std::move(joint));
            const BoundPentagon r = r_n_point(ch, ds, law);
            const BoundPentagon q = q_n_point(ch, ds, law);
            const double bound = (ds.d_max + ds.d_min) * 1.0 / n;
            worst_slack = std::max(worst_slack, std::abs(r.a - q.a) - bound);
            worst_slack = std::max(worst_slack, std::abs(r.b - q.b) - bound);
        }
        if (worst_slack > 1e-12) return "FAIL: bound exceeded by " + io::format_g9(worst_slack);
        return std::string("all gaps within (d_max+d_min) log2|Y| / n");
    });

    criterion(8, "containment ledger on shared search traces", [&] {
        struct Case {
            DiscreteChannel ch;
            DelaySet ds;
        };
        std::vector<Case> cases;
        cases.push_back({build_mod_channel().channel, DelaySet(0, 0)});
        cases.push_back({build_mod_channel().channel, DelaySet(0, 1)});
        cases.push_back({build_binary_additive(0.11).channel, DelaySet(0, 1)});
        const SearchConfig cfg;
        for (const auto& c : cases) {
            const InnerSearchResult in = search_inner(c.ch, c.ds, cfg);
            const OuterSearchResult out = search_outer(c.ch, c.ds, cfg);
            if (!contains(out.acmac_hull, in.acmac_hull, 1e-9)) {
                return std::string("FAIL: inner escapes outer");
            }
            if (!contains(out.accmac_hull, in.accmac_hull, 1e-9)) {
                return std::string("FAIL: capped inner escapes capped outer");
            }
            if (!contains(in.acmac_hull, in.accmac_hull, 1e-9)) {
                return std::string("FAIL: codeword-cognition hull escapes the plain one");
            }
            if (!contains(out.acmac_hull, out.accmac_hull, 1e-9)) {
                return std::string("FAIL: capped outer escapes plain outer");
            }
            for (size_t i = 0; i < in.trace.size(); i += 5) {
                if (!contains(out.acmac_hull, pentagon_vertices(in.trace[i].acmac.pentagon),
                              1e-9)) {
                    return std::string("FAIL: an evaluated inner pentagon escapes the outer hull");
                }
            }
        }
        return std::string();
    });

    criterion(9, "simulator error trend and converse-side failure", [&] {
        const auto t0 = std::chrono::steady_clock::now();
        const DiscreteChannel ch = build_binary_additive(0.0).channel;
        const DelaySet ds(0, 1);
        const InnerParams params = InnerParams::uniform(ch, ds);
        std::vector<double> means;
        for (int n : {64, 128, 256}) {
            double total = 0.0;
            for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                SimConfig cfg;
                cfg.n = n;
                cfg.r1 = 0.4;
                cfg.r2 = 0.4;
                cfg.eps = 0.6;
                cfg.trials = 200;
                cfg.seed = seed;
                total += run_experiment(ch, ds, cfg, params).error_rate;
            }
            means.push_back(total / 10.0);
        }
        if (!(means[0] >= means[1] && means[1] >= means[2])) {
            return "FAIL: means " + io::format_g9(means[0]) + " " + io::format_g9(means[1]) +
                   " " + io::format_g9(means[2]);
        }
        if (means[2] > 0.05) return "FAIL: n=256 mean " + io::format_g9(means[2]);

        const DiscreteChannel mod = build_mod_channel().channel;
        const DelaySet d0(0, 0);
        SimConfig over;
        over.n = 256;
        over.r1 = 1.1;
        over.r2 = 1.1;
        over.eps = 0.6;
        over.trials = 200;
        over.seed = 12;
        const SimReport rep = run_experiment(mod, d0, over, mod_pmf_half(d0));
        if (rep.error_rate < 0.9) {
            return "FAIL: above-capacity error rate " + io::format_g9(rep.error_rate);
        }
        const double elapsed = seconds_since(t0);
        if (elapsed >= 300.0) return "FAIL: took " + io::format_g9(elapsed) + "s";
        return "means " + io::format_g9(means[0]) + " -> " + io::format_g9(means[1]) + " -> " +
               io::format_g9(means[2]) + ", converse " + io::format_g9(rep.error_rate) + ", " +
               io::format_g9(elapsed) + "s";
    });

    criterion(10, "manifest replay reproduces outputs byte-identically", [&] {
        struct Cmd {
            std::string args;
            std::string prefix;
            std::vector<std::string> files;
        };
        std::vector<Cmd> cmds;
        cmds.push_back({"inner builtin:mod --restarts 2 --ascent-steps 6 --out ",
                        tmp + "/c10_inner",
                        {".csv", ".json", ".manifest.json"}});
        cmds.push_back({"simulate builtin:binary_additive:0 --n 64 --r1 0.4 --r2 0.4 --eps 0.6 "
                        "--trials 60 --seed 5 --d-max 1 --out ",
                        tmp + "/c10_sim",
                        {".report.json", ".report.csv", ".manifest.json"}});
        cmds.push_back({"gaussian 0.5 1 1 --rho-steps 31 --p2-steps 11 --out ",
                        tmp + "/c10_gauss",
                        {".csv", ".manifest.json"}});
        cmds.push_back({"multiletter builtin:binary_additive:0 --n 4 --d-max 1 --out ",
                        tmp + "/c10_ml",
                        {".manifest.json"}});
        for (const auto& cmd : cmds) {
            if (run_cli(cmd.args + cmd.prefix) != 0) return "FAIL: cli " + cmd.args;
            std::vector<std::string> before;
            for (const auto& f : cmd.files) before.push_back(slurp(cmd.prefix + f));
            // Identical command line: byte-identical outputs.
            if (run_cli(cmd.args + cmd.prefix) != 0) return "FAIL: rerun " + cmd.args;
            for (size_t i = 0; i < cmd.files.size(); ++i) {
                if (slurp(cmd.prefix + cmd.files[i]) != before[i]) {
                    return "FAIL: rerun changed " + cmd.files[i] + " for " + cmd.args;
                }
            }
            // Replay from the manifest: byte-identical outputs again.
            if (run_cli("replay " + cmd.prefix + ".manifest.json") != 0) {
                return "FAIL: replay " + cmd.args;
            }
            for (size_t i = 0; i < cmd.files.size(); ++i) {
                if (slurp(cmd.prefix + cmd.files[i]) != before[i]) {
                    return "FAIL: replay changed " + cmd.files[i] + " for " + cmd.args;
                }
            }
        }
        return std::string();
    });

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
