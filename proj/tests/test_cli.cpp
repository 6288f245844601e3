// End-to-end checks of the command-line tool; the binary path arrives via
// the ACMAC_CLI environment variable set by CTest.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "core/io.hpp"
#include "doctest.h"

namespace {

std::string cli() {
    const char* path = std::getenv("ACMAC_CLI");
    REQUIRE(path != nullptr);
    return path;
}

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const std::string out = "/tmp/acmac_cli_stdout.txt";
    const std::string cmd = cli() + " " + args + " > " + out + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out);
    std::ostringstream os;
    os << in.rdbuf();
    return {rc == -1 ? -1 : WEXITSTATUS(rc), os.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string tmp_prefix(const char* name) {
    return std::string("/tmp/acmac_cli_") + name;
}

}  // namespace

TEST_CASE("validate reports channel diagnostics") {
    const RunResult ok = run("validate builtin:mod");
    CHECK(ok.exit_code == 0);
    CHECK(ok.stdout_text.find("4 output symbols") != std::string::npos);
    CHECK(ok.stdout_text.find("OK") != std::string::npos);
}

TEST_CASE("validate rejects malformed channels with exit code 2") {
    const std::string bad_row = tmp_prefix("bad_row.json");
    acmac::io::write_file(bad_row, R"({
      "x1_alphabet": ["a"], "x2_alphabet": ["b"], "y_alphabet": ["0", "1"],
      "transition": [[[0.49, 0.49]]], "d_min": 0, "d_max": 0
    })");
    const RunResult r1 = run("validate " + bad_row);
    CHECK(r1.exit_code == 2);
    CHECK(r1.stdout_text.find("x1=0") != std::string::npos);  // offending row named

    const std::string no_dmax = tmp_prefix("no_dmax.json");
    acmac::io::write_file(no_dmax, R"({
      "x1_alphabet": ["a"], "x2_alphabet": ["b"], "y_alphabet": ["0"],
      "transition": [[[1.0]]], "d_min": 0
    })");
    const RunResult r2 = run("validate " + no_dmax);
    CHECK(r2.exit_code == 2);
    CHECK(r2.stdout_text.find("d_max") != std::string::npos);

    CHECK(run("validate /tmp/does_not_exist.json").exit_code == 2);
}

TEST_CASE("rows inside tolerance are renormalized") {
    const std::string nearly = tmp_prefix("nearly.json");
    acmac::io::write_file(nearly, R"({
      "x1_alphabet": ["a"], "x2_alphabet": ["b"], "y_alphabet": ["0", "1"],
      "transition": [[[0.5000000001, 0.5]]], "d_min": 0, "d_max": 0
    })");
    CHECK(run("validate " + nearly).exit_code == 0);
}

TEST_CASE("region command emits csv, json and manifest") {
    const std::string prefix = tmp_prefix("inner");
    const RunResult r = run("inner builtin:mod --restarts 1 --ascent-steps 4 --out " + prefix);
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("support(1,1)=2") != std::string::npos);
    const std::string csv = slurp(prefix + ".csv");
    CHECK(csv.rfind("vertex_index,r1,r2", 0) == 0);
    CHECK(slurp(prefix + ".json").find("vertices") != std::string::npos);
    CHECK(slurp(prefix + ".manifest.json").find("supporting_pentagons") != std::string::npos);
}

TEST_CASE("search config file feeds the region command") {
    const std::string cfg_path = tmp_prefix("search.json");
    acmac::io::write_file(cfg_path,
                          R"({"seed": 99, "restarts": 1, "ascent_steps": 3, "step_size": 0.4,
                              "n_dirs": 45})");
    const std::string prefix = tmp_prefix("cfgrun");
    const RunResult r =
        run("inner builtin:mod --search-config " + cfg_path + " --out " + prefix);
    CHECK(r.exit_code == 0);
    CHECK(slurp(prefix + ".manifest.json").find("\"seed\": 99") != std::string::npos);
}

TEST_CASE("export produces a loadable channel file") {
    const std::string path = tmp_prefix("mod_export.json");
    CHECK(run("export builtin:mod --out " + path).exit_code == 0);
    const RunResult r = run("validate " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("OK") != std::string::npos);
}

TEST_CASE("simulate is deterministic and replayable") {
    const std::string a = tmp_prefix("sim_a");
    const std::string b = tmp_prefix("sim_b");
    const std::string args =
        "simulate builtin:binary_additive:0 --n 64 --r1 0.4 --r2 0.4 --eps 0.6 --trials 60 "
        "--seed 7 --d-max 1 --out ";
    CHECK(run(args + a).exit_code == 0);
    CHECK(run(args + b).exit_code == 0);
    CHECK(slurp(a + ".report.json") == slurp(b + ".report.json"));
    CHECK(slurp(a + ".report.csv") == slurp(b + ".report.csv"));

    // Replay from the manifest rewrites byte-identical outputs.
    const std::string before = slurp(a + ".report.json");
    const std::string manifest_before = slurp(a + ".manifest.json");
    CHECK(run("replay " + a + ".manifest.json").exit_code == 0);
    CHECK(slurp(a + ".report.json") == before);
    CHECK(slurp(a + ".manifest.json") == manifest_before);
}

TEST_CASE("gaussian and multiletter commands run end to end") {
    const std::string g = tmp_prefix("gauss");
    const RunResult r = run("gaussian 0.5 1 1 --rho-steps 21 --p2-steps 11 --out " + g);
    CHECK(r.exit_code == 0);
    CHECK(slurp(g + ".csv").rfind("trace,param1,param2,r1,r2", 0) == 0);

    const std::string m = tmp_prefix("ml");
    const RunResult r2 =
        run("multiletter builtin:binary_additive:0 --n 4 --d-max 1 --iid-uniform --out " + m);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(m + ".manifest.json").find("lemma2_gap_bound") != std::string::npos);

    // Oversized n maps to the size-cap exit code.
    const RunResult big = run("multiletter builtin:mod --n 12 --out " + m);
    CHECK(big.exit_code == 3);
}

TEST_CASE("simulate accepts an experiment config file") {
    const std::string cfg_path = tmp_prefix("sim_cfg.json");
    acmac::io::write_file(cfg_path, R"({"n": 64, "r1": 0.4, "r2": 0.4, "eps": 0.6,
                                        "trials": 30, "seed": 7, "delay_policy": "uniform",
                                        "model": "acmac"})");
    const std::string from_cfg = tmp_prefix("sim_from_cfg");
    const std::string from_flags = tmp_prefix("sim_from_flags");
    CHECK(run("simulate builtin:binary_additive:0 --d-max 1 --config " + cfg_path + " --out " +
              from_cfg)
              .exit_code == 0);
    CHECK(run("simulate builtin:binary_additive:0 --d-max 1 --n 64 --r1 0.4 --r2 0.4 --eps 0.6 "
              "--trials 30 --seed 7 --out " +
              from_flags)
              .exit_code == 0);
    CHECK(slurp(from_cfg + ".report.json") == slurp(from_flags + ".report.json"));

    // Flags override the file.
    const RunResult missing = run("simulate builtin:binary_additive:0");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("simulate takes codebook parameters from file") {
    const std::string params = tmp_prefix("params.json");
    acmac::io::write_file(params, R"({"p_x1": [0.5, 0.5],
        "p_x2_given_v": [[0,0,0.5,0.5],[0,0,0.5,0.5]]})");
    const std::string out = tmp_prefix("sim_params");
    const RunResult r = run("simulate builtin:mod --n 64 --r1 1.1 --r2 1.1 --eps 0.6 "
                            "--trials 40 --seed 3 --params " + params + " --out " + out);
    CHECK(r.exit_code == 0);
    // Sum rate above the capacity triangle: everything fails.
    CHECK(slurp(out + ".report.json").find("\"error_rate\": 1.0") != std::string::npos);

    const RunResult bad = run("simulate builtin:mod --n 64 --r1 0.1 --r2 0.1 --params "
                              "/tmp/does_not_exist.json --out " + out);
    CHECK(bad.exit_code == 2);
}

TEST_CASE("threads flag does not change region results") {
    const std::string one = tmp_prefix("t1");
    const std::string four = tmp_prefix("t4");
    const std::string args = "inner builtin:binary_additive:0.11 --d-max 1 --restarts 2 "
                             "--ascent-steps 6 --out ";
    CHECK(run("--threads 1 " + args + one).exit_code == 0);
    CHECK(run("--threads 4 " + args + four).exit_code == 0);
    CHECK(slurp(one + ".csv") == slurp(four + ".csv"));
    CHECK(slurp(one + ".json") == slurp(four + ".json"));

    // The environment variable mirrors the flag.
    const std::string env = tmp_prefix("tenv");
    const std::string cmd = "ACMAC_THREADS=4 " + cli() + " " + args + env +
                            " > /tmp/acmac_cli_stdout.txt 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(slurp(env + ".csv") == slurp(one + ".csv"));
}
