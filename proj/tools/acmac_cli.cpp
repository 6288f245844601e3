// Command-line front end for the asynchronous cognitive MAC toolkit. All
// computation goes through the shared-library C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "acmac/acmac.h"

namespace {

int report(int status, char* summary) {
    if (status == ACMAC_OK) {
        if (summary != nullptr) {
            std::printf("%s\n", summary);
            acmac_string_free(summary);
        }
        return 0;
    }
    std::fprintf(stderr, "error: %s\n", acmac_last_error());
    return status;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "error: cannot open '%s'\n", path.c_str());
        std::exit(ACMAC_ERR_INVALID);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int env_threads() {
    const char* v = std::getenv("ACMAC_THREADS");
    if (v == nullptr) return 1;
    const int t = std::atoi(v);
    return t > 0 ? t : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rate-region bounds and random-coding simulation for cognitive multiple access "
                 "channels with bounded asynchronism"};
    app.require_subcommand(1);
    app.set_version_flag("--version", acmac_version());

    int threads = env_threads();
    app.add_option("--threads", threads, "worker thread cap (mirrors ACMAC_THREADS)");

    // ---- validate ----
    std::string channel_arg;
    auto* validate = app.add_subcommand("validate", "check a channel JSON file");
    validate->add_option("channel", channel_arg, "channel file or builtin:<id>")->required();

    // ---- region commands ----
    struct RegionArgs {
        std::string channel;
        std::string out = "region";
        int d_min = -1, d_max = -1;
        acmac_search_config cfg;
        std::string config_file;
    } region_args;
    acmac_search_config_init(&region_args.cfg);

    auto add_region = [&](const char* name, const char* help) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("channel", region_args.channel, "channel file or builtin:<id>")
            ->required();
        cmd->add_option("--out", region_args.out, "output prefix");
        cmd->add_option("--d-min", region_args.d_min, "override d_min");
        cmd->add_option("--d-max", region_args.d_max, "override d_max");
        cmd->add_option("--seed", region_args.cfg.seed, "search seed");
        cmd->add_option("--restarts", region_args.cfg.restarts, "random restarts");
        cmd->add_option("--ascent-steps", region_args.cfg.ascent_steps, "ascent steps");
        cmd->add_option("--step-size", region_args.cfg.step_size, "ascent step size");
        cmd->add_option("--n-dirs", region_args.cfg.n_dirs, "direction grid size");
        cmd->add_option("--search-config", region_args.config_file,
                        "JSON file with seed/restarts/ascent_steps/step_size/n_dirs");
        return cmd;
    };
    auto* inner = add_region("inner", "achievable region, message cognition");
    auto* outer = add_region("outer", "outer-bound estimate, message cognition");
    auto* acc_inner = add_region("accmac_inner", "achievable region, codeword cognition");
    auto* acc_outer = add_region("accmac_outer", "outer-bound estimate, codeword cognition");

    // ---- gaussian ----
    double g_p1 = 0.5, g_p2 = 1.0, g_n0 = 1.0;
    int rho_steps = 101, p2_steps = 51;
    std::string g_out = "gaussian";
    auto* gaussian = app.add_subcommand("gaussian", "closed-form Gaussian bounds, delays {0,1}");
    gaussian->add_option("p1", g_p1, "power of user 1")->required();
    gaussian->add_option("p2", g_p2, "power of user 2")->required();
    gaussian->add_option("n0", g_n0, "noise variance")->required();
    gaussian->add_option("--rho-steps", rho_steps, "correlation grid size");
    gaussian->add_option("--p2-steps", p2_steps, "P2~ grid size");
    gaussian->add_option("--out", g_out, "output prefix");

    // ---- multiletter ----
    struct MlArgs {
        std::string channel;
        std::string out = "multiletter";
        int n = 2;
        int d_min = -1, d_max = -1;
        std::string model = "acmac";
        bool iid_uniform = false;
        std::string params_file;
        std::string law_file;
    } ml;
    auto* multiletter = app.add_subcommand("multiletter", "exact n-letter region point");
    multiletter->add_option("channel", ml.channel, "channel file or builtin:<id>")->required();
    multiletter->add_option("--n", ml.n, "blocklength")->required();
    multiletter->add_option("--d-min", ml.d_min, "override d_min");
    multiletter->add_option("--d-max", ml.d_max, "override d_max");
    multiletter->add_option("--model", ml.model, "acmac or accmac");
    multiletter->add_flag("--iid-uniform", ml.iid_uniform, "i.i.d. uniform inputs (default)");
    multiletter->add_option("--iid-params", ml.params_file,
                            "JSON file with p_x1 / p_x2_given_v for an i.i.d. expansion");
    multiletter->add_option("--law-file", ml.law_file, "JSON file with a raw n-letter joint");
    multiletter->add_option("--out", ml.out, "output prefix");

    // ---- simulate ----
    struct SimArgs {
        std::string channel;
        std::string out = "sim";
        int d_min = -1, d_max = -1;
        acmac_sim_config cfg;
        std::string delay = "uniform";
        std::string model = "acmac";
        std::string params_file;
        std::string config_file;
    } sim;
    acmac_sim_config_init(&sim.cfg);
    auto* simulate = app.add_subcommand("simulate", "random-coding Monte-Carlo experiment");
    simulate->add_option("channel", sim.channel, "channel file or builtin:<id>")->required();
    simulate->add_option("--config", sim.config_file, "JSON file with the experiment config");
    simulate->add_option("--n", sim.cfg.n, "blocklength");
    simulate->add_option("--r1", sim.cfg.r1, "rate of user 1");
    simulate->add_option("--r2", sim.cfg.r2, "rate of user 2");
    simulate->add_option("--eps", sim.cfg.eps, "typicality slack");
    simulate->add_option("--trials", sim.cfg.trials, "trial count");
    simulate->add_option("--seed", sim.cfg.seed, "master seed");
    simulate->add_option("--d-min", sim.d_min, "override d_min");
    simulate->add_option("--d-max", sim.d_max, "override d_max");
    simulate->add_option("--delay", sim.delay, "'uniform' or a fixed delay value");
    simulate->add_option("--model", sim.model, "acmac or accmac");
    simulate->add_option("--params", sim.params_file, "JSON file with codebook parameters");
    simulate->add_option("--out", sim.out, "output prefix");

    // ---- export / replay ----
    std::string export_out = "channel.json";
    auto* export_cmd = app.add_subcommand("export", "write a channel in the standard JSON format");
    export_cmd->add_option("channel", channel_arg, "channel file or builtin:<id>")->required();
    export_cmd->add_option("--out", export_out, "output path");

    std::string manifest_path;
    auto* replay = app.add_subcommand("replay", "re-run a command from its manifest");
    replay->add_option("manifest", manifest_path, "manifest JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : ACMAC_ERR_INVALID;  // bad usage maps to input-error exit code
    }

    char* summary = nullptr;
    if (validate->parsed()) {
        const int st = acmac_cmd_validate(channel_arg.c_str(), &summary);
        return report(st, summary);
    }

    for (auto* cmd : {inner, outer, acc_inner, acc_outer}) {
        if (!cmd->parsed()) continue;
        if (!region_args.config_file.empty()) {
            acmac_search_config base;
            const int st = acmac_search_config_load(region_args.config_file.c_str(), &base);
            if (st != ACMAC_OK) return report(st, nullptr);
            // Explicit flags override the file.
            if (cmd->count("--seed") == 0) region_args.cfg.seed = base.seed;
            if (cmd->count("--restarts") == 0) region_args.cfg.restarts = base.restarts;
            if (cmd->count("--ascent-steps") == 0) {
                region_args.cfg.ascent_steps = base.ascent_steps;
            }
            if (cmd->count("--step-size") == 0) region_args.cfg.step_size = base.step_size;
            if (cmd->count("--n-dirs") == 0) region_args.cfg.n_dirs = base.n_dirs;
        }
        region_args.cfg.threads = threads;
        const int st = acmac_cmd_region(region_args.channel.c_str(), region_args.d_min,
                                        region_args.d_max, cmd->get_name().c_str(),
                                        &region_args.cfg, region_args.out.c_str(), &summary);
        return report(st, summary);
    }

    if (gaussian->parsed()) {
        const int st =
            acmac_cmd_gaussian(g_p1, g_p2, g_n0, rho_steps, p2_steps, g_out.c_str(), &summary);
        return report(st, summary);
    }

    if (multiletter->parsed()) {
        std::string law_spec = "{\"kind\":\"iid_uniform\"}";
        if (!ml.params_file.empty()) {
            std::string params = read_text_file(ml.params_file);
            const size_t brace = params.find('{');
            if (brace == std::string::npos) {
                std::fprintf(stderr, "error: '%s' is not a JSON object\n", ml.params_file.c_str());
                return ACMAC_ERR_INVALID;
            }
            law_spec = "{\"kind\":\"iid_inner\"," + params.substr(brace + 1);
        } else if (!ml.law_file.empty()) {
            law_spec = "{\"kind\":\"joint_file\",\"path\":\"" + ml.law_file + "\"}";
        }
        const int model = ml.model == "accmac" ? ACMAC_MODEL_CODEWORD : ACMAC_MODEL_MESSAGE;
        const int st = acmac_cmd_multiletter(ml.channel.c_str(), ml.d_min, ml.d_max, ml.n,
                                             law_spec.c_str(), model, ml.out.c_str(), &summary);
        return report(st, summary);
    }

    if (simulate->parsed()) {
        if (!sim.config_file.empty()) {
            acmac_sim_config base;
            const int st = acmac_sim_config_load(sim.config_file.c_str(), &base);
            if (st != ACMAC_OK) return report(st, nullptr);
            // Explicit flags override the file.
            if (simulate->count("--n") == 0) sim.cfg.n = base.n;
            if (simulate->count("--r1") == 0) sim.cfg.r1 = base.r1;
            if (simulate->count("--r2") == 0) sim.cfg.r2 = base.r2;
            if (simulate->count("--eps") == 0) sim.cfg.eps = base.eps;
            if (simulate->count("--trials") == 0) sim.cfg.trials = base.trials;
            if (simulate->count("--seed") == 0) sim.cfg.seed = base.seed;
            if (simulate->count("--delay") == 0) {
                sim.cfg.delay_fixed = base.delay_fixed;
                sim.cfg.delay_d = base.delay_d;
            }
            if (simulate->count("--model") == 0) sim.cfg.model = base.model;
        } else if (simulate->count("--n") == 0 || simulate->count("--r1") == 0 ||
                   simulate->count("--r2") == 0) {
            std::fprintf(stderr, "error: give --n, --r1 and --r2 or a --config file\n");
            return ACMAC_ERR_INVALID;
        }
        sim.cfg.threads = threads;
        if (simulate->count("--delay") != 0 || sim.config_file.empty()) {
            if (sim.delay == "uniform") {
                sim.cfg.delay_fixed = 0;
            } else {
                sim.cfg.delay_fixed = 1;
                sim.cfg.delay_d = std::atoi(sim.delay.c_str());
            }
        }
        if (simulate->count("--model") != 0 || sim.config_file.empty()) {
            sim.cfg.model = sim.model == "accmac" ? ACMAC_MODEL_CODEWORD : ACMAC_MODEL_MESSAGE;
        }
        std::string params_json;
        if (!sim.params_file.empty()) params_json = read_text_file(sim.params_file);
        const int st = acmac_cmd_simulate(sim.channel.c_str(), sim.d_min, sim.d_max, &sim.cfg,
                                          sim.params_file.empty() ? nullptr : params_json.c_str(),
                                          sim.out.c_str(), &summary);
        return report(st, summary);
    }

    if (export_cmd->parsed()) {
        acmac_channel* ch = nullptr;
        int st = acmac_channel_open(channel_arg.c_str(), &ch);
        if (st == ACMAC_OK) {
            st = acmac_channel_save(ch, export_out.c_str());
            acmac_channel_free(ch);
        }
        if (st == ACMAC_OK) std::printf("wrote %s\n", export_out.c_str());
        return report(st, nullptr);
    }

    if (replay->parsed()) {
        const int st = acmac_cmd_replay(manifest_path.c_str(), &summary);
        return report(st, summary);
    }
    return 0;
}
