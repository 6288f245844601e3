#include "acmac/acmac.h"

#include <cmath>
#include <cstring>
#include <sstream>
#include <string>

#include "core/io.hpp"
#include "json.hpp"

using namespace acmac;

struct acmac_channel {
    DiscreteChannel ch;
};

struct acmac_region {
    RegionHull hull;
};

struct acmac_sim_report {
    SimReport rep;
    SimConfig cfg;
};

namespace {

thread_local std::string g_last_error;

int fail(int status, const std::string& message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return ACMAC_OK;
    } catch (const ValidationError& e) {
        return fail(ACMAC_ERR_INVALID, e.what());
    } catch (const CapacityError& e) {
        return fail(ACMAC_ERR_TOO_LARGE, e.what());
    } catch (const std::exception& e) {
        return fail(ACMAC_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

SearchConfig to_core(const acmac_search_config* cfg) {
    SearchConfig c;
    if (cfg != nullptr) {
        c.seed = cfg->seed;
        c.restarts = cfg->restarts;
        c.ascent_steps = cfg->ascent_steps;
        c.step_size = cfg->step_size;
        c.n_dirs = cfg->n_dirs;
        c.threads = cfg->threads;
    }
    return c;
}

SimConfig to_core(const acmac_sim_config* cfg) {
    SimConfig c;
    if (cfg != nullptr) {
        c.n = cfg->n;
        c.r1 = cfg->r1;
        c.r2 = cfg->r2;
        c.eps = cfg->eps;
        c.trials = cfg->trials;
        c.seed = cfg->seed;
        c.delay = cfg->delay_fixed ? DelayPolicy::fixed(cfg->delay_d)
                                   : DelayPolicy::uniform_over_set();
        c.model = cfg->model == ACMAC_MODEL_CODEWORD ? SimModel::accmac : SimModel::acmac;
        c.threads = cfg->threads;
    }
    return c;
}

DiscreteChannel open_channel(const char* spec, int d_min, int d_max) {
    DiscreteChannel ch = io::resolve_channel(spec);
    const DelaySet ds = ch.delay_set();
    ch.set_delay_set(DelaySet(d_min >= 0 ? d_min : ds.d_min, d_max >= 0 ? d_max : ds.d_max));
    return ch;
}

std::string region_summary(const std::string& command, const RegionHull& hull) {
    std::ostringstream os;
    os << command << ": " << hull.vertices().size() << " hull vertices"
       << ", support(1,1)=" << io::format_g9(support(hull, 1.0, 1.0))
       << ", support(1,0)=" << io::format_g9(support(hull, 1.0, 0.0))
       << ", support(0,1)=" << io::format_g9(support(hull, 0.0, 1.0));
    return os.str();
}

// Runs one region command on an already-resolved channel and writes the
// three artifacts.
std::string run_region_command(const DiscreteChannel& ch, const std::string& command,
                               const SearchConfig& cfg, const std::string& out_prefix) {
    const DelaySet ds = ch.delay_set();
    RegionHull hull;
    std::string manifest;
    if (command == "inner" || command == "accmac_inner") {
        const InnerSearchResult res = search_inner(ch, ds, cfg);
        const bool capped = command == "accmac_inner";
        hull = capped ? res.accmac_hull : res.acmac_hull;
        manifest = io::inner_region_manifest(command, ch, cfg, res, capped, out_prefix);
    } else if (command == "outer" || command == "accmac_outer") {
        const OuterSearchResult res = search_outer(ch, ds, cfg);
        const bool capped = command == "accmac_outer";
        hull = capped ? res.accmac_hull : res.acmac_hull;
        manifest = io::outer_region_manifest(command, ch, cfg, res, capped, out_prefix);
    } else {
        throw ValidationError("unknown region command '" + command + "'");
    }
    io::write_file(out_prefix + ".csv", io::region_to_csv(hull));
    io::write_file(out_prefix + ".json", io::region_to_json(hull));
    io::write_file(out_prefix + ".manifest.json", manifest);
    return region_summary(command, hull);
}

std::string run_gaussian_command(double p1, double p2, double n0, int rho_steps, int p2_steps,
                                 const std::string& out_prefix) {
    const GaussianSpec spec(p1, p2, n0);
    const GaussianCurve outer = gaussian_outer(spec, rho_steps);
    const GaussianCurve inner = gaussian_inner(spec, rho_steps, p2_steps);
    io::write_file(out_prefix + ".csv", io::gaussian_csv(outer, inner));
    io::write_file(out_prefix + ".manifest.json",
                   io::gaussian_manifest(spec, rho_steps, p2_steps, out_prefix));
    std::ostringstream os;
    const GaussianSample o0 = gaussian_outer_point(spec, 0.0);
    os << "gaussian: outer(rho=0) sum=" << io::format_g9(o0.sum_cap)
       << " r2=" << io::format_g9(o0.r2_cap)
       << ", inner hull in outer hull: " << (contains(outer.hull, inner.hull, 1e-6) ? "yes" : "NO");
    return os.str();
}

std::string run_multiletter_command(const DiscreteChannel& ch, int n,
                                    const std::string& law_spec, int model,
                                    const std::string& out_prefix) {
    const DelaySet ds = ch.delay_set();
    const NLetterLaw law = io::law_from_spec_json(law_spec, n, ch, ds);
    const BoundPentagon rn = r_n_point(ch, ds, law);
    const BoundPentagon qn = q_n_point(ch, ds, law);
    double c_cap = 0.0;
    const bool codeword = model == ACMAC_MODEL_CODEWORD;
    if (codeword) c_cap = accmac_multiletter_point(ch, ds, law).c;
    const double gap_bound =
        (ds.d_max + ds.d_min) * std::log2(static_cast<double>(ch.y_size())) / n;
    io::write_file(out_prefix + ".manifest.json",
                   io::multiletter_manifest(ch, n, codeword ? "accmac" : "acmac", law_spec, rn,
                                            qn, c_cap, gap_bound, out_prefix));
    std::ostringstream os;
    os << "multiletter n=" << n << ": r_n a=" << io::format_g9(rn.a)
       << " b=" << io::format_g9(rn.b) << "; q_n a=" << io::format_g9(qn.a)
       << " b=" << io::format_g9(qn.b) << "; gap bound " << io::format_g9(gap_bound);
    return os.str();
}

std::string run_simulate_command(const DiscreteChannel& ch, const SimConfig& cfg,
                                 const std::string& params_json, const std::string& out_prefix) {
    const DelaySet ds = ch.delay_set();
    const InnerParams params = params_json.empty()
                                   ? InnerParams::uniform(ch, ds)
                                   : io::inner_params_from_json(params_json, ch, ds);
    const SimReport rep = run_experiment(ch, ds, cfg, params);
    io::write_file(out_prefix + ".report.json", io::sim_report_json(rep, cfg));
    io::write_file(out_prefix + ".report.csv", io::sim_report_csv(rep));
    io::write_file(out_prefix + ".manifest.json", io::sim_manifest(ch, cfg, params, rep, out_prefix));
    std::ostringstream os;
    os << "simulate: error_rate=" << io::format_g9(rep.error_rate) << " (" << rep.errors << "/"
       << rep.trials << ", engine " << rep.engine << ")";
    return os.str();
}

}  // namespace

extern "C" {

const char* acmac_version(void) {
    return io::kToolVersion;
}

const char* acmac_last_error(void) {
    return g_last_error.c_str();
}

void acmac_string_free(char* s) {
    delete[] s;
}

int acmac_channel_open(const char* spec, acmac_channel** out) {
    return guarded([&] {
        if (spec == nullptr || out == nullptr) throw ValidationError("null argument");
        *out = new acmac_channel{io::resolve_channel(spec)};
    });
}

int acmac_channel_from_json(const char* json_text, acmac_channel** out) {
    return guarded([&] {
        if (json_text == nullptr || out == nullptr) throw ValidationError("null argument");
        *out = new acmac_channel{io::channel_from_json(json_text)};
    });
}

int acmac_channel_set_delays(acmac_channel* ch, int d_min, int d_max) {
    return guarded([&] {
        if (ch == nullptr) throw ValidationError("null channel");
        const DelaySet ds = ch->ch.delay_set();
        ch->ch.set_delay_set(
            DelaySet(d_min >= 0 ? d_min : ds.d_min, d_max >= 0 ? d_max : ds.d_max));
    });
}

int acmac_channel_to_json(const acmac_channel* ch, char** out_json) {
    return guarded([&] {
        if (ch == nullptr || out_json == nullptr) throw ValidationError("null argument");
        *out_json = dup_string(io::channel_to_json(ch->ch));
    });
}

int acmac_channel_diagnostics(const acmac_channel* ch, char** out_text) {
    return guarded([&] {
        if (ch == nullptr || out_text == nullptr) throw ValidationError("null argument");
        *out_text = dup_string(io::channel_diagnostics(ch->ch));
    });
}

int acmac_channel_save(const acmac_channel* ch, const char* path) {
    return guarded([&] {
        if (ch == nullptr || path == nullptr) throw ValidationError("null argument");
        io::save_channel_file(ch->ch, path);
    });
}

void acmac_channel_free(acmac_channel* ch) {
    delete ch;
}

void acmac_search_config_init(acmac_search_config* cfg) {
    if (cfg == nullptr) return;
    const SearchConfig d;
    cfg->seed = d.seed;
    cfg->restarts = d.restarts;
    cfg->ascent_steps = d.ascent_steps;
    cfg->step_size = d.step_size;
    cfg->n_dirs = d.n_dirs;
    cfg->threads = d.threads;
}

int acmac_search_config_load(const char* path, acmac_search_config* cfg) {
    return guarded([&] {
        if (path == nullptr || cfg == nullptr) throw ValidationError("null argument");
        const SearchConfig c = io::load_search_config(path);
        cfg->seed = c.seed;
        cfg->restarts = c.restarts;
        cfg->ascent_steps = c.ascent_steps;
        cfg->step_size = c.step_size;
        cfg->n_dirs = c.n_dirs;
        cfg->threads = c.threads;
    });
}

int acmac_compute_region(const acmac_channel* ch, const acmac_search_config* cfg, int model,
                         int bound, acmac_region** out) {
    return guarded([&] {
        if (ch == nullptr || out == nullptr) throw ValidationError("null argument");
        const SearchConfig c = to_core(cfg);
        const DelaySet ds = ch->ch.delay_set();
        const bool capped = model == ACMAC_MODEL_CODEWORD;
        RegionHull hull;
        if (bound == ACMAC_BOUND_INNER) {
            const InnerSearchResult res = search_inner(ch->ch, ds, c);
            hull = capped ? res.accmac_hull : res.acmac_hull;
        } else if (bound == ACMAC_BOUND_OUTER) {
            const OuterSearchResult res = search_outer(ch->ch, ds, c);
            hull = capped ? res.accmac_hull : res.acmac_hull;
        } else {
            throw ValidationError("unknown bound selector");
        }
        *out = new acmac_region{std::move(hull)};
    });
}

int acmac_region_vertex_count(const acmac_region* region) {
    if (region == nullptr) return -1;
    return static_cast<int>(region->hull.vertices().size());
}

int acmac_region_vertex(const acmac_region* region, int index, double* r1, double* r2) {
    return guarded([&] {
        if (region == nullptr || r1 == nullptr || r2 == nullptr) {
            throw ValidationError("null argument");
        }
        const auto& vs = region->hull.vertices();
        if (index < 0 || index >= static_cast<int>(vs.size())) {
            throw ValidationError("vertex index out of range");
        }
        *r1 = vs[static_cast<size_t>(index)].r1;
        *r2 = vs[static_cast<size_t>(index)].r2;
    });
}

int acmac_region_support(const acmac_region* region, double w1, double w2, double* out_value) {
    return guarded([&] {
        if (region == nullptr || out_value == nullptr) throw ValidationError("null argument");
        *out_value = support(region->hull, w1, w2);
    });
}

int acmac_region_contains_point(const acmac_region* region, double r1, double r2, double tol,
                                int* out_contains) {
    return guarded([&] {
        if (region == nullptr || out_contains == nullptr) throw ValidationError("null argument");
        *out_contains = contains_point(region->hull, RatePair{r1, r2}, tol) ? 1 : 0;
    });
}

void acmac_region_free(acmac_region* region) {
    delete region;
}

int acmac_inner_point_product(const acmac_channel* ch, const double* p_x1, int n_x1,
                              const double* p_x2, int n_x2, double* out_sum_cap,
                              double* out_r2_cap, double* out_r1_cap) {
    return guarded([&] {
        if (ch == nullptr || p_x1 == nullptr || p_x2 == nullptr) {
            throw ValidationError("null argument");
        }
        const DelaySet ds = ch->ch.delay_set();
        if (n_x1 != ch->ch.x1_size() || n_x2 != ch->ch.x2_size()) {
            throw ValidationError("pmf sizes do not match the channel alphabets");
        }
        const auto rows = pow_checked(n_x1, ds.window(), kMaxTensorStates);
        InnerParams params{Pmf(std::vector<double>(p_x1, p_x1 + n_x1)),
                           ConditionalPmf::constant_row(
                               static_cast<int>(rows),
                               Pmf(std::vector<double>(p_x2, p_x2 + n_x2)))};
        const BoundResult res = accmac_inner_point(ch->ch, ds, params);
        if (out_sum_cap != nullptr) *out_sum_cap = res.pentagon.a;
        if (out_r2_cap != nullptr) *out_r2_cap = res.pentagon.b;
        if (out_r1_cap != nullptr) *out_r1_cap = res.pentagon.c;
    });
}

int acmac_cmd_region(const char* channel_spec, int d_min, int d_max, const char* command,
                     const acmac_search_config* cfg, const char* out_prefix, char** out_summary) {
    return guarded([&] {
        if (channel_spec == nullptr || command == nullptr || out_prefix == nullptr) {
            throw ValidationError("null argument");
        }
        const DiscreteChannel ch = open_channel(channel_spec, d_min, d_max);
        const std::string summary = run_region_command(ch, command, to_core(cfg), out_prefix);
        if (out_summary != nullptr) *out_summary = dup_string(summary);
    });
}

int acmac_cmd_gaussian(double p1, double p2, double n0, int rho_steps, int p2_steps,
                       const char* out_prefix, char** out_summary) {
    return guarded([&] {
        if (out_prefix == nullptr) throw ValidationError("null argument");
        const std::string summary =
            run_gaussian_command(p1, p2, n0, rho_steps, p2_steps, out_prefix);
        if (out_summary != nullptr) *out_summary = dup_string(summary);
    });
}

int acmac_cmd_multiletter(const char* channel_spec, int d_min, int d_max, int n,
                          const char* law_spec_json, int model, const char* out_prefix,
                          char** out_summary) {
    return guarded([&] {
        if (channel_spec == nullptr || out_prefix == nullptr) throw ValidationError("null argument");
        const DiscreteChannel ch = open_channel(channel_spec, d_min, d_max);
        const std::string law =
            law_spec_json != nullptr ? law_spec_json : std::string("{\"kind\":\"iid_uniform\"}");
        const std::string summary = run_multiletter_command(ch, n, law, model, out_prefix);
        if (out_summary != nullptr) *out_summary = dup_string(summary);
    });
}

void acmac_sim_config_init(acmac_sim_config* cfg) {
    if (cfg == nullptr) return;
    const SimConfig d;
    cfg->n = d.n;
    cfg->r1 = d.r1;
    cfg->r2 = d.r2;
    cfg->eps = d.eps;
    cfg->trials = d.trials;
    cfg->seed = d.seed;
    cfg->delay_fixed = 0;
    cfg->delay_d = 0;
    cfg->model = ACMAC_MODEL_MESSAGE;
    cfg->threads = d.threads;
}

int acmac_sim_config_load(const char* path, acmac_sim_config* cfg) {
    return guarded([&] {
        if (path == nullptr || cfg == nullptr) throw ValidationError("null argument");
        const SimConfig c = io::sim_config_from_json(io::read_file(path));
        cfg->n = c.n;
        cfg->r1 = c.r1;
        cfg->r2 = c.r2;
        cfg->eps = c.eps;
        cfg->trials = c.trials;
        cfg->seed = c.seed;
        cfg->delay_fixed = c.delay.uniform ? 0 : 1;
        cfg->delay_d = c.delay.fixed_d;
        cfg->model = c.model == SimModel::accmac ? ACMAC_MODEL_CODEWORD : ACMAC_MODEL_MESSAGE;
        cfg->threads = c.threads;
    });
}

int acmac_cmd_simulate(const char* channel_spec, int d_min, int d_max,
                       const acmac_sim_config* cfg, const char* params_json,
                       const char* out_prefix, char** out_summary) {
    return guarded([&] {
        if (channel_spec == nullptr || out_prefix == nullptr) throw ValidationError("null argument");
        const DiscreteChannel ch = open_channel(channel_spec, d_min, d_max);
        const std::string summary = run_simulate_command(
            ch, to_core(cfg), params_json != nullptr ? params_json : "", out_prefix);
        if (out_summary != nullptr) *out_summary = dup_string(summary);
    });
}

int acmac_simulate(const acmac_channel* ch, const acmac_sim_config* cfg, const char* params_json,
                   acmac_sim_report** out) {
    return guarded([&] {
        if (ch == nullptr || out == nullptr) throw ValidationError("null argument");
        const DelaySet ds = ch->ch.delay_set();
        const SimConfig c = to_core(cfg);
        const InnerParams params =
            (params_json == nullptr || params_json[0] == '\0')
                ? InnerParams::uniform(ch->ch, ds)
                : io::inner_params_from_json(params_json, ch->ch, ds);
        *out = new acmac_sim_report{run_experiment(ch->ch, ds, c, params), c};
    });
}

int acmac_sim_report_error_rate(const acmac_sim_report* rep, double* out_rate) {
    return guarded([&] {
        if (rep == nullptr || out_rate == nullptr) throw ValidationError("null argument");
        *out_rate = rep->rep.error_rate;
    });
}

int acmac_sim_report_json(const acmac_sim_report* rep, char** out_json) {
    return guarded([&] {
        if (rep == nullptr || out_json == nullptr) throw ValidationError("null argument");
        *out_json = dup_string(io::sim_report_json(rep->rep, rep->cfg));
    });
}

void acmac_sim_report_free(acmac_sim_report* rep) {
    delete rep;
}

int acmac_cmd_replay(const char* manifest_path, char** out_summary) {
    return guarded([&] {
        if (manifest_path == nullptr) throw ValidationError("null argument");
        const nlohmann::ordered_json m =
            nlohmann::ordered_json::parse(io::read_file(manifest_path), nullptr, false);
        if (m.is_discarded() || !m.contains("command")) {
            throw ValidationError("replay: not a manifest file");
        }
        const std::string command = m.at("command").get<std::string>();
        const std::string prefix = m.at("outputs").at("prefix").get<std::string>();
        std::string summary;
        if (command == "inner" || command == "outer" || command == "accmac_inner" ||
            command == "accmac_outer") {
            const DiscreteChannel ch = io::channel_from_json(m.at("channel").dump());
            const SearchConfig cfg = io::search_config_from_json(m.at("search").dump());
            summary = run_region_command(ch, command, cfg, prefix);
        } else if (command == "gaussian") {
            const auto& g = m.at("gaussian");
            summary = run_gaussian_command(g.at("p1").get<double>(), g.at("p2").get<double>(),
                                           g.at("n0").get<double>(), g.at("rho_steps").get<int>(),
                                           g.at("p2_steps").get<int>(), prefix);
        } else if (command == "multiletter") {
            const DiscreteChannel ch = io::channel_from_json(m.at("channel").dump());
            const auto& mm = m.at("multiletter");
            const int model = mm.at("model").get<std::string>() == "accmac"
                                  ? ACMAC_MODEL_CODEWORD
                                  : ACMAC_MODEL_MESSAGE;
            summary = run_multiletter_command(ch, mm.at("n").get<int>(), mm.at("law").dump(),
                                              model, prefix);
        } else if (command == "simulate") {
            const DiscreteChannel ch = io::channel_from_json(m.at("channel").dump());
            const SimConfig cfg = io::sim_config_from_json(m.at("sim").dump());
            summary = run_simulate_command(ch, cfg, m.at("params").dump(), prefix);
        } else {
            throw ValidationError("replay: unknown command '" + command + "'");
        }
        if (out_summary != nullptr) *out_summary = dup_string("replayed " + summary);
    });
}

int acmac_cmd_validate(const char* channel_path, char** out_report) {
    return guarded([&] {
        if (channel_path == nullptr) throw ValidationError("null argument");
        const DiscreteChannel ch = io::resolve_channel(channel_path);
        if (out_report != nullptr) *out_report = dup_string(io::channel_diagnostics(ch));
    });
}

}  // extern "C"
