#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace acmac::io {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text, const char* what) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ValidationError(std::string(what) + ": malformed JSON");
    }
    return j;
}

ordered_json require(const ordered_json& j, const char* key, const char* what) {
    if (!j.contains(key)) {
        throw ValidationError(std::string(what) + ": missing key '" + key + "'");
    }
    return j.at(key);
}

ordered_json pentagon_json(const BoundPentagon& p) {
    ordered_json j;
    j["a"] = p.a;
    j["b"] = p.b;
    if (std::isfinite(p.c)) {
        j["c"] = p.c;
    } else {
        j["c"] = nullptr;
    }
    return j;
}

ordered_json hull_json(const RegionHull& hull) {
    ordered_json verts = ordered_json::array();
    for (const auto& v : hull.vertices()) verts.push_back({v.r1, v.r2});
    return verts;
}

ordered_json channel_json_obj(const DiscreteChannel& ch) {
    ordered_json j;
    auto labels_or_default = [](const std::vector<std::string>& labels, int n,
                                const char* prefix) {
        ordered_json arr = ordered_json::array();
        for (int i = 0; i < n; ++i) {
            arr.push_back(static_cast<int>(labels.size()) == n ? labels[static_cast<size_t>(i)]
                                                               : prefix + std::to_string(i));
        }
        return arr;
    };
    j["x1_alphabet"] = labels_or_default(ch.x1_labels, ch.x1_size(), "a");
    j["x2_alphabet"] = labels_or_default(ch.x2_labels, ch.x2_size(), "b");
    j["y_alphabet"] = labels_or_default(ch.y_labels, ch.y_size(), "y");
    ordered_json t = ordered_json::array();
    for (int a = 0; a < ch.x1_size(); ++a) {
        ordered_json ta = ordered_json::array();
        for (int b = 0; b < ch.x2_size(); ++b) {
            ordered_json row = ordered_json::array();
            for (int y = 0; y < ch.y_size(); ++y) row.push_back(ch.p(a, b, y));
            ta.push_back(std::move(row));
        }
        t.push_back(std::move(ta));
    }
    j["transition"] = std::move(t);
    j["d_min"] = ch.delay_set().d_min;
    j["d_max"] = ch.delay_set().d_max;
    return j;
}

std::vector<std::string> string_array(const ordered_json& arr, const char* what) {
    if (!arr.is_array()) throw ValidationError(std::string(what) + ": expected an array");
    std::vector<std::string> out;
    for (const auto& v : arr) {
        out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    return out;
}

Pmf pmf_from_json(const ordered_json& arr, const char* what) {
    if (!arr.is_array() || arr.empty()) {
        throw ValidationError(std::string(what) + ": expected a probability array");
    }
    std::vector<double> v;
    for (const auto& x : arr) v.push_back(x.get<double>());
    return Pmf(std::move(v));
}

}  // namespace

std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

DiscreteChannel channel_from_json(const std::string& text) {
    const ordered_json j = parse(text, "channel");
    const auto x1 = string_array(require(j, "x1_alphabet", "channel"), "x1_alphabet");
    const auto x2 = string_array(require(j, "x2_alphabet", "channel"), "x2_alphabet");
    const auto yl = string_array(require(j, "y_alphabet", "channel"), "y_alphabet");
    const ordered_json t = require(j, "transition", "channel");
    const int d_min = require(j, "d_min", "channel").get<int>();
    const int d_max = require(j, "d_max", "channel").get<int>();

    const int nx1 = static_cast<int>(x1.size());
    const int nx2 = static_cast<int>(x2.size());
    const int ny = static_cast<int>(yl.size());
    if (!t.is_array() || static_cast<int>(t.size()) != nx1) {
        throw ValidationError("channel: transition must have one slice per x1 symbol");
    }
    std::vector<double> tr(static_cast<size_t>(nx1) * nx2 * ny, 0.0);
    for (int a = 0; a < nx1; ++a) {
        const auto& ta = t.at(static_cast<size_t>(a));
        if (!ta.is_array() || static_cast<int>(ta.size()) != nx2) {
            throw ValidationError("channel: transition[" + std::to_string(a) +
                                  "] must have one row per x2 symbol");
        }
        for (int b = 0; b < nx2; ++b) {
            const auto& row = ta.at(static_cast<size_t>(b));
            if (!row.is_array() || static_cast<int>(row.size()) != ny) {
                throw ValidationError("channel: transition row shape mismatch at x1=" +
                                      std::to_string(a) + ", x2=" + std::to_string(b));
            }
            double sum = 0.0;
            for (int y = 0; y < ny; ++y) {
                const double v = row.at(static_cast<size_t>(y)).get<double>();
                if (!(v >= 0.0)) {
                    throw ValidationError("channel: negative probability at x1=" +
                                          std::to_string(a) + ", x2=" + std::to_string(b));
                }
                tr[(static_cast<size_t>(a) * nx2 + b) * ny + y] = v;
                sum += v;
            }
            if (std::abs(sum - 1.0) > 1e-9) {
                throw ValidationError("channel: row (x1=" + std::to_string(a) +
                                      ", x2=" + std::to_string(b) + ") sums to " +
                                      format_g9(sum) + ", outside tolerance 1e-9");
            }
            for (int y = 0; y < ny; ++y) {
                tr[(static_cast<size_t>(a) * nx2 + b) * ny + y] /= sum;
            }
        }
    }
    DiscreteChannel ch(nx1, nx2, ny, std::move(tr), DelaySet(d_min, d_max));
    ch.x1_labels = x1;
    ch.x2_labels = x2;
    ch.y_labels = yl;
    return ch;
}

DiscreteChannel load_channel_file(const std::string& path) {
    return channel_from_json(read_file(path));
}

std::string channel_to_json(const DiscreteChannel& ch) {
    return channel_json_obj(ch).dump(2) + "\n";
}

void save_channel_file(const DiscreteChannel& ch, const std::string& path) {
    write_file(path, channel_to_json(ch));
}

std::string channel_diagnostics(const DiscreteChannel& ch) {
    std::ostringstream os;
    os << ch.x1_size() << " x1 symbols, " << ch.x2_size() << " x2 symbols, " << ch.y_size()
       << " output symbols, D=" << ch.delay_set().window() << " (delays " << -ch.delay_set().d_min
       << ".." << ch.delay_set().d_max << "), rows stochastic, OK";
    return os.str();
}

DiscreteChannel resolve_channel(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) {
        const std::string rest = spec.substr(8);
        if (rest == "mod") return build_mod_channel().channel;
        const std::string key = "binary_additive";
        if (rest.rfind(key, 0) == 0) {
            double p = 0.0;
            if (rest.size() > key.size() && rest[key.size()] == ':') {
                p = std::stod(rest.substr(key.size() + 1));
            }
            return build_binary_additive(p).channel;
        }
        throw ValidationError("unknown builtin channel '" + rest + "'");
    }
    return load_channel_file(spec);
}

std::string region_to_csv(const RegionHull& hull) {
    std::ostringstream os;
    os << "vertex_index,r1,r2\n";
    int i = 0;
    for (const auto& v : hull.vertices()) {
        os << i++ << "," << format_g9(v.r1) << "," << format_g9(v.r2) << "\n";
    }
    return os.str();
}

std::string region_to_json(const RegionHull& hull) {
    ordered_json j;
    j["vertices"] = hull_json(hull);
    return j.dump(2) + "\n";
}

SearchConfig search_config_from_json(const std::string& text) {
    const ordered_json j = parse(text, "search config");
    SearchConfig cfg;
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("restarts")) cfg.restarts = j.at("restarts").get<int>();
    if (j.contains("ascent_steps")) cfg.ascent_steps = j.at("ascent_steps").get<int>();
    if (j.contains("step_size")) cfg.step_size = j.at("step_size").get<double>();
    if (j.contains("n_dirs")) cfg.n_dirs = j.at("n_dirs").get<int>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    cfg.validate();
    return cfg;
}

std::string search_config_to_json(const SearchConfig& cfg) {
    ordered_json j;
    j["seed"] = cfg.seed;
    j["restarts"] = cfg.restarts;
    j["ascent_steps"] = cfg.ascent_steps;
    j["step_size"] = cfg.step_size;
    j["n_dirs"] = cfg.n_dirs;
    return j.dump();
}

SearchConfig load_search_config(const std::string& path) {
    return search_config_from_json(read_file(path));
}

namespace {

ordered_json search_json(const SearchConfig& cfg) {
    ordered_json j;
    j["seed"] = cfg.seed;
    j["restarts"] = cfg.restarts;
    j["ascent_steps"] = cfg.ascent_steps;
    j["step_size"] = cfg.step_size;
    j["n_dirs"] = cfg.n_dirs;
    return j;
}

ordered_json inner_params_json(const InnerParams& p) {
    ordered_json j;
    j["p_x1"] = p.p_x1.probs();
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < p.p_x2_given_v.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < p.p_x2_given_v.cols(); ++c) row.push_back(p.p_x2_given_v.at(r, c));
        rows.push_back(std::move(row));
    }
    j["p_x2_given_v"] = std::move(rows);
    return j;
}

ordered_json outer_params_json(const OuterParams& p) {
    ordered_json j;
    j["p_vtilde"] = p.p_vtilde.probs();
    ordered_json steps = ordered_json::array();
    for (const auto& c : p.p_x2_causal) {
        ordered_json rows = ordered_json::array();
        for (int r = 0; r < c.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (int k = 0; k < c.cols(); ++k) row.push_back(c.at(r, k));
            rows.push_back(std::move(row));
        }
        steps.push_back(std::move(rows));
    }
    j["p_x2_causal"] = std::move(steps);
    return j;
}

bool pentagon_touches_hull(const BoundPentagon& p, const RegionHull& hull) {
    const auto verts = pentagon_vertices(p).vertices();
    for (const auto& hv : hull.vertices()) {
        if (hv.r1 == 0.0 && hv.r2 == 0.0) continue;
        for (const auto& pv : verts) {
            if (std::abs(hv.r1 - pv.r1) <= 1e-12 && std::abs(hv.r2 - pv.r2) <= 1e-12) return true;
        }
    }
    return false;
}

ordered_json outputs_json(const std::string& out_prefix) {
    ordered_json j;
    j["prefix"] = out_prefix;
    j["csv"] = out_prefix + ".csv";
    j["json"] = out_prefix + ".json";
    j["manifest"] = out_prefix + ".manifest.json";
    return j;
}

template <typename TraceEntry, typename ParamDump>
ordered_json region_manifest_impl(const std::string& command, const DiscreteChannel& ch,
                                  const SearchConfig& cfg, const std::vector<TraceEntry>& trace,
                                  const RegionHull& hull, bool capped,
                                  const std::string& out_prefix, ParamDump dump) {
    ordered_json j;
    j["tool"] = "acmac";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["channel"] = channel_json_obj(ch);
    j["search"] = search_json(cfg);
    j["outputs"] = outputs_json(out_prefix);
    ordered_json res;
    res["hull"] = hull_json(hull);
    res["support_profile"] = support_profile(hull, cfg.n_dirs);
    res["evaluated_points"] = trace.size();
    // Parameter dump for the pentagons that actually support the hull.
    ordered_json sup = ordered_json::array();
    for (const auto& e : trace) {
        const BoundPentagon& p = capped ? e.accmac.pentagon : e.acmac.pentagon;
        if (!pentagon_touches_hull(p, hull)) continue;
        ordered_json s;
        s["pentagon"] = pentagon_json(p);
        ordered_json per_d = ordered_json::array();
        const auto& caps_list = capped ? e.accmac.per_delay : e.acmac.per_delay;
        for (const auto& caps : caps_list) {
            ordered_json cj;
            cj["d"] = caps.d;
            cj["sum_cap"] = caps.sum_cap;
            cj["r2_cap"] = caps.r2_cap;
            if (std::isfinite(caps.r1_cap)) cj["r1_cap"] = caps.r1_cap;
            per_d.push_back(std::move(cj));
        }
        s["per_delay"] = std::move(per_d);
        s["params"] = dump(e.params);
        sup.push_back(std::move(s));
        if (sup.size() >= 64) break;  // keep the manifest bounded
    }
    res["supporting_pentagons"] = std::move(sup);
    j["results"] = std::move(res);
    return j;
}

}  // namespace

std::string inner_region_manifest(const std::string& command, const DiscreteChannel& ch,
                                  const SearchConfig& cfg, const InnerSearchResult& res,
                                  bool capped, const std::string& out_prefix) {
    const RegionHull& hull = capped ? res.accmac_hull : res.acmac_hull;
    return region_manifest_impl(command, ch, cfg, res.trace, hull, capped, out_prefix,
                                [](const InnerParams& p) { return inner_params_json(p); })
               .dump(2) +
           "\n";
}

std::string outer_region_manifest(const std::string& command, const DiscreteChannel& ch,
                                  const SearchConfig& cfg, const OuterSearchResult& res,
                                  bool capped, const std::string& out_prefix) {
    const RegionHull& hull = capped ? res.accmac_hull : res.acmac_hull;
    return region_manifest_impl(command, ch, cfg, res.trace, hull, capped, out_prefix,
                                [](const OuterParams& p) { return outer_params_json(p); })
               .dump(2) +
           "\n";
}

InnerParams inner_params_from_json(const std::string& text, const DiscreteChannel& ch,
                                   const DelaySet& ds) {
    const ordered_json j = parse(text, "inner params");
    InnerParams p;
    p.p_x1 = pmf_from_json(require(j, "p_x1", "inner params"), "p_x1");
    const ordered_json rows = require(j, "p_x2_given_v", "inner params");
    if (!rows.is_array() || rows.empty()) {
        throw ValidationError("inner params: p_x2_given_v must be an array of rows");
    }
    const int ncols = static_cast<int>(rows.at(0).size());
    std::vector<double> vals;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != ncols) {
            throw ValidationError("inner params: ragged p_x2_given_v");
        }
        for (const auto& v : row) vals.push_back(v.get<double>());
    }
    p.p_x2_given_v = ConditionalPmf(static_cast<int>(rows.size()), ncols, std::move(vals));
    validate_inner_params(ch, ds, p);
    return p;
}

std::string inner_params_to_json(const InnerParams& params) {
    return inner_params_json(params).dump(2) + "\n";
}

NLetterLaw law_from_spec_json(const std::string& text, int n, const DiscreteChannel& ch,
                              const DelaySet& ds) {
    const ordered_json j = parse(text, "law spec");
    const std::string kind = require(j, "kind", "law spec").get<std::string>();
    if (kind == "iid_uniform") return NLetterLaw::iid_uniform(n);
    if (kind == "iid_inner") {
        return NLetterLaw::from_iid_inner(n, inner_params_from_json(text, ch, ds));
    }
    if (kind == "joint_file") {
        const std::string path = require(j, "path", "law spec").get<std::string>();
        const ordered_json joint = parse(read_file(path), "joint law file");
        const int file_n = require(joint, "n", "joint law file").get<int>();
        if (file_n != n) {
            throw ValidationError("joint law file: n=" + std::to_string(file_n) +
                                  " does not match requested n=" + std::to_string(n));
        }
        std::vector<double> vals;
        for (const auto& v : require(joint, "values", "joint law file")) {
            vals.push_back(v.get<double>());
        }
        return NLetterLaw::from_joint(n, std::move(vals));
    }
    throw ValidationError("law spec: unknown kind '" + kind + "'");
}

std::string gaussian_csv(const GaussianCurve& outer, const GaussianCurve& inner) {
    std::ostringstream os;
    os << "trace,param1,param2,r1,r2\n";
    auto corner = [&os](const char* name, const GaussianSample& s) {
        const double r1 = std::max(0.0, s.sum_cap - s.r2_cap);
        os << name << "," << format_g9(s.rho) << "," << format_g9(s.p2_used) << ","
           << format_g9(r1) << "," << format_g9(s.r2_cap) << "\n";
    };
    for (const auto& s : outer.samples) corner("outer", s);
    for (const auto& s : inner.samples) corner("inner", s);
    auto hull_rows = [&os](const char* name, const RegionHull& hull) {
        int i = 0;
        for (const auto& v : hull.vertices()) {
            os << name << "," << i++ << ",0," << format_g9(v.r1) << "," << format_g9(v.r2)
               << "\n";
        }
    };
    hull_rows("outer_hull", outer.hull);
    hull_rows("inner_hull", inner.hull);
    return os.str();
}

std::string gaussian_manifest(const GaussianSpec& spec, int rho_steps, int p2_steps,
                              const std::string& out_prefix) {
    ordered_json j;
    j["tool"] = "acmac";
    j["version"] = kToolVersion;
    j["command"] = "gaussian";
    ordered_json g;
    g["p1"] = spec.p1;
    g["p2"] = spec.p2;
    g["n0"] = spec.n0;
    g["rho_steps"] = rho_steps;
    g["p2_steps"] = p2_steps;
    g["log_base"] = 2;
    g["delay_set"] = {0, 1};
    j["gaussian"] = std::move(g);
    ordered_json outs;
    outs["prefix"] = out_prefix;
    outs["csv"] = out_prefix + ".csv";
    outs["manifest"] = out_prefix + ".manifest.json";
    j["outputs"] = std::move(outs);
    return j.dump(2) + "\n";
}

std::string sim_report_json(const SimReport& rep, const SimConfig& cfg) {
    ordered_json j;
    ordered_json c;
    c["n"] = cfg.n;
    c["r1"] = cfg.r1;
    c["r2"] = cfg.r2;
    c["eps"] = cfg.eps;
    c["trials"] = cfg.trials;
    c["seed"] = cfg.seed;
    c["delay_policy"] = cfg.delay.uniform ? ordered_json("uniform") : ordered_json(cfg.delay.fixed_d);
    c["model"] = cfg.model == SimModel::acmac ? "acmac" : "accmac";
    j["config"] = std::move(c);
    j["engine"] = rep.engine;
    ordered_json split;
    split["r1a"] = rep.r1a;
    split["r1b"] = rep.r1b;
    split["m1_codewords"] = rep.m1_count;
    split["m2_codewords"] = rep.m2_count;
    j["rate_split"] = std::move(split);
    j["trials"] = rep.trials;
    j["errors"] = rep.errors;
    j["error_rate"] = rep.error_rate;
    j["half_width"] = rep.half_width;
    ordered_json pd = ordered_json::array();
    for (const auto& s : rep.per_delay) {
        ordered_json e;
        e["d"] = s.d;
        e["trials"] = s.trials;
        e["errors"] = s.errors;
        pd.push_back(std::move(e));
    }
    j["per_delay"] = std::move(pd);
    ordered_json tallies;
    tallies["atypical_step1"] = rep.atypical_step1;
    tallies["atypical_step2"] = rep.atypical_step2;
    tallies["confusion_m1"] = rep.confusion_m1;
    tallies["confusion_m2"] = rep.confusion_m2;
    tallies["uniqueness_failures"] = rep.uniqueness_failures;
    j["tallies"] = std::move(tallies);
    return j.dump(2) + "\n";
}

std::string sim_report_csv(const SimReport& rep) {
    std::ostringstream os;
    os << "d,trials,errors,error_rate\n";
    for (const auto& s : rep.per_delay) {
        const double rate = s.trials > 0 ? static_cast<double>(s.errors) / s.trials : 0.0;
        os << s.d << "," << s.trials << "," << s.errors << "," << format_g9(rate) << "\n";
    }
    os << "all," << rep.trials << "," << rep.errors << "," << format_g9(rep.error_rate) << "\n";
    return os.str();
}

std::string sim_manifest(const DiscreteChannel& ch, const SimConfig& cfg,
                         const InnerParams& params, const SimReport& rep,
                         const std::string& out_prefix) {
    ordered_json j;
    j["tool"] = "acmac";
    j["version"] = kToolVersion;
    j["command"] = "simulate";
    j["channel"] = channel_json_obj(ch);
    ordered_json c;
    c["n"] = cfg.n;
    c["r1"] = cfg.r1;
    c["r2"] = cfg.r2;
    c["eps"] = cfg.eps;
    c["trials"] = cfg.trials;
    c["seed"] = cfg.seed;
    c["delay_policy"] = cfg.delay.uniform ? ordered_json("uniform") : ordered_json(cfg.delay.fixed_d);
    c["model"] = cfg.model == SimModel::acmac ? "acmac" : "accmac";
    c["threads"] = cfg.threads;
    j["sim"] = std::move(c);
    j["params"] = inner_params_json(params);
    ordered_json outs;
    outs["prefix"] = out_prefix;
    outs["report_json"] = out_prefix + ".report.json";
    outs["report_csv"] = out_prefix + ".report.csv";
    outs["manifest"] = out_prefix + ".manifest.json";
    j["outputs"] = std::move(outs);
    ordered_json res;
    res["engine"] = rep.engine;
    res["error_rate"] = rep.error_rate;
    j["results"] = std::move(res);
    return j.dump(2) + "\n";
}

SimConfig sim_config_from_json(const std::string& text) {
    const ordered_json j = parse(text, "sim config");
    SimConfig cfg;
    if (j.contains("n")) cfg.n = j.at("n").get<int>();
    if (j.contains("r1")) cfg.r1 = j.at("r1").get<double>();
    if (j.contains("r2")) cfg.r2 = j.at("r2").get<double>();
    if (j.contains("eps")) cfg.eps = j.at("eps").get<double>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (j.contains("delay_policy")) {
        const auto& dp = j.at("delay_policy");
        cfg.delay = dp.is_string() ? DelayPolicy::uniform_over_set()
                                   : DelayPolicy::fixed(dp.get<int>());
    }
    if (j.contains("model")) {
        const std::string m = j.at("model").get<std::string>();
        if (m == "acmac") {
            cfg.model = SimModel::acmac;
        } else if (m == "accmac") {
            cfg.model = SimModel::accmac;
        } else {
            throw ValidationError("sim config: unknown model '" + m + "'");
        }
    }
    return cfg;
}

std::string multiletter_manifest(const DiscreteChannel& ch, int n, const std::string& model,
                                 const std::string& law_spec_json, const BoundPentagon& rn,
                                 const BoundPentagon& qn, double c_cap, double gap_bound,
                                 const std::string& out_prefix) {
    ordered_json j;
    j["tool"] = "acmac";
    j["version"] = kToolVersion;
    j["command"] = "multiletter";
    j["channel"] = channel_json_obj(ch);
    ordered_json m;
    m["n"] = n;
    m["model"] = model;
    m["law"] = parse(law_spec_json, "law spec");
    j["multiletter"] = std::move(m);
    ordered_json outs;
    outs["prefix"] = out_prefix;
    outs["manifest"] = out_prefix + ".manifest.json";
    j["outputs"] = std::move(outs);
    ordered_json res;
    res["r_n"] = pentagon_json(rn);
    res["q_n"] = pentagon_json(qn);
    if (model == "accmac") res["r1_cap"] = c_cap;
    res["lemma2_gap_bound"] = gap_bound;
    res["gap_observed_sum"] = std::abs(rn.a - qn.a);
    res["gap_observed_r2"] = std::abs(rn.b - qn.b);
    j["results"] = std::move(res);
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file '" + path + "'");
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace acmac::io
