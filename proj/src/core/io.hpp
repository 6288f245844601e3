#pragma once

#include <string>

#include "channel.hpp"
#include "gaussian.hpp"
#include "multiletter.hpp"
#include "search.hpp"
#include "sim.hpp"

namespace acmac::io {

inline constexpr const char* kToolVersion = "0.1.0";

std::string format_g9(double v);  // 9 significant digits

// ---- channel files ------------------------------------------------------
// Schema: x1_alphabet / x2_alphabet / y_alphabet (label arrays), transition
// indexed [x1][x2][y], d_min, d_max. Rows within 1e-9 of stochastic are
// renormalized; anything worse is rejected with the row index.
DiscreteChannel channel_from_json(const std::string& text);
DiscreteChannel load_channel_file(const std::string& path);
std::string channel_to_json(const DiscreteChannel& ch);
void save_channel_file(const DiscreteChannel& ch, const std::string& path);
std::string channel_diagnostics(const DiscreteChannel& ch);

// Accepts a path, or "builtin:mod" / "builtin:binary_additive:<p>".
DiscreteChannel resolve_channel(const std::string& spec);

// ---- regions ------------------------------------------------------------
std::string region_to_csv(const RegionHull& hull);
std::string region_to_json(const RegionHull& hull);

SearchConfig search_config_from_json(const std::string& text);
std::string search_config_to_json(const SearchConfig& cfg);
SearchConfig load_search_config(const std::string& path);

std::string inner_region_manifest(const std::string& command, const DiscreteChannel& ch,
                                  const SearchConfig& cfg, const InnerSearchResult& res,
                                  bool capped, const std::string& out_prefix);
std::string outer_region_manifest(const std::string& command, const DiscreteChannel& ch,
                                  const SearchConfig& cfg, const OuterSearchResult& res,
                                  bool capped, const std::string& out_prefix);

// ---- parameters and laws -------------------------------------------------
InnerParams inner_params_from_json(const std::string& text, const DiscreteChannel& ch,
                                   const DelaySet& ds);
std::string inner_params_to_json(const InnerParams& params);

// {"kind":"iid_uniform"} | {"kind":"iid_inner","p_x1":...,"p_x2_given_v":...}
// | {"kind":"joint_file","path":...}
NLetterLaw law_from_spec_json(const std::string& text, int n, const DiscreteChannel& ch,
                              const DelaySet& ds);

// ---- gaussian ------------------------------------------------------------
// Columns trace,param1,param2,r1,r2: per-sample Pareto corners of both bounds
// plus the two hull boundaries.
std::string gaussian_csv(const GaussianCurve& outer, const GaussianCurve& inner);
std::string gaussian_manifest(const GaussianSpec& spec, int rho_steps, int p2_steps,
                              const std::string& out_prefix);

// ---- simulation -----------------------------------------------------------
std::string sim_report_json(const SimReport& rep, const SimConfig& cfg);
std::string sim_report_csv(const SimReport& rep);
std::string sim_manifest(const DiscreteChannel& ch, const SimConfig& cfg,
                         const InnerParams& params, const SimReport& rep,
                         const std::string& out_prefix);
SimConfig sim_config_from_json(const std::string& text);

// ---- multiletter -----------------------------------------------------------
std::string multiletter_manifest(const DiscreteChannel& ch, int n, const std::string& model,
                                 const std::string& law_spec_json, const BoundPentagon& rn,
                                 const BoundPentagon& qn, double c_cap, double gap_bound,
                                 const std::string& out_prefix);

// ---- files ----------------------------------------------------------------
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace acmac::io
