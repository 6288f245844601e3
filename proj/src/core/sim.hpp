#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "channel.hpp"
#include "rng.hpp"

namespace acmac {

enum class SimModel { acmac, accmac };

struct DelayPolicy {
    bool uniform = true;  // drawn per trial over the delay set
    int fixed_d = 0;

    static DelayPolicy uniform_over_set() { return DelayPolicy{}; }
    static DelayPolicy fixed(int d) { return DelayPolicy{false, d}; }
};

struct SimConfig {
    int n = 64;
    double r1 = 0.1;
    double r2 = 0.1;
    double eps = 0.4;
    int trials = 100;
    std::uint64_t seed = 1;
    DelayPolicy delay;
    SimModel model = SimModel::acmac;
    int threads = 1;
};

// Materialized random codebooks. c1 holds m1 codewords drawn i.i.d. from
// p_x1; c2[l] holds m2 codewords drawn per symbol from p_x2_given_v applied
// to the cyclic windows of c1[l]. Regeneration from (seed, sizes) is
// bit-identical.
struct Codebooks {
    int n = 0;
    std::uint64_t seed = 0;
    std::int64_t m1 = 1;
    std::int64_t m2 = 1;
    InnerParams params;
    std::vector<std::vector<int>> c1;
    std::vector<std::vector<std::vector<int>>> c2;
};

Codebooks generate_codebooks(const DiscreteChannel& ch, const DelaySet& ds,
                             const InnerParams& params, int n, std::int64_t m1, std::int64_t m2,
                             std::uint64_t seed);

// Cyclic sliding window (x_{1,i-d_max}, ..., x_{1,i+d_min}) at every position.
std::vector<std::vector<int>> sliding_window_v(const std::vector<int>& x1, const DelaySet& ds);
// Same windows as row-major indices over X1^D.
std::vector<int> sliding_window_indices(const std::vector<int>& x1, const DelaySet& ds,
                                        int x1_size);

// Cyclic rotation aligning a delayed codeword with the output block:
// sigma(x, d)_i = x_{i-d mod n}.
std::vector<int> sigma_shift(const std::vector<int>& x1, int d);

// One channel use of the whole block: y_i ~ P(.|x_{1,i-d}, x_{2,i}) with the
// cyclic index convention. Under the codeword-cognition model the informed
// encoder first checks that c1[m1] is unique in the codebook and sends the
// all-zero word on failure (reported through uniqueness_failed).
std::vector<int> transmit(const DiscreteChannel& ch, const DelaySet& ds, const Codebooks& cb,
                          std::int64_t m1, std::int64_t m2, int d, Rng& rng, SimModel model,
                          bool* uniqueness_failed);

struct DecodeResult {
    bool ok = false;
    std::int64_t m1 = -1;
    std::int64_t m2 = -1;
    // Diagnostics: which stage failed and how.
    bool step1_atypical = false;
    bool step1_ambiguous = false;
    bool step2_atypical = false;
    bool step2_ambiguous = false;
};

// Typicality decoding with the decoder given the true delay. ACMAC decodes
// successively (x1 first via sigma alignment, then x2 given the window
// sequence); ACC-MAC searches message pairs simultaneously.
DecodeResult decode(const DiscreteChannel& ch, const DelaySet& ds, const Codebooks& cb,
                    const std::vector<int>& y, int d, double eps, SimModel model);

struct SimReport {
    struct PerDelay {
        int d = 0;
        std::int64_t trials = 0;
        std::int64_t errors = 0;
    };
    std::vector<PerDelay> per_delay;
    std::int64_t trials = 0;
    std::int64_t errors = 0;
    double error_rate = 0.0;
    double half_width = 0.0;  // normal-approximation 95% confidence half-width

    // Failure tallies (first failing stage per trial).
    std::int64_t atypical_step1 = 0;
    std::int64_t atypical_step2 = 0;
    std::int64_t confusion_m1 = 0;
    std::int64_t confusion_m2 = 0;
    std::int64_t uniqueness_failures = 0;

    std::string engine;  // "exhaustive" or "ensemble"
    double r1a = 0.0;    // rate carried by encoder 1 after splitting
    double r1b = 0.0;    // user-1 rate carried by encoder 2
    double m1_count = 1.0;
    double m2_count = 1.0;
};

// Monte-Carlo estimate of the average error probability at the configured
// rate pair. Under message cognition the common message is split across the
// encoders to place the operating point inside the pentagon of `params`.
// Codebooks are materialized and
// decoded exhaustively when they fit; otherwise (message-cognition model
// only) an exact ensemble-averaged engine draws each trial's error indicator
// from its conditional probability given the realized transmission.
SimReport run_experiment(const DiscreteChannel& ch, const DelaySet& ds, const SimConfig& cfg,
                         const InnerParams& params);

// Inclusive count window [lo, hi] of the relative-slack strong-typicality box
// for one cell; zero-probability cells force a zero count.
std::pair<std::int64_t, std::int64_t> count_bounds(int n, double p, double eps);

// log of Pr[Multinomial(n, p) has every cell count inside its box].
double log_multinomial_box(int n, const std::vector<double>& cell_p,
                           const std::vector<std::pair<std::int64_t, std::int64_t>>& bounds);

}  // namespace acmac
