#include "sim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <thread>

namespace acmac {

namespace {

constexpr int kMaxBlocklength = 4096;  // ~2^12
constexpr std::int64_t kMaxLiteralSymbols = 1u << 26;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

int mod_index(int i, int n) {
    int m = i % n;
    return m < 0 ? m + n : m;
}

// Single-letter design laws of the decoder for one delay: the (x1, y) pair
// marginal and the (window, x2, y) triple law.
struct DesignLaw {
    int d = 0;
    std::vector<double> pair;    // |X1| * |Y|
    std::vector<double> triple;  // V * |X2| * |Y|
};

DesignLaw design_law(const DiscreteChannel& ch, const DelaySet& ds, const InnerParams& params,
                     int d) {
    const int D = ds.window();
    const int nx1 = ch.x1_size(), nx2 = ch.x2_size(), ny = ch.y_size();
    const std::int64_t V = pow_checked(nx1, D, kMaxTensorStates / (nx2 * ny));
    const int slot = ds.d_max - d + 1;

    DesignLaw law;
    law.d = d;
    law.pair.assign(static_cast<size_t>(nx1) * ny, 0.0);
    law.triple.assign(static_cast<size_t>(V) * nx2 * ny, 0.0);
    for (std::int64_t v = 0; v < V; ++v) {
        double pv = 1.0;
        for (int j = 1; j <= D; ++j) {
            pv *= params.p_x1[window_slot_symbol(static_cast<int>(v), j, nx1, D)];
        }
        if (pv == 0.0) continue;
        const int x1 = window_slot_symbol(static_cast<int>(v), slot, nx1, D);
        for (int x2 = 0; x2 < nx2; ++x2) {
            const double p2 = params.p_x2_given_v.at(static_cast<int>(v), x2);
            if (p2 == 0.0) continue;
            for (int y = 0; y < ny; ++y) {
                const double w = pv * p2 * ch.p(x1, x2, y);
                law.pair[static_cast<size_t>(x1) * ny + y] += w;
                law.triple[(static_cast<size_t>(v) * nx2 + x2) * ny + y] += w;
            }
        }
    }
    return law;
}

bool counts_in_box(const std::vector<std::int64_t>& counts, const std::vector<double>& p, int n,
                   double eps) {
    for (size_t i = 0; i < counts.size(); ++i) {
        const auto [lo, hi] = count_bounds(n, p[i], eps);
        if (counts[i] < lo || counts[i] > hi) return false;
    }
    return true;
}

bool pair_typical(const std::vector<int>& a, const std::vector<int>& b, const DesignLaw& law,
                  int na, int nb, double eps) {
    std::vector<std::int64_t> counts(static_cast<size_t>(na) * nb, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        counts[static_cast<size_t>(a[i]) * nb + b[i]]++;
    }
    return counts_in_box(counts, law.pair, static_cast<int>(a.size()), eps);
}

bool triple_typical(const std::vector<int>& v_idx, const std::vector<int>& x2,
                    const std::vector<int>& y, const DesignLaw& law, std::int64_t V, int nx2,
                    int ny, double eps) {
    std::vector<std::int64_t> counts(static_cast<size_t>(V) * nx2 * ny, 0);
    for (size_t i = 0; i < y.size(); ++i) {
        counts[(static_cast<size_t>(v_idx[i]) * nx2 + x2[i]) * ny + y[i]]++;
    }
    return counts_in_box(counts, law.triple, static_cast<int>(y.size()), eps);
}

double logsumexp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

// log of (1 - p)^m for huge m, with p given in log domain.
double log_no_hit(double log_p, double m) {
    if (m <= 0.0 || log_p == kNegInf) return 0.0;
    const double p = std::exp(log_p);
    if (p >= 1.0 - 1e-12) return kNegInf;
    if (p > 1e-10) return m * std::log1p(-p);
    const double mp = std::exp(std::log(m) + log_p);
    return -mp;
}

struct RateSplit {
    double r1a = 0.0;
    double r1b = 0.0;
    double m1 = 1.0;
    double m2 = 1.0;
};

double message_count(double rate_bits) {
    if (rate_bits <= 0.0) return 1.0;
    return std::ceil(std::exp2(rate_bits));
}

RateSplit plan_rates(const DiscreteChannel& ch, const DelaySet& ds, const SimConfig& cfg,
                     const InnerParams& params) {
    RateSplit rs;
    if (cfg.model == SimModel::accmac) {
        rs.r1a = cfg.r1;
        rs.r1b = 0.0;
    } else {
        // Split the common message so both decoding stages carry balanced
        // slack relative to the pentagon of `params`.
        const BoundResult bound = inner_point(ch, ds, params);
        double i1 = kNoR1Cap, i2 = kNoR1Cap;
        for (const auto& caps : bound.per_delay) {
            i1 = std::min(i1, caps.sum_cap - caps.r2_cap);
            i2 = std::min(i2, caps.r2_cap);
        }
        const double mid = 0.5 * (i1 - i2 + cfg.r1 + cfg.r2);
        rs.r1a = std::clamp(mid, 0.0, std::min(cfg.r1, std::max(0.0, i1)));
        rs.r1b = cfg.r1 - rs.r1a;
    }
    rs.m1 = message_count(cfg.n * rs.r1a);
    rs.m2 = message_count(cfg.n * (rs.r1b + cfg.r2));
    return rs;
}

void validate_config(const DelaySet& ds, const SimConfig& cfg) {
    if (cfg.n < ds.window()) throw ValidationError("SimConfig: blocklength below window size D");
    if (cfg.n > kMaxBlocklength) {
        throw CapacityError("SimConfig: blocklength above " + std::to_string(kMaxBlocklength));
    }
    if (!(cfg.eps > 0.0)) throw ValidationError("SimConfig: typicality slack must be positive");
    if (cfg.trials < 1) throw ValidationError("SimConfig: need at least one trial");
    if (cfg.r1 < 0.0 || cfg.r2 < 0.0) throw ValidationError("SimConfig: rates must be nonnegative");
    if (!cfg.delay.uniform) {
        if (cfg.delay.fixed_d < -ds.d_min || cfg.delay.fixed_d > ds.d_max) {
            throw ValidationError("SimConfig: fixed delay outside the delay set");
        }
    }
}

void run_partitioned(int n_items, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || n_items <= 1) {
        for (int i = 0; i < n_items; ++i) fn(i);
        return;
    }
    const int workers = std::min(threads, n_items);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n_items; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

struct TrialOutcome {
    int d = 0;
    bool error = false;
    bool atypical1 = false, atypical2 = false, conf1 = false, conf2 = false, uniq_fail = false;
};

void finalize_report(const DelaySet& ds, const SimConfig& cfg,
                     const std::vector<TrialOutcome>& outcomes, SimReport* rep) {
    std::map<int, SimReport::PerDelay> per_d;
    for (int d : ds.delays()) per_d[d] = {d, 0, 0};
    for (const auto& o : outcomes) {
        auto& slot = per_d[o.d];
        slot.trials++;
        if (o.error) slot.errors++;
        if (o.error) rep->errors++;
        if (o.atypical1) rep->atypical_step1++;
        if (o.atypical2) rep->atypical_step2++;
        if (o.conf1) rep->confusion_m1++;
        if (o.conf2) rep->confusion_m2++;
        if (o.uniq_fail) rep->uniqueness_failures++;
    }
    for (auto& [d, slot] : per_d) rep->per_delay.push_back(slot);
    rep->trials = cfg.trials;
    rep->error_rate = static_cast<double>(rep->errors) / cfg.trials;
    rep->half_width =
        1.96 * std::sqrt(std::max(0.0, rep->error_rate * (1.0 - rep->error_rate) / cfg.trials));
}

}  // namespace

std::pair<std::int64_t, std::int64_t> count_bounds(int n, double p, double eps) {
    if (p <= 0.0) return {0, 0};
    const double lo = std::ceil(n * p * (1.0 - eps) - 1e-9);
    const double hi = std::floor(n * p * (1.0 + eps) + 1e-9);
    return {static_cast<std::int64_t>(std::max(0.0, lo)),
            static_cast<std::int64_t>(std::min(static_cast<double>(n), hi))};
}

double log_multinomial_box(int n, const std::vector<double>& cell_p,
                           const std::vector<std::pair<std::int64_t, std::int64_t>>& bounds) {
    const size_t cells = cell_p.size();
    std::vector<double> f(static_cast<size_t>(n) + 1, kNegInf);
    f[0] = 0.0;
    std::vector<double> next(static_cast<size_t>(n) + 1);
    for (size_t c = 0; c < cells; ++c) {
        std::fill(next.begin(), next.end(), kNegInf);
        const auto [lo, hi] = bounds[c];
        const double logp = cell_p[c] > 0.0 ? std::log(cell_p[c]) : kNegInf;
        for (int t = 0; t <= n; ++t) {
            if (f[static_cast<size_t>(t)] == kNegInf) continue;
            const std::int64_t kmax = std::min<std::int64_t>(hi, n - t);
            for (std::int64_t k = lo; k <= kmax; ++k) {
                if (k > 0 && logp == kNegInf) break;
                const double term = f[static_cast<size_t>(t)] + k * (k > 0 ? logp : 0.0) -
                                    std::lgamma(static_cast<double>(k) + 1.0);
                next[static_cast<size_t>(t + k)] = logsumexp(next[static_cast<size_t>(t + k)], term);
            }
        }
        f.swap(next);
    }
    if (f[static_cast<size_t>(n)] == kNegInf) return kNegInf;
    return f[static_cast<size_t>(n)] + std::lgamma(static_cast<double>(n) + 1.0);
}

std::vector<std::vector<int>> sliding_window_v(const std::vector<int>& x1, const DelaySet& ds) {
    const int n = static_cast<int>(x1.size());
    if (n < ds.window()) throw ValidationError("sliding_window_v: blocklength below D");
    std::vector<std::vector<int>> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& w = out[static_cast<size_t>(i)];
        w.reserve(static_cast<size_t>(ds.window()));
        for (int j = -ds.d_max; j <= ds.d_min; ++j) {
            w.push_back(x1[static_cast<size_t>(mod_index(i + j, n))]);
        }
    }
    return out;
}

std::vector<int> sliding_window_indices(const std::vector<int>& x1, const DelaySet& ds,
                                        int x1_size) {
    const int n = static_cast<int>(x1.size());
    if (n < ds.window()) throw ValidationError("sliding_window_indices: blocklength below D");
    std::vector<int> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int idx = 0;
        for (int j = -ds.d_max; j <= ds.d_min; ++j) {
            idx = idx * x1_size + x1[static_cast<size_t>(mod_index(i + j, n))];
        }
        out[static_cast<size_t>(i)] = idx;
    }
    return out;
}

std::vector<int> sigma_shift(const std::vector<int>& x1, int d) {
    const int n = static_cast<int>(x1.size());
    std::vector<int> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<size_t>(i)] = x1[static_cast<size_t>(mod_index(i - d, n))];
    }
    return out;
}

Codebooks generate_codebooks(const DiscreteChannel& ch, const DelaySet& ds,
                             const InnerParams& params, int n, std::int64_t m1, std::int64_t m2,
                             std::uint64_t seed) {
    validate_inner_params(ch, ds, params);
    if (n < ds.window()) throw ValidationError("generate_codebooks: blocklength below D");
    if ((m1 * n + m1 * m2 * n) > kMaxLiteralSymbols) {
        throw CapacityError("generate_codebooks: codebooks need " +
                            std::to_string(m1 * n + m1 * m2 * n) + " symbols, cap " +
                            std::to_string(kMaxLiteralSymbols));
    }
    Codebooks cb;
    cb.n = n;
    cb.seed = seed;
    cb.m1 = m1;
    cb.m2 = m2;
    cb.params = params;
    cb.c1.resize(static_cast<size_t>(m1));
    cb.c2.resize(static_cast<size_t>(m1));

    const double* px1 = params.p_x1.probs().data();
    for (std::int64_t l = 0; l < m1; ++l) {
        Rng rng = Rng::derive(seed, 0x10000 + static_cast<std::uint64_t>(l));
        auto& word = cb.c1[static_cast<size_t>(l)];
        word.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = rng.sample(px1, ch.x1_size());

        const auto windows = sliding_window_indices(word, ds, ch.x1_size());
        auto& books = cb.c2[static_cast<size_t>(l)];
        books.resize(static_cast<size_t>(m2));
        for (std::int64_t j = 0; j < m2; ++j) {
            auto& w2 = books[static_cast<size_t>(j)];
            w2.resize(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                w2[static_cast<size_t>(i)] = rng.sample(
                    params.p_x2_given_v.row(windows[static_cast<size_t>(i)]), ch.x2_size());
            }
        }
    }
    return cb;
}

std::vector<int> transmit(const DiscreteChannel& ch, const DelaySet& ds, const Codebooks& cb,
                          std::int64_t m1, std::int64_t m2, int d, Rng& rng, SimModel model,
                          bool* uniqueness_failed) {
    if (m1 < 0 || m1 >= cb.m1 || m2 < 0 || m2 >= cb.m2) {
        throw ValidationError("transmit: message index out of range");
    }
    if (d < -ds.d_min || d > ds.d_max) throw ValidationError("transmit: delay outside set");
    const int n = cb.n;
    const std::vector<int>& x1 = cb.c1[static_cast<size_t>(m1)];
    std::vector<int> x2;
    bool uniq_fail = false;
    if (model == SimModel::accmac) {
        for (std::int64_t l = 0; l < cb.m1 && !uniq_fail; ++l) {
            if (l != m1 && cb.c1[static_cast<size_t>(l)] == x1) uniq_fail = true;
        }
    }
    if (uniq_fail) {
        x2.assign(static_cast<size_t>(n), 0);
    } else {
        x2 = cb.c2[static_cast<size_t>(m1)][static_cast<size_t>(m2)];
    }
    if (uniqueness_failed != nullptr) *uniqueness_failed = uniq_fail;

    std::vector<int> y(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int x1_sym = x1[static_cast<size_t>(mod_index(i - d, n))];
        y[static_cast<size_t>(i)] =
            rng.sample(ch.row(x1_sym, x2[static_cast<size_t>(i)]), ch.y_size());
    }
    return y;
}

DecodeResult decode(const DiscreteChannel& ch, const DelaySet& ds, const Codebooks& cb,
                    const std::vector<int>& y, int d, double eps, SimModel model) {
    if (static_cast<int>(y.size()) != cb.n) throw ValidationError("decode: output length mismatch");
    const DesignLaw law = design_law(ch, ds, cb.params, d);
    const std::int64_t V = pow_checked(ch.x1_size(), ds.window(), kMaxTensorStates);

    DecodeResult res;
    if (model == SimModel::acmac) {
        std::int64_t cand1 = -1;
        int cand1_count = 0;
        for (std::int64_t l = 0; l < cb.m1; ++l) {
            const auto shifted = sigma_shift(cb.c1[static_cast<size_t>(l)], d);
            if (pair_typical(shifted, y, law, ch.x1_size(), ch.y_size(), eps)) {
                cand1 = l;
                if (++cand1_count > 1) break;
            }
        }
        if (cand1_count == 0) {
            res.step1_atypical = true;
            return res;
        }
        if (cand1_count > 1) {
            res.step1_ambiguous = true;
            return res;
        }
        const auto windows =
            sliding_window_indices(cb.c1[static_cast<size_t>(cand1)], ds, ch.x1_size());
        std::int64_t cand2 = -1;
        int cand2_count = 0;
        for (std::int64_t j = 0; j < cb.m2; ++j) {
            if (triple_typical(windows, cb.c2[static_cast<size_t>(cand1)][static_cast<size_t>(j)],
                               y, law, V, ch.x2_size(), ch.y_size(), eps)) {
                cand2 = j;
                if (++cand2_count > 1) break;
            }
        }
        if (cand2_count == 0) {
            res.step2_atypical = true;
            return res;
        }
        if (cand2_count > 1) {
            res.step2_ambiguous = true;
            return res;
        }
        res.ok = true;
        res.m1 = cand1;
        res.m2 = cand2;
        return res;
    }

    // Simultaneous pair search.
    std::int64_t best1 = -1, best2 = -1;
    int count = 0;
    for (std::int64_t l = 0; l < cb.m1; ++l) {
        const auto windows = sliding_window_indices(cb.c1[static_cast<size_t>(l)], ds, ch.x1_size());
        for (std::int64_t j = 0; j < cb.m2; ++j) {
            if (triple_typical(windows, cb.c2[static_cast<size_t>(l)][static_cast<size_t>(j)], y,
                               law, V, ch.x2_size(), ch.y_size(), eps)) {
                best1 = l;
                best2 = j;
                if (++count > 1) break;
            }
        }
        if (count > 1) break;
    }
    if (count == 0) {
        res.step2_atypical = true;
        return res;
    }
    if (count > 1) {
        res.step2_ambiguous = true;
        return res;
    }
    res.ok = true;
    res.m1 = best1;
    res.m2 = best2;
    return res;
}

namespace {

// Exact ensemble-averaged trial for the message-cognition model: the true
// transmission is simulated, the two competitor-survival probabilities are
// computed in closed form from the realized (v, y) types, and the trial's
// error indicator is drawn from its exact conditional law. Avoids
// materializing 2^(nR) codewords.
TrialOutcome ensemble_trial(const DiscreteChannel& ch, const DelaySet& ds, const SimConfig& cfg,
                            const InnerParams& params, const RateSplit& rs,
                            const std::vector<DesignLaw>& laws, int trial) {
    const int n = cfg.n;
    const int nx1 = ch.x1_size(), nx2 = ch.x2_size(), ny = ch.y_size();
    const std::int64_t V = pow_checked(nx1, ds.window(), kMaxTensorStates);
    Rng rng = Rng::derive(cfg.seed, 0x20000 + static_cast<std::uint64_t>(trial));

    TrialOutcome out;
    const auto delays = ds.delays();
    out.d = cfg.delay.uniform ? delays[static_cast<size_t>(rng.uniform_int(
                                    static_cast<int>(delays.size())))]
                              : cfg.delay.fixed_d;
    const DesignLaw& law = laws[static_cast<size_t>(out.d + ds.d_min)];

    // True codewords and channel output.
    std::vector<int> x1(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) x1[static_cast<size_t>(i)] = rng.sample(params.p_x1.probs().data(), nx1);
    const auto windows = sliding_window_indices(x1, ds, nx1);
    std::vector<int> x2(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        x2[static_cast<size_t>(i)] =
            rng.sample(params.p_x2_given_v.row(windows[static_cast<size_t>(i)]), nx2);
    }
    std::vector<int> y(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int x1_sym = x1[static_cast<size_t>(mod_index(i - out.d, n))];
        y[static_cast<size_t>(i)] = rng.sample(ch.row(x1_sym, x2[static_cast<size_t>(i)]), ny);
    }

    // Stage 1: true typicality plus survival against m1 - 1 i.i.d. rivals.
    const auto shifted = sigma_shift(x1, out.d);
    const bool true1 = pair_typical(shifted, y, law, nx1, ny, cfg.eps);
    double log_survive1 = 0.0;
    if (rs.m1 > 1.5) {
        std::vector<std::int64_t> y_counts(static_cast<size_t>(ny), 0);
        for (int v : y) y_counts[static_cast<size_t>(v)]++;
        double log_p1 = 0.0;
        std::vector<double> cell_p(static_cast<size_t>(nx1));
        std::vector<std::pair<std::int64_t, std::int64_t>> box(static_cast<size_t>(nx1));
        for (int b = 0; b < ny && log_p1 != kNegInf; ++b) {
            for (int a = 0; a < nx1; ++a) {
                cell_p[static_cast<size_t>(a)] = params.p_x1[a];
                box[static_cast<size_t>(a)] =
                    count_bounds(n, law.pair[static_cast<size_t>(a) * ny + b], cfg.eps);
            }
            log_p1 += log_multinomial_box(static_cast<int>(y_counts[static_cast<size_t>(b)]),
                                          cell_p, box);
        }
        log_survive1 = log_no_hit(log_p1, rs.m1 - 1.0);
    }

    // Stage 2: same idea over (window, y) classes, rivals drawn from the
    // superposition rows of the true window sequence.
    const bool true2 = triple_typical(windows, x2, y, law, V, nx2, ny, cfg.eps);
    double log_survive2 = 0.0;
    if (rs.m2 > 1.5) {
        std::vector<std::int64_t> class_counts(static_cast<size_t>(V) * ny, 0);
        for (int i = 0; i < n; ++i) {
            class_counts[static_cast<size_t>(windows[static_cast<size_t>(i)]) * ny +
                         y[static_cast<size_t>(i)]]++;
        }
        double log_p2 = 0.0;
        std::vector<double> cell_p(static_cast<size_t>(nx2));
        std::vector<std::pair<std::int64_t, std::int64_t>> box(static_cast<size_t>(nx2));
        for (std::int64_t v = 0; v < V && log_p2 != kNegInf; ++v) {
            for (int yy = 0; yy < ny; ++yy) {
                const std::int64_t cnt = class_counts[static_cast<size_t>(v) * ny + yy];
                bool possible = true;
                for (int b = 0; b < nx2; ++b) {
                    cell_p[static_cast<size_t>(b)] = params.p_x2_given_v.at(static_cast<int>(v), b);
                    box[static_cast<size_t>(b)] = count_bounds(
                        n, law.triple[(static_cast<size_t>(v) * nx2 + b) * ny + yy], cfg.eps);
                    if (cnt == 0 && box[static_cast<size_t>(b)].first > 0) possible = false;
                }
                if (!possible) {
                    // A class this output never visits cannot supply the
                    // counts the box demands; no rival can be typical.
                    log_p2 = kNegInf;
                    break;
                }
                if (cnt == 0) continue;
                log_p2 += log_multinomial_box(static_cast<int>(cnt), cell_p, box);
                if (log_p2 == kNegInf) break;
            }
        }
        log_survive2 = log_no_hit(log_p2, rs.m2 - 1.0);
    }

    const double u1 = rng.uniform();
    const double u2 = rng.uniform();
    const bool survive1 = std::log(u1) < log_survive1;
    const bool survive2 = std::log(u2) < log_survive2;

    if (!true1) {
        out.error = true;
        out.atypical1 = true;
    } else if (!survive1) {
        out.error = true;
        out.conf1 = true;
    } else if (!true2) {
        out.error = true;
        out.atypical2 = true;
    } else if (!survive2) {
        out.error = true;
        out.conf2 = true;
    }
    return out;
}

TrialOutcome literal_trial(const DiscreteChannel& ch, const DelaySet& ds, const SimConfig& cfg,
                           const Codebooks& cb, int trial) {
    Rng rng = Rng::derive(cfg.seed, 0x20000 + static_cast<std::uint64_t>(trial));
    TrialOutcome out;
    const auto delays = ds.delays();
    out.d = cfg.delay.uniform ? delays[static_cast<size_t>(rng.uniform_int(
                                    static_cast<int>(delays.size())))]
                              : cfg.delay.fixed_d;
    const std::int64_t m1 = rng.uniform_int(static_cast<int>(cb.m1));
    const std::int64_t m2 = rng.uniform_int(static_cast<int>(cb.m2));
    bool uniq_fail = false;
    const auto y = transmit(ch, ds, cb, m1, m2, out.d, rng, cfg.model, &uniq_fail);
    if (uniq_fail) {
        out.error = true;
        out.uniq_fail = true;
        return out;
    }
    const DecodeResult dec = decode(ch, ds, cb, y, out.d, cfg.eps, cfg.model);
    if (!dec.ok || dec.m1 != m1 || dec.m2 != m2) {
        out.error = true;
        out.atypical1 = dec.step1_atypical;
        out.conf1 = dec.step1_ambiguous || (dec.ok && dec.m1 != m1);
        out.atypical2 = dec.step2_atypical;
        out.conf2 = dec.step2_ambiguous || (dec.ok && dec.m1 == m1 && dec.m2 != m2);
    }
    return out;
}

}  // namespace

SimReport run_experiment(const DiscreteChannel& ch, const DelaySet& ds, const SimConfig& cfg,
                         const InnerParams& params) {
    validate_config(ds, cfg);
    validate_inner_params(ch, ds, params);
    const RateSplit rs = plan_rates(ch, ds, cfg, params);

    SimReport rep;
    rep.r1a = rs.r1a;
    rep.r1b = rs.r1b;
    rep.m1_count = rs.m1;
    rep.m2_count = rs.m2;

    const double literal_symbols = rs.m1 * cfg.n + rs.m1 * rs.m2 * cfg.n;
    const double scan_cost = cfg.model == SimModel::acmac
                                 ? (rs.m1 + rs.m2) * static_cast<double>(cfg.n) * cfg.trials
                                 : rs.m1 * rs.m2 * static_cast<double>(cfg.n) * cfg.trials;
    const bool literal_fits = literal_symbols <= kMaxLiteralSymbols && scan_cost <= 2e8;

    std::vector<TrialOutcome> outcomes(static_cast<size_t>(cfg.trials));
    if (literal_fits) {
        rep.engine = "exhaustive";
        const Codebooks cb =
            generate_codebooks(ch, ds, params, cfg.n, static_cast<std::int64_t>(rs.m1),
                               static_cast<std::int64_t>(rs.m2), cfg.seed);
        run_partitioned(cfg.trials, cfg.threads, [&](int t) {
            outcomes[static_cast<size_t>(t)] = literal_trial(ch, ds, cfg, cb, t);
        });
    } else if (cfg.model == SimModel::accmac) {
        throw CapacityError(
            "codeword-cognition simulation requires materialized codebooks; reduce n or rates");
    } else {
        rep.engine = "ensemble";
        std::vector<DesignLaw> laws;
        for (int d : ds.delays()) laws.push_back(design_law(ch, ds, params, d));
        run_partitioned(cfg.trials, cfg.threads, [&](int t) {
            outcomes[static_cast<size_t>(t)] = ensemble_trial(ch, ds, cfg, params, rs, laws, t);
        });
    }
    finalize_report(ds, cfg, outcomes, &rep);
    return rep;
}

}  // namespace acmac
