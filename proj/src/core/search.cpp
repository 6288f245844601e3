#include "search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "rng.hpp"

namespace acmac {

void SearchConfig::validate() const {
    if (restarts < 0 || ascent_steps < 0) {
        throw ValidationError("SearchConfig: budgets must be nonnegative");
    }
    if (!(step_size > 0.0)) throw ValidationError("SearchConfig: step_size must be positive");
    if (n_dirs < 3) throw ValidationError("SearchConfig: n_dirs must be at least 3");
    if (threads < 0) throw ValidationError("SearchConfig: threads must be nonnegative");
}

namespace {

constexpr int kMaxAscentDirections = 9;
constexpr int kFiniteDiffMaxDim = 24;

struct Direction {
    double w1, w2;
};

// Ascent runs on a decimated subset of the n_dirs angular grid; the full
// grid stays available for boundary reports.
std::vector<Direction> ascent_directions(int n_dirs) {
    const int count = std::min(kMaxAscentDirections, n_dirs);
    std::vector<Direction> dirs;
    const double half_pi = 2.0 * std::atan(1.0);
    for (int k = 0; k < count; ++k) {
        const int grid_index =
            count == 1 ? 0 : static_cast<int>(std::round(static_cast<double>(k) *
                                                         (n_dirs - 1) / (count - 1)));
        const double theta = half_pi * grid_index / (n_dirs - 1);
        dirs.push_back({std::cos(theta), std::sin(theta)});
    }
    return dirs;
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

std::vector<double> softmax(const double* logits, int n) {
    double mx = logits[0];
    for (int i = 1; i < n; ++i) mx = std::max(mx, logits[i]);
    std::vector<double> out(static_cast<size_t>(n));
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        out[static_cast<size_t>(i)] = std::exp(logits[i] - mx);
        sum += out[static_cast<size_t>(i)];
    }
    for (double& v : out) v /= sum;
    return out;
}

// Gradient ascent over a logit vector; finite differences for small
// dimensions, simultaneous perturbation above kFiniteDiffMaxDim. Returns the
// accepted iterates.
std::vector<std::vector<double>> ascend(int dim,
                                        const std::function<double(const std::vector<double>&)>& f,
                                        std::vector<double> theta, int steps, double step_size,
                                        Rng rng) {
    std::vector<std::vector<double>> accepted;
    if (steps <= 0) return accepted;
    double best = f(theta);
    double step = step_size;
    const bool use_spsa = dim > kFiniteDiffMaxDim;
    std::vector<double> grad(static_cast<size_t>(dim));
    std::vector<double> probe;
    for (int it = 0; it < steps; ++it) {
        if (use_spsa) {
            // Simultaneous perturbation: two probes regardless of dimension.
            const double c = 0.05;
            std::vector<double> delta(static_cast<size_t>(dim));
            for (double& v : delta) v = (rng.next_u64() & 1) ? 1.0 : -1.0;
            probe = theta;
            for (int i = 0; i < dim; ++i) probe[static_cast<size_t>(i)] += c * delta[static_cast<size_t>(i)];
            const double fp = f(probe);
            probe = theta;
            for (int i = 0; i < dim; ++i) probe[static_cast<size_t>(i)] -= c * delta[static_cast<size_t>(i)];
            const double fm = f(probe);
            const double scale = (fp - fm) / (2.0 * c);
            for (int i = 0; i < dim; ++i) grad[static_cast<size_t>(i)] = scale * delta[static_cast<size_t>(i)];
        } else {
            const double h = 1e-3;
            for (int i = 0; i < dim; ++i) {
                probe = theta;
                probe[static_cast<size_t>(i)] += h;
                grad[static_cast<size_t>(i)] = (f(probe) - best) / h;
            }
        }
        double norm = 0.0;
        for (double g : grad) norm += g * g;
        norm = std::sqrt(norm);
        if (norm < 1e-14) break;

        bool moved = false;
        double trial_step = step;
        for (int attempt = 0; attempt < 3; ++attempt) {
            probe = theta;
            for (int i = 0; i < dim; ++i) {
                probe[static_cast<size_t>(i)] += trial_step * grad[static_cast<size_t>(i)] / norm;
            }
            const double val = f(probe);
            if (val >= best - 1e-12) {
                theta = std::move(probe);
                best = std::max(best, val);
                accepted.push_back(theta);
                moved = true;
                break;
            }
            trial_step *= 0.5;
        }
        if (!moved) break;
    }
    return accepted;
}

int adaptive_lattice_total(int cells_a, int cells_b, int budget) {
    for (int total : {4, 2, 1}) {
        auto count = [total](int cells) {
            // C(total + cells - 1, cells - 1)
            double c = 1.0;
            for (int i = 1; i < cells; ++i) c = c * (total + i) / i;
            return c;
        };
        if (count(cells_a) * count(cells_b) <= budget) return total;
    }
    return 1;
}

// ---- inner search ------------------------------------------------------

struct InnerSpace {
    int nx1, nx2;
    std::int64_t v_rows;
    int dim() const { return static_cast<int>(nx1 + v_rows * nx2); }

    InnerParams decode(const std::vector<double>& theta) const {
        std::vector<double> px1 = softmax(theta.data(), nx1);
        std::vector<double> rows(static_cast<size_t>(v_rows) * nx2);
        for (std::int64_t r = 0; r < v_rows; ++r) {
            auto row = softmax(theta.data() + nx1 + r * nx2, nx2);
            std::copy(row.begin(), row.end(), rows.begin() + static_cast<size_t>(r) * nx2);
        }
        return InnerParams{Pmf(std::move(px1)),
                           ConditionalPmf(static_cast<int>(v_rows), nx2, std::move(rows))};
    }

    std::vector<double> encode(const InnerParams& p) const {
        std::vector<double> theta;
        theta.reserve(static_cast<size_t>(dim()));
        auto push = [&theta](const double* v, int n) {
            for (int i = 0; i < n; ++i) theta.push_back(std::log(std::max(v[i], 1e-9)));
        };
        push(p.p_x1.probs().data(), nx1);
        for (std::int64_t r = 0; r < v_rows; ++r) push(p.p_x2_given_v.row(static_cast<int>(r)), nx2);
        return theta;
    }
};

struct OuterSpace {
    int nx1, nx2, D;
    std::int64_t vt_size;
    std::vector<std::int64_t> causal_rows;  // per block position

    int dim() const {
        std::int64_t d = vt_size;
        for (auto r : causal_rows) d += r * nx2;
        return static_cast<int>(d);
    }

    OuterParams decode(const std::vector<double>& theta) const {
        OuterParams p;
        p.p_vtilde = Pmf(softmax(theta.data(), static_cast<int>(vt_size)));
        const double* base = theta.data() + vt_size;
        for (int i = 0; i < D; ++i) {
            const std::int64_t rows = causal_rows[static_cast<size_t>(i)];
            std::vector<double> vals(static_cast<size_t>(rows) * nx2);
            for (std::int64_t r = 0; r < rows; ++r) {
                auto row = softmax(base + r * nx2, nx2);
                std::copy(row.begin(), row.end(), vals.begin() + static_cast<size_t>(r) * nx2);
            }
            p.p_x2_causal.push_back(ConditionalPmf(static_cast<int>(rows), nx2, std::move(vals)));
            base += rows * nx2;
        }
        return p;
    }

    std::vector<double> encode(const OuterParams& p) const {
        std::vector<double> theta;
        theta.reserve(static_cast<size_t>(dim()));
        auto push = [&theta](const double* v, int n) {
            for (int i = 0; i < n; ++i) theta.push_back(std::log(std::max(v[i], 1e-9)));
        };
        push(p.p_vtilde.probs().data(), static_cast<int>(vt_size));
        for (int i = 0; i < D; ++i) {
            const auto& c = p.p_x2_causal[static_cast<size_t>(i)];
            for (int r = 0; r < c.rows(); ++r) push(c.row(r), nx2);
        }
        return theta;
    }
};

template <typename Entry>
void build_hulls(const std::vector<Entry>& trace, RegionHull* acmac_hull,
                 RegionHull* accmac_hull) {
    std::vector<BoundPentagon> plain, capped;
    plain.reserve(trace.size());
    capped.reserve(trace.size());
    for (const auto& e : trace) {
        plain.push_back(e.acmac.pentagon);
        capped.push_back(e.accmac.pentagon);
    }
    *acmac_hull = plain.empty() ? RegionHull() : union_hull(plain);
    *accmac_hull = capped.empty() ? RegionHull() : union_hull(capped);
}

}  // namespace

std::vector<std::vector<double>> simplex_lattice(int cells, int total) {
    std::vector<std::vector<double>> out;
    std::vector<int> counts(static_cast<size_t>(cells), 0);
    std::function<void(int, int)> rec = [&](int cell, int remaining) {
        if (cell == cells - 1) {
            counts[static_cast<size_t>(cell)] = remaining;
            std::vector<double> p(static_cast<size_t>(cells));
            for (int i = 0; i < cells; ++i) {
                p[static_cast<size_t>(i)] = static_cast<double>(counts[static_cast<size_t>(i)]) / total;
            }
            out.push_back(std::move(p));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            counts[static_cast<size_t>(cell)] = k;
            rec(cell + 1, remaining - k);
        }
    };
    rec(0, total);
    return out;
}

InnerSearchResult search_inner(const DiscreteChannel& ch, const DelaySet& ds,
                               const SearchConfig& cfg) {
    cfg.validate();
    const InnerSpace space{ch.x1_size(), ch.x2_size(),
                           pow_checked(ch.x1_size(), ds.window(), kMaxTensorStates)};

    auto evaluate = [&](const InnerParams& p) {
        InnerTraceEntry e;
        e.params = p;
        e.acmac = inner_point(ch, ds, p);
        const double h1 = entropy(p.p_x1);
        e.accmac = e.acmac;
        for (auto& caps : e.accmac.per_delay) caps.r1_cap = h1;
        e.accmac.pentagon = BoundPentagon(e.acmac.pentagon.a, e.acmac.pentagon.b, h1);
        return e;
    };

    // Stage 1: deterministic seeds. Product laws on a coarse simplex lattice
    // catch the polytope corners exactly (the X2 row is shared across
    // windows), plus the uniform point and random restarts.
    std::vector<InnerParams> stage1;
    stage1.push_back(InnerParams::uniform(ch, ds));
    const int lattice_total = adaptive_lattice_total(ch.x1_size(), ch.x2_size(), 4096);
    for (const auto& q : simplex_lattice(ch.x1_size(), lattice_total)) {
        for (const auto& r : simplex_lattice(ch.x2_size(), lattice_total)) {
            stage1.push_back(InnerParams{
                Pmf(q), ConditionalPmf::constant_row(static_cast<int>(space.v_rows), Pmf(r))});
        }
    }
    for (int k = 0; k < cfg.restarts; ++k) {
        Rng rng = Rng::derive(cfg.seed, 1000 + static_cast<std::uint64_t>(k));
        std::vector<double> rows(static_cast<size_t>(space.v_rows) * ch.x2_size());
        for (std::int64_t r = 0; r < space.v_rows; ++r) {
            auto row = rng.simplex(ch.x2_size());
            std::copy(row.begin(), row.end(), rows.begin() + static_cast<size_t>(r) * ch.x2_size());
        }
        stage1.push_back(InnerParams{
            Pmf(rng.simplex(ch.x1_size())),
            ConditionalPmf(static_cast<int>(space.v_rows), ch.x2_size(), std::move(rows))});
    }

    std::vector<InnerTraceEntry> trace(stage1.size());
    run_partitioned(static_cast<int>(stage1.size()), cfg.threads,
                    [&](int i) { trace[static_cast<size_t>(i)] = evaluate(stage1[static_cast<size_t>(i)]); });

    // Stage 2: ascent per direction and model, starting from the best stage-1
    // point for that objective.
    const auto dirs = ascent_directions(cfg.n_dirs);
    struct Task {
        Direction dir;
        bool capped;
    };
    std::vector<Task> tasks;
    for (const auto& d : dirs) {
        tasks.push_back({d, false});
        tasks.push_back({d, true});
    }
    std::vector<std::vector<InnerTraceEntry>> task_out(tasks.size());
    run_partitioned(static_cast<int>(tasks.size()), cfg.threads, [&](int t) {
        const Task& task = tasks[static_cast<size_t>(t)];
        auto objective_of = [&](const InnerTraceEntry& e) {
            const BoundPentagon& p = task.capped ? e.accmac.pentagon : e.acmac.pentagon;
            return support(p, task.dir.w1, task.dir.w2);
        };
        size_t best_i = 0;
        double best_v = objective_of(trace[0]);
        for (size_t i = 1; i < trace.size(); ++i) {
            const double v = objective_of(trace[i]);
            if (v > best_v) {
                best_v = v;
                best_i = i;
            }
        }
        auto f = [&](const std::vector<double>& theta) {
            return objective_of(evaluate(space.decode(theta)));
        };
        auto iterates = ascend(space.dim(), f, space.encode(trace[best_i].params),
                               cfg.ascent_steps, cfg.step_size,
                               Rng::derive(cfg.seed, 2000 + static_cast<std::uint64_t>(t)));
        for (auto& th : iterates) {
            task_out[static_cast<size_t>(t)].push_back(evaluate(space.decode(th)));
        }
    });
    for (auto& v : task_out) {
        trace.insert(trace.end(), std::make_move_iterator(v.begin()),
                     std::make_move_iterator(v.end()));
    }

    InnerSearchResult res;
    res.trace = std::move(trace);
    build_hulls(res.trace, &res.acmac_hull, &res.accmac_hull);
    return res;
}

OuterSearchResult search_outer(const DiscreteChannel& ch, const DelaySet& ds,
                               const SearchConfig& cfg) {
    cfg.validate();
    const int D = ds.window();
    const std::int64_t vt_size = pow_checked(ch.x1_size(), 2 * D - 1, kMaxTensorStates);
    OuterSpace space;
    space.nx1 = ch.x1_size();
    space.nx2 = ch.x2_size();
    space.D = D;
    space.vt_size = vt_size;
    for (int i = 1; i <= D; ++i) {
        std::int64_t rows = vt_size;
        for (int j = 1; j < i; ++j) rows *= ch.x2_size();
        space.causal_rows.push_back(rows);
    }

    auto evaluate = [&](const OuterParams& p) {
        OuterTraceEntry e;
        e.params = p;
        e.acmac = outer_point(ch, ds, p);
        e.accmac = accmac_outer_point(ch, ds, p);
        return e;
    };

    // Seeding contract: the blocked product extension of every inner trace
    // entry is evaluated here, which guarantees the reported outer hull
    // contains the reported inner hull.
    const InnerSearchResult inner = search_inner(ch, ds, cfg);
    std::vector<OuterParams> stage1;
    stage1.reserve(inner.trace.size() + 16);
    for (const auto& e : inner.trace) stage1.push_back(extend_inner_params(ch, ds, e.params));
    stage1.push_back(OuterParams::uniform(ch, ds));
    if (vt_size <= 64) {
        for (std::int64_t v = 0; v < vt_size; ++v) {
            OuterParams p = OuterParams::uniform(ch, ds);
            p.p_vtilde = Pmf::point_mass(static_cast<int>(vt_size), static_cast<int>(v));
            stage1.push_back(std::move(p));
        }
    }
    for (int k = 0; k < cfg.restarts; ++k) {
        Rng rng = Rng::derive(cfg.seed, 3000 + static_cast<std::uint64_t>(k));
        OuterParams p;
        p.p_vtilde = Pmf(rng.simplex(static_cast<int>(vt_size)));
        for (int i = 0; i < D; ++i) {
            const std::int64_t rows = space.causal_rows[static_cast<size_t>(i)];
            std::vector<double> vals(static_cast<size_t>(rows) * ch.x2_size());
            for (std::int64_t r = 0; r < rows; ++r) {
                auto row = rng.simplex(ch.x2_size());
                std::copy(row.begin(), row.end(),
                          vals.begin() + static_cast<size_t>(r) * ch.x2_size());
            }
            p.p_x2_causal.push_back(
                ConditionalPmf(static_cast<int>(rows), ch.x2_size(), std::move(vals)));
        }
        stage1.push_back(std::move(p));
    }

    std::vector<OuterTraceEntry> trace(stage1.size());
    run_partitioned(static_cast<int>(stage1.size()), cfg.threads,
                    [&](int i) { trace[static_cast<size_t>(i)] = evaluate(stage1[static_cast<size_t>(i)]); });

    const auto dirs = ascent_directions(cfg.n_dirs);
    struct Task {
        Direction dir;
        bool capped;
    };
    std::vector<Task> tasks;
    for (const auto& d : dirs) {
        tasks.push_back({d, false});
        tasks.push_back({d, true});
    }
    std::vector<std::vector<OuterTraceEntry>> task_out(tasks.size());
    run_partitioned(static_cast<int>(tasks.size()), cfg.threads, [&](int t) {
        const Task& task = tasks[static_cast<size_t>(t)];
        auto objective_of = [&](const OuterTraceEntry& e) {
            const BoundPentagon& p = task.capped ? e.accmac.pentagon : e.acmac.pentagon;
            return support(p, task.dir.w1, task.dir.w2);
        };
        size_t best_i = 0;
        double best_v = objective_of(trace[0]);
        for (size_t i = 1; i < trace.size(); ++i) {
            const double v = objective_of(trace[i]);
            if (v > best_v) {
                best_v = v;
                best_i = i;
            }
        }
        auto f = [&](const std::vector<double>& theta) {
            return objective_of(evaluate(space.decode(theta)));
        };
        auto iterates = ascend(space.dim(), f, space.encode(trace[best_i].params),
                               cfg.ascent_steps, cfg.step_size,
                               Rng::derive(cfg.seed, 4000 + static_cast<std::uint64_t>(t)));
        for (auto& th : iterates) {
            task_out[static_cast<size_t>(t)].push_back(evaluate(space.decode(th)));
        }
    });
    for (auto& v : task_out) {
        trace.insert(trace.end(), std::make_move_iterator(v.begin()),
                     std::make_move_iterator(v.end()));
    }

    OuterSearchResult res;
    res.trace = std::move(trace);
    build_hulls(res.trace, &res.acmac_hull, &res.accmac_hull);
    return res;
}

RegionHull inner_region(const DiscreteChannel& ch, const DelaySet& ds, const SearchConfig& cfg) {
    return search_inner(ch, ds, cfg).acmac_hull;
}

RegionHull accmac_inner_region(const DiscreteChannel& ch, const DelaySet& ds,
                               const SearchConfig& cfg) {
    return search_inner(ch, ds, cfg).accmac_hull;
}

RegionHull outer_region(const DiscreteChannel& ch, const DelaySet& ds, const SearchConfig& cfg) {
    return search_outer(ch, ds, cfg).acmac_hull;
}

RegionHull accmac_outer_region(const DiscreteChannel& ch, const DelaySet& ds,
                               const SearchConfig& cfg) {
    return search_outer(ch, ds, cfg).accmac_hull;
}

}  // namespace acmac
