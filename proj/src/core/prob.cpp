#include "prob.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace acmac {

double xlog2x(double p) {
    return p > 0.0 ? p * std::log2(p) : 0.0;
}

namespace {

void check_probs(const std::vector<double>& probs, double tol, const char* what) {
    if (probs.empty()) {
        throw ValidationError(std::string(what) + ": empty probability vector");
    }
    double sum = 0.0;
    for (double v : probs) {
        if (!(v >= 0.0)) {
            throw ValidationError(std::string(what) + ": negative or NaN entry");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > tol) {
        throw ValidationError(std::string(what) + ": entries sum to " + std::to_string(sum));
    }
}

}  // namespace

Pmf::Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
    check_probs(probs_, 1e-12, "Pmf");
}

Pmf Pmf::uniform(int n) {
    if (n <= 0) throw ValidationError("Pmf::uniform: need n >= 1");
    return Pmf(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
}

Pmf Pmf::point_mass(int n, int at) {
    if (n <= 0 || at < 0 || at >= n) throw ValidationError("Pmf::point_mass: index out of range");
    std::vector<double> v(static_cast<size_t>(n), 0.0);
    v[static_cast<size_t>(at)] = 1.0;
    return Pmf(std::move(v));
}

ConditionalPmf::ConditionalPmf(int rows, int cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (rows <= 0 || cols <= 0 ||
        values_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        throw ValidationError("ConditionalPmf: shape mismatch");
    }
    for (int r = 0; r < rows_; ++r) {
        std::vector<double> row_copy(row(r), row(r) + cols_);
        check_probs(row_copy, 1e-12, "ConditionalPmf row");
    }
}

ConditionalPmf ConditionalPmf::uniform(int rows, int cols) {
    return ConditionalPmf(rows, cols,
                          std::vector<double>(static_cast<size_t>(rows) * cols, 1.0 / cols));
}

ConditionalPmf ConditionalPmf::constant_row(int rows, const Pmf& p) {
    std::vector<double> v;
    v.reserve(static_cast<size_t>(rows) * p.size());
    for (int r = 0; r < rows; ++r) {
        v.insert(v.end(), p.probs().begin(), p.probs().end());
    }
    return ConditionalPmf(rows, p.size(), std::move(v));
}

DelaySet::DelaySet(int dmin, int dmax) : d_min(dmin), d_max(dmax) {
    if (dmin < 0 || dmax < 0) {
        throw ValidationError("DelaySet: d_min and d_max must be nonnegative");
    }
}

std::vector<int> DelaySet::delays() const {
    std::vector<int> ds;
    ds.reserve(static_cast<size_t>(window()));
    for (int d = -d_min; d <= d_max; ++d) ds.push_back(d);
    return ds;
}

JointTensor::JointTensor(std::vector<Axis> axes, std::vector<double> values, double norm_tol)
    : axes_(std::move(axes)), values_(std::move(values)) {
    if (axes_.empty()) throw ValidationError("JointTensor: no axes");
    std::int64_t total = 1;
    std::set<std::string> seen;
    for (const Axis& ax : axes_) {
        if (ax.size <= 0) throw ValidationError("JointTensor: axis '" + ax.tag + "' has size 0");
        if (!seen.insert(ax.tag).second) {
            throw ValidationError("JointTensor: duplicate axis tag '" + ax.tag + "'");
        }
        total *= ax.size;
        if (total > kMaxTensorStates) {
            throw CapacityError("JointTensor: " + std::to_string(total) +
                                " states exceeds cap of " + std::to_string(kMaxTensorStates));
        }
    }
    if (static_cast<std::int64_t>(values_.size()) != total) {
        throw ValidationError("JointTensor: value count does not match axis sizes");
    }
    double sum = 0.0;
    for (double v : values_) {
        if (!(v >= 0.0)) throw ValidationError("JointTensor: negative or NaN entry");
        sum += v;
    }
    if (std::abs(sum - 1.0) > norm_tol) {
        throw ValidationError("JointTensor: mass sums to " + std::to_string(sum));
    }
}

int JointTensor::axis_index(const std::string& tag) const {
    for (size_t i = 0; i < axes_.size(); ++i) {
        if (axes_[i].tag == tag) return static_cast<int>(i);
    }
    throw ValidationError("JointTensor: unknown axis tag '" + tag + "'");
}

double entropy(const Pmf& p, double log_base) {
    if (!(log_base > 0.0) || log_base == 1.0) {
        throw ValidationError("entropy: log base must be positive and != 1");
    }
    double h = 0.0;
    for (double v : p.probs()) h -= xlog2x(v);
    return h / std::log2(log_base);
}

namespace {

// Accumulates the marginal distribution over the axes selected by `keep`.
std::vector<double> marginalize(const JointTensor& joint, const std::vector<int>& keep) {
    const auto& axes = joint.axes();
    const int n_axes = static_cast<int>(axes.size());

    std::int64_t marg_size = 1;
    std::vector<std::int64_t> marg_mult(static_cast<size_t>(n_axes), 0);
    // Row-major multipliers over the kept axes, in their original order.
    for (int i : keep) marg_size *= axes[static_cast<size_t>(i)].size;
    {
        std::int64_t mult = 1;
        for (auto it = keep.rbegin(); it != keep.rend(); ++it) {
            marg_mult[static_cast<size_t>(*it)] = mult;
            mult *= axes[static_cast<size_t>(*it)].size;
        }
    }

    std::vector<double> out(static_cast<size_t>(marg_size), 0.0);
    std::vector<int> coord(static_cast<size_t>(n_axes), 0);
    std::int64_t marg_idx = 0;
    const auto& values = joint.values();
    for (double v : values) {
        out[static_cast<size_t>(marg_idx)] += v;
        // Odometer increment (last axis fastest), keeping marg_idx in sync.
        for (int ax = n_axes - 1; ax >= 0; --ax) {
            coord[static_cast<size_t>(ax)]++;
            marg_idx += marg_mult[static_cast<size_t>(ax)];
            if (coord[static_cast<size_t>(ax)] < axes[static_cast<size_t>(ax)].size) break;
            marg_idx -= marg_mult[static_cast<size_t>(ax)] * axes[static_cast<size_t>(ax)].size;
            coord[static_cast<size_t>(ax)] = 0;
        }
    }
    return out;
}

double entropy_bits(const std::vector<double>& dist) {
    double h = 0.0;
    for (double v : dist) h -= xlog2x(v);
    return h;
}

std::vector<int> resolve_axes(const JointTensor& joint, const std::vector<std::string>& tags) {
    std::vector<int> idx;
    idx.reserve(tags.size());
    for (const auto& t : tags) idx.push_back(joint.axis_index(t));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
        throw ValidationError("axis set contains a duplicate tag");
    }
    return idx;
}

std::vector<int> merge_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw ValidationError("axis sets overlap");
    }
    return out;
}

}  // namespace

double marginal_entropy(const JointTensor& joint, const std::vector<std::string>& tags) {
    return entropy_bits(marginalize(joint, resolve_axes(joint, tags)));
}

double mutual_information(const JointTensor& joint, const std::vector<std::string>& axes_a,
                          const std::vector<std::string>& axes_b) {
    auto a = resolve_axes(joint, axes_a);
    auto b = resolve_axes(joint, axes_b);
    auto ab = merge_disjoint(a, b);
    double mi = entropy_bits(marginalize(joint, a)) + entropy_bits(marginalize(joint, b)) -
                entropy_bits(marginalize(joint, ab));
    return std::max(0.0, mi);
}

double conditional_mutual_information(const JointTensor& joint,
                                      const std::vector<std::string>& axes_a,
                                      const std::vector<std::string>& axes_b,
                                      const std::vector<std::string>& axes_c) {
    auto a = resolve_axes(joint, axes_a);
    auto b = resolve_axes(joint, axes_b);
    auto c = resolve_axes(joint, axes_c);
    auto ac = merge_disjoint(a, c);
    auto bc = merge_disjoint(b, c);
    auto ab = merge_disjoint(a, b);
    auto abc = merge_disjoint(ab, c);
    double cmi = entropy_bits(marginalize(joint, ac)) + entropy_bits(marginalize(joint, bc)) -
                 entropy_bits(marginalize(joint, abc)) - entropy_bits(marginalize(joint, c));
    return std::max(0.0, cmi);
}

}  // namespace acmac
