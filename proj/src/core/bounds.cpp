#include "bounds.hpp"

#include <cmath>
#include <string>

namespace acmac {

std::int64_t pow_checked(int radix, int exponent, std::int64_t cap) {
    std::int64_t v = 1;
    for (int i = 0; i < exponent; ++i) {
        v *= radix;
        if (v > cap) {
            throw CapacityError("enumeration of " + std::to_string(radix) + "^" +
                                std::to_string(exponent) + " states exceeds cap " +
                                std::to_string(cap));
        }
    }
    return v;
}

namespace {

std::int64_t ipow(int radix, int exponent) {
    std::int64_t v = 1;
    for (int i = 0; i < exponent; ++i) v *= radix;
    return v;
}

int digit_of(std::int64_t index, int pos_from_oldest, int radix, int length) {
    // pos_from_oldest is 1-based; oldest symbol is the most significant digit.
    const std::int64_t div = ipow(radix, length - pos_from_oldest);
    return static_cast<int>((index / div) % radix);
}

int slot_for_delay(const DelaySet& ds, int d) {
    return ds.d_max - d + 1;  // 1-based from the oldest window symbol
}

void check_delay(const DelaySet& ds, int d) {
    if (d < -ds.d_min || d > ds.d_max) {
        throw ValidationError("delay " + std::to_string(d) + " outside the delay set");
    }
}

}  // namespace

int window_slot_symbol(int window_index, int slot, int x1_size, int D) {
    return digit_of(window_index, slot, x1_size, D);
}

int vtilde_window(int vtilde_index, int window_pos, int x1_size, int D) {
    const int L = 2 * D - 1;
    int idx = 0;
    for (int j = 0; j < D; ++j) {
        idx = idx * x1_size + digit_of(vtilde_index, window_pos + j, x1_size, L);
    }
    return idx;
}

InnerParams InnerParams::uniform(const DiscreteChannel& ch, const DelaySet& ds) {
    const auto rows = pow_checked(ch.x1_size(), ds.window(), kMaxTensorStates);
    return InnerParams{Pmf::uniform(ch.x1_size()),
                       ConditionalPmf::uniform(static_cast<int>(rows), ch.x2_size())};
}

OuterParams OuterParams::uniform(const DiscreteChannel& ch, const DelaySet& ds) {
    const int D = ds.window();
    const auto vt_size = pow_checked(ch.x1_size(), 2 * D - 1, kMaxTensorStates);
    OuterParams p;
    p.p_vtilde = Pmf::uniform(static_cast<int>(vt_size));
    for (int i = 1; i <= D; ++i) {
        const auto rows = vt_size * ipow(ch.x2_size(), i - 1);
        if (rows > kMaxTensorStates) throw CapacityError("causal conditional too large");
        p.p_x2_causal.push_back(ConditionalPmf::uniform(static_cast<int>(rows), ch.x2_size()));
    }
    return p;
}

void validate_inner_params(const DiscreteChannel& ch, const DelaySet& ds, const InnerParams& p) {
    if (p.p_x1.size() != ch.x1_size()) {
        throw ValidationError("InnerParams: p_x1 size does not match |X1|");
    }
    const auto rows = pow_checked(ch.x1_size(), ds.window(), kMaxTensorStates);
    if (p.p_x2_given_v.rows() != rows || p.p_x2_given_v.cols() != ch.x2_size()) {
        throw ValidationError("InnerParams: conditional must have |X1|^D rows and |X2| columns");
    }
}

void validate_outer_params(const DiscreteChannel& ch, const DelaySet& ds, const OuterParams& p) {
    const int D = ds.window();
    const auto vt_size = pow_checked(ch.x1_size(), 2 * D - 1, kMaxTensorStates);
    if (p.p_vtilde.size() != vt_size) {
        throw ValidationError("OuterParams: p_vtilde must live on X1^(2D-1)");
    }
    if (static_cast<int>(p.p_x2_causal.size()) != D) {
        throw ValidationError("OuterParams: need one causal conditional per block position");
    }
    for (int i = 1; i <= D; ++i) {
        const auto& c = p.p_x2_causal[static_cast<size_t>(i - 1)];
        if (c.rows() != vt_size * ipow(ch.x2_size(), i - 1) || c.cols() != ch.x2_size()) {
            throw ValidationError("OuterParams: causal conditional " + std::to_string(i) +
                                  " has wrong shape");
        }
    }
}

JointTensor joint_law_inner(const DiscreteChannel& ch, const DelaySet& ds, int d,
                            const InnerParams& params) {
    check_delay(ds, d);
    validate_inner_params(ch, ds, params);
    const int D = ds.window();
    const int nx1 = ch.x1_size(), nx2 = ch.x2_size(), ny = ch.y_size();
    const auto V = pow_checked(nx1, D, kMaxTensorStates);
    const int slot = slot_for_delay(ds, d);

    std::vector<double> values(static_cast<size_t>(V) * nx1 * nx2 * ny, 0.0);
    for (std::int64_t v = 0; v < V; ++v) {
        double pv = 1.0;
        for (int j = 1; j <= D; ++j) pv *= params.p_x1[digit_of(v, j, nx1, D)];
        if (pv == 0.0) continue;
        const int x1 = digit_of(v, slot, nx1, D);
        for (int x2 = 0; x2 < nx2; ++x2) {
            const double p2 = params.p_x2_given_v.at(static_cast<int>(v), x2);
            if (p2 == 0.0) continue;
            const size_t base = ((static_cast<size_t>(v) * nx1 + x1) * nx2 + x2) * ny;
            for (int y = 0; y < ny; ++y) {
                values[base + y] = pv * p2 * ch.p(x1, x2, y);
            }
        }
    }
    return JointTensor({{"vbar", static_cast<int>(V)}, {"x1", nx1}, {"x2", nx2}, {"y", ny}},
                       std::move(values));
}

JointTensor joint_law_outer(const DiscreteChannel& ch, const DelaySet& ds, int d,
                            const OuterParams& params) {
    check_delay(ds, d);
    validate_outer_params(ch, ds, params);
    const int D = ds.window();
    const int nx1 = ch.x1_size(), nx2 = ch.x2_size(), ny = ch.y_size();
    const std::int64_t vt_size = ipow(nx1, 2 * D - 1);
    const std::int64_t nx2_blk = ipow(nx2, D);
    const std::int64_t ny_blk = ipow(ny, D);

    // The documented enumeration cap counts the free variables only (x1bar is
    // deterministic given vtilde).
    const std::int64_t product = vt_size * nx2_blk * ny_blk;
    if (product > kMaxTensorStates) {
        throw CapacityError("blocked outer law needs " + std::to_string(product) +
                            " states, above cap " + std::to_string(kMaxTensorStates));
    }
    const std::int64_t x1_blk = ipow(nx1, D);

    std::vector<double> values(
        static_cast<size_t>(vt_size) * static_cast<size_t>(x1_blk) *
            static_cast<size_t>(nx2_blk) * static_cast<size_t>(ny_blk),
        0.0);

    std::vector<int> x1_digits(static_cast<size_t>(D));
    std::vector<int> x2_digits(static_cast<size_t>(D));
    for (std::int64_t vt = 0; vt < vt_size; ++vt) {
        const double pv = params.p_vtilde[static_cast<int>(vt)];
        if (pv == 0.0) continue;
        std::int64_t x1bar = 0;
        for (int i = 1; i <= D; ++i) {
            x1_digits[static_cast<size_t>(i - 1)] =
                digit_of(vt, i + ds.d_max - d, nx1, 2 * D - 1);
            x1bar = x1bar * nx1 + x1_digits[static_cast<size_t>(i - 1)];
        }
        for (std::int64_t x2bar = 0; x2bar < nx2_blk; ++x2bar) {
            double w2 = 1.0;
            std::int64_t prefix = 0;
            for (int i = 1; i <= D; ++i) {
                const int x2i = digit_of(x2bar, i, nx2, D);
                x2_digits[static_cast<size_t>(i - 1)] = x2i;
                const std::int64_t row = vt * ipow(nx2, i - 1) + prefix;
                w2 *= params.p_x2_causal[static_cast<size_t>(i - 1)].at(static_cast<int>(row),
                                                                        x2i);
                prefix = prefix * nx2 + x2i;
            }
            if (w2 == 0.0) continue;
            const size_t base =
                ((static_cast<size_t>(vt) * x1_blk + x1bar) * nx2_blk + x2bar) * ny_blk;
            for (std::int64_t ybar = 0; ybar < ny_blk; ++ybar) {
                double wy = 1.0;
                for (int i = 1; i <= D; ++i) {
                    wy *= ch.p(x1_digits[static_cast<size_t>(i - 1)],
                               x2_digits[static_cast<size_t>(i - 1)],
                               digit_of(ybar, i, ny, D));
                    if (wy == 0.0) break;
                }
                if (wy != 0.0) values[base + static_cast<size_t>(ybar)] = pv * w2 * wy;
            }
        }
    }
    return JointTensor({{"vtilde", static_cast<int>(vt_size)},
                        {"x1bar", static_cast<int>(x1_blk)},
                        {"x2bar", static_cast<int>(nx2_blk)},
                        {"ybar", static_cast<int>(ny_blk)}},
                       std::move(values));
}

BoundResult inner_point(const DiscreteChannel& ch, const DelaySet& ds, const InnerParams& params) {
    BoundResult res;
    std::vector<BoundPentagon> per_d;
    for (int d : ds.delays()) {
        const JointTensor law = joint_law_inner(ch, ds, d, params);
        const double i1 = mutual_information(law, {"x1"}, {"y"});
        const double i2 = conditional_mutual_information(law, {"x2"}, {"y"}, {"vbar"});
        res.per_delay.push_back({d, i1 + i2, i2, kNoR1Cap});
        per_d.emplace_back(i1 + i2, i2);
    }
    res.pentagon = intersect_pentagons(per_d);
    return res;
}

namespace {

// Blocked mutual informations without materializing the x1 block axis (it is
// a deterministic coordinate selection from vtilde, so the documented
// enumeration cap deliberately excludes it). Uses
//   I(X1bar,X2bar;Ybar) = H(Ybar) - H(Ybar|X1bar,X2bar)
//   I(X2bar;Ybar|Vtilde) = H(Vtilde,Ybar) - H(Vtilde) - H(Ybar|X1bar,X2bar)
// where the conditional entropy term is the same in both lines because the
// output block is memoryless given the input blocks.
struct BlockedInfo {
    double sum_mi;
    double r2_mi;
};

BlockedInfo outer_information(const DiscreteChannel& ch, const DelaySet& ds, int d,
                              const OuterParams& params) {
    const int D = ds.window();
    const int nx1 = ch.x1_size(), nx2 = ch.x2_size(), ny = ch.y_size();
    const std::int64_t vt_size = ipow(nx1, 2 * D - 1);
    const std::int64_t nx2_blk = ipow(nx2, D);
    const std::int64_t ny_blk = ipow(ny, D);
    const std::int64_t product = vt_size * nx2_blk * ny_blk;
    if (product > kMaxTensorStates) {
        throw CapacityError("blocked outer law needs " + std::to_string(product) +
                            " states, above cap " + std::to_string(kMaxTensorStates));
    }

    std::vector<double> row_h(static_cast<size_t>(nx1) * nx2, 0.0);
    for (int a = 0; a < nx1; ++a) {
        for (int b = 0; b < nx2; ++b) {
            double h = 0.0;
            for (int y = 0; y < ny; ++y) h -= xlog2x(ch.p(a, b, y));
            row_h[static_cast<size_t>(a) * nx2 + b] = h;
        }
    }

    std::vector<double> acc_y(static_cast<size_t>(ny_blk), 0.0);
    std::vector<double> acc_vy(static_cast<size_t>(vt_size * ny_blk), 0.0);
    double h_y_given_inputs = 0.0;
    std::vector<double> ybuf(static_cast<size_t>(ny_blk));
    std::vector<double> ynext(static_cast<size_t>(ny_blk));
    std::vector<int> x1_digits(static_cast<size_t>(D));

    for (std::int64_t vt = 0; vt < vt_size; ++vt) {
        const double pv = params.p_vtilde[static_cast<int>(vt)];
        if (pv == 0.0) continue;
        for (int i = 1; i <= D; ++i) {
            x1_digits[static_cast<size_t>(i - 1)] =
                digit_of(vt, i + ds.d_max - d, nx1, 2 * D - 1);
        }
        double* vy = acc_vy.data() + static_cast<size_t>(vt) * ny_blk;
        for (std::int64_t x2bar = 0; x2bar < nx2_blk; ++x2bar) {
            double w2 = 1.0;
            std::int64_t prefix = 0;
            double h_rows = 0.0;
            ybuf[0] = 1.0;
            std::int64_t cur = 1;
            for (int i = 1; i <= D; ++i) {
                const int x2i = digit_of(x2bar, i, nx2, D);
                const std::int64_t row_idx = vt * ipow(nx2, i - 1) + prefix;
                w2 *= params.p_x2_causal[static_cast<size_t>(i - 1)].at(
                    static_cast<int>(row_idx), x2i);
                if (w2 == 0.0) break;
                prefix = prefix * nx2 + x2i;
                const int x1i = x1_digits[static_cast<size_t>(i - 1)];
                const double* row = ch.row(x1i, x2i);
                h_rows += row_h[static_cast<size_t>(x1i) * nx2 + x2i];
                for (std::int64_t k = 0; k < cur; ++k) {
                    const double base = ybuf[static_cast<size_t>(k)];
                    for (int y = 0; y < ny; ++y) {
                        ynext[static_cast<size_t>(k * ny + y)] = base * row[y];
                    }
                }
                cur *= ny;
                std::swap(ybuf, ynext);
            }
            if (w2 == 0.0) continue;
            const double w = pv * w2;
            h_y_given_inputs += w * h_rows;
            for (std::int64_t k = 0; k < ny_blk; ++k) {
                const double mass = w * ybuf[static_cast<size_t>(k)];
                acc_y[static_cast<size_t>(k)] += mass;
                vy[k] += mass;
            }
        }
    }

    double h_y = 0.0;
    for (double v : acc_y) h_y -= xlog2x(v);
    double h_vy = 0.0;
    for (double v : acc_vy) h_vy -= xlog2x(v);
    double h_v = 0.0;
    for (double v : params.p_vtilde.probs()) h_v -= xlog2x(v);

    BlockedInfo info;
    info.sum_mi = std::max(0.0, h_y - h_y_given_inputs);
    info.r2_mi = std::max(0.0, (h_vy - h_v) - h_y_given_inputs);
    return info;
}

}  // namespace

BoundResult outer_point(const DiscreteChannel& ch, const DelaySet& ds, const OuterParams& params) {
    validate_outer_params(ch, ds, params);
    BoundResult res;
    const double D = ds.window();
    std::vector<BoundPentagon> per_d;
    for (int d : ds.delays()) {
        const BlockedInfo info = outer_information(ch, ds, d, params);
        const double sum = info.sum_mi / D;
        const double r2 = info.r2_mi / D;
        res.per_delay.push_back({d, sum, r2, kNoR1Cap});
        per_d.emplace_back(sum, r2);
    }
    res.pentagon = intersect_pentagons(per_d);
    return res;
}

BoundResult accmac_inner_point(const DiscreteChannel& ch, const DelaySet& ds,
                               const InnerParams& params) {
    BoundResult res = inner_point(ch, ds, params);
    const double h1 = entropy(params.p_x1);
    for (auto& caps : res.per_delay) caps.r1_cap = h1;
    res.pentagon = BoundPentagon(res.pentagon.a, res.pentagon.b, h1);
    return res;
}

BoundResult accmac_outer_point(const DiscreteChannel& ch, const DelaySet& ds,
                               const OuterParams& params) {
    BoundResult res = outer_point(ch, ds, params);
    const int D = ds.window();
    const int nx1 = ch.x1_size();
    const std::int64_t vt_size = ipow(nx1, 2 * D - 1);
    const std::int64_t x1_blk = ipow(nx1, D);

    double min_h = kNoR1Cap;
    size_t k = 0;
    for (int d : ds.delays()) {
        // Entropy of the pushforward of p_vtilde through the deterministic
        // vtilde -> x1bar coordinate selection.
        std::vector<double> push(static_cast<size_t>(x1_blk), 0.0);
        for (std::int64_t vt = 0; vt < vt_size; ++vt) {
            const double pv = params.p_vtilde[static_cast<int>(vt)];
            if (pv == 0.0) continue;
            std::int64_t x1bar = 0;
            for (int i = 1; i <= D; ++i) {
                x1bar = x1bar * nx1 + digit_of(vt, i + ds.d_max - d, nx1, 2 * D - 1);
            }
            push[static_cast<size_t>(x1bar)] += pv;
        }
        double h = 0.0;
        for (double v : push) h -= xlog2x(v);
        h /= D;
        res.per_delay[k++].r1_cap = h;
        min_h = std::min(min_h, h);
    }
    res.pentagon = BoundPentagon(res.pentagon.a, res.pentagon.b, min_h);
    return res;
}

OuterParams extend_inner_params(const DiscreteChannel& ch, const DelaySet& ds,
                                const InnerParams& params) {
    validate_inner_params(ch, ds, params);
    const int D = ds.window();
    const int nx1 = ch.x1_size(), nx2 = ch.x2_size();
    const int L = 2 * D - 1;
    const auto vt_size = pow_checked(nx1, L, kMaxTensorStates);

    std::vector<double> pv(static_cast<size_t>(vt_size));
    for (std::int64_t vt = 0; vt < vt_size; ++vt) {
        double w = 1.0;
        for (int k = 1; k <= L; ++k) w *= params.p_x1[digit_of(vt, k, nx1, L)];
        pv[static_cast<size_t>(vt)] = w;
    }

    OuterParams out;
    out.p_vtilde = Pmf(std::move(pv));
    for (int i = 1; i <= D; ++i) {
        const std::int64_t prefixes = ipow(nx2, i - 1);
        const std::int64_t rows = vt_size * prefixes;
        if (rows * nx2 > kMaxTensorStates) throw CapacityError("causal conditional too large");
        std::vector<double> vals(static_cast<size_t>(rows) * nx2);
        for (std::int64_t vt = 0; vt < vt_size; ++vt) {
            const int window = vtilde_window(static_cast<int>(vt), i, nx1, D);
            for (std::int64_t pre = 0; pre < prefixes; ++pre) {
                const size_t base = static_cast<size_t>(vt * prefixes + pre) * nx2;
                for (int x2 = 0; x2 < nx2; ++x2) {
                    vals[base + x2] = params.p_x2_given_v.at(window, x2);
                }
            }
        }
        out.p_x2_causal.push_back(
            ConditionalPmf(static_cast<int>(rows), nx2, std::move(vals)));
    }
    return out;
}

}  // namespace acmac
