#include "multiletter.hpp"

#include <cmath>

namespace acmac {

namespace {

constexpr std::int64_t kMaxWorkStates = 500'000'000;
constexpr std::int64_t kMaxAccumStates = 20'000'000;

std::int64_t ipow(int radix, int exponent) {
    std::int64_t v = 1;
    for (int i = 0; i < exponent; ++i) v *= radix;
    return v;
}

// Digits of a length-n string, position 1 (first letter) most significant.
void digits_of(std::int64_t index, int radix, int n, int* out) {
    for (int i = n - 1; i >= 0; --i) {
        out[i] = static_cast<int>(index % radix);
        index /= radix;
    }
}

struct LawAccess {
    const DiscreteChannel& ch;
    const DelaySet& ds;
    const NLetterLaw& law;
    std::vector<int> x1_digits, x2_digits;

    double weight() {
        switch (law.kind) {
            case NLetterLaw::Kind::iid_uniform: {
                double w = 1.0;
                const double u = 1.0 / (ch.x1_size() * ch.x2_size());
                for (int i = 0; i < law.n; ++i) w *= u;
                return w;
            }
            case NLetterLaw::Kind::iid_inner: {
                double w = 1.0;
                for (int i = 0; i < law.n; ++i) w *= law.iid.p_x1[x1_digits[static_cast<size_t>(i)]];
                if (w == 0.0) return 0.0;
                for (int i = 0; i < law.n; ++i) {
                    // Cyclic window (x_{1,i-d_max}, ..., x_{1,i+d_min}).
                    int widx = 0;
                    for (int j = -ds.d_max; j <= ds.d_min; ++j) {
                        int pos = (i + j) % law.n;
                        if (pos < 0) pos += law.n;
                        widx = widx * ch.x1_size() + x1_digits[static_cast<size_t>(pos)];
                    }
                    w *= law.iid.p_x2_given_v.at(widx, x2_digits[static_cast<size_t>(i)]);
                    if (w == 0.0) return 0.0;
                }
                return w;
            }
            case NLetterLaw::Kind::joint:
            default:
                return 0.0;  // handled by caller via flat index
        }
    }
};

struct BlockEval {
    double sum_cap;
    double r2_cap;
};

// Shared evaluator over an output block [lo, hi] (1-based, inclusive). When
// `pin_out_of_range` is set, delayed indices outside [1, n] read the fixed
// symbol 0; q_n blocks never need it.
std::vector<BlockEval> evaluate_block(const DiscreteChannel& ch, const DelaySet& ds,
                                      const NLetterLaw& law, int lo, int hi,
                                      bool pin_out_of_range) {
    const int n = law.n;
    const int nx1 = ch.x1_size(), nx2 = ch.x2_size(), ny = ch.y_size();
    const int blk = hi - lo + 1;
    if (blk <= 0) throw ValidationError("multiletter: empty output block");

    const std::int64_t in1 = pow_checked(nx1, n, kMaxTensorStates);
    const std::int64_t in2 = pow_checked(nx2, n, kMaxTensorStates);
    if (in1 * in2 > kMaxTensorStates) {
        throw CapacityError("n-letter input law needs " + std::to_string(in1 * in2) +
                            " states, above cap " + std::to_string(kMaxTensorStates));
    }
    const std::int64_t y_blk = ipow(ny, blk);
    if (in1 * y_blk > kMaxAccumStates || in1 * in2 * y_blk > kMaxWorkStates) {
        throw CapacityError("n-letter output enumeration too large");
    }

    const auto delays = ds.delays();
    const size_t nd = delays.size();

    // Per-letter channel row entropies, used for H(Y|X1,X2).
    std::vector<double> row_h(static_cast<size_t>(nx1) * nx2, 0.0);
    for (int a = 0; a < nx1; ++a) {
        for (int b = 0; b < nx2; ++b) {
            double h = 0.0;
            for (int y = 0; y < ny; ++y) h -= xlog2x(ch.p(a, b, y));
            row_h[static_cast<size_t>(a) * nx2 + b] = h;
        }
    }

    std::vector<std::vector<double>> acc_y(nd, std::vector<double>(static_cast<size_t>(y_blk), 0.0));
    std::vector<std::vector<double>> acc_x1y(
        nd, std::vector<double>(static_cast<size_t>(in1 * y_blk), 0.0));
    std::vector<double> h_y_given_inputs(nd, 0.0);
    std::vector<double> p_x1(static_cast<size_t>(in1), 0.0);

    LawAccess access{ch, ds, law, std::vector<int>(static_cast<size_t>(n)),
                     std::vector<int>(static_cast<size_t>(n))};
    std::vector<double> ybuf(static_cast<size_t>(y_blk));
    std::vector<double> ynext(static_cast<size_t>(y_blk));

    for (std::int64_t i1 = 0; i1 < in1; ++i1) {
        digits_of(i1, nx1, n, access.x1_digits.data());
        for (std::int64_t i2 = 0; i2 < in2; ++i2) {
            digits_of(i2, nx2, n, access.x2_digits.data());
            double w;
            if (law.kind == NLetterLaw::Kind::joint) {
                w = law.joint[static_cast<size_t>(i1 * in2 + i2)];
            } else {
                w = access.weight();
            }
            if (w == 0.0) continue;
            p_x1[static_cast<size_t>(i1)] += w;

            for (size_t di = 0; di < nd; ++di) {
                const int d = delays[di];
                // Product law of the block outputs for this input pair.
                ybuf[0] = 1.0;
                std::int64_t cur = 1;
                double h_rows = 0.0;
                for (int i = lo; i <= hi; ++i) {
                    const int src = i - d;
                    int x1sym;
                    if (src >= 1 && src <= n) {
                        x1sym = access.x1_digits[static_cast<size_t>(src - 1)];
                    } else if (pin_out_of_range) {
                        x1sym = 0;
                    } else {
                        throw ValidationError("multiletter: delayed index out of block");
                    }
                    const int x2sym = access.x2_digits[static_cast<size_t>(i - 1)];
                    const double* row = ch.row(x1sym, x2sym);
                    h_rows += row_h[static_cast<size_t>(x1sym) * nx2 + x2sym];
                    for (std::int64_t k = 0; k < cur; ++k) {
                        const double base = ybuf[static_cast<size_t>(k)];
                        for (int y = 0; y < ny; ++y) {
                            ynext[static_cast<size_t>(k * ny + y)] = base * row[y];
                        }
                    }
                    cur *= ny;
                    std::swap(ybuf, ynext);
                }
                h_y_given_inputs[di] += w * h_rows;
                double* ay = acc_y[di].data();
                double* axy = acc_x1y[di].data() + static_cast<size_t>(i1) * y_blk;
                for (std::int64_t k = 0; k < y_blk; ++k) {
                    ay[k] += w * ybuf[static_cast<size_t>(k)];
                    axy[k] += w * ybuf[static_cast<size_t>(k)];
                }
            }
        }
    }

    double h_x1 = 0.0;
    for (double v : p_x1) h_x1 -= xlog2x(v);

    std::vector<BlockEval> out(nd);
    for (size_t di = 0; di < nd; ++di) {
        double h_y = 0.0;
        for (double v : acc_y[di]) h_y -= xlog2x(v);
        double h_x1_y = 0.0;
        for (double v : acc_x1y[di]) h_x1_y -= xlog2x(v);
        const double sum_mi = std::max(0.0, h_y - h_y_given_inputs[di]);
        const double r2_mi = std::max(0.0, (h_x1_y - h_x1) - h_y_given_inputs[di]);
        out[di] = {sum_mi, r2_mi};
    }
    return out;
}

void validate_law(const DiscreteChannel& ch, const DelaySet& ds, const NLetterLaw& law) {
    if (law.n < 1) throw ValidationError("NLetterLaw: n must be at least 1");
    if (law.kind == NLetterLaw::Kind::joint) {
        const std::int64_t expect = pow_checked(ch.x1_size(), law.n, kMaxTensorStates) *
                                    pow_checked(ch.x2_size(), law.n, kMaxTensorStates);
        if (static_cast<std::int64_t>(law.joint.size()) != expect) {
            throw ValidationError("NLetterLaw: joint size does not match (|X1||X2|)^n");
        }
        double sum = 0.0;
        for (double v : law.joint) {
            if (!(v >= 0.0)) throw ValidationError("NLetterLaw: negative entry");
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-10) {
            throw ValidationError("NLetterLaw: joint sums to " + std::to_string(sum));
        }
    } else if (law.kind == NLetterLaw::Kind::iid_inner) {
        validate_inner_params(ch, ds, law.iid);
    }
}

double law_x1_entropy(const DiscreteChannel& ch, const NLetterLaw& law) {
    // H(X1^n) of the law's first-marginal; for products this is n * H(p_x1).
    if (law.kind == NLetterLaw::Kind::iid_uniform) {
        return law.n * std::log2(static_cast<double>(ch.x1_size()));
    }
    if (law.kind == NLetterLaw::Kind::iid_inner) {
        return law.n * entropy(law.iid.p_x1);
    }
    const std::int64_t in1 = ipow(ch.x1_size(), law.n);
    const std::int64_t in2 = ipow(ch.x2_size(), law.n);
    double h = 0.0;
    for (std::int64_t i1 = 0; i1 < in1; ++i1) {
        double p = 0.0;
        for (std::int64_t i2 = 0; i2 < in2; ++i2) p += law.joint[static_cast<size_t>(i1 * in2 + i2)];
        h -= xlog2x(p);
    }
    return h;
}

}  // namespace

NLetterLaw NLetterLaw::iid_uniform(int n) {
    NLetterLaw law;
    law.n = n;
    law.kind = Kind::iid_uniform;
    return law;
}

NLetterLaw NLetterLaw::from_iid_inner(int n, InnerParams params) {
    NLetterLaw law;
    law.n = n;
    law.kind = Kind::iid_inner;
    law.iid = std::move(params);
    return law;
}

NLetterLaw NLetterLaw::from_joint(int n, std::vector<double> values) {
    NLetterLaw law;
    law.n = n;
    law.kind = Kind::joint;
    law.joint = std::move(values);
    return law;
}

BoundPentagon r_n_point(const DiscreteChannel& ch, const DelaySet& ds, const NLetterLaw& law) {
    validate_law(ch, ds, law);
    const auto evals = evaluate_block(ch, ds, law, 1, law.n, /*pin_out_of_range=*/true);
    std::vector<BoundPentagon> per_d;
    per_d.reserve(evals.size());
    for (const auto& e : evals) per_d.emplace_back(e.sum_cap / law.n, e.r2_cap / law.n);
    return intersect_pentagons(per_d);
}

BoundPentagon q_n_point(const DiscreteChannel& ch, const DelaySet& ds, const NLetterLaw& law) {
    validate_law(ch, ds, law);
    if (law.n < ds.window()) {
        throw ValidationError("q_n_point: need n >= D so the truncated block is nonempty");
    }
    const auto evals =
        evaluate_block(ch, ds, law, ds.d_max + 1, law.n - ds.d_min, /*pin_out_of_range=*/false);
    std::vector<BoundPentagon> per_d;
    per_d.reserve(evals.size());
    for (const auto& e : evals) per_d.emplace_back(e.sum_cap / law.n, e.r2_cap / law.n);
    return intersect_pentagons(per_d);
}

BoundPentagon accmac_multiletter_point(const DiscreteChannel& ch, const DelaySet& ds,
                                       const NLetterLaw& law) {
    const BoundPentagon q = q_n_point(ch, ds, law);
    return BoundPentagon(q.a, q.b, law_x1_entropy(ch, law) / law.n);
}

}  // namespace acmac
