#include "channel.hpp"

#include <cmath>

#include "rng.hpp"

namespace acmac {

DiscreteChannel::DiscreteChannel(int x1_size, int x2_size, int y_size,
                                 std::vector<double> transition, DelaySet delays)
    : x1_size_(x1_size), x2_size_(x2_size), y_size_(y_size), transition_(std::move(transition)),
      delays_(delays) {
    if (x1_size <= 0 || x2_size <= 0 || y_size <= 0) {
        throw ValidationError("DiscreteChannel: alphabet sizes must be positive");
    }
    if (x1_size > kMaxAlphabet || x2_size > kMaxAlphabet || y_size > kMaxAlphabet) {
        throw ValidationError("DiscreteChannel: alphabets above " +
                              std::to_string(kMaxAlphabet) + " symbols are not supported");
    }
    const size_t expected =
        static_cast<size_t>(x1_size) * static_cast<size_t>(x2_size) * static_cast<size_t>(y_size);
    if (transition_.size() != expected) {
        throw ValidationError("DiscreteChannel: transition tensor shape mismatch");
    }
    for (int a = 0; a < x1_size_; ++a) {
        for (int b = 0; b < x2_size_; ++b) {
            double sum = 0.0;
            for (int y = 0; y < y_size_; ++y) {
                const double v = p(a, b, y);
                if (!(v >= 0.0)) {
                    throw ValidationError("DiscreteChannel: negative transition probability");
                }
                sum += v;
            }
            if (std::abs(sum - 1.0) > 1e-9) {
                throw ValidationError("DiscreteChannel: row (x1=" + std::to_string(a) +
                                      ", x2=" + std::to_string(b) + ") sums to " +
                                      std::to_string(sum));
            }
        }
    }
}

NamedChannel build_mod_channel() {
    const std::vector<int> x1_values = {2, 4};
    const int nx2 = 4, ny = 4;
    std::vector<double> t(2 * nx2 * ny, 0.0);
    for (int a = 0; a < 2; ++a) {
        for (int x2 = 0; x2 < nx2; ++x2) {
            const int y = x2 % x1_values[static_cast<size_t>(a)];
            t[(static_cast<size_t>(a) * nx2 + x2) * ny + y] = 1.0;
        }
    }
    NamedChannel nc{"mod", DiscreteChannel(2, nx2, ny, std::move(t), DelaySet(0, 0)),
                    mod_channel_cmac_region(), "modular example channel"};
    nc.channel.x1_labels = {"2", "4"};
    nc.channel.x2_labels = {"0", "1", "2", "3"};
    nc.channel.y_labels = {"0", "1", "2", "3"};
    return nc;
}

RegionHull mod_channel_cmac_region() {
    return pentagon_vertices(BoundPentagon(2.0, 2.0));
}

RegionHull mod_channel_ccmac_region() {
    return pentagon_vertices(BoundPentagon(2.0, 2.0, 1.0));
}

double binary_entropy(double p) {
    return -xlog2x(p) - xlog2x(1.0 - p);
}

NamedChannel build_binary_additive(double p) {
    if (!(p >= 0.0) || p > 0.5) {
        throw ValidationError("build_binary_additive: crossover must be in [0, 0.5]");
    }
    std::vector<double> t(8, 0.0);
    for (int x1 = 0; x1 < 2; ++x1) {
        for (int x2 = 0; x2 < 2; ++x2) {
            const int y = x1 ^ x2;
            t[(static_cast<size_t>(x1) * 2 + x2) * 2 + y] = 1.0 - p;
            t[(static_cast<size_t>(x1) * 2 + x2) * 2 + (y ^ 1)] = p;
        }
    }
    const double cap = 1.0 - binary_entropy(p);
    NamedChannel nc{"binary_additive", DiscreteChannel(2, 2, 2, std::move(t), DelaySet(0, 1)),
                    pentagon_vertices(BoundPentagon(cap, cap)), "binary additive noise channel"};
    nc.channel.x1_labels = {"0", "1"};
    nc.channel.x2_labels = {"0", "1"};
    nc.channel.y_labels = {"0", "1"};
    return nc;
}

DiscreteChannel random_channel(int x1_size, int x2_size, int y_size, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> t(static_cast<size_t>(x1_size) * x2_size * y_size);
    for (int a = 0; a < x1_size; ++a) {
        for (int b = 0; b < x2_size; ++b) {
            double* row = t.data() + (static_cast<size_t>(a) * x2_size + b) * y_size;
            double sum = 0.0;
            for (int y = 0; y < y_size; ++y) {
                row[y] = -std::log(rng.uniform());
                sum += row[y];
            }
            for (int y = 0; y < y_size; ++y) row[y] /= sum;
        }
    }
    return DiscreteChannel(x1_size, x2_size, y_size, std::move(t));
}

}  // namespace acmac
