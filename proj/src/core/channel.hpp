#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "prob.hpp"

namespace acmac {

// Stationary discrete memoryless cognitive MAC: transition tensor
// P(y | x1, x2) plus the delay set of the asynchronous model.
class DiscreteChannel {
public:
    DiscreteChannel(int x1_size, int x2_size, int y_size, std::vector<double> transition,
                    DelaySet delays = DelaySet(0, 0));

    int x1_size() const { return x1_size_; }
    int x2_size() const { return x2_size_; }
    int y_size() const { return y_size_; }
    const DelaySet& delay_set() const { return delays_; }
    void set_delay_set(const DelaySet& ds) { delays_ = ds; }

    double p(int x1, int x2, int y) const {
        return transition_[(static_cast<size_t>(x1) * x2_size_ + x2) * y_size_ + y];
    }
    const double* row(int x1, int x2) const {
        return transition_.data() + (static_cast<size_t>(x1) * x2_size_ + x2) * y_size_;
    }
    const std::vector<double>& transition() const { return transition_; }

    // Optional display names per symbol; indices are used internally.
    std::vector<std::string> x1_labels, x2_labels, y_labels;

private:
    int x1_size_, x2_size_, y_size_;
    std::vector<double> transition_;  // indexed (x1, x2, y)
    DelaySet delays_;
};

// A bundled channel with (when known) its exact rate region for regression.
struct NamedChannel {
    std::string id;
    DiscreteChannel channel;
    std::optional<RegionHull> known_region;
    std::string citation;
};

// Y = X2 mod X1 with X1 = {2,4}, X2 = Y = {0,1,2,3}. The message-cognition
// capacity region is the triangle R1+R2 <= 2; with codeword cognition it is
// the trapezoid {R1 <= 1, R1+R2 <= 2}.
NamedChannel build_mod_channel();
RegionHull mod_channel_cmac_region();    // triangle
RegionHull mod_channel_ccmac_region();   // trapezoid

// Y_i = X_{1,i-d} xor X_{2,i} xor Z_i with Z ~ Bernoulli(p); sum-rate capacity
// is 1 - H2(p).
NamedChannel build_binary_additive(double p);

double binary_entropy(double p);

// Small random channel for property tests; deterministic in the seed.
DiscreteChannel random_channel(int x1_size, int x2_size, int y_size, std::uint64_t seed);

}  // namespace acmac
