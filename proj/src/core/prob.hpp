#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace acmac {

// Base channel alphabets are enumerated exhaustively everywhere, so they are
// kept small. Axes of blocked/windowed tensors may be larger; those are
// limited by kMaxTensorStates instead.
inline constexpr int kMaxAlphabet = 16;
inline constexpr std::int64_t kMaxTensorStates = 10'000'000;

double xlog2x(double p);

// Probability vector over an indexed finite alphabet.
class Pmf {
public:
    Pmf() = default;
    explicit Pmf(std::vector<double> probs);

    int size() const { return static_cast<int>(probs_.size()); }
    double operator[](int i) const { return probs_[static_cast<size_t>(i)]; }
    const std::vector<double>& probs() const { return probs_; }

    static Pmf uniform(int n);
    static Pmf point_mass(int n, int at);

private:
    std::vector<double> probs_;
};

// One Pmf per conditioning symbol, stored row-major.
class ConditionalPmf {
public:
    ConditionalPmf() = default;
    ConditionalPmf(int rows, int cols, std::vector<double> values);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double at(int row, int col) const { return values_[static_cast<size_t>(row) * cols_ + col]; }
    const double* row(int r) const { return values_.data() + static_cast<size_t>(r) * cols_; }
    const std::vector<double>& values() const { return values_; }

    static ConditionalPmf uniform(int rows, int cols);
    // Every row equal to the given pmf.
    static ConditionalPmf constant_row(int rows, const Pmf& p);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> values_;
};

// Set of possible delays {-d_min, ..., d_max}, fixed per codeword.
struct DelaySet {
    int d_min = 0;
    int d_max = 0;

    DelaySet() = default;
    DelaySet(int dmin, int dmax);

    int window() const { return d_max + d_min + 1; }  // D
    std::vector<int> delays() const;
};

// Dense joint probability tensor over tagged finite axes.
class JointTensor {
public:
    struct Axis {
        std::string tag;
        int size = 0;
    };

    JointTensor() = default;
    JointTensor(std::vector<Axis> axes, std::vector<double> values, double norm_tol = 1e-10);

    const std::vector<Axis>& axes() const { return axes_; }
    const std::vector<double>& values() const { return values_; }
    std::int64_t total_states() const { return static_cast<std::int64_t>(values_.size()); }
    int axis_index(const std::string& tag) const;

private:
    std::vector<Axis> axes_;
    std::vector<double> values_;
};

// Shannon entropy of p in the given log base (bits by default).
double entropy(const Pmf& p, double log_base = 2.0);

// Entropy (bits) of the tensor's marginal on the given axis tags.
double marginal_entropy(const JointTensor& joint, const std::vector<std::string>& tags);

// I(A;B) in bits, by exact marginalization. Axis sets must be disjoint.
double mutual_information(const JointTensor& joint, const std::vector<std::string>& axes_a,
                          const std::vector<std::string>& axes_b);

// I(A;B|C) in bits. The three axis sets must be pairwise disjoint.
double conditional_mutual_information(const JointTensor& joint,
                                      const std::vector<std::string>& axes_a,
                                      const std::vector<std::string>& axes_b,
                                      const std::vector<std::string>& axes_c);

}  // namespace acmac
