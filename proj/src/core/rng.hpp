#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace acmac {

// Deterministic generator with hand-rolled sampling so identical seeds give
// bit-identical streams on every platform (the std:: distributions are
// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed)) {}

    // Derive an independent stream; used to make per-trial / per-restart
    // randomness independent of worker scheduling.
    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        return Rng(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL)));
    }

    std::uint64_t next_u64() {  // splitmix64 step
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() {  // in (0, 1)
        const std::uint64_t bits = next_u64() >> 11;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    int uniform_int(int n) {  // in [0, n)
        return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
    }

    int sample(const double* pmf, int n) {
        double u = uniform();
        for (int i = 0; i < n - 1; ++i) {
            u -= pmf[i];
            if (u <= 0.0) return i;
        }
        return n - 1;
    }

    // Uniform point on the probability simplex.
    std::vector<double> simplex(int n) {
        std::vector<double> v(static_cast<size_t>(n));
        double sum = 0.0;
        for (double& x : v) {
            x = -std::log(uniform());
            sum += x;
        }
        for (double& x : v) x /= sum;
        return v;
    }

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::uint64_t state_;
};

}  // namespace acmac
