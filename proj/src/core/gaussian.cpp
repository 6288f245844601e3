#include "gaussian.hpp"

#include <cmath>

#include "errors.hpp"

namespace acmac {

namespace {

const double kRhoMax = 1.0 / std::sqrt(2.0);

double half_log2(double x) {
    return 0.5 * std::log2(x);
}

}  // namespace

GaussianSpec::GaussianSpec(double power1, double power2, double noise)
    : p1(power1), p2(power2), n0(noise) {
    if (!(p1 >= 0.0) || !(p2 >= 0.0)) {
        throw ValidationError("GaussianSpec: powers must be nonnegative");
    }
    if (!(n0 > 0.0)) throw ValidationError("GaussianSpec: noise variance must be positive");
}

GaussianSample gaussian_outer_point(const GaussianSpec& spec, double rho) {
    if (rho < 0.0 || rho > kRhoMax + 1e-12) {
        throw ValidationError("gaussian_outer_point: rho outside [0, 1/sqrt(2)]");
    }
    GaussianSample s;
    s.rho = rho;
    s.p2_used = spec.p2;
    s.sum_cap = half_log2(1.0 + (spec.p1 + 2.0 * rho * std::sqrt(spec.p1 * spec.p2) + spec.p2) /
                                    spec.n0);
    s.r2_cap = half_log2(1.0 + spec.p2 * std::max(0.0, 1.0 - 2.0 * rho * rho) / spec.n0);
    return s;
}

GaussianSample gaussian_inner_point(const GaussianSpec& spec, double rho, double p2_used) {
    if (rho < 0.0 || rho > kRhoMax + 1e-12) {
        throw ValidationError("gaussian_inner_point: rho outside [0, 1/sqrt(2)]");
    }
    if (p2_used < 0.0 || p2_used > spec.p2 + 1e-12) {
        throw ValidationError("gaussian_inner_point: P2~ outside [0, P2]");
    }
    GaussianSample s;
    s.rho = rho;
    s.p2_used = p2_used;
    const double one_minus_2r2 = std::max(0.0, 1.0 - 2.0 * rho * rho);
    s.r2_cap = half_log2(1.0 + p2_used * one_minus_2r2 / spec.n0);
    s.sum_cap = half_log2((spec.n0 + spec.p1 + p2_used + 2.0 * rho * std::sqrt(spec.p1 * p2_used)) /
                          (spec.n0 + p2_used * (1.0 - rho * rho))) +
                s.r2_cap;
    return s;
}

GaussianCurve gaussian_outer(const GaussianSpec& spec, int rho_steps) {
    if (rho_steps < 2) throw ValidationError("gaussian_outer: need at least 2 rho steps");
    GaussianCurve curve;
    std::vector<BoundPentagon> pentagons;
    for (int k = 0; k < rho_steps; ++k) {
        const double rho = kRhoMax * k / (rho_steps - 1);
        const GaussianSample s = gaussian_outer_point(spec, rho);
        curve.samples.push_back(s);
        pentagons.emplace_back(s.sum_cap, s.r2_cap);
    }
    curve.hull = union_hull(pentagons);
    return curve;
}

GaussianCurve gaussian_inner(const GaussianSpec& spec, int rho_steps, int p2_steps) {
    if (rho_steps < 2 || p2_steps < 2) {
        throw ValidationError("gaussian_inner: need at least 2 steps per grid");
    }
    GaussianCurve curve;
    std::vector<BoundPentagon> pentagons;
    for (int k = 0; k < rho_steps; ++k) {
        const double rho = kRhoMax * k / (rho_steps - 1);
        for (int j = 0; j < p2_steps; ++j) {
            const double p2_used = spec.p2 * j / (p2_steps - 1);
            const GaussianSample s = gaussian_inner_point(spec, rho, p2_used);
            curve.samples.push_back(s);
            pentagons.emplace_back(s.sum_cap, s.r2_cap);
        }
    }
    curve.hull = union_hull(pentagons);
    return curve;
}

}  // namespace acmac
