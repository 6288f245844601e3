#pragma once

#include <vector>

#include "geometry.hpp"

namespace acmac {

// Sub-cooperative Gaussian channel with individual power constraints. The
// closed forms are proved for the delay set {0, 1} only, so that set is
// fixed here.
struct GaussianSpec {
    double p1 = 0.5;
    double p2 = 1.0;
    double n0 = 1.0;

    GaussianSpec() = default;
    GaussianSpec(double power1, double power2, double noise);
};

struct GaussianSample {
    double rho = 0.0;
    double p2_used = 0.0;  // rho-only traces repeat p2 here
    double sum_cap = 0.0;
    double r2_cap = 0.0;
};

struct GaussianCurve {
    std::vector<GaussianSample> samples;
    RegionHull hull;
};

// Outer closed form at one correlation point:
//   sum = 1/2 log2(1 + (P1 + 2 rho sqrt(P1 P2) + P2) / N)
//   r2  = 1/2 log2(1 + P2 (1 - 2 rho^2) / N)
GaussianSample gaussian_outer_point(const GaussianSpec& spec, double rho);

// Inner closed form at (rho, P2~):
//   sum = 1/2 log2((N + P1 + P2~ + 2 rho sqrt(P1 P2~)) / (N + P2~ (1 - rho^2)))
//       + 1/2 log2(1 + P2~ (1 - 2 rho^2) / N)
//   r2  = 1/2 log2(1 + P2~ (1 - 2 rho^2) / N)
GaussianSample gaussian_inner_point(const GaussianSpec& spec, double rho, double p2_used);

// Curves sampled on uniform grids over [0, 1/sqrt(2)] (and [0, P2] for the
// inner bound), with the union hull of the sampled pentagons.
GaussianCurve gaussian_outer(const GaussianSpec& spec, int rho_steps);
GaussianCurve gaussian_inner(const GaussianSpec& spec, int rho_steps, int p2_steps);

}  // namespace acmac
