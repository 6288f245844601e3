#pragma once

#include <limits>
#include <vector>

#include "errors.hpp"

namespace acmac {

struct RatePair {
    double r1 = 0.0;
    double r2 = 0.0;
};

inline constexpr double kNoR1Cap = std::numeric_limits<double>::infinity();

// Rate region cut out by R1 >= 0, R2 >= 0, R2 <= b, R1 + R2 <= a and
// optionally R1 <= c. Canonical form has b <= a and c <= a.
struct BoundPentagon {
    double a = 0.0;          // sum-rate cap
    double b = 0.0;          // R2 cap
    double c = kNoR1Cap;     // R1 cap, may be +inf

    BoundPentagon() = default;
    BoundPentagon(double sum_cap, double r2_cap, double r1_cap = kNoR1Cap);
};

// Closed convex region in the (R1, R2) plane: counterclockwise vertex list
// starting at (0,0), collinear points removed.
class RegionHull {
public:
    RegionHull() : vertices_{{0.0, 0.0}} {}
    explicit RegionHull(std::vector<RatePair> ccw_vertices);

    const std::vector<RatePair>& vertices() const { return vertices_; }
    bool is_point() const { return vertices_.size() == 1; }

private:
    std::vector<RatePair> vertices_;
};

// Componentwise min; valid because all pentagons share the same three
// constraint normals.
BoundPentagon intersect_pentagons(const std::vector<BoundPentagon>& pentagons);

// Exact vertex list of a canonical pentagon, counterclockwise from (0,0).
RegionHull pentagon_vertices(const BoundPentagon& p);

// max over the pentagon of w1*R1 + w2*R2; direction must be nonnegative and
// nonzero.
double support(const BoundPentagon& p, double w1, double w2);
double support(const RegionHull& hull, double w1, double w2);

// Convex hull of all pentagon vertices (always includes the origin).
RegionHull union_hull(const std::vector<BoundPentagon>& pentagons);
RegionHull hull_of_points(std::vector<RatePair> points);

// True iff every vertex of `inner` lies inside `outer` within tol
// (half-plane signed distance).
bool contains(const RegionHull& outer, const RegionHull& inner, double tol);
bool contains_point(const RegionHull& outer, const RatePair& p, double tol);

// Support values on a uniform angular grid of n_dirs directions spanning the
// first quadrant; used for boundary reports.
std::vector<double> support_profile(const RegionHull& hull, int n_dirs);

}  // namespace acmac
