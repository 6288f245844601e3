#include "geometry.hpp"

#include <algorithm>
#include <cmath>

namespace acmac {

namespace {

constexpr double kCollinearEps = 1e-12;

double cross(const RatePair& o, const RatePair& a, const RatePair& b) {
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

bool lex_less(const RatePair& a, const RatePair& b) {
    if (a.r1 != b.r1) return a.r1 < b.r1;
    return a.r2 < b.r2;
}

bool nearly_equal(const RatePair& a, const RatePair& b) {
    return std::abs(a.r1 - b.r1) <= kCollinearEps && std::abs(a.r2 - b.r2) <= kCollinearEps;
}

}  // namespace

BoundPentagon::BoundPentagon(double sum_cap, double r2_cap, double r1_cap)
    : a(sum_cap), b(r2_cap), c(r1_cap) {
    if (!(a >= 0.0) || !(b >= 0.0) || !(c >= 0.0)) {
        throw ValidationError("BoundPentagon: caps must be nonnegative");
    }
    // Canonicalize: tighten b against the sum cap, drop a redundant R1 cap.
    b = std::min(b, a);
    if (c >= a) c = kNoR1Cap;
}

RegionHull::RegionHull(std::vector<RatePair> ccw_vertices) : vertices_(std::move(ccw_vertices)) {
    if (vertices_.empty()) throw ValidationError("RegionHull: empty vertex list");
    for (const auto& v : vertices_) {
        if (!(v.r1 >= 0.0) || !(v.r2 >= 0.0)) {
            throw ValidationError("RegionHull: negative vertex");
        }
    }
    if (!nearly_equal(vertices_.front(), RatePair{0.0, 0.0})) {
        throw ValidationError("RegionHull: vertex list must start at the origin");
    }
    const size_t n = vertices_.size();
    if (n >= 3) {
        for (size_t i = 0; i < n; ++i) {
            const RatePair& o = vertices_[i];
            const RatePair& p = vertices_[(i + 1) % n];
            const RatePair& q = vertices_[(i + 2) % n];
            if (cross(o, p, q) < -1e-9) {
                throw ValidationError("RegionHull: vertices are not convex counterclockwise");
            }
        }
    }
}

BoundPentagon intersect_pentagons(const std::vector<BoundPentagon>& pentagons) {
    if (pentagons.empty()) throw ValidationError("intersect_pentagons: empty list");
    double a = pentagons[0].a, b = pentagons[0].b, c = pentagons[0].c;
    for (const auto& p : pentagons) {
        a = std::min(a, p.a);
        b = std::min(b, p.b);
        c = std::min(c, p.c);
    }
    return BoundPentagon(a, b, c);
}

RegionHull pentagon_vertices(const BoundPentagon& p) {
    std::vector<RatePair> pts;
    pts.push_back({0.0, 0.0});
    const double r1_max = std::min(p.c, p.a);
    pts.push_back({r1_max, 0.0});
    if (std::isfinite(p.c) && p.c < p.a) {
        // Right edge R1 = c rises to min(b, a - c).
        pts.push_back({p.c, std::min(p.b, p.a - p.c)});
    }
    if (p.a - p.b < r1_max) {
        // Sum-rate edge meets R2 = b at (a - b, b).
        pts.push_back({p.a - p.b, p.b});
    }
    pts.push_back({0.0, p.b});
    return hull_of_points(std::move(pts));
}

double support(const BoundPentagon& p, double w1, double w2) {
    return support(pentagon_vertices(p), w1, w2);
}

double support(const RegionHull& hull, double w1, double w2) {
    if (!(w1 >= 0.0) || !(w2 >= 0.0) || (w1 == 0.0 && w2 == 0.0)) {
        throw ValidationError("support: direction must be nonnegative and nonzero");
    }
    double best = 0.0;
    for (const auto& v : hull.vertices()) best = std::max(best, w1 * v.r1 + w2 * v.r2);
    return best;
}

RegionHull hull_of_points(std::vector<RatePair> points) {
    points.push_back({0.0, 0.0});
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end(), nearly_equal), points.end());

    if (points.size() == 1) return RegionHull(std::move(points));

    // Andrew monotone chain; strict turns only so collinear vertices drop out.
    const size_t n = points.size();
    std::vector<RatePair> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], points[i]) <= kCollinearEps) --k;
        h[k++] = points[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], points[i]) <= kCollinearEps) --k;
        h[k++] = points[i];
    }
    h.resize(k - 1);  // last point equals the first

    // Rotate so the origin (lexicographic minimum, always a hull vertex) is
    // first; monotone chain starts there already, but keep it explicit.
    auto it = std::min_element(h.begin(), h.end(), lex_less);
    std::rotate(h.begin(), it, h.end());
    return RegionHull(std::move(h));
}

RegionHull union_hull(const std::vector<BoundPentagon>& pentagons) {
    std::vector<RatePair> pts;
    for (const auto& p : pentagons) {
        const RegionHull ph = pentagon_vertices(p);
        pts.insert(pts.end(), ph.vertices().begin(), ph.vertices().end());
    }
    return hull_of_points(std::move(pts));
}

bool contains_point(const RegionHull& outer, const RatePair& p, double tol) {
    const auto& vs = outer.vertices();
    const size_t n = vs.size();
    if (n == 1) {
        return std::abs(p.r1 - vs[0].r1) <= tol && std::abs(p.r2 - vs[0].r2) <= tol;
    }
    if (n == 2) {
        // Degenerate segment: distance to it.
        const double dx = vs[1].r1 - vs[0].r1, dy = vs[1].r2 - vs[0].r2;
        const double len2 = dx * dx + dy * dy;
        double t = ((p.r1 - vs[0].r1) * dx + (p.r2 - vs[0].r2) * dy) / len2;
        t = std::clamp(t, 0.0, 1.0);
        const double ex = p.r1 - (vs[0].r1 + t * dx), ey = p.r2 - (vs[0].r2 + t * dy);
        return std::sqrt(ex * ex + ey * ey) <= tol;
    }
    for (size_t i = 0; i < n; ++i) {
        const RatePair& u = vs[i];
        const RatePair& v = vs[(i + 1) % n];
        const double len = std::hypot(v.r1 - u.r1, v.r2 - u.r2);
        if (len == 0.0) continue;
        if (cross(u, v, p) < -tol * len) return false;
    }
    return true;
}

bool contains(const RegionHull& outer, const RegionHull& inner, double tol) {
    for (const auto& v : inner.vertices()) {
        if (!contains_point(outer, v, tol)) return false;
    }
    return true;
}

std::vector<double> support_profile(const RegionHull& hull, int n_dirs) {
    if (n_dirs < 3) throw ValidationError("support_profile: need at least 3 directions");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n_dirs));
    const double half_pi = 2.0 * std::atan(1.0);
    for (int k = 0; k < n_dirs; ++k) {
        const double theta = half_pi * k / (n_dirs - 1);
        out.push_back(support(hull, std::cos(theta), std::sin(theta)));
    }
    return out;
}

}  // namespace acmac
