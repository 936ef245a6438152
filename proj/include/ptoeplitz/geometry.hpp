#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <span>
#include <vector>

#include "ptoeplitz/error.hpp"
#include "ptoeplitz/matrix.hpp"

namespace ptoeplitz {

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point&, const Point&) = default;
};

inline double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Closed convex region given by its vertices in counterclockwise order.
/// One vertex is a point, two vertices a segment.
struct ConvexPolygon {
    std::vector<Point> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    bool empty() const noexcept { return vertices.empty(); }
};

/// h(phi) = max over the polygon of x cos(phi) + y sin(phi).
inline double support(const ConvexPolygon& poly, double phi) {
    require(!poly.empty(), "support of an empty polygon");
    const double c = std::cos(phi), s = std::sin(phi);
    double best = -std::numeric_limits<double>::infinity();
    for (const Point& p : poly.vertices) best = std::max(best, p.x * c + p.y * s);
    return best;
}

inline double diameter(const ConvexPolygon& poly) {
    double d = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t j = i + 1; j < poly.size(); ++j) d = std::max(d, distance(poly.vertices[i], poly.vertices[j]));
    return d;
}

/// Counterclockwise hull by monotone chain. Points within 1e-12 * scale of a
/// hull edge's line are dropped.
inline ConvexPolygon convex_hull(std::span<const Point> input) {
    require(!input.empty(), "convex_hull of an empty point set");
    std::vector<Point> pts(input.begin(), input.end());
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    double scale = 0.0;
    for (const Point& p : pts) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    const double span = std::max(distance(pts.front(), pts.back()), 0.0);
    // cross products scale like length^2
    const double tol = 1e-12 * std::max(1.0, scale) * std::max(span, 1e-300);

    if (pts.size() == 1) return {pts};

    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Point& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= tol) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        const Point& p = pts[i];
        while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= tol) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && distance(hull[0], hull[1]) <= 1e-15 * std::max(1.0, scale)) hull.resize(1);
    return {hull};
}

/// Distance from a point to a convex polygon (0 inside).
inline double distance_to(const ConvexPolygon& poly, Point q) {
    require(!poly.empty(), "distance_to an empty polygon");
    const auto& v = poly.vertices;
    if (v.size() == 1) return distance(v[0], q);
    auto seg = [](Point a, Point b, Point p) {
        const double dx = b.x - a.x, dy = b.y - a.y;
        const double len2 = dx * dx + dy * dy;
        double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        return std::hypot(a.x + t * dx - p.x, a.y + t * dy - p.y);
    };
    bool inside = v.size() >= 3;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point a = v[i], b = v[(i + 1) % v.size()];
        if (cross(a, b, q) < 0.0) inside = false;
        best = std::min(best, seg(a, b, q));
    }
    return inside ? 0.0 : best;
}

inline bool contains(const ConvexPolygon& poly, Point q, double tol) { return distance_to(poly, q) <= tol; }

/// [min x, max x] of the polygon's intersection with the line y = 0; empty
/// optional when the polygon misses the axis.
inline std::optional<std::pair<double, double>> real_axis_extent(const ConvexPolygon& poly) {
    require(!poly.empty(), "real_axis_extent of an empty polygon");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const auto& v = poly.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point a = v[i], b = v[(i + 1) % v.size()];
        if (a.y == 0.0) {
            lo = std::min(lo, a.x);
            hi = std::max(hi, a.x);
        }
        if ((a.y < 0.0 && b.y > 0.0) || (a.y > 0.0 && b.y < 0.0)) {
            const double x = a.x + (b.x - a.x) * (0.0 - a.y) / (b.y - a.y);
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    }
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

/// Hausdorff distance of two convex sets from their support functions on a
/// uniform angle grid.
inline double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q, std::size_t angle_count = 720) {
    require(!p.empty() && !q.empty(), "hausdorff_distance of an empty polygon");
    require(angle_count >= 3, "hausdorff_distance needs at least 3 angles");
    double d = 0.0;
    for (std::size_t k = 0; k < angle_count; ++k) {
        const double phi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(angle_count);
        d = std::max(d, std::abs(support(p, phi) - support(q, phi)));
    }
    return d;
}

}  // namespace ptoeplitz
