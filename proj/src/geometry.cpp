#include "bleval/geometry.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

namespace bleval {

namespace {

// Appends the integer rasterization of the segment a->b, excluding a
// itself (the caller already emitted it). Consecutive output points are
// 8-neighbors: each step changes x and/or y by exactly 1.
void raster_segment(Point a, const Point& b, std::vector<Point>& out) {
    const int dx = std::abs(b.x - a.x);
    const int dy = -std::abs(b.y - a.y);
    const int sx = a.x < b.x ? 1 : -1;
    const int sy = a.y < b.y ? 1 : -1;
    int err = dx + dy;
    while (!(a == b)) {
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            a.x += sx;
        }
        if (e2 <= dx) {
            err += dx;
            a.y += sy;
        }
        out.push_back(a);
    }
}

}  // namespace

PolyChain normalize_chain(const PolyChain& chain) {
    const auto& verts = chain.vertices();
    if (verts.size() < 2) {
        return chain;
    }
    std::vector<Point> dense;
    dense.push_back(verts.front());
    for (std::size_t i = 1; i < verts.size(); ++i) {
        raster_segment(verts[i - 1], verts[i], dense);
    }
    return PolyChain(std::move(dense));
}

Orientation estimate_orientation(const PolyChain& chain) {
    const auto& verts = chain.vertices();
    if (verts.size() < 2) {
        return {0.0};
    }

    // Regression runs in the negated-y frame so that angles follow the
    // usual mathematical convention.
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const Point& v : verts) {
        mean_x += v.x;
        mean_y += -v.y;
    }
    mean_x /= static_cast<double>(verts.size());
    mean_y /= static_cast<double>(verts.size());

    double sxx = 0.0;
    double sxy = 0.0;
    for (const Point& v : verts) {
        const double cx = v.x - mean_x;
        const double cy = -v.y - mean_y;
        sxx += cx * cx;
        sxy += cx * cy;
    }
    if (sxx == 0.0) {
        return {std::numbers::pi / 2.0};  // vertical chain
    }

    double alpha = std::atan(sxy / sxx);
    if (alpha < 0.0) {
        alpha += std::numbers::pi;
    }
    return {alpha};
}

}  // namespace bleval
