#include "bleval/tolerance.hpp"

#include <cmath>
#include <limits>

namespace bleval {

namespace {

// cos/sin of the orientation, hoisted out of the per-pair loops.
struct Frame {
    double c;
    double s;

    explicit Frame(Orientation o) : c(std::cos(o.alpha)), s(std::sin(o.alpha)) {}
};

// Negated-y frame: o = (cos a, sin a), delta = (dx, -dy).
double along(const Point& v, const Point& origin, const Frame& f) {
    return (v.x - origin.x) * f.c - (v.y - origin.y) * f.s;
}

double orth(const Point& v, const Point& origin, const Frame& f) {
    return std::abs((v.x - origin.x) * f.s + (v.y - origin.y) * f.c);
}

bool straddles_span(const Point& v, const PolyChain& g, const Frame& f) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const Point& vg : g.vertices()) {
        const double proj = along(v, vg, f);
        lo = std::min(lo, proj);
        hi = std::max(hi, proj);
        if (lo <= 0.0 && 0.0 <= hi) {
            return true;
        }
    }
    return false;
}

void append_eligible(const PolyChain& g, const PolyChain& other, const Frame& f,
                     std::vector<Point>& out) {
    for (const Point& v : other.vertices()) {
        if (straddles_span(v, g, f)) {
            out.push_back(v);
        }
    }
}

}  // namespace

double along_projection(const Point& v, const Point& origin, Orientation o) {
    return along(v, origin, Frame(o));
}

double orth_projection(const Point& v, const Point& origin, Orientation o) {
    return orth(v, origin, Frame(o));
}

std::vector<Point> eligible_vertices(const PolyChain& g,
                                     const std::vector<PolyChain>& others,
                                     Orientation alpha) {
    const Frame f(alpha);
    std::vector<Point> eligible;
    for (const PolyChain& other : others) {
        append_eligible(g, other, f, eligible);
    }
    return eligible;
}

std::optional<double> min_distance(const PolyChain& g,
                                   const std::vector<Point>& eligible,
                                   Orientation alpha) {
    if (eligible.empty()) {
        return std::nullopt;
    }
    const Frame f(alpha);
    double best = std::numeric_limits<double>::infinity();
    for (const Point& v : eligible) {
        // v_m(v): the g-vertex with minimal absolute along-projection,
        // first index winning ties. A zero projection cannot be beaten.
        double best_abs = std::numeric_limits<double>::infinity();
        Point nearest{};
        for (const Point& vg : g.vertices()) {
            const double a = std::abs(along(v, vg, f));
            if (a < best_abs) {
                best_abs = a;
                nearest = vg;
                if (best_abs == 0.0) {
                    break;
                }
            }
        }
        best = std::min(best, orth(v, nearest, f));
    }
    return best;
}

ToleranceSet compute_tolerances(const std::vector<PolyChain>& gt,
                                const EvalConfig& config) {
    config.validate();
    ToleranceSet result;
    if (gt.empty()) {
        return result;
    }
    if (config.fixed_tolerance) {
        result.values.assign(gt.size(), *config.fixed_tolerance);
        return result;
    }

    const std::size_t n = gt.size();
    std::vector<double> distances(n, 0.0);
    std::vector<bool> is_default(n, false);
    std::vector<Point> eligible;
    for (std::size_t i = 0; i < n; ++i) {
        const Orientation alpha = estimate_orientation(gt[i]);
        const Frame f(alpha);
        eligible.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                append_eligible(gt[i], gt[j], f, eligible);
            }
        }
        if (const auto d = min_distance(gt[i], eligible, alpha)) {
            distances[i] = *d;
        } else {
            distances[i] = config.default_distance;
            is_default[i] = true;
        }
    }

    // Mean over the chains whose distance was actually measured; pages
    // where every chain is isolated fall back to the default distance.
    double sum = 0.0;
    std::size_t measured = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_default[i]) {
            sum += distances[i];
            ++measured;
        }
    }
    const double mean =
        measured > 0 ? sum / static_cast<double>(measured) : config.default_distance;

    result.inter_line_mean = mean;
    result.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        result.values[i] = config.tolerance_fraction * std::min(distances[i], mean);
    }
    return result;
}

}  // namespace bleval
