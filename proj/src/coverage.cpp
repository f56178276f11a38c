#include "bleval/coverage.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace bleval {

namespace {

void check_args(double t, double transition_factor) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("coverage tolerance must be >= 0");
    }
    if (!(transition_factor > 1.0)) {
        throw std::invalid_argument("transition_factor must be > 1");
    }
}

std::int64_t squared_distance(const Point& a, const Point& b) {
    const std::int64_t dx = a.x - b.x;
    const std::int64_t dy = a.y - b.y;
    return dx * dx + dy * dy;
}

std::int64_t min_squared_distance(const Point& a, const PolyChain& q,
                                  std::int64_t best) {
    for (const Point& b : q.vertices()) {
        best = std::min(best, squared_distance(a, b));
        if (best == 0) {
            break;
        }
    }
    return best;
}

// t = 0 degenerates to counting exact hits; it occurs when GT chains
// touch or cross and the interline distance collapses.
double vertex_credit(double d, double t, double transition_factor) {
    if (d <= t) {
        return 1.0;
    }
    const double outer = transition_factor * t;
    if (d <= outer) {
        return (outer - d) / ((transition_factor - 1.0) * t);
    }
    return 0.0;
}

}  // namespace

double cov(const PolyChain& p, const PolyChain& q, double t,
           double transition_factor) {
    check_args(t, transition_factor);
    double credit = 0.0;
    for (const Point& a : p.vertices()) {
        const std::int64_t d2 =
            min_squared_distance(a, q, std::numeric_limits<std::int64_t>::max());
        credit += vertex_credit(std::sqrt(static_cast<double>(d2)), t,
                                transition_factor);
    }
    return credit / static_cast<double>(p.size());
}

double cov_s(const PolyChain& p, const std::vector<PolyChain>& set, double t,
             double transition_factor) {
    check_args(t, transition_factor);
    double credit = 0.0;
    for (const Point& a : p.vertices()) {
        std::int64_t d2 = std::numeric_limits<std::int64_t>::max();
        for (const PolyChain& q : set) {
            d2 = min_squared_distance(a, q, d2);
            if (d2 == 0) {
                break;
            }
        }
        if (d2 != std::numeric_limits<std::int64_t>::max()) {
            credit += vertex_credit(std::sqrt(static_cast<double>(d2)), t,
                                    transition_factor);
        }
    }
    return credit / static_cast<double>(p.size());
}

}  // namespace bleval
