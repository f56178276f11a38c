#include "bleval/model.hpp"

#include <stdexcept>
#include <utility>

namespace bleval {

PolyChain::PolyChain(std::vector<Point> raw_points) {
    if (raw_points.empty()) {
        throw std::invalid_argument("polygonal chain needs at least one vertex");
    }
    vertices_.reserve(raw_points.size());
    for (const Point& p : raw_points) {
        if (vertices_.empty() || !(vertices_.back() == p)) {
            vertices_.push_back(p);
        }
    }
}

PolyChain make_chain(std::vector<Point> raw_points) {
    return PolyChain(std::move(raw_points));
}

void EvalConfig::validate() const {
    if (!(tolerance_fraction > 0.0) || tolerance_fraction > 1.0) {
        throw std::invalid_argument("tolerance_fraction must be in (0, 1]");
    }
    if (!(default_distance > 0.0)) {
        throw std::invalid_argument("default_distance must be > 0");
    }
    if (fixed_tolerance && !(*fixed_tolerance > 0.0)) {
        throw std::invalid_argument("fixed_tolerance must be > 0 when set");
    }
    if (!(transition_factor > 1.0)) {
        throw std::invalid_argument("transition_factor must be > 1");
    }
}

}  // namespace bleval
