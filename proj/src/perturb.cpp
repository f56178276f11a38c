#include "bleval/perturb.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bleval/geometry.hpp"

namespace bleval {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::pair<PolyChain, PolyChain> split_chain(const PolyChain& chain,
                                            double fraction) {
    if (chain.size() < 2) {
        throw std::invalid_argument("cannot split a single-vertex chain");
    }
    if (!(fraction > 0.0) || !(fraction < 1.0)) {
        throw std::invalid_argument("split fraction must be in (0, 1)");
    }

    const PolyChain dense = normalize_chain(chain);
    const auto& verts = dense.vertices();

    // Cumulative arc length, then the vertex nearest fraction * total.
    std::vector<double> cumulative(verts.size(), 0.0);
    for (std::size_t i = 1; i < verts.size(); ++i) {
        const double dx = verts[i].x - verts[i - 1].x;
        const double dy = verts[i].y - verts[i - 1].y;
        cumulative[i] = cumulative[i - 1] + std::sqrt(dx * dx + dy * dy);
    }
    const double target = fraction * cumulative.back();
    std::size_t split_at = 0;
    double best = std::abs(cumulative[0] - target);
    for (std::size_t i = 1; i < verts.size(); ++i) {
        const double gap = std::abs(cumulative[i] - target);
        if (gap < best) {
            best = gap;
            split_at = i;
        }
    }

    std::vector<Point> first(verts.begin(), verts.begin() + split_at + 1);
    std::vector<Point> second(verts.begin() + split_at, verts.end());
    return {PolyChain(std::move(first)), PolyChain(std::move(second))};
}

PolyChain jitter_chain(const PolyChain& chain, int amplitude,
                       std::uint64_t seed) {
    if (amplitude < 0) {
        throw std::invalid_argument("jitter amplitude must be >= 0");
    }
    const std::uint64_t range = 2ULL * static_cast<std::uint64_t>(amplitude) + 1;
    std::uint64_t state = seed;
    std::vector<Point> moved;
    moved.reserve(chain.size());
    for (const Point& v : chain.vertices()) {
        const int offset =
            static_cast<int>(splitmix64(state) % range) - amplitude;
        moved.push_back({v.x, v.y + offset});
    }
    return PolyChain(std::move(moved));
}

PolyChain merge_chains(const PolyChain& a, const PolyChain& b) {
    std::vector<Point> joined;
    joined.reserve(a.size() + b.size());
    joined.insert(joined.end(), a.vertices().begin(), a.vertices().end());
    joined.insert(joined.end(), b.vertices().begin(), b.vertices().end());
    return PolyChain(std::move(joined));
}

}  // namespace bleval
