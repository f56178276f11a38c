// Tolerance-smoothed coverage of one chain by another chain or by a set
// of chains. Operates on normalized chains.
#pragma once

#include <vector>

#include "bleval/model.hpp"

namespace bleval {

/// Fraction of p's vertices that have a vertex of q nearby: a vertex
/// with nearest-vertex distance d earns credit 1 for d <= t, a linearly
/// decaying credit for t < d <= transition_factor * t, and 0 beyond.
/// The summed credit is divided by p's vertex count. Not commutative in
/// p and q. Requires t >= 0; t = 0 (crossing GT chains collapse the
/// interline distance) counts exact vertex hits only.
double cov(const PolyChain& p, const PolyChain& q, double t,
           double transition_factor = 3.0);

/// Extension of cov where the nearest-vertex distance is taken over the
/// union of all vertices of all chains in the set. Empty set -> 0.
double cov_s(const PolyChain& p, const std::vector<PolyChain>& set, double t,
             double transition_factor = 3.0);

}  // namespace bleval
