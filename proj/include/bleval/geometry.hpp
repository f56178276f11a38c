// Chain normalization (densification to 8-connected vertex sequences)
// and baseline orientation estimation.
#pragma once

#include "bleval/model.hpp"

namespace bleval {

/// Baseline orientation, alpha in [0, pi). The direction vector is
/// (cos alpha, sin alpha) in a coordinate frame with y pointing up,
/// i.e. image y-coordinates are negated before any projection.
struct Orientation {
    double alpha = 0.0;
};

/// Densifies a chain so that every pair of adjacent vertices has
/// Chebyshev distance exactly 1 (Euclidean distance <= sqrt(2)). Each
/// segment is replaced by its integer rasterization; junction duplicates
/// are removed and the original endpoints survive. Single-vertex chains
/// are returned unchanged. Idempotent.
PolyChain normalize_chain(const PolyChain& chain);

/// Least-squares orientation of a chain: OLS regression of -y on x over
/// all vertices, mapped into [0, pi). Degenerate cases: single vertex
/// -> 0, zero x-variance (vertical chain) -> pi/2.
Orientation estimate_orientation(const PolyChain& chain);

}  // namespace bleval
