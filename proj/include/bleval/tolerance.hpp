// Per-GT-baseline tolerance values, derived from the inter-line geometry
// of a page. All chains passed into this module must already be
// normalized (see geometry.hpp).
#pragma once

#include <optional>
#include <vector>

#include "bleval/geometry.hpp"
#include "bleval/model.hpp"

namespace bleval {

/// Signed projection of (v - origin) onto the orientation direction,
/// computed in the negated-y frame. Shared by eligibility filtering and
/// the minimum-distance search so both see identical arithmetic.
double along_projection(const Point& v, const Point& origin, Orientation o);

/// Magnitude of the component of (v - origin) orthogonal to the
/// orientation direction, in the negated-y frame.
double orth_projection(const Point& v, const Point& origin, Orientation o);

/// Vertices of the other chains whose projections onto g's orientation
/// fall inside the projected span of g, i.e. for which two vertices of g
/// project to opposite sides (sign product <= 0). Pool order (chain
/// order, then vertex order) is preserved.
std::vector<Point> eligible_vertices(const PolyChain& g,
                                     const std::vector<PolyChain>& others,
                                     Orientation alpha);

/// Minimum orthogonal distance from g to the eligible vertex pool: for
/// each eligible vertex the g-vertex with the smallest absolute
/// along-projection is located, and the orthogonal component of that
/// pair is taken; the minimum over all eligible vertices is returned.
/// Empty pool -> nullopt.
std::optional<double> min_distance(const PolyChain& g,
                                   const std::vector<Point>& eligible,
                                   Orientation alpha);

/// Tolerance values for a page of normalized GT chains. With
/// config.fixed_tolerance set, every value equals it and no inter-line
/// mean is computed. Otherwise each chain's minimum inter-line distance
/// d_g is estimated (falling back to config.default_distance when no
/// eligible vertices exist), the mean of the non-default distances is
/// formed, and t_g = tolerance_fraction * min(d_g, mean).
ToleranceSet compute_tolerances(const std::vector<PolyChain>& gt,
                                const EvalConfig& config);

}  // namespace bleval
