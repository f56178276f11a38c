// Synthetic degradation operators: controlled ways of turning GT chains
// into hypothesis chains for characterization tests and fixtures.
#pragma once

#include <cstdint>
#include <utility>

#include "bleval/model.hpp"

namespace bleval {

/// Splits a chain into two parts at the normalized vertex nearest the
/// given arc-length fraction. The parts share the junction vertex, so
/// the union of their vertex sets equals the normalized original.
/// Throws std::invalid_argument for single-vertex chains or a fraction
/// outside (0, 1).
std::pair<PolyChain, PolyChain> split_chain(const PolyChain& chain,
                                            double fraction);

/// Displaces every vertex vertically by a pseudo-random integer offset
/// in [-amplitude, amplitude]. Offsets come from a SplitMix64 stream
/// seeded explicitly, so equal seeds give equal output. Throws
/// std::invalid_argument on negative amplitude.
PolyChain jitter_chain(const PolyChain& chain, int amplitude,
                       std::uint64_t seed);

/// Concatenates a's vertices followed by b's, collapsing a duplicate at
/// the junction. Models undersegmented detector output.
PolyChain merge_chains(const PolyChain& a, const PolyChain& b);

}  // namespace bleval
