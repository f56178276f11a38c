// Per-page R, P and F computation with greedy coverage-matrix alignment.
#pragma once

#include <cstddef>
#include <vector>

#include "bleval/model.hpp"

namespace bleval {

/// Mean coverage of the GT chains by the full hypothesis set, one
/// tolerance per GT chain. No alignment is enforced, so oversegmented
/// output still recalls well. Empty GT -> 1 (nothing to recall).
double r_value(const std::vector<PolyChain>& gt,
               const std::vector<PolyChain>& hyp, const ToleranceSet& tol,
               double transition_factor = 3.0);

/// R from precomputed per-GT coverages, identical arithmetic to the
/// chain-level overload.
double r_value(const std::vector<double>& per_gt_coverage,
               std::size_t gt_count);

/// Coverage matrix with one row per GT chain and one column per HY
/// chain; entry (i, j) is the coverage of hyp[j] by gt[i] under gt[i]'s
/// tolerance.
std::vector<std::vector<double>>
coverage_matrix(const std::vector<PolyChain>& gt,
                const std::vector<PolyChain>& hyp, const ToleranceSet& tol,
                double transition_factor = 3.0);

/// Greedy partial matching over a coverage matrix: repeatedly takes the
/// maximal remaining entry (ties -> lowest GT index, then lowest HY
/// index), records the pair and removes its row and column. Stops when
/// no strictly positive entry remains.
std::vector<AlignedPair>
greedy_align(const std::vector<std::vector<double>>& matrix);

/// Summed aligned coverage divided by the hypothesis count; splits,
/// merges and spurious detections all dilute it. No hypotheses -> 1
/// (no false positives).
double p_value(const std::vector<AlignedPair>& alignment,
               std::size_t hyp_count);

/// Harmonic mean of R and P; 0 when both are 0.
double f_value(double r, double p);

/// Full per-page pipeline: normalize all chains, derive tolerances from
/// the GT side, then compute R, the coverage matrix, the greedy
/// alignment, P and F.
PageEval evaluate_page(const Page& page, const EvalConfig& config);

}  // namespace bleval
