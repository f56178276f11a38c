// Core domain types shared by every other module: points, polygonal
// chains, pages, evaluation configuration and per-page results.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bleval {

/// Integer pixel coordinate in image space (y grows downward).
struct Point {
    int x = 0;
    int y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Ordered vertex list representing one baseline. Always holds at least
/// one vertex and never two identical consecutive vertices; vertex order
/// is preserved from the source.
class PolyChain {
public:
    /// Builds a chain from raw points, collapsing consecutive duplicates.
    /// Throws std::invalid_argument on empty input.
    explicit PolyChain(std::vector<Point> raw_points);

    const std::vector<Point>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const Point& front() const noexcept { return vertices_.front(); }
    const Point& back() const noexcept { return vertices_.back(); }

    friend bool operator==(const PolyChain&, const PolyChain&) = default;

private:
    std::vector<Point> vertices_;
};

/// Convenience constructor mirroring PolyChain(raw_points).
PolyChain make_chain(std::vector<Point> raw_points);

/// One page of ground-truth and hypothesis baselines. Either list may be
/// empty; both refer to the same source image.
struct Page {
    std::vector<PolyChain> gt_chains;
    std::vector<PolyChain> hyp_chains;
    std::string id;
};

/// Constants and switches controlling an evaluation run.
struct EvalConfig {
    double tolerance_fraction = 0.25;
    double default_distance = 250.0;
    std::optional<double> fixed_tolerance;  // overrides per-line computation
    double transition_factor = 3.0;         // outer bound of the linear ramp

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// Per-GT-baseline tolerance values for one page, index-aligned with the
/// page's GT chains.
struct ToleranceSet {
    std::vector<double> values;
    std::optional<double> inter_line_mean;  // unset in fixed-tolerance mode
};

/// One matched (GT, HY) pair of the partial alignment.
struct AlignedPair {
    std::size_t gt_index = 0;
    std::size_t hyp_index = 0;
    double coverage = 0.0;

    friend bool operator==(const AlignedPair&, const AlignedPair&) = default;
};

/// Per-page evaluation result.
struct PageEval {
    std::string id;
    double r_value = 0.0;
    double p_value = 0.0;
    double f_value = 0.0;
    std::size_t gt_count = 0;
    std::size_t hyp_count = 0;
    std::vector<AlignedPair> alignment;
    std::vector<double> per_gt_coverage;
};

}  // namespace bleval
