#include "bleval/page_metrics.hpp"

#include <stdexcept>

#include "bleval/coverage.hpp"
#include "bleval/geometry.hpp"
#include "bleval/tolerance.hpp"

namespace bleval {

namespace {

void check_tolerances(std::size_t gt_count, const ToleranceSet& tol) {
    if (tol.values.size() != gt_count) {
        throw std::invalid_argument("tolerance set not aligned with GT chains");
    }
}

std::vector<double> per_gt_coverages(const std::vector<PolyChain>& gt,
                                     const std::vector<PolyChain>& hyp,
                                     const ToleranceSet& tol,
                                     double transition_factor) {
    check_tolerances(gt.size(), tol);
    std::vector<double> coverages;
    coverages.reserve(gt.size());
    for (std::size_t i = 0; i < gt.size(); ++i) {
        coverages.push_back(cov_s(gt[i], hyp, tol.values[i], transition_factor));
    }
    return coverages;
}

}  // namespace

double r_value(const std::vector<double>& per_gt_coverage,
               std::size_t gt_count) {
    if (gt_count == 0) {
        return 1.0;
    }
    double sum = 0.0;
    for (const double c : per_gt_coverage) {
        sum += c;
    }
    return sum / static_cast<double>(gt_count);
}

double r_value(const std::vector<PolyChain>& gt,
               const std::vector<PolyChain>& hyp, const ToleranceSet& tol,
               double transition_factor) {
    return r_value(per_gt_coverages(gt, hyp, tol, transition_factor), gt.size());
}

std::vector<std::vector<double>>
coverage_matrix(const std::vector<PolyChain>& gt,
                const std::vector<PolyChain>& hyp, const ToleranceSet& tol,
                double transition_factor) {
    check_tolerances(gt.size(), tol);
    std::vector<std::vector<double>> matrix(gt.size());
    for (std::size_t i = 0; i < gt.size(); ++i) {
        matrix[i].reserve(hyp.size());
        for (const PolyChain& h : hyp) {
            matrix[i].push_back(cov(h, gt[i], tol.values[i], transition_factor));
        }
    }
    return matrix;
}

std::vector<AlignedPair>
greedy_align(const std::vector<std::vector<double>>& matrix) {
    const std::size_t rows = matrix.size();
    const std::size_t cols = rows > 0 ? matrix[0].size() : 0;
    std::vector<bool> row_used(rows, false);
    std::vector<bool> col_used(cols, false);
    std::vector<AlignedPair> pairs;
    const std::size_t max_pairs = std::min(rows, cols);
    while (pairs.size() < max_pairs) {
        double best = 0.0;
        std::size_t best_row = rows;
        std::size_t best_col = cols;
        for (std::size_t i = 0; i < rows; ++i) {
            if (row_used[i]) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                if (!col_used[j] && matrix[i][j] > best) {
                    best = matrix[i][j];
                    best_row = i;
                    best_col = j;
                }
            }
        }
        if (best_row == rows) {
            break;  // no strictly positive entry left
        }
        pairs.push_back({best_row, best_col, best});
        row_used[best_row] = true;
        col_used[best_col] = true;
    }
    return pairs;
}

double p_value(const std::vector<AlignedPair>& alignment,
               std::size_t hyp_count) {
    if (hyp_count == 0) {
        return 1.0;
    }
    double sum = 0.0;
    for (const AlignedPair& pair : alignment) {
        sum += pair.coverage;
    }
    return sum / static_cast<double>(hyp_count);
}

double f_value(double r, double p) {
    if (r + p == 0.0) {
        return 0.0;
    }
    return 2.0 * r * p / (r + p);
}

PageEval evaluate_page(const Page& page, const EvalConfig& config) {
    config.validate();

    std::vector<PolyChain> gt;
    gt.reserve(page.gt_chains.size());
    for (const PolyChain& chain : page.gt_chains) {
        gt.push_back(normalize_chain(chain));
    }
    std::vector<PolyChain> hyp;
    hyp.reserve(page.hyp_chains.size());
    for (const PolyChain& chain : page.hyp_chains) {
        hyp.push_back(normalize_chain(chain));
    }

    const ToleranceSet tol = compute_tolerances(gt, config);

    PageEval eval;
    eval.id = page.id;
    eval.gt_count = gt.size();
    eval.hyp_count = hyp.size();
    eval.per_gt_coverage =
        per_gt_coverages(gt, hyp, tol, config.transition_factor);
    eval.r_value = r_value(eval.per_gt_coverage, gt.size());
    eval.alignment =
        greedy_align(coverage_matrix(gt, hyp, tol, config.transition_factor));
    eval.p_value = p_value(eval.alignment, hyp.size());
    eval.f_value = f_value(eval.r_value, eval.p_value);
    return eval;
}

}  // namespace bleval
