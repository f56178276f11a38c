// Multi-page aggregation (page-wise macro averaging) and report output.
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "bleval/model.hpp"

namespace bleval {

/// Corpus-level evaluation result. Each page contributes with equal
/// weight regardless of how many lines it carries.
struct CorpusEval {
    std::vector<PageEval> pages;
    double mean_r = 0.0;
    double mean_p = 0.0;
    double f_of_means = 0.0;  // harmonic mean of mean_r and mean_p
    double mean_f = 0.0;      // mean of the per-page F values
    std::size_t total_gt = 0;
    std::size_t total_hyp = 0;
    EvalConfig config;  // echoed into reports
};

/// Unweighted macro averages over per-page results. Throws
/// std::invalid_argument on an empty page list.
CorpusEval aggregate(const std::vector<PageEval>& pages);

/// JSON report: {"summary": {mean_r, mean_p, f_of_means, mean_f, pages,
/// total_gt, total_hyp, config}, "pages": [...]}. Deterministic bytes
/// for identical inputs.
std::string to_json_report(const CorpusEval& corpus);

/// CSV report: header "page_id,gt_count,hyp_count,r,p,f", one row per
/// page, LF line endings, 6-decimal fixed formatting, fields quoted
/// where CSV requires it. Deterministic bytes for identical inputs.
std::string to_csv_report(const CorpusEval& corpus);

void write_json_report(const CorpusEval& corpus,
                       const std::filesystem::path& json_path);
void write_csv_report(const CorpusEval& corpus,
                      const std::filesystem::path& csv_path);

/// Writes both report files.
void write_reports(const CorpusEval& corpus,
                   const std::filesystem::path& json_path,
                   const std::filesystem::path& csv_path);

}  // namespace bleval
