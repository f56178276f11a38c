#include "bleval/aggregate.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "bleval/page_metrics.hpp"

namespace bleval {

CorpusEval aggregate(const std::vector<PageEval>& pages) {
    if (pages.empty()) {
        throw std::invalid_argument("aggregate requires at least one page");
    }
    CorpusEval corpus;
    corpus.pages = pages;
    double sum_r = 0.0;
    double sum_p = 0.0;
    double sum_f = 0.0;
    for (const PageEval& page : pages) {
        sum_r += page.r_value;
        sum_p += page.p_value;
        sum_f += page.f_value;
        corpus.total_gt += page.gt_count;
        corpus.total_hyp += page.hyp_count;
    }
    const double n = static_cast<double>(pages.size());
    corpus.mean_r = sum_r / n;
    corpus.mean_p = sum_p / n;
    corpus.mean_f = sum_f / n;
    corpus.f_of_means = f_value(corpus.mean_r, corpus.mean_p);
    return corpus;
}

namespace {

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\r\n") == std::string::npos) {
        return raw;
    }
    std::string quoted = "\"";
    for (const char c : raw) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write report file: " + path.string());
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed writing report file: " + path.string());
    }
}

}  // namespace

std::string to_json_report(const CorpusEval& corpus) {
    nlohmann::ordered_json config;
    config["tolerance_fraction"] = corpus.config.tolerance_fraction;
    config["default_distance"] = corpus.config.default_distance;
    if (corpus.config.fixed_tolerance) {
        config["fixed_tolerance"] = *corpus.config.fixed_tolerance;
    } else {
        config["fixed_tolerance"] = nullptr;
    }
    config["transition_factor"] = corpus.config.transition_factor;

    nlohmann::ordered_json summary;
    summary["mean_r"] = corpus.mean_r;
    summary["mean_p"] = corpus.mean_p;
    summary["f_of_means"] = corpus.f_of_means;
    summary["mean_f"] = corpus.mean_f;
    summary["pages"] = corpus.pages.size();
    summary["total_gt"] = corpus.total_gt;
    summary["total_hyp"] = corpus.total_hyp;
    summary["config"] = std::move(config);

    nlohmann::ordered_json pages = nlohmann::ordered_json::array();
    for (const PageEval& page : corpus.pages) {
        nlohmann::ordered_json record;
        record["page_id"] = page.id;
        record["gt_count"] = page.gt_count;
        record["hyp_count"] = page.hyp_count;
        record["r"] = page.r_value;
        record["p"] = page.p_value;
        record["f"] = page.f_value;
        pages.push_back(std::move(record));
    }

    nlohmann::ordered_json report;
    report["summary"] = std::move(summary);
    report["pages"] = std::move(pages);
    return report.dump(2) + "\n";
}

std::string to_csv_report(const CorpusEval& corpus) {
    std::string csv = "page_id,gt_count,hyp_count,r,p,f\n";
    for (const PageEval& page : corpus.pages) {
        csv += csv_field(page.id);
        csv += ',';
        csv += std::to_string(page.gt_count);
        csv += ',';
        csv += std::to_string(page.hyp_count);
        csv += ',';
        csv += fixed6(page.r_value);
        csv += ',';
        csv += fixed6(page.p_value);
        csv += ',';
        csv += fixed6(page.f_value);
        csv += '\n';
    }
    return csv;
}

void write_json_report(const CorpusEval& corpus,
                       const std::filesystem::path& json_path) {
    write_text_file(json_path, to_json_report(corpus));
}

void write_csv_report(const CorpusEval& corpus,
                      const std::filesystem::path& csv_path) {
    write_text_file(csv_path, to_csv_report(corpus));
}

void write_reports(const CorpusEval& corpus,
                   const std::filesystem::path& json_path,
                   const std::filesystem::path& csv_path) {
    write_json_report(corpus, json_path);
    write_csv_report(corpus, csv_path);
}

}  // namespace bleval
