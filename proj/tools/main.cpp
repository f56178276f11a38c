// Command-line front end: evaluation of HY baseline files against GT,
// synthetic perturbation of baseline files, and GT inspection.
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bleval/aggregate.hpp"
#include "bleval/geometry.hpp"
#include "bleval/ingest.hpp"
#include "bleval/page_metrics.hpp"
#include "bleval/perturb.hpp"
#include "bleval/tolerance.hpp"

namespace {

using namespace bleval;

struct EvalOptions {
    std::string gt_list;
    std::string hyp_list;
    std::string format;  // "", "pagexml" or "plain"
    double fixed_tol = 0.0;
    bool fixed_tol_set = false;
    std::string json_path;
    std::string csv_path;
    unsigned jobs = 1;
};

struct PerturbOptions {
    std::string input;
    std::string op;
    double param = 0.0;
    bool param_set = false;
    std::uint64_t seed = 0;
    std::string output;
};

struct LoadedPage {
    Page page;
    ParseStats gt_stats;
    ParseStats hyp_stats;
};

std::optional<BaselineFormat> forced_format(const std::string& format) {
    if (format.empty()) {
        return std::nullopt;
    }
    return format == "pagexml" ? BaselineFormat::page_xml : BaselineFormat::plain;
}

LoadedPage load_page(const std::filesystem::path& gt_path,
                     const std::filesystem::path& hyp_path,
                     std::optional<BaselineFormat> format) {
    LoadedPage loaded;
    loaded.page.gt_chains = read_baseline_file(
        gt_path, format ? *format : detect_format(gt_path), &loaded.gt_stats);
    loaded.page.hyp_chains = read_baseline_file(
        hyp_path, format ? *format : detect_format(hyp_path), &loaded.hyp_stats);
    loaded.page.id = gt_path.string();
    return loaded;
}

// Evaluates all pairs with a fixed-size worker pool. Results are stored
// by index, so the reduction order never depends on scheduling.
std::vector<PageEval> evaluate_pairs(const FilePairList& pairs,
                                     const EvalConfig& config,
                                     std::optional<BaselineFormat> format,
                                     unsigned jobs) {
    const std::size_t n = pairs.pairs.size();
    std::vector<PageEval> results(n);
    std::vector<ParseStats> stats(n);
    std::vector<std::exception_ptr> errors(n);

    const auto work = [&](std::size_t i) {
        try {
            LoadedPage loaded =
                load_page(pairs.pairs[i].first, pairs.pairs[i].second, format);
            stats[i].textlines_without_baseline =
                loaded.gt_stats.textlines_without_baseline +
                loaded.hyp_stats.textlines_without_baseline;
            results[i] = evaluate_page(loaded.page, config);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };

    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            work(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const unsigned worker_count =
            static_cast<unsigned>(std::min<std::size_t>(jobs, n));
        workers.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n;
                     i = next.fetch_add(1)) {
                    work(i);
                }
            });
        }
        for (std::thread& worker : workers) {
            worker.join();
        }
    }

    // First failing page (in input order) aborts the run; a silently
    // dropped page would corrupt the macro averages.
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (stats[i].textlines_without_baseline > 0) {
            std::cerr << "warning: " << stats[i].textlines_without_baseline
                      << " TextLine element(s) without a Baseline in "
                      << pairs.pairs[i].first.string() << " / "
                      << pairs.pairs[i].second.string() << "\n";
        }
    }
    return results;
}

int run_eval(const EvalOptions& opts) {
    EvalConfig config;
    if (opts.fixed_tol_set) {
        config.fixed_tolerance = opts.fixed_tol;
    }
    config.validate();

    const FilePairList pairs = load_pairs(opts.gt_list, opts.hyp_list);
    const std::vector<PageEval> page_evals =
        evaluate_pairs(pairs, config, forced_format(opts.format), opts.jobs);

    CorpusEval corpus = aggregate(page_evals);
    corpus.config = config;

    std::printf("R %.4f\nP %.4f\nF %.4f\n", corpus.mean_r, corpus.mean_p,
                corpus.f_of_means);
    if (!opts.json_path.empty()) {
        write_json_report(corpus, opts.json_path);
    }
    if (!opts.csv_path.empty()) {
        write_csv_report(corpus, opts.csv_path);
    }
    return 0;
}

int run_perturb(const PerturbOptions& opts) {
    const std::filesystem::path input(opts.input);
    const std::vector<PolyChain> chains =
        read_baseline_file(input, detect_format(input));

    std::vector<PolyChain> out;
    if (opts.op == "split") {
        const double fraction = opts.param_set ? opts.param : 0.5;
        for (const PolyChain& chain : chains) {
            auto [first, second] = split_chain(chain, fraction);
            out.push_back(std::move(first));
            out.push_back(std::move(second));
        }
    } else if (opts.op == "jitter") {
        const int amplitude =
            opts.param_set ? static_cast<int>(std::llround(opts.param)) : 0;
        for (std::size_t i = 0; i < chains.size(); ++i) {
            out.push_back(jitter_chain(chains[i], amplitude, opts.seed + i));
        }
    } else {  // merge
        for (std::size_t i = 0; i + 1 < chains.size(); i += 2) {
            out.push_back(merge_chains(chains[i], chains[i + 1]));
        }
        if (chains.size() % 2 == 1) {
            out.push_back(chains.back());
        }
    }

    std::ofstream sink(opts.output, std::ios::binary);
    if (!sink) {
        throw std::runtime_error("cannot write output file: " + opts.output);
    }
    sink << to_plain(out);
    if (!sink) {
        throw std::runtime_error("failed writing output file: " + opts.output);
    }
    return 0;
}

int run_inspect(const std::string& input) {
    const std::filesystem::path path(input);
    ParseStats stats;
    const std::vector<PolyChain> chains =
        read_baseline_file(path, detect_format(path), &stats);
    if (stats.textlines_without_baseline > 0) {
        std::cerr << "warning: " << stats.textlines_without_baseline
                  << " TextLine element(s) without a Baseline in "
                  << path.string() << "\n";
    }

    std::vector<PolyChain> normalized;
    normalized.reserve(chains.size());
    for (const PolyChain& chain : chains) {
        normalized.push_back(normalize_chain(chain));
    }
    const ToleranceSet tol = compute_tolerances(normalized, EvalConfig{});

    for (std::size_t i = 0; i < chains.size(); ++i) {
        std::printf("baseline %zu: vertices %zu, normalized %zu, tolerance %.2f\n",
                    i, chains[i].size(), normalized[i].size(), tol.values[i]);
    }
    if (tol.inter_line_mean) {
        std::printf("baselines %zu, inter-line mean %.2f\n", chains.size(),
                    *tol.inter_line_mean);
    } else {
        std::printf("baselines %zu\n", chains.size());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tolerance-aware R/P/F evaluation of baseline detection results"};
    app.require_subcommand(1);

    EvalOptions eval_opts;
    CLI::App* eval_cmd =
        app.add_subcommand("eval", "Evaluate HY baselines against GT baselines");
    eval_cmd->add_option("--gt", eval_opts.gt_list, "GT list file (one path per line)")
        ->required();
    eval_cmd->add_option("--hyp", eval_opts.hyp_list, "HY list file (one path per line)")
        ->required();
    eval_cmd
        ->add_option("--format", eval_opts.format,
                     "Force input format instead of extension detection")
        ->check(CLI::IsMember({"pagexml", "plain"}));
    eval_cmd
        ->add_option("--fixed-tol", eval_opts.fixed_tol,
                     "Fixed tolerance in pixels, overriding per-line values")
        ->check(CLI::PositiveNumber);
    eval_cmd->add_option("--json", eval_opts.json_path, "Write a JSON report here");
    eval_cmd->add_option("--csv", eval_opts.csv_path, "Write a CSV report here");
    eval_cmd
        ->add_option("--jobs", eval_opts.jobs,
                     "Worker threads for page evaluation (default 1)")
        ->check(CLI::PositiveNumber);

    PerturbOptions perturb_opts;
    CLI::App* perturb_cmd = app.add_subcommand(
        "perturb", "Apply a degradation operator to every baseline of a file");
    perturb_cmd->add_option("--in", perturb_opts.input, "Input baseline file")
        ->required();
    perturb_cmd->add_option("--op", perturb_opts.op, "Operator to apply")
        ->required()
        ->check(CLI::IsMember({"split", "jitter", "merge"}));
    perturb_cmd->add_option("--param", perturb_opts.param,
                            "split: fraction in (0,1); jitter: amplitude in px");
    perturb_cmd->add_option("--seed", perturb_opts.seed, "Jitter seed (default 0)");
    perturb_cmd
        ->add_option("--out", perturb_opts.output, "Output file (plain format)")
        ->required();

    std::string inspect_input;
    CLI::App* inspect_cmd = app.add_subcommand(
        "inspect", "Print vertex counts and tolerances for one GT file");
    inspect_cmd->add_option("--in", inspect_input, "Input GT baseline file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }
    perturb_opts.param_set = perturb_cmd->count("--param") > 0;
    eval_opts.fixed_tol_set = eval_cmd->count("--fixed-tol") > 0;

    try {
        if (*eval_cmd) {
            return run_eval(eval_opts);
        }
        if (*perturb_cmd) {
            return run_perturb(perturb_opts);
        }
        return run_inspect(inspect_input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
