#include <doctest.h>

#include <algorithm>
#include <vector>

#include <json.hpp>

#include "bleval/aggregate.hpp"
#include "bleval/page_metrics.hpp"
#include "support.hpp"

using namespace bleval;

namespace {

PageEval page_eval(const std::string& id, double r, double p,
                   std::size_t gt_count, std::size_t hyp_count) {
    PageEval eval;
    eval.id = id;
    eval.r_value = r;
    eval.p_value = p;
    eval.f_value = f_value(r, p);
    eval.gt_count = gt_count;
    eval.hyp_count = hyp_count;
    return eval;
}

}  // namespace

TEST_SUITE("aggregate") {

TEST_CASE("macro averages over two pages") {
    const CorpusEval corpus = aggregate(
        {page_eval("a", 1.0, 1.0, 3, 3), page_eval("b", 0.5, 1.0, 4, 2)});
    CHECK(corpus.mean_r == 0.75);
    CHECK(corpus.mean_p == 1.0);
    CHECK(corpus.f_of_means == f_value(0.75, 1.0));
    CHECK(corpus.f_of_means == doctest::Approx(0.857).epsilon(1e-3));
    CHECK(corpus.total_gt == 7);
    CHECK(corpus.total_hyp == 5);
}

TEST_CASE("a single page aggregates to itself") {
    const CorpusEval corpus = aggregate({page_eval("only", 0.7, 0.9, 5, 6)});
    CHECK(corpus.mean_r == 0.7);
    CHECK(corpus.mean_p == 0.9);
    CHECK(corpus.mean_f == f_value(0.7, 0.9));
    CHECK(corpus.f_of_means == f_value(0.7, 0.9));
}

TEST_CASE("a line-rich failure page cannot dominate") {
    std::vector<PageEval> pages{page_eval("fail", 0.0, 1.0, 100, 0)};
    for (int i = 0; i < 9; ++i) {
        pages.push_back(page_eval("ok" + std::to_string(i), 1.0, 1.0, 10, 10));
    }
    const CorpusEval corpus = aggregate(pages);
    CHECK(corpus.mean_r == 0.9);
}

TEST_CASE("aggregation is permutation invariant") {
    std::vector<PageEval> pages{page_eval("a", 1.0, 0.5, 2, 4),
                                page_eval("b", 0.25, 1.0, 8, 2),
                                page_eval("c", 0.5, 0.75, 4, 4)};
    const CorpusEval forward = aggregate(pages);
    std::reverse(pages.begin(), pages.end());
    const CorpusEval backward = aggregate(pages);
    CHECK(forward.mean_r == backward.mean_r);
    CHECK(forward.mean_p == backward.mean_p);
    CHECK(forward.mean_f == backward.mean_f);
    CHECK(forward.total_gt == backward.total_gt);
}

TEST_CASE("means stay within the per-page extremes") {
    const std::vector<PageEval> pages{page_eval("a", 0.2, 0.9, 1, 1),
                                      page_eval("b", 0.6, 0.4, 1, 1),
                                      page_eval("c", 1.0, 0.7, 1, 1)};
    const CorpusEval corpus = aggregate(pages);
    CHECK(corpus.mean_r >= 0.2);
    CHECK(corpus.mean_r <= 1.0);
    CHECK(corpus.mean_p >= 0.4);
    CHECK(corpus.mean_p <= 0.9);
}

TEST_CASE("an empty corpus is rejected") {
    CHECK_THROWS_AS(aggregate({}), std::invalid_argument);
}

TEST_CASE("csv report layout and escaping") {
    CorpusEval corpus = aggregate({page_eval("plain", 1.0, 1.0, 2, 2),
                                   page_eval("with,comma", 0.5, 0.25, 3, 4)});
    const std::string csv = to_csv_report(corpus);
    CHECK(csv ==
          "page_id,gt_count,hyp_count,r,p,f\n"
          "plain,2,2,1.000000,1.000000,1.000000\n"
          "\"with,comma\",3,4,0.500000,0.250000,0.333333\n");
}

TEST_CASE("json report carries the documented keys") {
    CorpusEval corpus = aggregate({page_eval("p1", 1.0, 0.5, 2, 4)});
    corpus.config.fixed_tolerance = 20.0;
    const auto parsed = nlohmann::json::parse(to_json_report(corpus));

    const auto& summary = parsed.at("summary");
    CHECK(summary.at("mean_r").get<double>() == 1.0);
    CHECK(summary.at("mean_p").get<double>() == 0.5);
    CHECK(summary.at("f_of_means").get<double>() == f_value(1.0, 0.5));
    CHECK(summary.at("mean_f").get<double>() == f_value(1.0, 0.5));
    CHECK(summary.at("pages").get<std::size_t>() == 1);
    CHECK(summary.at("total_gt").get<std::size_t>() == 2);
    CHECK(summary.at("total_hyp").get<std::size_t>() == 4);
    CHECK(summary.at("config").at("fixed_tolerance").get<double>() == 20.0);
    CHECK(summary.at("config").at("tolerance_fraction").get<double>() == 0.25);

    const auto& pages = parsed.at("pages");
    REQUIRE(pages.size() == 1);
    CHECK(pages[0].at("page_id").get<std::string>() == "p1");
    CHECK(pages[0].at("gt_count").get<std::size_t>() == 2);
    CHECK(pages[0].at("r").get<double>() == 1.0);
}

TEST_CASE("reports are byte-deterministic") {
    const CorpusEval corpus = aggregate({page_eval("a", 0.7071, 0.3333, 2, 3),
                                         page_eval("b", 1.0, 1.0, 1, 1)});
    CHECK(to_json_report(corpus) == to_json_report(corpus));
    CHECK(to_csv_report(corpus) == to_csv_report(corpus));

    support::TempDir tmp("bleval-agg");
    write_reports(corpus, tmp.file("r1.json"), tmp.file("r1.csv"));
    write_reports(corpus, tmp.file("r2.json"), tmp.file("r2.csv"));
    CHECK(support::read_file(tmp.file("r1.json")) ==
          support::read_file(tmp.file("r2.json")));
    CHECK(support::read_file(tmp.file("r1.csv")) ==
          support::read_file(tmp.file("r2.csv")));
    CHECK(support::read_file(tmp.file("r1.json")) == to_json_report(corpus));
}

TEST_CASE("unwritable report path is a hard error") {
    const CorpusEval corpus = aggregate({page_eval("a", 1.0, 1.0, 1, 1)});
    CHECK_THROWS_AS(
        write_csv_report(corpus, "/nonexistent-dir-bleval/report.csv"),
        std::runtime_error);
}

}  // TEST_SUITE
