#include <doctest.h>

#include <cstdlib>
#include <set>
#include <stdexcept>
#include <vector>

#include "bleval/geometry.hpp"
#include "bleval/page_metrics.hpp"
#include "bleval/perturb.hpp"

using namespace bleval;

namespace {

std::set<std::pair<int, int>> vertex_set(const PolyChain& chain) {
    std::set<std::pair<int, int>> set;
    for (const Point& p : chain.vertices()) {
        set.insert({p.x, p.y});
    }
    return set;
}

}  // namespace

TEST_SUITE("perturb") {

TEST_CASE("splitting a line in half shares the junction vertex") {
    const PolyChain line = make_chain({{0, 0}, {200, 0}});  // 201 dense vertices
    const auto [first, second] = split_chain(line, 0.5);
    CHECK(first.size() == 101);
    CHECK(second.size() == 101);
    CHECK(first.back() == second.front());
    CHECK(first.front() == Point{0, 0});
    CHECK(second.back() == Point{200, 0});

    // The union of the parts is exactly the normalized original.
    auto combined = vertex_set(first);
    combined.merge(vertex_set(second));
    CHECK(combined == vertex_set(normalize_chain(line)));
}

TEST_CASE("a quarter fraction gives a 1:3 vertex split") {
    const PolyChain line = make_chain({{0, 0}, {200, 0}});
    const auto [first, second] = split_chain(line, 0.25);
    CHECK(first.size() == 51);
    CHECK(second.size() == 151);
}

TEST_CASE("single-vertex chains cannot be split") {
    CHECK_THROWS_AS(split_chain(make_chain({{5, 5}}), 0.5),
                    std::invalid_argument);
    CHECK_THROWS_AS(split_chain(make_chain({{0, 0}, {10, 0}}), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(split_chain(make_chain({{0, 0}, {10, 0}}), 1.0),
                    std::invalid_argument);
}

TEST_CASE("evaluating a split detection penalizes only precision") {
    Page page;
    page.gt_chains.push_back(make_chain({{0, 0}, {200, 0}}));
    const auto [first, second] = split_chain(page.gt_chains[0], 0.5);
    page.hyp_chains = {first, second};
    EvalConfig config;
    config.fixed_tolerance = 20.0;
    const PageEval eval = evaluate_page(page, config);
    CHECK(eval.r_value == 1.0);
    CHECK(eval.p_value == 0.5);
}

TEST_CASE("zero amplitude jitter is the identity") {
    const PolyChain chain = make_chain({{0, 0}, {10, 4}, {25, 2}});
    CHECK(jitter_chain(chain, 0, 42) == chain);
}

TEST_CASE("jitter is deterministic in the seed") {
    const PolyChain chain = normalize_chain(make_chain({{0, 0}, {80, 0}}));
    CHECK(jitter_chain(chain, 3, 7) == jitter_chain(chain, 3, 7));
    CHECK(jitter_chain(chain, 3, 7) != jitter_chain(chain, 3, 8));
}

TEST_CASE("jitter moves vertices vertically within the amplitude") {
    const PolyChain chain = normalize_chain(make_chain({{0, 50}, {120, 50}}));
    const int amplitude = 4;
    const PolyChain moved = jitter_chain(chain, amplitude, 99);
    // Strictly increasing x means no collapse, so indices line up.
    REQUIRE(moved.size() == chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        CHECK(moved.vertices()[i].x == chain.vertices()[i].x);
        CHECK(std::abs(moved.vertices()[i].y - chain.vertices()[i].y) <=
              amplitude);
    }
}

TEST_CASE("jitter within the tolerance keeps the page perfect") {
    Page page;
    for (int i = 0; i < 3; ++i) {
        page.gt_chains.push_back(make_chain({{0, i * 100}, {299, i * 100}}));
    }
    for (std::size_t i = 0; i < page.gt_chains.size(); ++i) {
        // Parallel lines 100 apart give t = 25; stay at or below it.
        page.hyp_chains.push_back(
            jitter_chain(normalize_chain(page.gt_chains[i]), 25, 7 + i));
    }
    const PageEval eval = evaluate_page(page, EvalConfig{});
    CHECK(eval.r_value == 1.0);
    CHECK(eval.p_value == 1.0);
    CHECK(eval.f_value == 1.0);
}

TEST_CASE("merging a split pair restores the original vertex run") {
    const PolyChain line = make_chain({{0, 0}, {150, 0}});
    const auto [first, second] = split_chain(line, 0.5);
    CHECK(merge_chains(first, second) == normalize_chain(line));
}

TEST_CASE("merging two column lines hurts precision but not recall") {
    Page page;
    page.gt_chains.push_back(make_chain({{0, 0}, {200, 0}}));
    page.gt_chains.push_back(make_chain({{300, 0}, {500, 0}}));
    page.hyp_chains.push_back(
        merge_chains(page.gt_chains[0], page.gt_chains[1]));
    const PageEval eval = evaluate_page(page, EvalConfig{});
    CHECK(eval.r_value == 1.0);
    CHECK(eval.p_value < 1.0);
    CHECK(eval.p_value > 0.0);
}

TEST_CASE("self-merge collapses only the junction duplicate") {
    const PolyChain chain = make_chain({{0, 0}, {5, 0}});
    const PolyChain doubled = merge_chains(chain, chain);
    CHECK(doubled.vertices() ==
          std::vector<Point>{{0, 0}, {5, 0}, {0, 0}, {5, 0}});

    const PolyChain point = make_chain({{3, 3}});
    CHECK(merge_chains(point, point) == point);
}

}  // TEST_SUITE
