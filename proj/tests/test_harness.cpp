#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "altmatch/families.hpp"
#include "altmatch/graph_io.hpp"
#include "altmatch/harness.hpp"
#include "oracles.hpp"

using namespace altmatch;

TEST_SUITE_BEGIN("harness");

TEST_CASE("labeled enumeration counts") {
    CHECK(labeled_graph_count(3) == 8);
    CHECK(labeled_graph_count(4) == 64);
    CHECK(labeled_graph_count(6) == 32768);
    CHECK_THROWS_AS(labeled_graph_count(7), std::invalid_argument);

    std::uint64_t seen = 0;
    for_each_labeled_graph(4, false, [&](const Graph&) { ++seen; });
    CHECK(seen == 64);

    std::uint64_t connected = 0;
    for_each_labeled_graph(4, true, [&](const Graph&) { ++connected; });
    CHECK(connected == 38);  // labeled connected graphs on four vertices
}

TEST_CASE("graph6 ingestion reports malformed lines and keeps going") {
    std::string path = "harness_ingest_test.g6";
    {
        std::ofstream out(path);
        out << to_graph6(complete_graph(4)) << '\n';
        out << "\x01bogus\n";
        out << to_graph6(cycle_graph(5)) << '\n';
    }
    auto file = ingest_graph6(path);
    CHECK(file.graphs.size() == 2);
    REQUIRE(file.issues.size() == 1);
    CHECK(file.issues[0].line == 2);
    std::remove(path.c_str());

    {
        std::ofstream out("harness_empty.g6");
    }
    auto empty = ingest_graph6("harness_empty.g6");
    CHECK(empty.graphs.empty());
    CHECK(empty.issues.empty());
    std::remove("harness_empty.g6");

    CHECK_THROWS(ingest_graph6("does_not_exist.g6"));
}

TEST_CASE("generated two-clique graph round-trips through graph6 with identical labels") {
    auto fam = gen_g1(1);
    Graph back = from_graph6(to_graph6(fam.graph));
    CHECK(back == fam.graph);
}

TEST_CASE("sweep over order 4 finds no counterexamples and balances its counts") {
    SweepConfig cfg;
    cfg.nu_range = {2, 4};
    cfg.theorem_ids = {"thm21", "thm31", "lemma41", "thm42", "cor43"};
    auto summary = run_sweep(cfg);
    CHECK(summary.graphs_seen == 2 + 64);
    CHECK(summary.counterexamples_total == 0);
    CHECK(summary.budget_exceeded_total == 0);
    for (const auto& [id, t] : summary.per_theorem) {
        CHECK(t.hypothesis_met ==
              t.conclusion_held + t.exceptions + t.counterexamples + t.budget_exceeded);
        CHECK(t.counterexamples == 0);
    }
    CHECK(summary.per_theorem.at("thm31").hypothesis_met > 0);
    CHECK(exit_code_for(summary) == 0);
}

TEST_CASE("worker count does not change the outcome") {
    SweepConfig cfg;
    cfg.nu_range = {4, 6};
    cfg.theorem_ids = {"thm31"};
    cfg.workers = 1;
    auto one = run_sweep(cfg);
    cfg.workers = 4;
    auto four = run_sweep(cfg);
    CHECK(one.graphs_seen == four.graphs_seen);
    CHECK(one.graphs_checked == four.graphs_checked);
    CHECK(one.matchings_seen == four.matchings_seen);
    CHECK(one.per_theorem.at("thm31").hypothesis_met == four.per_theorem.at("thm31").hypothesis_met);
    CHECK(one.per_theorem.at("thm31").conclusion_held == four.per_theorem.at("thm31").conclusion_held);
}

TEST_CASE("one-matching-per-graph mode checks exactly one instance per graph") {
    SweepConfig cfg;
    cfg.nu_range = {4};
    cfg.theorem_ids = {"thm31"};
    cfg.all_perfect_matchings = false;
    auto summary = run_sweep(cfg);
    // count connected order-4 graphs with at least one perfect matching
    long long with_pm = 0;
    for_each_labeled_graph(4, true, [&](const Graph& g) {
        if (has_perfect_matching(g)) ++with_pm;
    });
    CHECK(summary.matchings_seen == with_pm);
    CHECK(summary.per_theorem.at("thm31").instances == with_pm);

    cfg.all_perfect_matchings = true;
    auto full = run_sweep(cfg);
    CHECK(full.matchings_seen > with_pm);
}

TEST_CASE("empty theorem list yields a zero summary") {
    SweepConfig cfg;
    cfg.nu_range = {4};
    cfg.theorem_ids = {};
    auto summary = run_sweep(cfg);
    CHECK(summary.per_theorem.empty());
    CHECK(summary.counterexamples_total == 0);
}

TEST_CASE("budget exhaustion is counted and drives the exit code") {
    SweepConfig cfg;
    cfg.nu_range = {6};
    cfg.theorem_ids = {"thm42"};
    cfg.limits.max_expansions = 1;
    auto summary = run_sweep(cfg);
    CHECK(summary.budget_exceeded_total > 0);
    CHECK(summary.counterexamples_total == 0);
    CHECK(exit_code_for(summary) == 3);
}

TEST_CASE("exit code mapping") {
    SweepSummary s;
    CHECK(exit_code_for(s) == 0);
    s.budget_exceeded_total = 2;
    CHECK(exit_code_for(s) == 3);
    s.counterexamples_total = 1;
    CHECK(exit_code_for(s) == 2);
}

TEST_CASE("config validation") {
    SweepConfig bad;
    bad.nu_range = {5};
    bad.theorem_ids = {"thm31"};
    CHECK_THROWS_AS(run_sweep(bad), std::invalid_argument);
    bad.nu_range = {8};
    CHECK_THROWS_AS(run_sweep(bad), std::invalid_argument);
    bad.nu_range = {4};
    bad.workers = 0;
    CHECK_THROWS_AS(run_sweep(bad), std::invalid_argument);
    bad.workers = 1;
    bad.theorem_ids = {"thm99"};
    CHECK_THROWS(run_sweep(bad));
}

TEST_CASE("config json parsing") {
    nlohmann::json j = {{"nu", {2, 4}},
                        {"theorems", {"thm31"}},
                        {"matching_mode", "one"},
                        {"budget", 1234},
                        {"workers", 2}};
    auto cfg = sweep_config_from_json(j);
    CHECK(cfg.nu_range == std::vector<int>{2, 4});
    CHECK_FALSE(cfg.all_perfect_matchings);
    CHECK(cfg.limits.max_expansions == 1234);
    CHECK(cfg.workers == 2);

    nlohmann::json bad = {{"nu", {4}}, {"theorems", {"thm31"}}, {"matching_mode", "some"}};
    CHECK_THROWS(sweep_config_from_json(bad));
}

TEST_CASE("sweeping a graph6 catalog works and conserves cardinality") {
    std::string path = "harness_sweep_cat.g6";
    {
        std::ofstream out(path);
        out << to_graph6(complete_graph(4)) << '\n';
        out << to_graph6(cycle_graph(6)) << '\n';
        out << to_graph6(gen_g1(1).graph) << '\n';
        out << to_graph6(complete_graph(5)) << '\n';  // odd order: counted, no instances
    }
    SweepConfig cfg;
    cfg.graph6_path = path;
    cfg.theorem_ids = {"thm42"};
    auto summary = run_sweep(cfg);
    std::remove(path.c_str());
    CHECK(summary.graphs_seen == 4);
    CHECK(summary.graphs_checked == 4);
    CHECK(summary.matchings_seen == 3 + 2 + 4);
    CHECK(summary.per_theorem.at("thm42").exceptions == 1);  // the jointing matching
    CHECK(summary.counterexamples_total == 0);
}

TEST_SUITE_END();
