#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "altmatch/graph.hpp"
#include "altmatch/report.hpp"
#include "altmatch/theorems.hpp"

namespace altmatch {

/// Streams all 2^(nu(nu-1)/2) labeled simple graphs of the given order.
/// Refused for nu > 6 (use a graph6 catalog instead).
void for_each_labeled_graph(int nu, bool connected_only,
                            const std::function<void(const Graph&)>& visit);
std::uint64_t labeled_graph_count(int nu);

struct Graph6File {
    struct Issue {
        int line;  // 1-based
        std::string message;
    };
    std::vector<Graph> graphs;
    std::vector<Issue> issues;  // malformed lines, reported but not fatal
};

/// Decodes one graph per line; malformed lines are collected with their line
/// numbers and the stream continues. Throws only when the file is unreadable.
Graph6File ingest_graph6(const std::string& path);

struct SweepConfig {
    std::vector<int> nu_range;           // even orders; used for the builtin source
    std::string graph6_path;             // when set, overrides the builtin source
    std::vector<std::string> theorem_ids;  // thm21 thm31 lemma41 thm42 cor43
    bool all_perfect_matchings = true;   // otherwise only the first one
    SearchLimits limits{};
    int workers = 1;
    bool attach_payloads = true;
};

struct TheoremTally {
    long long instances = 0;       // (graph, matching) pairs checked
    long long hypothesis_met = 0;
    long long conclusion_held = 0;  // among hypothesis-met records
    long long exceptions = 0;
    long long counterexamples = 0;
    long long budget_exceeded = 0;
};

struct SweepSummary {
    long long graphs_seen = 0;      // source cardinality
    long long graphs_checked = 0;   // connected survivors
    long long matchings_seen = 0;
    std::map<std::string, TheoremTally> per_theorem;
    std::vector<TheoremReport> counterexamples;
    long long counterexamples_total = 0;
    long long budget_exceeded_total = 0;
    double wall_time_seconds = 0;
};

/// Deterministic given the config and source; workers partition the graph
/// stream by index ranges and the merge is order-independent.
SweepSummary run_sweep(const SweepConfig& cfg);

SweepConfig sweep_config_from_json(const nlohmann::json& j);
SweepConfig read_sweep_config(const std::string& path);
nlohmann::json summary_to_json(const SweepSummary& summary);

/// 0 = clean, 2 = counterexample found, 3 = budget exceeded with none.
int exit_code_for(const SweepSummary& summary);

/// Re-runs the checker recorded in a persisted counterexample/report payload
/// (graph6 + matching + theorem id); used for round-trip verification.
TheoremReport reverify(const nlohmann::json& record, const CheckOptions& opts = {});

}  // namespace altmatch
