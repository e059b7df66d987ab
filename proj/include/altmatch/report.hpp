#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "altmatch/alternating.hpp"
#include "altmatch/graph.hpp"
#include "altmatch/matching.hpp"

namespace altmatch {

/// Per-instance verdict of a statement checker. A record with the hypothesis
/// met, the conclusion evaluated and failed, and no exception branch is a
/// counterexample and carries full reproduction data (graph6 and matching).
struct TheoremReport {
    std::string theorem_id;
    bool hypothesis_met = false;
    bool conclusion_evaluated = false;
    bool conclusion_holds = false;
    std::optional<std::string> exception_branch;
    std::optional<AlternatingWalk> witness;
    std::map<std::string, long long> diagnostics;
    bool budget_exceeded = false;

    std::optional<std::string> graph6;           // reproduction payload
    std::vector<Edge> matching_edges;

    bool is_counterexample() const {
        return hypothesis_met && conclusion_evaluated && !conclusion_holds &&
               !exception_branch.has_value() && !budget_exceeded;
    }
};

/// Attaches the reproduction payload (graph6 string + matching edge list).
void attach_reproduction(TheoremReport& report, const Graph& g, const Matching& m);

nlohmann::json walk_to_json(const Matching& m, const AlternatingWalk& w);
nlohmann::json report_to_json(const TheoremReport& report);

/// Renders the same record as readable text (lossless field-per-line dump).
std::string report_to_human(const TheoremReport& report);

}  // namespace altmatch
