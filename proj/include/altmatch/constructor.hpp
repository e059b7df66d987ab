#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altmatch/alternating.hpp"
#include "altmatch/graph.hpp"
#include "altmatch/matching.hpp"

namespace altmatch {

enum class StepKind {
    /// Append (or prepend) an outside matched edge through a non-matching
    /// edge at a path endpoint.
    extend_tail,
    /// Close the path into a cycle over its own vertex set (endpoint
    /// adjacency, or an endpoint chord pair onto a matched path edge), then
    /// reopen the cycle at an outside matched edge adjacent to it.
    cycle_close_reopen,
    /// Split the path at a removable matched edge into two cycles via the
    /// opposite chord pair, then splice an outside matched edge between them.
    removable_rotation,
};

const char* to_string(StepKind k);

struct ImprovementStep {
    StepKind kind;
    std::vector<Edge> applied_edges;  // the new edges exchanged into the path
    AlternatingWalk result;           // strictly longer closed alternating path
};

/// Tries the three step kinds in order with lowest-index tie-breaking and
/// returns the first applicable lengthening, or nullopt when no cataloged
/// configuration applies. Throws on invalid or already-spanning input.
std::optional<ImprovementStep> improve_once(const Graph& g, const Matching& m,
                                            const AlternatingWalk& path);

/// Confirms that applying the step to `before` produced a valid closed
/// alternating path covering all previous vertices with at least two more.
bool validate_step(const Graph& g, const Matching& m, const AlternatingWalk& before,
                   const ImprovementStep& step, std::string* why = nullptr);

enum class BuildStatus {
    engine_success,     // the move catalog alone reached a spanning path
    fallback_success,   // catalog stalled; the exact searcher found the path
    no_spanning_path,   // exact searcher proved none exists
    budget_exceeded,
};

const char* to_string(BuildStatus s);

struct BuildResult {
    BuildStatus status = BuildStatus::no_spanning_path;
    std::optional<AlternatingWalk> walk;
    std::vector<ImprovementStep> trace;
    std::optional<AlternatingWalk> stalled_path;  // set when the catalog stalled
    std::uint64_t expansions = 0;

    bool succeeded() const {
        return status == BuildStatus::engine_success || status == BuildStatus::fallback_success;
    }
};

/// Grows a closed alternating path from the lexicographically smallest
/// matched edge by repeated improve_once steps; falls back to the exact
/// searcher when the catalog stalls.
BuildResult build_alt_hamilton_path(const Graph& g, const Matching& m, SearchLimits limits = {});

}  // namespace altmatch
