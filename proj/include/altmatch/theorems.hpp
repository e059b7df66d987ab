#pragma once

#include <vector>

#include "altmatch/alternating.hpp"
#include "altmatch/graph.hpp"
#include "altmatch/matching.hpp"
#include "altmatch/report.hpp"

namespace altmatch {

struct CheckOptions {
    SearchLimits limits{};
    /// Run the conclusion search even when the hypothesis fails, to collect
    /// boundary data.
    bool always_run_conclusion = false;
    /// Attach graph6 + matching reproduction data to counterexample records.
    bool attach_payload = true;
};

/// Bipartite degree-sum condition: every cross-part pair satisfies
/// d(x)+d(y) >= nu/2+2 implies an alternating Hamilton cycle exists.
TheoremReport check_thm21(const Graph& g, const Matching& m, const CheckOptions& opts = {});

/// Degree-sum condition over alternating-reachable pairs: d(x)+d(y) >= nu-1
/// for every pair joined by a closed alternating path implies a spanning
/// closed alternating path exists.
TheoremReport check_thm31(const Graph& g, const Matching& m, const CheckOptions& opts = {});

/// Connectivity >= nu/2 implies an alternating cycle of length >= nu/2+1.
TheoremReport check_lemma41(const Graph& g, const Matching& m, const CheckOptions& opts = {});

/// Connectivity >= nu/2 implies an alternating Hamilton cycle, except for the
/// two-clique family with its jointing matching (exception branch
/// "G1-jointing").
TheoremReport check_thm42(const Graph& g, const Matching& m, const CheckOptions& opts = {});

/// k-extendable with k >= nu/4 implies an alternating Hamilton cycle for
/// every perfect matching; no exception branch.
TheoremReport check_corollary43(const Graph& g, int k, const Matching& m,
                                const CheckOptions& opts = {});

/// Exploratory probe: k independent edges in a k-connected graph with k even
/// or g minus those edges connected; searches for an ordinary cycle through
/// all of them. The witness cycle is not an alternating walk.
TheoremReport probe_lovasz_woodall(const Graph& g, const std::vector<Edge>& l_edges,
                                   const CheckOptions& opts = {});

/// The thm31 hypothesis does not depend on which perfect matching is chosen;
/// this helper evaluates it once per graph (assumes a perfect matching exists).
bool thm31_hypothesis(const Graph& g);

}  // namespace altmatch
