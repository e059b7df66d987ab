#pragma once

#include <optional>

#include "altmatch/graph.hpp"
#include "altmatch/matching.hpp"
#include "altmatch/report.hpp"

namespace altmatch {

struct KExtendability {
    bool extendable = false;
    /// Lexicographically first k-matching that extends to no perfect matching,
    /// when one exists.
    std::optional<Matching> counterexample;
};

/// True when a k-matching exists and every k-matching is contained in a
/// perfect matching. Checked by deleting the 2k covered vertices and testing
/// perfect-matching existence in the remainder. Requires even order and
/// 0 <= k <= (nu-2)/2.
KExtendability is_k_extendable(const Graph& g, int k);

struct ExtendabilityProfile {
    int max_k = -1;  // -1 when the graph has no perfect matching
    std::optional<int> failing_k;
    std::optional<Matching> witness;  // non-extending matching at failing_k
};

/// Ascending scan of is_k_extendable up to (nu-2)/2.
ExtendabilityProfile extendability_profile(const Graph& g);

/// k-extendable (and connected) implies vertex connectivity >= k+1.
TheoremReport check_theorem_1_1(const Graph& g, int k);

/// k-extendable with k >= nu/4 (and connected) implies bipartite or
/// connectivity >= 2k. k < nu/4 yields a hypothesis-not-met verdict.
TheoremReport check_theorem_1_2(const Graph& g, int k);

}  // namespace altmatch
