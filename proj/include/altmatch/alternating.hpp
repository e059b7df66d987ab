#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altmatch/graph.hpp"
#include "altmatch/matching.hpp"

namespace altmatch {

enum class WalkShape { open_path, closed_path, cycle };

const char* to_string(WalkShape s);

/// A vertex sequence whose edges alternate between matching and non-matching
/// edges. closed_path starts and ends with matching edges (a single matched
/// edge is the smallest one); open_path starts and ends with non-matching
/// edges; cycle alternates all the way around.
struct AlternatingWalk {
    WalkShape shape = WalkShape::closed_path;
    std::vector<VertexId> vertices;

    /// Number of edges: |vertices|-1 for paths, |vertices| for cycles.
    int length() const {
        return shape == WalkShape::cycle ? static_cast<int>(vertices.size())
                                         : static_cast<int>(vertices.size()) - 1;
    }
    bool operator==(const AlternatingWalk& o) const {
        return shape == o.shape && vertices == o.vertices;
    }
};

/// Independent validity check: reads only g, m and the vertex sequence.
bool validate_walk(const Graph& g, const Matching& m, const AlternatingWalk& w,
                   std::string* why = nullptr);

/// Per-edge matching membership along the walk (cycle includes the closing edge).
std::vector<bool> matched_edge_flags(const Matching& m, const AlternatingWalk& w);

/// Cycles: rotate so the smallest vertex comes first, oriented toward its
/// smaller cycle neighbor. Paths: oriented so the first vertex is smaller
/// than the last.
AlternatingWalk canonical_walk(const AlternatingWalk& w);

/// Contraction of a perfectly matched graph: one node per matched edge with
/// two ports (the edge's endpoints); one arc per non-matching edge. A port
/// cycle that enters each node at one port and leaves at the other expands to
/// an alternating cycle of the host graph.
struct PortGraph {
    struct End {
        int node;
        int port;
        bool operator<(const End& o) const { return node < o.node || (node == o.node && port < o.port); }
    };

    std::vector<std::array<VertexId, 2>> node_ends;        // node -> vertex at port 0 / 1
    std::vector<int> node_of;                              // vertex -> node
    std::vector<int> port_of;                              // vertex -> port
    std::vector<std::array<std::vector<End>, 2>> arcs;     // [node][port] -> sorted ends
    int arc_count = 0;

    int num_nodes() const { return static_cast<int>(node_ends.size()); }
    VertexId vertex_at(int node, int port) const { return node_ends[node][port]; }
};

/// Requires m to be a perfect matching of g.
PortGraph contract(const Graph& g, const Matching& m);

struct SearchLimits {
    std::uint64_t max_expansions = 100'000'000;
};

enum class SearchStatus { found, absent, not_applicable, budget_exceeded };

const char* to_string(SearchStatus s);

struct WalkSearch {
    SearchStatus status = SearchStatus::absent;
    std::optional<AlternatingWalk> walk;
    std::uint64_t expansions = 0;

    bool found() const { return status == SearchStatus::found; }
};

/// Exact decision via exhaustive port-graph backtracking. nu = 2 reports
/// not_applicable (a two-vertex cycle does not exist in a simple graph).
WalkSearch find_alt_hamilton_cycle(const Graph& g, const Matching& m, SearchLimits limits = {});

/// Spanning closed alternating path, exact.
WalkSearch find_closed_alt_hamilton_path(const Graph& g, const Matching& m,
                                         SearchLimits limits = {});

/// Maximum-length alternating cycle via branch and bound; absent when the
/// graph has no alternating cycle at all.
WalkSearch longest_alt_cycle(const Graph& g, const Matching& m, SearchLimits limits = {});

/// Maximum-length closed alternating path; always found within budget since
/// any single matched edge qualifies.
WalkSearch longest_closed_alt_path(const Graph& g, const Matching& m, SearchLimits limits = {});

/// All unordered pairs {x, y} that are the endvertices of some closed
/// alternating path. Uses the exchange argument: such a path exists exactly
/// when G - x - y still has a perfect matching, so the set does not depend on
/// which perfect matching is supplied. Every matched pair is included.
std::vector<Edge> alt_reachable_pairs(const Graph& g, const Matching& m);

/// Edge-count bound between the non-matching vertex pairs of an alternating
/// cycle and the endvertices of a closed alternating path disjoint from it:
/// at most 1 edge per pair when g is bipartite, at most 2 otherwise.
/// Throws when cycle/outside_path are malformed or overlap.
bool validate_lemma13(const Graph& g, const Matching& m, const AlternatingWalk& cycle,
                      const AlternatingWalk& outside_path);

/// Same bound for the non-matching vertex pairs interior to a closed
/// alternating path versus an outside closed alternating path.
bool validate_lemma14(const Graph& g, const Matching& m, const AlternatingWalk& path,
                      const AlternatingWalk& outside_path);

}  // namespace altmatch
