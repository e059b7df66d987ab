#pragma once

#include <functional>
#include <vector>

#include "altmatch/graph.hpp"

namespace altmatch {

/// A set of pairwise disjoint edges of a host graph, kept both as a sorted
/// edge list and as a partner array (-1 for uncovered vertices).
class Matching {
public:
    Matching() = default;

    /// Validates that every pair is an edge of g and that no vertex repeats.
    static Matching from_pairs(const Graph& g, const std::vector<Edge>& pairs);
    static Matching from_partner_array(const Graph& g, const std::vector<int>& partner);

    int size() const { return static_cast<int>(edges_.size()); }
    int num_vertices() const { return static_cast<int>(partner_.size()); }
    bool is_perfect() const;
    int partner(VertexId v) const { return partner_[v]; }
    bool covers(VertexId v) const { return partner_[v] != -1; }
    bool contains_edge(VertexId u, VertexId v) const { return partner_[u] == v; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& partners() const { return partner_; }

    bool operator==(const Matching& o) const { return partner_ == o.partner_; }
    bool operator<(const Matching& o) const { return partner_ < o.partner_; }

private:
    std::vector<int> partner_;
    std::vector<Edge> edges_;
};

/// Maximum-cardinality matching via blossom contraction; exact on general
/// (non-bipartite) graphs.
Matching max_matching(const Graph& g);

bool has_perfect_matching(const Graph& g);

/// Calls visit for every perfect matching, in lexicographic order of the
/// partner array. Return false from visit to stop early. Odd order yields
/// nothing.
void enum_perfect_matchings(const Graph& g, const std::function<bool(const Matching&)>& visit);
std::vector<Matching> all_perfect_matchings(const Graph& g);

/// Calls visit for every matching of cardinality exactly k, in lexicographic
/// order of the sorted edge list. k = 0 yields the single empty matching.
void enum_k_matchings(const Graph& g, int k, const std::function<bool(const Matching&)>& visit);
std::vector<Matching> all_k_matchings(const Graph& g, int k);

}  // namespace altmatch
