#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace altmatch {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // always normalized so first < second

inline Edge make_edge(VertexId u, VertexId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph on vertex ids 0..nu-1 with sorted adjacency lists.
/// Immutable after construction; all member functions are const and safe to
/// call concurrently.
class Graph {
public:
    explicit Graph(int num_vertices);
    Graph(int num_vertices, const std::vector<Edge>& edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return num_edges_; }

    int degree(VertexId v) const;
    const std::vector<VertexId>& neighbors(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    std::vector<Edge> edges() const;  // sorted lexicographically
    int min_degree() const;

    /// Induced subgraph on the complement of `removed`.
    /// old_ids maps new vertex ids to the original ids; new_ids is the inverse
    /// (-1 for removed vertices).
    struct Induced;
    Induced without_vertices(const std::vector<VertexId>& removed) const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    void check_vertex(VertexId v) const;

    std::vector<std::vector<VertexId>> adj_;
    int num_edges_ = 0;
};

struct Graph::Induced {
    Graph graph;
    std::vector<VertexId> old_ids;
    std::vector<int> new_ids;
};

enum class Side : unsigned char { A, B };

struct Bipartition {
    std::vector<Side> side;  // one entry per vertex
};

/// Two-colors the graph if it has no odd cycle. Disconnected graphs get an
/// arbitrary consistent per-component labeling (component roots go to side A).
std::optional<Bipartition> bipartition(const Graph& g);

/// Returns true when the assignment puts every edge across the two sides.
bool check_bipartition(const Graph& g, const Bipartition& b);

struct CutCertificate {
    bool complete_graph = false;    // kappa = nu-1, no cut exists
    std::vector<VertexId> cut;      // deleting these disconnects the graph
};

struct Connectivity {
    int kappa = 0;
    CutCertificate certificate;
};

/// Vertex connectivity with a certificate, via max-flow on the vertex-split
/// digraph minimized over non-adjacent pairs. Complete graphs (including K1)
/// report kappa = nu-1 with the complete-graph marker.
Connectivity vertex_connectivity(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace altmatch
