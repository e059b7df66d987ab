#include "altmatch/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace altmatch {

Graph::Graph(int num_vertices) {
    if (num_vertices < 1) throw std::invalid_argument("graph needs at least one vertex");
    adj_.resize(num_vertices);
}

Graph::Graph(int num_vertices, const std::vector<Edge>& edges) : Graph(num_vertices) {
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        num_edges_ += static_cast<int>(nbrs.size());
    }
    num_edges_ /= 2;
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= num_vertices()) throw std::invalid_argument("vertex id out of range");
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (int u = 0; u < num_vertices(); ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::min_degree() const {
    int d = std::numeric_limits<int>::max();
    for (const auto& nbrs : adj_) d = std::min(d, static_cast<int>(nbrs.size()));
    return d;
}

Graph::Induced Graph::without_vertices(const std::vector<VertexId>& removed) const {
    std::vector<char> gone(num_vertices(), 0);
    for (VertexId v : removed) {
        check_vertex(v);
        gone[v] = 1;
    }
    std::vector<VertexId> old_ids;
    std::vector<int> new_ids(num_vertices(), -1);
    for (int v = 0; v < num_vertices(); ++v) {
        if (!gone[v]) {
            new_ids[v] = static_cast<int>(old_ids.size());
            old_ids.push_back(v);
        }
    }
    if (old_ids.empty()) throw std::invalid_argument("cannot remove every vertex");
    std::vector<Edge> kept;
    for (const auto& [u, v] : edges())
        if (!gone[u] && !gone[v]) kept.emplace_back(new_ids[u], new_ids[v]);
    return Induced{Graph(static_cast<int>(old_ids.size()), kept), std::move(old_ids),
                   std::move(new_ids)};
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (VertexId v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    b.side.resize(n);
    for (int v = 0; v < n; ++v) b.side[v] = color[v] == 0 ? Side::A : Side::B;
    return b;
}

bool check_bipartition(const Graph& g, const Bipartition& b) {
    if (static_cast<int>(b.side.size()) != g.num_vertices()) return false;
    for (const auto& [u, v] : g.edges())
        if (b.side[u] == b.side[v]) return false;
    return true;
}

bool is_connected(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (VertexId v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

namespace {

// Unit-capacity max-flow on the vertex-split digraph, small enough for
// repeated use across all non-adjacent pairs at desk scale.
class SplitFlow {
public:
    explicit SplitFlow(const Graph& g) : g_(g), n_(g.num_vertices()) {}

    // Max s-t vertex-disjoint path count plus the residual-side min cut.
    int max_flow(VertexId s, VertexId t, std::vector<VertexId>* cut) {
        // node 2v = v_in, 2v+1 = v_out
        const int big = n_ + 1;
        head_.assign(2 * n_, -1);
        to_.clear();
        cap_.clear();
        next_.clear();
        for (int v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
        for (const auto& [u, v] : g_.edges()) {
            add_arc(2 * u + 1, 2 * v, big);
            add_arc(2 * v + 1, 2 * u, big);
        }
        const int src = 2 * s + 1, dst = 2 * t;
        int flow = 0;
        while (augment(src, dst)) ++flow;
        if (cut) {
            std::vector<char> reach(2 * n_, 0);
            reach_from(src, reach);
            cut->clear();
            for (int v = 0; v < n_; ++v)
                if (reach[2 * v] && !reach[2 * v + 1]) cut->push_back(v);
        }
        return flow;
    }

private:
    void add_arc(int from, int to, int cap) {
        to_.push_back(to);
        cap_.push_back(cap);
        next_.push_back(head_[from]);
        head_[from] = static_cast<int>(to_.size()) - 1;
        to_.push_back(from);
        cap_.push_back(0);
        next_.push_back(head_[to]);
        head_[to] = static_cast<int>(to_.size()) - 1;
    }

    bool augment(int src, int dst) {
        std::vector<int> prev_arc(2 * n_, -1);
        std::vector<char> seen(2 * n_, 0);
        std::queue<int> q;
        q.push(src);
        seen[src] = 1;
        while (!q.empty() && !seen[dst]) {
            int u = q.front();
            q.pop();
            for (int a = head_[u]; a != -1; a = next_[a]) {
                if (cap_[a] > 0 && !seen[to_[a]]) {
                    seen[to_[a]] = 1;
                    prev_arc[to_[a]] = a;
                    q.push(to_[a]);
                }
            }
        }
        if (!seen[dst]) return false;
        for (int u = dst; u != src;) {
            int a = prev_arc[u];
            cap_[a] -= 1;
            cap_[a ^ 1] += 1;
            u = to_[a ^ 1];
        }
        return true;
    }

    void reach_from(int src, std::vector<char>& reach) {
        std::vector<int> stack{src};
        reach[src] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int a = head_[u]; a != -1; a = next_[a]) {
                if (cap_[a] > 0 && !reach[to_[a]]) {
                    reach[to_[a]] = 1;
                    stack.push_back(to_[a]);
                }
            }
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> head_, to_, cap_, next_;
};

}  // namespace

Connectivity vertex_connectivity(const Graph& g) {
    const int n = g.num_vertices();
    Connectivity result;
    if (!is_connected(g)) {
        result.kappa = 0;
        return result;  // empty cut: the graph is already disconnected
    }
    SplitFlow flow(g);
    int best = n - 1;
    std::vector<VertexId> best_cut;
    bool found_pair = false;
    for (int s = 0; s < n && best > 0; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            found_pair = true;
            std::vector<VertexId> cut;
            int f = flow.max_flow(s, t, &cut);
            if (f < best) {
                best = f;
                best_cut = std::move(cut);
            }
        }
    }
    if (!found_pair) {
        result.kappa = n - 1;
        result.certificate.complete_graph = true;
        return result;
    }
    result.kappa = best;
    result.certificate.cut = std::move(best_cut);
    return result;
}

}  // namespace altmatch
