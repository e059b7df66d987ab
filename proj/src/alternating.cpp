#include "altmatch/alternating.hpp"

#include <algorithm>
#include <stdexcept>

namespace altmatch {

const char* to_string(WalkShape s) {
    switch (s) {
        case WalkShape::open_path: return "open_path";
        case WalkShape::closed_path: return "closed_path";
        case WalkShape::cycle: return "cycle";
    }
    return "?";
}

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::absent: return "absent";
        case SearchStatus::not_applicable: return "not_applicable";
        case SearchStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

std::vector<bool> matched_edge_flags(const Matching& m, const AlternatingWalk& w) {
    const auto& vs = w.vertices;
    const int n = static_cast<int>(vs.size());
    std::vector<bool> flags;
    if (n == 0) return flags;
    const int edge_count = w.shape == WalkShape::cycle ? n : n - 1;
    flags.reserve(edge_count);
    for (int i = 0; i < edge_count; ++i)
        flags.push_back(m.contains_edge(vs[i], vs[(i + 1) % n]));
    return flags;
}

bool validate_walk(const Graph& g, const Matching& m, const AlternatingWalk& w,
                   std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const auto& vs = w.vertices;
    const int n = static_cast<int>(vs.size());
    if (n < 2) return fail("walk needs at least two vertices");
    std::vector<char> seen(g.num_vertices(), 0);
    for (VertexId v : vs) {
        if (v < 0 || v >= g.num_vertices()) return fail("vertex out of range");
        if (seen[v]) return fail("repeated vertex");
        seen[v] = 1;
    }
    const int edge_count = w.shape == WalkShape::cycle ? n : n - 1;
    for (int i = 0; i < edge_count; ++i)
        if (!g.has_edge(vs[i], vs[(i + 1) % n])) return fail("missing graph edge");
    const std::vector<bool> flags = matched_edge_flags(m, w);
    switch (w.shape) {
        case WalkShape::cycle: {
            if (n < 4 || n % 2 != 0) return fail("cycle length must be even and at least 4");
            for (int i = 0; i < edge_count; ++i)
                if (flags[i] == flags[(i + 1) % edge_count]) return fail("cycle does not alternate");
            break;
        }
        case WalkShape::closed_path: {
            if (n % 2 != 0) return fail("closed path must have even order");
            for (int i = 0; i < edge_count; ++i)
                if (flags[i] != (i % 2 == 0)) return fail("closed path must alternate starting and ending matched");
            break;
        }
        case WalkShape::open_path: {
            if (n % 2 != 0) return fail("open path must have even order");
            for (int i = 0; i < edge_count; ++i)
                if (flags[i] != (i % 2 == 1)) return fail("open path must alternate starting and ending unmatched");
            break;
        }
    }
    return true;
}

AlternatingWalk canonical_walk(const AlternatingWalk& w) {
    AlternatingWalk out = w;
    auto& vs = out.vertices;
    const int n = static_cast<int>(vs.size());
    if (n == 0) return out;
    if (out.shape == WalkShape::cycle) {
        int pos = static_cast<int>(std::min_element(vs.begin(), vs.end()) - vs.begin());
        VertexId next = vs[(pos + 1) % n];
        VertexId prev = vs[(pos + n - 1) % n];
        std::vector<VertexId> rotated;
        rotated.reserve(n);
        if (next <= prev) {
            for (int i = 0; i < n; ++i) rotated.push_back(vs[(pos + i) % n]);
        } else {
            for (int i = 0; i < n; ++i) rotated.push_back(vs[(pos + n - i) % n]);
        }
        vs = std::move(rotated);
    } else if (vs.front() > vs.back()) {
        std::reverse(vs.begin(), vs.end());
    }
    return out;
}

PortGraph contract(const Graph& g, const Matching& m) {
    if (m.num_vertices() != g.num_vertices() || !m.is_perfect())
        throw std::invalid_argument("contract requires a perfect matching");
    for (const auto& [u, v] : m.edges())
        if (!g.has_edge(u, v)) throw std::invalid_argument("matching edge missing from graph");
    PortGraph pg;
    const auto& medges = m.edges();  // sorted by smaller endpoint
    pg.node_ends.reserve(medges.size());
    pg.node_of.assign(g.num_vertices(), -1);
    pg.port_of.assign(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(medges.size()); ++i) {
        auto [u, v] = medges[i];
        pg.node_ends.push_back({u, v});
        pg.node_of[u] = i;
        pg.port_of[u] = 0;
        pg.node_of[v] = i;
        pg.port_of[v] = 1;
    }
    pg.arcs.assign(pg.num_nodes(), {});
    for (const auto& [x, y] : g.edges()) {
        if (m.contains_edge(x, y)) continue;
        pg.arcs[pg.node_of[x]][pg.port_of[x]].push_back({pg.node_of[y], pg.port_of[y]});
        pg.arcs[pg.node_of[y]][pg.port_of[y]].push_back({pg.node_of[x], pg.port_of[x]});
        ++pg.arc_count;
    }
    for (auto& per_node : pg.arcs) {
        std::sort(per_node[0].begin(), per_node[0].end());
        std::sort(per_node[1].begin(), per_node[1].end());
    }
    return pg;
}

namespace {

// Port-blind node adjacency, used by the reachability prunes.
std::vector<std::vector<int>> node_adjacency(const PortGraph& pg) {
    std::vector<std::vector<int>> adj(pg.num_nodes());
    for (int node = 0; node < pg.num_nodes(); ++node) {
        for (int port = 0; port < 2; ++port)
            for (const auto& end : pg.arcs[node][port]) adj[node].push_back(end.node);
        auto& a = adj[node];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
}

struct PortSearch {
    const PortGraph& pg;
    std::vector<std::vector<int>> adj;
    std::uint64_t budget;
    std::uint64_t expansions = 0;
    bool exceeded = false;

    explicit PortSearch(const PortGraph& pg_, std::uint64_t budget_)
        : pg(pg_), adj(node_adjacency(pg_)), budget(budget_) {}

    bool tick() {
        if (++expansions > budget) {
            exceeded = true;
            return false;
        }
        return true;
    }

    // Nodes reachable from `from` walking only unvisited nodes plus `extra`,
    // a visited node the caller still wants to reach (-1 for none). Returns
    // the number of unvisited nodes reached and whether `extra` was reached.
    std::pair<int, bool> reachable(int from, const std::vector<char>& visited, int extra) const {
        std::vector<char> seen(pg.num_nodes(), 0);
        std::vector<int> stack{from};
        seen[from] = 1;
        int unvisited_reached = 0;
        bool extra_reached = from == extra;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (seen[v]) continue;
                if (!visited[v]) {
                    seen[v] = 1;
                    ++unvisited_reached;
                    stack.push_back(v);
                } else if (extra >= 0 && v == extra) {
                    seen[extra] = 1;
                    extra_reached = true;
                    stack.push_back(extra);
                }
            }
        }
        return {unvisited_reached, extra_reached};
    }
};

// Expands a sequence of (node, entry port) pairs into the vertex walk.
std::vector<VertexId> expand_trail(const PortGraph& pg,
                                   const std::vector<std::pair<int, int>>& trail) {
    std::vector<VertexId> vs;
    vs.reserve(2 * trail.size());
    for (auto [node, entry] : trail) {
        vs.push_back(pg.vertex_at(node, entry));
        vs.push_back(pg.vertex_at(node, 1 - entry));
    }
    return vs;
}

struct HamCycleSearch : PortSearch {
    using PortSearch::PortSearch;
    std::vector<char> visited;
    std::vector<std::pair<int, int>> trail;  // (node, entry port)
    int visited_count = 0;
    std::optional<AlternatingWalk> result;

    bool dfs(int cur, int exit_port) {
        if (!tick()) return false;
        for (const auto& end : pg.arcs[cur][exit_port]) {
            if (end.node == 0) {
                if (end.port == 0 && visited_count == pg.num_nodes()) {
                    result = AlternatingWalk{WalkShape::cycle, expand_trail(pg, trail)};
                    return true;
                }
                continue;
            }
            if (visited[end.node]) continue;
            visited[end.node] = 1;
            ++visited_count;
            trail.emplace_back(end.node, end.port);
            bool ok = true;
            if (visited_count < pg.num_nodes()) {
                auto [reached, zero_ok] = reachable(end.node, visited, 0);
                ok = zero_ok && reached == pg.num_nodes() - visited_count;
            }
            if (ok && dfs(end.node, 1 - end.port)) return true;
            trail.pop_back();
            visited[end.node] = 0;
            --visited_count;
            if (exceeded) return false;
        }
        return false;
    }

    std::optional<AlternatingWalk> run() {
        visited.assign(pg.num_nodes(), 0);
        visited[0] = 1;
        visited_count = 1;
        trail = {{0, 0}};
        dfs(0, 1);
        return result;
    }
};

struct HamPathSearch : PortSearch {
    using PortSearch::PortSearch;
    std::vector<char> visited;
    std::vector<std::pair<int, int>> trail;
    int visited_count = 0;
    std::optional<AlternatingWalk> result;

    bool dfs(int cur, int exit_port) {
        if (visited_count == pg.num_nodes()) {
            result = AlternatingWalk{WalkShape::closed_path, expand_trail(pg, trail)};
            return true;
        }
        if (!tick()) return false;
        for (const auto& end : pg.arcs[cur][exit_port]) {
            if (visited[end.node]) continue;
            visited[end.node] = 1;
            ++visited_count;
            trail.emplace_back(end.node, end.port);
            auto [reached, ignore] = reachable(end.node, visited, -1);
            (void)ignore;
            bool ok = reached == pg.num_nodes() - visited_count;
            if (ok && dfs(end.node, 1 - end.port)) return true;
            trail.pop_back();
            visited[end.node] = 0;
            --visited_count;
            if (exceeded) return false;
        }
        return false;
    }

    std::optional<AlternatingWalk> run() {
        for (int start = 0; start < pg.num_nodes(); ++start) {
            for (int free_port = 0; free_port < 2; ++free_port) {
                visited.assign(pg.num_nodes(), 0);
                visited[start] = 1;
                visited_count = 1;
                trail = {{start, free_port}};
                if (dfs(start, 1 - free_port)) return result;
                if (exceeded) return std::nullopt;
            }
        }
        return std::nullopt;
    }
};

struct LongestCycleSearch : PortSearch {
    using PortSearch::PortSearch;
    std::vector<char> visited;
    std::vector<std::pair<int, int>> trail;
    int min_node = 0;
    int best_nodes = 0;
    std::optional<AlternatingWalk> best;

    void dfs(int cur, int exit_port) {
        if (!tick()) return;
        for (const auto& end : pg.arcs[cur][exit_port]) {
            if (end.node == min_node) {
                int len = static_cast<int>(trail.size());
                if (end.port == 0 && len >= 2 && len > best_nodes) {
                    best_nodes = len;
                    best = AlternatingWalk{WalkShape::cycle, expand_trail(pg, trail)};
                }
                continue;
            }
            if (visited[end.node]) continue;
            visited[end.node] = 1;
            trail.emplace_back(end.node, end.port);
            auto [reached, back_ok] = reachable(end.node, visited, min_node);
            if (back_ok && static_cast<int>(trail.size()) + reached > best_nodes)
                dfs(end.node, 1 - end.port);
            trail.pop_back();
            visited[end.node] = 0;
            if (exceeded) return;
        }
    }

    std::optional<AlternatingWalk> run() {
        for (min_node = 0; min_node < pg.num_nodes(); ++min_node) {
            if (pg.num_nodes() - min_node <= best_nodes) break;
            visited.assign(pg.num_nodes(), 0);
            // nodes below the designated minimum are off limits for this root
            for (int i = 0; i <= min_node; ++i) visited[i] = 1;
            trail = {{min_node, 0}};
            dfs(min_node, 1);
            if (exceeded) break;
        }
        return best;
    }
};

struct LongestPathSearch : PortSearch {
    using PortSearch::PortSearch;
    std::vector<char> visited;
    std::vector<std::pair<int, int>> trail;
    int best_nodes = 0;
    std::optional<AlternatingWalk> best;

    void record() {
        int len = static_cast<int>(trail.size());
        if (len > best_nodes) {
            best_nodes = len;
            best = AlternatingWalk{WalkShape::closed_path, expand_trail(pg, trail)};
        }
    }

    void dfs(int cur, int exit_port) {
        if (!tick()) return;
        for (const auto& end : pg.arcs[cur][exit_port]) {
            if (visited[end.node]) continue;
            visited[end.node] = 1;
            trail.emplace_back(end.node, end.port);
            record();
            auto [reached, ignore] = reachable(end.node, visited, -1);
            (void)ignore;
            if (static_cast<int>(trail.size()) + reached > best_nodes)
                dfs(end.node, 1 - end.port);
            trail.pop_back();
            visited[end.node] = 0;
            if (exceeded) return;
        }
    }

    std::optional<AlternatingWalk> run() {
        for (int start = 0; start < pg.num_nodes(); ++start) {
            for (int free_port = 0; free_port < 2; ++free_port) {
                visited.assign(pg.num_nodes(), 0);
                visited[start] = 1;
                trail = {{start, free_port}};
                record();
                dfs(start, 1 - free_port);
                if (exceeded) return best;
            }
        }
        return best;
    }
};

}  // namespace

WalkSearch find_alt_hamilton_cycle(const Graph& g, const Matching& m, SearchLimits limits) {
    if (g.num_vertices() < 4) {
        PortGraph pg = contract(g, m);  // still validates the precondition
        (void)pg;
        return {SearchStatus::not_applicable, std::nullopt, 0};
    }
    PortGraph pg = contract(g, m);
    HamCycleSearch search(pg, limits.max_expansions);
    auto walk = search.run();
    WalkSearch out;
    out.expansions = search.expansions;
    if (walk) {
        out.status = SearchStatus::found;
        out.walk = canonical_walk(*walk);
    } else {
        out.status = search.exceeded ? SearchStatus::budget_exceeded : SearchStatus::absent;
    }
    return out;
}

WalkSearch find_closed_alt_hamilton_path(const Graph& g, const Matching& m, SearchLimits limits) {
    PortGraph pg = contract(g, m);
    HamPathSearch search(pg, limits.max_expansions);
    auto walk = search.run();
    WalkSearch out;
    out.expansions = search.expansions;
    if (walk) {
        out.status = SearchStatus::found;
        out.walk = canonical_walk(*walk);
    } else {
        out.status = search.exceeded ? SearchStatus::budget_exceeded : SearchStatus::absent;
    }
    return out;
}

WalkSearch longest_alt_cycle(const Graph& g, const Matching& m, SearchLimits limits) {
    PortGraph pg = contract(g, m);
    LongestCycleSearch search(pg, limits.max_expansions);
    auto walk = search.run();
    WalkSearch out;
    out.expansions = search.expansions;
    if (search.exceeded) {
        out.status = SearchStatus::budget_exceeded;
        if (walk) out.walk = canonical_walk(*walk);
    } else if (walk) {
        out.status = SearchStatus::found;
        out.walk = canonical_walk(*walk);
    } else {
        out.status = SearchStatus::absent;
    }
    return out;
}

WalkSearch longest_closed_alt_path(const Graph& g, const Matching& m, SearchLimits limits) {
    PortGraph pg = contract(g, m);
    LongestPathSearch search(pg, limits.max_expansions);
    auto walk = search.run();
    WalkSearch out;
    out.expansions = search.expansions;
    if (search.exceeded) {
        out.status = SearchStatus::budget_exceeded;
        if (walk) out.walk = canonical_walk(*walk);
    } else {
        out.status = SearchStatus::found;  // a single matched edge always exists
        out.walk = canonical_walk(*walk);
    }
    return out;
}

std::vector<Edge> alt_reachable_pairs(const Graph& g, const Matching& m) {
    if (m.num_vertices() != g.num_vertices() || !m.is_perfect())
        throw std::invalid_argument("alt_reachable_pairs requires a perfect matching");
    std::vector<Edge> pairs;
    const int n = g.num_vertices();
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = x + 1; y < n; ++y) {
            if (m.partner(x) == y) {
                pairs.emplace_back(x, y);
                continue;
            }
            auto induced = g.without_vertices({x, y});
            if (has_perfect_matching(induced.graph)) pairs.emplace_back(x, y);
        }
    }
    return pairs;
}

namespace {

int edges_between(const Graph& g, VertexId a, VertexId b, VertexId v, VertexId w) {
    int count = 0;
    count += g.has_edge(a, v);
    count += g.has_edge(a, w);
    count += g.has_edge(b, v);
    count += g.has_edge(b, w);
    return count;
}

void require_disjoint(const AlternatingWalk& lhs, const AlternatingWalk& rhs) {
    for (VertexId a : lhs.vertices)
        for (VertexId b : rhs.vertices)
            if (a == b) throw std::invalid_argument("outside path overlaps the main walk");
}

}  // namespace

bool validate_lemma13(const Graph& g, const Matching& m, const AlternatingWalk& cycle,
                      const AlternatingWalk& outside_path) {
    std::string why;
    if (cycle.shape != WalkShape::cycle || !validate_walk(g, m, cycle, &why))
        throw std::invalid_argument("invalid alternating cycle: " + why);
    if (outside_path.shape != WalkShape::closed_path || !validate_walk(g, m, outside_path, &why))
        throw std::invalid_argument("invalid closed alternating path: " + why);
    require_disjoint(cycle, outside_path);
    const int bound = bipartition(g).has_value() ? 1 : 2;
    const VertexId v = outside_path.vertices.front();
    const VertexId w = outside_path.vertices.back();
    const auto flags = matched_edge_flags(m, cycle);
    const int n = static_cast<int>(cycle.vertices.size());
    for (int i = 0; i < n; ++i) {
        if (flags[i]) continue;  // only the non-matching consecutive pairs
        VertexId a = cycle.vertices[i];
        VertexId b = cycle.vertices[(i + 1) % n];
        if (edges_between(g, a, b, v, w) > bound) return false;
    }
    return true;
}

bool validate_lemma14(const Graph& g, const Matching& m, const AlternatingWalk& path,
                      const AlternatingWalk& outside_path) {
    std::string why;
    if (path.shape != WalkShape::closed_path || !validate_walk(g, m, path, &why))
        throw std::invalid_argument("invalid closed alternating path: " + why);
    if (outside_path.shape != WalkShape::closed_path || !validate_walk(g, m, outside_path, &why))
        throw std::invalid_argument("invalid closed alternating path: " + why);
    require_disjoint(path, outside_path);
    const int bound = bipartition(g).has_value() ? 1 : 2;
    const VertexId v = outside_path.vertices.front();
    const VertexId w = outside_path.vertices.back();
    const auto flags = matched_edge_flags(m, path);
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (flags[i]) continue;
        VertexId a = path.vertices[i];
        VertexId b = path.vertices[i + 1];
        if (edges_between(g, a, b, v, w) > bound) return false;
    }
    return true;
}

}  // namespace altmatch
