#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace oracles {

namespace {

int brute_max_from(const Graph& g, std::vector<char>& used, int from) {
    int v = -1;
    for (int i = from; i < g.num_vertices(); ++i) {
        if (!used[i]) {
            v = i;
            break;
        }
    }
    if (v == -1) return 0;
    // either v stays unmatched...
    used[v] = 1;
    int best = brute_max_from(g, used, v + 1);
    // ...or v pairs with any free neighbor
    for (VertexId w : g.neighbors(v)) {
        if (used[w]) continue;
        used[w] = 1;
        best = std::max(best, 1 + brute_max_from(g, used, v + 1));
        used[w] = 0;
    }
    used[v] = 0;
    return best;
}

}  // namespace

int brute_max_matching_size(const Graph& g) {
    std::vector<char> used(g.num_vertices(), 0);
    return brute_max_from(g, used, 0);
}

namespace {

bool connected_after_deleting(const Graph& g, unsigned mask) {
    const int n = g.num_vertices();
    int start = -1, kept = 0;
    for (int v = 0; v < n; ++v) {
        if (mask >> v & 1) continue;
        ++kept;
        if (start == -1) start = v;
    }
    if (kept <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(u)) {
            if (mask >> w & 1) continue;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == kept;
}

}  // namespace

int brute_vertex_connectivity(const Graph& g) {
    const int n = g.num_vertices();
    bool complete = true;
    for (int u = 0; u < n && complete; ++u)
        for (int v = u + 1; v < n && complete; ++v)
            if (!g.has_edge(u, v)) complete = false;
    if (complete) return n - 1;
    for (int size = 0; size <= n - 2; ++size) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            if (!connected_after_deleting(g, mask)) return size;
        }
    }
    return n - 1;
}

namespace {

struct DirectCycleSearch {
    const Graph& g;
    const Matching& m;
    std::vector<char> used;
    std::vector<VertexId> seq;
    bool found = false;

    // seq always ends right after a matched edge (even length)
    void dfs() {
        if (found) return;
        const int n = g.num_vertices();
        VertexId tip = seq.back();
        if (static_cast<int>(seq.size()) == n) {
            if (g.has_edge(tip, seq.front())) found = true;
            return;
        }
        for (VertexId z : g.neighbors(tip)) {
            if (used[z] || m.partner(tip) == z) continue;
            VertexId zp = m.partner(z);
            used[z] = 1;
            used[zp] = 1;
            seq.push_back(z);
            seq.push_back(zp);
            dfs();
            if (found) return;
            seq.pop_back();
            seq.pop_back();
            used[z] = 0;
            used[zp] = 0;
        }
    }
};

}  // namespace

std::optional<std::vector<VertexId>> direct_alt_hamilton_cycle(const Graph& g, const Matching& m) {
    if (g.num_vertices() < 4) return std::nullopt;
    DirectCycleSearch search{g, m, std::vector<char>(g.num_vertices(), 0), {}, false};
    search.used[0] = 1;
    search.used[m.partner(0)] = 1;
    search.seq = {0, m.partner(0)};
    search.dfs();
    if (!search.found) return std::nullopt;
    return search.seq;
}

namespace {

struct ClosedPathEnum {
    const Graph& g;
    const Matching& m;
    const std::function<void(const std::vector<VertexId>&)>& visit;
    std::vector<char> used;
    std::vector<VertexId> seq;

    void dfs() {
        visit(seq);
        VertexId tip = seq.back();
        for (VertexId z : g.neighbors(tip)) {
            if (used[z] || m.partner(tip) == z) continue;
            VertexId zp = m.partner(z);
            used[z] = 1;
            used[zp] = 1;
            seq.push_back(z);
            seq.push_back(zp);
            dfs();
            seq.pop_back();
            seq.pop_back();
            used[z] = 0;
            used[zp] = 0;
        }
    }
};

}  // namespace

void enum_closed_alt_paths(const Graph& g, const Matching& m,
                           const std::function<void(const std::vector<VertexId>&)>& visit) {
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (m.partner(s) == -1) continue;
        ClosedPathEnum walker{g, m, visit, std::vector<char>(g.num_vertices(), 0), {}};
        walker.used[s] = 1;
        walker.used[m.partner(s)] = 1;
        walker.seq = {s, m.partner(s)};
        walker.dfs();
    }
}

std::set<Edge> alt_reachable_pairs_oracle(const Graph& g, const Matching& m) {
    std::set<Edge> pairs;
    enum_closed_alt_paths(g, m, [&](const std::vector<VertexId>& seq) {
        pairs.insert(altmatch::make_edge(seq.front(), seq.back()));
    });
    return pairs;
}

int longest_closed_alt_path_order(const Graph& g, const Matching& m) {
    int best = 0;
    enum_closed_alt_paths(g, m, [&](const std::vector<VertexId>& seq) {
        best = std::max(best, static_cast<int>(seq.size()));
    });
    return best;
}

namespace {

struct CycleEnum {
    const Graph& g;
    const Matching& m;
    VertexId root;
    std::vector<char> used;
    std::vector<VertexId> seq;
    int best = 0;

    void dfs() {
        VertexId tip = seq.back();
        if (seq.size() >= 4 && g.has_edge(tip, root) && m.partner(tip) != root)
            best = std::max(best, static_cast<int>(seq.size()));
        for (VertexId z : g.neighbors(tip)) {
            if (z <= root || used[z] || m.partner(tip) == z) continue;
            VertexId zp = m.partner(z);
            if (zp <= root || used[zp]) continue;
            used[z] = 1;
            used[zp] = 1;
            seq.push_back(z);
            seq.push_back(zp);
            dfs();
            seq.pop_back();
            seq.pop_back();
            used[z] = 0;
            used[zp] = 0;
        }
    }
};

}  // namespace

int longest_alt_cycle_order(const Graph& g, const Matching& m) {
    int best = 0;
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (m.partner(s) < s) continue;
        CycleEnum walker{g, m, s, std::vector<char>(g.num_vertices(), 0), {}, 0};
        walker.used[s] = 1;
        walker.used[m.partner(s)] = 1;
        walker.seq = {s, m.partner(s)};
        walker.dfs();
        best = std::max(best, walker.best);
    }
    return best;
}

namespace {

void enum_matchings_of_size(const std::vector<Edge>& edges, int k, std::size_t from,
                            std::vector<char>& used, std::vector<Edge>& chosen,
                            const std::function<void(const std::vector<Edge>&)>& visit) {
    if (static_cast<int>(chosen.size()) == k) {
        visit(chosen);
        return;
    }
    for (std::size_t i = from; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (used[u] || used[v]) continue;
        used[u] = used[v] = 1;
        chosen.push_back(edges[i]);
        enum_matchings_of_size(edges, k, i + 1, used, chosen, visit);
        chosen.pop_back();
        used[u] = used[v] = 0;
    }
}

}  // namespace

KExtendOracle k_extendable_oracle(const Graph& g, int k) {
    KExtendOracle result;
    const auto edges = g.edges();
    std::vector<char> used(g.num_vertices(), 0);
    std::vector<Edge> chosen;

    // every perfect matching marks all its k-subsets as extendable
    std::set<std::vector<Edge>> extendable_sets;
    enum_matchings_of_size(edges, g.num_vertices() / 2, 0, used, chosen,
                           [&](const std::vector<Edge>& pm) {
                               std::vector<char> pick(pm.size(), 0);
                               std::fill(pick.begin(), pick.begin() + k, 1);
                               std::sort(pick.begin(), pick.end());
                               do {
                                   std::vector<Edge> sub;
                                   for (std::size_t i = 0; i < pm.size(); ++i)
                                       if (pick[i]) sub.push_back(pm[i]);
                                   extendable_sets.insert(sub);
                               } while (std::next_permutation(pick.begin(), pick.end()));
                           });

    enum_matchings_of_size(edges, k, 0, used, chosen, [&](const std::vector<Edge>& km) {
        result.any_k_matching = true;
        if (!extendable_sets.count(km)) result.failing.push_back(km);
    });
    std::sort(result.failing.begin(), result.failing.end());
    result.extendable = result.any_k_matching && result.failing.empty();
    return result;
}

namespace {

bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& map_ab,
                std::vector<char>& used_b, int next) {
    const int n = a.num_vertices();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used_b[cand] || a.degree(next) != b.degree(cand)) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            if (a.has_edge(prev, next) != b.has_edge(map_ab[prev], cand)) ok = false;
        if (!ok) continue;
        map_ab[next] = cand;
        used_b[cand] = 1;
        if (iso_extend(a, b, map_ab, used_b, next + 1)) return true;
        used_b[cand] = 0;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.num_vertices(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.num_vertices(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map_ab(a.num_vertices(), -1);
    std::vector<char> used_b(a.num_vertices(), 0);
    return iso_extend(a, b, map_ab, used_b, 0);
}

int bipartite_matching_size_via_flow(const Graph& g) {
    auto parts = altmatch::bipartition(g);
    if (!parts) return -1;
    const int n = g.num_vertices();
    const int source = n, sink = n + 1;
    // cap[u][v] over n+2 nodes, unit capacities
    std::vector<std::vector<int>> cap(n + 2, std::vector<int>(n + 2, 0));
    for (int v = 0; v < n; ++v) {
        if (parts->side[v] == altmatch::Side::A) cap[source][v] = 1;
        else cap[v][sink] = 1;
    }
    for (const auto& [u, v] : g.edges()) {
        int a = parts->side[u] == altmatch::Side::A ? u : v;
        int b = parts->side[u] == altmatch::Side::A ? v : u;
        cap[a][b] = 1;
    }
    int flow = 0;
    while (true) {
        std::vector<int> prev(n + 2, -1);
        std::queue<int> q;
        q.push(source);
        prev[source] = source;
        while (!q.empty() && prev[sink] == -1) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n + 2; ++v) {
                if (cap[u][v] > 0 && prev[v] == -1) {
                    prev[v] = u;
                    q.push(v);
                }
            }
        }
        if (prev[sink] == -1) break;
        for (int v = sink; v != source; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        ++flow;
    }
    return flow;
}

Graph gnp(int nu, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < nu; ++i)
        for (int j = i + 1; j < nu; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(nu, edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) edges.push_back(altmatch::make_edge(perm[u], perm[v]));
    return Graph(g.num_vertices(), edges);
}

Graph random_relabel(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(altmatch::make_edge(i, (i + 1) % 5));        // outer cycle
        edges.push_back(altmatch::make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
        edges.push_back(altmatch::make_edge(i, 5 + i));              // spokes
    }
    return Graph(10, edges);
}

}  // namespace oracles
