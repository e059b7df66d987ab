#include "altmatch/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace altmatch {

FamilyOutput gen_g1(int n) {
    if (n < 1) throw std::invalid_argument("g1 needs n >= 1");
    const int half = 2 * n + 1;
    std::vector<Edge> edges;
    for (int i = 0; i < half; ++i)
        for (int j = i + 1; j < half; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(half + i, half + j);
        }
    std::vector<Edge> jointing;
    for (int i = 0; i < half; ++i) jointing.emplace_back(i, half + i);
    edges.insert(edges.end(), jointing.begin(), jointing.end());
    Graph g(2 * half, edges);
    return {"g1:n=" + std::to_string(n), g, Matching::from_pairs(g, jointing)};
}

FamilyOutput gen_remark_tight(int t) {
    if (t < 1) throw std::invalid_argument("remark needs t >= 1");
    const int u = 4 * t, v = 4 * t + 1;
    auto u0 = [&](int i) { return i; };
    auto v0 = [&](int i) { return t + i; };
    auto u1 = [&](int i) { return 2 * t + i; };
    auto v1 = [&](int i) { return 3 * t + i; };
    std::vector<Edge> edges;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            edges.emplace_back(u0(i), v0(j));
            edges.emplace_back(u1(i), v1(j));
        }
    for (int i = 0; i < t; ++i) {
        edges.push_back(make_edge(u, v0(i)));
        edges.push_back(make_edge(u, v1(i)));
        edges.push_back(make_edge(v, u0(i)));
        edges.push_back(make_edge(v, u1(i)));
    }
    edges.emplace_back(u, v);
    Graph g(4 * t + 2, edges);
    std::vector<Edge> matched;
    for (int i = 0; i < t; ++i) {
        matched.emplace_back(u0(i), v0(i));
        matched.emplace_back(u1(i), v1(i));
    }
    matched.emplace_back(u, v);
    return {"remark:t=" + std::to_string(t), g, Matching::from_pairs(g, matched)};
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs a, b >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, edges);
}

namespace {

int common_neighbors(const Graph& g, VertexId u, VertexId v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

}  // namespace

std::optional<G1Recognition> recognize_g1(const Graph& g) {
    const int nu = g.num_vertices();
    if (nu < 6 || nu % 4 != 2) return std::nullopt;
    const int n = (nu - 2) / 4;
    const int deg = 2 * n + 1;
    for (int v = 0; v < nu; ++v)
        if (g.degree(v) != deg) return std::nullopt;

    // cross edges are exactly those whose endpoints share no neighbor
    std::vector<Edge> cross;
    for (const auto& e : g.edges())
        if (common_neighbors(g, e.first, e.second) == 0) cross.push_back(e);
    if (static_cast<int>(cross.size()) != deg) return std::nullopt;
    std::vector<int> partner(nu, -1);
    for (const auto& [u, v] : cross) {
        if (partner[u] != -1 || partner[v] != -1) return std::nullopt;
        partner[u] = v;
        partner[v] = u;
    }
    for (int v = 0; v < nu; ++v)
        if (partner[v] == -1) return std::nullopt;

    // removing the cross edges must leave two complete components of size 2n+1
    std::vector<int> comp(nu, -1);
    int comps = 0;
    for (int root = 0; root < nu; ++root) {
        if (comp[root] != -1) continue;
        if (comps == 2) return std::nullopt;
        comp[root] = comps;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (VertexId y : g.neighbors(x)) {
                if (partner[x] == y) continue;  // skip cross edges
                if (comp[y] == -1) {
                    comp[y] = comps;
                    stack.push_back(y);
                }
            }
        }
        ++comps;
    }
    if (comps != 2) return std::nullopt;
    int size0 = static_cast<int>(std::count(comp.begin(), comp.end(), 0));
    if (size0 != deg || nu - size0 != deg) return std::nullopt;
    for (int u = 0; u < nu; ++u)
        if (comp[u] == comp[partner[u]]) return std::nullopt;  // cross edges must join the cliques
    for (int u = 0; u < nu; ++u)
        for (int v = u + 1; v < nu; ++v)
            if (comp[u] == comp[v] && !g.has_edge(u, v)) return std::nullopt;

    std::vector<Edge> jointing(cross.begin(), cross.end());
    return G1Recognition{n, Matching::from_pairs(g, jointing)};
}

namespace {

std::map<std::string, int> parse_params(const std::string& text) {
    std::map<std::string, int> params;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size())
            throw std::invalid_argument("bad family parameter: " + item);
        std::string key = item.substr(0, eq);
        int value;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad family parameter value: " + item);
        }
        params[key] = value;
    }
    return params;
}

int require_param(const std::map<std::string, int>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("missing family parameter: " + key);
    return it->second;
}

std::optional<Matching> first_perfect_matching(const Graph& g) {
    std::optional<Matching> found;
    enum_perfect_matchings(g, [&](const Matching& m) {
        found = m;
        return false;
    });
    return found;
}

}  // namespace

FamilyOutput make_family(const std::string& spec) {
    auto colon = spec.find(':');
    std::string family = colon == std::string::npos ? spec : spec.substr(0, colon);
    auto params = parse_params(colon == std::string::npos ? "" : spec.substr(colon + 1));
    if (family == "g1") return gen_g1(require_param(params, "n"));
    if (family == "remark") return gen_remark_tight(require_param(params, "t"));
    if (family == "k") {
        Graph g = complete_graph(require_param(params, "n"));
        return {spec, g, first_perfect_matching(g)};
    }
    if (family == "kb") {
        Graph g = complete_bipartite(require_param(params, "a"), require_param(params, "b"));
        return {spec, g, first_perfect_matching(g)};
    }
    if (family == "cycle") {
        Graph g = cycle_graph(require_param(params, "n"));
        return {spec, g, first_perfect_matching(g)};
    }
    throw std::invalid_argument("unknown family: " + family);
}

}  // namespace altmatch
