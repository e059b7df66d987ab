#include "altmatch/theorems.hpp"

#include <algorithm>
#include <stdexcept>

#include "altmatch/extendability.hpp"
#include "altmatch/families.hpp"
#include "altmatch/graph_io.hpp"

namespace altmatch {

namespace {

void require_perfect(const Graph& g, const Matching& m, const char* who) {
    if (m.num_vertices() != g.num_vertices() || !m.is_perfect())
        throw std::invalid_argument(std::string(who) + " requires a perfect matching");
}

// Records a find-style search outcome: found -> conclusion holds with witness;
// absent -> fails; budget -> inconclusive, flagged.
void apply_search_outcome(TheoremReport& report, const WalkSearch& res) {
    report.conclusion_evaluated = true;
    switch (res.status) {
        case SearchStatus::found:
            report.conclusion_holds = true;
            report.witness = res.walk;
            break;
        case SearchStatus::absent:
            report.conclusion_holds = false;
            break;
        case SearchStatus::budget_exceeded:
            report.conclusion_holds = false;
            report.budget_exceeded = true;
            break;
        case SearchStatus::not_applicable:
            report.conclusion_holds = false;
            report.diagnostics["not_applicable"] = 1;
            break;
    }
}

void finalize(TheoremReport& report, const Graph& g, const Matching& m,
              const CheckOptions& opts) {
    if (report.is_counterexample() && opts.attach_payload) attach_reproduction(report, g, m);
}

}  // namespace

bool thm31_hypothesis(const Graph& g) {
    const int nu = g.num_vertices();
    if (nu == 2) return true;  // the matched pair has degree sum >= 1
    const int bound = nu - 1;
    for (VertexId x = 0; x < nu; ++x) {
        for (VertexId y = x + 1; y < nu; ++y) {
            if (g.degree(x) + g.degree(y) >= bound) continue;
            auto rest = g.without_vertices({x, y});
            if (has_perfect_matching(rest.graph)) return false;
        }
    }
    return true;
}

TheoremReport check_thm21(const Graph& g, const Matching& m, const CheckOptions& opts) {
    require_perfect(g, m, "check_thm21");
    TheoremReport report;
    report.theorem_id = "thm21";
    const int nu = g.num_vertices();
    report.diagnostics["nu"] = nu;
    const bool connected = is_connected(g);
    report.diagnostics["connected"] = connected;
    auto parts = bipartition(g);
    report.diagnostics["bipartite"] = parts.has_value();
    if (connected && parts) {
        int min_sum = 2 * nu;
        for (VertexId x = 0; x < nu; ++x)
            for (VertexId y = x + 1; y < nu; ++y)
                if (parts->side[x] != parts->side[y])
                    min_sum = std::min(min_sum, g.degree(x) + g.degree(y));
        report.diagnostics["min_cross_degree_sum"] = min_sum;
        report.diagnostics["threshold"] = nu / 2 + 2;
        report.hypothesis_met = min_sum >= nu / 2 + 2;
    }
    if (report.hypothesis_met || opts.always_run_conclusion)
        apply_search_outcome(report, find_alt_hamilton_cycle(g, m, opts.limits));
    finalize(report, g, m, opts);
    return report;
}

TheoremReport check_thm31(const Graph& g, const Matching& m, const CheckOptions& opts) {
    require_perfect(g, m, "check_thm31");
    TheoremReport report;
    report.theorem_id = "thm31";
    const int nu = g.num_vertices();
    report.diagnostics["nu"] = nu;
    const bool connected = is_connected(g);
    report.diagnostics["connected"] = connected;
    report.diagnostics["threshold"] = nu - 1;
    report.hypothesis_met = connected && thm31_hypothesis(g);
    if (report.hypothesis_met || opts.always_run_conclusion)
        apply_search_outcome(report, find_closed_alt_hamilton_path(g, m, opts.limits));
    finalize(report, g, m, opts);
    return report;
}

TheoremReport check_lemma41(const Graph& g, const Matching& m, const CheckOptions& opts) {
    require_perfect(g, m, "check_lemma41");
    TheoremReport report;
    report.theorem_id = "lemma41";
    const int nu = g.num_vertices();
    report.diagnostics["nu"] = nu;
    const bool connected = is_connected(g);
    report.diagnostics["connected"] = connected;
    const int bound = nu / 2 + 1;
    report.diagnostics["bound"] = bound;
    if (connected && nu >= 4) {
        auto conn = vertex_connectivity(g);
        report.diagnostics["kappa"] = conn.kappa;
        report.hypothesis_met = 2 * conn.kappa >= nu;
    }
    if (report.hypothesis_met || opts.always_run_conclusion) {
        auto res = longest_alt_cycle(g, m, opts.limits);
        report.conclusion_evaluated = true;
        const int achieved = res.walk ? res.walk->length() : 0;
        report.diagnostics["cycle_length"] = achieved;
        report.conclusion_holds = achieved >= bound;
        if (report.conclusion_holds) report.witness = res.walk;
        if (!report.conclusion_holds && res.status == SearchStatus::budget_exceeded)
            report.budget_exceeded = true;
    }
    finalize(report, g, m, opts);
    return report;
}

TheoremReport check_thm42(const Graph& g, const Matching& m, const CheckOptions& opts) {
    require_perfect(g, m, "check_thm42");
    TheoremReport report;
    report.theorem_id = "thm42";
    const int nu = g.num_vertices();
    report.diagnostics["nu"] = nu;
    const bool connected = is_connected(g);
    report.diagnostics["connected"] = connected;
    if (connected && nu >= 4) {
        auto conn = vertex_connectivity(g);
        report.diagnostics["kappa"] = conn.kappa;
        report.hypothesis_met = 2 * conn.kappa >= nu;
    }
    if (report.hypothesis_met || opts.always_run_conclusion) {
        apply_search_outcome(report, find_alt_hamilton_cycle(g, m, opts.limits));
        if (!report.conclusion_holds && !report.budget_exceeded) {
            if (auto rec = recognize_g1(g); rec && rec->jointing == m) {
                report.exception_branch = "G1-jointing";
                report.diagnostics["g1_n"] = rec->n;
            }
        }
    }
    finalize(report, g, m, opts);
    return report;
}

TheoremReport check_corollary43(const Graph& g, int k, const Matching& m,
                                const CheckOptions& opts) {
    require_perfect(g, m, "check_corollary43");
    TheoremReport report;
    report.theorem_id = "cor43";
    const int nu = g.num_vertices();
    report.diagnostics["nu"] = nu;
    report.diagnostics["k"] = k;
    const bool connected = is_connected(g);
    report.diagnostics["connected"] = connected;
    if (4 * k < nu) {
        report.diagnostics["k_below_quarter_nu"] = 1;  // distinguished verdict
    } else if (k < 0 || 2 * k > nu - 2) {
        report.diagnostics["k_out_of_range"] = 1;
    } else if (connected && nu >= 4) {
        const bool ext = is_k_extendable(g, k).extendable;
        report.diagnostics["k_extendable"] = ext;
        report.hypothesis_met = ext;
    }
    if (report.hypothesis_met || opts.always_run_conclusion)
        apply_search_outcome(report, find_alt_hamilton_cycle(g, m, opts.limits));
    finalize(report, g, m, opts);
    return report;
}

namespace {

struct LwSearch {
    const Graph& g;
    const std::vector<Edge>& l_edges;
    std::uint64_t budget;
    std::uint64_t expansions = 0;
    bool exceeded = false;

    std::vector<char> visited;
    std::vector<char> l_used;  // per l_edges index
    std::vector<VertexId> path;
    VertexId start = 0;
    std::optional<std::vector<VertexId>> found;

    LwSearch(const Graph& g_, const std::vector<Edge>& l, std::uint64_t budget_)
        : g(g_), l_edges(l), budget(budget_) {}

    int l_index(VertexId a, VertexId b) const {
        Edge e = make_edge(a, b);
        auto it = std::lower_bound(l_edges.begin(), l_edges.end(), e);
        if (it != l_edges.end() && *it == e) return static_cast<int>(it - l_edges.begin());
        return -1;
    }

    bool all_l_usable(VertexId tip) const {
        for (std::size_t i = 0; i < l_edges.size(); ++i) {
            if (l_used[i]) continue;
            auto [a, b] = l_edges[i];
            if (visited[a] && visited[b] && a != tip && b != tip && a != start && b != start)
                return false;
        }
        return true;
    }

    bool dfs(VertexId cur) {
        if (++expansions > budget) {
            exceeded = true;
            return false;
        }
        for (VertexId w : g.neighbors(cur)) {
            int li = l_index(cur, w);
            if (w == start) {
                if (path.size() < 3) continue;
                int used = 0;
                for (char u : l_used) used += u;
                if (used + (li >= 0 && !l_used[li] ? 1 : 0) == static_cast<int>(l_edges.size())) {
                    found = path;
                    return true;
                }
                continue;
            }
            if (visited[w]) continue;
            visited[w] = 1;
            path.push_back(w);
            if (li >= 0) l_used[li] = 1;
            if (all_l_usable(w) && dfs(w)) return true;
            if (li >= 0) l_used[li] = 0;
            path.pop_back();
            visited[w] = 0;
            if (exceeded) return false;
        }
        return false;
    }

    std::optional<std::vector<VertexId>> run() {
        visited.assign(g.num_vertices(), 0);
        l_used.assign(l_edges.size(), 0);
        auto [u, v] = l_edges.front();
        start = u;
        visited[u] = visited[v] = 1;
        path = {u, v};
        l_used[0] = 1;
        dfs(v);
        return found;
    }
};

}  // namespace

TheoremReport probe_lovasz_woodall(const Graph& g, const std::vector<Edge>& l_edges,
                                   const CheckOptions& opts) {
    if (l_edges.empty()) throw std::invalid_argument("probe needs at least one edge");
    std::vector<Edge> sorted_l;
    sorted_l.reserve(l_edges.size());
    for (const auto& [u, v] : l_edges) sorted_l.push_back(make_edge(u, v));
    std::sort(sorted_l.begin(), sorted_l.end());
    std::vector<char> touched(g.num_vertices(), 0);
    for (const auto& [u, v] : sorted_l) {
        if (!g.has_edge(u, v)) throw std::invalid_argument("probe edge missing from graph");
        if (touched[u] || touched[v])
            throw std::invalid_argument("probe edges must be independent");
        touched[u] = touched[v] = 1;
    }

    TheoremReport report;
    report.theorem_id = "lovasz-woodall";
    report.diagnostics["exploratory"] = 1;
    const int k = static_cast<int>(sorted_l.size());
    report.diagnostics["k"] = k;
    auto conn = vertex_connectivity(g);
    report.diagnostics["kappa"] = conn.kappa;

    bool minus_l_connected = false;
    {
        std::vector<Edge> kept;
        for (const auto& e : g.edges())
            if (!std::binary_search(sorted_l.begin(), sorted_l.end(), e)) kept.push_back(e);
        minus_l_connected = is_connected(Graph(g.num_vertices(), kept));
    }
    report.diagnostics["k_even"] = k % 2 == 0;
    report.diagnostics["minus_l_connected"] = minus_l_connected;
    report.hypothesis_met = conn.kappa >= k && (k % 2 == 0 || minus_l_connected);

    if (report.hypothesis_met || opts.always_run_conclusion) {
        LwSearch search{g, sorted_l, opts.limits.max_expansions};
        auto cycle = search.run();
        report.conclusion_evaluated = true;
        if (cycle) {
            report.conclusion_holds = true;
            report.witness = AlternatingWalk{WalkShape::cycle, *cycle};
        } else if (search.exceeded) {
            report.budget_exceeded = true;
        }
    }
    if (report.is_counterexample() && opts.attach_payload) {
        report.graph6 = to_graph6(g);
        report.matching_edges = sorted_l;
    }
    return report;
}

}  // namespace altmatch
