#include "altmatch/constructor.hpp"

#include <algorithm>
#include <stdexcept>

namespace altmatch {

const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::extend_tail: return "extend_tail";
        case StepKind::cycle_close_reopen: return "cycle_close_reopen";
        case StepKind::removable_rotation: return "removable_rotation";
    }
    return "?";
}

const char* to_string(BuildStatus s) {
    switch (s) {
        case BuildStatus::engine_success: return "engine";
        case BuildStatus::fallback_success: return "fallback";
        case BuildStatus::no_spanning_path: return "absent";
        case BuildStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

namespace {

// Spanning closed walk of an alternating cycle (given as a vertex sequence)
// that starts at `at` with the matched edge first. Handles the degenerate
// two-vertex "cycle" (a bare matched pair).
std::vector<VertexId> cycle_walk_from(const std::vector<VertexId>& cyc, const Matching& m,
                                      VertexId at) {
    const int n = static_cast<int>(cyc.size());
    int pos = static_cast<int>(std::find(cyc.begin(), cyc.end(), at) - cyc.begin());
    if (n == 2) return {at, cyc[1 - pos]};
    std::vector<VertexId> out;
    out.reserve(n);
    const bool forward = m.contains_edge(cyc[pos], cyc[(pos + 1) % n]);
    for (int i = 0; i < n; ++i)
        out.push_back(forward ? cyc[(pos + i) % n] : cyc[(pos - i + n) % n]);
    return out;
}

std::vector<VertexId> cycle_walk_ending_at(const std::vector<VertexId>& cyc, const Matching& m,
                                           VertexId at) {
    auto walk = cycle_walk_from(cyc, m, at);
    std::reverse(walk.begin(), walk.end());
    return walk;
}

struct MoveFinder {
    const Graph& g;
    const Matching& m;
    const std::vector<VertexId>& p;
    std::vector<char> on_path;
    std::vector<Edge> outside;  // matched edges disjoint from the path, sorted

    MoveFinder(const Graph& g_, const Matching& m_, const std::vector<VertexId>& p_)
        : g(g_), m(m_), p(p_), on_path(g_.num_vertices(), 0) {
        for (VertexId v : p) on_path[v] = 1;
        for (const auto& e : m.edges())
            if (!on_path[e.first] && !on_path[e.second]) outside.push_back(e);
    }

    std::optional<ImprovementStep> extend_tail() const {
        // tail of the given orientation first, then the head via reversal
        for (int side = 0; side < 2; ++side) {
            VertexId endpoint = side == 0 ? p.back() : p.front();
            for (VertexId z : g.neighbors(endpoint)) {
                if (on_path[z]) continue;
                VertexId zp = m.partner(z);
                std::vector<VertexId> grown;
                grown.reserve(p.size() + 2);
                if (side == 0) {
                    grown = p;
                    grown.push_back(z);
                    grown.push_back(zp);
                } else {
                    grown.push_back(zp);
                    grown.push_back(z);
                    grown.insert(grown.end(), p.begin(), p.end());
                }
                return ImprovementStep{StepKind::extend_tail,
                                       {make_edge(endpoint, z), make_edge(z, zp)},
                                       {WalkShape::closed_path, std::move(grown)}};
            }
        }
        return std::nullopt;
    }

    std::optional<ImprovementStep> cycle_close_reopen() const {
        const int len = static_cast<int>(p.size());
        const int pairs = len / 2;
        std::vector<VertexId> cycle;
        std::vector<Edge> closure;
        if (pairs >= 2 && g.has_edge(p.front(), p.back())) {
            cycle = p;
            closure = {make_edge(p.front(), p.back())};
        } else {
            for (int i = 1; i < pairs && cycle.empty(); ++i) {
                if (!g.has_edge(p.front(), p[2 * i]) || !g.has_edge(p.back(), p[2 * i - 1]))
                    continue;
                cycle.reserve(len);
                cycle.push_back(p.front());
                for (int j = 2 * i; j < len; ++j) cycle.push_back(p[j]);
                for (int j = 2 * i - 1; j >= 1; --j) cycle.push_back(p[j]);
                closure = {make_edge(p.front(), p[2 * i]), make_edge(p.back(), p[2 * i - 1])};
            }
            if (cycle.empty()) return std::nullopt;
        }
        // reopen at an outside matched edge adjacent to the cycle
        for (const auto& [a, b] : outside) {
            for (int side = 0; side < 2; ++side) {
                VertexId x = side == 0 ? a : b;    // path starts x, y, c, ...
                VertexId y = side == 0 ? b : a;
                for (VertexId c : g.neighbors(y)) {
                    if (!on_path[c]) continue;
                    std::vector<VertexId> grown{x, y};
                    auto walk = cycle_walk_from(cycle, m, c);
                    grown.insert(grown.end(), walk.begin(), walk.end());
                    auto applied = closure;
                    applied.push_back(make_edge(y, c));
                    applied.push_back(make_edge(x, y));
                    return ImprovementStep{StepKind::cycle_close_reopen, std::move(applied),
                                           {WalkShape::closed_path, std::move(grown)}};
                }
            }
        }
        return std::nullopt;
    }

    std::optional<ImprovementStep> removable_rotation() const {
        const int len = static_cast<int>(p.size());
        const int pairs = len / 2;
        for (int i = 1; i < pairs; ++i) {
            if (!g.has_edge(p.front(), p[2 * i - 1]) || !g.has_edge(p.back(), p[2 * i]))
                continue;
            std::vector<VertexId> c0(p.begin(), p.begin() + 2 * i);
            std::vector<VertexId> c1(p.begin() + 2 * i, p.end());
            std::vector<char> in_c0(g.num_vertices(), 0);
            for (VertexId v : c0) in_c0[v] = 1;
            for (const auto& [a, b] : outside) {
                for (int side = 0; side < 2; ++side) {
                    VertexId x = side == 0 ? a : b;  // x attaches to c0, y to c1
                    VertexId y = side == 0 ? b : a;
                    VertexId c0_at = -1, c1_at = -1;
                    for (VertexId c : g.neighbors(x)) {
                        if (on_path[c] && in_c0[c]) {
                            c0_at = c;
                            break;
                        }
                    }
                    if (c0_at == -1) continue;
                    for (VertexId c : g.neighbors(y)) {
                        if (on_path[c] && !in_c0[c]) {
                            c1_at = c;
                            break;
                        }
                    }
                    if (c1_at == -1) continue;
                    auto grown = cycle_walk_ending_at(c0, m, c0_at);
                    grown.push_back(x);
                    grown.push_back(y);
                    auto tail = cycle_walk_from(c1, m, c1_at);
                    grown.insert(grown.end(), tail.begin(), tail.end());
                    std::vector<Edge> applied{make_edge(p.front(), p[2 * i - 1]),
                                              make_edge(p.back(), p[2 * i]),
                                              make_edge(c0_at, x), make_edge(x, y),
                                              make_edge(y, c1_at)};
                    return ImprovementStep{StepKind::removable_rotation, std::move(applied),
                                           {WalkShape::closed_path, std::move(grown)}};
                }
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<ImprovementStep> improve_once(const Graph& g, const Matching& m,
                                            const AlternatingWalk& path) {
    std::string why;
    if (path.shape != WalkShape::closed_path || !validate_walk(g, m, path, &why))
        throw std::invalid_argument("improve_once needs a valid closed alternating path: " + why);
    if (static_cast<int>(path.vertices.size()) == g.num_vertices())
        throw std::invalid_argument("improve_once needs a non-spanning path");
    MoveFinder finder(g, m, path.vertices);
    if (auto step = finder.extend_tail()) return step;
    if (auto step = finder.cycle_close_reopen()) return step;
    if (auto step = finder.removable_rotation()) return step;
    return std::nullopt;
}

bool validate_step(const Graph& g, const Matching& m, const AlternatingWalk& before,
                   const ImprovementStep& step, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (step.result.shape != WalkShape::closed_path) return fail("result is not a closed path");
    std::string sub;
    if (!validate_walk(g, m, step.result, &sub)) return fail("invalid result path: " + sub);
    if (step.result.length() < before.length() + 2)
        return fail("result is not at least one matched edge longer");
    std::vector<char> in_result(g.num_vertices(), 0);
    for (VertexId v : step.result.vertices) in_result[v] = 1;
    for (VertexId v : before.vertices)
        if (!in_result[v]) return fail("result dropped a vertex of the input path");
    return true;
}

BuildResult build_alt_hamilton_path(const Graph& g, const Matching& m, SearchLimits limits) {
    if (m.num_vertices() != g.num_vertices() || !m.is_perfect())
        throw std::invalid_argument("build_alt_hamilton_path requires a perfect matching");
    BuildResult result;
    const auto& first_edge = m.edges().front();
    AlternatingWalk current{WalkShape::closed_path, {first_edge.first, first_edge.second}};
    while (static_cast<int>(current.vertices.size()) < g.num_vertices()) {
        auto step = improve_once(g, m, current);
        if (!step) {
            // catalog stalled: decide exactly and keep the stalled state
            result.stalled_path = canonical_walk(current);
            auto exact = find_closed_alt_hamilton_path(g, m, limits);
            result.expansions = exact.expansions;
            switch (exact.status) {
                case SearchStatus::found:
                    result.status = BuildStatus::fallback_success;
                    result.walk = exact.walk;
                    break;
                case SearchStatus::budget_exceeded:
                    result.status = BuildStatus::budget_exceeded;
                    break;
                default:
                    result.status = BuildStatus::no_spanning_path;
                    break;
            }
            return result;
        }
        current = canonical_walk(step->result);
        result.trace.push_back(std::move(*step));
    }
    result.status = BuildStatus::engine_success;
    result.walk = canonical_walk(current);
    return result;
}

}  // namespace altmatch
