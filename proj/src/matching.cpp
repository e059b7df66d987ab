#include "altmatch/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace altmatch {

Matching Matching::from_pairs(const Graph& g, const std::vector<Edge>& pairs) {
    Matching m;
    m.partner_.assign(g.num_vertices(), -1);
    for (const auto& [u, v] : pairs) {
        if (!g.has_edge(u, v)) throw std::invalid_argument("matching pair is not a graph edge");
        if (m.partner_[u] != -1 || m.partner_[v] != -1)
            throw std::invalid_argument("vertex appears in two matching pairs");
        m.partner_[u] = v;
        m.partner_[v] = u;
        m.edges_.push_back(make_edge(u, v));
    }
    std::sort(m.edges_.begin(), m.edges_.end());
    return m;
}

Matching Matching::from_partner_array(const Graph& g, const std::vector<int>& partner) {
    std::vector<Edge> pairs;
    if (static_cast<int>(partner.size()) != g.num_vertices())
        throw std::invalid_argument("partner array size mismatch");
    for (int v = 0; v < g.num_vertices(); ++v) {
        int p = partner[v];
        if (p == -1) continue;
        if (p < 0 || p >= g.num_vertices() || partner[p] != v)
            throw std::invalid_argument("partner array is not symmetric");
        if (v < p) pairs.emplace_back(v, p);
    }
    return from_pairs(g, pairs);
}

bool Matching::is_perfect() const {
    for (int p : partner_)
        if (p == -1) return false;
    return true;
}

namespace {

// Edmonds blossom algorithm, array-based contraction.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g), n_(g.num_vertices()), match_(n_, -1), parent_(n_), base_(n_), used_(n_),
          in_blossom_(n_) {}

    std::vector<int> solve() {
        // greedy seed matching
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (VertexId to : g_.neighbors(v)) {
                if (match_[to] == -1) {
                    match_[v] = to;
                    match_[to] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int leaf = find_augmenting_path(v);
            if (leaf != -1) augment(leaf);
        }
        return match_;
    }

private:
    int lowest_common_base(int a, int b) {
        std::vector<char> mark(n_, 0);
        while (true) {
            a = base_[a];
            mark[a] = 1;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (mark[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (VertexId to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    // odd cycle: contract the blossom
                    int cur_base = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

}  // namespace

Matching max_matching(const Graph& g) {
    BlossomMatcher matcher(g);
    return Matching::from_partner_array(g, matcher.solve());
}

bool has_perfect_matching(const Graph& g) {
    if (g.num_vertices() % 2 != 0) return false;
    return max_matching(g).size() * 2 == g.num_vertices();
}

namespace {

struct PerfectEnumState {
    const Graph& g;
    const std::function<bool(const Matching&)>& visit;
    std::vector<int> partner;
    std::vector<Edge> chosen;
    bool stopped = false;

    bool emit() {
        Matching m = Matching::from_pairs(g, chosen);
        return visit(m);
    }

    void recurse() {
        if (stopped) return;
        int v = -1;
        for (int i = 0; i < g.num_vertices(); ++i) {
            if (partner[i] == -1) {
                v = i;
                break;
            }
        }
        if (v == -1) {
            if (!emit()) stopped = true;
            return;
        }
        for (VertexId to : g.neighbors(v)) {
            if (to < v || partner[to] != -1) continue;
            partner[v] = to;
            partner[to] = v;
            chosen.emplace_back(v, to);
            recurse();
            chosen.pop_back();
            partner[v] = -1;
            partner[to] = -1;
            if (stopped) return;
        }
    }
};

}  // namespace

void enum_perfect_matchings(const Graph& g, const std::function<bool(const Matching&)>& visit) {
    if (g.num_vertices() % 2 != 0) return;
    PerfectEnumState state{g, visit, std::vector<int>(g.num_vertices(), -1), {}, false};
    state.recurse();
}

std::vector<Matching> all_perfect_matchings(const Graph& g) {
    std::vector<Matching> out;
    enum_perfect_matchings(g, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

namespace {

struct KEnumState {
    const Graph& g;
    int k;
    const std::function<bool(const Matching&)>& visit;
    std::vector<Edge> all_edges;
    std::vector<char> covered;
    std::vector<Edge> chosen;
    int uncovered;
    bool stopped = false;

    void recurse(std::size_t first_edge) {
        if (stopped) return;
        if (static_cast<int>(chosen.size()) == k) {
            Matching m = Matching::from_pairs(g, chosen);
            if (!visit(m)) stopped = true;
            return;
        }
        int need = k - static_cast<int>(chosen.size());
        if (uncovered < 2 * need) return;  // not enough vertices left
        for (std::size_t i = first_edge; i < all_edges.size(); ++i) {
            auto [u, v] = all_edges[i];
            if (covered[u] || covered[v]) continue;
            covered[u] = covered[v] = 1;
            uncovered -= 2;
            chosen.push_back(all_edges[i]);
            recurse(i + 1);
            chosen.pop_back();
            covered[u] = covered[v] = 0;
            uncovered += 2;
            if (stopped) return;
        }
    }
};

}  // namespace

void enum_k_matchings(const Graph& g, int k, const std::function<bool(const Matching&)>& visit) {
    if (k < 0) throw std::invalid_argument("matching size must be nonnegative");
    KEnumState state{g,   k, visit, g.edges(), std::vector<char>(g.num_vertices(), 0),
                     {},  g.num_vertices()};
    state.recurse(0);
}

std::vector<Matching> all_k_matchings(const Graph& g, int k) {
    std::vector<Matching> out;
    enum_k_matchings(g, k, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

}  // namespace altmatch
