#include "altmatch/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "altmatch/graph_io.hpp"
#include "altmatch/matching.hpp"

namespace altmatch {

namespace {

std::vector<Edge> pair_slots(int nu) {
    std::vector<Edge> slots;
    for (int i = 0; i < nu; ++i)
        for (int j = i + 1; j < nu; ++j) slots.emplace_back(i, j);
    return slots;
}

Graph graph_from_mask(int nu, const std::vector<Edge>& slots, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1) edges.push_back(slots[b]);
    return Graph(nu, edges);
}

}  // namespace

std::uint64_t labeled_graph_count(int nu) {
    if (nu < 1 || nu > 6) throw std::invalid_argument("labeled enumeration only covers 1 <= nu <= 6");
    return std::uint64_t{1} << (nu * (nu - 1) / 2);
}

void for_each_labeled_graph(int nu, bool connected_only,
                            const std::function<void(const Graph&)>& visit) {
    const std::uint64_t total = labeled_graph_count(nu);
    const auto slots = pair_slots(nu);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_mask(nu, slots, mask);
        if (connected_only && !is_connected(g)) continue;
        visit(g);
    }
}

Graph6File ingest_graph6(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    Graph6File out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.graphs.push_back(from_graph6(line));
        } catch (const std::exception& e) {
            out.issues.push_back({lineno, e.what()});
        }
    }
    return out;
}

namespace {

struct Instance {
    const Graph* graph;
    std::uint64_t index;  // position in the source stream
};

// Runs all requested theorems over one (graph, matching) pair.
void check_instance(const SweepConfig& cfg, const Graph& g, const Matching& m,
                    std::uint64_t graph_index, SweepSummary& acc) {
    CheckOptions opts;
    opts.limits = cfg.limits;
    opts.attach_payload = cfg.attach_payloads;
    for (const auto& id : cfg.theorem_ids) {
        TheoremReport report;
        if (id == "thm21") report = check_thm21(g, m, opts);
        else if (id == "thm31") report = check_thm31(g, m, opts);
        else if (id == "lemma41") report = check_lemma41(g, m, opts);
        else if (id == "thm42") report = check_thm42(g, m, opts);
        else if (id == "cor43") report = check_corollary43(g, (g.num_vertices() + 3) / 4, m, opts);
        else throw std::invalid_argument("unknown theorem id: " + id);

        auto& tally = acc.per_theorem[id];
        ++tally.instances;
        if (!report.hypothesis_met) continue;
        ++tally.hypothesis_met;
        if (report.budget_exceeded) {
            ++tally.budget_exceeded;
            ++acc.budget_exceeded_total;
        } else if (report.conclusion_holds) {
            ++tally.conclusion_held;
        } else if (report.exception_branch) {
            ++tally.exceptions;
        } else {
            ++tally.counterexamples;
            ++acc.counterexamples_total;
            report.diagnostics["graph_index"] = static_cast<long long>(graph_index);
            acc.counterexamples.push_back(report);
        }
    }
}

void process_graph(const SweepConfig& cfg, const Graph& g, std::uint64_t graph_index,
                   SweepSummary& acc) {
    ++acc.graphs_seen;
    if (!is_connected(g)) return;  // the statements assume connected graphs
    ++acc.graphs_checked;
    if (g.num_vertices() % 2 != 0) return;  // no perfect matching to quantify over
    if (cfg.all_perfect_matchings) {
        enum_perfect_matchings(g, [&](const Matching& m) {
            ++acc.matchings_seen;
            check_instance(cfg, g, m, graph_index, acc);
            return true;
        });
    } else {
        enum_perfect_matchings(g, [&](const Matching& m) {
            ++acc.matchings_seen;
            check_instance(cfg, g, m, graph_index, acc);
            return false;
        });
    }
}

void merge(SweepSummary& into, SweepSummary&& part) {
    into.graphs_seen += part.graphs_seen;
    into.graphs_checked += part.graphs_checked;
    into.matchings_seen += part.matchings_seen;
    for (const auto& [id, tally] : part.per_theorem) {
        auto& t = into.per_theorem[id];
        t.instances += tally.instances;
        t.hypothesis_met += tally.hypothesis_met;
        t.conclusion_held += tally.conclusion_held;
        t.exceptions += tally.exceptions;
        t.counterexamples += tally.counterexamples;
        t.budget_exceeded += tally.budget_exceeded;
    }
    into.counterexamples_total += part.counterexamples_total;
    into.budget_exceeded_total += part.budget_exceeded_total;
    into.counterexamples.insert(into.counterexamples.end(),
                                std::make_move_iterator(part.counterexamples.begin()),
                                std::make_move_iterator(part.counterexamples.end()));
}

void validate_config(const SweepConfig& cfg) {
    if (cfg.workers < 1) throw std::invalid_argument("workers must be positive");
    if (cfg.limits.max_expansions == 0) throw std::invalid_argument("budget must be positive");
    if (cfg.graph6_path.empty()) {
        for (int nu : cfg.nu_range) {
            if (nu < 2 || nu % 2 != 0) throw std::invalid_argument("nu_range must list even orders >= 2");
            if (nu > 6) throw std::invalid_argument("builtin enumeration stops at nu = 6; supply a graph6 catalog");
        }
    }
}

}  // namespace

SweepSummary run_sweep(const SweepConfig& cfg) {
    validate_config(cfg);
    const auto t0 = std::chrono::steady_clock::now();

    // materialize the source stream as (builder, count) so workers can slice it
    std::vector<Graph> catalog;
    struct Span {
        int nu;
        std::uint64_t count;
        std::vector<Edge> slots;
    };
    std::vector<Span> builtin_spans;
    std::uint64_t total = 0;
    if (!cfg.graph6_path.empty()) {
        catalog = ingest_graph6(cfg.graph6_path).graphs;
        total = catalog.size();
    } else {
        for (int nu : cfg.nu_range) {
            builtin_spans.push_back({nu, labeled_graph_count(nu), pair_slots(nu)});
            total += labeled_graph_count(nu);
        }
    }

    auto graph_at = [&](std::uint64_t index) -> Graph {
        if (!cfg.graph6_path.empty()) return catalog[index];
        for (const auto& span : builtin_spans) {
            if (index < span.count) return graph_from_mask(span.nu, span.slots, index);
            index -= span.count;
        }
        throw std::logic_error("graph index out of range");
    };

    const int workers = static_cast<int>(std::min<std::uint64_t>(cfg.workers, std::max<std::uint64_t>(total, 1)));
    std::vector<SweepSummary> parts(workers);
    auto work = [&](int w) {
        const std::uint64_t lo = total * w / workers;
        const std::uint64_t hi = total * (w + 1) / workers;
        for (std::uint64_t i = lo; i < hi; ++i) {
            Graph g = graph_at(i);
            process_graph(cfg, g, i, parts[w]);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    SweepSummary summary;
    for (auto& part : parts) merge(summary, std::move(part));
    std::sort(summary.counterexamples.begin(), summary.counterexamples.end(),
              [](const TheoremReport& a, const TheoremReport& b) {
                  auto ka = a.diagnostics.count("graph_index") ? a.diagnostics.at("graph_index") : 0;
                  auto kb = b.diagnostics.count("graph_index") ? b.diagnostics.at("graph_index") : 0;
                  if (ka != kb) return ka < kb;
                  return a.theorem_id < b.theorem_id;
              });
    summary.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
    SweepConfig cfg;
    if (j.contains("nu")) cfg.nu_range = j.at("nu").get<std::vector<int>>();
    if (j.contains("graph6")) cfg.graph6_path = j.at("graph6").get<std::string>();
    cfg.theorem_ids = j.at("theorems").get<std::vector<std::string>>();
    if (j.contains("matching_mode")) {
        std::string mode = j.at("matching_mode").get<std::string>();
        if (mode == "all") cfg.all_perfect_matchings = true;
        else if (mode == "one") cfg.all_perfect_matchings = false;
        else throw std::invalid_argument("matching_mode must be \"all\" or \"one\"");
    }
    if (j.contains("budget")) cfg.limits.max_expansions = j.at("budget").get<std::uint64_t>();
    if (j.contains("workers")) cfg.workers = j.at("workers").get<int>();
    return cfg;
}

SweepConfig read_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sweep config: " + path);
    nlohmann::json j;
    in >> j;
    return sweep_config_from_json(j);
}

nlohmann::json summary_to_json(const SweepSummary& summary) {
    nlohmann::json j;
    j["graphs_seen"] = summary.graphs_seen;
    j["graphs_checked"] = summary.graphs_checked;
    j["matchings_seen"] = summary.matchings_seen;
    nlohmann::json per = nlohmann::json::object();
    for (const auto& [id, t] : summary.per_theorem) {
        per[id] = {{"instances", t.instances},
                   {"hypothesis_met", t.hypothesis_met},
                   {"conclusion_held", t.conclusion_held},
                   {"exceptions", t.exceptions},
                   {"counterexamples", t.counterexamples},
                   {"budget_exceeded", t.budget_exceeded}};
    }
    j["per_theorem"] = per;
    j["counterexamples_total"] = summary.counterexamples_total;
    j["budget_exceeded_total"] = summary.budget_exceeded_total;
    j["wall_time_seconds"] = summary.wall_time_seconds;
    return j;
}

int exit_code_for(const SweepSummary& summary) {
    if (summary.counterexamples_total > 0) return 2;
    if (summary.budget_exceeded_total > 0) return 3;
    return 0;
}

TheoremReport reverify(const nlohmann::json& record, const CheckOptions& opts) {
    const std::string id = record.at("theorem_id").get<std::string>();
    Graph g = from_graph6(record.at("graph6").get<std::string>());
    std::vector<Edge> pairs;
    for (const auto& uv : record.at("matching"))
        pairs.push_back(make_edge(uv.at(0).get<int>(), uv.at(1).get<int>()));
    if (id == "lovasz-woodall") return probe_lovasz_woodall(g, pairs, opts);
    Matching m = Matching::from_pairs(g, pairs);
    if (id == "thm21") return check_thm21(g, m, opts);
    if (id == "thm31") return check_thm31(g, m, opts);
    if (id == "lemma41") return check_lemma41(g, m, opts);
    if (id == "thm42") return check_thm42(g, m, opts);
    if (id == "cor43") return check_corollary43(g, (g.num_vertices() + 3) / 4, m, opts);
    throw std::invalid_argument("unknown theorem id in record: " + id);
}

}  // namespace altmatch
