#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "altmatch/constructor.hpp"
#include "altmatch/extendability.hpp"
#include "altmatch/families.hpp"
#include "altmatch/graph_io.hpp"
#include "altmatch/harness.hpp"
#include "altmatch/theorems.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitCounterexample = 2;
constexpr int kExitBudget = 3;

using altmatch::Graph;
using altmatch::Matching;
using nlohmann::json;

Graph load_graph(const std::string& path) {
    try {
        return altmatch::read_edge_list_file(path);
    } catch (const std::exception& e) {
        std::cerr << "graph file " << path << ": " << e.what() << '\n';
        std::exit(kExitUsage);
    }
}

Matching load_matching(const std::string& path, const Graph& g, bool require_perfect) {
    try {
        Matching m = altmatch::read_matching_file(path, g);
        if (require_perfect && !m.is_perfect()) {
            for (int v = 0; v < g.num_vertices(); ++v) {
                if (!m.covers(v)) {
                    std::cerr << "matching file " << path << ": not perfect, vertex " << v
                              << " is uncovered\n";
                    break;
                }
            }
            std::exit(kExitUsage);
        }
        return m;
    } catch (const std::exception& e) {
        std::cerr << "matching file " << path << ": " << e.what() << '\n';
        std::exit(kExitUsage);
    }
}

void emit_report(const altmatch::TheoremReport& report, const std::string& format) {
    if (format == "human")
        std::cout << altmatch::report_to_human(report);
    else
        std::cout << altmatch::report_to_json(report).dump(2) << '\n';
}

int report_exit(const altmatch::TheoremReport& report) {
    if (report.is_counterexample()) return kExitCounterexample;
    if (report.budget_exceeded) return kExitBudget;
    return 0;
}

std::vector<altmatch::Edge> parse_edge_tokens(const std::string& text) {
    std::vector<altmatch::Edge> edges;
    std::istringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto dash = token.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("expected \"u-v\" edge token: " + token);
        edges.push_back(altmatch::make_edge(std::stoi(token.substr(0, dash)),
                                            std::stoi(token.substr(dash + 1))));
    }
    if (edges.empty()) throw std::invalid_argument("no edges given");
    return edges;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alternating-matching toolkit: exact searches, statement checkers, "
                 "family generators and exhaustive sweeps"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "json or human")->check(CLI::IsMember({"json", "human"}));

    std::string graph_path, matching_path, theorem, target, family_spec, out_dir = ".";
    std::string config_path, summary_out, ce_out, l_edges_text;
    std::uint64_t budget = 100'000'000;
    int cor_k = -1;
    int workers_flag = 0;
    bool always_run = false;

    auto* check = app.add_subcommand("check", "evaluate a statement checker on one instance");
    check->add_option("--theorem", theorem, "thm21 thm31 lemma41 thm42 cor43")->required();
    check->add_option("-g,--graph", graph_path)->required();
    check->add_option("-m,--matching", matching_path)->required();
    check->add_option("--k", cor_k, "matching size for cor43 (default ceil(nu/4))");
    check->add_flag("--always-run-conclusion", always_run);
    check->add_option("--budget", budget);

    auto* search = app.add_subcommand("search", "run one exact search");
    search->add_option("--target", target,
                       "alt-ham-cycle closed-alt-ham-path longest-alt-cycle longest-closed-alt-path")
        ->required();
    search->add_option("-g,--graph", graph_path)->required();
    search->add_option("-m,--matching", matching_path)->required();
    search->add_option("--budget", budget);

    auto* build = app.add_subcommand("build-path", "grow a spanning closed alternating path");
    build->add_option("-g,--graph", graph_path)->required();
    build->add_option("-m,--matching", matching_path)->required();
    build->add_option("--budget", budget);

    auto* gen = app.add_subcommand("gen", "generate a named family instance");
    gen->add_option("--family", family_spec, "g1:n=2 remark:t=1 k:n=5 kb:a=3,b=3 cycle:n=6")
        ->required();
    gen->add_option("-o,--out", out_dir, "output directory");

    auto* sweep = app.add_subcommand("sweep", "exhaustive statement sweep from a config file");
    sweep->add_option("--config", config_path)->required();
    sweep->add_option("--summary-out", summary_out);
    sweep->add_option("--counterexamples-out", ce_out);
    sweep->add_option("--workers", workers_flag);

    auto* profile = app.add_subcommand("extend-profile", "extendability profile of a graph");
    profile->add_option("-g,--graph", graph_path)->required();

    auto* probe = app.add_subcommand("probe-lw", "cycle through independent edges (exploratory)");
    probe->add_option("-g,--graph", graph_path)->required();
    probe->add_option("-L,--edges", l_edges_text, "comma-separated u-v pairs")->required();
    probe->add_option("--budget", budget);

    for (auto* sub : {check, search, build, gen, sweep, profile, probe}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    altmatch::CheckOptions opts;
    opts.limits.max_expansions = budget;
    opts.always_run_conclusion = always_run;

    try {
        if (check->parsed()) {
            Graph g = load_graph(graph_path);
            Matching m = load_matching(matching_path, g, true);
            altmatch::TheoremReport report;
            if (theorem == "thm21") report = altmatch::check_thm21(g, m, opts);
            else if (theorem == "thm31") report = altmatch::check_thm31(g, m, opts);
            else if (theorem == "lemma41") report = altmatch::check_lemma41(g, m, opts);
            else if (theorem == "thm42") report = altmatch::check_thm42(g, m, opts);
            else if (theorem == "cor43") {
                int k = cor_k >= 0 ? cor_k : (g.num_vertices() + 3) / 4;
                report = altmatch::check_corollary43(g, k, m, opts);
            } else {
                std::cerr << "unknown theorem: " << theorem << '\n';
                return kExitUsage;
            }
            emit_report(report, format);
            return report_exit(report);
        }

        if (search->parsed()) {
            Graph g = load_graph(graph_path);
            Matching m = load_matching(matching_path, g, true);
            altmatch::WalkSearch res;
            if (target == "alt-ham-cycle") res = altmatch::find_alt_hamilton_cycle(g, m, opts.limits);
            else if (target == "closed-alt-ham-path")
                res = altmatch::find_closed_alt_hamilton_path(g, m, opts.limits);
            else if (target == "longest-alt-cycle")
                res = altmatch::longest_alt_cycle(g, m, opts.limits);
            else if (target == "longest-closed-alt-path")
                res = altmatch::longest_closed_alt_path(g, m, opts.limits);
            else {
                std::cerr << "unknown search target: " << target << '\n';
                return kExitUsage;
            }
            if (format == "human") {
                std::cout << target << ": " << altmatch::to_string(res.status);
                if (res.walk) {
                    std::cout << " length " << res.walk->length() << " |";
                    for (auto v : res.walk->vertices) std::cout << ' ' << v;
                }
                std::cout << '\n';
            } else {
                json j;
                j["target"] = target;
                j["status"] = altmatch::to_string(res.status);
                j["expansions"] = res.expansions;
                j["witness"] = res.walk ? altmatch::walk_to_json(m, *res.walk) : json();
                std::cout << j.dump(2) << '\n';
            }
            return res.status == altmatch::SearchStatus::budget_exceeded ? kExitBudget : 0;
        }

        if (build->parsed()) {
            Graph g = load_graph(graph_path);
            Matching m = load_matching(matching_path, g, true);
            auto res = altmatch::build_alt_hamilton_path(g, m, opts.limits);
            json j;
            j["status"] = altmatch::to_string(res.status);
            j["walk"] = res.walk ? altmatch::walk_to_json(m, *res.walk) : json();
            json steps = json::array();
            for (const auto& step : res.trace) {
                json s;
                s["kind"] = altmatch::to_string(step.kind);
                json applied = json::array();
                for (const auto& [u, v] : step.applied_edges) applied.push_back({u, v});
                s["applied_edges"] = applied;
                s["path_after"] = step.result.vertices;
                steps.push_back(s);
            }
            j["trace"] = steps;
            j["stalled_path"] = res.stalled_path ? json(res.stalled_path->vertices) : json();
            std::cout << j.dump(2) << '\n';
            return res.status == altmatch::BuildStatus::budget_exceeded ? kExitBudget : 0;
        }

        if (gen->parsed()) {
            altmatch::FamilyOutput fam = altmatch::make_family(family_spec);
            std::filesystem::create_directories(out_dir);
            auto graph_file = std::filesystem::path(out_dir) / "graph.edges";
            auto matching_file = std::filesystem::path(out_dir) / "matching.txt";
            {
                std::ofstream out(graph_file);
                altmatch::write_edge_list(out, fam.graph);
            }
            json j;
            j["family"] = fam.name;
            j["nu"] = fam.graph.num_vertices();
            j["edges"] = fam.graph.num_edges();
            j["graph_file"] = graph_file.string();
            if (fam.matching) {
                std::ofstream out(matching_file);
                altmatch::write_matching(out, *fam.matching);
                j["matching_file"] = matching_file.string();
                j["matching_size"] = fam.matching->size();
            }
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (sweep->parsed()) {
            altmatch::SweepConfig cfg = altmatch::read_sweep_config(config_path);
            if (const char* env = std::getenv("ALTMATCH_WORKERS")) cfg.workers = std::atoi(env);
            if (workers_flag > 0) cfg.workers = workers_flag;
            auto summary = altmatch::run_sweep(cfg);
            json j = altmatch::summary_to_json(summary);
            if (summary_out.empty()) {
                std::cout << j.dump(2) << '\n';
            } else {
                std::ofstream out(summary_out);
                out << j.dump(2) << '\n';
            }
            if (!ce_out.empty()) {
                std::ofstream out(ce_out);
                for (const auto& record : summary.counterexamples)
                    out << altmatch::report_to_json(record).dump() << '\n';
            }
            return altmatch::exit_code_for(summary);
        }

        if (profile->parsed()) {
            Graph g = load_graph(graph_path);
            auto prof = altmatch::extendability_profile(g);
            json j;
            j["max_k"] = prof.max_k;
            j["failing_k"] = prof.failing_k ? json(*prof.failing_k) : json();
            json we = json::array();
            if (prof.witness)
                for (const auto& [u, v] : prof.witness->edges()) we.push_back({u, v});
            j["witness_edges"] = we;
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (probe->parsed()) {
            Graph g = load_graph(graph_path);
            auto edges = parse_edge_tokens(l_edges_text);
            auto report = altmatch::probe_lovasz_woodall(g, edges, opts);
            emit_report(report, format);
            return report_exit(report);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
