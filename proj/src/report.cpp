#include "altmatch/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "altmatch/graph_io.hpp"

namespace altmatch {

void attach_reproduction(TheoremReport& report, const Graph& g, const Matching& m) {
    report.graph6 = to_graph6(g);
    report.matching_edges = m.edges();
}

nlohmann::json walk_to_json(const Matching& m, const AlternatingWalk& w) {
    nlohmann::json j;
    j["shape"] = to_string(w.shape);
    j["vertices"] = w.vertices;
    j["matched_edge_flags"] = matched_edge_flags(m, w);
    return j;
}

nlohmann::json report_to_json(const TheoremReport& report) {
    nlohmann::json j;
    j["theorem_id"] = report.theorem_id;
    j["hypothesis_met"] = report.hypothesis_met;
    j["conclusion_evaluated"] = report.conclusion_evaluated;
    j["conclusion_holds"] = report.conclusion_holds;
    j["exception_branch"] =
        report.exception_branch ? nlohmann::json(*report.exception_branch) : nlohmann::json();
    if (report.witness) {
        nlohmann::json w;
        w["shape"] = to_string(report.witness->shape);
        w["vertices"] = report.witness->vertices;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["diagnostics"] = report.diagnostics;
    j["budget_exceeded"] = report.budget_exceeded;
    j["counterexample"] = report.is_counterexample();
    if (report.graph6) {
        j["graph6"] = *report.graph6;
        nlohmann::json me = nlohmann::json::array();
        for (const auto& [u, v] : report.matching_edges) me.push_back({u, v});
        j["matching"] = me;
    }
    return j;
}

std::string report_to_human(const TheoremReport& report) {
    std::ostringstream out;
    out << "theorem:       " << report.theorem_id << '\n';
    out << "hypothesis:    " << (report.hypothesis_met ? "met" : "not met") << '\n';
    if (report.conclusion_evaluated)
        out << "conclusion:    " << (report.conclusion_holds ? "holds" : "fails") << '\n';
    else
        out << "conclusion:    not evaluated\n";
    if (report.exception_branch) out << "exception:     " << *report.exception_branch << '\n';
    if (report.witness) {
        out << "witness:       " << to_string(report.witness->shape) << ' ';
        for (std::size_t i = 0; i < report.witness->vertices.size(); ++i) {
            if (i) out << '-';
            out << report.witness->vertices[i];
        }
        out << '\n';
    }
    for (const auto& [key, value] : report.diagnostics)
        out << "  " << key << " = " << value << '\n';
    if (report.budget_exceeded) out << "budget:        exceeded\n";
    if (report.is_counterexample()) {
        out << "COUNTEREXAMPLE";
        if (report.graph6) out << " graph6=" << *report.graph6;
        out << '\n';
    }
    return out.str();
}

}  // namespace altmatch
