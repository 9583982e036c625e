// report.cpp

#include "comdet/report.hpp"

#include <chrono>
#include <ostream>

#include "comdet/modularity.hpp"

namespace comdet {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

RunReport run_detect(const std::filesystem::path& input, InputFormat format,
                     const PipelineConfig& cfg, std::ostream* warnings) {
    RunReport report;
    report.input_path = input.string();
    report.format = format;
    report.config = cfg;
    report.graph = load_edge_list_file(input, format, warnings);

    const auto t0 = std::chrono::steady_clock::now();
    report.initial = louvain(report.graph, LouvainConfig{.seed = cfg.seed});
    report.louvain_seconds = seconds_since(t0);
    report.q_initial = modularity(report.graph, report.initial);
    return report;
}

RunReport run_pipeline(const std::filesystem::path& input, InputFormat format,
                       const PipelineConfig& cfg, std::ostream* warnings) {
    RunReport report = run_detect(input, format, cfg, warnings);

    const auto t0 = std::chrono::steady_clock::now();
    StabilizeConfig scfg{.epsilon = cfg.epsilon,
                         .max_moves = cfg.max_moves,
                         .allow_empty_target = cfg.allow_empty_target};
    auto [stable, trace] = stabilize(report.graph, report.initial, scfg);
    report.stabilize_seconds = seconds_since(t0);
    report.q_stabilized = trace.steps.empty() ? report.q_initial : trace.final_q;
    report.trace = std::move(trace);
    report.stabilized = std::move(stable);
    if (report.q_stabilized < report.q_initial)
        throw InvariantError("stabilized modularity fell below the initial value");

    report.legitimacy = legitimacy_matrix(report.graph, *report.stabilized);
    report.overlap = alpha_cut(*report.legitimacy, cfg.alpha);
    return report;
}

nlohmann::json trace_to_json(const MoveTrace& trace, const Graph& g) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : trace.steps)
        steps.push_back({{"vertex", g.label(s.move.vertex)},
                         {"from", s.move.from},
                         {"to", s.move.to},
                         {"gain", s.move.gain},
                         {"q_before", s.q_before},
                         {"q_after", s.q_after}});
    return steps;
}

nlohmann::json partition_to_json(const Partition& p, const Graph& g) {
    nlohmann::json communities = nlohmann::json::object();
    for (int c : p.community_ids()) {
        nlohmann::json members = nlohmann::json::array();
        for (int v : p.members(c)) members.push_back(g.label(v));
        communities[std::to_string(c)] = std::move(members);
    }
    return communities;
}

nlohmann::json legitimacy_to_json(const LegitimacyMatrix& lm, const Graph& g) {
    nlohmann::json rows = nlohmann::json::object();
    for (int v = 0; v < static_cast<int>(lm.values.size()); ++v) {
        nlohmann::json row = nlohmann::json::object();
        for (size_t j = 0; j < lm.community_ids.size(); ++j)
            row[std::to_string(lm.community_ids[j])] = lm.values[static_cast<size_t>(v)][j];
        rows[g.label(v)] = std::move(row);
    }
    return {{"denominator_rule",
             g.is_bipartite() ? "opposite-part members" : "community size minus self"},
            {"values", std::move(rows)}};
}

nlohmann::json report_to_json(const RunReport& report) {
    const Graph& g = report.graph;
    nlohmann::json j;
    j["input"] = {{"path", report.input_path},
                  {"format", report.format == InputFormat::bipartite ? "bipartite" : "unipartite"},
                  {"vertices", g.vertex_count()},
                  {"edges", g.edge_count()}};
    j["config"] = {{"seed", report.config.seed},
                   {"epsilon", report.config.epsilon},
                   {"alpha", report.config.alpha},
                   {"max_moves", report.config.max_moves},
                   {"allow_empty_target", report.config.allow_empty_target}};
    j["initial"] = {{"q", report.q_initial},
                    {"communities", partition_to_json(report.initial, g)}};
    if (report.stabilized) {
        j["stabilized"] = {{"q", report.q_stabilized},
                           {"communities", partition_to_json(*report.stabilized, g)}};
        j["trace"] = trace_to_json(*report.trace, g);
    }
    if (report.legitimacy) j["legitimacy"] = legitimacy_to_json(*report.legitimacy, g);
    if (report.overlap) {
        nlohmann::json memberships = nlohmann::json::object();
        for (int v = 0; v < g.vertex_count(); ++v) {
            memberships[g.label(v)] = {
                {"communities", report.overlap->memberships[static_cast<size_t>(v)]},
                {"own_below_alpha",
                 static_cast<bool>(report.overlap->own_below_alpha[static_cast<size_t>(v)])}};
        }
        nlohmann::json deviants = nlohmann::json::array();
        for (int v : report.overlap->deviants) deviants.push_back(g.label(v));
        j["overlap"] = {{"alpha", report.overlap->alpha},
                        {"memberships", std::move(memberships)},
                        {"deviants", std::move(deviants)}};
    }
    j["timings"] = {{"louvain_seconds", report.louvain_seconds},
                    {"stabilize_seconds", report.stabilize_seconds}};
    return j;
}

void write_dot(const Graph& g, const Partition& p, std::ostream& out) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                    "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5",
                                    "#fc8d62", "#8da0cb", "#e78ac3", "#a6d854", "#ffd92f",
                                    "#e5c494"};
    const size_t n_colors = sizeof(palette) / sizeof(palette[0]);
    std::map<int, size_t> color;
    for (int c : p.community_ids()) color[c] = color.size() % n_colors;

    out << "graph communities {\n";
    out << "  node [style=filled];\n";
    if (g.is_bipartite()) {
        // two-layer layout: one rank per part
        out << "  rankdir=TB;\n";
        for (Part part : {Part::top, Part::bottom}) {
            out << "  { rank=same;";
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.part(v) == part) out << " \"" << g.label(v) << "\";";
            out << " }\n";
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  \"" << g.label(v) << "\" [fillcolor=\"" << palette[color.at(p.community_of(v))]
            << "\", comment=\"community " << p.community_of(v) << "\"];\n";
    for (auto [u, v] : g.edges())
        out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
    out << "}\n";
}

}  // namespace comdet
