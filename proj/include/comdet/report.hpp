// report.hpp
//
// Pipeline orchestration (load -> louvain -> stabilize -> overlap) and the
// machine-readable outputs: RunReport JSON, move-trace JSON, legitimacy CSV
// and Graphviz DOT of the final communities.

#ifndef COMDET_REPORT_HPP
#define COMDET_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "comdet/graph.hpp"
#include "comdet/louvain.hpp"
#include "comdet/nash.hpp"
#include "comdet/overlap.hpp"
#include "comdet/partition.hpp"

namespace comdet {

struct PipelineConfig {
    std::uint64_t seed = 0;
    double epsilon = 1e-9;
    double alpha = 0.2;
    int max_moves = 100000;
    bool allow_empty_target = false;
};

/// Everything one run produces; self-contained enough to re-run from the
/// echoed config. Timings are informational and excluded from the
/// determinism contract.
struct RunReport {
    std::string input_path;
    InputFormat format = InputFormat::unipartite;
    PipelineConfig config;
    Graph graph;
    Partition initial;
    double q_initial = 0.0;
    std::optional<Partition> stabilized;
    double q_stabilized = 0.0;
    std::optional<MoveTrace> trace;
    std::optional<LegitimacyMatrix> legitimacy;
    std::optional<OverlapReport> overlap;
    double louvain_seconds = 0.0;
    double stabilize_seconds = 0.0;
};

/// load + Louvain (partition only).
RunReport run_detect(const std::filesystem::path& input, InputFormat format,
                     const PipelineConfig& cfg, std::ostream* warnings = nullptr);

/// load + Louvain + stabilize + overlap.
RunReport run_pipeline(const std::filesystem::path& input, InputFormat format,
                       const PipelineConfig& cfg, std::ostream* warnings = nullptr);

nlohmann::json trace_to_json(const MoveTrace& trace, const Graph& g);
nlohmann::json partition_to_json(const Partition& p, const Graph& g);
nlohmann::json legitimacy_to_json(const LegitimacyMatrix& lm, const Graph& g);
nlohmann::json report_to_json(const RunReport& report);

/// Final communities as Graphviz DOT: vertices colored by community; for
/// bipartite graphs the two parts sit on two ranked layers.
void write_dot(const Graph& g, const Partition& p, std::ostream& out);

}  // namespace comdet

#endif  // COMDET_REPORT_HPP
