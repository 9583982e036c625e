// louvain.hpp
//
// Louvain community detection: repeated local moving of vertices to the
// neighboring community with best modularity gain, then aggregation of
// communities into a weighted graph, until no level improves. Aggregate
// levels are weighted internally; weights never reach the public Graph type.

#ifndef COMDET_LOUVAIN_HPP
#define COMDET_LOUVAIN_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "comdet/graph.hpp"
#include "comdet/partition.hpp"

namespace comdet {

struct LouvainConfig {
    std::uint64_t seed = 0;   // vertex-order shuffling
    int max_levels = 32;
    double min_gain = 1e-9;   // smallest gain that counts as an improvement
};

/// Weighted graph whose vertices are the communities of the previous level.
/// The self-loop of an aggregate vertex is 2 * (internal edge weight) of the
/// community it stands for, so total_weight is conserved across levels.
struct AggregateGraph {
    std::vector<std::vector<std::pair<int, double>>> adjacency;  // (neighbor, weight), no self entries
    std::vector<double> self_loop;
    std::vector<double> strength;  // weighted degree incl. self_loop
    double total_weight = 0.0;     // sum of strengths == 2m

    int vertex_count() const { return static_cast<int>(adjacency.size()); }

    static AggregateGraph from_graph(const Graph& g);
};

/// One sweep over `order`: each vertex moves to the neighboring community
/// with maximal gain above min_gain (ties to the lowest community id).
/// Returns true iff any vertex moved. `community_of` is updated in place.
bool local_move_pass(const AggregateGraph& ag, std::vector<int>& community_of,
                     std::span<const int> order, double min_gain);

/// Collapse communities into single vertices. Community ids may be sparse;
/// aggregate vertex ids are dense, ascending by community id. When given,
/// `community_to_vertex` receives that mapping.
AggregateGraph aggregate(const AggregateGraph& ag, const std::vector<int>& community_of,
                         std::vector<std::pair<int, int>>* community_to_vertex = nullptr);

/// Q of a partition of the aggregate; equals Q of the unrolled partition of
/// the original graph (the aggregation identity).
double weighted_modularity(const AggregateGraph& ag, const std::vector<int>& community_of);

/// Full Louvain run; returns a partition of the original vertices with dense
/// community ids. Deterministic given cfg.seed.
Partition louvain(const Graph& g, const LouvainConfig& cfg = {});

}  // namespace comdet

#endif  // COMDET_LOUVAIN_HPP
