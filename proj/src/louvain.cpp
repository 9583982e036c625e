// louvain.cpp

#include "comdet/louvain.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "portable_random.hpp"

namespace comdet {

AggregateGraph AggregateGraph::from_graph(const Graph& g) {
    AggregateGraph ag;
    const int n = g.vertex_count();
    ag.adjacency.resize(static_cast<size_t>(n));
    ag.self_loop.assign(static_cast<size_t>(n), 0.0);
    ag.strength.assign(static_cast<size_t>(n), 0.0);
    for (int v = 0; v < n; ++v) {
        auto& row = ag.adjacency[static_cast<size_t>(v)];
        row.reserve(g.neighbors(v).size());
        for (int x : g.neighbors(v)) row.emplace_back(x, 1.0);
        ag.strength[static_cast<size_t>(v)] = static_cast<double>(g.degree(v));
        ag.total_weight += ag.strength[static_cast<size_t>(v)];
    }
    return ag;
}

namespace {

// Sum of strengths per community, indexed by community id.
std::map<int, double> community_strength(const AggregateGraph& ag,
                                         const std::vector<int>& community_of) {
    std::map<int, double> out;
    for (int v = 0; v < ag.vertex_count(); ++v)
        out[community_of[static_cast<size_t>(v)]] += ag.strength[static_cast<size_t>(v)];
    return out;
}

}  // namespace

bool local_move_pass(const AggregateGraph& ag, std::vector<int>& community_of,
                     std::span<const int> order, double min_gain) {
    const double w_total = ag.total_weight / 2.0;  // m
    auto comm_strength = community_strength(ag, community_of);
    bool improved = false;

    std::map<int, double> link_weight;  // weight from the current vertex into each community
    for (int v : order) {
        const int cur = community_of[static_cast<size_t>(v)];
        const double s_v = ag.strength[static_cast<size_t>(v)];
        link_weight.clear();
        link_weight[cur];  // staying put is always a candidate
        for (const auto& [x, w] : ag.adjacency[static_cast<size_t>(v)])
            link_weight[community_of[static_cast<size_t>(x)]] += w;

        const double l_cur = link_weight[cur];
        const double d_cur = comm_strength[cur];  // includes v
        int best_comm = cur;
        double best_gain = min_gain;  // candidates must exceed the threshold
        for (const auto& [c, l_c] : link_weight) {
            if (c == cur) continue;
            const double d_c = comm_strength[c];  // v not a member
            const double gain = (l_c - l_cur) / w_total -
                                (s_v * s_v + s_v * (d_c - d_cur)) / (2.0 * w_total * w_total);
            // strict >: equal gains keep the earlier (lowest) community id
            if (gain > best_gain) {
                best_gain = gain;
                best_comm = c;
            }
        }
        if (best_comm != cur) {
            comm_strength[cur] -= s_v;
            comm_strength[best_comm] += s_v;
            community_of[static_cast<size_t>(v)] = best_comm;
            improved = true;
        }
    }
    return improved;
}

AggregateGraph aggregate(const AggregateGraph& ag, const std::vector<int>& community_of,
                         std::vector<std::pair<int, int>>* community_to_vertex) {
    std::map<int, int> dense;  // community id -> aggregate vertex, ascending
    for (int c : community_of) dense.emplace(c, 0);
    int next = 0;
    for (auto& [c, idx] : dense) idx = next++;
    if (community_to_vertex) {
        community_to_vertex->clear();
        for (const auto& [c, idx] : dense) community_to_vertex->emplace_back(c, idx);
    }

    AggregateGraph out;
    const int k = next;
    out.adjacency.resize(static_cast<size_t>(k));
    out.self_loop.assign(static_cast<size_t>(k), 0.0);
    out.strength.assign(static_cast<size_t>(k), 0.0);

    std::vector<std::map<int, double>> cross(static_cast<size_t>(k));
    for (int v = 0; v < ag.vertex_count(); ++v) {
        const int cv = dense.at(community_of[static_cast<size_t>(v)]);
        out.self_loop[static_cast<size_t>(cv)] += ag.self_loop[static_cast<size_t>(v)];
        for (const auto& [x, w] : ag.adjacency[static_cast<size_t>(v)]) {
            const int cx = dense.at(community_of[static_cast<size_t>(x)]);
            if (cx == cv)
                out.self_loop[static_cast<size_t>(cv)] += w;  // each intra edge seen twice -> weight 2e
            else
                cross[static_cast<size_t>(cv)][cx] += w;
        }
    }
    for (int c = 0; c < k; ++c) {
        auto& row = out.adjacency[static_cast<size_t>(c)];
        row.assign(cross[static_cast<size_t>(c)].begin(), cross[static_cast<size_t>(c)].end());
        double s = out.self_loop[static_cast<size_t>(c)];
        for (const auto& [x, w] : row) s += w;
        out.strength[static_cast<size_t>(c)] = s;
        out.total_weight += s;
    }
    if (std::abs(out.total_weight - ag.total_weight) > 1e-6 * std::max(1.0, ag.total_weight))
        throw InvariantError("aggregation does not conserve total weight");
    return out;
}

double weighted_modularity(const AggregateGraph& ag, const std::vector<int>& community_of) {
    const double w_total = ag.total_weight / 2.0;
    // internal[c] accumulates every intra-community edge twice (cross entries
    // are seen from both ends, self-loops already carry weight 2e), so
    // e_C / m = internal[c] / (2 w_total).
    std::map<int, double> internal;
    auto strength = community_strength(ag, community_of);
    for (int v = 0; v < ag.vertex_count(); ++v) {
        const int cv = community_of[static_cast<size_t>(v)];
        internal[cv] += ag.self_loop[static_cast<size_t>(v)];
        for (const auto& [x, w] : ag.adjacency[static_cast<size_t>(v)])
            if (community_of[static_cast<size_t>(x)] == cv) internal[cv] += w;
    }
    double q = 0.0;
    for (const auto& [c, d_c] : strength) {
        const double frac = d_c / (2.0 * w_total);
        q += internal[c] / (2.0 * w_total) - frac * frac;
    }
    return q;
}

Partition louvain(const Graph& g, const LouvainConfig& cfg) {
    if (g.edge_count() == 0) throw InputError("empty graph has undefined modularity");
    if (cfg.max_levels < 1) throw InputError("max_levels must be >= 1");
    if (cfg.min_gain < 0) throw InputError("min_gain must be nonnegative");
    std::mt19937_64 rng(cfg.seed);

    AggregateGraph ag = AggregateGraph::from_graph(g);
    // membership[v] = aggregate vertex currently standing for original vertex v
    std::vector<int> membership(static_cast<size_t>(g.vertex_count()));
    std::iota(membership.begin(), membership.end(), 0);

    for (int level = 0; level < cfg.max_levels; ++level) {
        std::vector<int> community_of(static_cast<size_t>(ag.vertex_count()));
        std::iota(community_of.begin(), community_of.end(), 0);
        std::vector<int> order(community_of);
        bool moved_any = false;
        while (true) {
            detail::shuffle(order, rng);
            if (!local_move_pass(ag, community_of, order, cfg.min_gain)) break;
            moved_any = true;
        }
        if (!moved_any) break;

        std::vector<std::pair<int, int>> comm_to_vertex;
        ag = aggregate(ag, community_of, &comm_to_vertex);
        std::map<int, int> dense(comm_to_vertex.begin(), comm_to_vertex.end());
        for (auto& mv : membership) mv = dense.at(community_of[static_cast<size_t>(mv)]);
        if (ag.vertex_count() == static_cast<int>(community_of.size())) break;  // no merge happened
    }
    return Partition::from_assignment(g, std::move(membership)).normalized();
}

}  // namespace comdet
