// modularity.cpp

#include "comdet/modularity.hpp"

namespace comdet {

double modularity(const Graph& g, const Partition& p) {
    if (g.edge_count() == 0) throw InputError("empty graph has undefined modularity");
    const double m = static_cast<double>(g.edge_count());
    double q = 0.0;
    for (const auto& [c, st] : p.stats()) {
        const double frac = static_cast<double>(st.degree_sum) / (2.0 * m);
        q += static_cast<double>(st.internal_edges) / m - frac * frac;
    }
    return q;
}

std::map<int, CommunityStats> community_stats(const Graph& g, const Partition& p) {
    std::map<int, CommunityStats> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto& st = out[p.community_of(v)];
        ++st.members;
        st.degree_sum += g.degree(v);
    }
    for (auto [u, v] : g.edges())
        if (p.community_of(u) == p.community_of(v)) ++out[p.community_of(u)].internal_edges;
    return out;
}

double exact_delta_q(const Graph& g, const Partition& p, int w, int target) {
    if (w < 0 || w >= g.vertex_count())
        throw std::out_of_range("vertex id " + std::to_string(w) + " out of range");
    std::vector<int> moved = p.assignment();
    moved[static_cast<size_t>(w)] = target;
    Partition after = Partition::from_assignment(g, std::move(moved));
    Partition before = Partition::from_assignment(g, p.assignment());
    return modularity(g, after) - modularity(g, before);
}

}  // namespace comdet
