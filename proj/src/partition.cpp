// partition.cpp

#include "comdet/partition.hpp"

#include <numeric>
#include <string>

namespace comdet {

Partition Partition::singletons(const Graph& g) {
    std::vector<int> ids(static_cast<size_t>(g.vertex_count()));
    std::iota(ids.begin(), ids.end(), 0);
    return from_assignment(g, std::move(ids));
}

Partition Partition::from_assignment(const Graph& g, std::vector<int> community_of) {
    if (static_cast<int>(community_of.size()) != g.vertex_count())
        throw InputError("assignment covers " + std::to_string(community_of.size()) +
                         " vertices, graph has " + std::to_string(g.vertex_count()));
    Partition p;
    p.community_of_ = std::move(community_of);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = p.community_of_[static_cast<size_t>(v)];
        if (c < 0) throw InputError("negative community id for vertex " + g.label(v));
        auto& st = p.stats_[c];
        ++st.members;
        st.degree_sum += g.degree(v);
    }
    for (auto [u, v] : g.edges())
        if (p.community_of_[static_cast<size_t>(u)] == p.community_of_[static_cast<size_t>(v)])
            ++p.stats_[p.community_of_[static_cast<size_t>(u)]].internal_edges;
    return p;
}

std::vector<int> Partition::community_ids() const {
    std::vector<int> ids;
    ids.reserve(stats_.size());
    for (const auto& [c, st] : stats_) ids.push_back(c);
    return ids;
}

const CommunityStats& Partition::stats(int c) const {
    auto it = stats_.find(c);
    if (it == stats_.end()) throw InputError("unknown community id " + std::to_string(c));
    return it->second;
}

std::vector<int> Partition::members(int c) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(community_of_.size()); ++v)
        if (community_of_[static_cast<size_t>(v)] == c) out.push_back(v);
    return out;
}

int Partition::fresh_community_id() const {
    int id = 0;
    for (const auto& [c, st] : stats_) {
        if (c > id) break;  // gap found
        id = c + 1;
    }
    return id;
}

void Partition::apply_move(const Graph& g, int w, int to) {
    int from = community_of(w);
    if (to == from) return;
    if (to < 0) throw InputError("negative community id " + std::to_string(to));
    long long l_from = 0, l_to = 0;
    for (int x : g.neighbors(w)) {
        int cx = community_of_[static_cast<size_t>(x)];
        if (cx == from) ++l_from;
        if (cx == to) ++l_to;
    }
    auto& sf = stats_.at(from);
    --sf.members;
    sf.degree_sum -= g.degree(w);
    sf.internal_edges -= l_from;
    if (sf.members == 0) {
        if (sf.internal_edges != 0 || sf.degree_sum != 0)
            throw InvariantError("emptied community " + std::to_string(from) +
                                 " retains nonzero stats");
        stats_.erase(from);
    }
    auto& st = stats_[to];
    ++st.members;
    st.degree_sum += g.degree(w);
    st.internal_edges += l_to;
    community_of_[static_cast<size_t>(w)] = to;
}

Partition Partition::normalized() const {
    std::map<int, int> remap;
    for (const auto& [c, st] : stats_) remap.emplace(c, static_cast<int>(remap.size()));
    Partition p;
    p.community_of_.reserve(community_of_.size());
    for (int c : community_of_) p.community_of_.push_back(remap.at(c));
    for (const auto& [c, st] : stats_) p.stats_.emplace(remap.at(c), st);
    return p;
}

}  // namespace comdet
