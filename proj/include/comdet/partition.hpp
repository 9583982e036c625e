// partition.hpp
//
// Vertex -> community assignment with per-community aggregates (member
// count, internal edge count |e_C|, degree sum d_C) maintained
// incrementally as vertices move. Emptied communities disappear.

#ifndef COMDET_PARTITION_HPP
#define COMDET_PARTITION_HPP

#include <map>
#include <vector>

#include "comdet/graph.hpp"

namespace comdet {

struct CommunityStats {
    int members = 0;
    long long internal_edges = 0;  // edges with both ends in the community
    long long degree_sum = 0;      // d_C = sum of member degrees

    bool operator==(const CommunityStats&) const = default;
};

class Partition {
public:
    /// Every vertex alone in community id = vertex id.
    static Partition singletons(const Graph& g);

    /// Adopt an arbitrary assignment; stats are recounted from scratch.
    static Partition from_assignment(const Graph& g, std::vector<int> community_of);

    int community_of(int v) const { return community_of_.at(static_cast<size_t>(v)); }
    const std::vector<int>& assignment() const { return community_of_; }

    int community_count() const { return static_cast<int>(stats_.size()); }
    bool has_community(int c) const { return stats_.count(c) != 0; }

    /// Live community ids, ascending.
    std::vector<int> community_ids() const;

    /// Ordered (community id -> stats) view of all live communities.
    const std::map<int, CommunityStats>& stats() const { return stats_; }

    const CommunityStats& stats(int c) const;

    std::vector<int> members(int c) const;

    /// Smallest id not currently in use; the designated fresh target for
    /// moves that open a new community.
    int fresh_community_id() const;

    /// Move w to community `to` (created if new), updating stats in O(deg w).
    /// Erases the source community when the move empties it. No-op when w is
    /// already in `to`.
    void apply_move(const Graph& g, int w, int to);

    /// Relabeled copy with dense ids 0..K-1, ascending by old id.
    Partition normalized() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> community_of_;
    std::map<int, CommunityStats> stats_;
};

}  // namespace comdet

#endif  // COMDET_PARTITION_HPP
