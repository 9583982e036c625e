// modularity.hpp
//
// Newman modularity Q = sum_C [ |e_C|/m - (d_C / 2m)^2 ], the community-sum
// form of the pairwise definition, plus a from-scratch move oracle used to
// validate the incremental reassignment measure.

#ifndef COMDET_MODULARITY_HPP
#define COMDET_MODULARITY_HPP

#include <map>

#include "comdet/graph.hpp"
#include "comdet/partition.hpp"

namespace comdet {

/// Q of the partition; in [-1/2, 1). Throws InputError when m = 0.
double modularity(const Graph& g, const Partition& p);

/// Per-community stats recounted from scratch. Serves as the consistency
/// oracle against the incrementally maintained Partition::stats().
std::map<int, CommunityStats> community_stats(const Graph& g, const Partition& p);

/// Q(p with w moved to target) - Q(p), both sides evaluated by full recount.
/// `target` may be a community of p or a fresh id opening a new community.
double exact_delta_q(const Graph& g, const Partition& p, int w, int target);

}  // namespace comdet

#endif  // COMDET_MODULARITY_HPP
