// overlap.hpp
//
// Legitimacy: the fuzzy degree of membership of a vertex in a community,
// L(u, c) = (edges from u into c) / (eligible members of c), where a member
// is eligible when u could legally neighbor it: opposite-part members in
// bipartite graphs, everyone but u itself otherwise. An alpha-cut of the
// matrix yields crisp overlapping memberships and flags deviant vertices.

#ifndef COMDET_OVERLAP_HPP
#define COMDET_OVERLAP_HPP

#include <iosfwd>
#include <vector>

#include "comdet/graph.hpp"
#include "comdet/partition.hpp"

namespace comdet {

struct LegitimacyMatrix {
    std::vector<int> community_ids;            // column order, ascending
    std::vector<std::vector<double>> values;   // vertex x community, in [0,1]
    std::vector<std::vector<int>> denominators;  // eligible community size used
    std::vector<int> assigned;                 // community_of at build time

    int column_of(int community) const;
    double at(int v, int community) const;
};

/// Row of L for a single vertex, ordered like p's ascending community ids.
std::vector<double> legitimacy(const Graph& g, const Partition& p, int u);

LegitimacyMatrix legitimacy_matrix(const Graph& g, const Partition& p);

struct OverlapReport {
    double alpha = 0.0;
    /// Per vertex: communities with L >= alpha, plus always the assigned one.
    std::vector<std::vector<int>> memberships;
    /// Vertices whose assignment fell below alpha (kept in memberships anyway).
    std::vector<bool> own_below_alpha;
    /// Vertices whose maximal-legitimacy community differs from the assigned
    /// one; a tie involving the assigned community is not deviance.
    std::vector<int> deviants;
};

OverlapReport alpha_cut(const LegitimacyMatrix& lm, double alpha);

/// CSV: header `vertex,c<id>,...`, one row per vertex with its label.
void write_legitimacy_csv(const LegitimacyMatrix& lm, const Graph& g, std::ostream& out);

}  // namespace comdet

#endif  // COMDET_OVERLAP_HPP
