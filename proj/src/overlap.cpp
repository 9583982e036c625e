// overlap.cpp

#include "comdet/overlap.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>

namespace comdet {

int LegitimacyMatrix::column_of(int community) const {
    auto it = std::lower_bound(community_ids.begin(), community_ids.end(), community);
    if (it == community_ids.end() || *it != community)
        throw InputError("unknown community id " + std::to_string(community));
    return static_cast<int>(it - community_ids.begin());
}

double LegitimacyMatrix::at(int v, int community) const {
    return values.at(static_cast<size_t>(v)).at(static_cast<size_t>(column_of(community)));
}

namespace {

// members of each community that u may neighbor
int eligible_members(const Graph& g, const Partition& p, int u, int c,
                     const std::map<int, std::pair<int, int>>& part_counts) {
    if (g.is_bipartite()) {
        const auto& [top, bottom] = part_counts.at(c);
        return g.part(u) == Part::top ? bottom : top;
    }
    return p.stats(c).members - (p.community_of(u) == c ? 1 : 0);
}

}  // namespace

std::vector<double> legitimacy(const Graph& g, const Partition& p, int u) {
    LegitimacyMatrix lm = legitimacy_matrix(g, p);
    return lm.values.at(static_cast<size_t>(u));
}

LegitimacyMatrix legitimacy_matrix(const Graph& g, const Partition& p) {
    const int n = g.vertex_count();
    LegitimacyMatrix lm;
    lm.community_ids = p.community_ids();
    lm.assigned = p.assignment();

    // per-community (top, bottom) member counts; only needed when bipartite
    std::map<int, std::pair<int, int>> part_counts;
    if (g.is_bipartite()) {
        for (int v = 0; v < n; ++v) {
            auto& [top, bottom] = part_counts[p.community_of(v)];
            (g.part(v) == Part::top ? top : bottom) += 1;
        }
    }

    std::map<int, int> column;
    for (int j = 0; j < static_cast<int>(lm.community_ids.size()); ++j)
        column[lm.community_ids[static_cast<size_t>(j)]] = j;

    lm.values.assign(static_cast<size_t>(n),
                     std::vector<double>(lm.community_ids.size(), 0.0));
    lm.denominators.assign(static_cast<size_t>(n),
                           std::vector<int>(lm.community_ids.size(), 0));
    for (int u = 0; u < n; ++u) {
        std::vector<int> links(lm.community_ids.size(), 0);
        for (int x : g.neighbors(u)) ++links[static_cast<size_t>(column.at(p.community_of(x)))];
        for (size_t j = 0; j < lm.community_ids.size(); ++j) {
            const int c = lm.community_ids[j];
            const int denom = eligible_members(g, p, u, c, part_counts);
            lm.denominators[static_cast<size_t>(u)][j] = denom;
            lm.values[static_cast<size_t>(u)][j] =
                denom == 0 ? 0.0 : static_cast<double>(links[j]) / static_cast<double>(denom);
        }
    }
    return lm;
}

OverlapReport alpha_cut(const LegitimacyMatrix& lm, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw InputError("alpha must lie in [0, 1]");
    OverlapReport report;
    report.alpha = alpha;
    const int n = static_cast<int>(lm.values.size());
    report.memberships.resize(static_cast<size_t>(n));
    report.own_below_alpha.assign(static_cast<size_t>(n), false);
    for (int u = 0; u < n; ++u) {
        const auto& row = lm.values[static_cast<size_t>(u)];
        const int own = lm.assigned[static_cast<size_t>(u)];
        auto& out = report.memberships[static_cast<size_t>(u)];
        double own_value = 0.0, best = 0.0;
        for (size_t j = 0; j < row.size(); ++j) {
            const int c = lm.community_ids[j];
            if (c == own) own_value = row[j];
            best = std::max(best, row[j]);
            if (row[j] >= alpha && c != own) out.push_back(c);
        }
        out.push_back(own);  // the assignment always appears, flagged if weak
        std::sort(out.begin(), out.end());
        if (own_value < alpha) report.own_below_alpha[static_cast<size_t>(u)] = true;
        if (best > own_value) report.deviants.push_back(u);
    }
    return report;
}

void write_legitimacy_csv(const LegitimacyMatrix& lm, const Graph& g, std::ostream& out) {
    out << std::setprecision(17);  // lossless, so users can re-cut downstream
    out << "vertex";
    for (int c : lm.community_ids) out << ",c" << c;
    out << "\n";
    for (int v = 0; v < static_cast<int>(lm.values.size()); ++v) {
        out << g.label(v);
        for (double x : lm.values[static_cast<size_t>(v)]) out << ',' << x;
        out << "\n";
    }
}

}  // namespace comdet
