// nash.cpp

#include "comdet/nash.hpp"

#include <cmath>
#include <map>

#include "comdet/modularity.hpp"

namespace comdet {

namespace {

// Shared arithmetic for Eq.-style RM so every caller (single evaluation,
// batched sweep, incremental maintenance) produces bit-identical values.
inline double rm_value(double m, double d_w, double l1, double l2, double d1, double d2) {
    return (l2 - l1) / m - (d_w * d_w + d_w * (d2 - d1)) / (2.0 * m * m);
}

struct LinkCounts {
    std::map<int, long long> per_community;  // edges from w into each community
    long long to(int c) const {
        auto it = per_community.find(c);
        return it == per_community.end() ? 0 : it->second;
    }
};

LinkCounts count_links(const Graph& g, const Partition& p, int w) {
    LinkCounts lc;
    for (int x : g.neighbors(w)) ++lc.per_community[p.community_of(x)];
    return lc;
}

}  // namespace

double rm(const Graph& g, const Partition& p, int w, int c2, bool allow_empty_target) {
    const double m = static_cast<double>(g.edge_count());
    if (g.edge_count() == 0) throw InputError("empty graph has undefined modularity");
    const int c1 = p.community_of(w);
    const double d_w = g.degree(w);
    const auto links = count_links(g, p, w);
    const double l1 = static_cast<double>(links.to(c1));
    const double d1 = static_cast<double>(p.stats(c1).degree_sum);

    double l2, d2;
    if (c2 == c1) {
        // the target is the source without w, so d_{C2} = d_{C1} - d_w and the
        // expression cancels to exactly 0
        l2 = l1;
        d2 = d1 - d_w;
    } else if (p.has_community(c2)) {
        l2 = static_cast<double>(links.to(c2));
        d2 = static_cast<double>(p.stats(c2).degree_sum);
    } else if (allow_empty_target) {
        l2 = 0.0;
        d2 = 0.0;
    } else {
        throw InputError("unknown target community id " + std::to_string(c2));
    }
    return rm_value(m, d_w, l1, l2, d1, d2);
}

double delta_r(const Graph& g, int w, int z) {
    if (w == z) throw InputError("delta_r requires two distinct vertices");
    const double m = static_cast<double>(g.edge_count());
    const double a_wz = g.has_edge(w, z) ? 1.0 : 0.0;
    return a_wz - static_cast<double>(g.degree(z)) * static_cast<double>(g.degree(w)) / (2.0 * m);
}

double rm_correction(const Graph& g, int z, MoveRole z_from, MoveRole z_to,
                     const MoveEvaluation& w_move) {
    if (w_move.from == w_move.to)
        throw InputError("rm_correction requires a real move (source != target)");
    if (z == w_move.vertex)
        throw InputError("rm_correction applies to vertices other than the moved one");
    int coefficient = 0;
    if (z_to == z_from) {
        coefficient = 0;
    } else if (z_to == MoveRole::source) {
        coefficient = (z_from == MoveRole::target) ? -2 : -1;
    } else if (z_to == MoveRole::target) {
        coefficient = (z_from == MoveRole::source) ? +2 : +1;
    } else {  // z_to == other
        coefficient = (z_from == MoveRole::source) ? +1 : -1;
    }
    const double m = static_cast<double>(g.edge_count());
    return static_cast<double>(coefficient) * delta_r(g, w_move.vertex, z) / m;
}

std::vector<MoveEvaluation> rm_all(const Graph& g, const Partition& p, bool allow_empty_target) {
    const double m = static_cast<double>(g.edge_count());
    if (g.edge_count() == 0) throw InputError("empty graph has undefined modularity");
    std::vector<MoveEvaluation> out;
    const int fresh = allow_empty_target ? p.fresh_community_id() : -1;
    for (int w = 0; w < g.vertex_count(); ++w) {
        const int c1 = p.community_of(w);
        const double d_w = g.degree(w);
        const auto links = count_links(g, p, w);
        const double l1 = static_cast<double>(links.to(c1));
        const double d1 = static_cast<double>(p.stats(c1).degree_sum);
        for (const auto& [c2, st] : p.stats()) {
            if (c2 == c1) continue;
            out.push_back({w, c1, c2,
                           rm_value(m, d_w, l1, static_cast<double>(links.to(c2)),
                                    d1, static_cast<double>(st.degree_sum))});
        }
        if (allow_empty_target)
            out.push_back({w, c1, fresh, rm_value(m, d_w, l1, 0.0, d1, 0.0)});
    }
    return out;
}

bool is_nash_equilibrium(const Graph& g, const Partition& p, double epsilon) {
    // brute-force certificate: recount stats from scratch and sweep every pair
    Partition fresh = Partition::from_assignment(g, p.assignment());
    if (fresh.stats() != p.stats())
        throw InvariantError("partition stats diverged from a full recount");
    for (const auto& eval : rm_all(g, fresh))
        if (eval.gain > epsilon) return false;
    return true;
}

namespace {

// Incrementally maintained RM table: per vertex, gain toward every live
// community other than its own.
class RmTable {
public:
    RmTable(const Graph& g, const Partition& p, bool allow_empty)
        : g_(g), allow_empty_(allow_empty), rows_(static_cast<size_t>(g.vertex_count())),
          empty_gain_(static_cast<size_t>(g.vertex_count()), 0.0) {
        for (int v = 0; v < g.vertex_count(); ++v) recompute_row(p, v);
    }

    void recompute_row(const Partition& p, int v) {
        const double m = static_cast<double>(g_.edge_count());
        const int c1 = p.community_of(v);
        const double d_w = g_.degree(v);
        const auto links = count_links(g_, p, v);
        const double l1 = static_cast<double>(links.to(c1));
        const double d1 = static_cast<double>(p.stats(c1).degree_sum);
        auto& row = rows_[static_cast<size_t>(v)];
        row.clear();
        for (const auto& [c2, st] : p.stats()) {
            if (c2 == c1) continue;
            row[c2] = rm_value(m, d_w, l1, static_cast<double>(links.to(c2)), d1,
                               static_cast<double>(st.degree_sum));
        }
        if (allow_empty_)
            empty_gain_[static_cast<size_t>(v)] = rm_value(m, d_w, l1, 0.0, d1, 0.0);
    }

    // Best candidate above epsilon; vertices ascending, then target community
    // ids ascending. Gains within kTieTolerance count as equal so that the
    // (vertex, community) tie-break is stable against the sub-ulp noise
    // separating incrementally corrected values from recomputed ones.
    // Existing targets win over a fresh empty community at equal gain.
    static constexpr double kTieTolerance = 1e-12;

    bool best_move(const Partition& p, double epsilon, MoveEvaluation& best) const {
        bool found = false;
        double best_gain = 0.0;
        auto consider = [&](int v, int c, double gain) {
            if (gain <= epsilon) return;
            if (!found || gain > best_gain + kTieTolerance) {
                best_gain = gain;
                best = {v, p.community_of(v), c, gain};
                found = true;
            }
        };
        for (int v = 0; v < static_cast<int>(rows_.size()); ++v) {
            for (const auto& [c, gain] : rows_[static_cast<size_t>(v)]) consider(v, c, gain);
            if (allow_empty_)
                consider(v, p.fresh_community_id(), empty_gain_[static_cast<size_t>(v)]);
        }
        return found;
    }

    // Maintenance after `applied` was performed on p (p is post-move):
    // members of the touched communities are recomputed from updated stats,
    // all other vertices receive the table correction.
    void apply_move_update(const Partition& p, const MoveEvaluation& applied) {
        const double m = static_cast<double>(g_.edge_count());
        const int from = applied.from;
        const int to = applied.to;
        const bool source_alive = p.has_community(from);
        const bool target_created = [&] {
            // the target was fresh iff nobody else is in it and no row knows it
            return p.stats(to).members == 1 && p.community_of(applied.vertex) == to &&
                   !rows_[static_cast<size_t>(applied.vertex)].count(to);
        }();

        std::vector<char> affected(rows_.size(), 0);
        for (int v : p.members(to)) affected[static_cast<size_t>(v)] = 1;
        if (source_alive)
            for (int v : p.members(from)) affected[static_cast<size_t>(v)] = 1;
        affected[static_cast<size_t>(applied.vertex)] = 1;

        for (int z = 0; z < static_cast<int>(rows_.size()); ++z) {
            if (affected[static_cast<size_t>(z)]) {
                recompute_row(p, z);
                continue;
            }
            // z is outside both touched communities: role "other"
            auto& row = rows_[static_cast<size_t>(z)];
            if (source_alive) {
                row.at(from) += rm_correction(g_, z, MoveRole::other, MoveRole::source, applied);
            } else {
                row.erase(from);
            }
            if (target_created) {
                // brand-new community {w}: fresh candidate target for z
                const int c1 = p.community_of(z);
                const double d_w = g_.degree(z);
                const auto links = count_links(g_, p, z);
                row[to] = rm_value(m, d_w, static_cast<double>(links.to(c1)),
                                   static_cast<double>(links.to(to)),
                                   static_cast<double>(p.stats(c1).degree_sum),
                                   static_cast<double>(p.stats(to).degree_sum));
            } else {
                row.at(to) += rm_correction(g_, z, MoveRole::other, MoveRole::target, applied);
            }
        }
    }

    void recompute_all(const Partition& p) {
        for (int v = 0; v < static_cast<int>(rows_.size()); ++v) recompute_row(p, v);
    }

private:
    const Graph& g_;
    bool allow_empty_;
    std::vector<std::map<int, double>> rows_;
    std::vector<double> empty_gain_;
};

}  // namespace

std::pair<Partition, MoveTrace> stabilize(const Graph& g, const Partition& p,
                                          const StabilizeConfig& cfg) {
    if (cfg.epsilon <= 0) throw InputError("epsilon must be positive");
    Partition cur = p;
    MoveTrace trace;
    double q = modularity(g, cur);
    RmTable table(g, cur, cfg.allow_empty_target);

    MoveEvaluation best;
    while (table.best_move(cur, cfg.epsilon, best)) {
        if (static_cast<int>(trace.steps.size()) >= cfg.max_moves) {
            trace.final_q = q;
            trace.iterations = static_cast<int>(trace.steps.size());
            throw MaxMovesExceeded(
                "stabilize exceeded max_moves = " + std::to_string(cfg.max_moves) +
                    " (suspected float-noise cycle)",
                std::move(trace));
        }
        const double q_before = q;
        cur.apply_move(g, best.vertex, best.to);
        const double q_after = modularity(g, cur);
        if (std::abs(q_after - (q_before + best.gain)) > 1e-9)
            throw InvariantError("applied gain does not match modularity delta");
        trace.steps.push_back({best, q_before, q_after});
        q = q_after;
        if (cfg.debug_full_recompute)
            table.recompute_all(cur);
        else
            table.apply_move_update(cur, best);
    }
    trace.final_q = q;
    trace.iterations = static_cast<int>(trace.steps.size());
    return {std::move(cur), std::move(trace)};
}

}  // namespace comdet
