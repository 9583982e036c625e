// nash.hpp
//
// Reassignment measure RM and the greedy reassignment loop. Moving vertex w
// from its community C1 to another community C2 changes global modularity by
//
//   RM_{w:C1->C2} = (1/m)(l_{w|2} - l_{w|1})
//                   - (1/2m^2) [ d_w^2 + d_w (d_{C2} - d_{C1}) ]
//
// where l_{w|i} counts edges from w to other members of C_i, d_{C1} includes
// d_w and d_{C2} does not. RM is exactly the modularity delta, so Q is a
// potential function for the induced game (players = vertices, strategies =
// communities, payoff = RM): greedily applying the best positive move
// converges, and the stop state is a Nash equilibrium.

#ifndef COMDET_NASH_HPP
#define COMDET_NASH_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "comdet/graph.hpp"
#include "comdet/partition.hpp"

namespace comdet {

/// A candidate reassignment of `vertex` from community `from` to `to`.
struct MoveEvaluation {
    int vertex = -1;
    int from = -1;
    int to = -1;
    double gain = 0.0;  // RM value

    bool operator==(const MoveEvaluation&) const = default;
};

struct MoveStep {
    MoveEvaluation move;
    double q_before = 0.0;
    double q_after = 0.0;
};

/// Ordered record of accepted reassignments; Q strictly increases along it.
struct MoveTrace {
    std::vector<MoveStep> steps;
    double final_q = 0.0;
    int iterations = 0;  // accepted moves
};

struct StabilizeConfig {
    double epsilon = 1e-9;          // strict-positivity threshold for RM
    int max_moves = 100000;         // safety cap against float-noise cycling
    bool allow_empty_target = false;  // may a fresh empty community be a target
    bool debug_full_recompute = false;  // rebuild all RM values after each move
};

/// Thrown when stabilize() exceeds cfg.max_moves; carries the partial trace.
class MaxMovesExceeded : public std::runtime_error {
public:
    MaxMovesExceeded(std::string what, MoveTrace partial)
        : std::runtime_error(std::move(what)), partial_trace(std::move(partial)) {}
    MoveTrace partial_trace;
};

/// RM of moving w to c2 (0 exactly when c2 is w's own community). Unknown c2
/// raises InputError unless allow_empty_target, in which case it is treated
/// as a fresh empty community.
double rm(const Graph& g, const Partition& p, int w, int c2, bool allow_empty_target = false);

/// Delta R_z = A_wz - d_z d_w / 2m, the elementary correction term.
double delta_r(const Graph& g, int w, int z);

/// Classification of a community relative to an applied move of w:
/// its source C1, its target C2, or any other community.
enum class MoveRole { source, target, other };

/// Change of RM_{z:from->to} caused by w's move, from the correction table:
/// coefficient(z_to, z_from) * delta_r(w, z) / m with coefficients in
/// {0, +-1, +-2}. The roles classify z's own community and its candidate
/// target relative to w_move. Requires z != w_move.vertex and a real move.
double rm_correction(const Graph& g, int z, MoveRole z_from, MoveRole z_to,
                     const MoveEvaluation& w_move);

/// One evaluation per (vertex, community != own) pair, vertices then target
/// ids ascending. With allow_empty_target, a trailing evaluation toward the
/// fresh community id is added per vertex. Vertices appearing with positive
/// gain form the unstable set.
std::vector<MoveEvaluation> rm_all(const Graph& g, const Partition& p,
                                   bool allow_empty_target = false);

/// Greedy best-response loop: apply the highest-gain move while one exceeds
/// cfg.epsilon, maintaining RM values incrementally (members of the two
/// touched communities are re-evaluated from updated stats, every other
/// vertex by rm_correction). Ties break to the lowest vertex id, then the
/// lowest target community id. The result passes is_nash_equilibrium.
std::pair<Partition, MoveTrace> stabilize(const Graph& g, const Partition& p,
                                          const StabilizeConfig& cfg = {});

/// Exhaustive sweep certificate, independent of any incremental bookkeeping:
/// true iff rm(w, c2) <= epsilon for every vertex w and every community
/// c2 != community_of(w). Community stats are recounted from scratch first.
bool is_nash_equilibrium(const Graph& g, const Partition& p, double epsilon);

}  // namespace comdet

#endif  // COMDET_NASH_HPP
