// verify.hpp
//
// Randomized self-verification: on seeded random graphs, the closed-form
// reassignment measure must equal the from-scratch modularity delta for
// every (vertex, target community) pair, and after a move the incrementally
// corrected values must equal a full re-evaluation. Any mismatch is reported
// with the offending instance serialized for replay.

#ifndef COMDET_VERIFY_HPP
#define COMDET_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "comdet/graph.hpp"

namespace comdet {

struct VerifyConfig {
    std::uint64_t seed = 0;
    int trials = 100;
    int max_n = 30;
    double edge_probability = 0.2;
    double tolerance = 1e-12;
    bool inject_fault = false;  // harness self-test: force one mismatch
};

struct VerifyResult {
    int trials_run = 0;
    long long comparisons = 0;
    bool ok = true;
    std::string failure_detail;
    nlohmann::json failing_instance;  // replayable: edges, partition, move
};

VerifyResult run_verification(const VerifyConfig& cfg, std::ostream* log = nullptr);

/// Seeded G(n, p) on labels v0..v{n-1}; one arbitrary edge is added when the
/// draw comes out empty so m >= 1 always holds.
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

}  // namespace comdet

#endif  // COMDET_VERIFY_HPP
