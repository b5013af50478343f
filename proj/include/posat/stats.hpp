#ifndef POSAT_STATS_HPP
#define POSAT_STATS_HPP

#include <cstdint>
#include <string>

namespace posat {

// Counters collected over one solve. All counters are monotone while the
// search runs; wall_time is filled in at the end.
struct SolveStats {
    uint64_t conflicts = 0;
    uint64_t decisions = 0;
    uint64_t propagations = 0;
    // One increment per clause visited from a watch list during propagation.
    uint64_t clause_checks = 0;
    // Assignments destroyed by backtracks and restarts combined.
    uint64_t undone_total = 0;
    // Conflicts offering two or more candidate assertion levels, and the
    // total candidate count over those conflicts.
    uint64_t conflicts_multi_candidate = 0;
    uint64_t candidate_count_sum_when_multi = 0;
    // Assignments that sat in levels newer than the chosen assertion level
    // but survived the backtrack (newer = larger level id).
    uint64_t locally_saved_total = 0;
    uint64_t restarts = 0;
    uint64_t learned = 0;
    uint64_t deleted = 0;
    double wall_time = 0.0;

    double undos_per_conflict() const { return conflicts ? double(undone_total) / double(conflicts) : 0.0; }
    double checks_per_conflict() const { return conflicts ? double(clause_checks) / double(conflicts) : 0.0; }

    // Flat JSON object, one key per field, keys in alphabetical order.
    std::string to_json() const;
};

}  // namespace posat

#endif
