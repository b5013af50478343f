#ifndef POSAT_CONFIG_HPP
#define POSAT_CONFIG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "posat/types.hpp"

namespace posat {

enum class OrderMode { Total, Partial };

// How the assertion level is picked when the partial order admits several
// candidates. Total-order mode ignores this: there the assertion level is
// the unique second-largest level.
enum class HeuristicPolicy { Chronological, LeastUndos, MostUndos, LeastDeps, MostDeps };

enum class RestartStrategy { LbdAdaptive, Luby };

// For the least/most-deps policies: whether a dependency counts as already
// existing when it holds transitively or only as a direct edge.
enum class DepsCountMode { Closure, Direct };

// State captured at each assertion-level choice, enough to re-evaluate every
// policy independently: the live direct relation plus per-level sizes.
struct ChoiceSnapshot {
    uint64_t conflict_index = 0;
    LevelId conflict_level = level_Undef;
    std::vector<LevelId> clause_levels;  // levels of the learned clause, conflict level excluded
    std::vector<LevelId> candidates;
    LevelId chosen = level_Undef;
    std::vector<std::pair<LevelId, LevelId>> edges;          // direct (below, above) pairs
    std::vector<std::pair<LevelId, uint32_t>> level_sizes;   // live level id -> |sequence|
};

// Fired after each proper backtrack (not after restarts).
struct BacktrackInfo {
    LevelId conflict_level = level_Undef;
    LevelId assertion_level = level_Undef;
    std::vector<LevelId> deleted_levels;
    std::vector<Var> deleted_decision_vars;  // decision variable of each deleted level
    std::vector<Var> clause_vars;            // variables of the learned clause
    uint64_t undone = 0;
};

struct SolverConfig {
    OrderMode order_mode = OrderMode::Partial;
    HeuristicPolicy heuristic = HeuristicPolicy::Chronological;
    bool phase_saving = false;
    size_t matrix_threshold = 4096;
    RestartStrategy restart_strategy = RestartStrategy::LbdAdaptive;
    bool minimize = true;
    DepsCountMode deps_count_mode = DepsCountMode::Closure;
    uint64_t random_seed = 0;  // reserved for randomized decision options
    std::optional<uint64_t> conflict_budget;

    // Clause database management.
    uint64_t reduce_first = 20000;
    uint64_t reduce_increment = 500;
    double var_decay = 0.95;

    // Restart tuning: adaptive compares the recent-LBD window against the
    // global average; luby multiplies the sequence by a base interval.
    size_t lbd_window = 100;
    double lbd_restart_factor = 0.7;
    uint64_t luby_base = 32;

    // Extra consistency checks after every engine step (slow; tests only).
    bool check_invariants = false;

    // Forced decision order for experiments: decide() takes the first
    // unassigned variable from this list before falling back to activities.
    std::vector<Var> decision_order;

    // Instrumentation; null by default, never affects the search.
    std::function<void(const ChoiceSnapshot&)> on_choice;
    std::function<void(const BacktrackInfo&)> on_backtrack;
};

}  // namespace posat

#endif
