#ifndef POSAT_HEURISTICS_HPP
#define POSAT_HEURISTICS_HPP

#include <vector>

#include "posat/config.hpp"
#include "posat/deporder.hpp"
#include "posat/trail_levels.hpp"

namespace posat {

// Cost of asserting at `a`: the number of assignments sitting in levels that
// depend on `a`. The conflict level is excluded because it is deleted no
// matter which candidate wins.
uint64_t undo_cost(const DepOrder& deps, const TrailLevels& trail, LevelId a, LevelId conflict_level);

// Number of dependencies asserting at `a` would newly introduce: clause
// levels other than `a` (and the conflict level) that are not already below
// `a` — transitively, or as a direct edge, per `mode`.
size_t new_deps_count(const DepOrder& deps, const std::vector<LevelId>& clause_levels, LevelId a,
                      LevelId conflict_level, DepsCountMode mode);

// Picks one assertion level out of a non-empty candidate set. Ties are
// broken by the largest level id, so every policy degrades to the
// chronological choice when scores are equal.
LevelId choose_assertion(const DepOrder& deps, const TrailLevels& trail, HeuristicPolicy policy,
                         DepsCountMode mode, const std::vector<LevelId>& candidates,
                         const std::vector<LevelId>& clause_levels, LevelId conflict_level);

}  // namespace posat

#endif
