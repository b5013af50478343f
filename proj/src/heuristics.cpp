#include "posat/heuristics.hpp"

#include <algorithm>

namespace posat {

uint64_t undo_cost(const DepOrder& deps, const TrailLevels& trail, LevelId a, LevelId conflict_level) {
    uint64_t cost = 0;
    for (LevelId l : deps.dependents_closure(a)) {
        if (l == conflict_level) continue;
        cost += trail.level(l).sequence.size();
    }
    return cost;
}

size_t new_deps_count(const DepOrder& deps, const std::vector<LevelId>& clause_levels, LevelId a,
                      LevelId conflict_level, DepsCountMode mode) {
    std::vector<LevelId> ancestors;
    if (mode == DepsCountMode::Closure) {
        ancestors = deps.ancestors_closure(a);
        std::sort(ancestors.begin(), ancestors.end());
    }
    size_t n = 0;
    for (LevelId l : clause_levels) {
        if (l == a || l == conflict_level) continue;
        bool existing = mode == DepsCountMode::Closure
                            ? std::binary_search(ancestors.begin(), ancestors.end(), l)
                            : deps.has_direct_dep(l, a);
        if (!existing) n++;
    }
    return n;
}

LevelId choose_assertion(const DepOrder& deps, const TrailLevels& trail, HeuristicPolicy policy,
                         DepsCountMode mode, const std::vector<LevelId>& candidates,
                         const std::vector<LevelId>& clause_levels, LevelId conflict_level) {
    assert(!candidates.empty());
    if (policy == HeuristicPolicy::Chronological)
        return *std::max_element(candidates.begin(), candidates.end());

    bool maximize = policy == HeuristicPolicy::MostUndos || policy == HeuristicPolicy::MostDeps;
    bool deps_based = policy == HeuristicPolicy::LeastDeps || policy == HeuristicPolicy::MostDeps;

    LevelId best = level_Undef;
    uint64_t best_score = 0;
    for (LevelId a : candidates) {
        uint64_t score = deps_based ? new_deps_count(deps, clause_levels, a, conflict_level, mode)
                                    : undo_cost(deps, trail, a, conflict_level);
        if (best == level_Undef || (maximize ? score > best_score : score < best_score) ||
            (score == best_score && a > best)) {
            best = a;
            best_score = score;
        }
    }
    return best;
}

}  // namespace posat
