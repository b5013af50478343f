#ifndef POSAT_DEPORDER_HPP
#define POSAT_DEPORDER_HPP

#include <cstdint>
#include <vector>

#include "posat/trail_levels.hpp"
#include "posat/types.hpp"

namespace posat {

// The dependency relation between live decision levels: j `below` i means
// level i depends on level j, i.e. j influenced unit propagation at i.
//
// Only direct dependencies are stored, in two adjacency directions plus an
// optional boolean matrix for constant-time membership tests. Transitive
// reachability is computed by traversal at query time; it is needed only
// during conflict resolution, on small sets of levels. The matrix grows
// quadratically with the live-level count, so it is dropped for the rest of
// the run once that count exceeds a threshold; queries answer identically
// either way, only their cost changes.
//
// Edges from the ground level are never stored: ground is below everything
// by convention and is never deleted.
class DepOrder {
  public:
    explicit DepOrder(const LevelRegistry& reg, size_t matrix_threshold = 4096);

    // Grows per-slot storage for a freshly created level and applies the
    // matrix disable rule.
    void level_created(LevelId id);

    // Adds the direct edge j `below` i. Returns true if the edge is new;
    // idempotent otherwise. Edges from ground are skipped (returns false).
    bool add_dep(LevelId j, LevelId i);

    bool has_direct_dep(LevelId j, LevelId i) const;

    // All live levels that (transitively) depend on `a`, excluding `a`.
    std::vector<LevelId> dependents_closure(LevelId a) const;

    // All live levels `a` (transitively) depends on, excluding `a`.
    std::vector<LevelId> ancestors_closure(LevelId a) const;

    // Members of `s` on which no other member transitively depends.
    std::vector<LevelId> maximal_of(const std::vector<LevelId>& s) const;

    // Removes every edge incident to the given levels. Called before the
    // registry releases their slots.
    void remove_levels(const std::vector<LevelId>& dead);

    bool matrix_enabled() const { return matrix_enabled_; }
    size_t direct_edge_count() const { return edge_count_; }

    // Direct edges as (below, above) id pairs, for snapshots and checks.
    std::vector<std::pair<LevelId, LevelId>> direct_edges() const;

    // Debug scans: above/below/matrix must describe one relation, and the
    // direct relation must be acyclic.
    void check_transpose_consistency() const;
    void check_acyclic() const;

  private:
    void ensure_slot(LevelSlot s);
    bool matrix_at(LevelSlot j, LevelSlot i) const { return matrix_[j * matrix_cap_ + i]; }
    void matrix_set(LevelSlot j, LevelSlot i, bool v) { matrix_[j * matrix_cap_ + i] = v; }
    void grow_matrix(size_t cap);
    void drop_matrix();

    const LevelRegistry& reg_;
    std::vector<std::vector<LevelSlot>> below_;  // below_[i]: direct j with j below i, sorted
    std::vector<std::vector<LevelSlot>> above_;  // above_[j]: direct i with j below i, sorted
    std::vector<uint8_t> matrix_;                // matrix_cap_^2, mirrors the direct relation
    size_t matrix_cap_ = 0;
    bool matrix_enabled_ = true;
    size_t matrix_threshold_;
    size_t edge_count_ = 0;

    mutable std::vector<uint32_t> mark_;  // per-slot epoch marks for traversals
    mutable uint32_t epoch_ = 0;
};

}  // namespace posat

#endif
