#ifndef POSAT_SOLVER_HPP
#define POSAT_SOLVER_HPP

#include <atomic>
#include <deque>
#include <optional>
#include <vector>

#include "posat/clausedb.hpp"
#include "posat/config.hpp"
#include "posat/deporder.hpp"
#include "posat/dimacs.hpp"
#include "posat/heap.hpp"
#include "posat/heuristics.hpp"
#include "posat/stats.hpp"
#include "posat/trail_levels.hpp"
#include "posat/types.hpp"

namespace posat {

// One search over one formula. The formula must outlive the solver; a second
// call to solve() returns the cached verdict.
//
// Search order: propagate to fixpoint; on conflict, learn a clause, pick an
// assertion level among the maximal levels of the clause under the
// dependency relation, delete the conflict level plus everything depending
// on the assertion level, and continue there. Total-order mode keeps no
// dependency relation and deletes every level newer than the assertion
// level, which is classical behaviour.
class Solver {
  public:
    Solver(const RawFormula& formula, SolverConfig config);

    Verdict solve();

    const SolveStats& stats() const { return stats_; }
    const SolverConfig& config() const { return cfg_; }

    // Safe to call from another thread; the search stops at the next
    // conflict boundary with an Unknown verdict.
    void interrupt() { interrupt_.store(true, std::memory_order_relaxed); }

    // --- granular access, used by the tests -------------------------------

    const TrailLevels& trail() const { return trail_; }
    TrailLevels& trail() { return trail_; }
    ClauseDb& db() { return db_; }
    const DepOrder* deps() const { return deps_ ? &*deps_ : nullptr; }
    bool ok() const { return ok_; }

    // Opens a new level on the given decision literal.
    LevelId push_decision(Lit l);

    // Runs unit propagation to fixpoint; returns the conflicting clause if
    // one is found.
    std::optional<ClauseRef> propagate();

    // Level of the most recently assigned literal of the clause.
    LevelId conflict_level_of(ClauseRef confl) const;

    struct Learnt {
        std::vector<Lit> lits;        // [0] is the asserting literal
        std::vector<LevelId> levels;  // distinct levels of lits[1..]
        int lbd = 0;
    };

    // First-UIP resolution over the conflict level's sequence. Ground
    // literals are dropped; redundant literals are removed when
    // minimization is on.
    Learnt analyze(ClauseRef confl, LevelId conflict_level);

    // Maximal levels of the learned clause under the dependency order
    // (total mode: the largest id, alone).
    std::vector<LevelId> candidates(const Learnt& learnt) const;

    void check_all_invariants() const;

  private:
    void ingest_formula();
    void on_level_created(LevelId id);
    Lit pick_decision();
    void var_bump(Var v);
    void var_decay();
    bool lit_redundant(Lit p, uint32_t abstract_levels);
    uint32_t abstract_level(Var v) const;
    void record_dep(LevelId below, LevelId above);

    // Deletes the given levels from trail and relation, reinserting freed
    // variables into the decision heap. Returns the number of assignments
    // undone (also added to the undo counter).
    uint64_t delete_level_set(const std::vector<LevelId>& dead);

    void backtrack_and_assert(Learnt& learnt, LevelId assertion, LevelId conflict_level);
    void clear_to_ground_and_assert(Lit unit);
    bool restart_due();
    void restart();
    void maybe_reduce();

    void check_fixpoint_complete() const;
    void check_reason_antecedents() const;
    void emit_choice_snapshot(const Learnt& learnt, const std::vector<LevelId>& cands, LevelId chosen,
                              LevelId conflict_level);

    const RawFormula& formula_;
    SolverConfig cfg_;

    ClauseDb db_;
    TrailLevels trail_;
    std::optional<DepOrder> deps_;

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    VarOrderHeap heap_;

    std::vector<uint8_t> seen_;
    std::vector<Var> to_clear_;
    std::vector<Lit> ccmin_stack_;

    SolveStats stats_;
    LevelId current_level_ = level_Ground;
    bool ok_ = true;  // false once the formula is known unsatisfiable at ground
    bool done_ = false;
    Verdict verdict_;
    std::atomic<bool> interrupt_{false};

    // Restart state.
    uint64_t conflicts_at_restart_ = 0;
    uint64_t luby_index_ = 0;
    std::deque<int> recent_lbds_;
    double lbd_sum_ = 0.0;

    // Clause database reduction cadence.
    uint64_t reduce_interval_;
    uint64_t next_reduce_;
};

}  // namespace posat

#endif
