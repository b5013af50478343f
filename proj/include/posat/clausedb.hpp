#ifndef POSAT_CLAUSEDB_HPP
#define POSAT_CLAUSEDB_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "posat/types.hpp"

namespace posat {

using ClauseRef = uint32_t;
constexpr ClauseRef clause_Undef = UINT32_MAX;

// Stored clauses always have length >= 2; the literals at positions 0 and 1
// are the watched pair. For a clause acting as a reason, position 0 holds the
// literal it propagated.
struct Clause {
    std::vector<Lit> lits;
    bool learned = false;
    bool live = false;
    int lbd = 0;           // meaningful for learned clauses only
    double activity = 0.0;

    size_t size() const { return lits.size(); }
    Lit& operator[](size_t i) { return lits[i]; }
    Lit operator[](size_t i) const { return lits[i]; }
};

// Owns all clauses plus the watch lists. Slots are recycled only after the
// corresponding watch entries have been purged, so a ClauseRef stays valid
// for as long as anything (in particular a trail reason) references it.
class ClauseDb {
  public:
    enum class IngestKind { Stored, Unit, Empty, Tautology };
    struct IngestResult {
        IngestKind kind;
        ClauseRef cref = clause_Undef;  // Stored
        Lit unit = lit_Undef;           // Unit
    };

    void set_num_vars(int n);

    // Normalizes (drops duplicate literals, detects tautologies) and stores
    // the clause with watches on positions 0 and 1. Learned clauses are
    // stored exactly as given: the caller has already arranged the watched
    // pair and guarantees there are no duplicates.
    IngestResult ingest_clause(const std::vector<Lit>& lits, bool learned);

    const Clause& clause(ClauseRef c) const { return arena_[c]; }
    Clause& clause(ClauseRef c) { return arena_[c]; }

    // Clauses currently watching `l` (visited when `l` becomes false).
    std::vector<ClauseRef>& watchers(Lit l) { return watches_[l.code]; }

    // Moves the watch of `c` at position 1 to the literal at `new_pos`
    // (swapping them) and updates the watch lists. The caller removes the
    // old entry from the list it is iterating.
    void swap_watch(ClauseRef c, size_t new_pos);

    // Deletes the worse half of the learned clauses, ordered by (lbd
    // ascending, activity descending); clauses with lbd <= 2 and clauses for
    // which `locked` returns true are kept. Returns the number deleted.
    size_t reduce_learned(const std::function<bool(ClauseRef)>& locked);

    void bump_clause_activity(ClauseRef c);
    void decay_clause_activities();

    size_t num_learned() const { return learned_refs_.size(); }
    size_t live_clause_count() const;

    // All live clauses, originals and learned (debug scans, full checks).
    template <typename F>
    void for_each_live(F&& f) const {
        for (ClauseRef c = 0; c < arena_.size(); c++)
            if (arena_[c].live) f(c, arena_[c]);
    }

    // Watch-list consistency: every live clause appears in exactly the two
    // watch lists of its watched literals and nowhere else.
    void check_watch_consistency() const;

  private:
    ClauseRef store(std::vector<Lit> lits, bool learned);
    void remove_clause(ClauseRef c);

    std::vector<Clause> arena_;
    std::vector<ClauseRef> free_slots_;
    std::vector<std::vector<ClauseRef>> watches_;  // indexed by Lit::code
    std::vector<ClauseRef> learned_refs_;
    double cla_inc_ = 1.0;
    double cla_decay_ = 0.999;
    std::vector<uint8_t> seen_;  // scratch for ingest normalization
};

// Number of distinct decision levels among the literals, which must all be
// assigned. `level_of` maps a Var to its LevelId; the ground level counts as
// one level like any other.
template <typename LevelOf>
int compute_lbd(const std::vector<Lit>& lits, LevelOf&& level_of) {
    std::vector<LevelId> levels;
    levels.reserve(lits.size());
    for (Lit l : lits) levels.push_back(level_of(l.var()));
    std::sort(levels.begin(), levels.end());
    int n = 0;
    for (size_t i = 0; i < levels.size(); i++)
        if (i == 0 || levels[i] != levels[i - 1]) n++;
    return n;
}

}  // namespace posat

#endif
