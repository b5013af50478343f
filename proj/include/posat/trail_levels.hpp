#ifndef POSAT_TRAIL_LEVELS_HPP
#define POSAT_TRAIL_LEVELS_HPP

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

#include "posat/clausedb.hpp"
#include "posat/types.hpp"

namespace posat {

// Why a variable holds its value.
struct Reason {
    // clause_Undef-2 and clause_Undef-1 are reserved as tags; clause refs
    // stay well below that range.
    uint32_t code = clause_Undef;

    static Reason decision() { return {clause_Undef}; }
    static Reason ground_unit() { return {clause_Undef - 1}; }
    static Reason from_clause(ClauseRef c) { return {c}; }

    bool is_decision() const { return code == clause_Undef; }
    bool is_ground_unit() const { return code == clause_Undef - 1; }
    bool is_clause() const { return code < clause_Undef - 1; }
    ClauseRef clause() const { assert(is_clause()); return code; }

    friend bool operator==(Reason a, Reason b) { return a.code == b.code; }
};

// Allocates level ids (monotone, never reused within a solve) and compact
// slots (recycled through a free list). Shared between the trail and the
// dependency relation so both index per-level storage by slot.
class LevelRegistry {
  public:
    LevelRegistry() { alloc(); }  // ground level: id 0, slot 0

    LevelId alloc() {
        LevelId id = next_id_++;
        LevelSlot slot;
        if (!free_slots_.empty()) {
            slot = free_slots_.back();
            free_slots_.pop_back();
        } else {
            slot = static_cast<LevelSlot>(slot_to_id_.size());
            slot_to_id_.push_back(level_Undef);
        }
        slot_to_id_[slot] = id;
        id_to_slot_[id] = slot;
        return id;
    }

    void release(LevelId id) {
        LevelSlot s = slot_of(id);
        slot_to_id_[s] = level_Undef;
        id_to_slot_.erase(id);
        free_slots_.push_back(s);
    }

    bool alive(LevelId id) const { return id_to_slot_.count(id) != 0; }
    LevelSlot slot_of(LevelId id) const { return id_to_slot_.at(id); }
    LevelId id_of(LevelSlot s) const { return slot_to_id_[s]; }
    bool slot_live(LevelSlot s) const { return s < slot_to_id_.size() && slot_to_id_[s] != level_Undef; }

    size_t slot_capacity() const { return slot_to_id_.size(); }
    size_t live_count() const { return id_to_slot_.size(); }

    std::vector<LevelId> live_ids() const {
        std::vector<LevelId> out;
        out.reserve(id_to_slot_.size());
        for (LevelId s : slot_to_id_)
            if (s != level_Undef) out.push_back(s);
        return out;
    }

  private:
    LevelId next_id_ = 0;
    std::vector<LevelId> slot_to_id_;
    std::unordered_map<LevelId, LevelSlot> id_to_slot_;
    std::vector<LevelSlot> free_slots_;
};

struct Level {
    LevelId id = level_Undef;
    LevelSlot slot = slot_Undef;
    Lit decision = lit_Undef;   // lit_Undef for the ground level
    std::vector<Lit> sequence;  // assigned literals in propagation order
    bool alive = false;
};

struct VarState {
    Value value = Value::Unassigned;
    LevelId level = level_Undef;
    LevelSlot slot = slot_Undef;
    Reason reason;
    uint32_t position = 0;   // index in the level's sequence
    uint64_t stamp = 0;      // global assignment order
    bool saved_phase = false;  // survives unassignment
};

// The assignment state: one ordered instantiation sequence per live decision
// level instead of a single chronological stack, because backtracking here
// deletes arbitrary (non-suffix) sets of levels. Also owns the pending
// propagation queue, which is purged alongside level deletion.
class TrailLevels {
  public:
    void init(int num_vars);

    int num_vars() const { return static_cast<int>(vars_.size()); }

    Value value(Var v) const { return vars_[v].value; }
    Value value(Lit l) const { return lit_value(vars_[l.var()].value, l); }
    const VarState& state(Var v) const { return vars_[v]; }
    bool saved_phase(Var v) const { return vars_[v].saved_phase; }

    const LevelRegistry& registry() const { return reg_; }

    // Opens a fresh level whose first assignment is the decision literal.
    LevelId new_level(Lit decision);

    // Records `l` as true at `level`, appends it to the level's sequence and
    // enqueues it for propagation.
    void assign(Lit l, LevelId level, Reason reason);

    // Unassigns every variable of every level in `dead` (saved phases are
    // kept), frees the levels and purges the pending queue. Returns the
    // number of variables unassigned; the freed variables are appended to
    // `freed_vars` if given.
    size_t delete_levels(const std::vector<LevelId>& dead, std::vector<Var>* freed_vars = nullptr);

    const Level& level(LevelId id) const { return levels_[reg_.slot_of(id)]; }
    const Level& level_by_slot(LevelSlot s) const { return levels_[s]; }

    std::vector<LevelId> live_levels() const { return reg_.live_ids(); }
    size_t num_assigned() const { return num_assigned_; }

    bool queue_empty() const { return queue_head_ >= queue_.size(); }
    Lit queue_pop() { return queue_[queue_head_++]; }
    void clear_queue() { queue_.clear(); queue_head_ = 0; }

    uint64_t next_stamp() const { return stamp_counter_; }

    // Every assigned variable sits in exactly one live level's sequence at
    // its recorded position, and id/slot maps agree.
    void check_partition() const;

  private:
    LevelRegistry reg_;
    std::vector<Level> levels_;  // indexed by slot
    std::vector<VarState> vars_;
    std::vector<Lit> queue_;
    size_t queue_head_ = 0;
    size_t num_assigned_ = 0;
    uint64_t stamp_counter_ = 0;
};

}  // namespace posat

#endif
