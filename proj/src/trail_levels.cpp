#include "posat/trail_levels.hpp"

#include <algorithm>

namespace posat {

void TrailLevels::init(int num_vars) {
    vars_.assign(num_vars, VarState{});
    levels_.clear();
    levels_.resize(reg_.slot_capacity());
    Level& ground = levels_[reg_.slot_of(level_Ground)];
    ground.id = level_Ground;
    ground.slot = reg_.slot_of(level_Ground);
    ground.alive = true;
    clear_queue();
    num_assigned_ = 0;
    stamp_counter_ = 0;
}

LevelId TrailLevels::new_level(Lit decision) {
    assert(value(decision.var()) == Value::Unassigned && "decision variable already assigned");
    LevelId id = reg_.alloc();
    LevelSlot slot = reg_.slot_of(id);
    if (slot >= levels_.size()) levels_.resize(slot + 1);
    Level& lv = levels_[slot];
    lv.id = id;
    lv.slot = slot;
    lv.decision = decision;
    lv.sequence.clear();
    lv.alive = true;
    assign(decision, id, Reason::decision());
    return id;
}

void TrailLevels::assign(Lit l, LevelId level, Reason reason) {
    VarState& vs = vars_[l.var()];
    assert(vs.value == Value::Unassigned && "double assignment");
    Level& lv = levels_[reg_.slot_of(level)];
    assert(lv.alive);
    vs.value = value_of(!l.sign());
    vs.level = level;
    vs.slot = lv.slot;
    vs.reason = reason;
    vs.position = static_cast<uint32_t>(lv.sequence.size());
    vs.stamp = stamp_counter_++;
    vs.saved_phase = !l.sign();
    lv.sequence.push_back(l);
    num_assigned_++;
    queue_.push_back(l);
}

size_t TrailLevels::delete_levels(const std::vector<LevelId>& dead, std::vector<Var>* freed_vars) {
    size_t undone = 0;
    for (LevelId id : dead) {
        assert(id != level_Ground && "ground level cannot be deleted");
        Level& lv = levels_[reg_.slot_of(id)];
        assert(lv.alive);
        for (Lit l : lv.sequence) {
            VarState& vs = vars_[l.var()];
            vs.value = Value::Unassigned;
            vs.level = level_Undef;
            vs.slot = slot_Undef;
            vs.reason = Reason();
            if (freed_vars) freed_vars->push_back(l.var());
            undone++;
        }
        num_assigned_ -= lv.sequence.size();
        lv.sequence.clear();
        lv.alive = false;
        lv.decision = lit_Undef;
        reg_.release(id);
    }
    if (undone > 0 && !queue_empty()) {
        // Drop pending literals whose assignment just died.
        size_t out = queue_head_;
        for (size_t i = queue_head_; i < queue_.size(); i++)
            if (value(queue_[i].var()) != Value::Unassigned) queue_[out++] = queue_[i];
        queue_.resize(out);
    }
    return undone;
}

void TrailLevels::check_partition() const {
    std::vector<uint8_t> covered(vars_.size(), 0);
    size_t in_levels = 0;
    for (LevelSlot s = 0; s < levels_.size(); s++) {
        const Level& lv = levels_[s];
        if (!lv.alive) continue;
        if (!reg_.slot_live(s) || reg_.id_of(s) != lv.id || reg_.slot_of(lv.id) != s)
            throw InvariantViolation("level id/slot maps disagree");
        if (lv.id != level_Ground && (lv.sequence.empty() || lv.sequence[0] != lv.decision))
            throw InvariantViolation("decision literal is not the first element of its level");
        for (uint32_t i = 0; i < lv.sequence.size(); i++) {
            Lit l = lv.sequence[i];
            const VarState& vs = vars_[l.var()];
            if (vs.value == Value::Unassigned || vs.level != lv.id || vs.position != i ||
                value(l) != Value::True)
                throw InvariantViolation("sequence entry disagrees with variable state");
            if (covered[l.var()]++) throw InvariantViolation("variable in two level sequences");
            in_levels++;
        }
    }
    size_t assigned = 0;
    for (const VarState& vs : vars_)
        if (vs.value != Value::Unassigned) assigned++;
    if (assigned != in_levels || assigned != num_assigned_)
        throw InvariantViolation("assigned variables not partitioned by live levels");
}

}  // namespace posat
