#include "posat/clausedb.hpp"

#include <algorithm>

namespace posat {

void ClauseDb::set_num_vars(int n) {
    watches_.resize(2 * static_cast<size_t>(n));
    seen_.assign(2 * static_cast<size_t>(n), 0);
}

ClauseDb::IngestResult ClauseDb::ingest_clause(const std::vector<Lit>& lits, bool learned) {
    if (learned) {
        assert(lits.size() >= 2);
        return {IngestKind::Stored, store(lits, true), lit_Undef};
    }

    // Normalize: drop repeated literals (first occurrence wins), detect
    // clauses containing both l and ~l.
    std::vector<Lit> out;
    out.reserve(lits.size());
    bool taut = false;
    for (Lit l : lits) {
        if (seen_[l.code]) continue;
        if (seen_[(~l).code]) { taut = true; break; }
        seen_[l.code] = 1;
        out.push_back(l);
    }
    for (Lit l : out) seen_[l.code] = 0;
    if (taut) return {IngestKind::Tautology, clause_Undef, lit_Undef};
    if (out.empty()) return {IngestKind::Empty, clause_Undef, lit_Undef};
    if (out.size() == 1) return {IngestKind::Unit, clause_Undef, out[0]};
    return {IngestKind::Stored, store(std::move(out), false), lit_Undef};
}

ClauseRef ClauseDb::store(std::vector<Lit> lits, bool learned) {
    ClauseRef c;
    if (!free_slots_.empty()) {
        c = free_slots_.back();
        free_slots_.pop_back();
    } else {
        c = static_cast<ClauseRef>(arena_.size());
        arena_.emplace_back();
    }
    Clause& cl = arena_[c];
    cl.lits = std::move(lits);
    cl.learned = learned;
    cl.live = true;
    cl.lbd = 0;
    cl.activity = 0.0;
    watches_[cl.lits[0].code].push_back(c);
    watches_[cl.lits[1].code].push_back(c);
    if (learned) learned_refs_.push_back(c);
    return c;
}

void ClauseDb::swap_watch(ClauseRef c, size_t new_pos) {
    Clause& cl = arena_[c];
    assert(new_pos >= 2 && new_pos < cl.size());
    std::swap(cl.lits[1], cl.lits[new_pos]);
    watches_[cl.lits[1].code].push_back(c);
}

void ClauseDb::remove_clause(ClauseRef c) {
    Clause& cl = arena_[c];
    assert(cl.live);
    for (int i = 0; i < 2; i++) {
        auto& w = watches_[cl.lits[i].code];
        w.erase(std::remove(w.begin(), w.end(), c), w.end());
    }
    cl.live = false;
    cl.lits.clear();
    cl.lits.shrink_to_fit();
    free_slots_.push_back(c);
}

size_t ClauseDb::reduce_learned(const std::function<bool(ClauseRef)>& locked) {
    std::vector<ClauseRef> order;
    order.reserve(learned_refs_.size());
    for (ClauseRef c : learned_refs_)
        if (arena_[c].live) order.push_back(c);

    std::sort(order.begin(), order.end(), [&](ClauseRef a, ClauseRef b) {
        const Clause& x = arena_[a];
        const Clause& y = arena_[b];
        if (x.lbd != y.lbd) return x.lbd < y.lbd;
        if (x.activity != y.activity) return x.activity > y.activity;
        return a < b;
    });

    size_t deleted = 0;
    for (size_t i = order.size() / 2; i < order.size(); i++) {
        ClauseRef c = order[i];
        if (arena_[c].lbd <= 2) continue;
        if (locked && locked(c)) continue;
        remove_clause(c);
        deleted++;
    }
    learned_refs_ = std::move(order);
    learned_refs_.erase(
        std::remove_if(learned_refs_.begin(), learned_refs_.end(), [&](ClauseRef c) { return !arena_[c].live; }),
        learned_refs_.end());
    return deleted;
}

void ClauseDb::bump_clause_activity(ClauseRef c) {
    Clause& cl = arena_[c];
    cl.activity += cla_inc_;
    if (cl.activity > 1e20) {
        for (ClauseRef r : learned_refs_)
            if (arena_[r].live) arena_[r].activity *= 1e-20;
        cla_inc_ *= 1e-20;
    }
}

void ClauseDb::decay_clause_activities() { cla_inc_ *= 1.0 / cla_decay_; }

size_t ClauseDb::live_clause_count() const {
    size_t n = 0;
    for (const Clause& c : arena_)
        if (c.live) n++;
    return n;
}

void ClauseDb::check_watch_consistency() const {
    // Count how often each live clause appears across all watch lists and
    // verify the entries are exactly its two watched literals.
    std::vector<int> count(arena_.size(), 0);
    for (size_t code = 0; code < watches_.size(); code++) {
        for (ClauseRef c : watches_[code]) {
            const Clause& cl = arena_[c];
            if (!cl.live) throw InvariantViolation("watch list references dead clause");
            if (cl.lits[0].code != static_cast<int>(code) && cl.lits[1].code != static_cast<int>(code))
                throw InvariantViolation("watch list entry is not a watched literal of the clause");
            count[c]++;
        }
    }
    for (ClauseRef c = 0; c < arena_.size(); c++) {
        if (!arena_[c].live) continue;
        if (arena_[c].size() < 2) throw InvariantViolation("stored clause shorter than 2");
        if (arena_[c].lits[0] == arena_[c].lits[1]) throw InvariantViolation("watched pair not distinct");
        if (count[c] != 2) throw InvariantViolation("clause not watched exactly twice");
    }
}

}  // namespace posat
