#include "posat/solver.hpp"

#include <algorithm>
#include <chrono>

namespace posat {

namespace {

// Luby sequence term (1-based position), as powers of two.
uint64_t luby(uint64_t i) {
    uint64_t k = 1;
    while ((1ULL << k) - 1 < i + 1) k++;
    while ((1ULL << k) - 1 != i + 1) {
        k--;
        i %= (1ULL << k) - 1;
    }
    return 1ULL << (k - 1);
}

}  // namespace

Solver::Solver(const RawFormula& formula, SolverConfig config)
    : formula_(formula), cfg_(std::move(config)), heap_(activity_) {
    int n = formula_.num_vars;
    db_.set_num_vars(n);
    trail_.init(n);
    if (cfg_.order_mode == OrderMode::Partial) deps_.emplace(trail_.registry(), cfg_.matrix_threshold);
    activity_.assign(n, 0.0);
    seen_.assign(n, 0);
    for (Var v = 0; v < n; v++) heap_.insert(v);
    reduce_interval_ = cfg_.reduce_first;
    next_reduce_ = cfg_.reduce_first;
    ingest_formula();
}

void Solver::ingest_formula() {
    for (const auto& cl : formula_.clauses) {
        for (Lit l : cl) {
            assert(l.var() >= 0 && l.var() < formula_.num_vars);
            (void)l;
        }
        auto res = db_.ingest_clause(cl, false);
        switch (res.kind) {
            case ClauseDb::IngestKind::Empty: ok_ = false; return;
            case ClauseDb::IngestKind::Tautology: break;
            case ClauseDb::IngestKind::Unit: {
                Value v = trail_.value(res.unit);
                if (v == Value::False) { ok_ = false; return; }
                if (v == Value::Unassigned) trail_.assign(res.unit, level_Ground, Reason::ground_unit());
                break;
            }
            case ClauseDb::IngestKind::Stored: break;
        }
    }
}

void Solver::record_dep(LevelId below, LevelId above) {
    assert(deps_);
    deps_->add_dep(below, above);
}

std::optional<ClauseRef> Solver::propagate() {
    while (!trail_.queue_empty()) {
        Lit l = trail_.queue_pop();  // true; clauses watching ~l need a look
        LevelId lam = trail_.state(l.var()).level;
        Lit fw = ~l;
        auto& watchers = db_.watchers(fw);
        size_t i = 0, keep = 0;
        ClauseRef conflict = clause_Undef;
        while (i < watchers.size()) {
            ClauseRef cref = watchers[i];
            stats_.clause_checks++;
            Clause& c = db_.clause(cref);
            if (c[0] == fw) std::swap(c.lits[0], c.lits[1]);
            assert(c[1] == fw);
            Lit w = c[0];

            if (trail_.value(w) == Value::True) {
                // The true co-watch spared us a replacement: the level that
                // assigned it now constrains this one.
                if (deps_) {
                    LevelId lw = trail_.state(w.var()).level;
                    if (lw != lam) record_dep(lw, lam);
                }
                watchers[keep++] = watchers[i++];
                continue;
            }

            size_t rep = 0;
            for (size_t k = 2; k < c.size(); k++)
                if (trail_.value(c[k]) != Value::False) { rep = k; break; }
            if (rep != 0) {
                db_.swap_watch(cref, rep);  // migrates to the new literal's list
                i++;
                continue;
            }

            if (trail_.value(w) == Value::Unassigned) {
                // Unit: w is forced at the level of the literal being
                // propagated, and that level now depends on the levels of
                // every other literal in the clause.
                stats_.propagations++;
                if (deps_) {
                    for (size_t k = 1; k < c.size(); k++) {
                        LevelId lk = trail_.state(c[k].var()).level;
                        if (lk != lam) record_dep(lk, lam);
                    }
                }
                trail_.assign(w, lam, Reason::from_clause(cref));
                if (c.learned) {
                    int lbd = compute_lbd(c.lits, [&](Var v) { return trail_.state(v).level; });
                    if (lbd < c.lbd) c.lbd = lbd;
                }
                watchers[keep++] = watchers[i++];
                continue;
            }

            conflict = cref;
            while (i < watchers.size()) watchers[keep++] = watchers[i++];
            break;
        }
        watchers.resize(keep);
        if (conflict != clause_Undef) return conflict;
    }
    if (cfg_.check_invariants) check_fixpoint_complete();
    return std::nullopt;
}

LevelId Solver::conflict_level_of(ClauseRef confl) const {
    const Clause& c = db_.clause(confl);
    uint64_t best_stamp = 0;
    LevelId level = level_Undef;
    for (Lit l : c.lits) {
        const VarState& vs = trail_.state(l.var());
        assert(vs.value != Value::Unassigned);
        if (level == level_Undef || vs.stamp > best_stamp) {
            best_stamp = vs.stamp;
            level = vs.level;
        }
    }
    return level;
}

uint32_t Solver::abstract_level(Var v) const { return 1u << (trail_.state(v).level & 31); }

Solver::Learnt Solver::analyze(ClauseRef confl, LevelId conflict_level) {
    Learnt out;
    out.lits.push_back(lit_Undef);  // becomes the asserting literal
    const auto& seq = trail_.level(conflict_level).sequence;
    int index = static_cast<int>(seq.size()) - 1;
    Lit p = lit_Undef;
    int path = 0;
    ClauseRef cr = confl;

    do {
        Clause& c = db_.clause(cr);
        if (c.learned) db_.bump_clause_activity(cr);
        for (size_t k = (p == lit_Undef ? 0 : 1); k < c.size(); k++) {
            Lit q = c[k];
            Var v = q.var();
            if (seen_[v]) continue;
            LevelId lq = trail_.state(v).level;
            if (lq == level_Ground) continue;  // permanently false, drop
            seen_[v] = 1;
            to_clear_.push_back(v);
            var_bump(v);
            if (lq == conflict_level)
                path++;
            else
                out.lits.push_back(q);
        }
        // Most recently assigned marked literal of the conflict level.
        while (!seen_[seq[index].var()]) index--;
        p = seq[index];
        index--;
        seen_[p.var()] = 0;
        path--;
        if (path > 0) {
            Reason r = trail_.state(p.var()).reason;
            assert(r.is_clause() && "resolution reached a decision before the UIP");
            cr = r.clause();
        }
    } while (path > 0);
    out.lits[0] = ~p;

    if (cfg_.minimize && out.lits.size() > 1) {
        uint32_t abstract = 0;
        for (size_t k = 1; k < out.lits.size(); k++) abstract |= abstract_level(out.lits[k].var());
        size_t keep = 1;
        for (size_t k = 1; k < out.lits.size(); k++) {
            Lit q = out.lits[k];
            if (!trail_.state(q.var()).reason.is_clause() || !lit_redundant(q, abstract))
                out.lits[keep++] = q;
        }
        out.lits.resize(keep);
    }

    for (size_t k = 1; k < out.lits.size(); k++) out.levels.push_back(trail_.state(out.lits[k].var()).level);
    std::sort(out.levels.begin(), out.levels.end());
    out.levels.erase(std::unique(out.levels.begin(), out.levels.end()), out.levels.end());
    out.lbd = static_cast<int>(out.levels.size()) + 1;  // plus the conflict level

    for (Var v : to_clear_) seen_[v] = 0;
    to_clear_.clear();
    return out;
}

// Deep reason-chain redundancy test: q can be dropped from the learned
// clause if every path through its reasons ends in marked or ground
// literals.
bool Solver::lit_redundant(Lit q, uint32_t abstract_levels) {
    ccmin_stack_.assign(1, q);
    size_t top = to_clear_.size();
    while (!ccmin_stack_.empty()) {
        Lit x = ccmin_stack_.back();
        ccmin_stack_.pop_back();
        const Clause& c = db_.clause(trail_.state(x.var()).reason.clause());
        for (size_t k = 1; k < c.size(); k++) {
            Lit p = c[k];
            Var v = p.var();
            if (seen_[v] || trail_.state(v).level == level_Ground) continue;
            if (trail_.state(v).reason.is_clause() && (abstract_level(v) & abstract_levels) != 0) {
                seen_[v] = 1;
                to_clear_.push_back(v);
                ccmin_stack_.push_back(p);
            } else {
                for (size_t j = top; j < to_clear_.size(); j++) seen_[to_clear_[j]] = 0;
                to_clear_.resize(top);
                return false;
            }
        }
    }
    return true;
}

std::vector<LevelId> Solver::candidates(const Learnt& learnt) const {
    if (learnt.levels.empty()) return {};
    if (!deps_) return {learnt.levels.back()};  // levels sorted: unique second-largest overall
    return deps_->maximal_of(learnt.levels);
}

uint64_t Solver::delete_level_set(const std::vector<LevelId>& dead) {
    if (dead.empty()) return 0;
    if (deps_) deps_->remove_levels(dead);
    std::vector<Var> freed;
    uint64_t undone = trail_.delete_levels(dead, &freed);
    for (Var v : freed) heap_.insert(v);
    stats_.undone_total += undone;
    return undone;
}

void Solver::backtrack_and_assert(Learnt& learnt, LevelId assertion, LevelId conflict_level) {
    std::vector<LevelId> dead;
    if (deps_) {
        dead = deps_->dependents_closure(assertion);
        if (std::find(dead.begin(), dead.end(), conflict_level) == dead.end()) dead.push_back(conflict_level);
    } else {
        for (LevelId l : trail_.live_levels())
            if (l > assertion) dead.push_back(l);
    }

    if (cfg_.check_invariants) {
        for (LevelId l : learnt.levels)
            if (std::find(dead.begin(), dead.end(), l) != dead.end())
                throw InvariantViolation("backtrack would delete a level of the learned clause");
    }

    // Assignments in levels newer than the assertion level that survive this
    // backtrack.
    std::vector<LevelId> sorted_dead = dead;
    std::sort(sorted_dead.begin(), sorted_dead.end());
    for (LevelId l : trail_.live_levels())
        if (l > assertion && !std::binary_search(sorted_dead.begin(), sorted_dead.end(), l))
            stats_.locally_saved_total += trail_.level(l).sequence.size();

    BacktrackInfo info;
    bool want_info = static_cast<bool>(cfg_.on_backtrack);
    if (want_info) {
        info.conflict_level = conflict_level;
        info.assertion_level = assertion;
        info.deleted_levels = dead;
        for (LevelId l : dead) info.deleted_decision_vars.push_back(trail_.level(l).decision.var());
        for (Lit l : learnt.lits) info.clause_vars.push_back(l.var());
    }

    uint64_t undone = delete_level_set(dead);
    current_level_ = assertion;

    if (want_info) {
        info.undone = undone;
        cfg_.on_backtrack(info);
    }

    if (cfg_.check_invariants) {
        if (trail_.value(learnt.lits[0]) != Value::Unassigned)
            throw InvariantViolation("asserting literal still assigned after backtrack");
        for (size_t k = 1; k < learnt.lits.size(); k++)
            if (trail_.value(learnt.lits[k]) != Value::False)
                throw InvariantViolation("learned clause not asserting after backtrack");
    }

    // Watch the asserting literal and a literal of the assertion level: the
    // two die together, which keeps the watch scheme sound however later
    // backtracks carve up the levels.
    for (size_t k = 1; k < learnt.lits.size(); k++) {
        if (trail_.state(learnt.lits[k].var()).level == assertion) {
            std::swap(learnt.lits[1], learnt.lits[k]);
            break;
        }
    }

    auto res = db_.ingest_clause(learnt.lits, true);
    assert(res.kind == ClauseDb::IngestKind::Stored);
    db_.clause(res.cref).lbd = learnt.lbd;
    db_.bump_clause_activity(res.cref);
    stats_.learned++;

    if (deps_)
        for (LevelId l : learnt.levels)
            if (l != assertion) record_dep(l, assertion);

    trail_.assign(learnt.lits[0], assertion, Reason::from_clause(res.cref));
}

void Solver::clear_to_ground_and_assert(Lit unit) {
    std::vector<LevelId> dead;
    for (LevelId l : trail_.live_levels())
        if (l != level_Ground) dead.push_back(l);
    delete_level_set(dead);
    current_level_ = level_Ground;
    assert(trail_.value(unit) == Value::Unassigned);
    trail_.assign(unit, level_Ground, Reason::ground_unit());
}

LevelId Solver::push_decision(Lit l) {
    LevelId id = trail_.new_level(l);
    current_level_ = id;
    on_level_created(id);
    return id;
}

void Solver::on_level_created(LevelId id) {
    if (deps_) deps_->level_created(id);
}

Lit Solver::pick_decision() {
    for (Var v : cfg_.decision_order) {
        if (trail_.value(v) != Value::Unassigned) continue;
        bool phase = cfg_.phase_saving ? trail_.saved_phase(v) : false;
        return Lit(v, !phase);
    }
    while (!heap_.empty()) {
        Var v = heap_.pop();
        if (trail_.value(v) != Value::Unassigned) continue;
        bool phase = cfg_.phase_saving ? trail_.saved_phase(v) : false;
        return Lit(v, !phase);
    }
    assert(false && "decision requested with no unassigned variable");
    return lit_Undef;
}

void Solver::var_bump(Var v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
        for (double& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    heap_.increased(v);
}

void Solver::var_decay() { var_inc_ *= 1.0 / cfg_.var_decay; }

bool Solver::restart_due() {
    if (cfg_.restart_strategy == RestartStrategy::Luby)
        return stats_.conflicts - conflicts_at_restart_ >= luby(luby_index_) * cfg_.luby_base;
    if (recent_lbds_.size() < cfg_.lbd_window) return false;
    double recent = 0.0;
    for (int x : recent_lbds_) recent += x;
    recent /= static_cast<double>(recent_lbds_.size());
    double global = lbd_sum_ / static_cast<double>(stats_.conflicts);
    return recent * cfg_.lbd_restart_factor > global;
}

void Solver::restart() {
    std::vector<LevelId> dead;
    for (LevelId l : trail_.live_levels())
        if (l != level_Ground) dead.push_back(l);
    delete_level_set(dead);
    current_level_ = level_Ground;
    stats_.restarts++;
    conflicts_at_restart_ = stats_.conflicts;
    luby_index_++;
    recent_lbds_.clear();
}

void Solver::maybe_reduce() {
    if (stats_.conflicts < next_reduce_) return;
    auto locked = [this](ClauseRef c) {
        Lit w = db_.clause(c)[0];
        if (trail_.value(w) != Value::True) return false;
        Reason r = trail_.state(w.var()).reason;
        return r.is_clause() && r.clause() == c;
    };
    stats_.deleted += db_.reduce_learned(locked);
    reduce_interval_ += cfg_.reduce_increment;
    next_reduce_ = stats_.conflicts + reduce_interval_;
}

Verdict Solver::solve() {
    if (done_) return verdict_;
    auto t0 = std::chrono::steady_clock::now();
    auto finish = [&](Verdict v) {
        stats_.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        verdict_ = std::move(v);
        done_ = true;
        return verdict_;
    };

    if (!ok_) return finish(Verdict::unsat());
    const int n = formula_.num_vars;

    for (;;) {
        if (interrupt_.load(std::memory_order_relaxed)) return finish(Verdict::unknown(UnknownReason::Interrupted));

        auto confl = propagate();
        if (confl) {
            stats_.conflicts++;
            LevelId lam = conflict_level_of(*confl);
            if (lam == level_Ground) return finish(Verdict::unsat());

            Learnt learnt = analyze(*confl, lam);
            var_decay();
            db_.decay_clause_activities();

            lbd_sum_ += learnt.lbd;
            recent_lbds_.push_back(learnt.lbd);
            if (recent_lbds_.size() > cfg_.lbd_window) recent_lbds_.pop_front();

            auto cands = candidates(learnt);
            if (cands.size() >= 2) {
                stats_.conflicts_multi_candidate++;
                stats_.candidate_count_sum_when_multi += cands.size();
            }

            if (cands.empty()) {
                clear_to_ground_and_assert(learnt.lits[0]);
            } else {
                LevelId a = deps_ ? choose_assertion(*deps_, trail_, cfg_.heuristic, cfg_.deps_count_mode,
                                                     cands, learnt.levels, lam)
                                  : cands[0];
                if (deps_ && cfg_.on_choice) emit_choice_snapshot(learnt, cands, a, lam);
                backtrack_and_assert(learnt, a, lam);
            }

            if (cfg_.check_invariants) check_all_invariants();
            if (cfg_.conflict_budget && stats_.conflicts >= *cfg_.conflict_budget)
                return finish(Verdict::unknown(UnknownReason::BudgetExhausted));
        } else {
            if (static_cast<int>(trail_.num_assigned()) == n) {
                std::vector<Value> model(n);
                for (Var v = 0; v < n; v++) model[v] = trail_.value(v);
                if (cfg_.check_invariants && !verify_model(formula_, model))
                    throw InvariantViolation("model fails independent verification");
                return finish(Verdict::sat(std::move(model)));
            }
            if (current_level_ != level_Ground && restart_due()) {
                restart();
                continue;
            }
            maybe_reduce();
            Lit d = pick_decision();
            stats_.decisions++;
            push_decision(d);
        }
    }
}

void Solver::emit_choice_snapshot(const Learnt& learnt, const std::vector<LevelId>& cands, LevelId chosen,
                                  LevelId conflict_level) {
    ChoiceSnapshot snap;
    snap.conflict_index = stats_.conflicts;
    snap.conflict_level = conflict_level;
    snap.clause_levels = learnt.levels;
    snap.candidates = cands;
    snap.chosen = chosen;
    snap.edges = deps_->direct_edges();
    for (LevelId l : trail_.live_levels())
        snap.level_sizes.emplace_back(l, static_cast<uint32_t>(trail_.level(l).sequence.size()));
    cfg_.on_choice(snap);
}

void Solver::check_fixpoint_complete() const {
    db_.for_each_live([&](ClauseRef, const Clause& c) {
        size_t nonfalse = 0;
        bool sat = false;
        Lit free_lit = lit_Undef;
        for (Lit l : c.lits) {
            Value v = trail_.value(l);
            if (v == Value::True) { sat = true; break; }
            if (v == Value::Unassigned) { nonfalse++; free_lit = l; }
        }
        if (sat) return;
        if (nonfalse == 0) throw InvariantViolation("falsified clause at propagation fixpoint");
        if (nonfalse == 1 && trail_.value(free_lit) == Value::Unassigned)
            throw InvariantViolation("unit clause left unpropagated at fixpoint");
    });
}

void Solver::check_reason_antecedents() const {
    for (Var v = 0; v < trail_.num_vars(); v++) {
        const VarState& vs = trail_.state(v);
        if (vs.value == Value::Unassigned || !vs.reason.is_clause()) continue;
        const Clause& c = db_.clause(vs.reason.clause());
        if (!c.live) throw InvariantViolation("reason clause was deleted");
        if (c[0].var() != v || trail_.value(c[0]) != Value::True)
            throw InvariantViolation("reason clause does not propagate its variable");
        for (size_t k = 1; k < c.size(); k++)
            if (trail_.value(c[k]) != Value::False)
                throw InvariantViolation("reason antecedent literal is not false");
    }
}

void Solver::check_all_invariants() const {
    trail_.check_partition();
    db_.check_watch_consistency();
    check_reason_antecedents();
    if (deps_) {
        deps_->check_transpose_consistency();
        deps_->check_acyclic();
    }
    if (current_level_ == level_Ground && trail_.registry().live_count() != 1)
        throw InvariantViolation("ground is current while other levels are alive");
}

}  // namespace posat
