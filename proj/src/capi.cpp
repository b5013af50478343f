#include "posat.h"

#include <atomic>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "posat/dimacs.hpp"
#include "posat/solver.hpp"

using namespace posat;

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

}  // namespace

struct posat_formula {
    std::shared_ptr<const RawFormula> formula;
    std::vector<std::string> warnings;
};

struct posat_solver {
    std::shared_ptr<const RawFormula> formula;
    SolverConfig config;
    std::unique_ptr<Solver> solver;  // created on first solve
    std::atomic<Solver*> active{nullptr};
    std::atomic<bool> interrupt_requested{false};
    Verdict verdict = Verdict::unknown(UnknownReason::BudgetExhausted);
    bool solved = false;
    std::string stats_json;
    std::string result_text;
};

extern "C" {

const char* posat_version(void) { return "posat 1.0.0"; }

const char* posat_last_error(void) { return g_last_error.c_str(); }

posat_status posat_formula_read_file(const char* path, posat_formula** out) {
    if (!path || !out) { set_error("null argument"); return POSAT_ERR_INVALID_ARG; }
    *out = nullptr;
    auto f = std::make_unique<posat_formula>();
    try {
        f->formula = std::make_shared<RawFormula>(parse_cnf_file(path, &f->warnings));
    } catch (const ParseError& e) {
        set_error(std::string(path) + ": " + e.what());
        return POSAT_ERR_PARSE;
    } catch (const std::exception& e) {
        set_error(e.what());
        return POSAT_ERR_IO;
    }
    *out = f.release();
    return POSAT_OK;
}

posat_status posat_formula_read_string(const char* text, size_t len, posat_formula** out) {
    if (!text || !out) { set_error("null argument"); return POSAT_ERR_INVALID_ARG; }
    *out = nullptr;
    auto f = std::make_unique<posat_formula>();
    try {
        std::istringstream in(std::string(text, len));
        f->formula = std::make_shared<RawFormula>(parse_cnf(in, &f->warnings));
    } catch (const ParseError& e) {
        set_error(e.what());
        return POSAT_ERR_PARSE;
    } catch (const std::exception& e) {
        set_error(e.what());
        return POSAT_ERR_INTERNAL;
    }
    *out = f.release();
    return POSAT_OK;
}

void posat_formula_free(posat_formula* f) { delete f; }

int posat_formula_num_vars(const posat_formula* f) { return f ? f->formula->num_vars : 0; }

int posat_formula_num_clauses(const posat_formula* f) {
    return f ? static_cast<int>(f->formula->clauses.size()) : 0;
}

const char* posat_formula_warning(const posat_formula* f, size_t i) {
    if (!f || i >= f->warnings.size()) return nullptr;
    return f->warnings[i].c_str();
}

posat_solver* posat_solver_new(const posat_formula* f) {
    if (!f) { set_error("null formula"); return nullptr; }
    auto* s = new posat_solver;
    s->formula = f->formula;
    return s;
}

void posat_solver_free(posat_solver* s) { delete s; }

posat_status posat_solver_set_option(posat_solver* s, const char* name, const char* value) {
    if (!s || !name || !value) { set_error("null argument"); return POSAT_ERR_INVALID_ARG; }
    if (s->solver) { set_error("options must be set before solving"); return POSAT_ERR_INVALID_ARG; }
    std::string n = name, v = value;
    auto on_off = [&](bool& target) -> posat_status {
        if (v == "on") { target = true; return POSAT_OK; }
        if (v == "off") { target = false; return POSAT_OK; }
        set_error("option '" + n + "' expects on|off, got '" + v + "'");
        return POSAT_ERR_INVALID_ARG;
    };
    auto number = [&](uint64_t& target) -> posat_status {
        try {
            size_t pos = 0;
            unsigned long long x = std::stoull(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            target = x;
            return POSAT_OK;
        } catch (const std::exception&) {
            set_error("option '" + n + "' expects a non-negative integer, got '" + v + "'");
            return POSAT_ERR_INVALID_ARG;
        }
    };

    SolverConfig& c = s->config;
    if (n == "order") {
        if (v == "total") { c.order_mode = OrderMode::Total; return POSAT_OK; }
        if (v == "partial") { c.order_mode = OrderMode::Partial; return POSAT_OK; }
        set_error("option 'order' expects total|partial");
        return POSAT_ERR_INVALID_ARG;
    }
    if (n == "heuristic") {
        if (v == "chrono") c.heuristic = HeuristicPolicy::Chronological;
        else if (v == "least-undos") c.heuristic = HeuristicPolicy::LeastUndos;
        else if (v == "most-undos") c.heuristic = HeuristicPolicy::MostUndos;
        else if (v == "least-deps") c.heuristic = HeuristicPolicy::LeastDeps;
        else if (v == "most-deps") c.heuristic = HeuristicPolicy::MostDeps;
        else { set_error("option 'heuristic' expects chrono|least-undos|most-undos|least-deps|most-deps"); return POSAT_ERR_INVALID_ARG; }
        return POSAT_OK;
    }
    if (n == "phase-saving") return on_off(c.phase_saving);
    if (n == "minimize") return on_off(c.minimize);
    if (n == "check-invariants") return on_off(c.check_invariants);
    if (n == "matrix-threshold") {
        uint64_t x;
        if (auto st = number(x); st != POSAT_OK) return st;
        c.matrix_threshold = static_cast<size_t>(x);
        return POSAT_OK;
    }
    if (n == "restarts") {
        if (v == "lbd") { c.restart_strategy = RestartStrategy::LbdAdaptive; return POSAT_OK; }
        if (v == "luby") { c.restart_strategy = RestartStrategy::Luby; return POSAT_OK; }
        set_error("option 'restarts' expects lbd|luby");
        return POSAT_ERR_INVALID_ARG;
    }
    if (n == "deps-count") {
        if (v == "closure") { c.deps_count_mode = DepsCountMode::Closure; return POSAT_OK; }
        if (v == "direct") { c.deps_count_mode = DepsCountMode::Direct; return POSAT_OK; }
        set_error("option 'deps-count' expects closure|direct");
        return POSAT_ERR_INVALID_ARG;
    }
    if (n == "seed") return number(c.random_seed);
    if (n == "conflict-budget") {
        uint64_t x;
        if (auto st = number(x); st != POSAT_OK) return st;
        c.conflict_budget = x;
        return POSAT_OK;
    }
    set_error("unknown option '" + n + "'");
    return POSAT_ERR_INVALID_ARG;
}

posat_verdict posat_solver_solve(posat_solver* s) {
    if (!s) { set_error("null solver"); return POSAT_UNKNOWN; }
    if (!s->solved) {
        if (!s->solver) {
            s->solver = std::make_unique<Solver>(*s->formula, s->config);
            s->active.store(s->solver.get(), std::memory_order_release);
        }
        // An interrupt may have arrived before the solver existed.
        if (s->interrupt_requested.load(std::memory_order_acquire)) s->solver->interrupt();
        try {
            s->verdict = s->solver->solve();
        } catch (const std::exception& e) {
            set_error(e.what());
            s->verdict = Verdict::unknown(UnknownReason::Interrupted);
        }
        s->solved = true;
        s->stats_json = s->solver->stats().to_json();
        s->result_text = write_result(s->verdict);
    }
    switch (s->verdict.kind) {
        case Verdict::Kind::Sat: return POSAT_SAT;
        case Verdict::Kind::Unsat: return POSAT_UNSAT;
        default: return POSAT_UNKNOWN;
    }
}

int posat_solver_model_value(const posat_solver* s, int var) {
    if (!s || !s->solved || s->verdict.kind != Verdict::Kind::Sat) return 0;
    if (var < 1 || var > static_cast<int>(s->verdict.model.size())) return 0;
    return s->verdict.model[var - 1] == Value::True ? 1 : -1;
}

int posat_solver_verify_model(const posat_solver* s) {
    if (!s || !s->solved || s->verdict.kind != Verdict::Kind::Sat) return 0;
    try {
        return verify_model(*s->formula, s->verdict.model) ? 1 : 0;
    } catch (const std::exception& e) {
        set_error(e.what());
        return 0;
    }
}

int posat_solver_unknown_reason(const posat_solver* s) {
    if (!s || !s->solved || s->verdict.kind != Verdict::Kind::Unknown) return 0;
    return s->verdict.unknown_reason == UnknownReason::BudgetExhausted ? 1 : 2;
}

void posat_solver_interrupt(posat_solver* s) {
    if (!s) return;
    s->interrupt_requested.store(true, std::memory_order_release);
    if (Solver* p = s->active.load(std::memory_order_acquire)) p->interrupt();
}

const char* posat_solver_stats_json(posat_solver* s) {
    if (!s) return "";
    return s->stats_json.c_str();
}

const char* posat_solver_result_text(posat_solver* s) {
    if (!s) return "";
    return s->result_text.c_str();
}

}  // extern "C"
