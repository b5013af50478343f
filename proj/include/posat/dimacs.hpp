#ifndef POSAT_DIMACS_HPP
#define POSAT_DIMACS_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "posat/types.hpp"

namespace posat {

// A formula exactly as read from the input: duplicate literals and
// tautological clauses are kept, clause order is preserved. Simplification
// happens later, when clauses are ingested into the solver database.
struct RawFormula {
    int num_vars = 0;
    std::vector<std::vector<Lit>> clauses;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Reads DIMACS CNF. Comment lines are skipped, the 'p cnf V C' header is
// required before any clause, clauses are zero-terminated integer runs.
// A clause count differing from the header is tolerated (reported through
// `warnings` if given); a literal outside 1..V is an error.
RawFormula parse_cnf(std::istream& in, std::vector<std::string>* warnings = nullptr);
RawFormula parse_cnf_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Writes the formula back out in DIMACS form (used by round-trip tests and
// the bench corpus generator).
void write_cnf(std::ostream& out, const RawFormula& f);

enum class UnknownReason { BudgetExhausted, Interrupted };

struct Verdict {
    enum class Kind { Sat, Unsat, Unknown } kind = Kind::Unknown;
    std::vector<Value> model;  // indexed by Var, total when kind == Sat
    UnknownReason unknown_reason = UnknownReason::BudgetExhausted;

    static Verdict sat(std::vector<Value> m) { return {Kind::Sat, std::move(m), {}}; }
    static Verdict unsat() { return {Kind::Unsat, {}, {}}; }
    static Verdict unknown(UnknownReason r) { return {Kind::Unknown, {}, r}; }
};

// True iff every clause of `f` contains a literal made true by `model`.
// Direct scan over the raw clauses, independent of any solver state.
// The model must assign every variable of `f`.
bool verify_model(const RawFormula& f, const std::vector<Value>& model);

// SAT-competition output: "s ..." status line plus, for SAT, "v ..." lines
// of at most 4096 characters each, terminated by 0.
std::string write_result(const Verdict& v);

// Conventional process exit codes: 10 SAT, 20 UNSAT, 0 unknown.
int exit_code_for(const Verdict& v);

}  // namespace posat

#endif
