#ifndef POSAT_TESTUTIL_HPP
#define POSAT_TESTUTIL_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "posat/dimacs.hpp"
#include "posat/types.hpp"

// Shared helpers for the test suites: formula generators and independent
// oracles. Nothing here touches solver internals; oracle results are
// computed by direct enumeration or dense matrix algorithms so they can
// disagree with the implementation under test.
namespace posat::testutil {

using Rng = std::mt19937_64;

// Literal shorthand: pos(3) is DIMACS 3, neg(3) is DIMACS -3.
inline Lit pos(int dimacs_var) { return lit_from_dimacs(dimacs_var); }
inline Lit neg(int dimacs_var) { return lit_from_dimacs(-dimacs_var); }

// Uniform random k-CNF: each clause picks k distinct variables and random
// polarities.
RawFormula random_cnf(Rng& rng, int num_vars, int num_clauses, int k = 3);

// Pigeonhole principle CNF: `pigeons` objects into `holes` slots, one slot
// each; unsatisfiable whenever pigeons > holes.
RawFormula pigeonhole(int pigeons, int holes);

// Exhaustive satisfiability check by enumerating all 2^n assignments,
// vectorized 64 assignments per word. Practical up to ~24 variables.
// Returns a model if one exists.
std::optional<std::vector<Value>> enumerate_model(const RawFormula& f);

inline bool enumerate_sat(const RawFormula& f) { return enumerate_model(f).has_value(); }

// True iff `f` logically implies the clause (every assignment satisfying f
// satisfies the clause). Enumeration-based; for small n only.
bool implies_clause(const RawFormula& f, const std::vector<Lit>& clause);

// Truth-table evaluation of a formula under one full assignment, written
// independently of verify_model.
bool eval_formula(const RawFormula& f, const std::vector<Value>& model);

// Dense all-pairs reachability oracle over a DAG on node ids.
struct DenseDag {
    std::vector<uint64_t> nodes;                  // arbitrary ids
    std::vector<std::vector<bool>> direct;        // direct[i][j]: edge i -> j (positions)
    std::vector<std::vector<bool>> reach;         // transitive closure, filled by close()

    void close();                                 // Floyd-Warshall style
    size_t index_of(uint64_t id) const;
    bool reaches(uint64_t from, uint64_t to) const;
    std::vector<uint64_t> closure_from(uint64_t id) const;
    std::vector<uint64_t> maximal_of(const std::vector<uint64_t>& s) const;
};

// Random DAG where every edge goes from a smaller to a larger node index
// (then relabeled through the given ids).
DenseDag random_dag(Rng& rng, const std::vector<uint64_t>& ids, int num_edges);

}  // namespace posat::testutil

#endif
