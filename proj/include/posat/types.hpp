#ifndef POSAT_TYPES_HPP
#define POSAT_TYPES_HPP

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace posat {

// Variables are 0-based internally; DIMACS variable i maps to Var(i-1).
using Var = int;
constexpr Var var_Undef = -1;

// A literal is a variable plus a sign, packed MiniSat-style: 2*var + sign,
// where sign = 1 means the negative occurrence.
struct Lit {
    int code = -2;

    constexpr Lit() = default;
    constexpr Lit(Var v, bool negative) : code(v + v + (negative ? 1 : 0)) {}

    constexpr Var  var() const { return code >> 1; }
    constexpr bool sign() const { return code & 1; }  // true = negative
    constexpr bool pos() const { return !(code & 1); }

    friend constexpr Lit  operator~(Lit l) { Lit r; r.code = l.code ^ 1; return r; }
    friend constexpr bool operator==(Lit a, Lit b) { return a.code == b.code; }
    friend constexpr bool operator!=(Lit a, Lit b) { return a.code != b.code; }
    friend constexpr bool operator<(Lit a, Lit b) { return a.code < b.code; }
};

constexpr Lit lit_Undef{};

// Build a literal from a signed DIMACS integer (non-zero).
inline Lit lit_from_dimacs(long long d) {
    assert(d != 0);
    return Lit(static_cast<Var>((d > 0 ? d : -d) - 1), d < 0);
}

inline long long lit_to_dimacs(Lit l) {
    long long v = l.var() + 1;
    return l.sign() ? -v : v;
}

enum class Value : uint8_t { False = 0, True = 1, Unassigned = 2 };

inline Value value_of(bool b) { return b ? Value::True : Value::False; }

// Truth value of a literal given its variable's value.
inline Value lit_value(Value var_value, Lit l) {
    if (var_value == Value::Unassigned) return Value::Unassigned;
    return value_of((var_value == Value::True) != l.sign());
}

// Decision level identifiers are allocated in strictly increasing order and
// never reused within one solve; 0 is the permanent ground level.
using LevelId = uint32_t;
constexpr LevelId level_Ground = 0;
constexpr LevelId level_Undef = UINT32_MAX;

// Compact index into the dependency-relation storage; recycled through a
// free list when a level dies.
using LevelSlot = uint32_t;
constexpr LevelSlot slot_Undef = UINT32_MAX;

// Thrown when an internal consistency check fails. Checks are gated behind
// SolverConfig::check_invariants so they can run in any build type.
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace posat

#endif
