#pragma once

#include "dnlsat/clause.hpp"
#include "dnlsat/smtlib.hpp"

namespace dnlsat {

// CNF form of a script's assertions. Arithmetic variable indices follow
// declaration order; boolean names map to their solver variables. Macros
// are inlined, so only declared symbols appear here.
struct Internalized {
    ClauseDB db;
    std::vector<std::pair<std::string, Var>> arith_names;
    std::vector<std::pair<std::string, BVar>> bool_names;
    bool has_check_sat = false;
    // Some assertion reduced to false (or an empty clause) during
    // construction; the problem is unsatisfiable without search.
    bool trivially_false = false;

    size_t num_arith_vars() const { return arith_names.size(); }
};

// Clausifies every assert in the script. Nested and/or/xor/ite get fresh
// definition variables with full biconditional clauses; a top-level 'and'
// splits into separate clauses and a top-level 'or' of literals becomes a
// single clause, so flat inputs incur no fresh variables. Relations over
// constant polynomials fold to truth values.
Internalized internalize(const Script& s);

} // namespace dnlsat
