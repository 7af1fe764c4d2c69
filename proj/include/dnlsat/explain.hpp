#pragma once

#include "dnlsat/assignment.hpp"
#include "dnlsat/clause.hpp"

#include <vector>

namespace dnlsat {

// Arithmetic literals, each univariate in `var` under `trail`, whose
// feasible sets for `var` have empty intersection. `trail` is borrowed and
// must outlive the core.
struct ConflictCore {
    std::vector<Literal> literals;
    Var var = kNoVar;
    const Assignment* trail = nullptr;
};

// A theory-valid clause that is false under the trail it was built from.
// `new_atoms` lists the atoms minted for the cell description, in canonical
// (interned) form.
struct Lemma {
    Clause clause;
    std::vector<Atom> new_atoms;
};

// Square-free primitive-positive factors of p, constants dropped; contents
// are split off recursively, each primitive part reduced to its square-free
// part. The parts have the same real variety as p.
std::vector<Polynomial> canonical_parts(const Polynomial& p);

// Model-based reduced projection of ps eliminating v: for each p its
// discriminant and its leading coefficient, descending past coefficients
// that vanish at the sample; for each pair of distinct p, q their resultant.
// Results pass through canonical_parts and come back sorted and
// deduplicated. Every input must be nonzero with degree_in(p, v) >= 1.
std::vector<Polynomial> project_step(const std::vector<Polynomial>& ps, Var v,
                                     const Assignment& sample);

// Lemma = ~(core literals) \/ ~(cell bounds). The cell around the trail
// values is carved out by eliminating the conflict variable first and the
// assigned variables in reverse assignment order after it; at each assigned
// variable the neighboring (or coinciding) roots of the stage polynomials
// become root atoms, and coefficients vanishing at the trail become
// equalities. New atoms are interned into db. `eliminated`, when non-null,
// receives the assigned variables in elimination order.
Lemma explain_conflict(ClauseDB& db, const ConflictCore& core,
                       std::vector<Var>* eliminated = nullptr);

} // namespace dnlsat
