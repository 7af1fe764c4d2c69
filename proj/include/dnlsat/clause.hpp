#pragma once

#include "dnlsat/atom.hpp"

#include <memory>
#include <optional>
#include <set>
#include <unordered_map>

namespace dnlsat {

struct Clause {
    std::vector<Literal> lits;
    bool learnt = false;
    bool locked = false; // reason of a trail entry; exempt from deletion
    double activity = 0.0;

    size_t size() const { return lits.size(); }
    Literal& operator[](size_t i) { return lits[i]; }
    const Literal& operator[](size_t i) const { return lits[i]; }
};

// Clause shape relative to a trail: satisfied / falsified by boolean values,
// all remaining literals decidable by evaluation, a single open boolean
// literal, open only through one arithmetic variable, or anything wider.
struct ClauseStatus {
    enum Kind { Satisfied, Falsified, Determined, UnitBool, Univariate, Multi } kind;
    Literal unit{};    // UnitBool: the open literal
    Var v = kNoVar;    // Univariate: the single open variable
};

// Central store for the problem: boolean variables (each optionally backed
// by a hash-consed arithmetic atom), original clauses, and learnt clauses.
// Clause pointers stay valid until the clause is removed.
class ClauseDB {
public:
    // Plain boolean variable with no arithmetic content.
    BVar new_bool_var();

    // Canonicalizes the atom (primitive positive polynomial, relation
    // mirrored when the sign flips) and returns its variable, reusing an
    // existing one for structurally equal atoms.
    BVar atom_var(Atom a);

    size_t num_vars() const { return atoms_.size(); }
    const Atom* atom_of(BVar v) const {
        return atoms_[v].has_value() ? &*atoms_[v] : nullptr;
    }
    // Highest arithmetic variable mentioned by any atom, kNoVar when none.
    Var max_arith_var() const;

    // Original clauses are normalized (sorted, duplicate literals removed);
    // tautologies and repeated clauses are dropped, returning nullptr.
    // Learnt clauses are stored as given: the caller controls literal order.
    Clause* add_clause(std::vector<Literal> lits, bool learnt);

    const std::vector<std::unique_ptr<Clause>>& originals() const { return originals_; }
    std::vector<std::unique_ptr<Clause>>& learnts() { return learnts_; }
    const std::vector<std::unique_ptr<Clause>>& learnts() const { return learnts_; }

    // Learnt-clause activity, MiniSat's inverse-decay scheme: bumping adds
    // the current increment; each decay divides the increment; everything
    // is rescaled when an activity passes 1e100.
    void set_clause_decay(double d) { clause_decay_ = d; }
    void set_clause_bump(double b) { clause_inc_ = b; }
    void bump_clause(Clause* c);
    void decay_clause_activity() { clause_inc_ /= clause_decay_; }

private:
    std::vector<std::optional<Atom>> atoms_;
    std::unordered_map<size_t, std::vector<BVar>> index_;
    std::vector<std::unique_ptr<Clause>> originals_, learnts_;
    std::set<std::vector<Literal>> original_keys_;
    double clause_inc_ = 1.0, clause_decay_ = 0.999;
};

// Truth value from boolean assignments alone: true if some literal is true,
// false if all are false, undetermined otherwise.
LBool evaluate_clause(const Clause& c, const std::vector<LBool>& bvals);

// Classification used by the engine's propagation and decision loops.
ClauseStatus classify_clause(const Clause& c, const ClauseDB& db,
                             const std::vector<LBool>& bvals, const Assignment& a);

} // namespace dnlsat
