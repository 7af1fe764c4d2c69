#include "dnlsat/clause.hpp"

#include "dnlsat/error.hpp"

#include <algorithm>

namespace dnlsat {

BVar ClauseDB::new_bool_var() {
    atoms_.emplace_back();
    return static_cast<BVar>(atoms_.size() - 1);
}

BVar ClauseDB::atom_var(Atom a) {
    if (a.p.is_constant()) throw DomainError("atom over a constant polynomial");
    if (a.kind == AtomKind::Root) {
        if (a.k == 0) throw DomainError("root atom index is 1-based");
        if (a.rvar == kNoVar || a.p.degree_in(a.rvar) == 0)
            throw DomainError("root atom polynomial must involve its variable");
    }
    bool flipped = sign_of(a.p.leading_coeff()) < 0;
    a.p = a.p.primitive_positive();
    // Scaling by a negative constant mirrors polynomial signs but leaves
    // the root set (and hence root indices) alone.
    if (flipped && a.kind == AtomKind::Poly) a.rel = rel_flip(a.rel);

    size_t h = a.hash();
    auto& bucket = index_[h];
    for (BVar v : bucket)
        if (*atoms_[v] == a) return v;
    atoms_.emplace_back(std::move(a));
    BVar v = static_cast<BVar>(atoms_.size() - 1);
    bucket.push_back(v);
    return v;
}

Var ClauseDB::max_arith_var() const {
    Var m = kNoVar;
    for (const auto& at : atoms_) {
        if (!at.has_value()) continue;
        for (Var v : at->vars())
            if (m == kNoVar || v > m) m = v;
    }
    return m;
}

Clause* ClauseDB::add_clause(std::vector<Literal> lits, bool learnt) {
    if (!learnt) {
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (size_t i = 0; i + 1 < lits.size(); ++i)
            if (lits[i].var() == lits[i + 1].var()) return nullptr; // tautology
        if (!original_keys_.insert(lits).second) return nullptr;    // duplicate
    }
    auto c = std::make_unique<Clause>();
    c->lits = std::move(lits);
    c->learnt = learnt;
    Clause* ptr = c.get();
    (learnt ? learnts_ : originals_).push_back(std::move(c));
    return ptr;
}

void ClauseDB::bump_clause(Clause* c) {
    c->activity += clause_inc_;
    if (c->activity > 1e100) {
        for (auto& cl : learnts_) cl->activity *= 1e-100;
        clause_inc_ *= 1e-100;
    }
}

LBool evaluate_clause(const Clause& c, const std::vector<LBool>& bvals) {
    bool undef = false;
    for (Literal l : c.lits) {
        LBool v = bvals[l.var()];
        if (v == LBool::Undef) {
            undef = true;
            continue;
        }
        bool t = (v == LBool::True) != l.neg();
        if (t) return LBool::True;
    }
    return undef ? LBool::Undef : LBool::False;
}

ClauseStatus classify_clause(const Clause& c, const ClauseDB& db,
                             const std::vector<LBool>& bvals, const Assignment& a) {
    ClauseStatus st;
    std::vector<Literal> open;
    for (Literal l : c.lits) {
        LBool v = bvals[l.var()];
        if (v == LBool::Undef) {
            open.push_back(l);
            continue;
        }
        if ((v == LBool::True) != l.neg()) {
            st.kind = ClauseStatus::Satisfied;
            return st;
        }
    }
    if (open.empty()) {
        st.kind = ClauseStatus::Falsified;
        return st;
    }

    bool any_bool = false, any_open_var = false, conflict_vars = false;
    Var u = kNoVar;
    for (Literal l : open) {
        const Atom* at = db.atom_of(l.var());
        if (!at) {
            any_bool = true;
            continue;
        }
        for (Var v : at->vars()) {
            if (a.has(v)) continue;
            any_open_var = true;
            if (u == kNoVar)
                u = v;
            else if (u != v)
                conflict_vars = true;
        }
    }
    if (any_bool) {
        if (open.size() == 1) {
            st.kind = ClauseStatus::UnitBool;
            st.unit = open[0];
            return st;
        }
        st.kind = ClauseStatus::Multi;
        return st;
    }
    if (!any_open_var) {
        st.kind = ClauseStatus::Determined;
        return st;
    }
    if (!conflict_vars) {
        st.kind = ClauseStatus::Univariate;
        st.v = u;
        return st;
    }
    st.kind = ClauseStatus::Multi;
    return st;
}

} // namespace dnlsat
