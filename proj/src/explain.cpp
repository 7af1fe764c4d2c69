#include "dnlsat/explain.hpp"

#include "dnlsat/error.hpp"

#include <algorithm>

namespace dnlsat {

namespace {

// Gcd of the coefficients of p viewed in v (the polynomial content).
Polynomial content_in(const Polynomial& p, Var v) {
    Polynomial g;
    for (const auto& c : p.coeffs_in(v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd_poly(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

void split_parts(const Polynomial& p, std::vector<Polynomial>& out) {
    if (p.is_constant()) return;
    Var v = p.top_var();
    Polynomial cont = content_in(p, v);
    Polynomial pp = divexact(p, cont);
    out.push_back(square_free_part(pp, v).primitive_positive());
    split_parts(cont, out);
}

// Leading coefficient first, descending while the current coefficient
// vanishes at the sample; the first non-vanishing one is kept and ends the
// walk. Coefficients the sample does not cover count as non-vanishing.
void descend_coeffs(const Polynomial& p, Var v, const Assignment& sample,
                    std::vector<Polynomial>* kept,
                    std::vector<Polynomial>* vanishing) {
    for (const auto& c : coefficients_in(p, v)) {
        if (c.is_zero()) continue;
        bool vanish =
            !c.is_constant() && sample.covers(c) && sign_eval(c, sample) == 0;
        if (kept && !c.is_constant()) kept->push_back(c);
        if (!vanish) break;
        if (vanishing) vanishing->push_back(c);
    }
}

// Keeps the pool pairwise coprime (a gcd-free basis), so no later projection
// meets a zero resultant. q must be square-free and primitive positive.
void pool_insert(std::vector<Polynomial>& pool, Polynomial q) {
    if (q.is_constant()) return;
    size_t i = 0;
    while (i < pool.size()) {
        Polynomial g = gcd_poly(pool[i], q);
        if (g.is_constant()) {
            ++i;
            continue;
        }
        Polynomial p = std::move(pool[i]);
        pool.erase(pool.begin() + static_cast<long>(i));
        Polynomial pg = divexact(p, g).primitive_positive();
        if (!pg.is_constant()) pool.push_back(std::move(pg));
        q = divexact(q, g).primitive_positive();
        pool.push_back(std::move(g));
        if (q.is_constant()) return;
    }
    pool.push_back(std::move(q));
}

} // namespace

std::vector<Polynomial> canonical_parts(const Polynomial& p) {
    std::vector<Polynomial> out;
    split_parts(p, out);
    std::sort(out.begin(), out.end(), PolynomialLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Polynomial> project_step(const std::vector<Polynomial>& ps, Var v,
                                     const Assignment& sample) {
    for (const auto& p : ps) {
        if (p.is_zero()) throw DomainError("project_step: zero polynomial");
        if (p.degree_in(v) == 0)
            throw DomainError("project_step: input free of the eliminated variable");
    }
    // Outputs from inputs carrying no other variable are constants and
    // constants are dropped, so skip computing those outright.
    auto only_v = [&](const Polynomial& p) {
        auto vs = p.vars();
        return vs.size() == 1 && vs[0] == v;
    };
    std::vector<Polynomial> raw;
    for (const auto& p : ps) {
        if (p.degree_in(v) >= 2 && !only_v(p)) raw.push_back(discriminant(p, v));
        descend_coeffs(p, v, sample, &raw, nullptr);
    }
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j)
            if (!(only_v(ps[i]) && only_v(ps[j])))
                raw.push_back(resultant(ps[i], ps[j], v));

    std::vector<Polynomial> out;
    for (const auto& q : raw)
        for (auto& part : canonical_parts(q)) out.push_back(std::move(part));
    std::sort(out.begin(), out.end(), PolynomialLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Lemma explain_conflict(ClauseDB& db, const ConflictCore& core,
                       std::vector<Var>* eliminated) {
    if (core.trail == nullptr) throw InternalError("explain: core has no trail");
    const Assignment& a = *core.trail;

    Lemma lem;
    lem.clause.learnt = true;

    std::vector<Literal> lits;
    for (Literal l : core.literals) lits.push_back(~l);

    std::vector<Polynomial> pool;
    for (Literal l : core.literals) {
        const Atom* at = db.atom_of(l.var());
        if (at == nullptr)
            throw InternalError("explain: core literal has no arithmetic atom");
        for (auto& part : canonical_parts(at->p))
            pool_insert(pool, std::move(part));
    }

    auto add_cell_lit = [&](const Atom& at) {
        BVar fresh = db.num_vars();
        BVar b = db.atom_var(at);
        if (b == fresh) lem.new_atoms.push_back(*db.atom_of(b));
        lits.push_back(Literal(b, true)); // negated cell bound
    };

    // One elimination stage. `bounded` marks assigned variables, whose value
    // gets pinned between (or onto) the neighboring stage roots.
    auto eliminate = [&](Var u, bool bounded) {
        std::vector<Polynomial> stage;
        for (size_t i = pool.size(); i-- > 0;) {
            if (pool[i].degree_in(u) == 0) continue;
            stage.push_back(std::move(pool[i]));
            pool.erase(pool.begin() + static_cast<long>(i));
        }
        if (stage.empty()) return;
        std::sort(stage.begin(), stage.end(), PolynomialLess{});
        if (getenv("EXPLAIN_PHASE_TRACE")) {
            fprintf(stderr, "[stage x%u] %zu polys:", u, stage.size());
            for (auto& p : stage)
                fprintf(stderr, " (d%u,t%zu)", p.total_degree(), p.num_terms());
            fprintf(stderr, "\n");
        }

        // Coefficients vanishing at the sample are part of the cell shape.
        for (const auto& p : stage) {
            std::vector<Polynomial> vanishing;
            descend_coeffs(p, u, a, nullptr, &vanishing);
            for (const auto& c : vanishing) add_cell_lit(Atom::poly(c, Rel::EQ));
        }

        if (getenv("EXPLAIN_PHASE_TRACE")) fprintf(stderr, "[stage x%u] bounds\n", u);
        if (bounded) {
            const RealAlgebraic& val = a.value(u);
            struct Pick {
                bool set = false;
                const Polynomial* p = nullptr;
                unsigned k = 0;
                RealAlgebraic r;
            };
            Pick lo, hi, eq;
            for (const auto& p : stage) {
                APoly ap = eval_partial(p, u, a);
                if (ap.is_zero()) continue; // pinned by the equalities above
                if (getenv("EXPLAIN_PHASE_TRACE")) {
                    fprintf(stderr, "[stage x%u] isolate d%u t%zu %s\n", u,
                            p.total_degree(), p.num_terms(),
                            p.total_degree() <= 4 ? p.to_string().c_str() : "...");
                    if (p.total_degree() > 100) {
                        char fn[64];
                        snprintf(fn, sizeof fn, "/tmp/mon_d%u.txt", p.total_degree());
                        FILE* f = fopen(fn, "w");
                        fprintf(f, "%s\n", p.to_string().c_str());
                        fclose(f);
                    }
                }
                std::vector<RealAlgebraic> roots = isolate_roots(p, u, a);
                for (size_t k = 0; k < roots.size(); ++k) {
                    int c = RealAlgebraic::compare(roots[k], val);
                    Pick cand{true, &p, static_cast<unsigned>(k + 1), roots[k]};
                    if (c == 0) {
                        if (!eq.set) eq = cand;
                    } else if (c < 0) {
                        if (!lo.set || roots[k] > lo.r) lo = cand;
                    } else {
                        if (!hi.set || roots[k] < hi.r) hi = cand;
                    }
                }
            }
            if (eq.set) {
                add_cell_lit(Atom::root(u, Rel::EQ, *eq.p, eq.k));
            } else {
                if (lo.set) add_cell_lit(Atom::root(u, Rel::GT, *lo.p, lo.k));
                if (hi.set) add_cell_lit(Atom::root(u, Rel::LT, *hi.p, hi.k));
            }
        }

        if (getenv("EXPLAIN_PHASE_TRACE")) fprintf(stderr, "[stage x%u] project\n", u);
        for (auto& q : project_step(stage, u, a)) pool_insert(pool, std::move(q));
        if (getenv("EXPLAIN_PHASE_TRACE")) fprintf(stderr, "[stage x%u] done\n", u);
    };

    eliminate(core.var, false);
    const auto& order = a.order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        eliminate(*it, true);
        if (eliminated) eliminated->push_back(*it);
    }

    for (const auto& q : pool)
        if (!q.is_constant())
            throw InternalError("explain: projection left an unhandled variable");

    for (Literal l : lits) {
        auto& out = lem.clause.lits;
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
    return lem;
}

} // namespace dnlsat
