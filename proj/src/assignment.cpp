#include "dnlsat/assignment.hpp"

#include "dnlsat/error.hpp"
#include "dnlsat/rat_interval.hpp"

#include <cassert>
#include <map>

namespace dnlsat {

void Assignment::push(Var v, const RealAlgebraic& val) {
    if (v >= vals_.size()) vals_.resize(v + 1);
    assert(!vals_[v].has_value());
    vals_[v] = val;
    order_.push_back(v);
}

void Assignment::pop() {
    assert(!order_.empty());
    vals_[order_.back()].reset();
    order_.pop_back();
}

bool Assignment::covers(const Polynomial& p) const {
    for (Var v : p.vars())
        if (!has(v)) return false;
    return true;
}

bool Assignment::covers_except(const Polynomial& p, Var v) const {
    for (Var w : p.vars())
        if (w != v && !has(w)) return false;
    return true;
}

namespace {

// Plug rational values in directly; irrational variables stay symbolic.
Polynomial plug_rationals(const Polynomial& p, const Assignment& a) {
    std::map<Var, Rational> rmap;
    for (Var v : p.vars()) {
        assert(a.has(v));
        if (a.value(v).is_rational()) rmap[v] = a.value(v).rational_value();
    }
    return rmap.empty() ? p : p.substitute(rmap);
}

// Exact recursive Horner evaluation; every variable of q must be assigned.
RealAlgebraic eval_exact(const Polynomial& q, const Assignment& a) {
    if (q.is_constant()) return RealAlgebraic(q.constant_value());
    Var u = q.top_var();
    const RealAlgebraic& x = a.value(u);
    std::vector<Polynomial> cs = q.coeffs_in(u);
    RealAlgebraic acc;
    for (size_t i = cs.size(); i-- > 0;)
        acc = RealAlgebraic::add(RealAlgebraic::mul(acc, x), eval_exact(cs[i], a));
    return acc;
}

RatInterval bracket_of(const RealAlgebraic& x) { return {x.lo(), x.hi()}; }

// Term-wise interval evaluation of q over the current brackets of its
// (irrational) variables; exact for rational-only terms.
RatInterval bracket_eval(const Polynomial& q, const Assignment& a) {
    RatInterval acc{Rational(0), Rational(0)};
    for (const auto& [mono, coeff] : q.terms()) {
        RatInterval t{coeff, coeff};
        for (const auto& [mv, me] : mono.factors())
            t = rivl_mul(t, rivl_pow(bracket_of(a.value(mv)), me));
        acc = rivl_add(acc, t);
    }
    return acc;
}

} // namespace

RealAlgebraic eval_value(const Polynomial& p, const Assignment& a) {
    Polynomial q = plug_rationals(p, a);
    return eval_exact(q, a);
}

int sign_eval(const Polynomial& p, const Assignment& a) {
    Polynomial q = plug_rationals(p, a);
    if (q.is_constant()) return sign_of(q.constant_value());
    for (int round = 0; round < 8; ++round) {
        int s = rivl_sign(bracket_eval(q, a));
        if (s != 0) return s;
        for (Var v : q.vars()) a.value(v).refine();
    }
    return eval_exact(q, a).sign();
}

APoly eval_partial(const Polynomial& p, Var v, const Assignment& a) {
    APoly out;
    out.var = v;
    for (const Polynomial& c : p.coeffs_in(v)) {
        if (c.is_zero())
            out.coeffs.emplace_back();
        else
            out.coeffs.push_back(eval_value(c, a));
    }
    while (!out.coeffs.empty() && out.coeffs.back().sign() == 0) out.coeffs.pop_back();
    return out;
}

int sign_apoly_at(const APoly& p, const RealAlgebraic& x) {
    if (p.coeffs.empty()) return 0;

    bool all_rat = x.is_rational();
    for (const RealAlgebraic& c : p.coeffs)
        all_rat = all_rat && c.is_rational();
    if (all_rat) {
        Rational acc(0);
        for (size_t i = p.coeffs.size(); i-- > 0;)
            acc = acc * x.rational_value() + p.coeffs[i].rational_value();
        return sign_of(acc);
    }

    for (int round = 0; round < 10; ++round) {
        RatInterval xv = bracket_of(x);
        RatInterval acc{Rational(0), Rational(0)};
        for (size_t i = p.coeffs.size(); i-- > 0;)
            acc = rivl_add(rivl_mul(acc, xv), bracket_of(p.coeffs[i]));
        int s = rivl_sign(acc);
        if (s != 0) return s;
        x.refine();
        for (const RealAlgebraic& c : p.coeffs) c.refine();
    }

    RealAlgebraic acc;
    for (size_t i = p.coeffs.size(); i-- > 0;)
        acc = RealAlgebraic::add(RealAlgebraic::mul(acc, x), p.coeffs[i]);
    return acc.sign();
}

namespace {

// Sign of the integer polynomial q at the real algebraic point x.
int sign_upz_at_anum(const UPolyZ& q, const RealAlgebraic& x) {
    APoly tmp;
    tmp.var = 0;
    for (const Integer& c : q) tmp.coeffs.push_back(RealAlgebraic(Rational(c)));
    while (!tmp.coeffs.empty() && tmp.coeffs.back().sign() == 0) tmp.coeffs.pop_back();
    return sign_apoly_at(tmp, x);
}

} // namespace

std::vector<RealAlgebraic> isolate_roots(const APoly& p) {
    if (p.is_zero()) throw DomainError("isolate_roots: zero polynomial");
    if (p.degree() == 0) return {};

    bool all_rat = true;
    for (const RealAlgebraic& c : p.coeffs)
        all_rat = all_rat && c.is_rational();
    if (all_rat) {
        UPolyQ q;
        for (const RealAlgebraic& c : p.coeffs) q.push_back(c.rational_value());
        return real_roots(upz_primitive(q));
    }

    // Rewrite irrational coefficients as fresh variables z_j constrained by
    // their defining polynomials, then eliminate each z_j by resultants.
    // Every root of p remains a root of the eliminant, so isolating its
    // roots and filtering by exact sign recovers exactly the roots of p.
    const Var main = 0;
    std::vector<RealAlgebraic> zvals;
    std::vector<UPolyZ> zdefs;
    Polynomial Q;
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        const RealAlgebraic& c = p.coeffs[i];
        if (c.sign() == 0) continue;
        Polynomial term;
        if (c.is_rational()) {
            term = Polynomial(c.rational_value());
        } else {
            size_t j = 0;
            for (; j < zvals.size(); ++j)
                if (RealAlgebraic::compare(zvals[j], c) == 0) break;
            if (j == zvals.size()) {
                zvals.push_back(c);
                zdefs.push_back(c.defining_poly());
            }
            term = Polynomial::variable(Var(1 + j));
        }
        Q = Q + term * Polynomial::variable(main).pow(uint32_t(i));
    }

    Polynomial R = Q;
    for (size_t j = zvals.size(); j-- > 0;) {
        Var zv = Var(1 + j);
        if (R.degree_in(zv) == 0) continue;
        Polynomial dz = upoly_to(zdefs[j], zv);
        for (;;) {
            Polynomial res = resultant(R, dz, zv);
            if (!res.is_zero()) {
                R = res;
                break;
            }
            // R and dz share a factor in z_j; strip it from dz and retry.
            // The stripped dz must still vanish at z_j's value, or roots of
            // p could be lost silently.
            Polynomial h = gcd_poly(R, dz);
            if (h.degree_in(zv) == 0)
                throw InternalError("isolate_roots: vanishing resultant without common factor");
            dz = divexact(dz, h);
            UPolyZ dzu = upz_primitive(upoly_from(dz, zv));
            if (updeg_z(dzu) <= 0 || sign_upz_at_anum(dzu, zvals[j]) != 0)
                throw InternalError("isolate_roots: elimination lost a defining root");
        }
    }

    if (R.is_zero()) throw InternalError("isolate_roots: eliminant vanished");
    if (R.degree_in(main) == 0) return {};
    std::vector<RealAlgebraic> cands = real_roots(upz_primitive(upoly_from(R, main)));
    std::vector<RealAlgebraic> out;
    for (const RealAlgebraic& r : cands)
        if (sign_apoly_at(p, r) == 0) out.push_back(r);
    return out;
}

std::vector<RealAlgebraic> isolate_roots(const Polynomial& p, Var v, const Assignment& a) {
    APoly ap = eval_partial(p, v, a);
    if (ap.is_zero()) throw DomainError("isolate_roots: zero polynomial");
    if (ap.degree() == 0) return {};

    bool all_rat = true;
    for (const RealAlgebraic& c : ap.coeffs) all_rat = all_rat && c.is_rational();
    if (all_rat) {
        UPolyQ q;
        for (const RealAlgebraic& c : ap.coeffs) q.push_back(c.rational_value());
        return real_roots(upz_primitive(q));
    }

    // Plug the rational values in, then clear each irrationally assigned
    // variable with a single resultant against its defining polynomial.
    // Cheaper than rebuilding the extension from the evaluated coefficients:
    // those share one field, and the coefficient-wise route pays for a fresh
    // variable per coefficient instead of one per assigned variable.
    std::map<Var, Rational> rat;
    std::vector<Var> zs;
    for (Var u : p.vars()) {
        if (u == v) continue;
        const RealAlgebraic& val = a.value(u);
        if (val.is_rational())
            rat.emplace(u, val.rational_value());
        else
            zs.push_back(u);
    }
    Polynomial R = p.substitute(rat);
    for (Var u : zs) {
        if (R.degree_in(u) == 0) continue;
        Polynomial dz = upoly_to(a.value(u).defining_poly(), u);
        for (;;) {
            Polynomial res = resultant(R, dz, u);
            if (!res.is_zero()) {
                R = res;
                break;
            }
            // R and dz share a factor in u; strip it from dz and retry. The
            // stripped dz must still vanish at u's value, or roots of p
            // could be lost silently.
            Polynomial h = gcd_poly(R, dz);
            if (h.degree_in(u) == 0)
                throw InternalError("isolate_roots: vanishing resultant without common factor");
            dz = divexact(dz, h);
            UPolyZ dzu = upz_primitive(upoly_from(dz, u));
            if (updeg_z(dzu) <= 0 || sign_upz_at_anum(dzu, a.value(u)) != 0)
                throw InternalError("isolate_roots: elimination lost a defining root");
        }
    }
    if (R.is_zero()) throw InternalError("isolate_roots: eliminant vanished");
    if (R.degree_in(v) == 0) return {};
    std::vector<RealAlgebraic> cands = real_roots(upz_primitive(upoly_from(R, v)));
    std::vector<RealAlgebraic> out;
    for (const RealAlgebraic& r : cands)
        if (sign_apoly_at(ap, r) == 0) out.push_back(r);
    return out;
}

namespace {

// A rational strictly between two distinct algebraic numbers.
Rational sample_between(const RealAlgebraic& a, const RealAlgebraic& b) {
    while (!(a.hi() < b.lo())) {
        a.refine();
        b.refine();
    }
    return (a.hi() + b.lo()) / 2;
}

} // namespace

IntervalSet feasible_poly(const Polynomial& p, Rel rel, Var v, const Assignment& a) {
    APoly ap = eval_partial(p, v, a);
    if (ap.is_zero())
        return rel_eval(0, rel) ? IntervalSet::all() : IntervalSet::empty();
    if (ap.degree() == 0)
        return rel_eval(ap.coeffs[0].sign(), rel) ? IntervalSet::all() : IntervalSet::empty();

    std::vector<RealAlgebraic> roots = isolate_roots(p, v, a);
    std::vector<Ivl> parts;
    size_t k = roots.size();
    for (size_t i = 0; i <= k; ++i) {
        Rational s;
        if (k == 0)
            s = 0;
        else if (i == 0)
            s = roots.front().lo() - 1;
        else if (i == k)
            s = roots.back().hi() + 1;
        else
            s = sample_between(roots[i - 1], roots[i]);
        int sg = sign_apoly_at(ap, RealAlgebraic(s));
        assert(sg != 0);
        if (rel_eval(sg, rel)) {
            Ivl part;
            part.lo = (i == 0) ? Endpoint::neg_inf() : Endpoint::at(roots[i - 1]);
            part.hi = (i == k) ? Endpoint::pos_inf() : Endpoint::at(roots[i]);
            parts.push_back(part);
        }
    }
    if (rel_eval(0, rel))
        for (const RealAlgebraic& r : roots)
            parts.push_back({Endpoint::at(r), Endpoint::at(r), true, true});
    return IntervalSet::from_parts(std::move(parts));
}

IntervalSet feasible_root(const Polynomial& p, Rel rel, unsigned k, Var v, const Assignment& a) {
    if (k == 0) throw DomainError("feasible_root: root index is 1-based");
    APoly ap = eval_partial(p, v, a);
    // A collapsed polynomial has no indexed roots, so the atom is false.
    if (ap.is_zero() || ap.degree() == 0) return IntervalSet::empty();
    std::vector<RealAlgebraic> roots = isolate_roots(p, v, a);
    if (roots.size() < k) return IntervalSet::empty();
    const RealAlgebraic& r = roots[k - 1];
    switch (rel) {
    case Rel::LT: return IntervalSet::interval(Endpoint::neg_inf(), false, Endpoint::at(r), false);
    case Rel::LE: return IntervalSet::interval(Endpoint::neg_inf(), false, Endpoint::at(r), true);
    case Rel::EQ: return IntervalSet::point(r);
    case Rel::NEQ: return IntervalSet::complement(IntervalSet::point(r));
    case Rel::GE: return IntervalSet::interval(Endpoint::at(r), true, Endpoint::pos_inf(), false);
    case Rel::GT: return IntervalSet::interval(Endpoint::at(r), false, Endpoint::pos_inf(), false);
    }
    throw InternalError("feasible_root: bad relation");
}

} // namespace dnlsat
