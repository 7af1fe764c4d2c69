#pragma once

#include "dnlsat/algebraic.hpp"
#include "dnlsat/interval_set.hpp"
#include "dnlsat/rel.hpp"

#include <optional>

namespace dnlsat {

// Stacked partial map from arithmetic variables to real algebraic values,
// in assignment order (the solver's stage order).
class Assignment {
public:
    bool has(Var v) const { return v < vals_.size() && vals_[v].has_value(); }
    const RealAlgebraic& value(Var v) const { return *vals_[v]; }

    void push(Var v, const RealAlgebraic& val);
    void pop();
    size_t size() const { return order_.size(); }
    const std::vector<Var>& order() const { return order_; }

    bool covers(const Polynomial& p) const;
    // All variables of p assigned except exactly v (which may appear or not).
    bool covers_except(const Polynomial& p, Var v) const;

private:
    std::vector<std::optional<RealAlgebraic>> vals_;
    std::vector<Var> order_;
};

// Exact sign of p under a total (for p's variables) assignment. Uses rational
// evaluation when possible, then interval arithmetic, then exact algebraic
// evaluation as a last resort.
int sign_eval(const Polynomial& p, const Assignment& a);

// Exact value of p under a total assignment.
RealAlgebraic eval_value(const Polynomial& p, const Assignment& a);

// Image of p under the assignment, viewed univariate in v. Coefficients are
// exact; vanished ones are dropped, so the leading coefficient is nonzero.
struct APoly {
    Var var = kNoVar;
    std::vector<RealAlgebraic> coeffs; // ascending degree, trimmed
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

APoly eval_partial(const Polynomial& p, Var v, const Assignment& a);

int sign_apoly_at(const APoly& p, const RealAlgebraic& x);

// Distinct real roots, ascending. DomainError if p vanished identically.
std::vector<RealAlgebraic> isolate_roots(const APoly& p);
std::vector<RealAlgebraic> isolate_roots(const Polynomial& p, Var v, const Assignment& a);

// Solution set in v of `p rel 0` under the assignment of p's other variables.
IntervalSet feasible_poly(const Polynomial& p, Rel rel, Var v, const Assignment& a);

// Solution set in v of `v rel root_k(p)` (k is 1-based); empty when p has
// fewer than k roots under the assignment.
IntervalSet feasible_root(const Polynomial& p, Rel rel, unsigned k, Var v, const Assignment& a);

} // namespace dnlsat
