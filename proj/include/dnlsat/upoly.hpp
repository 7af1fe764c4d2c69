#pragma once

#include "dnlsat/polynomial.hpp"

#include <vector>

namespace dnlsat {

// Dense univariate polynomials, coefficients ascending by degree.
// Normalized form has no trailing zero coefficients.
using UPolyQ = std::vector<Rational>;
using UPolyZ = std::vector<Integer>;

void upq_trim(UPolyQ& p);
void upz_trim(UPolyZ& p);
int updeg_q(const UPolyQ& p); // -1 for zero
int updeg_z(const UPolyZ& p);

UPolyQ upoly_from(const Polynomial& p, Var v); // p must involve no var besides v
Polynomial upoly_to(const UPolyQ& p, Var v);
Polynomial upoly_to(const UPolyZ& p, Var v);
UPolyQ upq_of(const UPolyZ& p);

// Clear denominators and divide by integer content; sign of the leading
// coefficient is preserved.
UPolyZ upz_primitive(const UPolyQ& p);

Rational upq_eval(const UPolyQ& p, const Rational& x);
int upz_sign_at(const UPolyZ& p, const Rational& x);
UPolyZ upz_derivative(const UPolyZ& p);
UPolyQ upq_derivative(const UPolyQ& p);

// Field arithmetic helpers (used by gcd and Sturm chains).
UPolyQ upq_rem(const UPolyQ& a, const UPolyQ& b);
UPolyQ upq_gcd(const UPolyQ& a, const UPolyQ& b); // monic

// p / gcd(p, p'), primitive with positive leading coefficient.
UPolyZ upz_square_free(const UPolyZ& p);

// 1 + max |a_i| / |a_d|, rounded up to an integer; every real root has
// absolute value strictly below it.
Rational upz_root_bound(const UPolyZ& p);

// Sign variations of the Descartes test for the open interval (lo, hi).
// The count bounds the number of roots there, matches its parity, and is
// exact when 0 or 1.
int upz_descartes(const UPolyZ& p, const Rational& lo, const Rational& hi);

struct RootRegion {
    bool exact;     // rational root, stored in value
    Rational value;
    Rational lo, hi; // open isolating interval otherwise; p(lo), p(hi) != 0
};

// Isolates all real roots of a square-free primitive integer polynomial,
// ascending. Rational roots are always reported exactly; interval regions
// hold exactly one irrational root each.
std::vector<RootRegion> upz_isolate(const UPolyZ& p);

// Number of distinct real roots of p in the open interval (a, b);
// requires p(a) != 0 and p(b) != 0.
int upq_sturm_count(const UPolyQ& p, const Rational& a, const Rational& b);

} // namespace dnlsat
