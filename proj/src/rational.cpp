#include "dnlsat/rational.hpp"

#include <cassert>
#include <sstream>

namespace dnlsat {

// Stern-Brocot / continued-fraction walk. The invariant is the open interval
// (lo, hi) with lo < hi; an unbounded hi is modelled by the `open_above` flag.
static Rational simplest_nonneg(Rational lo, std::optional<Rational> hi) {
    // Any integer strictly above lo wins if it fits under hi.
    Integer n = floor_int(lo) + 1;
    if (!hi || Rational(n) < *hi)
        return Rational(n);
    Integer fl = floor_int(lo);
    // No integer inside: recurse on the reciprocal of the fractional parts.
    // x in (lo, hi) iff x = fl + 1/y with y in (1/(hi-fl), 1/(lo-fl)),
    // the upper bound dropping away when lo == fl.
    Rational lo2 = Rational(1) / (*hi - Rational(fl));
    std::optional<Rational> hi2;
    if (lo != Rational(fl))
        hi2 = Rational(1) / (lo - Rational(fl));
    Rational y = simplest_nonneg(lo2, hi2);
    return Rational(fl) + Rational(1) / y;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
    assert(lo < hi);
    if (sign_of(lo) < 0 && sign_of(hi) > 0) return Rational(0);
    if (sign_of(lo) >= 0) return simplest_nonneg(lo, hi);
    // Mirror the negative case.
    Rational r = simplest_nonneg(-hi, -lo);
    return -r;
}

Rational dyadic_between(const Rational& lo, const Rational& hi) {
    assert(lo < hi);
    Rational scale(1);
    for (;;) {
        Integer k = floor_int(lo * scale) + 1;
        Rational cand = Rational(k) / scale;
        if (cand < hi) return cand;
        scale *= 2;
    }
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

} // namespace dnlsat
