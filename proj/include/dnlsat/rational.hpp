#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <string>

namespace dnlsat {

using Integer  = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Integer& z) { return mpz_sgn(z.get_mpz_t()); }
inline int sign_of(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

// GMP rationals built from a numerator/denominator pair are not reduced
// automatically, and comparisons assume reduced form. Always construct
// through this when the parts may share a factor.
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer floor_int(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_int(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer gcd_int(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer pow_int(const Integer& a, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Rational pow_rat(const Rational& a, unsigned long e) {
    Rational r(1);
    Rational base = a;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline size_t hash_integer(const Integer& z) {
    // FNV over the limbs; sign folded in.
    size_t h = 1469598103934665603ull;
    auto mix = [&h](size_t v) { h ^= v; h *= 1099511628211ull; };
    mix(static_cast<size_t>(sign_of(z)) + 7);
    const mpz_srcptr p = z.get_mpz_t();
    for (int i = 0; i < std::abs(p->_mp_size); ++i)
        mix(static_cast<size_t>(p->_mp_d[i]));
    return h;
}

inline size_t hash_rational(const Rational& q) {
    return hash_integer(q.get_num()) * 31 + hash_integer(q.get_den());
}

// Smallest-denominator rational strictly inside (lo, hi); requires lo < hi.
// Among equal denominators the one with the smallest |numerator| is produced.
Rational simplest_between(const Rational& lo, const Rational& hi);

// Dyadic k / 2^n with minimal n strictly inside (lo, hi), smallest such k.
Rational dyadic_between(const Rational& lo, const Rational& hi);

std::string rational_to_string(const Rational& q);

} // namespace dnlsat
