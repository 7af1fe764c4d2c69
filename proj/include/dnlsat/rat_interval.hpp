#pragma once

#include "dnlsat/rational.hpp"

#include <algorithm>

namespace dnlsat {

// Closed rational interval used for cheap sign filtering before exact
// algebraic evaluation.
struct RatInterval {
    Rational lo, hi;
};

inline RatInterval rivl_add(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline RatInterval rivl_mul(const RatInterval& a, const RatInterval& b) {
    Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {std::min(std::min(c1, c2), std::min(c3, c4)),
            std::max(std::max(c1, c2), std::max(c3, c4))};
}

inline RatInterval rivl_pow(const RatInterval& a, uint32_t e) {
    RatInterval r{Rational(1), Rational(1)};
    for (uint32_t i = 0; i < e; ++i) r = rivl_mul(r, a);
    return r;
}

// -1, 1, or 0 when the interval still straddles zero.
inline int rivl_sign(const RatInterval& a) {
    if (sign_of(a.lo) > 0) return 1;
    if (sign_of(a.hi) < 0) return -1;
    return 0;
}

} // namespace dnlsat
