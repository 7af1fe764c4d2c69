#pragma once

#include "dnlsat/upoly.hpp"

#include <memory>
#include <string>

namespace dnlsat {

// A real algebraic number: either an exact rational, or an irrational root
// of a square-free primitive integer polynomial together with an open
// isolating interval with rational endpoints. Construction detects rational
// roots, so the irrational representation is never a disguised rational.
// Interval refinement is a logically const operation (the value is fixed).
class RealAlgebraic {
public:
    RealAlgebraic() : rat_(0), is_rat_(true) {}
    explicit RealAlgebraic(const Rational& q) : rat_(q), is_rat_(true) {}
    explicit RealAlgebraic(long n) : rat_(n), is_rat_(true) {}

    // From an isolating region of `def` (square-free, primitive). Runs
    // rational-root detection when the region is an interval.
    static RealAlgebraic from_region(const std::shared_ptr<const UPolyZ>& def,
                                     const RootRegion& region);

    bool is_rational() const { return is_rat_; }
    const Rational& rational_value() const { return rat_; }
    const UPolyZ& defining_poly() const { return *def_; }

    // Rational bracket: lo() <= value <= hi(), equal for rationals, strict
    // and open for irrationals.
    Rational lo() const { return is_rat_ ? rat_ : lo_; }
    Rational hi() const { return is_rat_ ? rat_ : hi_; }
    Rational approx() const { return is_rat_ ? rat_ : (lo_ + hi_) / 2; }

    void refine() const;                              // one bisection step
    void refine_below(const Rational& width) const;   // until hi-lo < width

    int sign() const;
    Integer floor() const;
    Integer ceiling() const;

    static int compare(const RealAlgebraic& a, const RealAlgebraic& b);
    bool operator==(const RealAlgebraic& o) const { return compare(*this, o) == 0; }
    bool operator!=(const RealAlgebraic& o) const { return compare(*this, o) != 0; }
    bool operator<(const RealAlgebraic& o) const { return compare(*this, o) < 0; }
    bool operator<=(const RealAlgebraic& o) const { return compare(*this, o) <= 0; }
    bool operator>(const RealAlgebraic& o) const { return compare(*this, o) > 0; }
    bool operator>=(const RealAlgebraic& o) const { return compare(*this, o) >= 0; }

    RealAlgebraic neg() const;
    static RealAlgebraic add(const RealAlgebraic& a, const RealAlgebraic& b);
    static RealAlgebraic mul(const RealAlgebraic& a, const RealAlgebraic& b);

    // 1-based index of this number among the real roots of its defining
    // polynomial (rationals are their own single root of x - q).
    unsigned root_index() const;

    std::string to_string() const;

private:
    mutable Rational rat_, lo_, hi_;
    std::shared_ptr<const UPolyZ> def_;
    bool is_rat_;
};

inline RealAlgebraic operator-(const RealAlgebraic& a) { return a.neg(); }
inline RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b) {
    return RealAlgebraic::add(a, b);
}
inline RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b) {
    return RealAlgebraic::mul(a, b);
}

// All real roots of `p` (integer, not necessarily square-free), ascending.
std::vector<RealAlgebraic> real_roots(const UPolyZ& p);

} // namespace dnlsat
