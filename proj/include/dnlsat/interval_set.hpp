#pragma once

#include "dnlsat/algebraic.hpp"

#include <optional>
#include <vector>

namespace dnlsat {

// One endpoint of an interval: -inf, +inf, or a real algebraic value.
struct Endpoint {
    enum Kind { NegInf, Value, PosInf } kind = NegInf;
    RealAlgebraic val;

    static Endpoint neg_inf() { return {NegInf, RealAlgebraic()}; }
    static Endpoint pos_inf() { return {PosInf, RealAlgebraic()}; }
    static Endpoint at(const RealAlgebraic& v) { return {Value, v}; }
};

int cmp_endpoint(const Endpoint& a, const Endpoint& b);

// Nonempty interval: lo <= hi, infinite ends always open, and a point
// interval (lo == hi) has both ends closed.
struct Ivl {
    Endpoint lo, hi;
    bool lo_closed = false, hi_closed = false;
};

// Finite union of disjoint, non-adjacent intervals, kept sorted. Supports
// the exact set algebra the solver needs for feasibility reasoning.
class IntervalSet {
public:
    static IntervalSet empty() { return IntervalSet(); }
    static IntervalSet all();
    static IntervalSet point(const RealAlgebraic& v);
    static IntervalSet interval(Endpoint lo, bool lo_closed, Endpoint hi, bool hi_closed);
    static IntervalSet from_parts(std::vector<Ivl> parts); // normalizes

    bool is_empty() const { return parts_.empty(); }
    bool is_all() const;
    const std::vector<Ivl>& parts() const { return parts_; }

    static IntervalSet union_of(const IntervalSet& a, const IntervalSet& b);
    static IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
    static IntervalSet complement(const IntervalSet& a);

    bool contains(const RealAlgebraic& v) const;

    // Deterministic witness from a nonempty set: prefers the integer of
    // least absolute value (nonnegative on ties); otherwise the simplest
    // dyadic in the first rational-endpoint gap; point intervals yield
    // their value; algebraic endpoints are refined until a dyadic works.
    RealAlgebraic pick_sample() const;

    std::string to_string() const;

private:
    std::vector<Ivl> parts_;
};

} // namespace dnlsat
