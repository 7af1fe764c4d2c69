#include "dnlsat/interval_set.hpp"
#include "dnlsat/error.hpp"

#include <algorithm>
#include <sstream>

namespace dnlsat {

int cmp_endpoint(const Endpoint& a, const Endpoint& b) {
    if (a.kind != b.kind) {
        auto rank = [](Endpoint::Kind k) { return k == Endpoint::NegInf ? 0 : (k == Endpoint::Value ? 1 : 2); };
        return rank(a.kind) < rank(b.kind) ? -1 : 1;
    }
    if (a.kind != Endpoint::Value) return 0;
    return RealAlgebraic::compare(a.val, b.val);
}

IntervalSet IntervalSet::all() {
    IntervalSet s;
    s.parts_.push_back({Endpoint::neg_inf(), Endpoint::pos_inf(), false, false});
    return s;
}

IntervalSet IntervalSet::point(const RealAlgebraic& v) {
    IntervalSet s;
    s.parts_.push_back({Endpoint::at(v), Endpoint::at(v), true, true});
    return s;
}

IntervalSet IntervalSet::interval(Endpoint lo, bool lo_closed, Endpoint hi, bool hi_closed) {
    if (lo.kind == Endpoint::NegInf) lo_closed = false;
    if (hi.kind == Endpoint::PosInf) hi_closed = false;
    int c = cmp_endpoint(lo, hi);
    if (c > 0 || (c == 0 && !(lo_closed && hi_closed))) return empty();
    IntervalSet s;
    s.parts_.push_back({lo, hi, lo_closed, hi_closed});
    return s;
}

bool IntervalSet::is_all() const {
    return parts_.size() == 1 && parts_[0].lo.kind == Endpoint::NegInf &&
           parts_[0].hi.kind == Endpoint::PosInf;
}

IntervalSet IntervalSet::from_parts(std::vector<Ivl> parts) {
    std::sort(parts.begin(), parts.end(), [](const Ivl& a, const Ivl& b) {
        int c = cmp_endpoint(a.lo, b.lo);
        if (c != 0) return c < 0;
        return a.lo_closed && !b.lo_closed;
    });
    IntervalSet out;
    for (auto& p : parts) {
        if (out.parts_.empty()) {
            out.parts_.push_back(p);
            continue;
        }
        Ivl& last = out.parts_.back();
        int c = cmp_endpoint(p.lo, last.hi);
        bool joins = c < 0 || (c == 0 && (p.lo_closed || last.hi_closed));
        if (!joins) {
            out.parts_.push_back(p);
            continue;
        }
        int ch = cmp_endpoint(p.hi, last.hi);
        if (ch > 0 || (ch == 0 && p.hi_closed && !last.hi_closed)) {
            last.hi = p.hi;
            last.hi_closed = p.hi_closed;
        }
    }
    return out;
}

IntervalSet IntervalSet::union_of(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Ivl> parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    return from_parts(std::move(parts));
}

IntervalSet IntervalSet::complement(const IntervalSet& a) {
    if (a.parts_.empty()) return all();
    IntervalSet out;
    Endpoint cur = Endpoint::neg_inf();
    bool cur_closed = false;
    for (auto& p : a.parts_) {
        if (p.lo.kind != Endpoint::NegInf)
            out.parts_.push_back({cur, p.lo, cur_closed, !p.lo_closed});
        if (p.hi.kind == Endpoint::PosInf) return out;
        cur = p.hi;
        cur_closed = !p.hi_closed;
    }
    out.parts_.push_back({cur, Endpoint::pos_inf(), cur_closed, false});
    return out;
}

IntervalSet IntervalSet::intersect(const IntervalSet& a, const IntervalSet& b) {
    return complement(union_of(complement(a), complement(b)));
}

bool IntervalSet::contains(const RealAlgebraic& v) const {
    Endpoint e = Endpoint::at(v);
    for (auto& p : parts_) {
        int cl = cmp_endpoint(e, p.lo);
        if (cl < 0 || (cl == 0 && !p.lo_closed)) continue;
        int ch = cmp_endpoint(e, p.hi);
        if (ch < 0 || (ch == 0 && p.hi_closed)) return true;
    }
    return false;
}

namespace {

// Least-|k| integer inside the interval, if any.
std::optional<Integer> best_integer_in(const Ivl& p) {
    auto inside = [&p](const Integer& k) {
        Endpoint e = Endpoint::at(RealAlgebraic(Rational(k)));
        int cl = cmp_endpoint(e, p.lo);
        if (cl < 0 || (cl == 0 && !p.lo_closed)) return false;
        int ch = cmp_endpoint(e, p.hi);
        return ch < 0 || (ch == 0 && p.hi_closed);
    };
    if (inside(Integer(0))) return Integer(0);
    // Smallest integer above lo.
    std::optional<Integer> up;
    if (p.lo.kind == Endpoint::NegInf) {
        // Unbounded below and 0 not inside: the interval lies below 0.
        up = std::nullopt;
    } else {
        Integer k = p.lo.val.ceiling();
        if (!inside(k)) k += 1;
        if (inside(k)) up = k;
    }
    std::optional<Integer> down;
    if (p.hi.kind == Endpoint::PosInf) {
        down = std::nullopt;
    } else {
        Integer k = p.hi.val.floor();
        if (!inside(k)) k -= 1;
        if (inside(k)) down = k;
    }
    if (up && sign_of(*up) < 0) up = std::nullopt;       // above lo but negative: 0 was outside
    if (down && sign_of(*down) > 0) down = std::nullopt; // symmetric guard
    if (p.hi.kind == Endpoint::PosInf && p.lo.kind != Endpoint::NegInf) return up;
    if (p.lo.kind == Endpoint::NegInf && p.hi.kind != Endpoint::PosInf) return down;
    // Bounded: pick the candidate closer to zero; nonnegative wins ties.
    if (up && down) {
        Integer au = *up, ad = -*down;
        if (au <= ad) return up;
        return down;
    }
    if (up) return up;
    return down;
}

} // namespace

RealAlgebraic IntervalSet::pick_sample() const {
    if (parts_.empty()) throw DomainError("pick_sample: empty set");

    // Integers first: least absolute value, nonnegative preferred on ties.
    std::optional<Integer> best;
    for (auto& p : parts_) {
        auto k = best_integer_in(p);
        if (!k) continue;
        if (!best) {
            best = k;
            continue;
        }
        Integer ab = abs(*best), ak = abs(*k);
        if (ak < ab || (ak == ab && sign_of(*k) >= 0 && sign_of(*best) < 0)) best = k;
    }
    if (best) return RealAlgebraic(Rational(*best));

    // First bounded gap with two rational endpoints: simplest dyadic within.
    for (auto& p : parts_) {
        if (p.lo.kind != Endpoint::Value || p.hi.kind != Endpoint::Value) continue;
        if (!p.lo.val.is_rational() || !p.hi.val.is_rational()) continue;
        if (RealAlgebraic::compare(p.lo.val, p.hi.val) == 0) continue;
        return RealAlgebraic(dyadic_between(p.lo.val.rational_value(), p.hi.val.rational_value()));
    }

    // Fall back to the first interval: a point yields its value, otherwise
    // refine the algebraic ends until a rational window opens up.
    const Ivl& p = parts_.front();
    if (cmp_endpoint(p.lo, p.hi) == 0) return p.lo.val;
    // Both ends are finite here: an unbounded interval contains an integer.
    for (;;) {
        Rational wl = p.lo.val.hi();
        Rational wh = p.hi.val.lo();
        if (wl < wh) return RealAlgebraic(dyadic_between(wl, wh));
        p.lo.val.refine();
        p.hi.val.refine();
    }
}

std::string IntervalSet::to_string() const {
    if (parts_.empty()) return "{}";
    std::ostringstream os;
    bool first = true;
    for (auto& p : parts_) {
        if (!first) os << " u ";
        first = false;
        if (cmp_endpoint(p.lo, p.hi) == 0) {
            os << "{" << p.lo.val.to_string() << "}";
            continue;
        }
        os << (p.lo_closed ? "[" : "(");
        os << (p.lo.kind == Endpoint::NegInf ? "-inf" : p.lo.val.to_string());
        os << ", ";
        os << (p.hi.kind == Endpoint::PosInf ? "+inf" : p.hi.val.to_string());
        os << (p.hi_closed ? "]" : ")");
    }
    return os.str();
}

} // namespace dnlsat
