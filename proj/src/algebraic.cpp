#include "dnlsat/algebraic.hpp"

#include "dnlsat/rat_interval.hpp"
#include "dnlsat/error.hpp"

#include <cassert>
#include <sstream>

namespace dnlsat {

RealAlgebraic RealAlgebraic::from_region(const std::shared_ptr<const UPolyZ>& def,
                                         const RootRegion& region) {
    if (region.exact) return RealAlgebraic(region.value);
    RealAlgebraic r;
    r.is_rat_ = false;
    r.def_ = def;
    // The isolator splits off a zero root before subdividing, so interval
    // regions have nonzero endpoints only for the quotient; keep the quotient
    // as the definition or an endpoint at 0 would stall refinement.
    if (!def->empty() && sign_of((*def)[0]) == 0) {
        size_t k = 0;
        while (k < def->size() && sign_of((*def)[k]) == 0) ++k;
        r.def_ = std::make_shared<const UPolyZ>(def->begin() + k, def->end());
    }
    r.lo_ = region.lo;
    r.hi_ = region.hi;
    return r;
}

void RealAlgebraic::refine() const {
    if (is_rat_) return;
    Rational mid = (lo_ + hi_) / 2;
    int sm = upz_sign_at(*def_, mid);
    // The interval isolates an irrational root, so no interior rational,
    // in particular not mid, can be a root.
    assert(sm != 0);
    if (sm == upz_sign_at(*def_, lo_))
        lo_ = mid;
    else
        hi_ = mid;
}

void RealAlgebraic::refine_below(const Rational& width) const {
    if (is_rat_) return;
    while (hi_ - lo_ >= width) refine();
}

int RealAlgebraic::sign() const {
    if (is_rat_) return sign_of(rat_);
    for (;;) {
        if (sign_of(lo_) >= 0) return 1;
        if (sign_of(hi_) <= 0) return -1;
        refine();
    }
}

Integer RealAlgebraic::floor() const {
    if (is_rat_) return floor_int(rat_);
    while (floor_int(lo_) != floor_int(hi_)) refine();
    return floor_int(lo_);
}

Integer RealAlgebraic::ceiling() const {
    if (is_rat_) return ceil_int(rat_);
    while (ceil_int(lo_) != ceil_int(hi_)) refine();
    return ceil_int(lo_);
}

int RealAlgebraic::compare(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.is_rat_ && b.is_rat_) {
        int c = mpq_cmp(a.rat_.get_mpq_t(), b.rat_.get_mpq_t());
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    if (a.is_rat_) return -compare(b, a);
    if (b.is_rat_) {
        // a irrational: never equal to the rational b.
        const Rational& q = b.rat_;
        for (;;) {
            if (q <= a.lo_) return 1;
            if (q >= a.hi_) return -1;
            a.refine();
        }
    }
    // Both irrational.
    for (int round = 0;; ++round) {
        if (a.hi_ <= b.lo_) return -1;
        if (b.hi_ <= a.lo_) return 1;
        if (round == 0) {
            // Overlapping intervals: decide equality via the shared roots
            // of the defining polynomials.
            UPolyQ g = upq_gcd(upq_of(*a.def_), upq_of(*b.def_));
            if (updeg_q(g) >= 1) {
                Rational lo = std::max(a.lo_, b.lo_);
                Rational hi = std::min(a.hi_, b.hi_);
                // Isolating-interval endpoints are never roots of their
                // defining polynomials, hence not of g either.
                if (lo < hi && upq_sturm_count(g, lo, hi) > 0) return 0;
            }
        }
        a.refine();
        b.refine();
    }
}

RealAlgebraic RealAlgebraic::neg() const {
    if (is_rat_) return RealAlgebraic(-rat_);
    UPolyZ d = *def_;
    for (size_t i = 1; i < d.size(); i += 2) d[i] = -d[i];
    if (sign_of(d.back()) < 0)
        for (auto& c : d) c = -c;
    RealAlgebraic r;
    r.is_rat_ = false;
    r.def_ = std::make_shared<UPolyZ>(std::move(d));
    r.lo_ = -hi_;
    r.hi_ = -lo_;
    return r;
}

namespace {

// def(x - c) for rational c, integer-primitive. Keeps square-freeness.
UPolyZ shift_def(const UPolyZ& def, const Rational& c) {
    UPolyQ q = upq_of(def);
    size_t n = q.size();
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j-- > i;)
            q[j] += (-c) * q[j + 1];
    return upz_primitive(q);
}

// def(x / c) for rational c != 0, integer-primitive.
UPolyZ scale_def(const UPolyZ& def, const Rational& c) {
    UPolyQ q = upq_of(def);
    Rational inv = Rational(1) / c, p(1);
    for (size_t i = 1; i < q.size(); ++i) {
        p *= inv;
        q[i] *= p;
    }
    return upz_primitive(q);
}

// Selects the candidate root equal to the value bracketed by `bracket`,
// where the true value is known to be among `cands` (roots of one
// polynomial). Refines a, b (through `recompute`) until unique.
RealAlgebraic select_candidate(std::vector<RealAlgebraic> cands,
                               const std::function<RatInterval()>& bracket,
                               const std::function<void()>& refine_inputs) {
    for (;;) {
        RatInterval w = bracket();
        std::vector<RealAlgebraic> keep;
        for (auto& c : cands) {
            if (c.is_rational()) {
                const Rational& q = c.rational_value();
                if (w.lo <= q && q <= w.hi) keep.push_back(c);
            } else {
                if (!(c.hi() < w.lo || c.lo() > w.hi)) keep.push_back(c);
            }
        }
        if (keep.size() == 1) return keep[0];
        if (keep.empty()) throw InternalError("algebraic arithmetic: no candidate root");
        cands = std::move(keep);
        for (auto& c : cands) c.refine();
        refine_inputs();
    }
}

std::shared_ptr<const UPolyZ> make_def(UPolyZ d) {
    return std::make_shared<const UPolyZ>(std::move(d));
}

// Drop a zero root the defining polynomial may carry besides the value it
// defines; the represented value itself is never zero when this is used.
UPolyZ strip_zero_root(const UPolyZ& d) {
    size_t k = 0;
    while (k < d.size() && sign_of(d[k]) == 0) ++k;
    return UPolyZ(d.begin() + k, d.end());
}

} // namespace

std::vector<RealAlgebraic> real_roots(const UPolyZ& p) {
    std::vector<RealAlgebraic> out;
    UPolyZ q = p;
    upz_trim(q);
    if (updeg_z(q) < 1) return out;
    auto def = make_def(upz_square_free(q));
    for (auto& region : upz_isolate(*def))
        out.push_back(RealAlgebraic::from_region(def, region));
    return out;
}

RealAlgebraic RealAlgebraic::add(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.is_rat_ && b.is_rat_) return RealAlgebraic(a.rat_ + b.rat_);
    if (a.is_rat_) return add(b, a);
    if (b.is_rat_) {
        if (sign_of(b.rat_) == 0) return a;
        RealAlgebraic r;
        r.is_rat_ = false;
        r.def_ = make_def(shift_def(*a.def_, b.rat_));
        r.lo_ = a.lo_ + b.rat_;
        r.hi_ = a.hi_ + b.rat_;
        return r;
    }
    // Both irrational: eliminate y from def_a(y), def_b(t - y).
    const Var T = 0, Y = 1;
    Polynomial da = upoly_to(*a.def_, Y);
    Polynomial db_shift = upoly_to(*b.def_, T).substitute(T, Polynomial::variable(T) -
                                                                 Polynomial::variable(Y));
    Polynomial res = resultant(da, db_shift, Y);
    std::vector<RealAlgebraic> cands = real_roots(upz_primitive(upoly_from(res, T)));
    if (cands.empty()) throw InternalError("algebraic add: empty candidate set");
    auto bracket = [&]() { return RatInterval{a.lo() + b.lo(), a.hi() + b.hi()}; };
    auto refine_inputs = [&]() {
        a.refine();
        b.refine();
    };
    return select_candidate(std::move(cands), bracket, refine_inputs);
}

RealAlgebraic RealAlgebraic::mul(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.is_rat_ && b.is_rat_) return RealAlgebraic(a.rat_ * b.rat_);
    if (a.is_rat_) return mul(b, a);
    if (b.is_rat_) {
        if (sign_of(b.rat_) == 0) return RealAlgebraic(Rational(0));
        RealAlgebraic r;
        r.is_rat_ = false;
        r.def_ = make_def(scale_def(*a.def_, b.rat_));
        Rational l = a.lo_ * b.rat_, h = a.hi_ * b.rat_;
        if (l > h) std::swap(l, h);
        r.lo_ = l;
        r.hi_ = h;
        return r;
    }
    // Both irrational: eliminate y from def_a(y), y^db * def_b(t / y).
    // Incidental zero roots of either definition would put a common factor
    // y into the pair, collapsing the resultant; neither value is 0 here.
    const Var T = 0, Y = 1;
    UPolyZ daz = strip_zero_root(*a.def_);
    Polynomial da = upoly_to(daz, Y);
    const UPolyZ dbz = strip_zero_root(*b.def_);
    size_t db = dbz.size() - 1;
    Polynomial hom;
    for (size_t i = 0; i < dbz.size(); ++i) {
        Monomial m = Monomial::variable(T, static_cast<uint32_t>(i))
                         .mul(Monomial::variable(Y, static_cast<uint32_t>(db - i)));
        hom += Polynomial::term(Rational(dbz[i]), m);
    }
    Polynomial res = resultant(da, hom, Y);
    std::vector<RealAlgebraic> cands = real_roots(upz_primitive(upoly_from(res, T)));
    if (cands.empty()) throw InternalError("algebraic mul: empty candidate set");
    auto bracket = [&]() {
        return rivl_mul(RatInterval{a.lo(), a.hi()}, RatInterval{b.lo(), b.hi()});
    };
    auto refine_inputs = [&]() {
        a.refine();
        b.refine();
    };
    return select_candidate(std::move(cands), bracket, refine_inputs);
}

unsigned RealAlgebraic::root_index() const {
    if (is_rat_) return 1;
    auto regions = upz_isolate(*def_);
    unsigned idx = 0;
    for (auto& region : regions) {
        ++idx;
        RealAlgebraic r = from_region(def_, region);
        if (compare(*this, r) == 0) return idx;
    }
    throw InternalError("root_index: value not among the roots of its definition");
}

std::string RealAlgebraic::to_string() const {
    std::ostringstream os;
    if (is_rat_) {
        os << rat_;
    } else {
        os << "alg(";
        for (size_t i = def_->size(); i-- > 0;) {
            if ((*def_)[i] == 0) continue;
            os << (*def_)[i] << "*x^" << i;
            if (i) os << " + ";
        }
        os << " in (" << lo_ << ", " << hi_ << "))";
    }
    return os.str();
}

} // namespace dnlsat
