#include "dnlsat/upoly.hpp"
#include "dnlsat/error.hpp"

#include <algorithm>
#include <cassert>

namespace dnlsat {

void upq_trim(UPolyQ& p) {
    while (!p.empty() && sign_of(p.back()) == 0) p.pop_back();
}

void upz_trim(UPolyZ& p) {
    while (!p.empty() && sign_of(p.back()) == 0) p.pop_back();
}

int updeg_q(const UPolyQ& p) { return static_cast<int>(p.size()) - 1; }
int updeg_z(const UPolyZ& p) { return static_cast<int>(p.size()) - 1; }

UPolyQ upoly_from(const Polynomial& p, Var v) {
    UPolyQ out(p.degree_in(v) + 1, Rational(0));
    for (auto& [m, c] : p.terms()) {
        assert(m.without(v).empty());
        out[m.degree_in(v)] += c;
    }
    upq_trim(out);
    return out;
}

Polynomial upoly_to(const UPolyQ& p, Var v) {
    Polynomial out;
    for (size_t i = 0; i < p.size(); ++i)
        out += Polynomial::term(p[i], Monomial::variable(v, static_cast<uint32_t>(i)));
    return out;
}

Polynomial upoly_to(const UPolyZ& p, Var v) {
    Polynomial out;
    for (size_t i = 0; i < p.size(); ++i)
        out += Polynomial::term(Rational(p[i]), Monomial::variable(v, static_cast<uint32_t>(i)));
    return out;
}

UPolyQ upq_of(const UPolyZ& p) {
    UPolyQ out;
    out.reserve(p.size());
    for (auto& c : p) out.push_back(Rational(c));
    return out;
}

UPolyZ upz_primitive(const UPolyQ& q) {
    UPolyZ out;
    if (q.empty()) return out;
    Integer l(1);
    for (auto& c : q) l = lcm_int(l, c.get_den());
    Integer g(0);
    std::vector<Integer> scaled;
    scaled.reserve(q.size());
    for (auto& c : q) {
        Integer z = c.get_num() * (l / c.get_den());
        g = gcd_int(g, z);
        scaled.push_back(z);
    }
    if (sign_of(g) == 0) g = 1;
    for (auto& z : scaled) out.push_back(z / g);
    upz_trim(out);
    return out;
}

Rational upq_eval(const UPolyQ& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

int upz_sign_at(const UPolyZ& p, const Rational& x) {
    // Homogenized integer evaluation: sum a_i n^i d^(deg-i).
    if (p.empty()) return 0;
    const Integer& n = x.get_num();
    const Integer& d = x.get_den();
    Integer acc(0), npow(1);
    size_t deg = p.size() - 1;
    std::vector<Integer> dpow(deg + 1);
    dpow[0] = 1;
    for (size_t i = 1; i <= deg; ++i) dpow[i] = dpow[i - 1] * d;
    for (size_t i = 0; i <= deg; ++i) {
        acc += p[i] * npow * dpow[deg - i];
        npow *= n;
    }
    return sign_of(acc);
}

UPolyZ upz_derivative(const UPolyZ& p) {
    UPolyZ out;
    for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
    upz_trim(out);
    return out;
}

UPolyQ upq_derivative(const UPolyQ& p) {
    UPolyQ out;
    for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
    upq_trim(out);
    return out;
}

UPolyQ upq_rem(const UPolyQ& a, const UPolyQ& b) {
    assert(!b.empty());
    UPolyQ r = a;
    upq_trim(r);
    while (static_cast<int>(r.size()) >= static_cast<int>(b.size()) && !r.empty()) {
        Rational f = r.back() / b.back();
        size_t shift = r.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        upq_trim(r); // leading term cancels exactly, so the degree drops
    }
    return r;
}

UPolyQ upq_gcd(const UPolyQ& a, const UPolyQ& b) {
    UPolyQ x = a, y = b;
    upq_trim(x);
    upq_trim(y);
    while (!y.empty()) {
        UPolyQ r = upq_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.empty()) {
        Rational lc = x.back();
        for (auto& c : x) c /= lc;
    }
    return x;
}

namespace {

bool upz_is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint32_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    for (uint64_t a : {2ull, 7ull, 61ull}) { // deterministic below 2^32
        uint64_t x = 1, b = a % n, e = d;
        while (e) {
            if (e & 1) x = x * b % n;
            b = b * b % n;
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t upz_powmod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::vector<uint64_t> upz_mod_image(const UPolyZ& p, uint32_t m) {
    std::vector<uint64_t> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        uint64_t r = mpz_fdiv_ui(p[i].get_mpz_t(), m);
        out[i] = r;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Monic gcd of dense images mod p.
std::vector<uint64_t> upz_gcd_mod(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
    while (!b.empty()) {
        uint64_t inv = upz_powmod(b.back(), p - 2, p);
        while (a.size() >= b.size() && !a.empty()) {
            uint64_t f = a.back() * inv % p;
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (a[shift + i] + p - f * b[i] % p) % p;
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        uint64_t inv = upz_powmod(a.back(), p - 2, p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

// Integer synthetic division; d must be primitive. Quotient goes to *quo
// when it divides exactly.
bool upz_divides_int(const UPolyZ& d, const UPolyZ& n, UPolyZ* quo) {
    if (n.empty()) {
        if (quo) quo->clear();
        return true;
    }
    if (d.size() > n.size()) return false;
    UPolyZ r = n, q(n.size() - d.size() + 1);
    for (size_t k = n.size() - d.size() + 1; k-- > 0;) {
        Integer& lead = r[k + d.size() - 1];
        if (sign_of(lead) != 0) {
            if (!mpz_divisible_p(lead.get_mpz_t(), d.back().get_mpz_t())) return false;
            Integer f;
            mpz_divexact(f.get_mpz_t(), lead.get_mpz_t(), d.back().get_mpz_t());
            for (size_t i = 0; i < d.size(); ++i)
                mpz_submul(r[k + i].get_mpz_t(), f.get_mpz_t(), d[i].get_mpz_t());
            q[k] = std::move(f);
        }
    }
    for (const auto& c : r)
        if (sign_of(c) != 0) return false;
    if (quo) *quo = std::move(q);
    return true;
}

// Gcd of nonzero integer polynomials by Chinese remainaindering 31-bit prime
// images; result is primitive with positive leading coefficient. Verified by
// trial division, so a hit is exact; gives up (empty) after too many primes.
UPolyZ upz_gcd_int(const UPolyZ& a, const UPolyZ& b) {
    UPolyZ P = upz_primitive(upq_of(a)), Q = upz_primitive(upq_of(b));
    if (sign_of(P.back()) < 0)
        for (auto& c : P) c = -c;
    if (sign_of(Q.back()) < 0)
        for (auto& c : Q) c = -c;
    Integer glc;
    mpz_gcd(glc.get_mpz_t(), P.back().get_mpz_t(), Q.back().get_mpz_t());
    uint32_t p = 2147483647u;
    Integer M(0), half;
    UPolyZ cand, prev;
    std::vector<Integer> crt;
    size_t deg_img = SIZE_MAX;
    for (int rounds = 0; rounds < 1000; ++rounds, --p) {
        while (!upz_is_prime(p)) --p;
        if (mpz_fdiv_ui(P.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(Q.back().get_mpz_t(), p) == 0)
            continue;
        auto g = upz_gcd_mod(upz_mod_image(P, p), upz_mod_image(Q, p), p);
        if (g.size() == 1) return UPolyZ{Integer(1)}; // images never drop degree
        if (g.size() > deg_img) continue; // unlucky prime
        uint64_t scale = mpz_fdiv_ui(glc.get_mpz_t(), p);
        for (auto& c : g) c = c * scale % p;
        if (g.size() < deg_img) {
            deg_img = g.size();
            crt.assign(g.begin(), g.end());
            M = p;
            prev.clear();
        } else {
            // CRT merge coefficientwise
            Integer pz(static_cast<unsigned long>(p)), newM = M * pz;
            Integer Minv;
            { // M^{-1} mod p
                uint64_t mr = mpz_fdiv_ui(M.get_mpz_t(), p);
                Minv = Integer(static_cast<unsigned long>(upz_powmod(mr, p - 2, p)));
            }
            for (size_t i = 0; i < crt.size(); ++i) {
                uint64_t ri = mpz_fdiv_ui(crt[i].get_mpz_t(), p);
                uint64_t ti = (g[i] + p - ri) % p;
                Integer add = Integer(static_cast<unsigned long>(ti)) * Minv % pz;
                crt[i] += M * add;
            }
            M = newM;
        }
        half = M / 2;
        cand.assign(crt.size(), Integer(0));
        for (size_t i = 0; i < crt.size(); ++i) {
            cand[i] = crt[i] % M;
            if (sign_of(cand[i]) < 0) cand[i] += M;
            if (cand[i] > half) cand[i] -= M;
        }
        if (cand != prev) {
            prev = cand;
            continue;
        }
        UPolyZ c2 = upz_primitive(upq_of(cand));
        if (sign_of(c2.back()) < 0)
            for (auto& c : c2) c = -c;
        if (upz_divides_int(c2, P, nullptr) && upz_divides_int(c2, Q, nullptr)) return c2;
    }
    return {};
}

} // namespace

UPolyZ upz_square_free(const UPolyZ& p) {
    assert(updeg_z(p) >= 1);
    UPolyZ a = upz_primitive(upq_of(p));
    if (sign_of(a.back()) < 0)
        for (auto& c : a) c = -c;
    UPolyZ g = upz_gcd_int(a, upz_derivative(a));
    if (g.empty()) {
        // Modular route gave up; fall back to the rational remainder chain.
        UPolyQ gq = upq_gcd(upq_of(a), upq_derivative(upq_of(a)));
        g = upz_primitive(gq);
        if (sign_of(g.back()) < 0)
            for (auto& c : g) c = -c;
    }
    if (updeg_z(g) < 1) return a;
    UPolyZ out;
    bool ok = upz_divides_int(g, a, &out);
    assert(ok);
    (void)ok;
    out = upz_primitive(upq_of(out));
    if (sign_of(out.back()) < 0)
        for (auto& c : out) c = -c;
    return out;
}

Rational upz_root_bound(const UPolyZ& p) {
    assert(updeg_z(p) >= 1);
    Rational mx(0);
    Rational lead = abs(Rational(p.back()));
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Rational a = abs(Rational(p[i])) / lead;
        if (a > mx) mx = a;
    }
    return Rational(ceil_int(mx + 1));
}

// p(lo + (hi-lo)x), then x -> 1/(1+x) with clearing: reverse + shift by 1.
int upz_descartes(const UPolyZ& p, const Rational& lo, const Rational& hi) {
    size_t n = p.size();
    assert(n >= 1);
    UPolyQ t(n);
    for (size_t i = 0; i < n; ++i) t[i] = Rational(p[i]);
    // Taylor shift by lo: t(x) := p(x + lo)
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j-- > i;)
            t[j] += lo * t[j + 1];
    // Scale: t(x) := t((hi-lo) x)
    Rational w = hi - lo, wp(1);
    for (size_t i = 1; i < n; ++i) {
        wp *= w;
        t[i] *= wp;
    }
    // Reverse: t(x) := x^d t(1/x)
    std::reverse(t.begin(), t.end());
    // Shift by 1: t(x) := t(x + 1)
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j-- > i;)
            t[j] += t[j + 1];
    int vars = 0, last = 0;
    for (auto& c : t) {
        int s = sign_of(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++vars;
        last = s;
    }
    return vars;
}

namespace {

// Enumerate positive divisors; only called for |n| <= 2^20.
std::vector<Integer> small_divisors(Integer n) {
    if (sign_of(n) < 0) n = -n;
    std::vector<Integer> out;
    for (Integer d(1); d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

// Bisect an isolating interval with a sign change until width < target.
// Returns true (with `value` set) if an exact rational root surfaced.
bool refine_to(const UPolyZ& p, Rational& lo, Rational& hi, const Rational& target,
               Rational& value) {
    int slo = upz_sign_at(p, lo);
    while (hi - lo >= target) {
        Rational mid = (lo + hi) / 2;
        int sm = upz_sign_at(p, mid);
        if (sm == 0) {
            value = mid;
            return true;
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return false;
}

// Detects whether the single root in (lo, hi) is rational; shrinks the
// interval as a side effect.
bool detect_rational(const UPolyZ& p, Rational& lo, Rational& hi, Rational& value) {
    Integer ad = p.back();
    if (sign_of(ad) < 0) ad = -ad;
    if (ad <= Integer(1) << 20) {
        Rational target = Rational(1) / Rational(ad);
        if (refine_to(p, lo, hi, target, value)) return true;
        for (const Integer& q : small_divisors(ad)) {
            Rational cand = Rational(floor_int(lo * Rational(q)) + 1, q);
            cand.canonicalize();
            if (lo < cand && cand < hi && upz_sign_at(p, cand) == 0) {
                value = cand;
                return true;
            }
        }
        return false;
    }
    // Large leading coefficient: narrow below 1/ad^2; at most one rational
    // with denominator <= ad fits, and simplest_between finds it if present.
    Rational target = Rational(1) / Rational(ad * ad);
    if (refine_to(p, lo, hi, target, value)) return true;
    Rational cand = simplest_between(lo, hi);
    if (upz_sign_at(p, cand) == 0) {
        value = cand;
        return true;
    }
    return false;
}

int upz_variations(const UPolyZ& p) {
    int vars = 0, last = 0;
    for (const auto& c : p) {
        int s = sign_of(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++vars;
        last = s;
    }
    return vars;
}

// t(x) := t(x + 1), integer Pascal accumulation.
void upz_shift1(UPolyZ& t) {
    size_t n = t.size();
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j-- > i;)
            t[j] += t[j + 1];
}

// Descartes bound for the roots of q in (0, 1): variations of
// (1+x)^d q(1/(1+x)). Roots at 0 or 1 are not counted.
int upz_descartes01(const UPolyZ& q) {
    UPolyZ t(q.rbegin(), q.rend());
    upz_shift1(t);
    return upz_variations(t);
}

// Smallest e such that 2^e strictly bounds every root magnitude
// (Fujiwara: |z| <= 2 max_i (|a_{d-i}|/|a_d|)^{1/i}). Far tighter than the
// Cauchy quotient bound when the trailing coefficients dwarf the leading one.
unsigned upz_bound_exp(const UPolyZ& p) {
    size_t d = p.size() - 1;
    long db = static_cast<long>(mpz_sizeinbase(p[d].get_mpz_t(), 2));
    long e = 1;
    for (size_t i = 1; i <= d; ++i) {
        const Integer& c = p[d - i];
        if (sign_of(c) == 0) continue;
        long delta = static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)) - db + 1;
        if (delta <= 0) continue;
        long t = (delta + static_cast<long>(i) - 1) / static_cast<long>(i) + 1;
        if (t > e) e = t;
    }
    return static_cast<unsigned>(e);
}

} // namespace

std::vector<RootRegion> upz_isolate(const UPolyZ& poly) {
    std::vector<RootRegion> out;
    UPolyZ p = poly;
    upz_trim(p);
    if (updeg_z(p) < 1) return out;

    if (sign_of(p[0]) == 0) {
        // Square-free input: the zero root is simple.
        out.push_back({true, Rational(0), Rational(0), Rational(0)});
        UPolyZ q(p.begin() + 1, p.end());
        p = std::move(q);
        if (updeg_z(p) < 1) return out;
    }
    if (updeg_z(p) == 1) {
        Rational r(-p[0], p[1]);
        r.canonicalize();
        out.push_back({true, r, r, r});
        std::sort(out.begin(), out.end(),
                  [](const RootRegion& a, const RootRegion& b) { return a.value < b.value; });
        return out;
    }

    // Vincent-Collins-Akritas subdivision in integer arithmetic. A node holds
    // q with the roots of p in (lo, hi) mapped onto the roots of q in (0, 1);
    // every transformation below is an integer Taylor shift or a power-of-two
    // scale, so coefficients stay exact and endpoint rationals stay dyadic.
    unsigned e = upz_bound_exp(p);
    Rational B = Rational(Integer(1) << e);
    size_t d = p.size() - 1;
    UPolyZ q0(p.size());
    for (size_t i = 0; i <= d; ++i)
        q0[i] = p[i] << (e * i); // p(B x), roots into (-1, 1)
    for (size_t i = 0; i + 1 < q0.size(); ++i) // shift by -1
        for (size_t j = q0.size() - 1; j-- > i;)
            q0[j] -= q0[j + 1];
    for (size_t i = 0; i <= d; ++i)
        q0[i] <<= i; // scale by 2: p(B(2t - 1)), roots into (0, 1)

    struct Node {
        UPolyZ q;
        Rational lo, hi;
    };
    std::vector<Node> work;
    work.push_back({std::move(q0), -B, B});
    while (!work.empty()) {
        Node nd = std::move(work.back());
        work.pop_back();
        if (upz_variations(nd.q) == 0) continue; // no positive roots at all
        int n = upz_descartes01(nd.q);
        if (n == 0) continue;
        Integer at1(0);
        for (const auto& c : nd.q) at1 += c;
        if (n == 1 && sign_of(nd.q[0]) != 0 && sign_of(at1) != 0) {
            RootRegion r;
            r.lo = nd.lo;
            r.hi = nd.hi;
            Rational val;
            if (detect_rational(p, r.lo, r.hi, val)) {
                out.push_back({true, val, val, val});
            } else {
                r.exact = false;
                out.push_back(r);
            }
            continue;
        }
        size_t dq = nd.q.size() - 1;
        UPolyZ ql(nd.q.size());
        for (size_t i = 0; i <= dq; ++i)
            ql[i] = nd.q[i] << (dq - i); // 2^d q(t/2)
        UPolyZ qr = ql;
        upz_shift1(qr); // 2^d q((t+1)/2)
        Rational mid = (nd.lo + nd.hi) / 2;
        if (sign_of(qr[0]) == 0)
            out.push_back({true, mid, mid, mid});
        // A root at mid stays an endpoint root of both children; the interval
        // count ignores endpoint roots, so those nodes still die off, and the
        // q(0), q(1) guards keep emitted regions off every root of p.
        work.push_back({std::move(ql), nd.lo, mid});
        work.push_back({std::move(qr), mid, nd.hi});
    }
    std::sort(out.begin(), out.end(), [](const RootRegion& a, const RootRegion& b) {
        const Rational& ka = a.exact ? a.value : a.lo;
        const Rational& kb = b.exact ? b.value : b.lo;
        if (ka != kb) return ka < kb;
        return a.exact && !b.exact; // exact root sorts before an interval starting there
    });
    return out;
}

int upq_sturm_count(const UPolyQ& p, const Rational& a, const Rational& b) {
    assert(a < b);
    std::vector<UPolyQ> chain;
    UPolyQ s0 = p;
    upq_trim(s0);
    assert(!s0.empty());
    chain.push_back(s0);
    UPolyQ s1 = upq_derivative(s0);
    while (!s1.empty()) {
        chain.push_back(s1);
        UPolyQ r = upq_rem(chain[chain.size() - 2], s1);
        for (auto& c : r) c = -c;
        s1 = std::move(r);
    }
    auto variations = [&chain](const Rational& x) {
        int vars = 0, last = 0;
        for (auto& q : chain) {
            int s = sign_of(upq_eval(q, x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++vars;
            last = s;
        }
        return vars;
    };
    assert(sign_of(upq_eval(s0, a)) != 0 && sign_of(upq_eval(s0, b)) != 0);
    return variations(a) - variations(b);
}

} // namespace dnlsat
