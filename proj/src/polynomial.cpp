#include "dnlsat/polynomial.hpp"
#include "dnlsat/error.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace dnlsat {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(Var v, uint32_t e) {
    Monomial m;
    if (e > 0) m.exps_.push_back({v, e});
    return m;
}

uint32_t Monomial::total_degree() const {
    uint32_t d = 0;
    for (auto& [v, e] : exps_) d += e;
    return d;
}

uint32_t Monomial::degree_in(Var v) const {
    for (auto& [w, e] : exps_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::mul(const Monomial& o) const {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < exps_.size() || j < o.exps_.size()) {
        if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first))
            r.exps_.push_back(exps_[i++]);
        else if (i == exps_.size() || o.exps_[j].first < exps_[i].first)
            r.exps_.push_back(o.exps_[j++]);
        else {
            r.exps_.push_back({exps_[i].first, exps_[i].second + o.exps_[j].second});
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    size_t j = 0;
    for (auto& [v, e] : exps_) {
        while (j < o.exps_.size() && o.exps_[j].first < v) ++j;
        if (j == o.exps_.size() || o.exps_[j].first != v || o.exps_[j].second < e) return false;
    }
    return true;
}

Monomial Monomial::div(const Monomial& o) const {
    Monomial r;
    size_t j = 0;
    for (auto& [v, e] : exps_) {
        uint32_t sub = 0;
        while (j < o.exps_.size() && o.exps_[j].first < v) ++j;
        if (j < o.exps_.size() && o.exps_[j].first == v) sub = o.exps_[j].second;
        assert(sub <= e);
        if (e - sub > 0) r.exps_.push_back({v, e - sub});
    }
    return r;
}

Monomial Monomial::without(Var v) const {
    Monomial r;
    for (auto& [w, e] : exps_)
        if (w != v) r.exps_.push_back({w, e});
    return r;
}

int Monomial::cmp_grlex(const Monomial& o) const {
    uint32_t da = total_degree(), db = o.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // Same degree: first differing variable decides; a higher exponent on the
    // lowest differing variable makes the monomial larger.
    size_t i = 0, j = 0;
    while (i < exps_.size() && j < o.exps_.size()) {
        if (exps_[i].first < o.exps_[j].first) return 1;  // we have the lower var
        if (exps_[i].first > o.exps_[j].first) return -1;
        if (exps_[i].second != o.exps_[j].second)
            return exps_[i].second > o.exps_[j].second ? 1 : -1;
        ++i, ++j;
    }
    if (i < exps_.size()) return 1;
    if (j < o.exps_.size()) return -1;
    return 0;
}

size_t Monomial::hash() const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (auto& [v, e] : exps_) {
        h ^= (static_cast<size_t>(v) << 17) + e + (h << 6) + (h >> 2);
    }
    return h;
}

std::string Monomial::to_string(const std::function<std::string(Var)>& name) const {
    if (exps_.empty()) return "1";
    std::string s;
    bool first = true;
    for (auto& [v, e] : exps_) {
        if (!first) s += "*";
        first = false;
        s += name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
    if (sign_of(c) != 0) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::variable(Var v) {
    Polynomial p;
    p.terms_.emplace(Monomial::variable(v), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
    Polynomial p;
    if (sign_of(c) != 0) p.terms_.emplace(m, c);
    return p;
}

Rational Polynomial::constant_value() const {
    assert(is_constant());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
    assert(!is_zero());
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coeff() const {
    assert(!is_zero());
    return terms_.rbegin()->second;
}

uint32_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

uint32_t Polynomial::degree_in(Var v) const {
    uint32_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

std::vector<Var> Polynomial::vars() const {
    std::vector<Var> out;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.factors()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Var Polynomial::top_var() const {
    Var best = kNoVar;
    for (auto& [m, c] : terms_) {
        Var t = m.top_var();
        if (t != kNoVar && (best == kNoVar || t > best)) best = t;
    }
    return best;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (sign_of(c) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (sign_of(it->second) == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_)
            r.add_term(m1.mul(m2), c1 * c2);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r;
    if (sign_of(c) == 0) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(uint32_t e) const {
    Polynomial r(Rational(1));
    for (uint32_t i = 0; i < e; ++i) r *= *this;
    return r;
}

Polynomial Polynomial::derivative(Var v) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
        uint32_t e = m.degree_in(v);
        if (e == 0) continue;
        Monomial m2 = m.without(v);
        if (e > 1) m2 = m2.mul(Monomial::variable(v, e - 1));
        r.add_term(m2, c * Rational(e));
    }
    return r;
}

std::vector<Polynomial> Polynomial::coeffs_in(Var v) const {
    std::vector<Polynomial> out(degree_in(v) + 1);
    for (auto& [m, c] : terms_)
        out[m.degree_in(v)].add_term(m.without(v), c);
    return out;
}

Polynomial Polynomial::coeff_of(Var v, uint32_t k) const {
    Polynomial r;
    for (auto& [m, c] : terms_)
        if (m.degree_in(v) == k) r.add_term(m.without(v), c);
    return r;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& q) const {
    std::vector<Polynomial> cs = coeffs_in(v);
    Polynomial r;
    for (size_t i = cs.size(); i-- > 0;) {
        r = r * q;
        r += cs[i];
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<Var, Rational>& vals) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
        Rational k = c;
        Monomial rest;
        for (auto& [v, e] : m.factors()) {
            auto it = vals.find(v);
            if (it == vals.end())
                rest = rest.mul(Monomial::variable(v, e));
            else
                k *= pow_rat(it->second, e);
        }
        r.add_term(rest, k);
    }
    return r;
}

Rational Polynomial::eval(const std::map<Var, Rational>& vals) const {
    Rational total(0);
    for (auto& [m, c] : terms_) {
        Rational k = c;
        for (auto& [v, e] : m.factors()) {
            auto it = vals.find(v);
            assert(it != vals.end());
            k *= pow_rat(it->second, e);
        }
        total += k;
    }
    return total;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    Integer g(0), l(1);
    for (auto& [m, c] : terms_) {
        g = gcd_int(g, c.get_num());
        l = lcm_int(l, c.get_den());
    }
    Rational r(g, l);
    r.canonicalize();
    if (sign_of(r) < 0) r = -r;
    return r;
}

Polynomial Polynomial::primitive_positive() const {
    if (terms_.empty()) return Polynomial();
    Rational c = content();
    if (sign_of(leading_coeff()) < 0) c = -c;
    return scaled(Rational(1) / c);
}

int Polynomial::cmp(const Polynomial& o) const {
    auto a = terms_.rbegin(), b = o.terms_.rbegin();
    while (a != terms_.rend() && b != o.terms_.rend()) {
        int mc = a->first.cmp_grlex(b->first);
        if (mc != 0) return mc;
        int qc = mpq_cmp(a->second.get_mpq_t(), b->second.get_mpq_t());
        if (qc != 0) return qc < 0 ? -1 : 1;
        ++a, ++b;
    }
    if (a != terms_.rend()) return 1;
    if (b != o.terms_.rend()) return -1;
    return 0;
}

size_t Polynomial::hash() const {
    size_t h = 14695981039346656037ull;
    for (auto& [m, c] : terms_) {
        h ^= m.hash() + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= hash_rational(c) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
}

std::string Polynomial::to_string() const {
    return to_string([](Var v) { return "x" + std::to_string(v); });
}

std::string Polynomial::to_string(const std::function<std::string(Var)>& name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        if (first) {
            if (sign_of(c) < 0) os << "-";
        } else {
            os << (sign_of(c) < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = abs(c);
        if (it->first.empty())
            os << a;
        else if (a == 1)
            os << it->first.to_string(name);
        else
            os << a << "*" << it->first.to_string(name);
    }
    return os.str();
}

// ------------------------------------------------------------- algorithms

Polynomial prem(const Polynomial& A, const Polynomial& B, Var v) {
    uint32_t dA = A.degree_in(v), dB = B.degree_in(v);
    assert(!B.is_zero() && dA >= dB && dB >= 1);
    Polynomial lcB = B.coeff_of(v, dB);
    Polynomial R = A;
    long scalings = static_cast<long>(dA) - static_cast<long>(dB) + 1;
    while (!R.is_zero()) {
        uint32_t e = R.degree_in(v);
        if (e < dB) break;
        Polynomial lcR = R.coeff_of(v, e);
        Polynomial shift = Polynomial::term(Rational(1), Monomial::variable(v, e - dB));
        R = lcB * R - lcR * shift * B;
        --scalings;
    }
    for (; scalings > 0; --scalings) R = lcB * R;
    return R;
}

Polynomial divexact(const Polynomial& P, const Polynomial& D) {
    if (D.is_zero()) throw InternalError("divexact: zero divisor");
    // Dense synthetic division when both sides are integer polynomials in one
    // variable and the divisor is primitive: integral quotients are then
    // guaranteed step by step, so a failed step aborts early instead of
    // costing a full map-based division.
    while (!P.is_zero() && !D.is_constant()) {
        auto pv = P.vars(), dv = D.vars();
        if (pv.size() != 1 || dv.size() != 1 || pv[0] != dv[0]) break;
        Var v = pv[0];
        auto dense = [&](const Polynomial& f, std::vector<Integer>& out) {
            out.assign(f.degree_in(v) + 1, Integer(0));
            for (auto& [m, c] : f.terms()) {
                if (c.get_den() != 1) return false;
                out[m.total_degree()] = c.get_num();
            }
            return true;
        };
        std::vector<Integer> a, d;
        if (!dense(P, a) || !dense(D, d)) break;
        Integer cont(0);
        for (auto& c : d) cont = gcd_int(cont, c);
        if (cont != 1) break;
        if (a.size() < d.size()) throw InternalError("divexact: not divisible");
        std::vector<Integer> q(a.size() - d.size() + 1);
        for (size_t k = q.size(); k-- > 0;) {
            Integer& num = a[k + d.size() - 1];
            if (sign_of(num) != 0) {
                if (!mpz_divisible_p(num.get_mpz_t(), d.back().get_mpz_t()))
                    throw InternalError("divexact: not divisible");
                mpz_divexact(q[k].get_mpz_t(), num.get_mpz_t(), d.back().get_mpz_t());
                for (size_t i = 0; i + 1 < d.size(); ++i)
                    mpz_submul(a[k + i].get_mpz_t(), q[k].get_mpz_t(), d[i].get_mpz_t());
                num = 0;
            }
        }
        for (size_t i = 0; i + 1 < d.size(); ++i)
            if (sign_of(a[i]) != 0) throw InternalError("divexact: not divisible");
        Polynomial out;
        for (size_t k = 0; k < q.size(); ++k) {
            if (sign_of(q[k]) == 0) continue;
            out += Polynomial::term(Rational(q[k]),
                                    Monomial::variable(v, static_cast<uint32_t>(k)));
        }
        return out;
    }
    Polynomial R = P, Q;
    const Monomial& dm = D.leading_monomial();
    const Rational& dc = D.leading_coeff();
    while (!R.is_zero()) {
        const Monomial& rm = R.leading_monomial();
        if (!dm.divides(rm)) throw InternalError("divexact: not divisible");
        Polynomial t = Polynomial::term(R.leading_coeff() / dc, rm.div(dm));
        Q += t;
        R -= t * D;
    }
    return Q;
}

// ------------------------------------------------ modular kernel helpers

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 4) return n > 1;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (uint32_t d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

uint32_t prev_prime(uint32_t n) {
    do {
        n -= (n % 2 == 0) ? 1 : 2;
    } while (!is_prime_u32(n));
    return n;
}

uint64_t invmod(uint64_t a, uint64_t p) {
    int64_t t = 0, nt = 1, r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a % p);
    while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    assert(r == 1);
    return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(p) : t);
}

// dense coefficients mod p, ascending, trailing zeros trimmed
std::vector<uint64_t> mod_image(const std::vector<Integer>& cs, uint64_t p) {
    std::vector<uint64_t> r(cs.size());
    for (size_t i = 0; i < cs.size(); ++i)
        r[i] = mpz_fdiv_ui(cs[i].get_mpz_t(), static_cast<unsigned long>(p));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// monic gcd in Z_p[x]; inputs nonzero, coefficients < p < 2^31
std::vector<uint64_t> gcd_mod(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        uint64_t binv = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            uint64_t f = a.back() * binv % p;
            size_t off = a.size() - b.size();
            for (size_t i = 0; i + 1 < b.size(); ++i)
                a[off + i] = (a[off + i] + (p - f) * b[i]) % p;
            a.pop_back();
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    uint64_t ainv = invmod(a.back(), p);
    for (auto& c : a) c = c * ainv % p;
    return a;
}

bool divides_poly(const Polynomial& d, const Polynomial& p) {
    try {
        divexact(p, d);
        return true;
    } catch (const InternalError&) {
        return false;
    }
}

// Small-prime CRT gcd with trial-division verification. Inputs are primitive
// with integer coefficients and positive degree in v; v is their only
// variable. The verification step makes prime choice a pure heuristic.
Polynomial gcd_univariate_modular(const Polynomial& P, const Polynomial& Q, Var v) {
    auto ints = [&](const Polynomial& f) {
        std::vector<Integer> cs;
        for (auto& c : f.coeffs_in(v)) {
            Rational r = c.is_zero() ? Rational(0) : c.leading_coeff();
            assert(r.get_den() == 1);
            cs.push_back(r.get_num());
        }
        return cs;
    };
    std::vector<Integer> pc = ints(P), qc = ints(Q);
    Integer glc = gcd_int(pc.back(), qc.back()); // multiple of lc(gcd)

    uint32_t prime = 2147483647u; // scan downward from 2^31 - 1
    size_t best = 0;              // image gcd degree + 1 currently tracked
    Integer M;                    // CRT modulus, 0 until first good prime
    std::vector<Integer> C;       // symmetric-range CRT residues
    Polynomial prev;              // candidate from the previous round
    for (int rounds = 0; rounds < 1000; ++rounds, prime = prev_prime(prime)) {
        uint64_t p = prime;
        if (mpz_fdiv_ui(pc.back().get_mpz_t(), p) == 0 ||
            mpz_fdiv_ui(qc.back().get_mpz_t(), p) == 0)
            continue; // degree would drop in the image
        std::vector<uint64_t> g = gcd_mod(mod_image(pc, p), mod_image(qc, p), p);
        if (g.size() == 1) return Polynomial(Rational(1));
        if (best != 0 && g.size() > best) continue; // unlucky prime
        if (best == 0 || g.size() < best) {
            best = g.size();
            M = 0;
            C.assign(best, Integer(0));
        }
        uint64_t s = mpz_fdiv_ui(glc.get_mpz_t(), p); // force lc to glc
        if (M == 0) {
            for (size_t i = 0; i < best; ++i) {
                Integer r(static_cast<unsigned long>(g[i] * s % p));
                if (r * 2 > Integer(static_cast<unsigned long>(p))) r -= static_cast<unsigned long>(p);
                C[i] = r;
            }
            M = static_cast<unsigned long>(p);
        } else {
            uint64_t minv = invmod(mpz_fdiv_ui(M.get_mpz_t(), p), p);
            Integer Mp = M * static_cast<unsigned long>(p);
            for (size_t i = 0; i < best; ++i) {
                uint64_t want = g[i] * s % p;
                uint64_t have = mpz_fdiv_ui(C[i].get_mpz_t(), p);
                uint64_t t = (want + p - have) % p * minv % p;
                C[i] += M * static_cast<unsigned long>(t);
                if (C[i] * 2 > Mp) C[i] -= Mp;
            }
            M = Mp;
        }
        Polynomial cand;
        for (size_t i = 0; i < best; ++i) {
            if (sign_of(C[i]) == 0) continue;
            cand += Polynomial::term(Rational(C[i]), Monomial::variable(v, static_cast<uint32_t>(i)));
        }
        if (cand.degree_in(v) + 1 != best) continue; // lc not yet recovered
        cand = cand.primitive_positive();
        // Trial division only once CRT has stopped changing the candidate;
        // verifying every round costs a full division per prime.
        if (cand != prev) {
            prev = std::move(cand);
            continue;
        }
        if (divides_poly(cand, P) && divides_poly(cand, Q)) return cand;
    }
    return Polynomial(); // zero: give up, caller falls back to the chain
}

bool univariate_in(const Polynomial& p, Var v) {
    for (auto& c : p.coeffs_in(v))
        if (!c.is_constant()) return false;
    return true;
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// f evaluated mod p with every variable substituted; integer coefficients
uint64_t eval_all_mod(const Polynomial& f, const std::map<Var, uint64_t>& sub, uint64_t p) {
    if (f.is_zero()) return 0;
    if (f.is_constant()) {
        Rational c = f.constant_value();
        uint64_t r = mpz_fdiv_ui(c.get_num().get_mpz_t(), static_cast<unsigned long>(p));
        return r;
    }
    Var w = f.top_var();
    auto cs = f.coeffs_in(w);
    uint64_t x = sub.at(w), acc = 0;
    for (size_t k = cs.size(); k-- > 0;)
        acc = (acc * x + eval_all_mod(cs[k], sub, p)) % p;
    return acc;
}

// resultant of dense univariate images mod p, ascending coefficients
uint64_t resultant_mod(std::vector<uint64_t> A, std::vector<uint64_t> B, uint64_t p) {
    if (A.empty() || B.empty()) return 0;
    uint64_t res = 1;
    if (A.size() < B.size()) {
        if (((A.size() - 1) & 1) && ((B.size() - 1) & 1)) res = p - 1;
        std::swap(A, B);
    }
    for (;;) {
        if (B.size() == 1) return res * powmod(B[0], A.size() - 1, p) % p;
        size_t m = A.size() - 1, n = B.size() - 1;
        uint64_t binv = invmod(B.back(), p);
        std::vector<uint64_t> R = std::move(A);
        while (R.size() >= B.size()) {
            uint64_t f = R.back() * binv % p;
            size_t off = R.size() - B.size();
            for (size_t i = 0; i + 1 < B.size(); ++i)
                R[off + i] = (R[off + i] + (p - f) * B[i]) % p;
            R.pop_back();
            while (!R.empty() && R.back() == 0) R.pop_back();
        }
        if (R.empty()) return 0;
        if ((m & 1) && (n & 1)) res = (p - res) % p;
        res = res * powmod(B.back(), m - (R.size() - 1), p) % p;
        A = std::move(B);
        B = std::move(R);
    }
}

// Newton interpolation mod p; xs distinct, returns dense coefficients
std::vector<uint64_t> interpolate_mod(const std::vector<uint64_t>& xs,
                                      std::vector<uint64_t> ys, uint64_t p) {
    size_t n = xs.size();
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n; i-- > k;) {
            uint64_t dx = (xs[i] + p - xs[i - k]) % p;
            ys[i] = (ys[i] + p - ys[i - 1]) % p * invmod(dx, p) % p;
        }
    std::vector<uint64_t> out(n, 0), prod(n, 0);
    prod[0] = 1;
    size_t plen = 1;
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i < plen; ++i)
            out[i] = (out[i] + ys[k] * prod[i]) % p;
        if (k + 1 < n) {
            // prod *= (x - xs[k])
            uint64_t c = p - xs[k];
            for (size_t i = plen; i-- > 0;) {
                prod[i + 1] = (prod[i + 1] + prod[i]) % p;
                prod[i] = prod[i] * c % p;
            }
            ++plen;
        }
    }
    return out;
}

// Exact resultant for inputs whose variables are {v, w}: evaluate w at
// points mod 31-bit primes, interpolate, and CRT until the Hadamard-style
// bound certifies the integer coefficients. Pays off once the output degree
// is large; the subresultant chain stays the general path.
Polynomial resultant_eval_interp(const Polynomial& p, const Polynomial& q, Var v, Var w) {
    uint32_t dA = p.degree_in(v), dB = q.degree_in(v);
    Rational cp = p.content(), cq = q.content();
    Polynomial P = p.scaled(Rational(1) / cp), Q = q.scaled(Rational(1) / cq);
    Rational scale(1);
    for (uint32_t i = 0; i < dB; ++i) scale *= cp;
    for (uint32_t i = 0; i < dA; ++i) scale *= cq;

    // dense integer tables: row = v-degree, column = w-degree
    auto table = [&](const Polynomial& f, uint32_t dv) {
        std::vector<std::vector<Integer>> t(dv + 1);
        auto cs = f.coeffs_in(v);
        for (uint32_t i = 0; i <= dv; ++i) {
            for (auto& c : cs[i].coeffs_in(w)) {
                Rational r = c.is_zero() ? Rational(0) : c.constant_value();
                assert(r.get_den() == 1);
                t[i].push_back(r.get_num());
            }
            while (!t[i].empty() && sign_of(t[i].back()) == 0) t[i].pop_back();
        }
        return t;
    };
    auto TA = table(P, dA), TB = table(Q, dB);

    uint64_t D = static_cast<uint64_t>(dB) * P.degree_in(w) +
                 static_cast<uint64_t>(dA) * Q.degree_in(w);
    auto norm1 = [](const std::vector<std::vector<Integer>>& t) {
        Integer best(1);
        for (auto& row : t) {
            Integer s(0);
            for (auto& c : row) s += abs(c);
            if (s > best) best = s;
        }
        return best;
    };
    Integer bound;
    mpz_fac_ui(bound.get_mpz_t(), dA + dB);
    Integer na = norm1(TA), nb = norm1(TB), tmp;
    mpz_pow_ui(tmp.get_mpz_t(), na.get_mpz_t(), dB);
    bound *= tmp;
    mpz_pow_ui(tmp.get_mpz_t(), nb.get_mpz_t(), dA);
    bound *= tmp;
    Integer target = bound * 2 + 1;

    std::vector<Integer> C(D + 1, Integer(0));
    Integer M(1);
    uint32_t prime = 2147483647u;
    while (M <= target) {
        uint64_t pm = prime;
        prime = prev_prime(prime);
        std::vector<std::vector<uint64_t>> MA(dA + 1), MB(dB + 1);
        for (uint32_t i = 0; i <= dA; ++i) MA[i] = mod_image(TA[i], pm);
        for (uint32_t i = 0; i <= dB; ++i) MB[i] = mod_image(TB[i], pm);
        if (MA[dA].empty() || MB[dB].empty()) continue; // leading row vanished
        auto horner = [&](const std::vector<uint64_t>& cs, uint64_t x) {
            uint64_t acc = 0;
            for (size_t k = cs.size(); k-- > 0;) acc = (acc * x + cs[k]) % pm;
            return acc;
        };
        std::vector<uint64_t> xs, ys;
        xs.reserve(D + 1);
        for (uint64_t j = 0; xs.size() < D + 1 && j < pm; ++j) {
            uint64_t la = horner(MA[dA], j), lb = horner(MB[dB], j);
            if (la == 0 || lb == 0) continue; // degree would drop at this point
            std::vector<uint64_t> Aj(dA + 1), Bj(dB + 1);
            for (uint32_t i = 0; i <= dA; ++i) Aj[i] = horner(MA[i], j);
            for (uint32_t i = 0; i <= dB; ++i) Bj[i] = horner(MB[i], j);
            xs.push_back(j);
            ys.push_back(resultant_mod(std::move(Aj), std::move(Bj), pm));
        }
        if (xs.size() < D + 1) continue;
        std::vector<uint64_t> rp = interpolate_mod(xs, std::move(ys), pm);
        if (M == 1) {
            for (size_t i = 0; i <= D; ++i) {
                Integer r(static_cast<unsigned long>(rp[i]));
                if (r * 2 > Integer(static_cast<unsigned long>(pm)))
                    r -= static_cast<unsigned long>(pm);
                C[i] = r;
            }
            M = static_cast<unsigned long>(pm);
        } else {
            uint64_t minv = invmod(mpz_fdiv_ui(M.get_mpz_t(), pm), pm);
            Integer Mp = M * static_cast<unsigned long>(pm);
            for (size_t i = 0; i <= D; ++i) {
                uint64_t have = mpz_fdiv_ui(C[i].get_mpz_t(), pm);
                uint64_t t = (rp[i] + pm - have) % pm * minv % pm;
                C[i] += M * static_cast<unsigned long>(t);
                if (C[i] * 2 > Mp) C[i] -= Mp;
            }
            M = Mp;
        }
    }
    Polynomial R;
    for (size_t i = 0; i <= D; ++i) {
        if (sign_of(C[i]) == 0) continue;
        R += Polynomial::term(Rational(C[i]), Monomial::variable(w, static_cast<uint32_t>(i)));
    }
    return R.scaled(scale);
}

// One modular evaluation certifying coprimality of v-primitive inputs: a
// constant image gcd with the leading v-coefficient alive at the sample
// point forces the true gcd to degree 0, hence (by primitivity) to 1.
// Failure says nothing; callers fall through to the exact chain.
bool probe_coprime(const Polynomial& P, const Polynomial& Q, Var v) {
    const uint64_t p = 2147483647u;
    uint64_t seed = 0x9e3779b97f4a7c15ull;
    std::vector<Var> vs = P.vars();
    for (Var u : Q.vars()) vs.push_back(u);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    auto pcs = P.coeffs_in(v), qcs = Q.coeffs_in(v);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::map<Var, uint64_t> sub;
        for (Var u : vs) {
            if (u == v) continue;
            seed = seed * 6364136223846793005ull + 1442695040888963407ull;
            sub[u] = (seed >> 33) % p;
        }
        auto image = [&](const std::vector<Polynomial>& cs) {
            std::vector<uint64_t> r(cs.size());
            for (size_t i = 0; i < cs.size(); ++i) r[i] = eval_all_mod(cs[i], sub, p);
            return r;
        };
        std::vector<uint64_t> a = image(pcs), b = image(qcs);
        if (a.back() == 0 && b.back() == 0) continue; // both leads died
        while (!a.empty() && a.back() == 0) a.pop_back();
        while (!b.empty() && b.back() == 0) b.pop_back();
        if (a.empty() || b.empty()) continue;
        if (gcd_mod(std::move(a), std::move(b), p).size() == 1) return true;
    }
    return false;
}

} // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, Var v) {
    uint32_t m = p.degree_in(v), n = q.degree_in(v);
    if (m < 1 || n < 1)
        throw DomainError("resultant: both arguments must have positive degree in v");
    {
        std::vector<Var> vs = p.vars();
        for (Var u : q.vars()) vs.push_back(u);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        if (vs.size() == 2 && (vs[0] == v || vs[1] == v)) {
            Var w = vs[0] == v ? vs[1] : vs[0];
            uint64_t D = static_cast<uint64_t>(n) * p.degree_in(w) +
                         static_cast<uint64_t>(m) * q.degree_in(w);
            if (D >= 24) return resultant_eval_interp(p, q, v, w);
        }
    }
    Polynomial A = p, B = q;
    int s = 1;
    if (m < n) {
        std::swap(A, B);
        if ((m & 1) && (n & 1)) s = -s;
    }
    Polynomial g(Rational(1)), h(Rational(1));
    for (;;) {
        uint32_t dA = A.degree_in(v), dB = B.degree_in(v);
        uint32_t delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        Polynomial R = prem(A, B, v);
        A = B;
        if (R.is_zero()) return Polynomial(); // shared factor of positive degree
        B = divexact(R, g * h.pow(delta));
        g = A.coeff_of(v, A.degree_in(v));
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = divexact(g.pow(delta), h.pow(delta - 1));
        if (B.degree_in(v) == 0) {
            uint32_t d = A.degree_in(v);
            Polynomial res = d >= 1 ? divexact(B.pow(d), h.pow(d - 1)) : B;
            return s < 0 ? -res : res;
        }
    }
}

Polynomial discriminant(const Polynomial& p, Var v) {
    uint32_t d = p.degree_in(v);
    if (d < 2) throw DomainError("discriminant: degree in v must be >= 2");
    Polynomial res = resultant(p, p.derivative(v), v);
    Polynomial lc = p.coeff_of(v, d);
    Polynomial q = res.is_zero() ? Polynomial() : divexact(res, lc);
    // (-1)^(d(d-1)/2)
    if (((static_cast<uint64_t>(d) * (d - 1)) / 2) & 1) q = -q;
    return q;
}

static Polynomial content_in(const Polynomial& P, Var v) {
    Polynomial g;
    for (auto& c : P.coeffs_in(v)) {
        if (c.is_zero()) continue;
        g = gcd_poly(g, c);
        if (g.is_constant() && !g.is_zero()) return Polynomial(Rational(1));
    }
    return g;
}


Polynomial gcd_poly(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.primitive_positive();
    if (b.is_zero()) return a.primitive_positive();
    if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));
    Var v = std::max(a.top_var(), b.top_var());
    uint32_t da = a.degree_in(v), db = b.degree_in(v);
    if (da == 0) return gcd_poly(a, content_in(b, v));
    if (db == 0) return gcd_poly(content_in(a, v), b);

    Polynomial contA = content_in(a, v), contB = content_in(b, v);
    Polynomial P = divexact(a, contA).primitive_positive();
    Polynomial Q = divexact(b, contB).primitive_positive();
    Polynomial contG = gcd_poly(contA, contB);
    if (P.degree_in(v) < Q.degree_in(v)) std::swap(P, Q);
    if (univariate_in(P, v) && univariate_in(Q, v)) {
        Polynomial m = gcd_univariate_modular(P, Q, v);
        if (!m.is_zero()) return (m * contG).primitive_positive();
    } else if (probe_coprime(P, Q, v)) {
        return contG.primitive_positive();
    }

    // Subresultant chain: per-step exact divisions keep growth polynomial
    // without recursive content computations along the way.
    Polynomial G;
    Polynomial g(Rational(1)), h(Rational(1));
    for (;;) {
        uint32_t delta = P.degree_in(v) - Q.degree_in(v);
        Polynomial R = prem(P, Q, v);
        if (R.is_zero()) {
            G = Q;
            break;
        }
        if (R.degree_in(v) == 0) return contG.primitive_positive();
        P = Q;
        Q = divexact(R, g * h.pow(delta));
        g = P.coeff_of(v, P.degree_in(v));
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = divexact(g.pow(delta), h.pow(delta - 1));
    }
    G = divexact(G, content_in(G, v)).primitive_positive();
    return (G * contG).primitive_positive();
}

Polynomial square_free_part(const Polynomial& p, Var v) {
    if (p.degree_in(v) < 1) throw DomainError("square_free_part: degree in v must be >= 1");
    Polynomial g = gcd_poly(p, p.derivative(v));
    if (g.is_constant()) return p.primitive_positive();
    return divexact(p, g).primitive_positive();
}

std::vector<Polynomial> coefficients_in(const Polynomial& p, Var v) {
    std::vector<Polynomial> cs = p.coeffs_in(v);
    std::reverse(cs.begin(), cs.end());
    return cs;
}

} // namespace dnlsat
