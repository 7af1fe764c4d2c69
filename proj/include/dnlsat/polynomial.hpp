#pragma once

#include "dnlsat/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace dnlsat {

using Var = uint32_t;
constexpr Var kNoVar = 0xffffffffu;

// Power product: factors sorted by variable id, all exponents >= 1.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(Var v, uint32_t e = 1);

    bool empty() const { return exps_.empty(); }
    uint32_t total_degree() const;
    uint32_t degree_in(Var v) const;
    Var top_var() const { return exps_.empty() ? kNoVar : exps_.back().first; }
    const std::vector<std::pair<Var, uint32_t>>& factors() const { return exps_; }

    Monomial mul(const Monomial& o) const;
    bool divides(const Monomial& o) const; // *this | o
    Monomial div(const Monomial& o) const; // *this / o; requires o | *this
    // Monomial with v's exponent set to zero.
    Monomial without(Var v) const;

    // Graded lexicographic: total degree first, then lexicographic with the
    // lowest-id variable most significant (higher exponent there is larger).
    int cmp_grlex(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    size_t hash() const;

    std::string to_string(const std::function<std::string(Var)>& name) const;

private:
    std::vector<std::pair<Var, uint32_t>> exps_;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.cmp_grlex(b) < 0; }
};

// Sparse multivariate polynomial over the rationals. The term map is kept
// free of zero coefficients; the map's last entry is the grlex-leading term.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    Polynomial() = default; // zero
    explicit Polynomial(const Rational& c);
    explicit Polynomial(long c) : Polynomial(Rational(c)) {}
    static Polynomial variable(Var v);
    static Polynomial term(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_value() const; // requires is_constant()
    size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Monomial& leading_monomial() const; // requires !is_zero()
    const Rational& leading_coeff() const;    // requires !is_zero()
    uint32_t total_degree() const;
    uint32_t degree_in(Var v) const;
    std::vector<Var> vars() const; // sorted ascending
    Var top_var() const;           // highest var present, kNoVar for constants

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(uint32_t e) const;

    Polynomial derivative(Var v) const;
    // Coefficients of the univariate view in v, ascending by degree; the
    // result has degree_in(v)+1 entries (zero polynomial -> one zero entry).
    std::vector<Polynomial> coeffs_in(Var v) const;
    Polynomial coeff_of(Var v, uint32_t k) const;
    Polynomial substitute(Var v, const Polynomial& q) const;
    Polynomial substitute(const std::map<Var, Rational>& vals) const; // partial plug-in
    Rational eval(const std::map<Var, Rational>& vals) const;         // all vars covered

    // Positive rational c with (*this)/c having coprime integer coefficients.
    Rational content() const; // zero polynomial -> 0
    // Canonical form: integer content 1, positive grlex-leading coefficient.
    Polynomial primitive_positive() const;

    int cmp(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return cmp(o) == 0; }
    bool operator!=(const Polynomial& o) const { return cmp(o) != 0; }
    size_t hash() const;

    std::string to_string() const;
    std::string to_string(const std::function<std::string(Var)>& name) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;

    friend Polynomial prem(const Polynomial&, const Polynomial&, Var);
};

struct PolynomialLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const { return a.cmp(b) < 0; }
};

// Pseudo-remainder of A by B in v: lc_v(B)^(deg A - deg B + 1) * A = Q*B + R.
// Requires deg_v(B) >= 1 and deg_v(A) >= deg_v(B).
Polynomial prem(const Polynomial& A, const Polynomial& B, Var v);

// Exact quotient P / D; throws InternalError when D does not divide P.
Polynomial divexact(const Polynomial& P, const Polynomial& D);

// Resultant w.r.t. v via the subresultant PRS, matching the Sylvester
// determinant exactly. Requires deg_v >= 1 on both sides.
Polynomial resultant(const Polynomial& p, const Polynomial& q, Var v);

// (-1)^(d(d-1)/2) * res(p, p', v) / lc_v(p), exact (no rescaling). deg_v >= 2.
Polynomial discriminant(const Polynomial& p, Var v);

// Gcd in Q[x...], canonicalized (integer content 1, positive leading coeff).
Polynomial gcd_poly(const Polynomial& a, const Polynomial& b);

// p / gcd(p, dp/dv), canonicalized. Requires deg_v(p) >= 1.
Polynomial square_free_part(const Polynomial& p, Var v);

// Univariate view helpers, highest-degree coefficient first.
std::vector<Polynomial> coefficients_in(const Polynomial& p, Var v);

} // namespace dnlsat
