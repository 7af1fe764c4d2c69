#pragma once

#include "dnlsat/assignment.hpp"
#include "dnlsat/polynomial.hpp"
#include "dnlsat/rel.hpp"

namespace dnlsat {

// Index of a boolean variable (an atom slot or a plain boolean).
using BVar = uint32_t;
constexpr BVar kNoBVar = 0xffffffffu;

enum class LBool : uint8_t { False = 0, True = 1, Undef = 2 };

inline LBool lbool_of(bool b) { return b ? LBool::True : LBool::False; }

inline LBool lbool_neg(LBool b) {
    if (b == LBool::Undef) return b;
    return b == LBool::True ? LBool::False : LBool::True;
}

// Boolean variable plus negation flag, packed MiniSat style.
struct Literal {
    uint32_t x = 0xffffffffu;

    Literal() = default;
    Literal(BVar v, bool negated) : x(v * 2 + (negated ? 1u : 0u)) {}

    BVar var() const { return x >> 1; }
    bool neg() const { return x & 1; }
    Literal operator~() const {
        Literal l;
        l.x = x ^ 1;
        return l;
    }
    bool operator==(const Literal& o) const { return x == o.x; }
    bool operator!=(const Literal& o) const { return x != o.x; }
    bool operator<(const Literal& o) const { return x < o.x; }
};

constexpr uint32_t kLitUndef = 0xffffffffu;

enum class AtomKind : uint8_t { Poly, Root };

// Arithmetic atom. Poly: `p rel 0`. Root: `rvar rel root_k(p)` where p is
// read as a polynomial in rvar and k is 1-based; when p has fewer than k
// roots under the current assignment the atom is false. Stored with p
// primitive and positively led so structural equality catches rescaled
// duplicates.
struct Atom {
    AtomKind kind = AtomKind::Poly;
    Polynomial p;
    Rel rel = Rel::LT;
    Var rvar = kNoVar; // Root only
    unsigned k = 0;    // Root only

    static Atom poly(Polynomial p, Rel rel) {
        Atom a;
        a.kind = AtomKind::Poly;
        a.p = std::move(p);
        a.rel = rel;
        return a;
    }
    static Atom root(Var rvar, Rel rel, Polynomial p, unsigned k) {
        Atom a;
        a.kind = AtomKind::Root;
        a.p = std::move(p);
        a.rel = rel;
        a.rvar = rvar;
        a.k = k;
        return a;
    }

    std::vector<Var> vars() const; // includes rvar
    size_t hash() const;
    bool operator==(const Atom& o) const;
    std::string to_string() const;
};

// Exact three-valued evaluation; Undef while a variable is missing.
LBool evaluate_atom(const Atom& at, const Assignment& a);

} // namespace dnlsat
