#include "dnlsat/internalize.hpp"
#include "dnlsat/smtlib.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

using namespace dnlsat;

namespace {

Script S(const std::string& text) { return parse_script(text); }

// round-trip: printing and reparsing reproduces the same AST and the
// printed form is a fixed point
void check_roundtrip(const std::string& text) {
    Script s1 = parse_script(text);
    std::string t1 = print_script(s1);
    Script s2 = parse_script(t1);
    REQUIRE(script_equal(s1, s2));
    REQUIRE(print_script(s2) == t1);
}

bool has_clause(const ClauseDB& db, std::vector<Literal> want) {
    std::sort(want.begin(), want.end());
    for (const auto& c : db.originals())
        if (c->lits == want) return true;
    return false;
}

const TermPtr& assert_body(const Script& s, size_t nth = 0) {
    size_t seen = 0;
    for (const Command& c : s.commands)
        if (c.kind == Command::Assert && seen++ == nth) return c.term;
    FAIL("no such assert");
    static TermPtr none;
    return none;
}

} // namespace

TEST_CASE("script parsing basics") {
    Script s = S("(set-logic QF_NRA)\n"
                 "(declare-fun x () Real)\n"
                 "(assert (> (* x x) 2))\n"
                 "(check-sat)\n");
    REQUIRE(s.commands.size() == 4);
    CHECK(s.commands[0].kind == Command::SetLogic);
    CHECK(s.commands[0].symbol == "QF_NRA");
    CHECK(s.commands[1].kind == Command::DeclareFun);
    CHECK(s.commands[1].symbol == "x");
    CHECK(s.commands[1].sort == Sort::Real);
    CHECK(s.commands[3].kind == Command::CheckSat);

    const TermPtr& t = assert_body(s);
    REQUIRE(t->kind == TermKind::Gt);
    REQUIRE(t->args.size() == 2);
    CHECK(t->args[0]->kind == TermKind::Mul);
    CHECK(t->args[1]->kind == TermKind::Const);
    CHECK(t->args[1]->value == Rational(2));
    CHECK(t->sort == Sort::Bool);
}

TEST_CASE("numerals, decimals, and constant folding") {
    Script s = S("(declare-fun x () Real)"
                 "(assert (= x 2.5))"
                 "(assert (= x (/ 5 2)))"
                 "(assert (= x (- (- 2.5))))"
                 "(assert (= x (+ 2 (/ 1 2))))"
                 "(assert (= x 0.5))");
    const Rational half = Rational(1) / Rational(2);
    const Rational fivehalves = Rational(5) / Rational(2);
    for (size_t i = 0; i < 4; ++i) {
        const TermPtr& t = assert_body(s, i);
        REQUIRE(t->args[1]->kind == TermKind::Const);
        CHECK(t->args[1]->value == fivehalves);
    }
    CHECK(assert_body(s, 4)->args[1]->value == half);
    // folded spellings are structurally identical
    CHECK(term_equal(assert_body(s, 0), assert_body(s, 1)));
    CHECK(term_equal(assert_body(s, 0), assert_body(s, 2)));
    CHECK(term_equal(assert_body(s, 0), assert_body(s, 3)));
    CHECK_FALSE(term_equal(assert_body(s, 0), assert_body(s, 4)));

    Script n = S("(assert (< (- 2) 12345678901234567890123456789))");
    CHECK(assert_body(n)->args[0]->value == Rational(-2));
    CHECK(assert_body(n)->args[1]->value ==
          Rational(Integer("12345678901234567890123456789")));
}

TEST_CASE("comments, quoted symbols, and strings") {
    Script s = S("; leading comment\n"
                 "(set-info :status \"sat ; not a comment\")\n"
                 "(declare-fun |odd name()| () Real) ; trailing\n"
                 "(assert (> |odd name()| 0))");
    REQUIRE(s.commands.size() == 3);
    CHECK(s.commands[0].text == "\"sat ; not a comment\"");
    CHECK(s.commands[1].symbol == "odd name()");
    CHECK(assert_body(s)->args[0]->name == "odd name()");
    check_roundtrip("(set-info :status \"sat ; not a comment\")\n"
                    "(declare-fun |odd name()| () Real)\n"
                    "(assert (> |odd name()| 0))");
}

TEST_CASE("round-trip on a broad script") {
    check_roundtrip(
        "(set-logic QF_NRA)\n"
        "(set-info :status \"unknown\")\n"
        "(set-info :source |multi\nline source|)\n"
        "(declare-fun x () Real)\n"
        "(declare-const y Real)\n"
        "(declare-fun b () Bool)\n"
        "(define-fun m () Real (* x y))\n"
        "(define-fun g () Bool (and b (> m 0)))\n"
        "(assert (let ((u (+ x 1)) (v 2.5)) (>= (* u v) (- y))))\n"
        "(assert (or g (not b) (xor b (> x 2.5) (distinct x y 3))))\n"
        "(assert (ite b (=> b (> x 0) (< y 1)) (= x y 2)))\n"
        "(assert (< (/ x 2 3) (- 7) (+ x y 1)))\n"
        "(check-sat)\n"
        "(get-model)\n"
        "(exit)\n");
}

TEST_CASE("round-trip on random scripts") {
    std::mt19937 rng(20240817);
    auto num = [&](int lo, int hi) {
        return int(rng() % uint32_t(hi - lo + 1)) + lo;
    };
    for (int iter = 0; iter < 60; ++iter) {
        std::ostringstream out;
        out << "(set-logic QF_NRA)";
        out << "(declare-fun x () Real)(declare-fun y () Real)(declare-fun b () Bool)";
        std::function<void(int)> poly = [&](int d) {
            switch (num(0, d > 0 ? 6 : 2)) {
            case 0: out << (num(0, 1) ? "x" : "y"); break;
            case 1: out << num(-9, 9); break;
            case 2: out << num(0, 9) << '.' << num(0, 99); break;
            case 3: out << "(+ "; poly(d - 1); out << ' '; poly(d - 1); out << ')'; break;
            case 4: out << "(- "; poly(d - 1); out << ' '; poly(d - 1); out << ')'; break;
            case 5: out << "(* "; poly(d - 1); out << ' '; poly(d - 1); out << ')'; break;
            default: out << "(/ "; poly(d - 1); out << ' ' << num(1, 9) << ')';
            }
        };
        std::function<void(int)> boolean = [&](int d) {
            switch (num(0, d > 0 ? 7 : 2)) {
            case 0: out << "b"; break;
            case 1: {
                const char* rel[] = {"<", "<=", ">", ">=", "="};
                out << '(' << rel[num(0, 4)] << ' ';
                poly(2);
                out << ' ';
                poly(2);
                out << ')';
                break;
            }
            case 2: out << (num(0, 1) ? "true" : "false"); break;
            case 3: out << "(not "; boolean(d - 1); out << ')'; break;
            case 4: out << "(and "; boolean(d - 1); out << ' '; boolean(d - 1); out << ')'; break;
            case 5: out << "(or "; boolean(d - 1); out << ' '; boolean(d - 1); out << ')'; break;
            case 6: out << "(=> "; boolean(d - 1); out << ' '; boolean(d - 1); out << ')'; break;
            default:
                out << "(ite ";
                boolean(d - 1);
                out << ' ';
                boolean(d - 1);
                out << ' ';
                boolean(d - 1);
                out << ')';
            }
        };
        out << "(assert ";
        boolean(3);
        out << ")(check-sat)";
        check_roundtrip(out.str());
    }
}

TEST_CASE("error classes") {
    const std::string decl = "(declare-fun x () Real)";

    SECTION("parse errors") {
        CHECK_THROWS_AS(S("(assert (> x 0)"), ParseError);
        CHECK_THROWS_AS(S(")"), ParseError);
        CHECK_THROWS_AS(S("(assert)"), ParseError);
        CHECK_THROWS_AS(S("(set-logic QF_NRA)(set-logic QF_NRA)"), ParseError);
        CHECK_THROWS_AS(S(decl + decl), ParseError);
        CHECK_THROWS_AS(S(decl + "(assert (let ((a 1) (a 2)) (> x a)))"), ParseError);
        CHECK_THROWS_AS(S(decl + "(assert (not (> x 0) (> x 1)))"), ParseError);
        CHECK_THROWS_AS(S("(declare-fun 5x () Real)"), ParseError);
    }
    SECTION("sort errors") {
        CHECK_THROWS_AS(S("(assert (> y 0))"), SortError);
        CHECK_THROWS_AS(S("(declare-fun n () Int)"), SortError);
        CHECK_THROWS_AS(S(decl + "(assert (+ x 1))"), SortError);
        CHECK_THROWS_AS(S(decl + "(assert (/ x 0))"), SortError);
        CHECK_THROWS_AS(S(decl + "(assert (> (/ 1 0) 0))"), SortError);
        CHECK_THROWS_AS(S(decl + "(assert (and (> x 0) x))"), SortError);
        CHECK_THROWS_AS(S(decl + "(assert (= (> x 0) (> x 1)))"), SortError);
        CHECK_THROWS_AS(S(decl + "(assert (not x))"), SortError);
        CHECK_THROWS_AS(S("(define-fun m () Bool 3)"), SortError);
    }
    SECTION("unsupported constructs") {
        CHECK_THROWS_AS(S(decl + "(assert (^ x 2))"), UnsupportedError);
        CHECK_THROWS_AS(S(decl + "(assert (> (/ x x) 1))"), UnsupportedError);
        CHECK_THROWS_AS(S("(set-option :produce-models true)"), UnsupportedError);
        CHECK_THROWS_AS(S("(set-logic QF_BV)"), UnsupportedError);
        CHECK_THROWS_AS(S("(declare-fun f (Real) Real)"), UnsupportedError);
        CHECK_THROWS_AS(S("(define-fun f ((a Real)) Real a)"), UnsupportedError);
        CHECK_THROWS_AS(S(decl + "(assert (> (ite (> x 0) x 1) 0))"), UnsupportedError);
        CHECK_THROWS_AS(S("(push 1)"), UnsupportedError);
    }
    SECTION("positions are reported") {
        try {
            S("(set-logic QF_NRA)\n(declare-fun x () Real)\n(assert (> y 0))\n");
            FAIL("expected SortError");
        } catch (const SortError& e) {
            CHECK(e.pos.line == 3);
            CHECK(e.pos.col == 12);
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
            CHECK(std::string(e.what()).find("'y'") != std::string::npos);
        }
        // the three classes are distinct types
        CHECK_THROWS_AS(S("(assert (> y 0)"), ParseError); // unclosed beats resolution
    }
}

TEST_CASE("clausification shapes") {
    SECTION("nested and under or gets one definition variable") {
        Internalized in = internalize(
            S("(declare-fun x () Real)"
              "(assert (or (< x 0) (and (> x 1) (< x 2))))"));
        REQUIRE(in.db.num_vars() == 4); // three atoms plus one definition
        Literal A(0, false), B(1, false), C(2, false), t(3, false);
        CHECK(in.db.originals().size() == 4);
        CHECK(has_clause(in.db, {A, t}));
        CHECK(has_clause(in.db, {~t, B}));
        CHECK(has_clause(in.db, {~t, C}));
        CHECK(has_clause(in.db, {t, ~B, ~C}));
    }
    SECTION("top-level and splits with no fresh variables") {
        Internalized in = internalize(
            S("(declare-fun x () Real)(assert (and (> x 0) (> x 1) (> x 2)))"));
        CHECK(in.db.num_vars() == 3);
        REQUIRE(in.db.originals().size() == 3);
        for (const auto& c : in.db.originals()) CHECK(c->size() == 1);
    }
    SECTION("top-level or is a single clause") {
        Internalized in = internalize(
            S("(declare-fun x () Real)(assert (or (> x 0) (< x -1)))"));
        CHECK(in.db.num_vars() == 2);
        REQUIRE(in.db.originals().size() == 1);
        CHECK(in.db.originals()[0]->size() == 2);
    }
    SECTION("implication desugars to a clause") {
        Internalized in = internalize(
            S("(declare-fun b () Bool)(declare-fun x () Real)"
              "(assert (=> b (> x 0)))"));
        REQUIRE(in.db.originals().size() == 1);
        Literal b(0, false), A(1, false);
        CHECK(has_clause(in.db, {~b, A}));
    }
    SECTION("xor definition uses four clauses") {
        Internalized in = internalize(
            S("(declare-fun a () Bool)(declare-fun b () Bool)(assert (xor a b))"));
        // xor introduces t with 4 clauses, then the unit {t}
        CHECK(in.db.num_vars() == 3);
        CHECK(in.db.originals().size() == 5);
        Literal a(0, false), b(1, false), t(2, false);
        CHECK(has_clause(in.db, {t}));
        CHECK(has_clause(in.db, {~t, a, b}));
        CHECK(has_clause(in.db, {~t, ~a, ~b}));
        CHECK(has_clause(in.db, {t, ~a, b}));
        CHECK(has_clause(in.db, {t, a, ~b}));
    }
}

TEST_CASE("atom canonicalization merges scaled relations") {
    Internalized in = internalize(
        S("(declare-fun x () Real)"
          "(assert (> (* 2 x) 4))"
          "(assert (> x 2))"
          "(assert (< 2 x))"
          "(assert (> (/ x 2) 1))"));
    CHECK(in.db.num_vars() == 1);
    CHECK(in.db.originals().size() == 1); // identical units deduplicate
    const Atom* a = in.db.atom_of(0);
    REQUIRE(a != nullptr);
    Polynomial x = Polynomial::variable(Var(0));
    CHECK(in.db.atom_var(Atom::poly(x - Polynomial(2), Rel::GT)) == 0);
}

TEST_CASE("macros inline and cache") {
    Internalized in = internalize(
        S("(declare-fun x () Real)(declare-fun b () Bool)"
          "(define-fun m () Real (* x x))"
          "(define-fun g () Bool (and b (> m 1)))"
          "(assert (or g (> m 0)))"
          "(assert (or (not b) g))"));
    // vars: b, atom m>1, def var for g, atom m>0
    CHECK(in.db.num_vars() == 4);
    CHECK(in.db.originals().size() == 5);
    CHECK(in.arith_names.size() == 1);
    CHECK(in.arith_names[0].first == "x");
    CHECK(in.bool_names.size() == 1);

    Polynomial x = Polynomial::variable(Var(0));
    // the macro body was inlined into real atoms over x
    CHECK(in.db.atom_var(Atom::poly(x * x - Polynomial(1), Rel::GT)) == 1);
    CHECK(in.db.atom_var(Atom::poly(x * x, Rel::GT)) == 3);
}

TEST_CASE("let bindings") {
    SECTION("bindings substitute and fold") {
        Internalized in = internalize(
            S("(declare-fun x () Real)"
              "(assert (let ((u (+ x 1)) (v 2)) (> (* u v) 0)))"));
        Polynomial x = Polynomial::variable(Var(0));
        CHECK(in.db.num_vars() == 1);
        CHECK(in.db.atom_var(Atom::poly((x + Polynomial(1)) * Polynomial(2), Rel::GT)) == 0);
    }
    SECTION("let shadows a declaration") {
        Internalized in = internalize(
            S("(declare-fun x () Real)(assert (let ((x 5)) (> x 4)))"));
        CHECK(in.db.num_vars() == 0); // folded to true
        CHECK(in.db.originals().empty());
        CHECK_FALSE(in.trivially_false);
    }
    SECTION("bindings are parallel") {
        CHECK_THROWS_AS(S("(declare-fun x () Real)"
                          "(assert (let ((a (> x 0)) (c a)) c))"),
                        SortError);
    }
    SECTION("boolean bindings reuse one literal") {
        Internalized in = internalize(
            S("(declare-fun x () Real)"
              "(assert (let ((t (and (> x 0) (< x 1)))) (and t t)))"));
        // one definition variable, asserted twice, deduplicated to one unit
        CHECK(in.db.num_vars() == 3);
        bool unit_def = false;
        for (const auto& c : in.db.originals())
            unit_def |= c->size() == 1 && (*c)[0] == Literal(2, false);
        CHECK(unit_def);
    }
}

TEST_CASE("constant assertions fold away") {
    SECTION("true assertions vanish") {
        Internalized in = internalize(
            S("(declare-fun x () Real)(assert (> 3 2))(assert true)"
              "(assert (or (> x 0) true))"));
        CHECK(in.db.originals().empty());
        CHECK_FALSE(in.trivially_false);
    }
    SECTION("false assertions mark the problem") {
        CHECK(internalize(S("(assert false)")).trivially_false);
        CHECK(internalize(S("(declare-fun x () Real)(assert (< x x))")).trivially_false);
        CHECK(internalize(S("(declare-fun x () Real)(assert (distinct x x))")).trivially_false);
        CHECK_FALSE(internalize(S("(declare-fun x () Real)(assert (= x x))")).trivially_false);
    }
    SECTION("constant relation operands fold") {
        Internalized in = internalize(
            S("(declare-fun x () Real)(assert (or (> x 0) (< 1 2 3)))"));
        CHECK(in.db.originals().empty()); // chain over constants is true
    }
}

TEST_CASE("commands after exit are parsed but not executed") {
    Script s = S("(declare-fun b () Bool)(assert b)(exit)(check-sat)");
    REQUIRE(s.commands.size() == 4);
    Internalized in = internalize(s);
    CHECK_FALSE(in.has_check_sat);
    CHECK(in.db.originals().size() == 1);
}

namespace {

// direct evaluation of a resolved term at a rational point, the reference
// for the clausifier
struct Evaluator {
    std::map<std::string, Rational> reals;
    std::map<std::string, bool> bools;
    std::vector<std::map<std::string, Rational>> let_reals;
    std::vector<std::map<std::string, bool>> let_bools;

    Rational real(const TermPtr& t) {
        switch (t->kind) {
        case TermKind::Const:
            return t->value;
        case TermKind::Var: {
            for (auto it = let_reals.rbegin(); it != let_reals.rend(); ++it) {
                auto f = it->find(t->name);
                if (f != it->end()) return f->second;
            }
            return reals.at(t->name);
        }
        case TermKind::Add: {
            Rational r(0);
            for (const TermPtr& a : t->args) r += real(a);
            return r;
        }
        case TermKind::Sub: {
            if (t->args.size() == 1) return -real(t->args[0]);
            Rational r = real(t->args[0]);
            for (size_t i = 1; i < t->args.size(); ++i) r -= real(t->args[i]);
            return r;
        }
        case TermKind::Mul: {
            Rational r(1);
            for (const TermPtr& a : t->args) r *= real(a);
            return r;
        }
        case TermKind::Div: {
            Rational r = real(t->args[0]);
            for (size_t i = 1; i < t->args.size(); ++i) r /= t->args[i]->value;
            return r;
        }
        case TermKind::Let:
            return scoped<Rational>(t, [&] { return real(t->args[0]); });
        default:
            FAIL("bad real term");
            return Rational(0);
        }
    }

    template <class R, class F> R scoped(const TermPtr& t, F f) {
        std::map<std::string, Rational> rs;
        std::map<std::string, bool> bs;
        for (const auto& [name, bound] : t->bindings) {
            if (bound->sort == Sort::Real)
                rs.emplace(name, real(bound));
            else
                bs.emplace(name, boolean(bound));
        }
        let_reals.push_back(std::move(rs));
        let_bools.push_back(std::move(bs));
        R r = f();
        let_reals.pop_back();
        let_bools.pop_back();
        return r;
    }

    bool chain(const TermPtr& t, bool (*cmp)(const Rational&, const Rational&)) {
        for (size_t i = 0; i + 1 < t->args.size(); ++i)
            if (!cmp(real(t->args[i]), real(t->args[i + 1]))) return false;
        return true;
    }

    bool boolean(const TermPtr& t) {
        switch (t->kind) {
        case TermKind::Const:
            return sign_of(t->value) != 0;
        case TermKind::Var: {
            for (auto it = let_bools.rbegin(); it != let_bools.rend(); ++it) {
                auto f = it->find(t->name);
                if (f != it->end()) return f->second;
            }
            return bools.at(t->name);
        }
        case TermKind::Not:
            return !boolean(t->args[0]);
        case TermKind::And:
            for (const TermPtr& a : t->args)
                if (!boolean(a)) return false;
            return true;
        case TermKind::Or:
            for (const TermPtr& a : t->args)
                if (boolean(a)) return true;
            return false;
        case TermKind::Implies: {
            for (size_t i = 0; i + 1 < t->args.size(); ++i)
                if (!boolean(t->args[i])) return true;
            return boolean(t->args.back());
        }
        case TermKind::Xor: {
            bool r = false;
            for (const TermPtr& a : t->args) r ^= boolean(a);
            return r;
        }
        case TermKind::Ite:
            return boolean(t->args[0]) ? boolean(t->args[1]) : boolean(t->args[2]);
        case TermKind::Lt:
            return chain(t, [](const Rational& a, const Rational& b) { return a < b; });
        case TermKind::Le:
            return chain(t, [](const Rational& a, const Rational& b) { return a <= b; });
        case TermKind::Gt:
            return chain(t, [](const Rational& a, const Rational& b) { return a > b; });
        case TermKind::Ge:
            return chain(t, [](const Rational& a, const Rational& b) { return a >= b; });
        case TermKind::Eq:
            return chain(t, [](const Rational& a, const Rational& b) { return a == b; });
        case TermKind::Distinct: {
            for (size_t i = 0; i < t->args.size(); ++i)
                for (size_t j = i + 1; j < t->args.size(); ++j)
                    if (real(t->args[i]) == real(t->args[j])) return false;
            return true;
        }
        case TermKind::Let:
            return scoped<bool>(t, [&] { return boolean(t->args[0]); });
        default:
            FAIL("bad bool term");
            return false;
        }
    }
};

// CNF satisfiability at a fixed point: declared variables and atoms take
// their evaluated values, definition variables are searched exhaustively
bool cnf_sat_at_point(const Internalized& in, const std::map<std::string, Rational>& reals,
                      const std::map<std::string, bool>& bools) {
    if (in.trivially_false) return false;
    size_t n = in.db.num_vars();
    std::vector<LBool> v(n, LBool::Undef);
    std::map<Var, Rational> point;
    for (const auto& [name, var] : in.arith_names) point[var] = reals.at(name);
    for (size_t b = 0; b < n; ++b) {
        if (const Atom* a = in.db.atom_of(BVar(b))) {
            REQUIRE(a->kind == AtomKind::Poly);
            v[b] = lbool_of(rel_eval(sign_of(a->p.eval(point)), a->rel));
        }
    }
    for (const auto& [name, b] : in.bool_names) v[b] = lbool_of(bools.at(name));
    std::vector<size_t> free;
    for (size_t b = 0; b < n; ++b)
        if (v[b] == LBool::Undef) free.push_back(b);
    REQUIRE(free.size() <= 16);
    for (uint64_t mask = 0; mask < (uint64_t(1) << free.size()); ++mask) {
        for (size_t i = 0; i < free.size(); ++i)
            v[free[i]] = (mask >> i) & 1 ? LBool::True : LBool::False;
        bool ok = true;
        for (const auto& c : in.db.originals())
            ok = ok && evaluate_clause(*c, v) == LBool::True;
        if (ok) return true;
    }
    return false;
}

} // namespace

TEST_CASE("clausification is equisatisfiable at sample points") {
    std::mt19937 rng(77011);
    auto num = [&](int lo, int hi) {
        return int(rng() % uint32_t(hi - lo + 1)) + lo;
    };
    int agree_sat = 0, agree_unsat = 0;
    for (int iter = 0; iter < 200; ++iter) {
        std::ostringstream out;
        out << "(declare-fun x () Real)(declare-fun y () Real)"
            << "(declare-fun p () Bool)(declare-fun q () Bool)";
        std::function<void(int)> poly = [&](int d) {
            switch (num(0, d > 0 ? 5 : 1)) {
            case 0: out << (num(0, 1) ? "x" : "y"); break;
            case 1:
                if (num(0, 3) == 0)
                    out << num(0, 6) << '.' << num(0, 9);
                else
                    out << num(-5, 5);
                break;
            case 2: out << "(+ "; poly(d - 1); out << ' '; poly(d - 1); out << ')'; break;
            case 3: out << "(- "; poly(d - 1); out << ' '; poly(d - 1); out << ')'; break;
            case 4: out << "(* "; poly(d - 1); out << ' '; poly(d - 1); out << ')'; break;
            default: out << "(/ "; poly(d - 1); out << ' ' << num(1, 5) << ')';
            }
        };
        std::function<void(int)> boolean = [&](int d) {
            switch (num(0, d > 0 ? 9 : 3)) {
            case 0: out << "p"; break;
            case 1: out << "q"; break;
            case 2: {
                const char* rel[] = {"<", "<=", ">", ">=", "=", "distinct"};
                out << '(' << rel[num(0, 5)] << ' ';
                poly(2);
                out << ' ';
                poly(2);
                out << ')';
                break;
            }
            case 3: out << (num(0, 1) ? "true" : "false"); break;
            case 4: out << "(not "; boolean(d - 1); out << ')'; break;
            case 5:
            case 6: {
                out << (num(0, 1) ? "(and " : "(or ");
                int k = num(2, 3);
                for (int i = 0; i < k; ++i) {
                    if (i) out << ' ';
                    boolean(d - 1);
                }
                out << ')';
                break;
            }
            case 7: out << "(=> "; boolean(d - 1); out << ' '; boolean(d - 1); out << ')'; break;
            case 8: out << "(xor "; boolean(d - 1); out << ' '; boolean(d - 1); out << ')'; break;
            default:
                out << "(ite ";
                boolean(d - 1);
                out << ' ';
                boolean(d - 1);
                out << ' ';
                boolean(d - 1);
                out << ')';
            }
        };
        int asserts = num(1, 3);
        std::ostringstream script;
        script << out.str();
        out.str("");
        for (int i = 0; i < asserts; ++i) {
            out << "(assert ";
            boolean(3);
            out << ")";
        }
        script << out.str();

        Script s = parse_script(script.str());
        Internalized in = internalize(s);

        for (int pt = 0; pt < 5; ++pt) {
            Evaluator ev;
            ev.reals["x"] = Rational(num(-8, 8)) / Rational(num(1, 4));
            ev.reals["y"] = Rational(num(-8, 8)) / Rational(num(1, 4));
            ev.bools["p"] = num(0, 1) != 0;
            ev.bools["q"] = num(0, 1) != 0;
            bool direct = true;
            for (const Command& c : s.commands)
                if (c.kind == Command::Assert) direct = direct && ev.boolean(c.term);
            bool cnf = cnf_sat_at_point(in, ev.reals, ev.bools);
            REQUIRE(cnf == direct);
            (direct ? agree_sat : agree_unsat)++;
        }
    }
    // both outcomes must actually occur for the check to mean anything
    CHECK(agree_sat > 100);
    CHECK(agree_unsat > 100);
}
