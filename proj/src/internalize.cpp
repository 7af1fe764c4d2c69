#include "dnlsat/internalize.hpp"

#include "dnlsat/error.hpp"

#include <map>
#include <variant>

namespace dnlsat {

namespace {

// A boolean value during clausification: a known constant or a literal.
struct BVal {
    LBool konst = LBool::Undef;
    Literal lit{};

    static BVal of(bool b) { return {b ? LBool::True : LBool::False, Literal{}}; }
    static BVal of(Literal l) { return {LBool::Undef, l}; }
    bool is_const() const { return konst != LBool::Undef; }
};

BVal bval_neg(const BVal& v) {
    if (v.is_const()) return BVal::of(v.konst == LBool::False);
    return BVal::of(~v.lit);
}

using LetVal = std::variant<Polynomial, BVal>;

class Clausifier {
public:
    Internalized run(const Script& s) {
        for (const Command& c : s.commands) {
            switch (c.kind) {
            case Command::DeclareFun:
                if (c.sort == Sort::Real) {
                    Var v = Var(out_.arith_names.size());
                    arith_vars_.emplace(c.symbol, v);
                    out_.arith_names.emplace_back(c.symbol, v);
                } else {
                    BVar b = out_.db.new_bool_var();
                    bool_vars_.emplace(c.symbol, b);
                    out_.bool_names.emplace_back(c.symbol, b);
                }
                break;
            case Command::DefineFun:
                macro_bodies_.emplace(c.symbol, c.term);
                break;
            case Command::Assert:
                assert_term(c.term);
                break;
            case Command::CheckSat:
                out_.has_check_sat = true;
                break;
            default:
                break;
            }
            if (c.kind == Command::Exit) break;
        }
        return std::move(out_);
    }

private:
    Internalized out_;
    std::map<std::string, Var> arith_vars_;
    std::map<std::string, BVar> bool_vars_;
    std::map<std::string, TermPtr> macro_bodies_;
    std::map<std::string, Polynomial> real_macro_cache_;
    std::map<std::string, BVal> bool_macro_cache_;
    std::vector<std::map<std::string, LetVal>> lets_;

    const LetVal* let_lookup(const std::string& name) const {
        for (auto it = lets_.rbegin(); it != lets_.rend(); ++it) {
            auto f = it->find(name);
            if (f != it->end()) return &f->second;
        }
        return nullptr;
    }

    // Top level: 'and' splits, 'or' emits one clause, 'let' is transparent.
    void assert_term(const TermPtr& t) {
        switch (t->kind) {
        case TermKind::And:
            for (const TermPtr& a : t->args) assert_term(a);
            return;
        case TermKind::Or: {
            std::vector<BVal> parts;
            for (const TermPtr& a : t->args) parts.push_back(bval(a));
            emit_clause(parts);
            return;
        }
        case TermKind::Implies: {
            std::vector<BVal> parts;
            for (size_t i = 0; i + 1 < t->args.size(); ++i)
                parts.push_back(bval_neg(bval(t->args[i])));
            parts.push_back(bval(t->args.back()));
            emit_clause(parts);
            return;
        }
        case TermKind::Let: {
            push_let(t);
            assert_term(t->args[0]);
            lets_.pop_back();
            return;
        }
        default:
            emit_clause({bval(t)});
        }
    }

    void push_let(const TermPtr& t) {
        std::map<std::string, LetVal> scope;
        for (const auto& [name, bound] : t->bindings) {
            if (bound->sort == Sort::Real)
                scope.emplace(name, poly(bound));
            else
                scope.emplace(name, bval(bound));
        }
        lets_.push_back(std::move(scope));
    }

    void emit_clause(const std::vector<BVal>& parts) {
        std::vector<Literal> lits;
        for (const BVal& v : parts) {
            if (v.konst == LBool::True) return; // satisfied outright
            if (v.konst == LBool::False) continue;
            lits.push_back(v.lit);
        }
        if (lits.empty()) {
            out_.trivially_false = true;
            return;
        }
        out_.db.add_clause(std::move(lits), false);
    }

    Polynomial poly(const TermPtr& t) {
        switch (t->kind) {
        case TermKind::Const:
            return Polynomial(t->value);
        case TermKind::Var: {
            if (const LetVal* lv = let_lookup(t->name)) return std::get<Polynomial>(*lv);
            auto v = arith_vars_.find(t->name);
            if (v != arith_vars_.end()) return Polynomial::variable(v->second);
            return real_macro(t->name);
        }
        case TermKind::Add: {
            Polynomial r;
            for (const TermPtr& a : t->args) r += poly(a);
            return r;
        }
        case TermKind::Sub: {
            if (t->args.size() == 1) return -poly(t->args[0]);
            Polynomial r = poly(t->args[0]);
            for (size_t i = 1; i < t->args.size(); ++i) r -= poly(t->args[i]);
            return r;
        }
        case TermKind::Mul: {
            Polynomial r(Rational(1));
            for (const TermPtr& a : t->args) r *= poly(a);
            return r;
        }
        case TermKind::Div: {
            // the parser only admits constant nonzero divisors
            Polynomial r = poly(t->args[0]);
            Rational scale(1);
            for (size_t i = 1; i < t->args.size(); ++i) scale *= t->args[i]->value;
            return r * Polynomial(Rational(1) / scale);
        }
        case TermKind::Let: {
            push_let(t);
            Polynomial r = poly(t->args[0]);
            lets_.pop_back();
            return r;
        }
        default:
            throw InternalError("non-arithmetic term in polynomial context");
        }
    }

    const Polynomial& real_macro(const std::string& name) {
        auto c = real_macro_cache_.find(name);
        if (c != real_macro_cache_.end()) return c->second;
        std::vector<std::map<std::string, LetVal>> saved;
        saved.swap(lets_); // macro bodies close over declarations only
        Polynomial p = poly(macro_bodies_.at(name));
        saved.swap(lets_);
        return real_macro_cache_.emplace(name, std::move(p)).first->second;
    }

    BVal bool_macro(const std::string& name) {
        auto c = bool_macro_cache_.find(name);
        if (c != bool_macro_cache_.end()) return c->second;
        std::vector<std::map<std::string, LetVal>> saved;
        saved.swap(lets_);
        BVal v = bval(macro_bodies_.at(name));
        saved.swap(lets_);
        return bool_macro_cache_.emplace(name, v).first->second;
    }

    BVal bval(const TermPtr& t) {
        switch (t->kind) {
        case TermKind::Const:
            return BVal::of(sign_of(t->value) != 0);
        case TermKind::Var: {
            if (const LetVal* lv = let_lookup(t->name)) return std::get<BVal>(*lv);
            auto v = bool_vars_.find(t->name);
            if (v != bool_vars_.end()) return BVal::of(Literal(v->second, false));
            return bool_macro(t->name);
        }
        case TermKind::Not:
            return bval_neg(bval(t->args[0]));
        case TermKind::And:
        case TermKind::Or: {
            bool is_and = t->kind == TermKind::And;
            std::vector<Literal> ls;
            for (const TermPtr& a : t->args) {
                BVal v = bval(a);
                if (v.is_const()) {
                    bool b = v.konst == LBool::True;
                    if (b != is_and) return BVal::of(b); // absorbing constant
                    continue;                            // neutral constant
                }
                ls.push_back(v.lit);
            }
            if (ls.empty()) return BVal::of(is_and);
            if (ls.size() == 1) return BVal::of(ls[0]);
            return is_and ? define_and(ls) : define_or(ls);
        }
        case TermKind::Implies: {
            std::vector<Literal> ls;
            for (size_t i = 0; i < t->args.size(); ++i) {
                BVal v = bval(t->args[i]);
                if (i + 1 < t->args.size()) v = bval_neg(v);
                if (v.is_const()) {
                    if (v.konst == LBool::True) return BVal::of(true);
                    continue;
                }
                ls.push_back(v.lit);
            }
            if (ls.empty()) return BVal::of(false);
            if (ls.size() == 1) return BVal::of(ls[0]);
            return define_or(ls);
        }
        case TermKind::Xor: {
            BVal acc = bval(t->args[0]);
            for (size_t i = 1; i < t->args.size(); ++i) acc = xor_pair(acc, bval(t->args[i]));
            return acc;
        }
        case TermKind::Ite:
            return ite3(bval(t->args[0]), bval(t->args[1]), bval(t->args[2]));
        case TermKind::Lt:
        case TermKind::Le:
        case TermKind::Gt:
        case TermKind::Ge:
        case TermKind::Eq: {
            Rel rel = t->kind == TermKind::Lt   ? Rel::LT
                      : t->kind == TermKind::Le ? Rel::LE
                      : t->kind == TermKind::Gt ? Rel::GT
                      : t->kind == TermKind::Ge ? Rel::GE
                                                : Rel::EQ;
            std::vector<BVal> pairs;
            for (size_t i = 0; i + 1 < t->args.size(); ++i)
                pairs.push_back(atom_bval(poly(t->args[i]) - poly(t->args[i + 1]), rel));
            return conjoin(pairs);
        }
        case TermKind::Distinct: {
            std::vector<BVal> pairs;
            std::vector<Polynomial> ps;
            for (const TermPtr& a : t->args) ps.push_back(poly(a));
            for (size_t i = 0; i < ps.size(); ++i)
                for (size_t j = i + 1; j < ps.size(); ++j)
                    pairs.push_back(atom_bval(ps[i] - ps[j], Rel::NEQ));
            return conjoin(pairs);
        }
        case TermKind::Let: {
            push_let(t);
            BVal r = bval(t->args[0]);
            lets_.pop_back();
            return r;
        }
        default:
            throw InternalError("non-boolean term in clause context");
        }
    }

    BVal atom_bval(Polynomial p, Rel rel) {
        if (p.is_constant()) return BVal::of(rel_eval(sign_of(p.constant_value()), rel));
        return BVal::of(Literal(out_.db.atom_var(Atom::poly(std::move(p), rel)), false));
    }

    BVal conjoin(const std::vector<BVal>& parts) {
        std::vector<Literal> ls;
        for (const BVal& v : parts) {
            if (v.konst == LBool::False) return BVal::of(false);
            if (v.konst == LBool::True) continue;
            ls.push_back(v.lit);
        }
        if (ls.empty()) return BVal::of(true);
        if (ls.size() == 1) return BVal::of(ls[0]);
        return define_and(ls);
    }

    BVal define_and(const std::vector<Literal>& ls) {
        Literal t(out_.db.new_bool_var(), false);
        std::vector<Literal> big{t};
        for (Literal l : ls) {
            out_.db.add_clause({~t, l}, false);
            big.push_back(~l);
        }
        out_.db.add_clause(std::move(big), false);
        return BVal::of(t);
    }

    BVal define_or(const std::vector<Literal>& ls) {
        Literal t(out_.db.new_bool_var(), false);
        std::vector<Literal> big{~t};
        for (Literal l : ls) {
            out_.db.add_clause({t, ~l}, false);
            big.push_back(l);
        }
        out_.db.add_clause(std::move(big), false);
        return BVal::of(t);
    }

    BVal xor_pair(const BVal& a, const BVal& b) {
        if (a.is_const()) return a.konst == LBool::True ? bval_neg(b) : b;
        if (b.is_const()) return b.konst == LBool::True ? bval_neg(a) : a;
        Literal t(out_.db.new_bool_var(), false);
        out_.db.add_clause({~t, a.lit, b.lit}, false);
        out_.db.add_clause({~t, ~a.lit, ~b.lit}, false);
        out_.db.add_clause({t, ~a.lit, b.lit}, false);
        out_.db.add_clause({t, a.lit, ~b.lit}, false);
        return BVal::of(t);
    }

    BVal ite3(const BVal& c, const BVal& a, const BVal& b) {
        if (c.is_const()) return c.konst == LBool::True ? a : b;
        if (a.is_const() && b.is_const()) {
            if (a.konst == b.konst) return a;
            // ite(c, true, false) = c and its mirror
            return a.konst == LBool::True ? BVal::of(c.lit) : bval_neg(c);
        }
        if (a.is_const())
            return a.konst == LBool::True ? define_or({c.lit, b.lit})
                                          : define_and({~c.lit, b.lit});
        if (b.is_const())
            return b.konst == LBool::True ? define_or({~c.lit, a.lit})
                                          : define_and({c.lit, a.lit});
        Literal t(out_.db.new_bool_var(), false);
        out_.db.add_clause({~t, ~c.lit, a.lit}, false);
        out_.db.add_clause({~t, c.lit, b.lit}, false);
        out_.db.add_clause({t, ~c.lit, ~a.lit}, false);
        out_.db.add_clause({t, c.lit, ~b.lit}, false);
        return BVal::of(t);
    }
};

} // namespace

Internalized internalize(const Script& s) { return Clausifier().run(s); }

} // namespace dnlsat
