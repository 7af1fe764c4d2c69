#include "dnlsat/smtlib.hpp"

#include <cctype>
#include <cstring>
#include <map>
#include <sstream>

namespace dnlsat {

namespace {

std::string at_pos(const std::string& msg, SourcePos p) {
    std::ostringstream out;
    out << "line " << p.line << " col " << p.col << ": " << msg;
    return out.str();
}

} // namespace

ParseError::ParseError(const std::string& msg, SourcePos p)
    : std::runtime_error(at_pos(msg, p)), pos(p) {}
SortError::SortError(const std::string& msg, SourcePos p)
    : std::runtime_error(at_pos(msg, p)), pos(p) {}
UnsupportedError::UnsupportedError(const std::string& msg, SourcePos p)
    : std::runtime_error(at_pos(msg, p)), pos(p) {}

namespace {

enum class Tok : uint8_t { LPar, RPar, Symbol, Numeral, Decimal, Keyword, String, End };

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

bool sym_char(char c) {
    if (std::isalnum(static_cast<unsigned char>(c))) return true;
    return std::strchr("~!@$%^&*_-+=<>.?/", c) != nullptr;
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    Token next() {
        skip_space();
        SourcePos p = pos();
        if (i_ >= s_.size()) return {Tok::End, "", p};
        char c = s_[i_];
        if (c == '(') {
            advance();
            return {Tok::LPar, "(", p};
        }
        if (c == ')') {
            advance();
            return {Tok::RPar, ")", p};
        }
        if (c == '|') {
            advance();
            std::string text;
            while (i_ < s_.size() && s_[i_] != '|') {
                text += s_[i_];
                advance();
            }
            if (i_ >= s_.size()) throw ParseError("unterminated quoted symbol", p);
            advance();
            return {Tok::Symbol, text, p};
        }
        if (c == '"') {
            advance();
            std::string text;
            for (;;) {
                if (i_ >= s_.size()) throw ParseError("unterminated string literal", p);
                if (s_[i_] == '"') {
                    advance();
                    if (i_ < s_.size() && s_[i_] == '"') { // doubled quote escape
                        text += '"';
                        advance();
                        continue;
                    }
                    break;
                }
                text += s_[i_];
                advance();
            }
            return {Tok::String, text, p};
        }
        if (c == ':') {
            advance();
            std::string text = ":";
            while (i_ < s_.size() && sym_char(s_[i_])) {
                text += s_[i_];
                advance();
            }
            if (text.size() == 1) throw ParseError("bare ':'", p);
            return {Tok::Keyword, text, p};
        }
        // leniency shared with most solvers: "-1" is a signed numeral, not
        // a symbol, when the '-' is glued to digits
        bool signed_num = c == '-' && i_ + 1 < s_.size() &&
                          std::isdigit(static_cast<unsigned char>(s_[i_ + 1]));
        if (std::isdigit(static_cast<unsigned char>(c)) || signed_num) {
            std::string text;
            if (signed_num) {
                text += '-';
                advance();
            }
            bool dec = false;
            while (i_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[i_])) ||
                    (!dec && s_[i_] == '.' && i_ + 1 < s_.size() &&
                     std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))))) {
                if (s_[i_] == '.') dec = true;
                text += s_[i_];
                advance();
            }
            if (i_ < s_.size() && sym_char(s_[i_]))
                throw ParseError("malformed numeral", p);
            return {dec ? Tok::Decimal : Tok::Numeral, text, p};
        }
        if (sym_char(c)) {
            std::string text;
            while (i_ < s_.size() && sym_char(s_[i_])) {
                text += s_[i_];
                advance();
            }
            return {Tok::Symbol, text, p};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", p);
    }

private:
    void skip_space() {
        for (;;) {
            while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
            if (i_ < s_.size() && s_[i_] == ';') {
                while (i_ < s_.size() && s_[i_] != '\n') advance();
                continue;
            }
            return;
        }
    }
    void advance() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }
    SourcePos pos() const { return {line_, col_}; }

    const std::string& s_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;
};

struct SExpr {
    bool is_list = false;
    Token tok;
    std::vector<SExpr> items;
    SourcePos pos;
};

class Reader {
public:
    explicit Reader(const std::string& text) : lex_(text) { cur_ = lex_.next(); }

    bool at_end() const { return cur_.kind == Tok::End; }

    SExpr read() {
        if (cur_.kind == Tok::RPar) throw ParseError("unexpected ')'", cur_.pos);
        if (cur_.kind == Tok::LPar) {
            SExpr e;
            e.is_list = true;
            e.pos = cur_.pos;
            shift();
            while (cur_.kind != Tok::RPar) {
                if (cur_.kind == Tok::End) throw ParseError("unclosed '('", e.pos);
                e.items.push_back(read());
            }
            shift();
            return e;
        }
        SExpr e;
        e.tok = cur_;
        e.pos = cur_.pos;
        shift();
        return e;
    }

private:
    void shift() { cur_ = lex_.next(); }
    Lexer lex_;
    Token cur_;
};

bool simple_symbol(const std::string& s) {
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!sym_char(c)) return false;
    return true;
}

void print_symbol(std::ostream& out, const std::string& s) {
    if (simple_symbol(s))
        out << s;
    else
        out << '|' << s << '|';
}

void print_sexpr(std::ostream& out, const SExpr& e) {
    if (e.is_list) {
        out << '(';
        for (size_t i = 0; i < e.items.size(); ++i) {
            if (i) out << ' ';
            print_sexpr(out, e.items[i]);
        }
        out << ')';
        return;
    }
    switch (e.tok.kind) {
    case Tok::String: {
        out << '"';
        for (char c : e.tok.text) {
            out << c;
            if (c == '"') out << c;
        }
        out << '"';
        break;
    }
    case Tok::Symbol:
        print_symbol(out, e.tok.text);
        break;
    default:
        out << e.tok.text;
    }
}

Rational parse_decimal(const std::string& text) {
    size_t dot = text.find('.');
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac = text.size() - dot - 1;
    // base must be explicit: GMP's base 0 reads a leading zero as octal
    return make_rational(Integer(digits, 10), pow_int(Integer(10), frac));
}

TermPtr mk(Term t) { return std::make_shared<const Term>(std::move(t)); }

TermPtr mk_const(const Rational& v, SourcePos p) {
    Term t;
    t.kind = TermKind::Const;
    t.sort = Sort::Real;
    t.value = v;
    t.pos = p;
    return mk(std::move(t));
}

TermPtr mk_bool_const(bool b, SourcePos p) {
    Term t;
    t.kind = TermKind::Const;
    t.sort = Sort::Bool;
    t.value = Rational(b ? 1 : 0);
    t.pos = p;
    return mk(std::move(t));
}

struct OpInfo {
    TermKind kind;
    int min_args, max_args; // -1: unbounded
    bool bool_op;           // argument sort
    bool bool_result;
};

const std::map<std::string, OpInfo>& op_table() {
    static const std::map<std::string, OpInfo> t = {
        {"+", {TermKind::Add, 1, -1, false, false}},
        {"-", {TermKind::Sub, 1, -1, false, false}},
        {"*", {TermKind::Mul, 1, -1, false, false}},
        {"/", {TermKind::Div, 2, -1, false, false}},
        {"<", {TermKind::Lt, 2, -1, false, true}},
        {"<=", {TermKind::Le, 2, -1, false, true}},
        {">", {TermKind::Gt, 2, -1, false, true}},
        {">=", {TermKind::Ge, 2, -1, false, true}},
        {"=", {TermKind::Eq, 2, -1, false, true}},
        {"distinct", {TermKind::Distinct, 2, -1, false, true}},
        {"and", {TermKind::And, 1, -1, true, true}},
        {"or", {TermKind::Or, 1, -1, true, true}},
        {"not", {TermKind::Not, 1, 1, true, true}},
        {"=>", {TermKind::Implies, 2, -1, true, true}},
        {"xor", {TermKind::Xor, 2, -1, true, true}},
    };
    return t;
}

class Builder {
public:
    Script run(const std::string& text) {
        Reader rd(text);
        Script script;
        while (!rd.at_end()) {
            SExpr e = rd.read();
            script.commands.push_back(command(e));
        }
        return script;
    }

private:
    std::map<std::string, Sort> globals_;
    std::vector<std::map<std::string, Sort>> scopes_;
    bool logic_seen_ = false;

    static const std::string& sym(const SExpr& e, const char* what) {
        if (e.is_list || e.tok.kind != Tok::Symbol)
            throw ParseError(std::string("expected ") + what, e.pos);
        return e.tok.text;
    }

    Sort sort_of(const SExpr& e) {
        const std::string& s = sym(e, "a sort");
        if (s == "Real") return Sort::Real;
        if (s == "Bool") return Sort::Bool;
        throw SortError("unsupported sort '" + s + "'", e.pos);
    }

    Command command(const SExpr& e) {
        if (!e.is_list || e.items.empty() || e.items[0].is_list ||
            e.items[0].tok.kind != Tok::Symbol)
            throw ParseError("expected a command", e.pos);
        const std::string& head = e.items[0].tok.text;
        Command c;
        c.pos = e.pos;
        auto want = [&](size_t n) {
            if (e.items.size() != n + 1)
                throw ParseError("'" + head + "' expects " + std::to_string(n) + " arguments",
                                 e.pos);
        };
        if (head == "set-logic") {
            want(1);
            c.kind = Command::SetLogic;
            c.symbol = sym(e.items[1], "a logic name");
            if (logic_seen_) throw ParseError("repeated set-logic", e.pos);
            if (c.symbol != "QF_NRA" && c.symbol != "QF_LRA")
                throw UnsupportedError("logic '" + c.symbol + "' is not supported", e.items[1].pos);
            logic_seen_ = true;
            return c;
        }
        if (head == "set-info") {
            if (e.items.size() < 2 || e.items.size() > 3)
                throw ParseError("'set-info' expects a keyword and one value", e.pos);
            if (e.items[1].is_list || e.items[1].tok.kind != Tok::Keyword)
                throw ParseError("'set-info' expects a keyword", e.items[1].pos);
            c.kind = Command::SetInfo;
            c.symbol = e.items[1].tok.text;
            if (e.items.size() == 3) {
                std::ostringstream out;
                print_sexpr(out, e.items[2]);
                c.text = out.str();
            }
            return c;
        }
        if (head == "declare-fun" || head == "declare-const") {
            bool is_const = head == "declare-const";
            want(is_const ? 2 : 3);
            c.kind = Command::DeclareFun;
            c.symbol = sym(e.items[1], "a name");
            size_t sort_at = 2;
            if (!is_const) {
                if (!e.items[2].is_list)
                    throw ParseError("'declare-fun' expects an argument sort list", e.items[2].pos);
                if (!e.items[2].items.empty())
                    throw UnsupportedError("uninterpreted functions with arguments", e.items[2].pos);
                sort_at = 3;
            }
            c.sort = sort_of(e.items[sort_at]);
            declare(c.symbol, c.sort, e.items[1].pos);
            return c;
        }
        if (head == "define-fun") {
            want(4);
            c.kind = Command::DefineFun;
            c.symbol = sym(e.items[1], "a name");
            if (!e.items[2].is_list)
                throw ParseError("'define-fun' expects an argument list", e.items[2].pos);
            if (!e.items[2].items.empty())
                throw UnsupportedError("define-fun with arguments", e.items[2].pos);
            c.sort = sort_of(e.items[3]);
            c.term = resolve(e.items[4]);
            if (c.term->sort != c.sort)
                throw SortError("define-fun body sort does not match", e.items[4].pos);
            declare(c.symbol, c.sort, e.items[1].pos);
            return c;
        }
        if (head == "assert") {
            want(1);
            c.kind = Command::Assert;
            c.term = resolve(e.items[1]);
            if (c.term->sort != Sort::Bool)
                throw SortError("assert expects a Bool term", e.items[1].pos);
            return c;
        }
        if (head == "check-sat") {
            want(0);
            c.kind = Command::CheckSat;
            return c;
        }
        if (head == "get-model") {
            want(0);
            c.kind = Command::GetModel;
            return c;
        }
        if (head == "exit") {
            want(0);
            c.kind = Command::Exit;
            return c;
        }
        throw UnsupportedError("command '" + head + "' is not supported", e.pos);
    }

    void declare(const std::string& name, Sort sort, SourcePos p) {
        if (!globals_.emplace(name, sort).second)
            throw ParseError("'" + name + "' is already declared", p);
    }

    const Sort* lookup(const std::string& name) const {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto f = it->find(name);
            if (f != it->end()) return &f->second;
        }
        auto f = globals_.find(name);
        return f == globals_.end() ? nullptr : &f->second;
    }

    TermPtr resolve(const SExpr& e) {
        if (!e.is_list) {
            switch (e.tok.kind) {
            case Tok::Numeral:
                return mk_const(Rational(Integer(e.tok.text, 10)), e.pos);
            case Tok::Decimal:
                return mk_const(parse_decimal(e.tok.text), e.pos);
            case Tok::Symbol: {
                const std::string& s = e.tok.text;
                if (s == "true") return mk_bool_const(true, e.pos);
                if (s == "false") return mk_bool_const(false, e.pos);
                const Sort* sort = lookup(s);
                if (!sort) throw SortError("undeclared symbol '" + s + "'", e.pos);
                Term t;
                t.kind = TermKind::Var;
                t.sort = *sort;
                t.name = s;
                t.pos = e.pos;
                return mk(std::move(t));
            }
            default:
                throw ParseError("unexpected token in term", e.pos);
            }
        }
        if (e.items.empty()) throw ParseError("empty application", e.pos);
        if (e.items[0].is_list || e.items[0].tok.kind != Tok::Symbol)
            throw ParseError("expected an operator", e.items[0].pos);
        const std::string& head = e.items[0].tok.text;

        if (head == "let") return resolve_let(e);
        if (head == "ite") return resolve_ite(e);

        auto op = op_table().find(head);
        if (op == op_table().end())
            throw UnsupportedError("unknown operator '" + head + "'", e.items[0].pos);
        const OpInfo& info = op->second;
        int argc = static_cast<int>(e.items.size()) - 1;
        if (argc < info.min_args || (info.max_args >= 0 && argc > info.max_args))
            throw ParseError("wrong number of arguments for '" + head + "'", e.pos);

        Term t;
        t.kind = info.kind;
        t.sort = info.bool_result ? Sort::Bool : Sort::Real;
        t.pos = e.pos;
        Sort want = info.bool_op ? Sort::Bool : Sort::Real;
        for (size_t i = 1; i < e.items.size(); ++i) {
            TermPtr a = resolve(e.items[i]);
            if (a->sort != want)
                throw SortError("'" + head + "' expects " +
                                    (want == Sort::Real ? "Real" : "Bool") + " arguments",
                                e.items[i].pos);
            t.args.push_back(std::move(a));
        }

        if (t.kind == TermKind::Div) {
            for (size_t i = 1; i < t.args.size(); ++i) {
                const TermPtr& d = t.args[i];
                if (d->kind != TermKind::Const)
                    throw UnsupportedError("division by a non-constant term", d->pos);
                if (sign_of(d->value) == 0) throw SortError("division by zero", d->pos);
            }
        }
        return fold_constants(std::move(t));
    }

    // Arithmetic over constants collapses to one constant so that all
    // spellings of a rational share one representation.
    TermPtr fold_constants(Term t) {
        bool arith = t.kind == TermKind::Add || t.kind == TermKind::Sub ||
                     t.kind == TermKind::Mul || t.kind == TermKind::Div;
        if (arith) {
            bool all_const = true;
            for (const TermPtr& a : t.args)
                all_const = all_const && a->kind == TermKind::Const;
            if (all_const) {
                Rational v = t.args[0]->value;
                if (t.kind == TermKind::Sub && t.args.size() == 1) v = -v;
                for (size_t i = 1; i < t.args.size(); ++i) {
                    const Rational& w = t.args[i]->value;
                    switch (t.kind) {
                    case TermKind::Add: v += w; break;
                    case TermKind::Sub: v -= w; break;
                    case TermKind::Mul: v *= w; break;
                    default: v /= w; break;
                    }
                }
                return mk_const(v, t.pos);
            }
        }
        return mk(std::move(t));
    }

    TermPtr resolve_let(const SExpr& e) {
        if (e.items.size() != 3 || !e.items[1].is_list)
            throw ParseError("'let' expects a binding list and a body", e.pos);
        Term t;
        t.kind = TermKind::Let;
        t.pos = e.pos;
        std::map<std::string, Sort> scope;
        for (const SExpr& b : e.items[1].items) {
            if (!b.is_list || b.items.size() != 2)
                throw ParseError("'let' binding must be (name term)", b.pos);
            const std::string& name = sym(b.items[0], "a binding name");
            TermPtr bound = resolve(b.items[1]); // outer scope: parallel let
            if (!scope.emplace(name, bound->sort).second)
                throw ParseError("duplicate let binding '" + name + "'", b.pos);
            t.bindings.emplace_back(name, std::move(bound));
        }
        scopes_.push_back(std::move(scope));
        TermPtr body = resolve(e.items[2]);
        scopes_.pop_back();
        t.sort = body->sort;
        t.args.push_back(std::move(body));
        return mk(std::move(t));
    }

    TermPtr resolve_ite(const SExpr& e) {
        if (e.items.size() != 4) throw ParseError("'ite' expects three arguments", e.pos);
        TermPtr c = resolve(e.items[1]);
        if (c->sort != Sort::Bool) throw SortError("'ite' condition must be Bool", e.items[1].pos);
        TermPtr a = resolve(e.items[2]), b = resolve(e.items[3]);
        if (a->sort == Sort::Real || b->sort == Sort::Real)
            throw UnsupportedError("'ite' over Real terms", e.pos);
        Term t;
        t.kind = TermKind::Ite;
        t.sort = Sort::Bool;
        t.pos = e.pos;
        t.args = {std::move(c), std::move(a), std::move(b)};
        return mk(std::move(t));
    }
};

const char* op_name(TermKind k) {
    switch (k) {
    case TermKind::Add: return "+";
    case TermKind::Sub: return "-";
    case TermKind::Mul: return "*";
    case TermKind::Div: return "/";
    case TermKind::Lt: return "<";
    case TermKind::Le: return "<=";
    case TermKind::Gt: return ">";
    case TermKind::Ge: return ">=";
    case TermKind::Eq: return "=";
    case TermKind::Distinct: return "distinct";
    case TermKind::And: return "and";
    case TermKind::Or: return "or";
    case TermKind::Not: return "not";
    case TermKind::Implies: return "=>";
    case TermKind::Xor: return "xor";
    case TermKind::Ite: return "ite";
    default: return "?";
    }
}

void print_rational(std::ostream& out, const Rational& q) {
    bool neg = sign_of(q) < 0;
    Rational a = neg ? Rational(-q) : q;
    if (neg) out << "(- ";
    if (a.get_den() == 1)
        out << a.get_num().get_str();
    else
        out << "(/ " << a.get_num().get_str() << ' ' << a.get_den().get_str() << ')';
    if (neg) out << ')';
}

void print_term_to(std::ostream& out, const TermPtr& t) {
    switch (t->kind) {
    case TermKind::Const:
        if (t->sort == Sort::Bool)
            out << (sign_of(t->value) != 0 ? "true" : "false");
        else
            print_rational(out, t->value);
        return;
    case TermKind::Var:
        print_symbol(out, t->name);
        return;
    case TermKind::Let:
        out << "(let (";
        for (size_t i = 0; i < t->bindings.size(); ++i) {
            if (i) out << ' ';
            out << '(';
            print_symbol(out, t->bindings[i].first);
            out << ' ';
            print_term_to(out, t->bindings[i].second);
            out << ')';
        }
        out << ") ";
        print_term_to(out, t->args[0]);
        out << ')';
        return;
    default:
        out << '(' << op_name(t->kind);
        for (const TermPtr& a : t->args) {
            out << ' ';
            print_term_to(out, a);
        }
        out << ')';
    }
}

} // namespace

Script parse_script(const std::string& text) { return Builder().run(text); }

std::string print_term(const TermPtr& t) {
    std::ostringstream out;
    print_term_to(out, t);
    return out.str();
}

std::string print_script(const Script& s) {
    std::ostringstream out;
    for (const Command& c : s.commands) {
        switch (c.kind) {
        case Command::SetLogic:
            out << "(set-logic " << c.symbol << ")";
            break;
        case Command::SetInfo:
            out << "(set-info " << c.symbol;
            if (!c.text.empty()) out << ' ' << c.text;
            out << ")";
            break;
        case Command::DeclareFun:
            out << "(declare-fun ";
            print_symbol(out, c.symbol);
            out << " () " << (c.sort == Sort::Real ? "Real" : "Bool") << ")";
            break;
        case Command::DefineFun:
            out << "(define-fun ";
            print_symbol(out, c.symbol);
            out << " () " << (c.sort == Sort::Real ? "Real" : "Bool") << ' '
                << print_term(c.term) << ")";
            break;
        case Command::Assert:
            out << "(assert " << print_term(c.term) << ")";
            break;
        case Command::CheckSat:
            out << "(check-sat)";
            break;
        case Command::GetModel:
            out << "(get-model)";
            break;
        case Command::Exit:
            out << "(exit)";
            break;
        }
        out << '\n';
    }
    return out.str();
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a->kind != b->kind || a->sort != b->sort) return false;
    if (a->kind == TermKind::Const) return a->value == b->value;
    if (a->kind == TermKind::Var) return a->name == b->name;
    if (a->args.size() != b->args.size() || a->bindings.size() != b->bindings.size())
        return false;
    for (size_t i = 0; i < a->bindings.size(); ++i) {
        if (a->bindings[i].first != b->bindings[i].first) return false;
        if (!term_equal(a->bindings[i].second, b->bindings[i].second)) return false;
    }
    for (size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
    return true;
}

bool script_equal(const Script& a, const Script& b) {
    if (a.commands.size() != b.commands.size()) return false;
    for (size_t i = 0; i < a.commands.size(); ++i) {
        const Command &x = a.commands[i], &y = b.commands[i];
        if (x.kind != y.kind || x.symbol != y.symbol || x.text != y.text) return false;
        if (x.kind == Command::DeclareFun || x.kind == Command::DefineFun)
            if (x.sort != y.sort) return false;
        bool xt = x.term != nullptr, yt = y.term != nullptr;
        if (xt != yt) return false;
        if (xt && !term_equal(x.term, y.term)) return false;
    }
    return true;
}

} // namespace dnlsat
