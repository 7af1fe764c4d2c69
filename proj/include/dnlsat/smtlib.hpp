#pragma once

#include "dnlsat/rational.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dnlsat {

struct SourcePos {
    int line = 0, col = 0;
};

// The three error classes the frontend distinguishes. Lexical and grammar
// problems report a position; sort and feature errors do too when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, SourcePos p);
    SourcePos pos;
};

class SortError : public std::runtime_error {
public:
    SortError(const std::string& msg, SourcePos p);
    SourcePos pos;
};

class UnsupportedError : public std::runtime_error {
public:
    UnsupportedError(const std::string& msg, SourcePos p);
    SourcePos pos;
};

enum class Sort : uint8_t { Real, Bool };

enum class TermKind : uint8_t {
    Const,    // rational (sort Real) or truth constant (sort Bool, value 0/1)
    Var,      // declared variable, macro reference, or let-bound name
    Add, Sub, Mul, Div,              // Sub with one argument is negation
    Lt, Le, Gt, Ge, Eq, Distinct,    // n-ary relations over Real
    And, Or, Not, Implies, Xor, Ite, // connectives; Ite only over Bool
    Let,
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    TermKind kind;
    Sort sort = Sort::Real;
    Rational value;                                         // Const
    std::string name;                                       // Var
    std::vector<TermPtr> args;                              // operands; Let: {body}
    std::vector<std::pair<std::string, TermPtr>> bindings;  // Let
    SourcePos pos;
};

struct Command {
    enum Kind { SetLogic, SetInfo, DeclareFun, DefineFun, Assert, CheckSat, GetModel, Exit } kind;
    std::string symbol; // logic name, info keyword, or declared name
    std::string text;   // set-info: raw value text
    Sort sort = Sort::Real;
    TermPtr term; // assert body or define-fun body
    SourcePos pos;
};

struct Script {
    std::vector<Command> commands;
};

// Parses a full script, resolving terms against the declarations seen so
// far. Constant arithmetic (including division) is folded during
// resolution, so syntactically different spellings of one rational
// compare equal structurally.
Script parse_script(const std::string& text);

std::string print_term(const TermPtr& t);
std::string print_script(const Script& s);

// Structural equality ignoring positions; used by the round-trip check.
bool term_equal(const TermPtr& a, const TermPtr& b);
bool script_equal(const Script& a, const Script& b);

} // namespace dnlsat
