#pragma once

namespace dnlsat {

// Relation of a constraint `p rel 0`, or of a root bound `v rel root_k(p)`.
enum class Rel { LT, LE, EQ, NEQ, GE, GT };

inline Rel rel_negate(Rel r) {
    switch (r) {
    case Rel::LT: return Rel::GE;
    case Rel::LE: return Rel::GT;
    case Rel::EQ: return Rel::NEQ;
    case Rel::NEQ: return Rel::EQ;
    case Rel::GE: return Rel::LT;
    case Rel::GT: return Rel::LE;
    }
    return Rel::EQ;
}

// Mirror under negation of the left-hand side (p -> -p).
inline Rel rel_flip(Rel r) {
    switch (r) {
    case Rel::LT: return Rel::GT;
    case Rel::LE: return Rel::GE;
    case Rel::GT: return Rel::LT;
    case Rel::GE: return Rel::LE;
    default: return r;
    }
}

inline bool rel_eval(int sign, Rel r) {
    switch (r) {
    case Rel::LT: return sign < 0;
    case Rel::LE: return sign <= 0;
    case Rel::EQ: return sign == 0;
    case Rel::NEQ: return sign != 0;
    case Rel::GE: return sign >= 0;
    case Rel::GT: return sign > 0;
    }
    return false;
}

inline const char* rel_name(Rel r) {
    switch (r) {
    case Rel::LT: return "<";
    case Rel::LE: return "<=";
    case Rel::EQ: return "=";
    case Rel::NEQ: return "!=";
    case Rel::GE: return ">=";
    case Rel::GT: return ">";
    }
    return "?";
}

} // namespace dnlsat
