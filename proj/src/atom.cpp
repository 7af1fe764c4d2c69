#include "dnlsat/atom.hpp"

#include <algorithm>
#include <sstream>

namespace dnlsat {

std::vector<Var> Atom::vars() const {
    std::vector<Var> vs = p.vars();
    if (kind == AtomKind::Root && rvar != kNoVar &&
        std::find(vs.begin(), vs.end(), rvar) == vs.end()) {
        vs.push_back(rvar);
        std::sort(vs.begin(), vs.end());
    }
    return vs;
}

size_t Atom::hash() const {
    size_t h = p.hash();
    h = h * 31 + static_cast<size_t>(rel);
    h = h * 31 + static_cast<size_t>(kind);
    if (kind == AtomKind::Root) {
        h = h * 31 + rvar;
        h = h * 31 + k;
    }
    return h;
}

bool Atom::operator==(const Atom& o) const {
    if (kind != o.kind || rel != o.rel) return false;
    if (kind == AtomKind::Root && (rvar != o.rvar || k != o.k)) return false;
    return p.cmp(o.p) == 0;
}

std::string Atom::to_string() const {
    std::ostringstream out;
    if (kind == AtomKind::Poly) {
        out << p.to_string() << ' ' << rel_name(rel) << " 0";
    } else {
        out << 'x' << rvar << ' ' << rel_name(rel) << " root_" << k << '('
            << p.to_string() << ')';
    }
    return out.str();
}

LBool evaluate_atom(const Atom& at, const Assignment& a) {
    if (at.kind == AtomKind::Poly) {
        if (!a.covers(at.p)) return LBool::Undef;
        return lbool_of(rel_eval(sign_eval(at.p, a), at.rel));
    }
    if (!a.has(at.rvar) || !a.covers_except(at.p, at.rvar)) return LBool::Undef;
    APoly ap = eval_partial(at.p, at.rvar, a);
    if (ap.is_zero() || ap.degree() == 0) return LBool::False; // no indexed roots
    std::vector<RealAlgebraic> roots = isolate_roots(ap);
    if (roots.size() < at.k) return LBool::False;
    int c = RealAlgebraic::compare(a.value(at.rvar), roots[at.k - 1]);
    return lbool_of(rel_eval(c, at.rel));
}

} // namespace dnlsat
