#include "strata/print.hpp"

#include <sstream>

namespace strata {

std::string print(const TermPtr& t, Dialect d) {
    switch (t->kind) {
        case TermKind::Vbar:
            return "Vbar";
        case TermKind::Pair:
            return "P(" + print(t->left, d) + ", " + print(t->right, d) + ")";
        case TermKind::SetVar:
        case TermKind::ClassVar:
            if (d == Dialect::Tst) return t->name + "^" + std::to_string(t->type_index);
            return t->name;
    }
    return "?";
}

namespace {

int prec(Conn k) {
    switch (k) {
        case Conn::Iff: return 1;
        case Conn::Implies: return 2;
        case Conn::Or: return 3;
        case Conn::And: return 4;
        default: return 6;
    }
}

const char* conn_sym(Conn k) {
    switch (k) {
        case Conn::Iff: return " <-> ";
        case Conn::Implies: return " -> ";
        case Conn::Or: return " | ";
        case Conn::And: return " & ";
        default: return "?";
    }
}

// `tail` is true when only closing parentheses (or end of input) follow,
// so an unparenthesized binder cannot swallow later tokens.
void emit(std::ostream& os, const FormulaPtr& f, Dialect d, int min_level, bool tail) {
    switch (f->kind) {
        case Conn::Member:
        case Conn::Equal: {
            std::string idx =
                d == Dialect::Tst ? "^" + std::to_string(f->lhs->type_index) : "";
            os << print(f->lhs, d) << (f->kind == Conn::Member ? " in" : " =") << idx << " "
               << print(f->rhs, d);
            return;
        }
        case Conn::Not:
            os << "~(";
            emit(os, f->a, d, 0, true);
            os << ")";
            return;
        case Conn::Forall:
        case Conn::Exists: {
            if (!tail) {
                os << "(";
                emit(os, f, d, 0, true);
                os << ")";
                return;
            }
            os << (f->kind == Conn::Forall ? "forall " : "exists ") << f->var;
            if (d == Dialect::Tst) os << "^" << f->var_type;
            os << ". ";
            if (!is_atom(*f->a) && f->a->kind != Conn::Not && !is_quantifier(*f->a)) {
                os << "(";
                emit(os, f->a, d, 0, true);
                os << ")";
            } else {
                emit(os, f->a, d, 0, true);
            }
            return;
        }
        default: {
            int p = prec(f->kind);
            if (p < min_level) {
                os << "(";
                emit(os, f, d, 0, true);
                os << ")";
                return;
            }
            // '->' is right-associative; the rest associate to the left.
            bool right_assoc = f->kind == Conn::Implies;
            int left_min = right_assoc ? p + 1 : p;
            int right_min = right_assoc ? p : p + 1;
            emit(os, f->a, d, left_min, false);
            os << conn_sym(f->kind);
            emit(os, f->b, d, right_min, tail);
            return;
        }
    }
}

}  // namespace

std::string print(const FormulaPtr& f, Dialect d) {
    std::ostringstream os;
    emit(os, f, d, 0, true);
    return os.str();
}

}  // namespace strata
