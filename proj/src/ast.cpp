#include "strata/ast.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace strata {

std::string to_string(Dialect d) {
    switch (d) {
        case Dialect::Plain: return "plain";
        case Dialect::Tst: return "tst";
        case Dialect::Lstar: return "lstar";
    }
    return "?";
}

TermPtr mk_set_var(std::string name, int type_index) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::SetVar;
    t->name = std::move(name);
    t->type_index = type_index;
    return t;
}

TermPtr mk_class_var(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::ClassVar;
    t->name = std::move(name);
    return t;
}

TermPtr mk_vbar() {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Vbar;
    return t;
}

TermPtr mk_pair(TermPtr left, TermPtr right) {
    auto t = std::make_shared<Term>();
    t->kind = TermKind::Pair;
    t->left = std::move(left);
    t->right = std::move(right);
    return t;
}

static FormulaPtr mk_atom(Conn kind, TermPtr lhs, TermPtr rhs) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->lhs = std::move(lhs);
    f->rhs = std::move(rhs);
    return f;
}

FormulaPtr mk_member(TermPtr lhs, TermPtr rhs) { return mk_atom(Conn::Member, std::move(lhs), std::move(rhs)); }
FormulaPtr mk_equal(TermPtr lhs, TermPtr rhs) { return mk_atom(Conn::Equal, std::move(lhs), std::move(rhs)); }

static FormulaPtr mk_binary(Conn kind, FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->a = std::move(a);
    f->b = std::move(b);
    return f;
}

FormulaPtr mk_not(FormulaPtr a) {
    auto f = std::make_shared<Formula>();
    f->kind = Conn::Not;
    f->a = std::move(a);
    return f;
}

FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) { return mk_binary(Conn::And, std::move(a), std::move(b)); }
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) { return mk_binary(Conn::Or, std::move(a), std::move(b)); }
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) { return mk_binary(Conn::Implies, std::move(a), std::move(b)); }
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b) { return mk_binary(Conn::Iff, std::move(a), std::move(b)); }

static FormulaPtr mk_quant(Conn kind, std::string var, FormulaPtr body, TermKind var_kind, int var_type) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->var = std::move(var);
    f->var_kind = var_kind;
    f->var_type = var_type;
    f->a = std::move(body);
    return f;
}

FormulaPtr mk_forall(std::string var, FormulaPtr body, TermKind var_kind, int var_type) {
    return mk_quant(Conn::Forall, std::move(var), std::move(body), var_kind, var_type);
}

FormulaPtr mk_exists(std::string var, FormulaPtr body, TermKind var_kind, int var_type) {
    return mk_quant(Conn::Exists, std::move(var), std::move(body), var_kind, var_type);
}

bool is_atom(const Formula& f) { return f.kind == Conn::Member || f.kind == Conn::Equal; }
bool is_quantifier(const Formula& f) { return f.kind == Conn::Forall || f.kind == Conn::Exists; }

// ---------- resolution ----------

namespace {

struct Scope {
    std::string name;
    TermKind kind;
    int type_index;
    int id;
};

struct Resolver {
    Dialect dialect = Dialect::Plain;
    int next_id = 1;
    std::vector<Scope> scopes;
    // free-variable type consistency in tst
    std::map<std::string, int> free_types;

    const Scope* lookup(const std::string& name, TermKind kind) const {
        for (auto it = scopes.rbegin(); it != scopes.rend(); ++it)
            if (it->name == name && it->kind == kind) return &*it;
        return nullptr;
    }

    TermPtr term(const TermPtr& t) {
        switch (t->kind) {
            case TermKind::Vbar:
                if (dialect != Dialect::Lstar) throw DialectError("Vbar only occurs in the lstar dialect");
                return t;
            case TermKind::Pair: {
                if (dialect != Dialect::Lstar) throw DialectError("pair terms only occur in the lstar dialect");
                return mk_pair(term(t->left), term(t->right));
            }
            case TermKind::ClassVar: {
                if (dialect != Dialect::Lstar) throw DialectError("class variables only occur in the lstar dialect");
                auto r = std::make_shared<Term>(*t);
                const Scope* s = lookup(t->name, TermKind::ClassVar);
                r->binder = s ? s->id : 0;
                return r;
            }
            case TermKind::SetVar: {
                if (dialect == Dialect::Tst) {
                    if (t->type_index < 0) throw DialectError("tst variable '" + t->name + "' lacks a type index");
                } else if (t->type_index >= 0) {
                    throw DialectError("type index on '" + t->name + "' outside the tst dialect");
                }
                auto r = std::make_shared<Term>(*t);
                const Scope* s = lookup(t->name, TermKind::SetVar);
                if (s) {
                    r->binder = s->id;
                    if (dialect == Dialect::Tst && s->type_index != t->type_index)
                        throw DialectError("bound occurrence '" + t->name + "^" + std::to_string(t->type_index) +
                                           "' disagrees with its binder type " + std::to_string(s->type_index));
                } else {
                    r->binder = 0;
                    if (dialect == Dialect::Tst) {
                        auto [it, fresh] = free_types.emplace(t->name, t->type_index);
                        if (!fresh && it->second != t->type_index)
                            throw DialectError("free variable '" + t->name + "' used at two different types");
                    }
                }
                return r;
            }
        }
        throw DialectError("corrupt term");
    }

    FormulaPtr go(const FormulaPtr& f) {
        switch (f->kind) {
            case Conn::Member:
            case Conn::Equal: {
                auto r = std::make_shared<Formula>(*f);
                r->lhs = term(f->lhs);
                r->rhs = term(f->rhs);
                if (dialect == Dialect::Tst) {
                    int lt = r->lhs->type_index, rt = r->rhs->type_index;
                    int want = f->kind == Conn::Member ? lt + 1 : lt;
                    if (rt != want)
                        throw DialectError(std::string("ill-typed tst atom: ") +
                                           (f->kind == Conn::Member ? "membership needs types n, n+1"
                                                                    : "equality needs equal types"));
                }
                return r;
            }
            case Conn::Not: {
                auto r = std::make_shared<Formula>(*f);
                r->a = go(f->a);
                return r;
            }
            case Conn::And:
            case Conn::Or:
            case Conn::Implies:
            case Conn::Iff: {
                auto r = std::make_shared<Formula>(*f);
                r->a = go(f->a);
                r->b = go(f->b);
                return r;
            }
            case Conn::Forall:
            case Conn::Exists: {
                if (f->var_kind == TermKind::ClassVar && dialect != Dialect::Lstar)
                    throw DialectError("class-variable binder outside the lstar dialect");
                if (dialect == Dialect::Tst && f->var_type < 0)
                    throw DialectError("tst binder '" + f->var + "' lacks a type index");
                auto r = std::make_shared<Formula>(*f);
                r->binder_id = next_id++;
                scopes.push_back({f->var, f->var_kind, f->var_type, r->binder_id});
                r->a = go(f->a);
                scopes.pop_back();
                return r;
            }
        }
        throw DialectError("corrupt formula");
    }
};

}  // namespace

FormulaPtr resolve(const FormulaPtr& f, Dialect d) {
    Resolver r;
    r.dialect = d;
    return r.go(f);
}

// ---------- free variables / names ----------

static void term_names(const TermPtr& t, std::set<std::string>& out, bool free_only) {
    if (!t) return;
    switch (t->kind) {
        case TermKind::SetVar:
        case TermKind::ClassVar:
            if (!free_only || t->binder == 0) out.insert(t->name);
            break;
        case TermKind::Pair:
            term_names(t->left, out, free_only);
            term_names(t->right, out, free_only);
            break;
        case TermKind::Vbar:
            break;
    }
}

static void collect_names(const FormulaPtr& f, std::set<std::string>& out, bool free_only) {
    if (!f) return;
    term_names(f->lhs, out, free_only);
    term_names(f->rhs, out, free_only);
    if (is_quantifier(*f) && !free_only) out.insert(f->var);
    collect_names(f->a, out, free_only);
    collect_names(f->b, out, free_only);
}

std::set<std::string> free_variables(const FormulaPtr& f) {
    std::set<std::string> out;
    collect_names(f, out, /*free_only=*/true);
    return out;
}

std::set<std::string> all_names(const FormulaPtr& f) {
    std::set<std::string> out;
    collect_names(f, out, /*free_only=*/false);
    return out;
}

// ---------- alpha equivalence ----------

namespace {

bool alpha_term(const TermPtr& s, const TermPtr& t, std::map<int, int>& binder_map) {
    if (s->kind != t->kind) return false;
    switch (s->kind) {
        case TermKind::Vbar:
            return true;
        case TermKind::Pair:
            return alpha_term(s->left, t->left, binder_map) && alpha_term(s->right, t->right, binder_map);
        case TermKind::SetVar:
        case TermKind::ClassVar:
            if (s->type_index != t->type_index) return false;
            if ((s->binder == 0) != (t->binder == 0)) return false;
            if (s->binder == 0) return s->name == t->name;
            {
                auto it = binder_map.find(s->binder);
                return it != binder_map.end() && it->second == t->binder;
            }
    }
    return false;
}

bool alpha_formula(const FormulaPtr& a, const FormulaPtr& b, std::map<int, int>& binder_map) {
    if (a->kind != b->kind) return false;
    if (is_atom(*a))
        return alpha_term(a->lhs, b->lhs, binder_map) && alpha_term(a->rhs, b->rhs, binder_map);
    if (is_quantifier(*a)) {
        if (a->var_kind != b->var_kind || a->var_type != b->var_type) return false;
        binder_map[a->binder_id] = b->binder_id;
        bool ok = alpha_formula(a->a, b->a, binder_map);
        binder_map.erase(a->binder_id);
        return ok;
    }
    if (!alpha_formula(a->a, b->a, binder_map)) return false;
    if (a->b || b->b) return a->b && b->b && alpha_formula(a->b, b->b, binder_map);
    return true;
}

}  // namespace

bool alpha_equivalent(const FormulaPtr& a, const FormulaPtr& b) {
    std::map<int, int> binder_map;
    return alpha_formula(a, b, binder_map);
}

// ---------- substitution ----------

namespace {

struct Subst {
    const std::string& constant;
    const TermPtr& replacement;
    std::set<std::string> replacement_vars;
    std::vector<std::string> bound_stack;

    TermPtr term(const TermPtr& t) {
        switch (t->kind) {
            case TermKind::Vbar:
                return t;
            case TermKind::Pair:
                return mk_pair(term(t->left), term(t->right));
            case TermKind::SetVar:
            case TermKind::ClassVar:
                if (t->binder == 0 && t->name == constant) {
                    for (const auto& v : replacement_vars)
                        if (std::find(bound_stack.begin(), bound_stack.end(), v) != bound_stack.end())
                            throw std::invalid_argument("substitution would capture '" + v + "'");
                    return replacement;
                }
                return t;
        }
        throw std::invalid_argument("corrupt term");
    }

    FormulaPtr go(const FormulaPtr& f) {
        if (is_atom(*f)) {
            auto r = std::make_shared<Formula>(*f);
            r->lhs = term(f->lhs);
            r->rhs = term(f->rhs);
            return r;
        }
        if (is_quantifier(*f)) {
            auto r = std::make_shared<Formula>(*f);
            bound_stack.push_back(f->var);
            r->a = go(f->a);
            bound_stack.pop_back();
            return r;
        }
        auto r = std::make_shared<Formula>(*f);
        r->a = go(f->a);
        if (f->b) r->b = go(f->b);
        return r;
    }
};

}  // namespace

FormulaPtr substitute_constant(const FormulaPtr& f, const std::string& constant,
                               const TermPtr& replacement, Dialect d) {
    Subst s{constant, replacement, {}, {}};
    term_names(replacement, s.replacement_vars, /*free_only=*/false);
    return resolve(s.go(f), d);
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
    if (!taken.count(base)) return base;
    for (int i = 1;; ++i) {
        std::string cand = base + std::to_string(i);
        if (!taken.count(cand)) return cand;
    }
}

}  // namespace strata
