#include "strata/transform.hpp"

#include <stdexcept>

namespace strata {

namespace {

TermPtr restrictor_term(const std::string& name, Dialect d) {
    if (d == Dialect::Lstar && std::isupper(static_cast<unsigned char>(name[0])))
        return mk_class_var(name);
    return mk_set_var(name);
}

bool binds_name(const FormulaPtr& f, const std::string& name) {
    if (!f) return false;
    if (is_quantifier(*f) && f->var == name) return true;
    return binds_name(f->a, name) || binds_name(f->b, name);
}

FormulaPtr guard_quantifiers(const FormulaPtr& f, const std::string& restrictor, Dialect d) {
    if (is_atom(*f)) return f;
    auto r = std::make_shared<Formula>(*f);
    if (is_quantifier(*f)) {
        TermPtr bound = f->var_kind == TermKind::ClassVar ? mk_class_var(f->var) : mk_set_var(f->var);
        FormulaPtr fence = mk_member(bound, restrictor_term(restrictor, d));
        FormulaPtr body = guard_quantifiers(f->a, restrictor, d);
        r->a = f->kind == Conn::Forall ? mk_implies(fence, body) : mk_and(fence, body);
        return r;
    }
    r->a = guard_quantifiers(f->a, restrictor, d);
    if (f->b) r->b = guard_quantifiers(f->b, restrictor, d);
    return r;
}

void require_free_occurrence(const FormulaPtr& f, const std::string& name, TermKind kind) {
    struct Scan {
        const std::string& name;
        TermKind kind;
        bool found = false;
        void term(const TermPtr& t) {
            if (!t || found) return;
            if (t->kind == kind && t->binder == 0 && t->name == name) found = true;
            term(t->left);
            term(t->right);
        }
        void go(const FormulaPtr& f) {
            if (!f || found) return;
            term(f->lhs);
            term(f->rhs);
            go(f->a);
            go(f->b);
        }
    } scan{name, kind};
    scan.go(f);
    if (!scan.found)
        throw std::invalid_argument("designated variable '" + name + "' does not occur free");
}

void ordered_free_vars(const FormulaPtr& f, std::vector<std::string>& out) {
    if (!f) return;
    auto term = [&](auto&& self, const TermPtr& t) -> void {
        if (!t) return;
        if ((t->kind == TermKind::SetVar || t->kind == TermKind::ClassVar) && t->binder == 0) {
            for (const auto& v : out)
                if (v == t->name) return;
            out.push_back(t->name);
        }
        self(self, t->left);
        self(self, t->right);
    };
    term(term, f->lhs);
    term(term, f->rhs);
    ordered_free_vars(f->a, out);
    ordered_free_vars(f->b, out);
}

}  // namespace

FormulaPtr relativize(const FormulaPtr& f, const std::string& restrictor, Dialect d) {
    if (d == Dialect::Tst) throw DialectError("relativization applies to plain and lstar formulas");
    if (binds_name(f, restrictor))
        throw std::invalid_argument("restrictor '" + restrictor + "' is bound in the formula");
    return resolve(guard_quantifiers(f, restrictor, d), d);
}

FormulaPtr reflection_axiom(const FormulaPtr& phi, const std::string& restrictor) {
    if (all_names(phi).count(restrictor))
        throw std::invalid_argument("formula already mentions '" + restrictor + "'");
    std::vector<std::string> params;
    ordered_free_vars(phi, params);
    FormulaPtr body = mk_iff(relativize(phi, restrictor, Dialect::Plain), phi);
    for (auto it = params.rbegin(); it != params.rend(); ++it) {
        FormulaPtr fence = mk_member(mk_set_var(*it), mk_set_var(restrictor));
        body = mk_forall(*it, mk_implies(fence, body));
    }
    return resolve(body, Dialect::Plain);
}

std::vector<FormulaPtr> supertransitivity_axioms(const std::string& restrictor) {
    auto s = [&] { return mk_set_var(restrictor); };
    auto v = [](const char* n) { return mk_set_var(n); };
    // x in y & y in S -> x in S
    FormulaPtr trans = mk_forall(
        "x", mk_forall("y", mk_implies(mk_and(mk_member(v("x"), v("y")), mk_member(v("y"), s())),
                                       mk_member(v("x"), s()))));
    // (forall z. (z in x -> z in y)) & y in S -> x in S
    FormulaPtr subset = mk_forall("z", mk_implies(mk_member(v("z"), v("x")), mk_member(v("z"), v("y"))));
    FormulaPtr super = mk_forall(
        "x", mk_forall("y", mk_implies(mk_and(subset, mk_member(v("y"), s())),
                                       mk_member(v("x"), s()))));
    return {resolve(trans, Dialect::Plain), resolve(super, Dialect::Plain)};
}

FormulaPtr comprehension_instance(const FormulaPtr& phi, const std::string& class_var,
                                  const StratifyOptions& opts) {
    require_free_occurrence(phi, class_var, TermKind::ClassVar);
    if (!check_stratified(phi, Dialect::Lstar, opts).stratified)
        throw std::invalid_argument("payload is not stratified; the instance would not be an axiom");
    std::set<std::string> taken = all_names(phi);
    taken.insert(class_var);
    std::string fresh = fresh_name("Y", taken);
    FormulaPtr body = mk_iff(mk_member(mk_class_var(class_var), mk_class_var(fresh)), phi);
    return resolve(mk_exists(fresh, mk_forall(class_var, body, TermKind::ClassVar), TermKind::ClassVar),
                   Dialect::Lstar);
}

FormulaPtr replacement_instance(const FormulaPtr& phi, const std::string& var_x,
                                const std::string& var_y) {
    require_free_occurrence(phi, var_x, TermKind::SetVar);
    require_free_occurrence(phi, var_y, TermKind::SetVar);
    std::set<std::string> taken = all_names(phi);
    taken.insert(var_x);
    taken.insert(var_y);
    std::string y1 = fresh_name("y1", taken);
    taken.insert(y1);
    std::string y2 = fresh_name("y2", taken);
    taken.insert(y2);
    std::string a = fresh_name("a", taken);
    taken.insert(a);
    std::string b = fresh_name("b", taken);

    auto v = [](const std::string& n) { return mk_set_var(n); };
    FormulaPtr phi1 = substitute_constant(phi, var_y, v(y1), Dialect::Lstar);
    FormulaPtr phi2 = substitute_constant(phi, var_y, v(y2), Dialect::Lstar);
    FormulaPtr functional = mk_forall(
        var_x, mk_forall(y1, mk_forall(y2, mk_implies(mk_and(phi1, phi2), mk_equal(v(y1), v(y2))))));
    FormulaPtr image = mk_forall(
        a, mk_exists(b, mk_forall(var_y, mk_iff(mk_member(v(var_y), v(b)),
                                                mk_exists(var_x, mk_and(mk_member(v(var_x), v(a)), phi))))));
    return resolve(mk_implies(functional, image), Dialect::Lstar);
}

FormulaPtr foundation_instance(const FormulaPtr& phi, const std::string& var_x) {
    require_free_occurrence(phi, var_x, TermKind::SetVar);
    std::set<std::string> taken = all_names(phi);
    taken.insert(var_x);
    std::string y = fresh_name("y", taken);

    auto v = [](const std::string& n) { return mk_set_var(n); };
    FormulaPtr phi_y = substitute_constant(phi, var_x, v(y), Dialect::Lstar);
    FormulaPtr minimal = mk_exists(
        var_x, mk_and(phi, mk_forall(y, mk_implies(mk_member(v(y), v(var_x)), mk_not(phi_y)))));
    return resolve(mk_implies(mk_exists(var_x, phi), minimal), Dialect::Lstar);
}

namespace {

TermPtr shift_term(const TermPtr& t, int k) {
    auto r = std::make_shared<Term>(*t);
    r->type_index = k < 0 ? -1 : t->type_index + k;
    return r;
}

FormulaPtr shift_types(const FormulaPtr& f, int k) {
    auto r = std::make_shared<Formula>(*f);
    if (is_atom(*f)) {
        r->lhs = shift_term(f->lhs, k);
        r->rhs = shift_term(f->rhs, k);
        return r;
    }
    if (is_quantifier(*f)) r->var_type = k < 0 ? -1 : f->var_type + k;
    if (f->a) r->a = shift_types(f->a, k);
    if (f->b) r->b = shift_types(f->b, k);
    return r;
}

}  // namespace

FormulaPtr raise_types(const FormulaPtr& f, int k) {
    if (k < 0) throw std::invalid_argument("type raise amount must be nonnegative");
    return resolve(shift_types(f, k), Dialect::Tst);
}

FormulaPtr erase_types(const FormulaPtr& f) {
    return resolve(shift_types(f, -1), Dialect::Plain);
}

}  // namespace strata
