#ifndef STRATA_AST_HPP
#define STRATA_AST_HPP

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace strata {

// Three surface languages share one AST:
//   plain — untyped set theory, every term is a variable
//   tst   — typed set theory, every variable carries a type index
//   lstar — two-sorted: set variables (lowercase), class variables
//           (uppercase), the constant Vbar, and the pair former P(s,t)
enum class Dialect { Plain, Tst, Lstar };

std::string to_string(Dialect d);

enum class TermKind { SetVar, ClassVar, Vbar, Pair };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    TermKind kind;
    std::string name;     // variables only
    int type_index = -1;  // tst variables only
    // Binder resolution: 0 = free, otherwise the id of the quantifier
    // that binds this occurrence. Two binders with the same name are
    // distinct variables.
    int binder = 0;
    TermPtr left, right;  // Pair children
};

TermPtr mk_set_var(std::string name, int type_index = -1);
TermPtr mk_class_var(std::string name);
TermPtr mk_vbar();
TermPtr mk_pair(TermPtr left, TermPtr right);

enum class Conn {
    Member, Equal,          // atoms
    Not, And, Or, Implies, Iff,
    Forall, Exists,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    Conn kind;
    TermPtr lhs, rhs;          // atoms
    FormulaPtr a, b;           // children; quantifier/negation body in a
    std::string var;           // quantifier binder name
    TermKind var_kind = TermKind::SetVar;
    int var_type = -1;         // tst binder index
    int binder_id = 0;         // unique within a resolved formula
};

FormulaPtr mk_member(TermPtr lhs, TermPtr rhs);
FormulaPtr mk_equal(TermPtr lhs, TermPtr rhs);
FormulaPtr mk_not(FormulaPtr a);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_forall(std::string var, FormulaPtr body, TermKind var_kind = TermKind::SetVar, int var_type = -1);
FormulaPtr mk_exists(std::string var, FormulaPtr body, TermKind var_kind = TermKind::SetVar, int var_type = -1);

bool is_atom(const Formula& f);
bool is_quantifier(const Formula& f);

struct DialectError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rebuilds the formula with binder ids assigned and every variable
// occurrence resolved to its innermost enclosing binder of the same
// name and sort. Validates dialect discipline (no Vbar/P/class
// variables outside lstar, consistent tst types). Throws DialectError.
FormulaPtr resolve(const FormulaPtr& f, Dialect d);

// Names with at least one occurrence not captured by a binder.
std::set<std::string> free_variables(const FormulaPtr& f);

// Structural equality up to consistent renaming of bound variables.
// Free variables must match by name and sort.
bool alpha_equivalent(const FormulaPtr& a, const FormulaPtr& b);

// Replaces every free occurrence of `constant` by `replacement`.
// Throws if a variable of the replacement would be captured by a
// binder enclosing some occurrence. Inputs and output are resolved.
FormulaPtr substitute_constant(const FormulaPtr& f, const std::string& constant,
                               const TermPtr& replacement, Dialect d);

// First name in base, base1, base2, ... that avoids every name in
// `taken` (free or bound names of the formulas of interest).
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

// Every variable name occurring anywhere (free, bound, or as a binder).
std::set<std::string> all_names(const FormulaPtr& f);

}  // namespace strata

#endif
