#ifndef STRATA_TRANSFORM_HPP
#define STRATA_TRANSFORM_HPP

#include <string>
#include <vector>

#include "strata/ast.hpp"
#include "strata/stratify.hpp"

namespace strata {

// phi^R: every quantifier restricted to the restrictor --
//   forall x. psi  ->  forall x. (x in R -> psi')
//   exists x. psi  ->  exists x. (x in R & psi')
// Atoms and free variables are untouched. Throws if some binder of f
// binds the restrictor name.
FormulaPtr relativize(const FormulaPtr& f, const std::string& restrictor, Dialect d);

// For phi with free variables x0..xn-1 (first-occurrence order), the
// closed schema instance
//   forall x0. (x0 in S -> ... (phi^S <-> phi) ...)
// Throws if phi mentions the restrictor name already.
FormulaPtr reflection_axiom(const FormulaPtr& phi, const std::string& restrictor = "S");

// The transitivity and supertransitivity axioms for the smallness
// constant, with the subset relation expanded to its membership
// definition. The constant is a free identifier in the output.
std::vector<FormulaPtr> supertransitivity_axioms(const std::string& restrictor = "S");

// exists Y. forall X. (X in Y <-> phi)   for stratified lstar phi with
// the designated class variable free; Y is fresh. Parameters stay free.
// Throws if phi is not stratified or X does not occur free.
FormulaPtr comprehension_instance(const FormulaPtr& phi, const std::string& class_var = "X",
                                  const StratifyOptions& opts = {});

// forall x. forall y1. forall y2. (phi[y:=y1] & phi[y:=y2] -> y1 = y2)
//   -> forall a. exists b. forall y. (y in b <-> exists x. (x in a & phi))
// phi ranges over all lstar formulas (stratification not required).
FormulaPtr replacement_instance(const FormulaPtr& phi, const std::string& var_x = "x",
                                const std::string& var_y = "y");

// exists x. phi -> exists x. (phi & forall y. (y in x -> ~phi[x:=y]))
FormulaPtr foundation_instance(const FormulaPtr& phi, const std::string& var_x = "x");

// Raise every tst type index by k (k >= 0).
FormulaPtr raise_types(const FormulaPtr& f, int k);

// Forget the types; the result is plain and stratifiable by construction.
FormulaPtr erase_types(const FormulaPtr& f);

}  // namespace strata

#endif
