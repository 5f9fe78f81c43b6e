#ifndef STRATA_PRINT_HPP
#define STRATA_PRINT_HPP

#include <string>

#include "strata/ast.hpp"

namespace strata {

// Inverse of parse up to redundant parentheses: parse(print(f), d) is
// alpha-equivalent to f. Quantifier bodies that are binary connectives
// are parenthesized; tst atoms print their predicate index ("x^0 in^0 y^1").
std::string print(const FormulaPtr& f, Dialect d);
std::string print(const TermPtr& t, Dialect d);

}  // namespace strata

#endif
