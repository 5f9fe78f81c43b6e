#ifndef STRATA_PARSE_HPP
#define STRATA_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "strata/ast.hpp"

namespace strata {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + what),
          line(line), column(column) {}
};

// Grammar (ASCII, binders extend as far right as possible):
//   formula := iff
//   iff     := imp ('<->' imp)*
//   imp     := or ('->' imp)?
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '~' unary | 'forall' v '.' formula | 'exists' v '.' formula
//            | atom | '(' formula ')'
//   atom    := term ('in' | '=') term        (tst: 'in^k', '=^k' allowed)
//   term    := ident                          (plain)
//            | ident '^' nat                  (tst)
//            | ident | 'Vbar' | 'P(' term ',' term ')'   (lstar)
// In lstar, lowercase identifiers are set variables and uppercase are
// class variables.
FormulaPtr parse(const std::string& text, Dialect d);

// Splits `;`-separated blocks (multi=true) or non-empty lines
// (multi=false) and parses each.
std::vector<FormulaPtr> parse_many(const std::string& text, Dialect d, bool multi);

}  // namespace strata

#endif
