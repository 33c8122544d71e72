#ifndef TSA_SYNTAX_PRINT_H
#define TSA_SYNTAX_PRINT_H

#include <string>

#include "tsa/syntax/ast.h"

namespace tsa {

// Canonical text rendering. Reparsing the output yields a structurally
// equal expression. Successor chains rooted at 0 print as decimal numerals,
// Add/Mul print infix (+, *), successor prints as a postfix apostrophe;
// everything else prints by name in core form.
std::string to_text(const TermPtr& t);
std::string to_text(const FunctorPtr& u);
std::string to_text(const FormulaPtr& f);
std::string to_text(const Expr& e);

}  // namespace tsa

#endif  // TSA_SYNTAX_PRINT_H
