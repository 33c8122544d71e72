#ifndef TSA_SYNTAX_PARSE_H
#define TSA_SYNTAX_PARSE_H

#include <set>
#include <string>
#include <string_view>

#include "tsa/syntax/ast.h"

namespace tsa {

// Recursive-descent parsers for the text syntax. Abbreviations (<, <=,
// divisibility |, exists!, functor equality, numerals) are expanded during
// parsing; the returned trees contain core forms only.
// Throw ParseError (with position info) on malformed input and SortError
// when the input parses but has the wrong sort.
TermPtr parse_term(std::string_view text);
FunctorPtr parse_functor(std::string_view text);
FormulaPtr parse_formula(std::string_view text);

// Parses whichever sort the text denotes (tried as formula, then term,
// then functor).
Expr parse_expr(std::string_view text);

// Variants that additionally recognize registry-defined binary constants:
// any identifier in `defined` parses as name(term, term).
TermPtr parse_term(std::string_view text, const std::set<std::string>& defined);
FormulaPtr parse_formula(std::string_view text,
                         const std::set<std::string>& defined);
Expr parse_expr(std::string_view text, const std::set<std::string>& defined);

}  // namespace tsa

#endif  // TSA_SYNTAX_PARSE_H
