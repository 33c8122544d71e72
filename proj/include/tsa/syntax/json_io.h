#ifndef TSA_SYNTAX_JSON_IO_H
#define TSA_SYNTAX_JSON_IO_H

#include <json.hpp>

#include "tsa/syntax/ast.h"

namespace tsa {

// JSON AST schema: every node is an object with a "node" tag.
//   terms:    var | const | apply | rec
//   functors: funvar | constfn | lambda
//   formulas: eq | not | and | or | implies |
//             forall_num | exists_num | forall_fun | exists_fun
nlohmann::json to_json(const TermPtr& t);
nlohmann::json to_json(const FunctorPtr& u);
nlohmann::json to_json(const FormulaPtr& f);
nlohmann::json to_json(const Expr& e);

// Throw ParseError on schema violations.
TermPtr term_from_json(const nlohmann::json& j);
FunctorPtr functor_from_json(const nlohmann::json& j);
FormulaPtr formula_from_json(const nlohmann::json& j);
Expr expr_from_json(const nlohmann::json& j);

}  // namespace tsa

#endif  // TSA_SYNTAX_JSON_IO_H
