#ifndef TSA_SCHEMAS_SCHEMAS_H
#define TSA_SCHEMAS_SCHEMAS_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsa/syntax/ast.h"

namespace tsa {

// The axiom schemata recognized by the bundled systems. Each id names one
// closed family of axiom shapes over the shared language; the pieces each
// shape takes are documented with `instantiate`.
enum class SchemaId : std::uint8_t {
  Ind,                     // induction on a formula and a number variable
  LambdaConv,              // (lam x. t)(s) = t[x := s]
  Rec,                     // the defining equation pair of the recursor term
  RecAxiom,                // course-of-values characterization of the recursor
  Ac00Bang,                // unique countable choice for number relations
  QfAc00,                  // countable choice for quantifier-free relations
  QftAc00,                 // countable choice for term-defined relations
  Cfd,                     // characteristic functions for decided formulas
  ReflRepl,                // equality reflexivity / replacement, both sorts
  FunVarEq,                // function variables respect equality
  UnboundedSearch,         // least-witness search functions exist
  MinimalCountableChoice,  // countable choice without the minimality clause
  BimPrimRec,              // parameterized primitive recursion for functions
  WkvPrimRec,              // iteration form of primitive recursion
};

inline constexpr int kSchemaCount = static_cast<int>(SchemaId::WkvPrimRec) + 1;

// Canonical hyphenated name, as used in JSON and on the command line.
const char* schema_name(SchemaId id);
std::optional<SchemaId> schema_by_name(const std::string& name);
const std::vector<SchemaId>& all_schemas();

// One metavariable binding of a schema: concrete syntax of any sort, a bare
// variable of either sort, or a plain option string (shape flags).
using Piece =
    std::variant<TermPtr, FunctorPtr, FormulaPtr, NumVar, FunVar, std::string>;
using PieceMap = std::map<std::string, Piece>;

// A side condition attached to an instantiation, with its verdict.
struct SideCondition {
  std::string description;
  bool holds = false;
};

// A schema together with a complete piece assignment. `side_conditions`
// reports what the last instantiation checked.
struct SchemaInstance {
  SchemaId schema{};
  PieceMap pieces;
  std::vector<SideCondition> side_conditions;
};

// Builds the axiom instance the pieces describe, recording every side
// condition it checks (with verdict) in `inst.side_conditions`.
//
// Piece names per schema (sorts in parentheses; unannotated names are
// variables — lowercase Latin for number variables, Greek-word spellings
// for function variables):
//   ind:              matrix (formula), var
//   lambda-conv:      var, body (term), arg (term)
//   rec:              base (term), step (functor), count (term)
//   rec-axiom:        base (term), step (functor), count (term)
//   ac00-bang:        matrix (formula), x, y, alpha
//   qf-ac00:          matrix (formula), x, y, alpha
//   qft-ac00:         template (term), hole, x, y, alpha
//   cfd:              matrix (formula), var, beta
//   refl-repl:        one of four piece sets —
//                       {var}                 reflexivity, number sort
//                       {fun}                 reflexivity, function sort
//                       {x, y, matrix, hole}  replacement, number sort
//                       {u, v, matrix, hole}  replacement, function sort
//   fun-var-eq:       x, y, alpha
//   unbounded-search: alpha, m, n, gamma, lt ("plus" | "monus"; default plus)
//   minimal-countable-choice: alpha, m, n, gamma
//   bim-prim-rec:     alpha, beta, gamma, m, n
//   wkv-prim-rec:     base (term), step (functor), beta, y
//
// Throws SortError when pieces are missing or of the wrong sort and
// SideConditionError naming the first violated condition.
FormulaPtr instantiate(SchemaInstance& inst);
FormulaPtr instantiate(SchemaId schema, const PieceMap& pieces);

// Recognizes f as an instance of the schema. Returns the canonical
// (leftmost-structural) piece assignment, whose re-instantiation is
// congruent to f and whose side conditions all hold; absent otherwise.
std::optional<SchemaInstance> match(const FormulaPtr& f, SchemaId schema);

}  // namespace tsa

#endif  // TSA_SCHEMAS_SCHEMAS_H
