#ifndef TSA_SYNTAX_AST_H
#define TSA_SYNTAX_AST_H

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tsa/syntax/constants.h"
#include "tsa/syntax/vars.h"

namespace tsa {

class Term;
class Functor;
class Formula;

// All tree values are immutable and freely shared.
using TermPtr = std::shared_ptr<const Term>;
using FunctorPtr = std::shared_ptr<const Functor>;
using FormulaPtr = std::shared_ptr<const Formula>;

// ---------------------------------------------------------------- terms

struct NumVarRef {
  NumVar var;
};

// Application of a fixed constant: number arguments first, then functors.
// Arity always matches the constant's signature (checked at construction).
struct ConstApp {
  Const id;
  std::vector<TermPtr> nums;
  std::vector<FunctorPtr> funs;
};

// Application of a functor to a number argument: (u)(t).
struct Apply {
  FunctorPtr fun;
  TermPtr arg;
};

// Primitive-recursion former rec(base; step; count).
struct RecApp {
  TermPtr base;
  FunctorPtr step;
  TermPtr count;
};

// Application of a registry-defined binary constant, written name(a, b).
// These arise from definitional extension only; the base language gives
// every such constant a rewrite to a rec-term.
struct DefApp {
  std::string name;
  TermPtr a;
  TermPtr b;
};

class Term {
 public:
  using Node = std::variant<NumVarRef, ConstApp, Apply, RecApp, DefApp>;
  explicit Term(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

// ------------------------------------------------------------- functors

struct FunVarRef {
  FunVar var;
};

// A one-place constant used as a functor by itself.
struct ConstFn {
  Const id;
};

// lam var. body — binds a number variable.
struct Lambda {
  NumVar var;
  TermPtr body;
};

class Functor {
 public:
  using Node = std::variant<FunVarRef, ConstFn, Lambda>;
  explicit Functor(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

// ------------------------------------------------------------- formulas

// Prime formulas are exactly equalities between terms.
struct Eq {
  TermPtr lhs;
  TermPtr rhs;
};

struct Not {
  FormulaPtr body;
};

enum class Conn : std::uint8_t { And, Or, Implies };

struct BinConn {
  Conn op;
  FormulaPtr lhs;
  FormulaPtr rhs;
};

struct NumQuant {
  bool universal;
  NumVar var;
  FormulaPtr body;
};

struct FunQuant {
  bool universal;
  FunVar var;
  FormulaPtr body;
};

class Formula {
 public:
  using Node = std::variant<Eq, Not, BinConn, NumQuant, FunQuant>;
  explicit Formula(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

// ------------------------------------------------------------ factories

TermPtr mk_var(NumVar v);
TermPtr mk_var(std::string name, std::uint32_t index = 0);
// Throws SortError when the argument counts do not match the signature
// or a functor slot receives a null pointer.
TermPtr mk_const(Const id, std::vector<TermPtr> nums = {},
                 std::vector<FunctorPtr> funs = {});
TermPtr mk_apply(FunctorPtr fun, TermPtr arg);
TermPtr mk_rec(TermPtr base, FunctorPtr step, TermPtr count);
// Throws SortError on null arguments or an ill-formed name (the name must
// be a plain identifier that no built-in constant, keyword, or bare
// function-variable word already claims).
TermPtr mk_defined(std::string name, TermPtr a, TermPtr b);

// Whether a string may serve as the name of a defined constant.
bool valid_defined_name(const std::string& name);

FunctorPtr mk_fun_var(FunVar v);
FunctorPtr mk_fun_var(std::string name, std::uint32_t index = 0);
// Throws SortError unless the constant is one-place number-theoretic.
FunctorPtr mk_const_fn(Const id);
FunctorPtr mk_lambda(NumVar var, TermPtr body);

FormulaPtr mk_eq(TermPtr lhs, TermPtr rhs);
FormulaPtr mk_not(FormulaPtr body);
FormulaPtr mk_and(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr mk_or(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr mk_implies(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr mk_forall(NumVar var, FormulaPtr body);
FormulaPtr mk_exists(NumVar var, FormulaPtr body);
FormulaPtr mk_forall_fun(FunVar var, FormulaPtr body);
FormulaPtr mk_exists_fun(FunVar var, FormulaPtr body);

// Structural equality (exact: bound-variable names matter).
bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const FunctorPtr& a, const FunctorPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

// An expression of any of the three sorts, for generic operations.
using Expr = std::variant<TermPtr, FunctorPtr, FormulaPtr>;

}  // namespace tsa

#endif  // TSA_SYNTAX_AST_H
