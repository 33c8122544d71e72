#ifndef TSA_TRANSLATIONS_TRANSLATE_H
#define TSA_TRANSLATIONS_TRANSLATE_H

#include <cstdint>
#include <optional>
#include <vector>

#include "tsa/kernel/env.h"
#include "tsa/kernel/eval.h"
#include "tsa/syntax/ast.h"
#include "tsa/syntax/vars.h"

namespace tsa {

// A recursion subterm rec(base; step; count) none of whose components
// contains another recursion node, located inside a formula. The ordering
// lists the subterm's free number variables in ascending order; it fixes
// the coordinate layout of the coded tuple the eliminator substitutes for
// the occurrence.
struct RecOccurrence {
  std::vector<int> path;  // child indices from the formula root, preorder
  TermPtr term;           // the recursion subterm itself
  VarOrdering ordering;   // its free number variables, ascending
};

// The leftmost (preorder) recursion subterm whose components are
// recursion-free, or absent when the formula has no recursion node.
// Whenever any recursion node exists, some such subterm exists.
std::optional<RecOccurrence> find_rec_occurrence(const FormulaPtr& f);

// The leftmost lambda abstraction that is not nested inside another lambda,
// or absent when the formula has no lambda node.
struct LambdaOccurrence {
  std::vector<int> path;
  FunctorPtr functor;  // the lambda abstraction itself
};
std::optional<LambdaOccurrence> find_lambda_occurrence(const FormulaPtr& f);

// Recursion-free equivalent. A prime formula E with a leftmost eliminable
// occurrence rec(t; u; s) over free variables x_0..x_k becomes
//   exists g [forall w A(t^w, u^w, s^w, g(w)) & E'']
// where ^w reads each x_i as the i-th coded component of w, A is the
// iteration formula pinning g(w) to the recursion's value at the decoded
// coordinates, and E'' recursively translates E with the occurrence
// replaced by g(<x_0,...,x_k>). Composite formulas translate componentwise.
// Fresh names depend only on the prime formula's own variables, so the
// componentwise clauses commute with the connectives as node equalities.
FormulaPtr rec_eliminate(const FormulaPtr& f);

// Lambda-free equivalent. A prime formula P containing a leftmost-outermost
// abstraction (lam x. b) becomes
//   exists a [forall x [b = a(x)]'' & [P with the abstraction replaced by a]'']
// where '' marks recursive translation. Composite formulas translate
// componentwise, with the same determinism guarantee as rec_eliminate.
FormulaPtr lambda_eliminate(const FormulaPtr& f);

// Semantic check that the recursion transform preserves truth on the given
// bindings. Binds the canonical witness (the recursion evaluated at decoded
// coordinates) to the introduced function variable, verifies the iteration
// formula by direct iteration for every w < w_bound against an independent
// decode-and-evaluate route, compares truth before and after the
// replacement, and recurses through the remaining occurrences. Throws
// DecidabilityError when a truth comparison falls outside the decidable
// classes.
bool check_rec_equiv(const FormulaPtr& f, const Environment& env,
                     const Assignment& asg, std::uint64_t w_bound,
                     const EvalLimits& limits = {});

// Semantic check that the lambda transform preserves truth on the given
// bindings. Binds the eliminated abstraction itself (grounded through the
// bindings) to the introduced function variable, verifies its defining
// equation on arguments 0..15, compares truth before and after the
// replacement, and recurses. Errors as check_rec_equiv.
bool check_lambda_equiv(const FormulaPtr& f, const Environment& env,
                        const Assignment& asg, const EvalLimits& limits = {});

}  // namespace tsa

#endif  // TSA_TRANSLATIONS_TRANSLATE_H
