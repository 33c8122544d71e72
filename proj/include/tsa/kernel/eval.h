#ifndef TSA_KERNEL_EVAL_H
#define TSA_KERNEL_EVAL_H

#include <vector>

#include "tsa/kernel/codec.h"
#include "tsa/kernel/env.h"
#include "tsa/syntax/ast.h"

namespace tsa {

// Guard against runaway host loops (factorials, iterated sums, huge
// exponents). The budget is shared across one evaluation, including any
// function handles it returns; exceeding it throws CapExceededError.
// Every defining equation is still computed exactly within the budget.
struct EvalLimits {
  std::uint64_t loop_cap = 50'000'000;
};

// Value of a term under the standard semantics. Recursion terms
// rec(t; u; s) evaluate the iteration beta(0) = val(t),
// beta(z+1) = val(u)(pair_code(beta(z), z)) at z = val(s).
// Throws UnboundVariableError for uncovered variables and
// UnsupportedConstantError when the signature-only constant appears.
Nat eval_term(const TermPtr& t, const Environment& env, const Assignment& asg,
              const EvalLimits& limits = {});

// Total function handle for a functor; for lam x. t it is
// n |-> eval_term(t, env, asg[x -> n]).
FunHandle eval_functor(const FunctorPtr& u, const Environment& env,
                       const Assignment& asg, const EvalLimits& limits = {});

// Host semantics of a single constant applied to evaluated arguments.
// Argument counts must match the constant's signature.
Nat const_value(Const c, const std::vector<Nat>& nums,
                const std::vector<FunHandle>& funs,
                const EvalLimits& limits = {});

}  // namespace tsa

#endif  // TSA_KERNEL_EVAL_H
