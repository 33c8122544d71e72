#ifndef TSA_DECIDABLE_DECIDABLE_H
#define TSA_DECIDABLE_DECIDABLE_H

#include <optional>
#include <vector>

#include "tsa/kernel/eval.h"

namespace tsa {

// How far a formula sits from the finitely checkable fragment.
// QuantifierFree formulas have no quantifiers at all; BoundedOnly formulas
// quantify numbers only in the guarded patterns
//   forall x. x < t -> A      forall x. x <= t -> A
//   exists x. x < t & A       exists x. x <= t & A
// (on the abbreviation-expanded core forms, with x not free in t).
// Any function quantifier or unguarded number quantifier means Other.
enum class DecidabilityClass { QuantifierFree, BoundedOnly, Other };

DecidabilityClass classify(const FormulaPtr& f);

// Classical truth over the standard model, computed by evaluating equations
// and finitely expanding bounded quantifiers. Only defined on the decidable
// classes; throws DecidabilityError for class Other.
bool truth(const FormulaPtr& f, const Environment& env, const Assignment& asg,
           const EvalLimits& limits = {});

// A 0/1-valued term tracking a decidable formula: under every evaluation,
// q <= 1, and q = 0 exactly when the formula is true. The free variables
// of q are among those of the source formula.
struct CharTerm {
  FormulaPtr source;
  TermPtr q;
};

CharTerm char_term(const FormulaPtr& f);

// Least n <= cap with f true at [y := n], or absent when there is none.
std::optional<Nat> least_witness(const FormulaPtr& f, const NumVar& y,
                                 const Environment& env, const Assignment& asg,
                                 const Nat& cap, const EvalLimits& limits = {});

// For each m < domain_bound, the least n <= cap with f true at
// [x := m, y := n]. Throws CapExceededError when some m has no witness.
std::vector<Nat> choice_witness(const FormulaPtr& f, const NumVar& x,
                                const NumVar& y, const Environment& env,
                                const Assignment& asg, const Nat& domain_bound,
                                const Nat& cap, const EvalLimits& limits = {});

// Decision table: entry m is 0 when f holds at [x := m], else 1, for
// m < domain_bound.
std::vector<Nat> cfd_witness(const FormulaPtr& f, const NumVar& x,
                             const Environment& env, const Assignment& asg,
                             const Nat& domain_bound,
                             const EvalLimits& limits = {});

// Pattern accessors for the guarded quantifier forms; exposed for reuse by
// schema matching. On success the guard's bound term is returned and
// `inclusive` reports <= versus <.
struct BoundedQuant {
  bool universal = false;
  NumVar var;
  TermPtr bound;
  bool inclusive = false;
  FormulaPtr body;
};
std::optional<BoundedQuant> match_bounded_quant(const FormulaPtr& f);

}  // namespace tsa

#endif  // TSA_DECIDABLE_DECIDABLE_H
