#ifndef TSA_KERNEL_AXIOMS_H
#define TSA_KERNEL_AXIOMS_H

#include <vector>

#include "tsa/kernel/eval.h"

namespace tsa {

// Checks every defining equation of the constant at the given arguments by
// evaluating both sides as object-language terms (the host semantics only
// enters through term evaluation, so this really cross-checks the table
// against the equations). Number arguments fill the constant's number
// parameters in order; function arguments must be closed functors.
//
// The successor constant has no equations but three universally quoted
// laws (nonzero, injective, congruence); these are checked semantically at
// the given argument against a sweep of counterpart values.
//
// The prime enumerator's step law is a bounded least-search; it is checked
// by running the search below the stated factorial bound.
//
// Throws UnsupportedConstantError for the signature-only constant and
// SortError on argument-count mismatches.
bool check_defining_axiom(Const c, const std::vector<Nat>& nums,
                          const std::vector<FunctorPtr>& funs,
                          const EvalLimits& limits = {});

}  // namespace tsa

#endif  // TSA_KERNEL_AXIOMS_H
