#ifndef TSA_CHECKS_GEN_H
#define TSA_CHECKS_GEN_H

#include <cstdint>
#include <random>
#include <vector>

#include "tsa/syntax/ast.h"

namespace tsa {

// Deterministic random structure generator. All draws go through pick(),
// which maps the raw engine output directly, so a seed fixes the generated
// objects on every platform.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t pick(std::uint64_t n);  // uniform-ish over 0..n-1
  bool chance_in(std::uint64_t k, std::uint64_t n);  // true with prob k/n

  // Terms over the given scope built from constants whose values stay small
  // on small inputs (no factorials, exponentials, or iterators).
  TermPtr small_term(int depth, const std::vector<NumVar>& scope);

  // Formulas guaranteed QuantifierFree or BoundedOnly over the scope: all
  // quantifiers wear the guarded bounded patterns with leaf bounds.
  FormulaPtr decidable_formula(int depth, const std::vector<NumVar>& scope);

  // Formulas with no quantifiers at all (equalities under connectives).
  FormulaPtr qf_formula(int depth, const std::vector<NumVar>& scope);

  // A term holding exactly one recursion subterm with recursion-free
  // components, wrapped `wraps` levels deep in slow-growing contexts.
  TermPtr term_with_rec(int wraps, const std::vector<NumVar>& scope);

  // A term holding exactly one lambda application, wrapped as above.
  TermPtr term_with_lambda(int wraps, const std::vector<NumVar>& scope);

  // The fixed pool of ten closed functors used wherever function arguments
  // are needed. Their values grow slowly (component extraction, min,
  // remainder), so iterated applications stay desk-sized.
  static const std::vector<FunctorPtr>& functor_pool();
  FunctorPtr pool_functor();

 private:
  TermPtr wrap_term(TermPtr core, int wraps, const std::vector<NumVar>& scope);

  std::mt19937_64 rng_;
};

}  // namespace tsa

#endif  // TSA_CHECKS_GEN_H
