#ifndef TSA_SYNTAX_BUILDERS_H
#define TSA_SYNTAX_BUILDERS_H

#include <cstdint>
#include <string>

#include "tsa/syntax/ast.h"

namespace tsa {

// Numeral: n-fold successor of 0.
TermPtr numeral(std::uint64_t n);
// If t is a numeral, its value.
bool is_numeral(const TermPtr& t, std::uint64_t* value = nullptr);

// Code of the tuple of the given terms: prime(0)^a0 * ... * prime(k)^ak,
// with the empty tuple coded by 1.
TermPtr tuple_code(const std::vector<TermPtr>& parts);

// Strict/non-strict order and divisibility, expanded to their core forms:
//   lt:  succ(a) monus b = 0
//   le:  a < b  \/  a = b
//   divides: sg(rm(b, a)) = 0   ("a divides b")
FormulaPtr lt_formula(TermPtr a, TermPtr b);
FormulaPtr le_formula(TermPtr a, TermPtr b);
FormulaPtr divides_formula(TermPtr a, TermPtr b);

// exists! y. body  ==>  exists y. body & forall z. (body[y:=z] -> y = z)
// with z chosen fresh from body's variables.
FormulaPtr exists_unique(NumVar y, FormulaPtr body);

// Functor equality u = v  ==>  forall x. (u)(x) = (v)(x), x fresh.
FormulaPtr functor_eq_formula(FunctorPtr u, FunctorPtr v);

// (A -> B) & (B -> A)
FormulaPtr iff_formula(FormulaPtr a, FormulaPtr b);

// The recursion-course characterization
//   exists beta. beta(0) = base
//              & forall z. beta(z') = step(<beta(z), z>)
//              & beta(count) = value
// with beta and z fresh with respect to the pieces and `avoid`.
// States "value is the count-th iterate of step from base".
FormulaPtr iteration_formula(const TermPtr& base, const FunctorPtr& step,
                             const TermPtr& count, const TermPtr& value,
                             const VarSets& avoid);

// Bounded least-witness term: sum_{x<bound} prod_{y<x+1} cond(y), where cond
// is a 0/1-valued functor (0 = "holds"). Equals the least witness below the
// bound, or the bound itself when there is none.
TermPtr bounded_search_term(const TermPtr& bound, const FunctorPtr& cond,
                            const VarSets& avoid);

}  // namespace tsa

#endif  // TSA_SYNTAX_BUILDERS_H
