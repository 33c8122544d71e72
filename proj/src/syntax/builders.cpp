#include "tsa/syntax/builders.h"

#include "tsa/errors.h"
#include "tsa/syntax/ops.h"

namespace tsa {

TermPtr numeral(std::uint64_t n) {
  TermPtr t = mk_const(Const::Zero);
  for (std::uint64_t i = 0; i < n; ++i) t = mk_const(Const::Succ, {t});
  return t;
}

bool is_numeral(const TermPtr& t, std::uint64_t* value) {
  std::uint64_t n = 0;
  const Term* cur = t.get();
  for (;;) {
    const auto* c = std::get_if<ConstApp>(&cur->node());
    if (!c) return false;
    if (c->id == Const::Zero) {
      if (value) *value = n;
      return true;
    }
    if (c->id != Const::Succ) return false;
    ++n;
    cur = c->nums[0].get();
  }
}

TermPtr tuple_code(const std::vector<TermPtr>& parts) {
  if (parts.empty()) return numeral(1);
  // prime(i) is a fixed numeral position; use literal numerals for the
  // first primes so codes stay readable and cheap to evaluate.
  static constexpr std::uint64_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                              23, 29, 31, 37, 41, 43, 47, 53};
  TermPtr acc;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    TermPtr base = i < std::size(kPrimes)
                       ? numeral(kPrimes[i])
                       : mk_const(Const::Prime, {numeral(i)});
    TermPtr factor = mk_const(Const::Exp, {base, parts[i]});
    acc = acc ? mk_const(Const::Mul, {acc, factor}) : factor;
  }
  return acc;
}

FormulaPtr lt_formula(TermPtr a, TermPtr b) {
  return mk_eq(mk_const(Const::Monus, {mk_const(Const::Succ, {std::move(a)}),
                                       std::move(b)}),
               numeral(0));
}

FormulaPtr le_formula(TermPtr a, TermPtr b) {
  FormulaPtr lt = lt_formula(a, b);
  return mk_or(std::move(lt), mk_eq(std::move(a), std::move(b)));
}

FormulaPtr divides_formula(TermPtr a, TermPtr b) {
  return mk_eq(
      mk_const(Const::Sg, {mk_const(Const::Rm, {std::move(b), std::move(a)})}),
      numeral(0));
}

FormulaPtr exists_unique(NumVar y, FormulaPtr body) {
  auto used = all_vars(body);
  used.nums.insert(y);
  NumVar z = fresh_num_var("z", used.nums);
  FormulaPtr body_z = substitute_num(body, y, mk_var(z));
  return mk_exists(
      y, mk_and(body,
                mk_forall(z, mk_implies(std::move(body_z),
                                        mk_eq(mk_var(y), mk_var(z))))));
}

FormulaPtr functor_eq_formula(FunctorPtr u, FunctorPtr v) {
  auto used = all_vars(u);
  used.merge(all_vars(v));
  NumVar x = fresh_num_var("x", used.nums);
  return mk_forall(x, mk_eq(mk_apply(std::move(u), mk_var(x)),
                            mk_apply(std::move(v), mk_var(x))));
}

FormulaPtr iff_formula(FormulaPtr a, FormulaPtr b) {
  return mk_and(mk_implies(a, b), mk_implies(b, a));
}

FormulaPtr iteration_formula(const TermPtr& base, const FunctorPtr& step,
                             const TermPtr& count, const TermPtr& value,
                             const VarSets& avoid) {
  VarSets used = avoid;
  used.merge(all_vars(base));
  used.merge(all_vars(step));
  used.merge(all_vars(count));
  used.merge(all_vars(value));
  FunVar beta = fresh_fun_var("b", used.funs);
  NumVar z = fresh_num_var("z", used.nums);
  FormulaPtr at_zero = mk_eq(mk_apply(mk_fun_var(beta), numeral(0)), base);
  TermPtr beta_z = mk_apply(mk_fun_var(beta), mk_var(z));
  FormulaPtr steps = mk_forall(
      z, mk_eq(mk_apply(mk_fun_var(beta), mk_const(Const::Succ, {mk_var(z)})),
               mk_apply(step, tuple_code({beta_z, mk_var(z)}))));
  FormulaPtr at_count = mk_eq(mk_apply(mk_fun_var(beta), count), value);
  return mk_exists_fun(
      beta, mk_and(mk_and(std::move(at_zero), std::move(steps)),
                   std::move(at_count)));
}

TermPtr bounded_search_term(const TermPtr& bound, const FunctorPtr& cond,
                            const VarSets& avoid) {
  VarSets used = avoid;
  used.merge(all_vars(bound));
  used.merge(all_vars(cond));
  NumVar x = fresh_num_var("x", used.nums);
  used.nums.insert(x);
  NumVar y = fresh_num_var("y", used.nums);
  // sum_{x<bound} prod_{y<x+1} cond(y)
  FunctorPtr inner = mk_lambda(y, mk_apply(cond, mk_var(y)));
  TermPtr prefix_all_fail = mk_const(
      Const::Prod, {mk_const(Const::Succ, {mk_var(x)})}, {inner});
  return mk_const(Const::Sum, {bound}, {mk_lambda(x, prefix_all_fail)});
}

}  // namespace tsa
