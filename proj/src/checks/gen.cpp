#include "tsa/checks/gen.h"

#include "tsa/syntax/builders.h"
#include "tsa/syntax/ops.h"
#include "tsa/syntax/parse.h"

namespace tsa {

std::uint64_t Gen::pick(std::uint64_t n) {
  return n == 0 ? 0 : rng_() % n;
}

bool Gen::chance_in(std::uint64_t k, std::uint64_t n) { return pick(n) < k; }

TermPtr Gen::small_term(int depth, const std::vector<NumVar>& scope) {
  if (depth <= 0) {
    if (!scope.empty() && chance_in(3, 5)) {
      return mk_var(scope[pick(scope.size())]);
    }
    return numeral(pick(6));
  }
  switch (pick(12)) {
    case 0:
      return mk_const(Const::Add, {small_term(depth - 1, scope),
                                   small_term(depth - 1, scope)});
    case 1:
      return mk_const(Const::Mul, {small_term(depth - 1, scope),
                                   small_term(depth - 1, scope)});
    case 2:
      return mk_const(Const::Succ, {small_term(depth - 1, scope)});
    case 3:
      return mk_const(Const::Pd, {small_term(depth - 1, scope)});
    case 4:
      return mk_const(Const::Monus, {small_term(depth - 1, scope),
                                     small_term(depth - 1, scope)});
    case 5:
      return mk_const(Const::Minf, {small_term(depth - 1, scope),
                                    small_term(depth - 1, scope)});
    case 6:
      return mk_const(Const::Maxf, {small_term(depth - 1, scope),
                                    small_term(depth - 1, scope)});
    case 7:
      return mk_const(Const::Sg, {small_term(depth - 1, scope)});
    case 8:
      return mk_const(Const::Sgbar, {small_term(depth - 1, scope)});
    case 9:
      return mk_const(Const::Absdiff, {small_term(depth - 1, scope),
                                       small_term(depth - 1, scope)});
    case 10:
      return mk_const(Const::Rm, {small_term(depth - 1, scope),
                                  small_term(depth - 1, scope)});
    default:
      return mk_const(Const::Quot, {small_term(depth - 1, scope),
                                    small_term(depth - 1, scope)});
  }
}

FormulaPtr Gen::decidable_formula(int depth,
                                  const std::vector<NumVar>& scope) {
  if (depth <= 0) {
    return mk_eq(small_term(1, scope), small_term(1, scope));
  }
  switch (pick(7)) {
    case 0:
      return mk_not(decidable_formula(depth - 1, scope));
    case 1:
      return mk_and(decidable_formula(depth - 1, scope),
                    decidable_formula(depth - 1, scope));
    case 2:
      return mk_or(decidable_formula(depth - 1, scope),
                   decidable_formula(depth - 1, scope));
    case 3:
      return mk_implies(decidable_formula(depth - 1, scope),
                        decidable_formula(depth - 1, scope));
    case 4:
    case 5: {
      // Guarded quantifier. A leaf bound keeps expansion ranges small, and
      // drawing it before extending the scope keeps the variable out of it.
      bool universal = pick(2) == 0;
      bool inclusive = pick(2) == 0;
      std::set<NumVar> used(scope.begin(), scope.end());
      NumVar v = fresh_num_var("v", used);
      TermPtr bound = small_term(0, scope);
      std::vector<NumVar> inner = scope;
      inner.push_back(v);
      FormulaPtr body = decidable_formula(depth - 1, inner);
      FormulaPtr guard = inclusive ? le_formula(mk_var(v), bound)
                                   : lt_formula(mk_var(v), bound);
      return universal
                 ? mk_forall(v, mk_implies(std::move(guard), std::move(body)))
                 : mk_exists(v, mk_and(std::move(guard), std::move(body)));
    }
    default:
      return mk_eq(small_term(depth, scope), small_term(depth, scope));
  }
}

FormulaPtr Gen::qf_formula(int depth, const std::vector<NumVar>& scope) {
  if (depth <= 0) {
    return mk_eq(small_term(1, scope), small_term(1, scope));
  }
  switch (pick(6)) {
    case 0:
      return mk_not(qf_formula(depth - 1, scope));
    case 1:
      return mk_and(qf_formula(depth - 1, scope), qf_formula(depth - 1, scope));
    case 2:
      return mk_or(qf_formula(depth - 1, scope), qf_formula(depth - 1, scope));
    case 3:
      return mk_implies(qf_formula(depth - 1, scope),
                        qf_formula(depth - 1, scope));
    default:
      return mk_eq(small_term(depth, scope), small_term(depth, scope));
  }
}

TermPtr Gen::term_with_rec(int wraps, const std::vector<NumVar>& scope) {
  TermPtr core =
      mk_rec(small_term(1, scope), pool_functor(), small_term(1, scope));
  return wrap_term(std::move(core), wraps, scope);
}

TermPtr Gen::term_with_lambda(int wraps, const std::vector<NumVar>& scope) {
  std::set<NumVar> used(scope.begin(), scope.end());
  NumVar v = fresh_num_var("v", used);
  std::vector<NumVar> inner = scope;
  inner.push_back(v);
  TermPtr core =
      mk_apply(mk_lambda(v, small_term(2, inner)), small_term(1, scope));
  return wrap_term(std::move(core), wraps, scope);
}

TermPtr Gen::wrap_term(TermPtr core, int wraps,
                       const std::vector<NumVar>& scope) {
  for (int i = 0; i < wraps; ++i) {
    switch (pick(6)) {
      case 0:
        core = mk_const(Const::Add, {std::move(core), small_term(0, scope)});
        break;
      case 1:
        core = mk_const(Const::Add, {small_term(0, scope), std::move(core)});
        break;
      case 2:
        core = mk_const(Const::Mul, {std::move(core), small_term(0, scope)});
        break;
      case 3:
        core = mk_const(Const::Succ, {std::move(core)});
        break;
      case 4:
        core = mk_const(Const::Minf, {std::move(core), small_term(0, scope)});
        break;
      default:
        core = mk_const(Const::Monus, {std::move(core), small_term(0, scope)});
        break;
    }
  }
  return core;
}

const std::vector<FunctorPtr>& Gen::functor_pool() {
  static const std::vector<FunctorPtr> pool = [] {
    std::vector<FunctorPtr> fs;
    for (const char* text : {
             "lam w. expof(w, 0) + expof(w, 1)",
             "lam w. expof(w, 0) + 2",
             "lam w. sg(expof(w, 1))",
             "lam w. pd(expof(w, 0))",
             "lam w. minf(expof(w, 0), 30)",
             "lam w. rm(expof(w, 0) + expof(w, 1), 19)",
             "lam w. expof(w, 1) * expof(w, 1)",
             "lam w. 0",
             "lam w. 7",
             "lam w. sgbar(expof(w, 1))",
         }) {
      fs.push_back(parse_functor(text));
    }
    return fs;
  }();
  return pool;
}

FunctorPtr Gen::pool_functor() {
  const auto& pool = functor_pool();
  return pool[pick(pool.size())];
}

}  // namespace tsa
