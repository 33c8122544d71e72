#include "tsa/decidable/decidable.h"

#include "tsa/errors.h"
#include "tsa/syntax/builders.h"
#include "tsa/syntax/ops.h"
#include "tsa/syntax/print.h"

namespace tsa {

namespace {

// Matches the core form of "v < t": monus(succ(v), t) = 0.
TermPtr match_lt_guard(const FormulaPtr& f, const NumVar& v) {
  const auto* eq = std::get_if<Eq>(&f->node());
  if (!eq) return nullptr;
  if (!is_numeral(eq->rhs) || !equal(eq->rhs, numeral(0))) return nullptr;
  const auto* monus = std::get_if<ConstApp>(&eq->lhs->node());
  if (!monus || monus->id != Const::Monus) return nullptr;
  const auto* succ = std::get_if<ConstApp>(&monus->nums[0]->node());
  if (!succ || succ->id != Const::Succ) return nullptr;
  const auto* var = std::get_if<NumVarRef>(&succ->nums[0]->node());
  if (!var || var->var != v) return nullptr;
  return monus->nums[1];
}

// Matches the core form of "v <= t": (v < t) \/ v = t, same t both sides.
TermPtr match_le_guard(const FormulaPtr& f, const NumVar& v) {
  const auto* disj = std::get_if<BinConn>(&f->node());
  if (!disj || disj->op != Conn::Or) return nullptr;
  TermPtr t = match_lt_guard(disj->lhs, v);
  if (!t) return nullptr;
  const auto* eq = std::get_if<Eq>(&disj->rhs->node());
  if (!eq) return nullptr;
  const auto* var = std::get_if<NumVarRef>(&eq->lhs->node());
  if (!var || var->var != v) return nullptr;
  if (!equal(eq->rhs, t)) return nullptr;
  return t;
}

}  // namespace

std::optional<BoundedQuant> match_bounded_quant(const FormulaPtr& f) {
  const auto* q = std::get_if<NumQuant>(&f->node());
  if (!q) return std::nullopt;
  const auto* conn = std::get_if<BinConn>(&q->body->node());
  if (!conn) return std::nullopt;
  if (q->universal ? conn->op != Conn::Implies : conn->op != Conn::And) {
    return std::nullopt;
  }
  BoundedQuant out;
  out.universal = q->universal;
  out.var = q->var;
  out.body = conn->rhs;
  if (TermPtr t = match_lt_guard(conn->lhs, q->var)) {
    out.bound = t;
    out.inclusive = false;
  } else if (TermPtr t2 = match_le_guard(conn->lhs, q->var)) {
    out.bound = t2;
    out.inclusive = true;
  } else {
    return std::nullopt;
  }
  if (free_vars(out.bound).contains(q->var)) return std::nullopt;
  return out;
}

DecidabilityClass classify(const FormulaPtr& f) {
  if (!f) throw InternalError("classifying null formula");
  if (std::get_if<Eq>(&f->node())) return DecidabilityClass::QuantifierFree;
  if (const auto* n = std::get_if<Not>(&f->node())) return classify(n->body);
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    DecidabilityClass l = classify(b->lhs);
    DecidabilityClass r = classify(b->rhs);
    return l > r ? l : r;
  }
  if (std::get_if<FunQuant>(&f->node())) return DecidabilityClass::Other;
  auto bounded = match_bounded_quant(f);
  if (!bounded) return DecidabilityClass::Other;
  DecidabilityClass inner = classify(bounded->body);
  return inner == DecidabilityClass::Other ? DecidabilityClass::Other
                                           : DecidabilityClass::BoundedOnly;
}

namespace {

[[noreturn]] void not_decidable(const FormulaPtr& f) {
  throw DecidabilityError(
      "formula is outside the decidable class (function quantifier or "
      "unguarded number quantifier): " +
      to_text(f));
}

bool truth_in(const FormulaPtr& f, const Environment& env,
              const Assignment& asg, const EvalLimits& limits) {
  if (const auto* eq = std::get_if<Eq>(&f->node())) {
    return eval_term(eq->lhs, env, asg, limits) ==
           eval_term(eq->rhs, env, asg, limits);
  }
  if (const auto* n = std::get_if<Not>(&f->node())) {
    return !truth_in(n->body, env, asg, limits);
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    switch (b->op) {
      case Conn::And:
        return truth_in(b->lhs, env, asg, limits) &&
               truth_in(b->rhs, env, asg, limits);
      case Conn::Or:
        return truth_in(b->lhs, env, asg, limits) ||
               truth_in(b->rhs, env, asg, limits);
      case Conn::Implies:
        return !truth_in(b->lhs, env, asg, limits) ||
               truth_in(b->rhs, env, asg, limits);
    }
    throw InternalError("unhandled connective");
  }
  auto bounded = match_bounded_quant(f);
  if (!bounded) not_decidable(f);
  // Beyond the bound's value the guard fails, so the quantifier's value is
  // settled by the instances at 0..value (the full guarded body is
  // evaluated at each instance — no shortcut semantics).
  Nat bound_value = eval_term(bounded->bound, env, asg, limits);
  if (bound_value + 1 > limits.loop_cap) {
    throw CapExceededError("bounded quantifier range " +
                           nat_to_string(bound_value) +
                           " exceeds the loop budget");
  }
  const auto* q = std::get_if<NumQuant>(&f->node());
  for (Nat n = 0; n <= bound_value; ++n) {
    Assignment extended = asg;
    extended.bind(bounded->var, n);
    bool inst = truth_in(q->body, env, extended, limits);
    if (bounded->universal && !inst) return false;
    if (!bounded->universal && inst) return true;
  }
  return bounded->universal;
}

}  // namespace

bool truth(const FormulaPtr& f, const Environment& env, const Assignment& asg,
           const EvalLimits& limits) {
  if (classify(f) == DecidabilityClass::Other) not_decidable(f);
  return truth_in(f, env, asg, limits);
}

CharTerm char_term(const FormulaPtr& f) {
  if (classify(f) == DecidabilityClass::Other) not_decidable(f);

  struct Builder {
    TermPtr build(const FormulaPtr& g) {
      if (const auto* eq = std::get_if<Eq>(&g->node())) {
        return mk_const(Const::Sg,
                        {mk_const(Const::Absdiff, {eq->lhs, eq->rhs})});
      }
      if (const auto* n = std::get_if<Not>(&g->node())) {
        return mk_const(Const::Sgbar, {build(n->body)});
      }
      if (const auto* b = std::get_if<BinConn>(&g->node())) {
        TermPtr ql = build(b->lhs);
        TermPtr qr = build(b->rhs);
        switch (b->op) {
          case Conn::And:
            return mk_const(Const::Sg,
                            {mk_const(Const::Add, {std::move(ql), std::move(qr)})});
          case Conn::Or:
            return mk_const(Const::Mul, {std::move(ql), std::move(qr)});
          case Conn::Implies:
            return mk_const(Const::Mul, {mk_const(Const::Sgbar, {std::move(ql)}),
                                         std::move(qr)});
        }
        throw InternalError("unhandled connective");
      }
      auto bounded = match_bounded_quant(g);
      if (!bounded) throw InternalError("unexpected quantifier shape");
      TermPtr qa = build(bounded->body);
      TermPtr range = bounded->inclusive
                          ? mk_const(Const::Succ, {bounded->bound})
                          : bounded->bound;
      FunctorPtr lam = mk_lambda(bounded->var, std::move(qa));
      if (bounded->universal) {
        return mk_const(Const::Sg,
                        {mk_const(Const::Sum, {std::move(range)},
                                  {std::move(lam)})});
      }
      return mk_const(Const::Prod, {std::move(range)}, {std::move(lam)});
    }
  };

  CharTerm out;
  out.source = f;
  out.q = Builder{}.build(f);
  return out;
}

std::optional<Nat> least_witness(const FormulaPtr& f, const NumVar& y,
                                 const Environment& env, const Assignment& asg,
                                 const Nat& cap, const EvalLimits& limits) {
  if (classify(f) == DecidabilityClass::Other) not_decidable(f);
  if (cap + 1 > limits.loop_cap) {
    throw CapExceededError("witness cap " + nat_to_string(cap) +
                           " exceeds the loop budget");
  }
  for (Nat n = 0; n <= cap; ++n) {
    Assignment extended = asg;
    extended.bind(y, n);
    if (truth_in(f, env, extended, limits)) return n;
  }
  return std::nullopt;
}

std::vector<Nat> choice_witness(const FormulaPtr& f, const NumVar& x,
                                const NumVar& y, const Environment& env,
                                const Assignment& asg, const Nat& domain_bound,
                                const Nat& cap, const EvalLimits& limits) {
  if (classify(f) == DecidabilityClass::Other) not_decidable(f);
  if (domain_bound > limits.loop_cap) {
    throw CapExceededError("domain bound " + nat_to_string(domain_bound) +
                           " exceeds the loop budget");
  }
  std::vector<Nat> table;
  for (Nat m = 0; m < domain_bound; ++m) {
    Assignment at_m = asg;
    at_m.bind(x, m);
    std::optional<Nat> n = least_witness(f, y, env, at_m, cap, limits);
    if (!n) {
      throw CapExceededError("no witness below cap " + nat_to_string(cap) +
                             " at " + display_name(x) + " = " +
                             nat_to_string(m));
    }
    table.push_back(*std::move(n));
  }
  return table;
}

std::vector<Nat> cfd_witness(const FormulaPtr& f, const NumVar& x,
                             const Environment& env, const Assignment& asg,
                             const Nat& domain_bound,
                             const EvalLimits& limits) {
  if (classify(f) == DecidabilityClass::Other) not_decidable(f);
  if (domain_bound > limits.loop_cap) {
    throw CapExceededError("domain bound " + nat_to_string(domain_bound) +
                           " exceeds the loop budget");
  }
  std::vector<Nat> table;
  for (Nat m = 0; m < domain_bound; ++m) {
    Assignment at_m = asg;
    at_m.bind(x, m);
    table.push_back(truth_in(f, env, at_m, limits) ? 0 : 1);
  }
  return table;
}

}  // namespace tsa
