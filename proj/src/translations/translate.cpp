#include "tsa/translations/translate.h"

#include <utility>

#include "tsa/decidable/decidable.h"
#include "tsa/errors.h"
#include "tsa/kernel/codec.h"
#include "tsa/syntax/builders.h"
#include "tsa/syntax/ops.h"

namespace tsa {

namespace {

bool rec_plain(const RecApp& r) {
  return !contains_rec(Expr{r.base}) && !contains_rec(Expr{r.step}) &&
         !contains_rec(Expr{r.count});
}

// Preorder walk shared by the occurrence finders. Children are numbered in
// display order: equation sides left to right, constant arguments numbers
// before functors, application head before argument, recursion base, step,
// count, defined-constant arguments left to right, abstraction body alone.
struct RecScan {
  std::optional<RecOccurrence> found;
  std::vector<int> path;

  void formula(const FormulaPtr& f) {
    if (found) return;
    if (const auto* e = std::get_if<Eq>(&f->node())) {
      child(0, [&] { term(e->lhs); });
      child(1, [&] { term(e->rhs); });
      return;
    }
    if (const auto* n = std::get_if<Not>(&f->node())) {
      child(0, [&] { formula(n->body); });
      return;
    }
    if (const auto* b = std::get_if<BinConn>(&f->node())) {
      child(0, [&] { formula(b->lhs); });
      child(1, [&] { formula(b->rhs); });
      return;
    }
    if (const auto* q = std::get_if<NumQuant>(&f->node())) {
      child(0, [&] { formula(q->body); });
      return;
    }
    child(0, [&] { formula(std::get<FunQuant>(f->node()).body); });
  }

  void term(const TermPtr& t) {
    if (found) return;
    if (const auto* c = std::get_if<ConstApp>(&t->node())) {
      int i = 0;
      for (const auto& a : c->nums) child(i++, [&] { term(a); });
      for (const auto& u : c->funs) child(i++, [&] { functor(u); });
      return;
    }
    if (const auto* a = std::get_if<Apply>(&t->node())) {
      child(0, [&] { functor(a->fun); });
      child(1, [&] { term(a->arg); });
      return;
    }
    if (const auto* d = std::get_if<DefApp>(&t->node())) {
      child(0, [&] { term(d->a); });
      child(1, [&] { term(d->b); });
      return;
    }
    if (const auto* r = std::get_if<RecApp>(&t->node())) {
      if (rec_plain(*r)) {
        found = RecOccurrence{path, t, VarOrdering::of(free_vars(t).nums)};
        return;
      }
      child(0, [&] { term(r->base); });
      child(1, [&] { functor(r->step); });
      child(2, [&] { term(r->count); });
      return;
    }
    // Number variable: leaf.
  }

  void functor(const FunctorPtr& u) {
    if (found) return;
    if (const auto* lam = std::get_if<Lambda>(&u->node())) {
      child(0, [&] { term(lam->body); });
    }
  }

  template <typename Fn>
  void child(int i, Fn&& fn) {
    if (found) return;
    path.push_back(i);
    fn();
    if (!found) path.pop_back();
  }
};

struct LambdaScan {
  std::optional<LambdaOccurrence> found;
  std::vector<int> path;

  void formula(const FormulaPtr& f) {
    if (found) return;
    if (const auto* e = std::get_if<Eq>(&f->node())) {
      child(0, [&] { term(e->lhs); });
      child(1, [&] { term(e->rhs); });
      return;
    }
    if (const auto* n = std::get_if<Not>(&f->node())) {
      child(0, [&] { formula(n->body); });
      return;
    }
    if (const auto* b = std::get_if<BinConn>(&f->node())) {
      child(0, [&] { formula(b->lhs); });
      child(1, [&] { formula(b->rhs); });
      return;
    }
    if (const auto* q = std::get_if<NumQuant>(&f->node())) {
      child(0, [&] { formula(q->body); });
      return;
    }
    child(0, [&] { formula(std::get<FunQuant>(f->node()).body); });
  }

  void term(const TermPtr& t) {
    if (found) return;
    if (const auto* c = std::get_if<ConstApp>(&t->node())) {
      int i = 0;
      for (const auto& a : c->nums) child(i++, [&] { term(a); });
      for (const auto& u : c->funs) child(i++, [&] { functor(u); });
      return;
    }
    if (const auto* a = std::get_if<Apply>(&t->node())) {
      child(0, [&] { functor(a->fun); });
      child(1, [&] { term(a->arg); });
      return;
    }
    if (const auto* d = std::get_if<DefApp>(&t->node())) {
      child(0, [&] { term(d->a); });
      child(1, [&] { term(d->b); });
      return;
    }
    if (const auto* r = std::get_if<RecApp>(&t->node())) {
      child(0, [&] { term(r->base); });
      child(1, [&] { functor(r->step); });
      child(2, [&] { term(r->count); });
      return;
    }
  }

  void functor(const FunctorPtr& u) {
    if (found) return;
    // The first abstraction reached in preorder is by construction not
    // inside another abstraction; its body is not scanned.
    if (std::get_if<Lambda>(&u->node())) {
      found = LambdaOccurrence{path, u};
    }
  }

  template <typename Fn>
  void child(int i, Fn&& fn) {
    if (found) return;
    path.push_back(i);
    fn();
    if (!found) path.pop_back();
  }
};

// In-place replacement of the leftmost eliminable recursion subterm,
// visiting nodes in the same order as RecScan.
struct RecReplace {
  TermPtr replacement;
  bool done = false;

  FormulaPtr formula(const FormulaPtr& f) {
    if (done) return f;
    if (const auto* e = std::get_if<Eq>(&f->node())) {
      TermPtr lhs = term(e->lhs);
      return mk_eq(std::move(lhs), term(e->rhs));
    }
    if (const auto* n = std::get_if<Not>(&f->node())) {
      return mk_not(formula(n->body));
    }
    if (const auto* b = std::get_if<BinConn>(&f->node())) {
      FormulaPtr lhs = formula(b->lhs);
      FormulaPtr rhs = formula(b->rhs);
      switch (b->op) {
        case Conn::And: return mk_and(std::move(lhs), std::move(rhs));
        case Conn::Or: return mk_or(std::move(lhs), std::move(rhs));
        case Conn::Implies: return mk_implies(std::move(lhs), std::move(rhs));
      }
    }
    if (const auto* q = std::get_if<NumQuant>(&f->node())) {
      FormulaPtr body = formula(q->body);
      return q->universal ? mk_forall(q->var, std::move(body))
                          : mk_exists(q->var, std::move(body));
    }
    const auto& q = std::get<FunQuant>(f->node());
    FormulaPtr body = formula(q.body);
    return q.universal ? mk_forall_fun(q.var, std::move(body))
                       : mk_exists_fun(q.var, std::move(body));
  }

  TermPtr term(const TermPtr& t) {
    if (done) return t;
    if (const auto* c = std::get_if<ConstApp>(&t->node())) {
      std::vector<TermPtr> nums;
      nums.reserve(c->nums.size());
      for (const auto& a : c->nums) nums.push_back(term(a));
      std::vector<FunctorPtr> funs;
      funs.reserve(c->funs.size());
      for (const auto& u : c->funs) funs.push_back(functor(u));
      return mk_const(c->id, std::move(nums), std::move(funs));
    }
    if (const auto* a = std::get_if<Apply>(&t->node())) {
      FunctorPtr fun = functor(a->fun);
      return mk_apply(std::move(fun), term(a->arg));
    }
    if (const auto* d = std::get_if<DefApp>(&t->node())) {
      TermPtr first = term(d->a);
      return mk_defined(d->name, std::move(first), term(d->b));
    }
    if (const auto* r = std::get_if<RecApp>(&t->node())) {
      if (rec_plain(*r)) {
        done = true;
        return replacement;
      }
      TermPtr base = term(r->base);
      FunctorPtr step = functor(r->step);
      return mk_rec(std::move(base), std::move(step), term(r->count));
    }
    return t;
  }

  FunctorPtr functor(const FunctorPtr& u) {
    if (done) return u;
    if (const auto* lam = std::get_if<Lambda>(&u->node())) {
      return mk_lambda(lam->var, term(lam->body));
    }
    return u;
  }
};

// In-place replacement of the leftmost outermost abstraction, visiting
// nodes in the same order as LambdaScan.
struct LambdaReplace {
  FunctorPtr replacement;
  bool done = false;

  FormulaPtr formula(const FormulaPtr& f) {
    if (done) return f;
    if (const auto* e = std::get_if<Eq>(&f->node())) {
      TermPtr lhs = term(e->lhs);
      return mk_eq(std::move(lhs), term(e->rhs));
    }
    if (const auto* n = std::get_if<Not>(&f->node())) {
      return mk_not(formula(n->body));
    }
    if (const auto* b = std::get_if<BinConn>(&f->node())) {
      FormulaPtr lhs = formula(b->lhs);
      FormulaPtr rhs = formula(b->rhs);
      switch (b->op) {
        case Conn::And: return mk_and(std::move(lhs), std::move(rhs));
        case Conn::Or: return mk_or(std::move(lhs), std::move(rhs));
        case Conn::Implies: return mk_implies(std::move(lhs), std::move(rhs));
      }
    }
    if (const auto* q = std::get_if<NumQuant>(&f->node())) {
      FormulaPtr body = formula(q->body);
      return q->universal ? mk_forall(q->var, std::move(body))
                          : mk_exists(q->var, std::move(body));
    }
    const auto& q = std::get<FunQuant>(f->node());
    FormulaPtr body = formula(q.body);
    return q.universal ? mk_forall_fun(q.var, std::move(body))
                       : mk_exists_fun(q.var, std::move(body));
  }

  TermPtr term(const TermPtr& t) {
    if (done) return t;
    if (const auto* c = std::get_if<ConstApp>(&t->node())) {
      std::vector<TermPtr> nums;
      nums.reserve(c->nums.size());
      for (const auto& a : c->nums) nums.push_back(term(a));
      std::vector<FunctorPtr> funs;
      funs.reserve(c->funs.size());
      for (const auto& u : c->funs) funs.push_back(functor(u));
      return mk_const(c->id, std::move(nums), std::move(funs));
    }
    if (const auto* a = std::get_if<Apply>(&t->node())) {
      FunctorPtr fun = functor(a->fun);
      return mk_apply(std::move(fun), term(a->arg));
    }
    if (const auto* d = std::get_if<DefApp>(&t->node())) {
      TermPtr first = term(d->a);
      return mk_defined(d->name, std::move(first), term(d->b));
    }
    if (const auto* r = std::get_if<RecApp>(&t->node())) {
      TermPtr base = term(r->base);
      FunctorPtr step = functor(r->step);
      return mk_rec(std::move(base), std::move(step), term(r->count));
    }
    return t;
  }

  FunctorPtr functor(const FunctorPtr& u) {
    if (done) return u;
    if (std::get_if<Lambda>(&u->node())) {
      done = true;
      return replacement;
    }
    return u;
  }
};

FormulaPtr replace_leftmost_rec(const FormulaPtr& f, TermPtr replacement) {
  RecReplace rr{std::move(replacement)};
  FormulaPtr out = rr.formula(f);
  if (!rr.done) throw InternalError("no recursion subterm to replace");
  return out;
}

FormulaPtr replace_leftmost_lambda(const FormulaPtr& f,
                                   FunctorPtr replacement) {
  LambdaReplace lr{std::move(replacement)};
  FormulaPtr out = lr.formula(f);
  if (!lr.done) throw InternalError("no abstraction to replace");
  return out;
}

}  // namespace

std::optional<RecOccurrence> find_rec_occurrence(const FormulaPtr& f) {
  RecScan scan;
  scan.formula(f);
  return scan.found;
}

std::optional<LambdaOccurrence> find_lambda_occurrence(const FormulaPtr& f) {
  LambdaScan scan;
  scan.formula(f);
  return scan.found;
}

// ------------------------------------------------------------ eliminators

FormulaPtr rec_eliminate(const FormulaPtr& f) {
  if (!contains_rec(Expr{f})) return f;
  if (std::get_if<Eq>(&f->node())) {
    auto occ = find_rec_occurrence(f);
    if (!occ) throw InternalError("recursion node without eliminable subterm");
    const auto& r = std::get<RecApp>(occ->term->node());
    VarSets supply = all_vars(f);
    FunVar gamma = fresh_fun_var("g", supply.funs);
    NumVar w = fresh_num_var("w", supply.nums);

    TermPtr base_view = coded_tuple_view(r.base, w, occ->ordering);
    FunctorPtr step_view = coded_tuple_view(r.step, w, occ->ordering);
    TermPtr count_view = coded_tuple_view(r.count, w, occ->ordering);
    VarSets avoid = supply;
    avoid.nums.insert(w);
    avoid.funs.insert(gamma);
    FormulaPtr pinning = iteration_formula(
        base_view, step_view, count_view,
        mk_apply(mk_fun_var(gamma), mk_var(w)), avoid);

    std::vector<TermPtr> coords;
    coords.reserve(occ->ordering.size());
    for (const NumVar& v : occ->ordering.vars()) coords.push_back(mk_var(v));
    TermPtr applied = mk_apply(mk_fun_var(gamma), tuple_code(coords));
    FormulaPtr rest = rec_eliminate(replace_leftmost_rec(f, applied));
    return mk_exists_fun(
        gamma, mk_and(mk_forall(w, std::move(pinning)), std::move(rest)));
  }
  if (const auto* n = std::get_if<Not>(&f->node())) {
    return mk_not(rec_eliminate(n->body));
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    FormulaPtr lhs = rec_eliminate(b->lhs);
    FormulaPtr rhs = rec_eliminate(b->rhs);
    switch (b->op) {
      case Conn::And: return mk_and(std::move(lhs), std::move(rhs));
      case Conn::Or: return mk_or(std::move(lhs), std::move(rhs));
      case Conn::Implies: return mk_implies(std::move(lhs), std::move(rhs));
    }
  }
  if (const auto* q = std::get_if<NumQuant>(&f->node())) {
    FormulaPtr body = rec_eliminate(q->body);
    return q->universal ? mk_forall(q->var, std::move(body))
                        : mk_exists(q->var, std::move(body));
  }
  const auto& q = std::get<FunQuant>(f->node());
  FormulaPtr body = rec_eliminate(q.body);
  return q.universal ? mk_forall_fun(q.var, std::move(body))
                     : mk_exists_fun(q.var, std::move(body));
}

FormulaPtr lambda_eliminate(const FormulaPtr& f) {
  if (!contains_lambda(Expr{f})) return f;
  if (std::get_if<Eq>(&f->node())) {
    auto occ = find_lambda_occurrence(f);
    if (!occ) throw InternalError("lambda node without outermost abstraction");
    const auto& lam = std::get<Lambda>(occ->functor->node());
    FunVar alpha = fresh_fun_var("a", all_vars(f).funs);

    FormulaPtr defining = mk_eq(
        lam.body, mk_apply(mk_fun_var(alpha), mk_var(lam.var)));
    FormulaPtr pinning = mk_forall(lam.var, lambda_eliminate(defining));
    FormulaPtr rest =
        lambda_eliminate(replace_leftmost_lambda(f, mk_fun_var(alpha)));
    return mk_exists_fun(alpha, mk_and(std::move(pinning), std::move(rest)));
  }
  if (const auto* n = std::get_if<Not>(&f->node())) {
    return mk_not(lambda_eliminate(n->body));
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    FormulaPtr lhs = lambda_eliminate(b->lhs);
    FormulaPtr rhs = lambda_eliminate(b->rhs);
    switch (b->op) {
      case Conn::And: return mk_and(std::move(lhs), std::move(rhs));
      case Conn::Or: return mk_or(std::move(lhs), std::move(rhs));
      case Conn::Implies: return mk_implies(std::move(lhs), std::move(rhs));
    }
  }
  if (const auto* q = std::get_if<NumQuant>(&f->node())) {
    FormulaPtr body = lambda_eliminate(q->body);
    return q->universal ? mk_forall(q->var, std::move(body))
                        : mk_exists(q->var, std::move(body));
  }
  const auto& q = std::get<FunQuant>(f->node());
  FormulaPtr body = lambda_eliminate(q.body);
  return q.universal ? mk_forall_fun(q.var, std::move(body))
                     : mk_exists_fun(q.var, std::move(body));
}

// --------------------------------------------------------- witness checks

namespace {

// Substitutes assignment numerals and environment functors for the free
// variables of a functor, so it can enter an Environment (which only holds
// closed functors).
FunctorPtr ground_functor(FunctorPtr u, const Environment& env,
                          const Assignment& asg) {
  VarSets fr = free_vars(u);
  NumSubst ns;
  FunSubst fs;
  for (const NumVar& v : fr.nums) {
    if (asg.contains(v)) ns.emplace(v, numeral(nat_to_index(asg.lookup(v))));
  }
  for (const FunVar& v : fr.funs) {
    if (env.contains(v)) fs.emplace(v, env.lookup(v));
  }
  if (ns.empty() && fs.empty()) return u;
  return substitute(u, ns, fs);
}

const FunQuant* as_exists_fun(const FormulaPtr& f) {
  const auto* q = std::get_if<FunQuant>(&f->node());
  return (q && !q->universal) ? q : nullptr;
}

const NumQuant* as_forall(const FormulaPtr& f) {
  const auto* q = std::get_if<NumQuant>(&f->node());
  return (q && q->universal) ? q : nullptr;
}

const BinConn* as_and(const FormulaPtr& f) {
  const auto* b = std::get_if<BinConn>(&f->node());
  return (b && b->op == Conn::And) ? b : nullptr;
}

const Eq* as_eq(const FormulaPtr& f) { return std::get_if<Eq>(&f->node()); }

const Apply* as_apply(const TermPtr& t) {
  return std::get_if<Apply>(&t->node());
}

[[noreturn]] void shape_error() {
  throw InternalError("recursion transform has an unexpected shape");
}

// The pieces of the iteration formula
//   exists b ((b(0) = base & forall z (b(z') = step(<b(z), z>))) &
//             b(count) = value)
// recovered from the built formula itself, so the bounded check exercises
// what the eliminator actually produced.
struct IterationPieces {
  TermPtr base;
  FunctorPtr step;
  TermPtr count;
  TermPtr value;
};

IterationPieces peel_iteration(const FormulaPtr& a) {
  const FunQuant* ex = as_exists_fun(a);
  if (!ex) shape_error();
  const BinConn* outer = as_and(ex->body);
  if (!outer) shape_error();
  const BinConn* inner = as_and(outer->lhs);
  if (!inner) shape_error();
  const Eq* at_zero = as_eq(inner->lhs);
  if (!at_zero) shape_error();
  const NumQuant* all_z = as_forall(inner->rhs);
  if (!all_z) shape_error();
  const Eq* step_eq = as_eq(all_z->body);
  if (!step_eq) shape_error();
  const Apply* step_app = as_apply(step_eq->rhs);
  if (!step_app) shape_error();
  const Eq* at_count = as_eq(outer->rhs);
  if (!at_count) shape_error();
  const Apply* count_app = as_apply(at_count->lhs);
  if (!count_app) shape_error();
  return IterationPieces{at_zero->rhs, step_app->fun, count_app->arg,
                         at_count->rhs};
}

constexpr std::uint64_t kLambdaArgRange = 16;

}  // namespace

bool check_rec_equiv(const FormulaPtr& f, const Environment& env,
                     const Assignment& asg, std::uint64_t w_bound,
                     const EvalLimits& limits) {
  if (!contains_rec(Expr{f})) {
    truth(f, env, asg, limits);  // throws when outside the decidable classes
    return true;
  }
  if (const auto* n = std::get_if<Not>(&f->node())) {
    return check_rec_equiv(n->body, env, asg, w_bound, limits);
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    return check_rec_equiv(b->lhs, env, asg, w_bound, limits) &&
           check_rec_equiv(b->rhs, env, asg, w_bound, limits);
  }
  if (const auto* q = std::get_if<NumQuant>(&f->node())) {
    auto bounded = match_bounded_quant(f);
    if (!bounded) {
      throw DecidabilityError(
          "an unguarded quantifier blocks the semantic witness check");
    }
    Nat bound_value = eval_term(bounded->bound, env, asg, limits);
    std::uint64_t range =
        nat_to_index(bound_value) + (bounded->inclusive ? 1 : 0);
    for (std::uint64_t v = 0; v < range; ++v) {
      Assignment inner = asg;
      inner.bind(q->var, Nat(v));
      if (!check_rec_equiv(q->body, env, inner, w_bound, limits)) return false;
    }
    return true;
  }
  if (std::get_if<FunQuant>(&f->node())) {
    throw DecidabilityError(
        "a function quantifier blocks the semantic witness check");
  }

  // Prime formula with at least one recursion node.
  auto occ = find_rec_occurrence(f);
  if (!occ) throw InternalError("recursion node without eliminable subterm");
  const auto& r = std::get<RecApp>(occ->term->node());
  VarSets supply = all_vars(f);
  FunVar gamma = fresh_fun_var("g", supply.funs);
  NumVar w = fresh_num_var("w", supply.nums);

  // Canonical witness: the recursion read at decoded coordinates. Grounding
  // through the environment closes its function variables.
  TermPtr base_view = coded_tuple_view(r.base, w, occ->ordering);
  FunctorPtr step_view = coded_tuple_view(r.step, w, occ->ordering);
  TermPtr count_view = coded_tuple_view(r.count, w, occ->ordering);
  FunctorPtr witness = ground_functor(
      mk_lambda(w, mk_rec(base_view, step_view, count_view)), env, asg);
  Environment extended = env;
  extended.bind(gamma, witness);

  // Peel the transform down to the built iteration pieces.
  FormulaPtr transformed = rec_eliminate(f);
  const FunQuant* ex = as_exists_fun(transformed);
  if (!ex || ex->var != gamma) shape_error();
  const BinConn* top = as_and(ex->body);
  if (!top) shape_error();
  const NumQuant* all_w = as_forall(top->lhs);
  if (!all_w || all_w->var != w) shape_error();
  IterationPieces pieces = peel_iteration(all_w->body);

  for (std::uint64_t wv = 0; wv < w_bound; ++wv) {
    Assignment at_w = asg;
    at_w.bind(w, Nat(wv));
    // Route one: iterate the built pieces directly.
    Nat acc = eval_term(pieces.base, extended, at_w, limits);
    Nat count_value = eval_term(pieces.count, extended, at_w, limits);
    FunHandle step_fn = eval_functor(pieces.step, extended, at_w, limits);
    std::uint64_t steps = nat_to_index(count_value);
    for (std::uint64_t z = 0; z < steps; ++z) {
      acc = step_fn(pair_code(acc, Nat(z)));
    }
    // Route two: decode the coordinates and evaluate the original subterm.
    Assignment decoded = asg;
    for (std::size_t i = 0; i < occ->ordering.size(); ++i) {
      decoded.bind(occ->ordering[i], component(Nat(wv), Nat(i)));
    }
    Nat direct = eval_term(occ->term, env, decoded, limits);
    if (acc != direct) return false;
    // Route three: the witness itself, through the formula's value slot.
    if (eval_term(pieces.value, extended, at_w, limits) != direct) {
      return false;
    }
  }

  // Truth is transported across the in-place replacement, then the
  // remaining occurrences are checked against the same witness chain.
  std::vector<TermPtr> coords;
  coords.reserve(occ->ordering.size());
  for (const NumVar& v : occ->ordering.vars()) coords.push_back(mk_var(v));
  FormulaPtr replaced = replace_leftmost_rec(
      f, mk_apply(mk_fun_var(gamma), tuple_code(coords)));
  if (truth(f, env, asg, limits) != truth(replaced, extended, asg, limits)) {
    return false;
  }
  return check_rec_equiv(replaced, extended, asg, w_bound, limits);
}

bool check_lambda_equiv(const FormulaPtr& f, const Environment& env,
                        const Assignment& asg, const EvalLimits& limits) {
  if (!contains_lambda(Expr{f})) {
    truth(f, env, asg, limits);  // throws when outside the decidable classes
    return true;
  }
  if (const auto* n = std::get_if<Not>(&f->node())) {
    return check_lambda_equiv(n->body, env, asg, limits);
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    return check_lambda_equiv(b->lhs, env, asg, limits) &&
           check_lambda_equiv(b->rhs, env, asg, limits);
  }
  if (const auto* q = std::get_if<NumQuant>(&f->node())) {
    auto bounded = match_bounded_quant(f);
    if (!bounded) {
      throw DecidabilityError(
          "an unguarded quantifier blocks the semantic witness check");
    }
    Nat bound_value = eval_term(bounded->bound, env, asg, limits);
    std::uint64_t range =
        nat_to_index(bound_value) + (bounded->inclusive ? 1 : 0);
    for (std::uint64_t v = 0; v < range; ++v) {
      Assignment inner = asg;
      inner.bind(q->var, Nat(v));
      if (!check_lambda_equiv(q->body, env, inner, limits)) return false;
    }
    return true;
  }
  if (std::get_if<FunQuant>(&f->node())) {
    throw DecidabilityError(
        "a function quantifier blocks the semantic witness check");
  }

  // Prime formula with at least one abstraction.
  auto occ = find_lambda_occurrence(f);
  if (!occ) throw InternalError("lambda node without outermost abstraction");
  const auto& lam = std::get<Lambda>(occ->functor->node());
  FunVar alpha = fresh_fun_var("a", all_vars(f).funs);
  FunctorPtr witness = ground_functor(occ->functor, env, asg);
  Environment extended = env;
  extended.bind(alpha, witness);

  // The defining equation of the witness holds on the fixed argument range,
  // and its own transform is equivalence-preserving.
  FormulaPtr defining =
      mk_eq(lam.body, mk_apply(mk_fun_var(alpha), mk_var(lam.var)));
  for (std::uint64_t arg = 0; arg < kLambdaArgRange; ++arg) {
    Assignment at_arg = asg;
    at_arg.bind(lam.var, Nat(arg));
    if (!truth(defining, extended, at_arg, limits)) return false;
    if (!check_lambda_equiv(defining, extended, at_arg, limits)) return false;
  }

  FormulaPtr replaced = replace_leftmost_lambda(f, mk_fun_var(alpha));
  if (truth(f, env, asg, limits) != truth(replaced, extended, asg, limits)) {
    return false;
  }
  return check_lambda_equiv(replaced, extended, asg, limits);
}

}  // namespace tsa
