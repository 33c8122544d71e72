#include "tsa/syntax/ops.h"

#include <optional>

#include "tsa/errors.h"
#include "tsa/syntax/builders.h"

namespace tsa {

// ------------------------------------------------------------ free_vars

namespace {

void collect_free(const TermPtr& t, VarSets& out, std::set<NumVar>& boundn,
                  std::set<FunVar>& boundf);

void collect_free(const FunctorPtr& u, VarSets& out, std::set<NumVar>& boundn,
                  std::set<FunVar>& boundf) {
  if (const auto* v = std::get_if<FunVarRef>(&u->node())) {
    if (boundf.count(v->var) == 0) out.funs.insert(v->var);
    return;
  }
  if (std::holds_alternative<ConstFn>(u->node())) return;
  const auto& lam = std::get<Lambda>(u->node());
  bool added = boundn.insert(lam.var).second;
  collect_free(lam.body, out, boundn, boundf);
  if (added) boundn.erase(lam.var);
}

void collect_free(const TermPtr& t, VarSets& out, std::set<NumVar>& boundn,
                  std::set<FunVar>& boundf) {
  if (const auto* v = std::get_if<NumVarRef>(&t->node())) {
    if (boundn.count(v->var) == 0) out.nums.insert(v->var);
    return;
  }
  if (const auto* c = std::get_if<ConstApp>(&t->node())) {
    for (const auto& a : c->nums) collect_free(a, out, boundn, boundf);
    for (const auto& u : c->funs) collect_free(u, out, boundn, boundf);
    return;
  }
  if (const auto* a = std::get_if<Apply>(&t->node())) {
    collect_free(a->fun, out, boundn, boundf);
    collect_free(a->arg, out, boundn, boundf);
    return;
  }
  if (const auto* d = std::get_if<DefApp>(&t->node())) {
    collect_free(d->a, out, boundn, boundf);
    collect_free(d->b, out, boundn, boundf);
    return;
  }
  const auto& r = std::get<RecApp>(t->node());
  collect_free(r.base, out, boundn, boundf);
  collect_free(r.step, out, boundn, boundf);
  collect_free(r.count, out, boundn, boundf);
}

void collect_free(const FormulaPtr& f, VarSets& out, std::set<NumVar>& boundn,
                  std::set<FunVar>& boundf) {
  if (const auto* e = std::get_if<Eq>(&f->node())) {
    collect_free(e->lhs, out, boundn, boundf);
    collect_free(e->rhs, out, boundn, boundf);
    return;
  }
  if (const auto* n = std::get_if<Not>(&f->node())) {
    collect_free(n->body, out, boundn, boundf);
    return;
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    collect_free(b->lhs, out, boundn, boundf);
    collect_free(b->rhs, out, boundn, boundf);
    return;
  }
  if (const auto* q = std::get_if<NumQuant>(&f->node())) {
    bool added = boundn.insert(q->var).second;
    collect_free(q->body, out, boundn, boundf);
    if (added) boundn.erase(q->var);
    return;
  }
  const auto& q = std::get<FunQuant>(f->node());
  bool added = boundf.insert(q.var).second;
  collect_free(q.body, out, boundn, boundf);
  if (added) boundf.erase(q.var);
}

}  // namespace

VarSets free_vars(const TermPtr& t) {
  VarSets out;
  std::set<NumVar> bn;
  std::set<FunVar> bf;
  collect_free(t, out, bn, bf);
  return out;
}

VarSets free_vars(const FunctorPtr& u) {
  VarSets out;
  std::set<NumVar> bn;
  std::set<FunVar> bf;
  collect_free(u, out, bn, bf);
  return out;
}

VarSets free_vars(const FormulaPtr& f) {
  VarSets out;
  std::set<NumVar> bn;
  std::set<FunVar> bf;
  collect_free(f, out, bn, bf);
  return out;
}

VarSets free_vars(const Expr& e) {
  return std::visit([](const auto& x) { return free_vars(x); }, e);
}

// ------------------------------------------------------------- all_vars

namespace {

void collect_all(const TermPtr& t, VarSets& out);

void collect_all(const FunctorPtr& u, VarSets& out) {
  if (const auto* v = std::get_if<FunVarRef>(&u->node())) {
    out.funs.insert(v->var);
    return;
  }
  if (std::holds_alternative<ConstFn>(u->node())) return;
  const auto& lam = std::get<Lambda>(u->node());
  out.nums.insert(lam.var);
  collect_all(lam.body, out);
}

void collect_all(const TermPtr& t, VarSets& out) {
  if (const auto* v = std::get_if<NumVarRef>(&t->node())) {
    out.nums.insert(v->var);
    return;
  }
  if (const auto* c = std::get_if<ConstApp>(&t->node())) {
    for (const auto& a : c->nums) collect_all(a, out);
    for (const auto& u : c->funs) collect_all(u, out);
    return;
  }
  if (const auto* a = std::get_if<Apply>(&t->node())) {
    collect_all(a->fun, out);
    collect_all(a->arg, out);
    return;
  }
  if (const auto* d = std::get_if<DefApp>(&t->node())) {
    collect_all(d->a, out);
    collect_all(d->b, out);
    return;
  }
  const auto& r = std::get<RecApp>(t->node());
  collect_all(r.base, out);
  collect_all(r.step, out);
  collect_all(r.count, out);
}

void collect_all(const FormulaPtr& f, VarSets& out) {
  if (const auto* e = std::get_if<Eq>(&f->node())) {
    collect_all(e->lhs, out);
    collect_all(e->rhs, out);
    return;
  }
  if (const auto* n = std::get_if<Not>(&f->node())) {
    collect_all(n->body, out);
    return;
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    collect_all(b->lhs, out);
    collect_all(b->rhs, out);
    return;
  }
  if (const auto* q = std::get_if<NumQuant>(&f->node())) {
    out.nums.insert(q->var);
    collect_all(q->body, out);
    return;
  }
  const auto& q = std::get<FunQuant>(f->node());
  out.funs.insert(q.var);
  collect_all(q.body, out);
}

}  // namespace

VarSets all_vars(const TermPtr& t) {
  VarSets out;
  collect_all(t, out);
  return out;
}

VarSets all_vars(const FunctorPtr& u) {
  VarSets out;
  collect_all(u, out);
  return out;
}

VarSets all_vars(const FormulaPtr& f) {
  VarSets out;
  collect_all(f, out);
  return out;
}

VarSets all_vars(const Expr& e) {
  return std::visit([](const auto& x) { return all_vars(x); }, e);
}

// ---------------------------------------------------------- substitute

namespace {

// Substitution state; maps shrink as binders shadow their domain.
struct Subst {
  NumSubst nums;
  FunSubst funs;

  bool empty() const { return nums.empty() && funs.empty(); }
};

// Free variables of every replacement that is still in play.
VarSets replacement_free_vars(const Subst& s) {
  VarSets out;
  for (const auto& [v, t] : s.nums) out.merge(free_vars(t));
  for (const auto& [v, u] : s.funs) out.merge(free_vars(u));
  return out;
}

TermPtr subst_term(const TermPtr& t, const Subst& s);
FormulaPtr subst_formula(const FormulaPtr& f, const Subst& s);

// Shared binder handling: given a number binder `var` over `body_free`,
// returns the (possibly renamed) binder to use, recording the substitution
// to apply to the body. Renames only when some replacement would be
// captured, choosing the same name with the smallest fresh index.
template <typename Var, typename MainMap, typename MkRef>
Var rebind(const Var& var, MainMap Subst::*main, Subst& s,
           const VarSets& body_free, MkRef mk_ref) {
  (s.*main).erase(var);
  if (s.empty()) return var;
  // Capture occurs iff the binder variable is free in a replacement for a
  // variable that is itself free in the body.
  bool capture = false;
  for (const auto& [v, repl] : s.nums) {
    if (!body_free.contains(v)) continue;
    if (free_vars(repl).contains(var)) {
      capture = true;
      break;
    }
  }
  if (!capture) {
    for (const auto& [v, repl] : s.funs) {
      if (!body_free.contains(v)) continue;
      if (free_vars(repl).contains(var)) {
        capture = true;
        break;
      }
    }
  }
  if (!capture) return var;
  // Fresh variable: avoid the body's free variables, every replacement's
  // free variables, and the substitution domain.
  auto avoid = replacement_free_vars(s);
  avoid.merge(body_free);
  for (const auto& [v, repl] : s.nums) avoid.nums.insert(v);
  for (const auto& [v, repl] : s.funs) avoid.funs.insert(v);
  Var renamed = [&] {
    if constexpr (std::is_same_v<Var, NumVar>) {
      return fresh_num_var(var.name, avoid.nums);
    } else {
      return fresh_fun_var(var.name, avoid.funs);
    }
  }();
  (s.*main)[var] = mk_ref(renamed);
  return renamed;
}

FunctorPtr subst_functor(const FunctorPtr& u, const Subst& s) {
  if (s.empty()) return u;
  if (const auto* v = std::get_if<FunVarRef>(&u->node())) {
    auto it = s.funs.find(v->var);
    return it == s.funs.end() ? u : it->second;
  }
  if (std::holds_alternative<ConstFn>(u->node())) return u;
  const auto& lam = std::get<Lambda>(u->node());
  Subst inner = s;
  NumVar var = rebind(
      lam.var, &Subst::nums, inner, free_vars(lam.body),
      [](const NumVar& v) { return mk_var(v); });
  if (inner.empty()) return u;
  return mk_lambda(var, subst_term(lam.body, inner));
}

TermPtr subst_term(const TermPtr& t, const Subst& s) {
  if (s.empty()) return t;
  if (const auto* v = std::get_if<NumVarRef>(&t->node())) {
    auto it = s.nums.find(v->var);
    return it == s.nums.end() ? t : it->second;
  }
  if (const auto* c = std::get_if<ConstApp>(&t->node())) {
    std::vector<TermPtr> nums;
    nums.reserve(c->nums.size());
    for (const auto& a : c->nums) nums.push_back(subst_term(a, s));
    std::vector<FunctorPtr> funs;
    funs.reserve(c->funs.size());
    for (const auto& u : c->funs) funs.push_back(subst_functor(u, s));
    return mk_const(c->id, std::move(nums), std::move(funs));
  }
  if (const auto* a = std::get_if<Apply>(&t->node())) {
    return mk_apply(subst_functor(a->fun, s), subst_term(a->arg, s));
  }
  if (const auto* d = std::get_if<DefApp>(&t->node())) {
    return mk_defined(d->name, subst_term(d->a, s), subst_term(d->b, s));
  }
  const auto& r = std::get<RecApp>(t->node());
  return mk_rec(subst_term(r.base, s), subst_functor(r.step, s),
                subst_term(r.count, s));
}

FormulaPtr subst_formula(const FormulaPtr& f, const Subst& s) {
  if (s.empty()) return f;
  if (const auto* e = std::get_if<Eq>(&f->node())) {
    return mk_eq(subst_term(e->lhs, s), subst_term(e->rhs, s));
  }
  if (const auto* n = std::get_if<Not>(&f->node())) {
    return mk_not(subst_formula(n->body, s));
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    auto lhs = subst_formula(b->lhs, s);
    auto rhs = subst_formula(b->rhs, s);
    return std::make_shared<Formula>(BinConn{b->op, std::move(lhs), std::move(rhs)});
  }
  if (const auto* q = std::get_if<NumQuant>(&f->node())) {
    Subst inner = s;
    NumVar var = rebind(
        q->var, &Subst::nums, inner, free_vars(q->body),
        [](const NumVar& v) { return mk_var(v); });
    if (inner.empty()) return f;
    auto body = subst_formula(q->body, inner);
    return q->universal ? mk_forall(var, std::move(body))
                        : mk_exists(var, std::move(body));
  }
  const auto& q = std::get<FunQuant>(f->node());
  Subst inner = s;
  FunVar var = rebind(
      q.var, &Subst::funs, inner, free_vars(q.body),
      [](const FunVar& v) { return mk_fun_var(v); });
  if (inner.empty()) return f;
  auto body = subst_formula(q.body, inner);
  return q.universal ? mk_forall_fun(var, std::move(body))
                     : mk_exists_fun(var, std::move(body));
}

}  // namespace

TermPtr substitute(const TermPtr& t, const NumSubst& ns, const FunSubst& fs) {
  return subst_term(t, Subst{ns, fs});
}

FunctorPtr substitute(const FunctorPtr& u, const NumSubst& ns, const FunSubst& fs) {
  return subst_functor(u, Subst{ns, fs});
}

FormulaPtr substitute(const FormulaPtr& f, const NumSubst& ns, const FunSubst& fs) {
  return subst_formula(f, Subst{ns, fs});
}

TermPtr substitute_num(const TermPtr& t, const NumVar& v, const TermPtr& by) {
  return substitute(t, NumSubst{{v, by}});
}

FunctorPtr substitute_num(const FunctorPtr& u, const NumVar& v, const TermPtr& by) {
  return substitute(u, NumSubst{{v, by}});
}

FormulaPtr substitute_num(const FormulaPtr& f, const NumVar& v, const TermPtr& by) {
  return substitute(f, NumSubst{{v, by}});
}

TermPtr substitute_fun(const TermPtr& t, const FunVar& v, const FunctorPtr& by) {
  return substitute(t, {}, FunSubst{{v, by}});
}

FunctorPtr substitute_fun(const FunctorPtr& u, const FunVar& v, const FunctorPtr& by) {
  return substitute(u, {}, FunSubst{{v, by}});
}

FormulaPtr substitute_fun(const FormulaPtr& f, const FunVar& v, const FunctorPtr& by) {
  return substitute(f, {}, FunSubst{{v, by}});
}

// ---------------------------------------------------------- is_free_for

namespace {

// Walks the expression; at each free occurrence of the target checks that
// no enclosing binder binds a free variable of the replacement.
struct FreeForScan {
  const VarSets repl_free;
  // The target of the appropriate sort; the other is left empty.
  std::optional<NumVar> num_target;
  std::optional<FunVar> fun_target;

  bool blocked(const std::set<NumVar>& bn, const std::set<FunVar>& bf) const {
    for (const auto& v : repl_free.nums) {
      if (bn.count(v)) return true;
    }
    for (const auto& v : repl_free.funs) {
      if (bf.count(v)) return true;
    }
    return false;
  }

  bool scan(const TermPtr& t, std::set<NumVar>& bn, std::set<FunVar>& bf) const {
    if (const auto* v = std::get_if<NumVarRef>(&t->node())) {
      if (num_target && v->var == *num_target && bn.count(v->var) == 0) {
        return !blocked(bn, bf);
      }
      return true;
    }
    if (const auto* c = std::get_if<ConstApp>(&t->node())) {
      for (const auto& a : c->nums) {
        if (!scan(a, bn, bf)) return false;
      }
      for (const auto& u : c->funs) {
        if (!scan(u, bn, bf)) return false;
      }
      return true;
    }
    if (const auto* a = std::get_if<Apply>(&t->node())) {
      return scan(a->fun, bn, bf) && scan(a->arg, bn, bf);
    }
    if (const auto* d = std::get_if<DefApp>(&t->node())) {
      return scan(d->a, bn, bf) && scan(d->b, bn, bf);
    }
    const auto& r = std::get<RecApp>(t->node());
    return scan(r.base, bn, bf) && scan(r.step, bn, bf) && scan(r.count, bn, bf);
  }

  bool scan(const FunctorPtr& u, std::set<NumVar>& bn, std::set<FunVar>& bf) const {
    if (const auto* v = std::get_if<FunVarRef>(&u->node())) {
      if (fun_target && v->var == *fun_target && bf.count(v->var) == 0) {
        return !blocked(bn, bf);
      }
      return true;
    }
    if (std::holds_alternative<ConstFn>(u->node())) return true;
    const auto& lam = std::get<Lambda>(u->node());
    bool added = bn.insert(lam.var).second;
    bool ok = scan(lam.body, bn, bf);
    if (added) bn.erase(lam.var);
    return ok;
  }

  bool scan(const FormulaPtr& f, std::set<NumVar>& bn, std::set<FunVar>& bf) const {
    if (const auto* e = std::get_if<Eq>(&f->node())) {
      return scan(e->lhs, bn, bf) && scan(e->rhs, bn, bf);
    }
    if (const auto* n = std::get_if<Not>(&f->node())) {
      return scan(n->body, bn, bf);
    }
    if (const auto* b = std::get_if<BinConn>(&f->node())) {
      return scan(b->lhs, bn, bf) && scan(b->rhs, bn, bf);
    }
    if (const auto* q = std::get_if<NumQuant>(&f->node())) {
      bool added = bn.insert(q->var).second;
      bool ok = scan(q->body, bn, bf);
      if (added) bn.erase(q->var);
      return ok;
    }
    const auto& q = std::get<FunQuant>(f->node());
    bool added = bf.insert(q.var).second;
    bool ok = scan(q.body, bn, bf);
    if (added) bf.erase(q.var);
    return ok;
  }
};

}  // namespace

bool is_free_for(const TermPtr& replacement, const NumVar& target, const Expr& in) {
  FreeForScan scan{free_vars(replacement), target, std::nullopt};
  std::set<NumVar> bn;
  std::set<FunVar> bf;
  return std::visit([&](const auto& e) { return scan.scan(e, bn, bf); }, in);
}

bool is_free_for(const FunctorPtr& replacement, const FunVar& target, const Expr& in) {
  FreeForScan scan{free_vars(replacement), std::nullopt, target};
  std::set<NumVar> bn;
  std::set<FunVar> bf;
  return std::visit([&](const auto& e) { return scan.scan(e, bn, bf); }, in);
}

// ------------------------------------------------------------ congruent

namespace {

// Bound-variable correspondence for alpha-equivalence: variables bound at
// the same binder depth must be used at matching positions. Free variables
// must be identical.
struct Alpha {
  std::map<NumVar, int> left_num, right_num;
  std::map<FunVar, int> left_fun, right_fun;
  int depth = 0;

  template <typename Var>
  bool var_matches(const Var& a, const Var& b, const std::map<Var, int>& left,
                   const std::map<Var, int>& right) const {
    auto ia = left.find(a);
    auto ib = right.find(b);
    if (ia == left.end() && ib == right.end()) return a == b;
    if (ia == left.end() || ib == right.end()) return false;
    return ia->second == ib->second;
  }

  bool eq(const TermPtr& a, const TermPtr& b) {
    if (a == b && left_num.empty() && right_num.empty() && left_fun.empty() &&
        right_fun.empty()) {
      return true;  // shared subtree with no bindings in play
    }
    const auto& na = a->node();
    const auto& nb = b->node();
    if (na.index() != nb.index()) return false;
    if (const auto* va = std::get_if<NumVarRef>(&na)) {
      return var_matches(va->var, std::get<NumVarRef>(nb).var, left_num,
                         right_num);
    }
    if (const auto* ca = std::get_if<ConstApp>(&na)) {
      const auto& cb = std::get<ConstApp>(nb);
      if (ca->id != cb.id) return false;
      for (std::size_t i = 0; i < ca->nums.size(); ++i) {
        if (!eq(ca->nums[i], cb.nums[i])) return false;
      }
      for (std::size_t i = 0; i < ca->funs.size(); ++i) {
        if (!eq(ca->funs[i], cb.funs[i])) return false;
      }
      return true;
    }
    if (const auto* pa = std::get_if<Apply>(&na)) {
      const auto& pb = std::get<Apply>(nb);
      return eq(pa->fun, pb.fun) && eq(pa->arg, pb.arg);
    }
    if (const auto* da = std::get_if<DefApp>(&na)) {
      const auto& db = std::get<DefApp>(nb);
      return da->name == db.name && eq(da->a, db.a) && eq(da->b, db.b);
    }
    const auto& ra = std::get<RecApp>(na);
    const auto& rb = std::get<RecApp>(nb);
    return eq(ra.base, rb.base) && eq(ra.step, rb.step) && eq(ra.count, rb.count);
  }

  template <typename Var, typename Body>
  bool under_binder(std::map<Var, int>& left, std::map<Var, int>& right,
                    const Var& va, const Var& vb, const Body& go) {
    auto olda = left.find(va) == left.end() ? std::optional<int>()
                                            : std::optional<int>(left[va]);
    auto oldb = right.find(vb) == right.end() ? std::optional<int>()
                                              : std::optional<int>(right[vb]);
    left[va] = depth;
    right[vb] = depth;
    ++depth;
    bool ok = go();
    --depth;
    if (olda) left[va] = *olda; else left.erase(va);
    if (oldb) right[vb] = *oldb; else right.erase(vb);
    return ok;
  }

  bool eq(const FunctorPtr& a, const FunctorPtr& b) {
    const auto& na = a->node();
    const auto& nb = b->node();
    if (na.index() != nb.index()) return false;
    if (const auto* va = std::get_if<FunVarRef>(&na)) {
      return var_matches(va->var, std::get<FunVarRef>(nb).var, left_fun,
                         right_fun);
    }
    if (const auto* ca = std::get_if<ConstFn>(&na)) {
      return ca->id == std::get<ConstFn>(nb).id;
    }
    const auto& la = std::get<Lambda>(na);
    const auto& lb = std::get<Lambda>(nb);
    return under_binder(left_num, right_num, la.var, lb.var,
                        [&] { return eq(la.body, lb.body); });
  }

  bool eq(const FormulaPtr& a, const FormulaPtr& b) {
    const auto& na = a->node();
    const auto& nb = b->node();
    if (na.index() != nb.index()) return false;
    if (const auto* ea = std::get_if<Eq>(&na)) {
      const auto& eb = std::get<Eq>(nb);
      return eq(ea->lhs, eb.lhs) && eq(ea->rhs, eb.rhs);
    }
    if (const auto* ta = std::get_if<Not>(&na)) {
      return eq(ta->body, std::get<Not>(nb).body);
    }
    if (const auto* ba = std::get_if<BinConn>(&na)) {
      const auto& bb = std::get<BinConn>(nb);
      return ba->op == bb.op && eq(ba->lhs, bb.lhs) && eq(ba->rhs, bb.rhs);
    }
    if (const auto* qa = std::get_if<NumQuant>(&na)) {
      const auto& qb = std::get<NumQuant>(nb);
      if (qa->universal != qb.universal) return false;
      return under_binder(left_num, right_num, qa->var, qb.var,
                          [&] { return eq(qa->body, qb.body); });
    }
    const auto& fa = std::get<FunQuant>(na);
    const auto& fb = std::get<FunQuant>(nb);
    if (fa.universal != fb.universal) return false;
    return under_binder(left_fun, right_fun, fa.var, fb.var,
                        [&] { return eq(fa.body, fb.body); });
  }
};

}  // namespace

bool congruent(const TermPtr& a, const TermPtr& b) {
  if (!a || !b) return a == b;
  Alpha alpha;
  return alpha.eq(a, b);
}

bool congruent(const FunctorPtr& a, const FunctorPtr& b) {
  if (!a || !b) return a == b;
  Alpha alpha;
  return alpha.eq(a, b);
}

bool congruent(const FormulaPtr& a, const FormulaPtr& b) {
  if (!a || !b) return a == b;
  Alpha alpha;
  return alpha.eq(a, b);
}

bool congruent(const Expr& a, const Expr& b) {
  if (a.index() != b.index()) return false;
  if (const auto* t = std::get_if<TermPtr>(&a)) {
    return congruent(*t, std::get<TermPtr>(b));
  }
  if (const auto* u = std::get_if<FunctorPtr>(&a)) {
    return congruent(*u, std::get<FunctorPtr>(b));
  }
  return congruent(std::get<FormulaPtr>(a), std::get<FormulaPtr>(b));
}

// ----------------------------------------------------- coded_tuple_view

namespace {

NumSubst coded_tuple_subst(const Expr& e, const NumVar& w,
                           const VarOrdering& ordering) {
  if (all_vars(e).contains(w)) {
    throw Error("coded-tuple variable " + display_name(w) +
                " already occurs in the expression");
  }
  const VarSets free = free_vars(e);
  for (const auto& v : free.nums) {
    if (ordering.position(v) == VarOrdering::npos) {
      throw Error("ordering is missing free variable " + display_name(v));
    }
  }
  NumSubst subst;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    subst[ordering[i]] =
        mk_const(Const::Expof, {mk_var(w), numeral(i)});
  }
  return subst;
}

}  // namespace

TermPtr coded_tuple_view(const TermPtr& t, const NumVar& w,
                         const VarOrdering& ordering) {
  return substitute(t, coded_tuple_subst(t, w, ordering));
}

FunctorPtr coded_tuple_view(const FunctorPtr& u, const NumVar& w,
                            const VarOrdering& ordering) {
  return substitute(u, coded_tuple_subst(u, w, ordering));
}

FormulaPtr coded_tuple_view(const FormulaPtr& f, const NumVar& w,
                            const VarOrdering& ordering) {
  return substitute(f, coded_tuple_subst(f, w, ordering));
}

Expr coded_tuple_view(const Expr& e, const NumVar& w,
                      const VarOrdering& ordering) {
  return std::visit(
      [&](const auto& x) { return Expr{coded_tuple_view(x, w, ordering)}; }, e);
}

// ----------------------------------------------------- node-kind scans

namespace {

template <typename Pred>
bool any_term_node(const TermPtr& t, const Pred& pred);

template <typename Pred>
bool any_functor_node(const FunctorPtr& u, const Pred& pred) {
  if (pred(Expr{u})) return true;
  if (const auto* lam = std::get_if<Lambda>(&u->node())) {
    return any_term_node(lam->body, pred);
  }
  return false;
}

template <typename Pred>
bool any_term_node(const TermPtr& t, const Pred& pred) {
  if (pred(Expr{t})) return true;
  if (const auto* c = std::get_if<ConstApp>(&t->node())) {
    for (const auto& a : c->nums) {
      if (any_term_node(a, pred)) return true;
    }
    for (const auto& u : c->funs) {
      if (any_functor_node(u, pred)) return true;
    }
    return false;
  }
  if (const auto* a = std::get_if<Apply>(&t->node())) {
    return any_functor_node(a->fun, pred) || any_term_node(a->arg, pred);
  }
  if (const auto* r = std::get_if<RecApp>(&t->node())) {
    return any_term_node(r->base, pred) || any_functor_node(r->step, pred) ||
           any_term_node(r->count, pred);
  }
  if (const auto* d = std::get_if<DefApp>(&t->node())) {
    return any_term_node(d->a, pred) || any_term_node(d->b, pred);
  }
  return false;
}

template <typename Pred>
bool any_formula_node(const FormulaPtr& f, const Pred& pred) {
  if (const auto* e = std::get_if<Eq>(&f->node())) {
    return any_term_node(e->lhs, pred) || any_term_node(e->rhs, pred);
  }
  if (const auto* n = std::get_if<Not>(&f->node())) {
    return any_formula_node(n->body, pred);
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    return any_formula_node(b->lhs, pred) || any_formula_node(b->rhs, pred);
  }
  if (const auto* q = std::get_if<NumQuant>(&f->node())) {
    return any_formula_node(q->body, pred);
  }
  return any_formula_node(std::get<FunQuant>(f->node()).body, pred);
}

template <typename Pred>
bool any_node(const Expr& e, const Pred& pred) {
  if (const auto* t = std::get_if<TermPtr>(&e)) return any_term_node(*t, pred);
  if (const auto* u = std::get_if<FunctorPtr>(&e)) {
    return any_functor_node(*u, pred);
  }
  return any_formula_node(std::get<FormulaPtr>(e), pred);
}

}  // namespace

bool contains_rec(const Expr& e) {
  return any_node(e, [](const Expr& x) {
    const auto* t = std::get_if<TermPtr>(&x);
    return t && std::holds_alternative<RecApp>((*t)->node());
  });
}

bool contains_lambda(const Expr& e) {
  return any_node(e, [](const Expr& x) {
    const auto* u = std::get_if<FunctorPtr>(&x);
    return u && std::holds_alternative<Lambda>((*u)->node());
  });
}

}  // namespace tsa
