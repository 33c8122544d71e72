#include "tsa/syntax/ast.h"

#include <cctype>

#include "tsa/errors.h"
#include "tsa/syntax/names.h"

namespace tsa {

TermPtr mk_var(NumVar v) {
  return std::make_shared<Term>(NumVarRef{std::move(v)});
}

TermPtr mk_var(std::string name, std::uint32_t index) {
  return mk_var(NumVar{std::move(name), index});
}

TermPtr mk_const(Const id, std::vector<TermPtr> nums,
                 std::vector<FunctorPtr> funs) {
  const auto& sig = const_sig(id);
  if (static_cast<int>(nums.size()) != sig.num_args ||
      static_cast<int>(funs.size()) != sig.fun_args) {
    throw SortError(std::string("arity mismatch for constant ") +
                    std::string(sig.name));
  }
  for (const auto& t : nums) {
    if (!t) throw SortError("null number argument");
  }
  for (const auto& u : funs) {
    if (!u) throw SortError("null functor argument");
  }
  return std::make_shared<Term>(ConstApp{id, std::move(nums), std::move(funs)});
}

TermPtr mk_apply(FunctorPtr fun, TermPtr arg) {
  if (!fun || !arg) throw SortError("null application part");
  return std::make_shared<Term>(Apply{std::move(fun), std::move(arg)});
}

TermPtr mk_rec(TermPtr base, FunctorPtr step, TermPtr count) {
  if (!base || !step || !count) throw SortError("null rec part");
  return std::make_shared<Term>(
      RecApp{std::move(base), std::move(step), std::move(count)});
}

bool valid_defined_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return !is_reserved_word(name) && !is_fun_var_word(name);
}

TermPtr mk_defined(std::string name, TermPtr a, TermPtr b) {
  if (!a || !b) throw SortError("null number argument");
  if (!valid_defined_name(name)) {
    throw SortError("'" + name + "' cannot name a defined constant");
  }
  return std::make_shared<Term>(DefApp{std::move(name), std::move(a), std::move(b)});
}

FunctorPtr mk_fun_var(FunVar v) {
  return std::make_shared<Functor>(FunVarRef{std::move(v)});
}

FunctorPtr mk_fun_var(std::string name, std::uint32_t index) {
  return mk_fun_var(FunVar{std::move(name), index});
}

FunctorPtr mk_const_fn(Const id) {
  if (!is_unary_const(id)) {
    throw SortError(std::string("constant ") + std::string(const_sig(id).name) +
                    " is not one-place and cannot stand as a functor");
  }
  return std::make_shared<Functor>(ConstFn{id});
}

FunctorPtr mk_lambda(NumVar var, TermPtr body) {
  if (!body) throw SortError("null lambda body");
  return std::make_shared<Functor>(Lambda{std::move(var), std::move(body)});
}

FormulaPtr mk_eq(TermPtr lhs, TermPtr rhs) {
  if (!lhs || !rhs) throw SortError("null equation side");
  return std::make_shared<Formula>(Eq{std::move(lhs), std::move(rhs)});
}

FormulaPtr mk_not(FormulaPtr body) {
  if (!body) throw SortError("null negation body");
  return std::make_shared<Formula>(Not{std::move(body)});
}

static FormulaPtr mk_bin(Conn op, FormulaPtr lhs, FormulaPtr rhs) {
  if (!lhs || !rhs) throw SortError("null connective operand");
  return std::make_shared<Formula>(BinConn{op, std::move(lhs), std::move(rhs)});
}

FormulaPtr mk_and(FormulaPtr lhs, FormulaPtr rhs) {
  return mk_bin(Conn::And, std::move(lhs), std::move(rhs));
}

FormulaPtr mk_or(FormulaPtr lhs, FormulaPtr rhs) {
  return mk_bin(Conn::Or, std::move(lhs), std::move(rhs));
}

FormulaPtr mk_implies(FormulaPtr lhs, FormulaPtr rhs) {
  return mk_bin(Conn::Implies, std::move(lhs), std::move(rhs));
}

FormulaPtr mk_forall(NumVar var, FormulaPtr body) {
  if (!body) throw SortError("null quantifier body");
  return std::make_shared<Formula>(NumQuant{true, std::move(var), std::move(body)});
}

FormulaPtr mk_exists(NumVar var, FormulaPtr body) {
  if (!body) throw SortError("null quantifier body");
  return std::make_shared<Formula>(NumQuant{false, std::move(var), std::move(body)});
}

FormulaPtr mk_forall_fun(FunVar var, FormulaPtr body) {
  if (!body) throw SortError("null quantifier body");
  return std::make_shared<Formula>(FunQuant{true, std::move(var), std::move(body)});
}

FormulaPtr mk_exists_fun(FunVar var, FormulaPtr body) {
  if (!body) throw SortError("null quantifier body");
  return std::make_shared<Formula>(FunQuant{false, std::move(var), std::move(body)});
}

// ------------------------------------------------------------- equality

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  const auto& na = a->node();
  const auto& nb = b->node();
  if (na.index() != nb.index()) return false;
  if (const auto* va = std::get_if<NumVarRef>(&na)) {
    return va->var == std::get<NumVarRef>(nb).var;
  }
  if (const auto* ca = std::get_if<ConstApp>(&na)) {
    const auto& cb = std::get<ConstApp>(nb);
    if (ca->id != cb.id) return false;
    for (std::size_t i = 0; i < ca->nums.size(); ++i) {
      if (!equal(ca->nums[i], cb.nums[i])) return false;
    }
    for (std::size_t i = 0; i < ca->funs.size(); ++i) {
      if (!equal(ca->funs[i], cb.funs[i])) return false;
    }
    return true;
  }
  if (const auto* pa = std::get_if<Apply>(&na)) {
    const auto& pb = std::get<Apply>(nb);
    return equal(pa->fun, pb.fun) && equal(pa->arg, pb.arg);
  }
  if (const auto* da = std::get_if<DefApp>(&na)) {
    const auto& db = std::get<DefApp>(nb);
    return da->name == db.name && equal(da->a, db.a) && equal(da->b, db.b);
  }
  const auto& ra = std::get<RecApp>(na);
  const auto& rb = std::get<RecApp>(nb);
  return equal(ra.base, rb.base) && equal(ra.step, rb.step) &&
         equal(ra.count, rb.count);
}

bool equal(const FunctorPtr& a, const FunctorPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  const auto& na = a->node();
  const auto& nb = b->node();
  if (na.index() != nb.index()) return false;
  if (const auto* va = std::get_if<FunVarRef>(&na)) {
    return va->var == std::get<FunVarRef>(nb).var;
  }
  if (const auto* ca = std::get_if<ConstFn>(&na)) {
    return ca->id == std::get<ConstFn>(nb).id;
  }
  const auto& la = std::get<Lambda>(na);
  const auto& lb = std::get<Lambda>(nb);
  return la.var == lb.var && equal(la.body, lb.body);
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  const auto& na = a->node();
  const auto& nb = b->node();
  if (na.index() != nb.index()) return false;
  if (const auto* ea = std::get_if<Eq>(&na)) {
    const auto& eb = std::get<Eq>(nb);
    return equal(ea->lhs, eb.lhs) && equal(ea->rhs, eb.rhs);
  }
  if (const auto* ta = std::get_if<Not>(&na)) {
    return equal(ta->body, std::get<Not>(nb).body);
  }
  if (const auto* ba = std::get_if<BinConn>(&na)) {
    const auto& bb = std::get<BinConn>(nb);
    return ba->op == bb.op && equal(ba->lhs, bb.lhs) && equal(ba->rhs, bb.rhs);
  }
  if (const auto* qa = std::get_if<NumQuant>(&na)) {
    const auto& qb = std::get<NumQuant>(nb);
    return qa->universal == qb.universal && qa->var == qb.var &&
           equal(qa->body, qb.body);
  }
  const auto& fa = std::get<FunQuant>(na);
  const auto& fb = std::get<FunQuant>(nb);
  return fa.universal == fb.universal && fa.var == fb.var &&
         equal(fa.body, fb.body);
}

}  // namespace tsa
