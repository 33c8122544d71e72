#include "tsa/syntax/print.h"

#include <string_view>

#include "tsa/errors.h"
#include "tsa/syntax/builders.h"
#include "tsa/syntax/names.h"

namespace tsa {

namespace {

// Term print contexts, loosest the printer may emit without parentheses.
// 0: atom, 1: postfix successor, 2: product, 3: sum.
constexpr int kAtom = 0;
constexpr int kPostfix = 1;
constexpr int kProduct = 2;
constexpr int kSum = 3;

void print_term(std::string& out, const TermPtr& t, int allowed);
void print_functor_head(std::string& out, const FunctorPtr& u);

void print_functor(std::string& out, const FunctorPtr& u) {
  if (const auto* v = std::get_if<FunVarRef>(&u->node())) {
    if (!is_fun_var_word(v->var.name)) out += '\'';
    out += display_name(v->var);
    return;
  }
  if (const auto* c = std::get_if<ConstFn>(&u->node())) {
    out += const_sig(c->id).name;
    return;
  }
  const auto& lam = std::get<Lambda>(u->node());
  out += "lam ";
  out += display_name(lam.var);
  out += ". ";
  print_term(out, lam.body, kSum);
}

// Functor in application-head position. Constants and lambdas need
// parentheses there so the result does not reparse as a constant
// application or swallow the argument into the lambda body.
void print_functor_head(std::string& out, const FunctorPtr& u) {
  if (std::holds_alternative<FunVarRef>(u->node())) {
    print_functor(out, u);
    return;
  }
  out += '(';
  print_functor(out, u);
  out += ')';
}

void print_term(std::string& out, const TermPtr& t, int allowed) {
  std::uint64_t n = 0;
  if (is_numeral(t, &n)) {
    out += std::to_string(n);
    return;
  }
  if (const auto* v = std::get_if<NumVarRef>(&t->node())) {
    out += display_name(v->var);
    return;
  }
  if (const auto* a = std::get_if<Apply>(&t->node())) {
    print_functor_head(out, a->fun);
    out += '(';
    print_term(out, a->arg, kSum);
    out += ')';
    return;
  }
  if (const auto* r = std::get_if<RecApp>(&t->node())) {
    out += "rec(";
    print_term(out, r->base, kSum);
    out += "; ";
    print_functor(out, r->step);
    out += "; ";
    print_term(out, r->count, kSum);
    out += ')';
    return;
  }
  if (const auto* d = std::get_if<DefApp>(&t->node())) {
    out += d->name;
    out += '(';
    print_term(out, d->a, kSum);
    out += ", ";
    print_term(out, d->b, kSum);
    out += ')';
    return;
  }
  const auto& c = std::get<ConstApp>(t->node());
  switch (c.id) {
    case Const::Succ: {
      // Chain not rooted at zero (else the numeral case caught it).
      if (allowed < kPostfix) {
        out += '(';
        print_term(out, t, kPostfix);
        out += ')';
        return;
      }
      print_term(out, c.nums[0], kPostfix);
      out += '\'';
      return;
    }
    case Const::Add: {
      if (allowed < kSum) {
        out += '(';
        print_term(out, t, kSum);
        out += ')';
        return;
      }
      print_term(out, c.nums[0], kSum);
      out += " + ";
      print_term(out, c.nums[1], kProduct);
      return;
    }
    case Const::Mul: {
      if (allowed < kProduct) {
        out += '(';
        print_term(out, t, kProduct);
        out += ')';
        return;
      }
      print_term(out, c.nums[0], kProduct);
      out += " * ";
      print_term(out, c.nums[1], kPostfix);
      return;
    }
    default: {
      out += const_sig(c.id).name;
      if (c.nums.empty() && c.funs.empty()) return;  // the constant 0
      out += '(';
      bool first = true;
      for (const auto& arg : c.nums) {
        if (!first) out += ", ";
        first = false;
        print_term(out, arg, kSum);
      }
      for (const auto& u : c.funs) {
        if (!first) out += ", ";
        first = false;
        print_functor(out, u);
      }
      out += ')';
      return;
    }
  }
}

// Formula print contexts: 0 atom, 1 negation, 2 conjunction, 3 disjunction,
// 4 implication, 5 quantifier body (maximal).
constexpr int kFAtom = 0;
constexpr int kFNot = 1;
constexpr int kFAnd = 2;
constexpr int kFOr = 3;
constexpr int kFImplies = 4;
constexpr int kFFull = 5;

void print_formula(std::string& out, const FormulaPtr& f, int allowed) {
  if (const auto* e = std::get_if<Eq>(&f->node())) {
    print_term(out, e->lhs, kSum);
    out += " = ";
    print_term(out, e->rhs, kSum);
    return;
  }
  if (const auto* n = std::get_if<Not>(&f->node())) {
    if (allowed < kFNot) {
      out += '(';
      print_formula(out, f, kFFull);
      out += ')';
      return;
    }
    out += '~';
    print_formula(out, n->body, kFNot);
    return;
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    int prec = b->op == Conn::And ? kFAnd : b->op == Conn::Or ? kFOr : kFImplies;
    if (allowed < prec) {
      out += '(';
      print_formula(out, f, kFFull);
      out += ')';
      return;
    }
    const char* sep = b->op == Conn::And  ? " & "
                      : b->op == Conn::Or ? " \\/ "
                                          : " -> ";
    // & and \/ are left-associative, -> is right-associative.
    int left = b->op == Conn::Implies ? prec - 1 : prec;
    int right = b->op == Conn::Implies ? prec : prec - 1;
    print_formula(out, b->lhs, left);
    out += sep;
    print_formula(out, b->rhs, right);
    return;
  }
  if (allowed < kFFull) {
    out += '(';
    print_formula(out, f, kFFull);
    out += ')';
    return;
  }
  if (const auto* q = std::get_if<NumQuant>(&f->node())) {
    out += q->universal ? "forall " : "exists ";
    out += display_name(q->var);
    out += ". ";
    print_formula(out, q->body, kFFull);
    return;
  }
  const auto& q = std::get<FunQuant>(f->node());
  out += q.universal ? "forall " : "exists ";
  if (!is_fun_var_word(q.var.name)) out += '\'';
  out += display_name(q.var);
  out += ". ";
  print_formula(out, q.body, kFFull);
}

}  // namespace

std::string to_text(const TermPtr& t) {
  if (!t) throw InternalError("printing null term");
  std::string out;
  print_term(out, t, kSum);
  return out;
}

std::string to_text(const FunctorPtr& u) {
  if (!u) throw InternalError("printing null functor");
  std::string out;
  print_functor(out, u);
  return out;
}

std::string to_text(const FormulaPtr& f) {
  if (!f) throw InternalError("printing null formula");
  std::string out;
  print_formula(out, f, kFFull);
  return out;
}

std::string to_text(const Expr& e) {
  return std::visit([](const auto& x) { return to_text(x); }, e);
}

}  // namespace tsa
