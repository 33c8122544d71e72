#include "tsa/schemas/schemas.h"

#include <array>
#include <utility>

#include "tsa/errors.h"
#include "tsa/syntax/builders.h"
#include "tsa/syntax/ops.h"

namespace tsa {

// ------------------------------------------------------------------ names

namespace {

constexpr std::array<const char*, kSchemaCount> kSchemaNames = {
    "ind",
    "lambda-conv",
    "rec",
    "rec-axiom",
    "ac00-bang",
    "qf-ac00",
    "qft-ac00",
    "cfd",
    "refl-repl",
    "fun-var-eq",
    "unbounded-search",
    "minimal-countable-choice",
    "bim-prim-rec",
    "wkv-prim-rec",
};

}  // namespace

const char* schema_name(SchemaId id) {
  return kSchemaNames.at(static_cast<std::size_t>(id));
}

std::optional<SchemaId> schema_by_name(const std::string& name) {
  for (int i = 0; i < kSchemaCount; ++i) {
    if (name == kSchemaNames[static_cast<std::size_t>(i)]) {
      return static_cast<SchemaId>(i);
    }
  }
  return std::nullopt;
}

const std::vector<SchemaId>& all_schemas() {
  static const std::vector<SchemaId> ids = [] {
    std::vector<SchemaId> v;
    for (int i = 0; i < kSchemaCount; ++i) v.push_back(static_cast<SchemaId>(i));
    return v;
  }();
  return ids;
}

// -------------------------------------------------------- piece accessors

namespace {

const Piece& need(const PieceMap& pieces, const char* key) {
  auto it = pieces.find(key);
  if (it == pieces.end()) {
    throw SortError(std::string("missing piece '") + key + "'");
  }
  return it->second;
}

bool has_piece(const PieceMap& pieces, const char* key) {
  return pieces.count(key) != 0;
}

FormulaPtr need_formula(const PieceMap& pieces, const char* key) {
  const Piece& p = need(pieces, key);
  if (const auto* f = std::get_if<FormulaPtr>(&p); f && *f) return *f;
  throw SortError(std::string("piece '") + key + "' must be a formula");
}

TermPtr need_term(const PieceMap& pieces, const char* key) {
  const Piece& p = need(pieces, key);
  if (const auto* t = std::get_if<TermPtr>(&p); t && *t) return *t;
  if (const auto* v = std::get_if<NumVar>(&p)) return mk_var(*v);
  throw SortError(std::string("piece '") + key + "' must be a term");
}

FunctorPtr need_functor(const PieceMap& pieces, const char* key) {
  const Piece& p = need(pieces, key);
  if (const auto* u = std::get_if<FunctorPtr>(&p); u && *u) return *u;
  if (const auto* v = std::get_if<FunVar>(&p)) return mk_fun_var(*v);
  throw SortError(std::string("piece '") + key + "' must be a functor");
}

NumVar need_num_var(const PieceMap& pieces, const char* key) {
  const Piece& p = need(pieces, key);
  if (const auto* v = std::get_if<NumVar>(&p)) return *v;
  if (const auto* t = std::get_if<TermPtr>(&p); t && *t) {
    if (const auto* r = std::get_if<NumVarRef>(&(*t)->node())) return r->var;
  }
  throw SortError(std::string("piece '") + key + "' must be a number variable");
}

FunVar need_fun_var(const PieceMap& pieces, const char* key) {
  const Piece& p = need(pieces, key);
  if (const auto* v = std::get_if<FunVar>(&p)) return *v;
  if (const auto* u = std::get_if<FunctorPtr>(&p); u && *u) {
    if (const auto* r = std::get_if<FunVarRef>(&(*u)->node())) return r->var;
  }
  throw SortError(std::string("piece '") + key + "' must be a function variable");
}

std::string flag_or(const PieceMap& pieces, const char* key,
                    const std::string& fallback) {
  auto it = pieces.find(key);
  if (it == pieces.end()) return fallback;
  if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
  throw SortError(std::string("piece '") + key + "' must be an option string");
}

// Records the verdict; a failed condition aborts the instantiation.
void require(SchemaInstance& inst, std::string description, bool holds) {
  inst.side_conditions.push_back({description, holds});
  if (!holds) throw SideConditionError(inst.side_conditions.back().description);
}

// ------------------------------------------------------- shared builders

TermPtr zero_term() { return mk_const(Const::Zero); }

TermPtr succ_term(TermPtr t) { return mk_const(Const::Succ, {std::move(t)}); }

TermPtr fv_app(const FunVar& v, TermPtr arg) {
  return mk_apply(mk_fun_var(v), std::move(arg));
}

TermPtr pair_term(TermPtr a, TermPtr b) {
  return tuple_code({std::move(a), std::move(b)});
}

bool quantifier_free(const FormulaPtr& f) {
  if (std::get_if<Eq>(&f->node())) return true;
  if (const auto* n = std::get_if<Not>(&f->node())) {
    return quantifier_free(n->body);
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    return quantifier_free(b->lhs) && quantifier_free(b->rhs);
  }
  return false;
}

// --------------------------------------------------- schema constructors

FormulaPtr build_ind(SchemaInstance& inst) {
  FormulaPtr matrix = need_formula(inst.pieces, "matrix");
  NumVar var = need_num_var(inst.pieces, "var");
  FormulaPtr at_zero = substitute_num(matrix, var, zero_term());
  FormulaPtr at_next = substitute_num(matrix, var, succ_term(mk_var(var)));
  FormulaPtr step = mk_forall(var, mk_implies(matrix, std::move(at_next)));
  return mk_implies(mk_and(std::move(at_zero), std::move(step)), matrix);
}

FormulaPtr build_lambda_conv(SchemaInstance& inst) {
  NumVar var = need_num_var(inst.pieces, "var");
  TermPtr body = need_term(inst.pieces, "body");
  TermPtr arg = need_term(inst.pieces, "arg");
  require(inst, "the argument is free for the bound variable in the body",
          is_free_for(arg, var, Expr{body}));
  TermPtr applied = mk_apply(mk_lambda(var, body), arg);
  return mk_eq(std::move(applied), substitute_num(body, var, arg));
}

FormulaPtr build_rec(SchemaInstance& inst) {
  TermPtr base = need_term(inst.pieces, "base");
  FunctorPtr step = need_functor(inst.pieces, "step");
  TermPtr count = need_term(inst.pieces, "count");
  FormulaPtr at_zero = mk_eq(mk_rec(base, step, zero_term()), base);
  TermPtr prev = mk_rec(base, step, count);
  FormulaPtr at_next =
      mk_eq(mk_rec(base, step, succ_term(count)),
            mk_apply(step, pair_term(std::move(prev), count)));
  return mk_and(std::move(at_zero), std::move(at_next));
}

FormulaPtr build_rec_axiom(SchemaInstance& inst) {
  TermPtr base = need_term(inst.pieces, "base");
  FunctorPtr step = need_functor(inst.pieces, "step");
  TermPtr count = need_term(inst.pieces, "count");
  TermPtr value = mk_rec(base, step, count);
  return iteration_formula(base, step, count, value, VarSets{});
}

FormulaPtr build_ac00_bang(SchemaInstance& inst) {
  FormulaPtr matrix = need_formula(inst.pieces, "matrix");
  NumVar x = need_num_var(inst.pieces, "x");
  NumVar y = need_num_var(inst.pieces, "y");
  FunVar alpha = need_fun_var(inst.pieces, "alpha");
  require(inst, "the argument variable and the value variable are distinct",
          x != y);
  require(inst, "the choice function variable does not occur free in the matrix",
          free_vars(matrix).funs.count(alpha) == 0);
  TermPtr chosen = fv_app(alpha, mk_var(x));
  require(inst,
          "the applied choice function is free for the value variable in the "
          "matrix",
          is_free_for(chosen, y, Expr{matrix}));
  FormulaPtr antecedent = mk_forall(x, exists_unique(y, matrix));
  FormulaPtr consequent = mk_exists_fun(
      alpha, mk_forall(x, substitute_num(matrix, y, std::move(chosen))));
  return mk_implies(std::move(antecedent), std::move(consequent));
}

FormulaPtr build_qf_ac00(SchemaInstance& inst) {
  FormulaPtr matrix = need_formula(inst.pieces, "matrix");
  NumVar x = need_num_var(inst.pieces, "x");
  NumVar y = need_num_var(inst.pieces, "y");
  FunVar alpha = need_fun_var(inst.pieces, "alpha");
  require(inst, "the argument variable and the value variable are distinct",
          x != y);
  require(inst, "the matrix is quantifier-free", quantifier_free(matrix));
  require(inst, "the choice function variable does not occur in the matrix",
          all_vars(matrix).funs.count(alpha) == 0);
  TermPtr chosen = fv_app(alpha, mk_var(x));
  require(inst,
          "the applied choice function is free for the value variable in the "
          "matrix",
          is_free_for(chosen, y, Expr{matrix}));
  FormulaPtr antecedent = mk_forall(x, mk_exists(y, matrix));
  FormulaPtr consequent = mk_exists_fun(
      alpha, mk_forall(x, substitute_num(matrix, y, std::move(chosen))));
  return mk_implies(std::move(antecedent), std::move(consequent));
}

FormulaPtr build_qft_ac00(SchemaInstance& inst) {
  TermPtr tmpl = need_term(inst.pieces, "template");
  NumVar hole = need_num_var(inst.pieces, "hole");
  NumVar x = need_num_var(inst.pieces, "x");
  NumVar y = need_num_var(inst.pieces, "y");
  FunVar alpha = need_fun_var(inst.pieces, "alpha");
  require(inst, "the argument variable and the value variable are distinct",
          x != y);
  VarSets tmpl_free = free_vars(tmpl);
  require(inst, "the argument variable does not occur free in the template",
          tmpl_free.nums.count(x) == 0);
  require(inst, "the value variable does not occur free in the template",
          tmpl_free.nums.count(y) == 0);
  require(inst, "the choice function variable does not occur in the template",
          all_vars(tmpl).funs.count(alpha) == 0);
  TermPtr searched = pair_term(mk_var(x), mk_var(y));
  require(inst,
          "the coded pair of the arguments is free for the hole in the "
          "template",
          is_free_for(searched, hole, Expr{tmpl}));
  TermPtr chosen = pair_term(mk_var(x), fv_app(alpha, mk_var(x)));
  require(inst,
          "the coded pair with the applied choice function is free for the "
          "hole in the template",
          is_free_for(chosen, hole, Expr{tmpl}));
  FormulaPtr antecedent = mk_forall(
      x, mk_exists(y, mk_eq(substitute_num(tmpl, hole, std::move(searched)),
                            zero_term())));
  FormulaPtr consequent = mk_exists_fun(
      alpha, mk_forall(x, mk_eq(substitute_num(tmpl, hole, std::move(chosen)),
                                zero_term())));
  return mk_implies(std::move(antecedent), std::move(consequent));
}

FormulaPtr build_cfd(SchemaInstance& inst) {
  FormulaPtr matrix = need_formula(inst.pieces, "matrix");
  NumVar var = need_num_var(inst.pieces, "var");
  FunVar beta = need_fun_var(inst.pieces, "beta");
  require(inst,
          "the characteristic function variable does not occur free in the "
          "matrix",
          free_vars(matrix).funs.count(beta) == 0);
  FormulaPtr antecedent = mk_forall(var, mk_or(matrix, mk_not(matrix)));
  TermPtr value = fv_app(beta, mk_var(var));
  FormulaPtr bounded = le_formula(value, numeral(1));
  FormulaPtr tracks = iff_formula(mk_eq(value, zero_term()), matrix);
  FormulaPtr consequent = mk_exists_fun(
      beta, mk_forall(var, mk_and(std::move(bounded), std::move(tracks))));
  return mk_implies(std::move(antecedent), std::move(consequent));
}

FormulaPtr build_refl_repl(SchemaInstance& inst) {
  if (has_piece(inst.pieces, "var")) {
    NumVar var = need_num_var(inst.pieces, "var");
    return mk_eq(mk_var(var), mk_var(var));
  }
  if (has_piece(inst.pieces, "fun")) {
    FunVar fun = need_fun_var(inst.pieces, "fun");
    return functor_eq_formula(mk_fun_var(fun), mk_fun_var(fun));
  }
  if (has_piece(inst.pieces, "x")) {
    NumVar x = need_num_var(inst.pieces, "x");
    NumVar y = need_num_var(inst.pieces, "y");
    FormulaPtr matrix = need_formula(inst.pieces, "matrix");
    NumVar hole = need_num_var(inst.pieces, "hole");
    require(inst, "the left variable is free for the hole in the matrix",
            is_free_for(mk_var(x), hole, Expr{matrix}));
    require(inst, "the right variable is free for the hole in the matrix",
            is_free_for(mk_var(y), hole, Expr{matrix}));
    FormulaPtr at_x = substitute_num(matrix, hole, mk_var(x));
    FormulaPtr at_y = substitute_num(matrix, hole, mk_var(y));
    return mk_implies(mk_eq(mk_var(x), mk_var(y)),
                      mk_implies(std::move(at_x), std::move(at_y)));
  }
  if (has_piece(inst.pieces, "u")) {
    FunVar u = need_fun_var(inst.pieces, "u");
    FunVar v = need_fun_var(inst.pieces, "v");
    FormulaPtr matrix = need_formula(inst.pieces, "matrix");
    FunVar hole = need_fun_var(inst.pieces, "hole");
    require(inst,
            "the left function variable is free for the hole in the matrix",
            is_free_for(mk_fun_var(u), hole, Expr{matrix}));
    require(inst,
            "the right function variable is free for the hole in the matrix",
            is_free_for(mk_fun_var(v), hole, Expr{matrix}));
    FormulaPtr at_u = substitute_fun(matrix, hole, mk_fun_var(u));
    FormulaPtr at_v = substitute_fun(matrix, hole, mk_fun_var(v));
    return mk_implies(functor_eq_formula(mk_fun_var(u), mk_fun_var(v)),
                      mk_implies(std::move(at_u), std::move(at_v)));
  }
  throw SortError(
      "refl-repl needs pieces {var}, {fun}, {x, y, matrix, hole}, or "
      "{u, v, matrix, hole}");
}

FormulaPtr build_fun_var_eq(SchemaInstance& inst) {
  NumVar x = need_num_var(inst.pieces, "x");
  NumVar y = need_num_var(inst.pieces, "y");
  FunVar alpha = need_fun_var(inst.pieces, "alpha");
  return mk_implies(mk_eq(mk_var(x), mk_var(y)),
                    mk_eq(fv_app(alpha, mk_var(x)), fv_app(alpha, mk_var(y))));
}

// Shared antecedent of the search/choice schemata:
//   forall m exists n. alpha(<m, n>) = 0.
FormulaPtr total_search_premise(const FunVar& alpha, const NumVar& m,
                                const NumVar& n) {
  return mk_forall(
      m, mk_exists(n, mk_eq(fv_app(alpha, pair_term(mk_var(m), mk_var(n))),
                            zero_term())));
}

FormulaPtr build_unbounded_search(SchemaInstance& inst) {
  FunVar alpha = need_fun_var(inst.pieces, "alpha");
  NumVar m = need_num_var(inst.pieces, "m");
  NumVar n = need_num_var(inst.pieces, "n");
  FunVar gamma = need_fun_var(inst.pieces, "gamma");
  std::string lt = flag_or(inst.pieces, "lt", "plus");
  if (lt != "plus" && lt != "monus") {
    throw SortError("piece 'lt' must be \"plus\" or \"monus\"");
  }
  require(inst, "the sequence variable and the result variable are distinct",
          alpha != gamma);
  require(inst, "the position variable and the witness variable are distinct",
          m != n);
  TermPtr at_result = fv_app(gamma, mk_var(m));
  FormulaPtr found = mk_eq(
      fv_app(alpha, pair_term(mk_var(m), at_result)), zero_term());
  FormulaPtr below;
  if (lt == "plus") {
    NumVar z = fresh_num_var("z", {m, n});
    below = mk_exists(
        z, mk_eq(mk_const(Const::Add, {succ_term(mk_var(z)), mk_var(n)}),
                 fv_app(gamma, mk_var(m))));
  } else {
    below = lt_formula(mk_var(n), fv_app(gamma, mk_var(m)));
  }
  FormulaPtr none_below = mk_forall(
      n, mk_implies(std::move(below),
                    mk_not(mk_eq(fv_app(alpha, pair_term(mk_var(m), mk_var(n))),
                                 zero_term()))));
  FormulaPtr consequent = mk_exists_fun(
      gamma, mk_forall(m, mk_and(std::move(found), std::move(none_below))));
  return mk_forall_fun(
      alpha, mk_implies(total_search_premise(alpha, m, n), std::move(consequent)));
}

FormulaPtr build_minimal_countable_choice(SchemaInstance& inst) {
  FunVar alpha = need_fun_var(inst.pieces, "alpha");
  NumVar m = need_num_var(inst.pieces, "m");
  NumVar n = need_num_var(inst.pieces, "n");
  FunVar gamma = need_fun_var(inst.pieces, "gamma");
  require(inst, "the sequence variable and the result variable are distinct",
          alpha != gamma);
  require(inst, "the position variable and the witness variable are distinct",
          m != n);
  FormulaPtr found = mk_eq(
      fv_app(alpha, pair_term(mk_var(m), fv_app(gamma, mk_var(m)))), zero_term());
  FormulaPtr consequent = mk_exists_fun(gamma, mk_forall(m, std::move(found)));
  return mk_forall_fun(
      alpha, mk_implies(total_search_premise(alpha, m, n), std::move(consequent)));
}

FormulaPtr build_bim_prim_rec(SchemaInstance& inst) {
  FunVar alpha = need_fun_var(inst.pieces, "alpha");
  FunVar beta = need_fun_var(inst.pieces, "beta");
  FunVar gamma = need_fun_var(inst.pieces, "gamma");
  NumVar m = need_num_var(inst.pieces, "m");
  NumVar n = need_num_var(inst.pieces, "n");
  require(inst, "the base and step function variables are distinct",
          alpha != beta);
  require(inst, "the result variable differs from the base function variable",
          gamma != alpha);
  require(inst, "the result variable differs from the step function variable",
          gamma != beta);
  require(inst, "the position variable and the stage variable are distinct",
          m != n);
  FormulaPtr at_zero =
      mk_eq(fv_app(gamma, pair_term(mk_var(m), zero_term())),
            fv_app(alpha, mk_var(m)));
  TermPtr prev = fv_app(gamma, pair_term(mk_var(m), mk_var(n)));
  FormulaPtr at_next =
      mk_eq(fv_app(gamma, pair_term(mk_var(m), succ_term(mk_var(n)))),
            fv_app(beta, tuple_code({mk_var(m), mk_var(n), std::move(prev)})));
  FormulaPtr body = mk_forall(
      m, mk_forall(n, mk_and(std::move(at_zero), std::move(at_next))));
  return mk_forall_fun(
      alpha, mk_forall_fun(beta, mk_exists_fun(gamma, std::move(body))));
}

FormulaPtr build_wkv_prim_rec(SchemaInstance& inst) {
  TermPtr base = need_term(inst.pieces, "base");
  FunctorPtr step = need_functor(inst.pieces, "step");
  FunVar beta = need_fun_var(inst.pieces, "beta");
  NumVar y = need_num_var(inst.pieces, "y");
  require(inst, "the course variable does not occur free in the base",
          free_vars(base).funs.count(beta) == 0);
  require(inst, "the course variable does not occur free in the step",
          free_vars(step).funs.count(beta) == 0);
  require(inst, "the stage variable does not occur free in the step",
          free_vars(step).nums.count(y) == 0);
  FormulaPtr at_zero = mk_eq(fv_app(beta, zero_term()), base);
  FormulaPtr at_next = mk_forall(
      y, mk_eq(fv_app(beta, succ_term(mk_var(y))),
               mk_apply(step, pair_term(mk_var(y), fv_app(beta, mk_var(y))))));
  return mk_exists_fun(beta, mk_and(std::move(at_zero), std::move(at_next)));
}

}  // namespace

FormulaPtr instantiate(SchemaInstance& inst) {
  inst.side_conditions.clear();
  switch (inst.schema) {
    case SchemaId::Ind: return build_ind(inst);
    case SchemaId::LambdaConv: return build_lambda_conv(inst);
    case SchemaId::Rec: return build_rec(inst);
    case SchemaId::RecAxiom: return build_rec_axiom(inst);
    case SchemaId::Ac00Bang: return build_ac00_bang(inst);
    case SchemaId::QfAc00: return build_qf_ac00(inst);
    case SchemaId::QftAc00: return build_qft_ac00(inst);
    case SchemaId::Cfd: return build_cfd(inst);
    case SchemaId::ReflRepl: return build_refl_repl(inst);
    case SchemaId::FunVarEq: return build_fun_var_eq(inst);
    case SchemaId::UnboundedSearch: return build_unbounded_search(inst);
    case SchemaId::MinimalCountableChoice:
      return build_minimal_countable_choice(inst);
    case SchemaId::BimPrimRec: return build_bim_prim_rec(inst);
    case SchemaId::WkvPrimRec: return build_wkv_prim_rec(inst);
  }
  throw InternalError("unhandled schema id");
}

FormulaPtr instantiate(SchemaId schema, const PieceMap& pieces) {
  SchemaInstance inst{schema, pieces, {}};
  return instantiate(inst);
}

// ------------------------------------------------------------- matching

namespace {

// Structural probes used by the matchers. Each returns the parts of one
// node shape, or absent when the head node differs.

struct FormulaParts {
  FormulaPtr lhs, rhs;
};

std::optional<FormulaParts> as_implies(const FormulaPtr& f) {
  if (const auto* b = std::get_if<BinConn>(&f->node());
      b && b->op == Conn::Implies) {
    return FormulaParts{b->lhs, b->rhs};
  }
  return std::nullopt;
}

std::optional<FormulaParts> as_and(const FormulaPtr& f) {
  if (const auto* b = std::get_if<BinConn>(&f->node()); b && b->op == Conn::And) {
    return FormulaParts{b->lhs, b->rhs};
  }
  return std::nullopt;
}

std::optional<FormulaParts> as_or(const FormulaPtr& f) {
  if (const auto* b = std::get_if<BinConn>(&f->node()); b && b->op == Conn::Or) {
    return FormulaParts{b->lhs, b->rhs};
  }
  return std::nullopt;
}

struct NumBinder {
  NumVar var;
  FormulaPtr body;
};

std::optional<NumBinder> as_forall(const FormulaPtr& f) {
  if (const auto* q = std::get_if<NumQuant>(&f->node()); q && q->universal) {
    return NumBinder{q->var, q->body};
  }
  return std::nullopt;
}

std::optional<NumBinder> as_exists(const FormulaPtr& f) {
  if (const auto* q = std::get_if<NumQuant>(&f->node()); q && !q->universal) {
    return NumBinder{q->var, q->body};
  }
  return std::nullopt;
}

struct FunBinder {
  FunVar var;
  FormulaPtr body;
};

std::optional<FunBinder> as_forall_fun(const FormulaPtr& f) {
  if (const auto* q = std::get_if<FunQuant>(&f->node()); q && q->universal) {
    return FunBinder{q->var, q->body};
  }
  return std::nullopt;
}

std::optional<FunBinder> as_exists_fun(const FormulaPtr& f) {
  if (const auto* q = std::get_if<FunQuant>(&f->node()); q && !q->universal) {
    return FunBinder{q->var, q->body};
  }
  return std::nullopt;
}

struct TermParts {
  TermPtr lhs, rhs;
};

std::optional<TermParts> as_eq(const FormulaPtr& f) {
  if (const auto* e = std::get_if<Eq>(&f->node())) {
    return TermParts{e->lhs, e->rhs};
  }
  return std::nullopt;
}

std::optional<NumVar> as_var(const TermPtr& t) {
  if (const auto* v = std::get_if<NumVarRef>(&t->node())) return v->var;
  return std::nullopt;
}

struct AppParts {
  FunctorPtr fun;
  TermPtr arg;
};

std::optional<AppParts> as_apply(const TermPtr& t) {
  if (const auto* a = std::get_if<Apply>(&t->node())) {
    return AppParts{a->fun, a->arg};
  }
  return std::nullopt;
}

struct FvAppParts {
  FunVar fun;
  TermPtr arg;
};

std::optional<FvAppParts> as_fv_app(const TermPtr& t) {
  if (const auto* a = std::get_if<Apply>(&t->node())) {
    if (const auto* v = std::get_if<FunVarRef>(&a->fun->node())) {
      return FvAppParts{v->var, a->arg};
    }
  }
  return std::nullopt;
}

struct RecParts {
  TermPtr base;
  FunctorPtr step;
  TermPtr count;
};

std::optional<RecParts> as_rec(const TermPtr& t) {
  if (const auto* r = std::get_if<RecApp>(&t->node())) {
    return RecParts{r->base, r->step, r->count};
  }
  return std::nullopt;
}

std::optional<TermPtr> as_succ(const TermPtr& t) {
  if (const auto* c = std::get_if<ConstApp>(&t->node());
      c && c->id == Const::Succ) {
    return c->nums[0];
  }
  return std::nullopt;
}

// Builds an instance from candidate pieces and accepts it only when the
// side conditions pass and re-instantiation reproduces f up to congruence.
std::optional<SchemaInstance> verified(SchemaId schema, PieceMap pieces,
                                       const FormulaPtr& f) {
  SchemaInstance inst{schema, std::move(pieces), {}};
  try {
    FormulaPtr built = instantiate(inst);
    if (congruent(built, f)) return inst;
  } catch (const SideConditionError&) {
  } catch (const SortError&) {
  }
  return std::nullopt;
}

// Parallel anti-unification of two expressions expected to be images of one
// matrix under substitution of two different variables for one hole. Walks
// both sides together and rebuilds the matrix, emitting the hole exactly
// where the left side shows `left` against `right` on the right side. Null
// results mean the sides differ in some other way.
struct Generalizer {
  std::optional<NumVar> num_left, num_right, num_hole;
  std::optional<FunVar> fun_left, fun_right, fun_hole;

  static Generalizer nums(NumVar left, NumVar right, NumVar hole) {
    Generalizer g;
    g.num_left = std::move(left);
    g.num_right = std::move(right);
    g.num_hole = std::move(hole);
    return g;
  }

  static Generalizer funs(FunVar left, FunVar right, FunVar hole) {
    Generalizer g;
    g.fun_left = std::move(left);
    g.fun_right = std::move(right);
    g.fun_hole = std::move(hole);
    return g;
  }

  TermPtr term(const TermPtr& a, const TermPtr& b) const {
    const auto& na = a->node();
    const auto& nb = b->node();
    if (num_hole) {
      const auto* va = std::get_if<NumVarRef>(&na);
      const auto* vb = std::get_if<NumVarRef>(&nb);
      if (va && vb && va->var == *num_left && vb->var == *num_right) {
        return mk_var(*num_hole);
      }
    }
    if (na.index() != nb.index()) return nullptr;
    if (const auto* va = std::get_if<NumVarRef>(&na)) {
      return va->var == std::get<NumVarRef>(nb).var ? a : nullptr;
    }
    if (const auto* ca = std::get_if<ConstApp>(&na)) {
      const auto& cb = std::get<ConstApp>(nb);
      if (ca->id != cb.id) return nullptr;
      std::vector<TermPtr> nums;
      for (std::size_t i = 0; i < ca->nums.size(); ++i) {
        TermPtr r = term(ca->nums[i], cb.nums[i]);
        if (!r) return nullptr;
        nums.push_back(std::move(r));
      }
      std::vector<FunctorPtr> funs;
      for (std::size_t i = 0; i < ca->funs.size(); ++i) {
        FunctorPtr r = functor(ca->funs[i], cb.funs[i]);
        if (!r) return nullptr;
        funs.push_back(std::move(r));
      }
      return mk_const(ca->id, std::move(nums), std::move(funs));
    }
    if (const auto* pa = std::get_if<Apply>(&na)) {
      const auto& pb = std::get<Apply>(nb);
      FunctorPtr fun = functor(pa->fun, pb.fun);
      TermPtr arg = term(pa->arg, pb.arg);
      return fun && arg ? mk_apply(std::move(fun), std::move(arg)) : nullptr;
    }
    if (const auto* da = std::get_if<DefApp>(&na)) {
      const auto& db = std::get<DefApp>(nb);
      if (da->name != db.name) return nullptr;
      TermPtr fst = term(da->a, db.a);
      TermPtr snd = term(da->b, db.b);
      return fst && snd ? mk_defined(da->name, std::move(fst), std::move(snd))
                        : nullptr;
    }
    const auto& ra = std::get<RecApp>(na);
    const auto& rb = std::get<RecApp>(nb);
    TermPtr base = term(ra.base, rb.base);
    FunctorPtr step = functor(ra.step, rb.step);
    TermPtr count = term(ra.count, rb.count);
    return base && step && count
               ? mk_rec(std::move(base), std::move(step), std::move(count))
               : nullptr;
  }

  FunctorPtr functor(const FunctorPtr& a, const FunctorPtr& b) const {
    const auto& na = a->node();
    const auto& nb = b->node();
    if (fun_hole) {
      const auto* va = std::get_if<FunVarRef>(&na);
      const auto* vb = std::get_if<FunVarRef>(&nb);
      if (va && vb && va->var == *fun_left && vb->var == *fun_right) {
        return mk_fun_var(*fun_hole);
      }
    }
    if (na.index() != nb.index()) return nullptr;
    if (const auto* va = std::get_if<FunVarRef>(&na)) {
      return va->var == std::get<FunVarRef>(nb).var ? a : nullptr;
    }
    if (const auto* ca = std::get_if<ConstFn>(&na)) {
      return ca->id == std::get<ConstFn>(nb).id ? a : nullptr;
    }
    const auto& la = std::get<Lambda>(na);
    const auto& lb = std::get<Lambda>(nb);
    if (la.var != lb.var) return nullptr;
    TermPtr body = term(la.body, lb.body);
    return body ? mk_lambda(la.var, std::move(body)) : nullptr;
  }

  FormulaPtr formula(const FormulaPtr& a, const FormulaPtr& b) const {
    const auto& na = a->node();
    const auto& nb = b->node();
    if (na.index() != nb.index()) return nullptr;
    if (const auto* ea = std::get_if<Eq>(&na)) {
      const auto& eb = std::get<Eq>(nb);
      TermPtr lhs = term(ea->lhs, eb.lhs);
      TermPtr rhs = term(ea->rhs, eb.rhs);
      return lhs && rhs ? mk_eq(std::move(lhs), std::move(rhs)) : nullptr;
    }
    if (const auto* pa = std::get_if<Not>(&na)) {
      FormulaPtr body = formula(pa->body, std::get<Not>(nb).body);
      return body ? mk_not(std::move(body)) : nullptr;
    }
    if (const auto* ba = std::get_if<BinConn>(&na)) {
      const auto& bb = std::get<BinConn>(nb);
      if (ba->op != bb.op) return nullptr;
      FormulaPtr lhs = formula(ba->lhs, bb.lhs);
      FormulaPtr rhs = formula(ba->rhs, bb.rhs);
      if (!lhs || !rhs) return nullptr;
      switch (ba->op) {
        case Conn::And: return mk_and(std::move(lhs), std::move(rhs));
        case Conn::Or: return mk_or(std::move(lhs), std::move(rhs));
        case Conn::Implies: return mk_implies(std::move(lhs), std::move(rhs));
      }
      return nullptr;
    }
    if (const auto* qa = std::get_if<NumQuant>(&na)) {
      const auto& qb = std::get<NumQuant>(nb);
      if (qa->universal != qb.universal || qa->var != qb.var) return nullptr;
      FormulaPtr body = formula(qa->body, qb.body);
      if (!body) return nullptr;
      return qa->universal ? mk_forall(qa->var, std::move(body))
                           : mk_exists(qa->var, std::move(body));
    }
    const auto& qa = std::get<FunQuant>(na);
    const auto& qb = std::get<FunQuant>(nb);
    if (qa.universal != qb.universal || qa.var != qb.var) return nullptr;
    FormulaPtr body = formula(qa.body, qb.body);
    if (!body) return nullptr;
    return qa.universal ? mk_forall_fun(qa.var, std::move(body))
                        : mk_exists_fun(qa.var, std::move(body));
  }
};

// Finds the single consistent variable-against-variable difference between
// two formulas of identical structure, if there is one.
struct VarDiff {
  std::optional<std::pair<NumVar, NumVar>> found;

  bool note(const NumVar& a, const NumVar& b) {
    if (a == b) return true;
    if (!found) {
      found = {a, b};
      return true;
    }
    return found->first == a && found->second == b;
  }

  bool term(const TermPtr& a, const TermPtr& b) {
    const auto& na = a->node();
    const auto& nb = b->node();
    if (na.index() != nb.index()) return false;
    if (const auto* va = std::get_if<NumVarRef>(&na)) {
      return note(va->var, std::get<NumVarRef>(nb).var);
    }
    if (const auto* ca = std::get_if<ConstApp>(&na)) {
      const auto& cb = std::get<ConstApp>(nb);
      if (ca->id != cb.id) return false;
      for (std::size_t i = 0; i < ca->nums.size(); ++i) {
        if (!term(ca->nums[i], cb.nums[i])) return false;
      }
      for (std::size_t i = 0; i < ca->funs.size(); ++i) {
        if (!functor(ca->funs[i], cb.funs[i])) return false;
      }
      return true;
    }
    if (const auto* pa = std::get_if<Apply>(&na)) {
      const auto& pb = std::get<Apply>(nb);
      return functor(pa->fun, pb.fun) && term(pa->arg, pb.arg);
    }
    if (const auto* da = std::get_if<DefApp>(&na)) {
      const auto& db = std::get<DefApp>(nb);
      return da->name == db.name && term(da->a, db.a) && term(da->b, db.b);
    }
    const auto& ra = std::get<RecApp>(na);
    const auto& rb = std::get<RecApp>(nb);
    return term(ra.base, rb.base) && functor(ra.step, rb.step) &&
           term(ra.count, rb.count);
  }

  bool functor(const FunctorPtr& a, const FunctorPtr& b) {
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
    return la.var == lb.var && term(la.body, lb.body);
  }

  bool formula(const FormulaPtr& a, const FormulaPtr& b) {
    const auto& na = a->node();
    const auto& nb = b->node();
    if (na.index() != nb.index()) return false;
    if (const auto* ea = std::get_if<Eq>(&na)) {
      const auto& eb = std::get<Eq>(nb);
      return term(ea->lhs, eb.lhs) && term(ea->rhs, eb.rhs);
    }
    if (const auto* pa = std::get_if<Not>(&na)) {
      return formula(pa->body, std::get<Not>(nb).body);
    }
    if (const auto* ba = std::get_if<BinConn>(&na)) {
      const auto& bb = std::get<BinConn>(nb);
      return ba->op == bb.op && formula(ba->lhs, bb.lhs) &&
             formula(ba->rhs, bb.rhs);
    }
    if (const auto* qa = std::get_if<NumQuant>(&na)) {
      const auto& qb = std::get<NumQuant>(nb);
      return qa->universal == qb.universal && qa->var == qb.var &&
             formula(qa->body, qb.body);
    }
    const auto& qa = std::get<FunQuant>(na);
    const auto& qb = std::get<FunQuant>(nb);
    return qa.universal == qb.universal && qa.var == qb.var &&
           formula(qa.body, qb.body);
  }
};

// Replaces every occurrence of `pattern` in t by the hole variable, leaving
// regions where a binder shadows one of the pattern's free variables alone.
TermPtr abstract_term(const TermPtr& t, const TermPtr& pattern,
                      const NumVar& hole, const VarSets& pattern_free);

FunctorPtr abstract_functor(const FunctorPtr& u, const TermPtr& pattern,
                            const NumVar& hole, const VarSets& pattern_free) {
  if (const auto* lam = std::get_if<Lambda>(&u->node())) {
    if (pattern_free.contains(lam->var)) return u;
    return mk_lambda(lam->var,
                     abstract_term(lam->body, pattern, hole, pattern_free));
  }
  return u;
}

TermPtr abstract_term(const TermPtr& t, const TermPtr& pattern,
                      const NumVar& hole, const VarSets& pattern_free) {
  if (equal(t, pattern)) return mk_var(hole);
  const auto& node = t->node();
  if (const auto* c = std::get_if<ConstApp>(&node)) {
    std::vector<TermPtr> nums;
    for (const auto& a : c->nums) {
      nums.push_back(abstract_term(a, pattern, hole, pattern_free));
    }
    std::vector<FunctorPtr> funs;
    for (const auto& u : c->funs) {
      funs.push_back(abstract_functor(u, pattern, hole, pattern_free));
    }
    return mk_const(c->id, std::move(nums), std::move(funs));
  }
  if (const auto* a = std::get_if<Apply>(&node)) {
    return mk_apply(abstract_functor(a->fun, pattern, hole, pattern_free),
                    abstract_term(a->arg, pattern, hole, pattern_free));
  }
  if (const auto* d = std::get_if<DefApp>(&node)) {
    return mk_defined(d->name,
                      abstract_term(d->a, pattern, hole, pattern_free),
                      abstract_term(d->b, pattern, hole, pattern_free));
  }
  if (const auto* r = std::get_if<RecApp>(&node)) {
    return mk_rec(abstract_term(r->base, pattern, hole, pattern_free),
                  abstract_functor(r->step, pattern, hole, pattern_free),
                  abstract_term(r->count, pattern, hole, pattern_free));
  }
  return t;
}

// ------------------------------------------------------ per-schema match

std::optional<SchemaInstance> match_ind(const FormulaPtr& f) {
  auto outer = as_implies(f);
  if (!outer) return std::nullopt;
  auto premise = as_and(outer->lhs);
  if (!premise) return std::nullopt;
  auto step = as_forall(premise->rhs);
  if (!step) return std::nullopt;
  auto inner = as_implies(step->body);
  if (!inner) return std::nullopt;
  const FormulaPtr& matrix = outer->rhs;
  if (auto found = verified(
          SchemaId::Ind, {{"matrix", matrix}, {"var", step->var}}, f)) {
    return found;
  }
  // The step may use a renamed bound variable; recover the conclusion's
  // induction variable from the one consistent difference against the
  // step's antecedent.
  VarDiff diff;
  if (diff.formula(matrix, inner->lhs) && diff.found &&
      diff.found->second == step->var) {
    return verified(SchemaId::Ind,
                    {{"matrix", matrix}, {"var", diff.found->first}}, f);
  }
  return std::nullopt;
}

std::optional<SchemaInstance> match_lambda_conv(const FormulaPtr& f) {
  auto eq = as_eq(f);
  if (!eq) return std::nullopt;
  auto app = as_apply(eq->lhs);
  if (!app) return std::nullopt;
  const auto* lam = std::get_if<Lambda>(&app->fun->node());
  if (!lam) return std::nullopt;
  return verified(
      SchemaId::LambdaConv,
      {{"var", lam->var}, {"body", lam->body}, {"arg", app->arg}}, f);
}

std::optional<SchemaInstance> match_rec(const FormulaPtr& f) {
  auto conj = as_and(f);
  if (!conj) return std::nullopt;
  auto eq_zero = as_eq(conj->lhs);
  auto eq_next = as_eq(conj->rhs);
  if (!eq_zero || !eq_next) return std::nullopt;
  auto first = as_rec(eq_zero->lhs);
  auto second = as_rec(eq_next->lhs);
  if (!first || !second) return std::nullopt;
  auto count = as_succ(second->count);
  if (!count) return std::nullopt;
  return verified(
      SchemaId::Rec,
      {{"base", first->base}, {"step", first->step}, {"count", *count}}, f);
}

std::optional<SchemaInstance> match_rec_axiom(const FormulaPtr& f) {
  auto course = as_exists_fun(f);
  if (!course) return std::nullopt;
  auto conj = as_and(course->body);
  if (!conj) return std::nullopt;
  auto at_count = as_eq(conj->rhs);
  if (!at_count) return std::nullopt;
  auto value = as_rec(at_count->rhs);
  if (!value) return std::nullopt;
  return verified(
      SchemaId::RecAxiom,
      {{"base", value->base}, {"step", value->step}, {"count", value->count}},
      f);
}

std::optional<SchemaInstance> match_ac00_bang(const FormulaPtr& f) {
  auto outer = as_implies(f);
  if (!outer) return std::nullopt;
  auto each = as_forall(outer->lhs);
  if (!each) return std::nullopt;
  auto some = as_exists(each->body);
  if (!some) return std::nullopt;
  auto unique = as_and(some->body);
  if (!unique) return std::nullopt;
  auto chooser = as_exists_fun(outer->rhs);
  if (!chooser) return std::nullopt;
  return verified(SchemaId::Ac00Bang,
                  {{"matrix", unique->lhs},
                   {"x", each->var},
                   {"y", some->var},
                   {"alpha", chooser->var}},
                  f);
}

std::optional<SchemaInstance> match_qf_ac00(const FormulaPtr& f) {
  auto outer = as_implies(f);
  if (!outer) return std::nullopt;
  auto each = as_forall(outer->lhs);
  if (!each) return std::nullopt;
  auto some = as_exists(each->body);
  if (!some) return std::nullopt;
  auto chooser = as_exists_fun(outer->rhs);
  if (!chooser) return std::nullopt;
  return verified(SchemaId::QfAc00,
                  {{"matrix", some->body},
                   {"x", each->var},
                   {"y", some->var},
                   {"alpha", chooser->var}},
                  f);
}

std::optional<SchemaInstance> match_qft_ac00(const FormulaPtr& f) {
  auto outer = as_implies(f);
  if (!outer) return std::nullopt;
  auto each = as_forall(outer->lhs);
  if (!each) return std::nullopt;
  auto some = as_exists(each->body);
  if (!some) return std::nullopt;
  auto eq = as_eq(some->body);
  if (!eq) return std::nullopt;
  auto chooser = as_exists_fun(outer->rhs);
  if (!chooser) return std::nullopt;
  TermPtr pattern = tuple_code({mk_var(each->var), mk_var(some->var)});
  VarSets used = all_vars(f);
  NumVar hole = fresh_num_var("w", used.nums);
  TermPtr tmpl =
      abstract_term(eq->lhs, pattern, hole, free_vars(pattern));
  return verified(SchemaId::QftAc00,
                  {{"template", tmpl},
                   {"hole", hole},
                   {"x", each->var},
                   {"y", some->var},
                   {"alpha", chooser->var}},
                  f);
}

std::optional<SchemaInstance> match_cfd(const FormulaPtr& f) {
  auto outer = as_implies(f);
  if (!outer) return std::nullopt;
  auto decided = as_forall(outer->lhs);
  if (!decided) return std::nullopt;
  auto split = as_or(decided->body);
  if (!split) return std::nullopt;
  auto chooser = as_exists_fun(outer->rhs);
  if (!chooser) return std::nullopt;
  return verified(
      SchemaId::Cfd,
      {{"matrix", split->lhs}, {"var", decided->var}, {"beta", chooser->var}},
      f);
}

std::optional<SchemaInstance> match_refl_repl(const FormulaPtr& f) {
  // Reflexivity at the number sort: a bare self-equation.
  if (auto eq = as_eq(f)) {
    auto lhs = as_var(eq->lhs);
    auto rhs = as_var(eq->rhs);
    if (lhs && rhs && *lhs == *rhs) {
      if (auto found = verified(SchemaId::ReflRepl, {{"var", *lhs}}, f)) {
        return found;
      }
    }
  }
  // Reflexivity at the function sort: pointwise self-equality.
  if (auto all = as_forall(f)) {
    if (auto eq = as_eq(all->body)) {
      if (auto app = as_fv_app(eq->lhs)) {
        if (auto found =
                verified(SchemaId::ReflRepl, {{"fun", app->fun}}, f)) {
          return found;
        }
      }
    }
  }
  auto outer = as_implies(f);
  if (!outer) return std::nullopt;
  auto rest = as_implies(outer->rhs);
  if (!rest) return std::nullopt;
  // Replacement at the number sort.
  if (auto eq = as_eq(outer->lhs)) {
    auto x = as_var(eq->lhs);
    auto y = as_var(eq->rhs);
    if (x && y) {
      NumVar hole = fresh_num_var("z", all_vars(f).nums);
      Generalizer gen = Generalizer::nums(*x, *y, hole);
      if (FormulaPtr matrix = gen.formula(rest->lhs, rest->rhs)) {
        if (auto found = verified(SchemaId::ReflRepl,
                                  {{"x", *x},
                                   {"y", *y},
                                   {"matrix", matrix},
                                   {"hole", hole}},
                                  f)) {
          return found;
        }
      }
    }
  }
  // Replacement at the function sort.
  if (auto all = as_forall(outer->lhs)) {
    if (auto eq = as_eq(all->body)) {
      auto left = as_fv_app(eq->lhs);
      auto right = as_fv_app(eq->rhs);
      if (left && right) {
        FunVar hole = fresh_fun_var("theta", all_vars(f).funs);
        Generalizer gen = Generalizer::funs(left->fun, right->fun, hole);
        if (FormulaPtr matrix = gen.formula(rest->lhs, rest->rhs)) {
          return verified(SchemaId::ReflRepl,
                          {{"u", left->fun},
                           {"v", right->fun},
                           {"matrix", matrix},
                           {"hole", hole}},
                          f);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<SchemaInstance> match_fun_var_eq(const FormulaPtr& f) {
  auto outer = as_implies(f);
  if (!outer) return std::nullopt;
  auto premise = as_eq(outer->lhs);
  if (!premise) return std::nullopt;
  auto x = as_var(premise->lhs);
  auto y = as_var(premise->rhs);
  if (!x || !y) return std::nullopt;
  auto conclusion = as_eq(outer->rhs);
  if (!conclusion) return std::nullopt;
  auto app = as_fv_app(conclusion->lhs);
  if (!app) return std::nullopt;
  return verified(SchemaId::FunVarEq,
                  {{"x", *x}, {"y", *y}, {"alpha", app->fun}}, f);
}

// Shared binder extraction for the three function-existence schemata that
// open with "forall alpha (forall m exists n ... -> exists gamma ...)".
struct SearchBinders {
  FunVar alpha;
  NumVar m, n;
  FunVar gamma;
};

std::optional<SearchBinders> search_binders(const FormulaPtr& f) {
  auto sequences = as_forall_fun(f);
  if (!sequences) return std::nullopt;
  auto premise = as_implies(sequences->body);
  if (!premise) return std::nullopt;
  auto each = as_forall(premise->lhs);
  if (!each) return std::nullopt;
  auto some = as_exists(each->body);
  if (!some) return std::nullopt;
  auto result = as_exists_fun(premise->rhs);
  if (!result) return std::nullopt;
  return SearchBinders{sequences->var, each->var, some->var, result->var};
}

std::optional<SchemaInstance> match_unbounded_search(const FormulaPtr& f) {
  auto binders = search_binders(f);
  if (!binders) return std::nullopt;
  for (const char* lt : {"plus", "monus"}) {
    if (auto found = verified(SchemaId::UnboundedSearch,
                              {{"alpha", binders->alpha},
                               {"m", binders->m},
                               {"n", binders->n},
                               {"gamma", binders->gamma},
                               {"lt", std::string(lt)}},
                              f)) {
      return found;
    }
  }
  return std::nullopt;
}

std::optional<SchemaInstance> match_minimal_countable_choice(
    const FormulaPtr& f) {
  auto binders = search_binders(f);
  if (!binders) return std::nullopt;
  return verified(SchemaId::MinimalCountableChoice,
                  {{"alpha", binders->alpha},
                   {"m", binders->m},
                   {"n", binders->n},
                   {"gamma", binders->gamma}},
                  f);
}

std::optional<SchemaInstance> match_bim_prim_rec(const FormulaPtr& f) {
  auto bases = as_forall_fun(f);
  if (!bases) return std::nullopt;
  auto steps = as_forall_fun(bases->body);
  if (!steps) return std::nullopt;
  auto result = as_exists_fun(steps->body);
  if (!result) return std::nullopt;
  auto position = as_forall(result->body);
  if (!position) return std::nullopt;
  auto stage = as_forall(position->body);
  if (!stage) return std::nullopt;
  return verified(SchemaId::BimPrimRec,
                  {{"alpha", bases->var},
                   {"beta", steps->var},
                   {"gamma", result->var},
                   {"m", position->var},
                   {"n", stage->var}},
                  f);
}

std::optional<SchemaInstance> match_wkv_prim_rec(const FormulaPtr& f) {
  auto course = as_exists_fun(f);
  if (!course) return std::nullopt;
  auto conj = as_and(course->body);
  if (!conj) return std::nullopt;
  auto at_zero = as_eq(conj->lhs);
  if (!at_zero) return std::nullopt;
  auto stages = as_forall(conj->rhs);
  if (!stages) return std::nullopt;
  auto at_next = as_eq(stages->body);
  if (!at_next) return std::nullopt;
  auto step = as_apply(at_next->rhs);
  if (!step) return std::nullopt;
  return verified(SchemaId::WkvPrimRec,
                  {{"base", at_zero->rhs},
                   {"step", step->fun},
                   {"beta", course->var},
                   {"y", stages->var}},
                  f);
}

}  // namespace

std::optional<SchemaInstance> match(const FormulaPtr& f, SchemaId schema) {
  if (!f) return std::nullopt;
  switch (schema) {
    case SchemaId::Ind: return match_ind(f);
    case SchemaId::LambdaConv: return match_lambda_conv(f);
    case SchemaId::Rec: return match_rec(f);
    case SchemaId::RecAxiom: return match_rec_axiom(f);
    case SchemaId::Ac00Bang: return match_ac00_bang(f);
    case SchemaId::QfAc00: return match_qf_ac00(f);
    case SchemaId::QftAc00: return match_qft_ac00(f);
    case SchemaId::Cfd: return match_cfd(f);
    case SchemaId::ReflRepl: return match_refl_repl(f);
    case SchemaId::FunVarEq: return match_fun_var_eq(f);
    case SchemaId::UnboundedSearch: return match_unbounded_search(f);
    case SchemaId::MinimalCountableChoice:
      return match_minimal_countable_choice(f);
    case SchemaId::BimPrimRec: return match_bim_prim_rec(f);
    case SchemaId::WkvPrimRec: return match_wkv_prim_rec(f);
  }
  throw InternalError("unhandled schema id");
}

}  // namespace tsa
