#include "tsa/schemas/systems.h"

#include <utility>

#include "tsa/errors.h"
#include "tsa/syntax/builders.h"
#include "tsa/syntax/ops.h"

namespace tsa {

const char* pairing_name(Pairing p) {
  switch (p) {
    case Pairing::None: return "none";
    case Pairing::Jkl: return "JKL";
    case Pairing::LowerJ: return "j";
  }
  throw InternalError("unhandled pairing tag");
}

std::optional<Pairing> pairing_by_name(const std::string& name) {
  if (name == "none") return Pairing::None;
  if (name == "JKL") return Pairing::Jkl;
  if (name == "j") return Pairing::LowerJ;
  return std::nullopt;
}

// ------------------------------------------------------------- builtins

namespace {

std::set<Const> arithmetic_core() {
  return {Const::Zero, Const::Succ, Const::Add, Const::Mul};
}

std::set<Const> arithmetic_with_exp() {
  std::set<Const> cs = arithmetic_core();
  cs.insert(Const::Exp);
  return cs;
}

// Every constant of number sort throughout (no functor arguments), minus
// the signature-only placeholder.
std::set<Const> number_sorted_table() {
  std::set<Const> cs;
  for (int i = 0; i < kConstCount; ++i) {
    Const c = static_cast<Const>(i);
    if (const_sig(c).fun_args == 0 && c != Const::Ccp) cs.insert(c);
  }
  return cs;
}

std::set<Const> full_table() {
  std::set<Const> cs;
  for (int i = 0; i < kConstCount; ++i) cs.insert(static_cast<Const>(i));
  return cs;
}

std::vector<SystemDescriptor> make_builtins() {
  std::vector<SystemDescriptor> out;

  SystemDescriptor ia0;
  ia0.name = "ia0";
  ia0.constants = arithmetic_core();
  ia0.schemata = {SchemaId::Ind, SchemaId::ReflRepl};
  out.push_back(ia0);

  // The one-sorted arithmetic with the full stock of recursive constants;
  // new names may always be added, so the registry stays open.
  SystemDescriptor ha;
  ha.name = "ha";
  ha.constants = number_sorted_table();
  ha.open_registry = true;
  ha.schemata = {SchemaId::Ind, SchemaId::ReflRepl};
  out.push_back(ha);

  SystemDescriptor ia1;
  ia1.name = "ia1";
  ia1.constants = full_table();
  ia1.features = {.has_lambda = true,
                  .has_rec = false,
                  .has_function_vars = true,
                  .pairing = Pairing::None};
  ia1.schemata = {SchemaId::Ind, SchemaId::ReflRepl, SchemaId::FunVarEq,
                  SchemaId::LambdaConv};
  out.push_back(ia1);

  SystemDescriptor ha1;
  ha1.name = "ha1";
  ha1.constants = number_sorted_table();
  ha1.open_registry = true;
  ha1.features = {.has_lambda = true,
                  .has_rec = true,
                  .has_function_vars = true,
                  .pairing = Pairing::None};
  ha1.schemata = {SchemaId::Ind, SchemaId::ReflRepl, SchemaId::FunVarEq,
                  SchemaId::LambdaConv, SchemaId::Rec};
  out.push_back(ha1);

  SystemDescriptor m = ia1;
  m.name = "m";
  m.schemata.insert(SchemaId::Ac00Bang);
  out.push_back(std::move(m));

  SystemDescriptor el = ha1;
  el.name = "el";
  el.schemata.insert(SchemaId::QfAc00);
  out.push_back(std::move(el));

  SystemDescriptor bim;
  bim.name = "bim";
  bim.constants = arithmetic_with_exp();
  bim.open_registry = true;
  bim.features = {.has_lambda = false,
                  .has_rec = false,
                  .has_function_vars = true,
                  .pairing = Pairing::Jkl};
  bim.schemata = {SchemaId::Ind,
                  SchemaId::ReflRepl,
                  SchemaId::FunVarEq,
                  SchemaId::MinimalCountableChoice,
                  SchemaId::UnboundedSearch,
                  SchemaId::BimPrimRec};
  out.push_back(bim);

  SystemDescriptor h = bim;
  h.name = "h";
  h.schemata.erase(SchemaId::UnboundedSearch);
  out.push_back(std::move(h));

  SystemDescriptor wkv;
  wkv.name = "wkv";
  wkv.constants = arithmetic_with_exp();
  wkv.open_registry = true;
  wkv.features = {.has_lambda = true,
                  .has_rec = false,
                  .has_function_vars = true,
                  .pairing = Pairing::LowerJ};
  wkv.schemata = {SchemaId::Ind,          SchemaId::ReflRepl,
                  SchemaId::FunVarEq,     SchemaId::LambdaConv,
                  SchemaId::WkvPrimRec,   SchemaId::Ac00Bang};
  out.push_back(std::move(wkv));

  return out;
}

}  // namespace

const std::vector<SystemDescriptor>& builtin_systems() {
  static const std::vector<SystemDescriptor> systems = make_builtins();
  return systems;
}

std::optional<SystemDescriptor> system_by_name(const std::string& name) {
  for (const auto& sys : builtin_systems()) {
    if (sys.name == name) return sys;
  }
  return std::nullopt;
}

// ----------------------------------------------------------------- JSON

nlohmann::json to_json(const SystemDescriptor& sys) {
  nlohmann::json constants = nlohmann::json::array();
  for (Const c : sys.constants) {
    constants.push_back(std::string(const_sig(c).name));
  }
  nlohmann::json extensions = nlohmann::json::array();
  for (const auto& n : sys.extension_names) extensions.push_back(n);
  nlohmann::json schemata = nlohmann::json::array();
  for (SchemaId s : sys.schemata) schemata.push_back(schema_name(s));
  return nlohmann::json{
      {"name", sys.name},
      {"constants", std::move(constants)},
      {"open_registry", sys.open_registry},
      {"extension_names", std::move(extensions)},
      {"features",
       {{"has_lambda", sys.features.has_lambda},
        {"has_rec", sys.features.has_rec},
        {"has_function_vars", sys.features.has_function_vars},
        {"pairing", pairing_name(sys.features.pairing)}}},
      {"schemata", std::move(schemata)},
  };
}

namespace {

[[noreturn]] void bad_descriptor(const std::string& what) {
  throw ParseError("system descriptor: " + what);
}

bool read_flag(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_boolean()) {
    bad_descriptor(std::string("missing boolean \"") + key + "\"");
  }
  return j.at(key).get<bool>();
}

}  // namespace

SystemDescriptor system_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad_descriptor("not an object");
  SystemDescriptor sys;
  if (!j.contains("name") || !j.at("name").is_string()) {
    bad_descriptor("missing string \"name\"");
  }
  sys.name = j.at("name").get<std::string>();
  if (!j.contains("constants") || !j.at("constants").is_array()) {
    bad_descriptor("missing \"constants\" array");
  }
  for (const auto& entry : j.at("constants")) {
    if (!entry.is_string()) bad_descriptor("constants must be names");
    auto c = const_by_name(entry.get<std::string>());
    if (!c) {
      bad_descriptor("unknown constant '" + entry.get<std::string>() + "'");
    }
    sys.constants.insert(*c);
  }
  sys.open_registry = read_flag(j, "open_registry");
  if (!j.contains("extension_names") || !j.at("extension_names").is_array()) {
    bad_descriptor("missing \"extension_names\" array");
  }
  for (const auto& entry : j.at("extension_names")) {
    if (!entry.is_string() ||
        !valid_defined_name(entry.get<std::string>())) {
      bad_descriptor("invalid extension name");
    }
    sys.extension_names.insert(entry.get<std::string>());
  }
  if (!j.contains("features") || !j.at("features").is_object()) {
    bad_descriptor("missing \"features\" object");
  }
  const auto& feats = j.at("features");
  sys.features.has_lambda = read_flag(feats, "has_lambda");
  sys.features.has_rec = read_flag(feats, "has_rec");
  sys.features.has_function_vars = read_flag(feats, "has_function_vars");
  if (!feats.contains("pairing") || !feats.at("pairing").is_string()) {
    bad_descriptor("missing string \"pairing\"");
  }
  auto pairing = pairing_by_name(feats.at("pairing").get<std::string>());
  if (!pairing) bad_descriptor("unknown pairing tag");
  sys.features.pairing = *pairing;
  if (!j.contains("schemata") || !j.at("schemata").is_array()) {
    bad_descriptor("missing \"schemata\" array");
  }
  for (const auto& entry : j.at("schemata")) {
    if (!entry.is_string()) bad_descriptor("schemata must be names");
    auto s = schema_by_name(entry.get<std::string>());
    if (!s) bad_descriptor("unknown schema '" + entry.get<std::string>() + "'");
    sys.schemata.insert(*s);
  }
  return sys;
}

// ------------------------------------------------------- language checks

namespace {

bool defined_admitted(const std::string& name, const SystemDescriptor& sys) {
  return sys.open_registry || sys.extension_names.count(name) != 0;
}

}  // namespace

bool term_in_language(const TermPtr& t, const SystemDescriptor& sys) {
  if (!t) return false;
  if (std::get_if<NumVarRef>(&t->node())) return true;
  if (const auto* c = std::get_if<ConstApp>(&t->node())) {
    if (sys.constants.count(c->id) == 0) return false;
    for (const auto& a : c->nums) {
      if (!term_in_language(a, sys)) return false;
    }
    for (const auto& u : c->funs) {
      if (!functor_in_language(u, sys)) return false;
    }
    return true;
  }
  if (const auto* a = std::get_if<Apply>(&t->node())) {
    return sys.features.has_function_vars &&
           functor_in_language(a->fun, sys) && term_in_language(a->arg, sys);
  }
  if (const auto* d = std::get_if<DefApp>(&t->node())) {
    return defined_admitted(d->name, sys) && term_in_language(d->a, sys) &&
           term_in_language(d->b, sys);
  }
  const auto& r = std::get<RecApp>(t->node());
  return sys.features.has_rec && term_in_language(r.base, sys) &&
         functor_in_language(r.step, sys) && term_in_language(r.count, sys);
}

bool functor_in_language(const FunctorPtr& u, const SystemDescriptor& sys) {
  if (!u) return false;
  if (std::get_if<FunVarRef>(&u->node())) return sys.features.has_function_vars;
  if (const auto* c = std::get_if<ConstFn>(&u->node())) {
    return sys.constants.count(c->id) != 0;
  }
  const auto& lam = std::get<Lambda>(u->node());
  return sys.features.has_lambda && term_in_language(lam.body, sys);
}

bool formula_in_language(const FormulaPtr& f, const SystemDescriptor& sys) {
  if (!f) return false;
  if (const auto* e = std::get_if<Eq>(&f->node())) {
    return term_in_language(e->lhs, sys) && term_in_language(e->rhs, sys);
  }
  if (const auto* n = std::get_if<Not>(&f->node())) {
    return formula_in_language(n->body, sys);
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    return formula_in_language(b->lhs, sys) &&
           formula_in_language(b->rhs, sys);
  }
  if (const auto* q = std::get_if<NumQuant>(&f->node())) {
    return formula_in_language(q->body, sys);
  }
  return sys.features.has_function_vars &&
         formula_in_language(std::get<FunQuant>(f->node()).body, sys);
}

bool expr_in_language(const Expr& e, const SystemDescriptor& sys) {
  if (const auto* t = std::get_if<TermPtr>(&e)) {
    return term_in_language(*t, sys);
  }
  if (const auto* u = std::get_if<FunctorPtr>(&e)) {
    return functor_in_language(*u, sys);
  }
  return formula_in_language(std::get<FormulaPtr>(e), sys);
}

// ------------------------------------------------- definitional extension

Extension define_prim_rec(const SystemDescriptor& sys, const std::string& name,
                          const NumVar& x, const TermPtr& base,
                          const NumVar& z0, const NumVar& z1,
                          const TermPtr& step) {
  if (!sys.features.has_rec || !sys.features.has_lambda) {
    throw LanguageError("system '" + sys.name +
                        "' lacks the recursor or lambda abstraction needed "
                        "for definitional extension");
  }
  if (!base || !step) throw LanguageError("defining terms must be present");
  if (!valid_defined_name(name)) {
    throw LanguageError("'" + name + "' cannot name a defined constant");
  }
  if (sys.extension_names.count(name) != 0) {
    throw LanguageError("'" + name + "' is already defined");
  }
  if (x == z0 || x == z1 || z0 == z1) {
    throw LanguageError(
        "the parameter, previous-value, and stage variables must be distinct");
  }
  // Defining terms must be grounded in already-known constants even when the
  // registry is open; this keeps expansion chains well-founded.
  SystemDescriptor closed = sys;
  closed.open_registry = false;
  if (!term_in_language(base, closed)) {
    throw LanguageError("the base term is not in the system's language");
  }
  if (!term_in_language(step, closed)) {
    throw LanguageError("the step term is not in the system's language");
  }
  VarSets base_free = free_vars(base);
  if (!base_free.funs.empty() ||
      !std::all_of(base_free.nums.begin(), base_free.nums.end(),
                   [&](const NumVar& v) { return v == x; })) {
    throw LanguageError(
        "the base term may mention only the parameter variable");
  }
  VarSets step_free = free_vars(step);
  if (!step_free.funs.empty() ||
      !std::all_of(step_free.nums.begin(), step_free.nums.end(),
                   [&](const NumVar& v) {
                     return v == z0 || v == z1 || v == x;
                   })) {
    throw LanguageError(
        "the step term may mention only the previous-value, stage, and "
        "parameter variables");
  }
  SystemDescriptor extended = sys;
  extended.extension_names.insert(name);
  return Extension{std::move(extended), DefRule{name, x, base, z0, z1, step}};
}

TermPtr expansion_term(const DefRule& rule, const TermPtr& a, const TermPtr& b) {
  VarSets used = all_vars(a);
  used.merge(all_vars(b));
  used.merge(all_vars(rule.base));
  used.merge(all_vars(rule.step));
  used.nums.insert(rule.x);
  used.nums.insert(rule.z0);
  used.nums.insert(rule.z1);
  NumVar z = fresh_num_var("z", used.nums);
  TermPtr base = substitute_num(rule.base, rule.x, a);
  NumSubst stage{
      {rule.z0, mk_const(Const::Expof, {mk_var(z), numeral(0)})},
      {rule.z1, mk_const(Const::Expof, {mk_var(z), numeral(1)})},
      {rule.x, a},
  };
  TermPtr body = substitute(rule.step, stage);
  return mk_rec(std::move(base), mk_lambda(z, std::move(body)), b);
}

namespace {

const DefRule* find_rule(const std::string& name,
                         const std::vector<DefRule>& rules) {
  for (const auto& r : rules) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

}  // namespace

TermPtr expand_defined(const TermPtr& t, const std::vector<DefRule>& rules) {
  if (std::get_if<NumVarRef>(&t->node())) return t;
  if (const auto* c = std::get_if<ConstApp>(&t->node())) {
    std::vector<TermPtr> nums;
    nums.reserve(c->nums.size());
    for (const auto& a : c->nums) nums.push_back(expand_defined(a, rules));
    std::vector<FunctorPtr> funs;
    funs.reserve(c->funs.size());
    for (const auto& u : c->funs) funs.push_back(expand_defined(u, rules));
    return mk_const(c->id, std::move(nums), std::move(funs));
  }
  if (const auto* a = std::get_if<Apply>(&t->node())) {
    return mk_apply(expand_defined(a->fun, rules),
                    expand_defined(a->arg, rules));
  }
  if (const auto* d = std::get_if<DefApp>(&t->node())) {
    const DefRule* rule = find_rule(d->name, rules);
    if (!rule) {
      throw LanguageError("no expansion rule for defined constant '" +
                          d->name + "'");
    }
    TermPtr first = expand_defined(d->a, rules);
    TermPtr second = expand_defined(d->b, rules);
    // The defining terms may mention earlier defined constants.
    return expand_defined(expansion_term(*rule, first, second), rules);
  }
  const auto& r = std::get<RecApp>(t->node());
  return mk_rec(expand_defined(r.base, rules), expand_defined(r.step, rules),
                expand_defined(r.count, rules));
}

FunctorPtr expand_defined(const FunctorPtr& u,
                          const std::vector<DefRule>& rules) {
  if (const auto* lam = std::get_if<Lambda>(&u->node())) {
    return mk_lambda(lam->var, expand_defined(lam->body, rules));
  }
  return u;
}

FormulaPtr expand_defined(const FormulaPtr& f,
                          const std::vector<DefRule>& rules) {
  if (const auto* e = std::get_if<Eq>(&f->node())) {
    return mk_eq(expand_defined(e->lhs, rules), expand_defined(e->rhs, rules));
  }
  if (const auto* n = std::get_if<Not>(&f->node())) {
    return mk_not(expand_defined(n->body, rules));
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    FormulaPtr lhs = expand_defined(b->lhs, rules);
    FormulaPtr rhs = expand_defined(b->rhs, rules);
    switch (b->op) {
      case Conn::And: return mk_and(std::move(lhs), std::move(rhs));
      case Conn::Or: return mk_or(std::move(lhs), std::move(rhs));
      case Conn::Implies: return mk_implies(std::move(lhs), std::move(rhs));
    }
  }
  if (const auto* q = std::get_if<NumQuant>(&f->node())) {
    FormulaPtr body = expand_defined(q->body, rules);
    return q->universal ? mk_forall(q->var, std::move(body))
                        : mk_exists(q->var, std::move(body));
  }
  const auto& q = std::get<FunQuant>(f->node());
  FormulaPtr body = expand_defined(q.body, rules);
  return q.universal ? mk_forall_fun(q.var, std::move(body))
                     : mk_exists_fun(q.var, std::move(body));
}

Nat eval_defined(const DefRule& rule, const std::vector<DefRule>& rules,
                 const Nat& a, const Nat& b, const EvalLimits& limits) {
  TermPtr base = expand_defined(rule.base, rules);
  TermPtr step = expand_defined(rule.step, rules);
  Environment env;
  Assignment at_zero;
  at_zero.bind(rule.x, a);
  Nat value = eval_term(base, env, at_zero, limits);
  std::uint64_t count = nat_to_index(b);
  for (std::uint64_t i = 0; i < count; ++i) {
    Assignment frame;
    frame.bind(rule.z0, value);
    frame.bind(rule.z1, Nat(i));
    frame.bind(rule.x, a);
    value = eval_term(step, env, frame, limits);
  }
  return value;
}

}  // namespace tsa
