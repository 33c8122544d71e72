#include "tsa/syntax/json_io.h"

#include "tsa/errors.h"
#include "tsa/syntax/names.h"

namespace tsa {

using nlohmann::json;

// ------------------------------------------------------------ to_json

namespace {

json var_json(const char* tag, const std::string& name, std::uint32_t index) {
  return json{{"node", tag}, {"name", name}, {"index", index}};
}

}  // namespace

json to_json(const TermPtr& t) {
  if (!t) throw InternalError("serializing null term");
  if (const auto* v = std::get_if<NumVarRef>(&t->node())) {
    return var_json("var", v->var.name, v->var.index);
  }
  if (const auto* c = std::get_if<ConstApp>(&t->node())) {
    json nums = json::array();
    for (const auto& a : c->nums) nums.push_back(to_json(a));
    json funs = json::array();
    for (const auto& u : c->funs) funs.push_back(to_json(u));
    return json{{"node", "const"},
                {"name", std::string(const_sig(c->id).name)},
                {"nums", std::move(nums)},
                {"funs", std::move(funs)}};
  }
  if (const auto* a = std::get_if<Apply>(&t->node())) {
    return json{{"node", "apply"}, {"fun", to_json(a->fun)}, {"arg", to_json(a->arg)}};
  }
  if (const auto* d = std::get_if<DefApp>(&t->node())) {
    return json{{"node", "defined"},
                {"name", d->name},
                {"a", to_json(d->a)},
                {"b", to_json(d->b)}};
  }
  const auto& r = std::get<RecApp>(t->node());
  return json{{"node", "rec"},
              {"base", to_json(r.base)},
              {"step", to_json(r.step)},
              {"count", to_json(r.count)}};
}

json to_json(const FunctorPtr& u) {
  if (!u) throw InternalError("serializing null functor");
  if (const auto* v = std::get_if<FunVarRef>(&u->node())) {
    return var_json("funvar", v->var.name, v->var.index);
  }
  if (const auto* c = std::get_if<ConstFn>(&u->node())) {
    return json{{"node", "constfn"}, {"name", std::string(const_sig(c->id).name)}};
  }
  const auto& lam = std::get<Lambda>(u->node());
  return json{{"node", "lambda"},
              {"var", var_json("var", lam.var.name, lam.var.index)},
              {"body", to_json(lam.body)}};
}

json to_json(const FormulaPtr& f) {
  if (!f) throw InternalError("serializing null formula");
  if (const auto* e = std::get_if<Eq>(&f->node())) {
    return json{{"node", "eq"}, {"lhs", to_json(e->lhs)}, {"rhs", to_json(e->rhs)}};
  }
  if (const auto* n = std::get_if<Not>(&f->node())) {
    return json{{"node", "not"}, {"body", to_json(n->body)}};
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    const char* tag = b->op == Conn::And  ? "and"
                      : b->op == Conn::Or ? "or"
                                          : "implies";
    return json{{"node", tag}, {"lhs", to_json(b->lhs)}, {"rhs", to_json(b->rhs)}};
  }
  if (const auto* q = std::get_if<NumQuant>(&f->node())) {
    return json{{"node", q->universal ? "forall_num" : "exists_num"},
                {"var", var_json("var", q->var.name, q->var.index)},
                {"body", to_json(q->body)}};
  }
  const auto& q = std::get<FunQuant>(f->node());
  return json{{"node", q.universal ? "forall_fun" : "exists_fun"},
              {"var", var_json("funvar", q.var.name, q.var.index)},
              {"body", to_json(q.body)}};
}

json to_json(const Expr& e) {
  return std::visit([](const auto& x) { return to_json(x); }, e);
}

// ---------------------------------------------------------- from_json

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw ParseError("json ast: " + what);
}

std::string node_tag(const json& j) {
  if (!j.is_object() || !j.contains("node") || !j.at("node").is_string()) {
    bad("every node must be an object with a \"node\" tag");
  }
  return j.at("node").get<std::string>();
}

std::pair<std::string, std::uint32_t> read_var_fields(const json& j) {
  if (!j.contains("name") || !j.at("name").is_string() || !j.contains("index") ||
      !j.at("index").is_number_unsigned()) {
    bad("variable nodes need a string \"name\" and unsigned \"index\"");
  }
  auto name = j.at("name").get<std::string>();
  auto index = j.at("index").get<std::uint64_t>();
  if (!valid_var_base(name) || index > 0xffffffffULL) {
    bad("invalid variable name '" + name + "'");
  }
  return {name, static_cast<std::uint32_t>(index)};
}

NumVar read_num_var(const json& j) {
  if (node_tag(j) != "var") bad("expected a number-variable node");
  auto [name, index] = read_var_fields(j);
  if (is_reserved_word(name) || is_fun_var_word(name)) {
    bad("'" + name + "' cannot name a number variable");
  }
  return NumVar{name, index};
}

FunVar read_fun_var(const json& j) {
  if (node_tag(j) != "funvar") bad("expected a function-variable node");
  auto [name, index] = read_var_fields(j);
  if (is_reserved_word(name)) bad("'" + name + "' cannot name a function variable");
  return FunVar{name, index};
}

Const read_const_name(const json& j) {
  if (!j.contains("name") || !j.at("name").is_string()) {
    bad("constant nodes need a string \"name\"");
  }
  auto name = j.at("name").get<std::string>();
  auto c = const_by_name(name);
  if (!c) bad("unknown constant '" + name + "'");
  return *c;
}

}  // namespace

TermPtr term_from_json(const json& j) {
  std::string tag = node_tag(j);
  if (tag == "var") {
    auto [name, index] = read_var_fields(j);
    if (is_reserved_word(name) || is_fun_var_word(name)) {
      bad("'" + name + "' cannot name a number variable");
    }
    return mk_var(NumVar{name, index});
  }
  if (tag == "const") {
    Const c = read_const_name(j);
    const auto& sig = const_sig(c);
    if (!j.contains("nums") || !j.at("nums").is_array() || !j.contains("funs") ||
        !j.at("funs").is_array()) {
      bad("constant nodes need \"nums\" and \"funs\" arrays");
    }
    const auto& jnums = j.at("nums");
    const auto& jfuns = j.at("funs");
    if (static_cast<int>(jnums.size()) != sig.num_args ||
        static_cast<int>(jfuns.size()) != sig.fun_args) {
      bad("arity mismatch for constant '" + std::string(sig.name) + "'");
    }
    std::vector<TermPtr> nums;
    for (const auto& a : jnums) nums.push_back(term_from_json(a));
    std::vector<FunctorPtr> funs;
    for (const auto& u : jfuns) funs.push_back(functor_from_json(u));
    return mk_const(c, std::move(nums), std::move(funs));
  }
  if (tag == "apply") {
    if (!j.contains("fun") || !j.contains("arg")) {
      bad("apply nodes need \"fun\" and \"arg\"");
    }
    return mk_apply(functor_from_json(j.at("fun")), term_from_json(j.at("arg")));
  }
  if (tag == "rec") {
    if (!j.contains("base") || !j.contains("step") || !j.contains("count")) {
      bad("rec nodes need \"base\", \"step\", and \"count\"");
    }
    return mk_rec(term_from_json(j.at("base")), functor_from_json(j.at("step")),
                  term_from_json(j.at("count")));
  }
  if (tag == "defined") {
    if (!j.contains("name") || !j.at("name").is_string() || !j.contains("a") ||
        !j.contains("b")) {
      bad("defined nodes need a string \"name\" plus \"a\" and \"b\"");
    }
    auto name = j.at("name").get<std::string>();
    if (!valid_defined_name(name)) {
      bad("'" + name + "' cannot name a defined constant");
    }
    return mk_defined(std::move(name), term_from_json(j.at("a")),
                      term_from_json(j.at("b")));
  }
  bad("'" + tag + "' is not a term node");
}

FunctorPtr functor_from_json(const json& j) {
  std::string tag = node_tag(j);
  if (tag == "funvar") return mk_fun_var(read_fun_var(j));
  if (tag == "constfn") {
    Const c = read_const_name(j);
    if (!is_unary_const(c)) {
      bad("constant '" + std::string(const_sig(c).name) +
          "' cannot stand as a functor");
    }
    return mk_const_fn(c);
  }
  if (tag == "lambda") {
    if (!j.contains("var") || !j.contains("body")) {
      bad("lambda nodes need \"var\" and \"body\"");
    }
    return mk_lambda(read_num_var(j.at("var")), term_from_json(j.at("body")));
  }
  bad("'" + tag + "' is not a functor node");
}

FormulaPtr formula_from_json(const json& j) {
  std::string tag = node_tag(j);
  if (tag == "eq") {
    if (!j.contains("lhs") || !j.contains("rhs")) {
      bad("eq nodes need \"lhs\" and \"rhs\"");
    }
    return mk_eq(term_from_json(j.at("lhs")), term_from_json(j.at("rhs")));
  }
  if (tag == "not") {
    if (!j.contains("body")) bad("not nodes need \"body\"");
    return mk_not(formula_from_json(j.at("body")));
  }
  if (tag == "and" || tag == "or" || tag == "implies") {
    if (!j.contains("lhs") || !j.contains("rhs")) {
      bad("connective nodes need \"lhs\" and \"rhs\"");
    }
    auto lhs = formula_from_json(j.at("lhs"));
    auto rhs = formula_from_json(j.at("rhs"));
    if (tag == "and") return mk_and(std::move(lhs), std::move(rhs));
    if (tag == "or") return mk_or(std::move(lhs), std::move(rhs));
    return mk_implies(std::move(lhs), std::move(rhs));
  }
  if (tag == "forall_num" || tag == "exists_num") {
    if (!j.contains("var") || !j.contains("body")) {
      bad("quantifier nodes need \"var\" and \"body\"");
    }
    NumVar v = read_num_var(j.at("var"));
    auto body = formula_from_json(j.at("body"));
    return tag == "forall_num" ? mk_forall(v, std::move(body))
                               : mk_exists(v, std::move(body));
  }
  if (tag == "forall_fun" || tag == "exists_fun") {
    if (!j.contains("var") || !j.contains("body")) {
      bad("quantifier nodes need \"var\" and \"body\"");
    }
    FunVar v = read_fun_var(j.at("var"));
    auto body = formula_from_json(j.at("body"));
    return tag == "forall_fun" ? mk_forall_fun(v, std::move(body))
                               : mk_exists_fun(v, std::move(body));
  }
  bad("'" + tag + "' is not a formula node");
}

Expr expr_from_json(const json& j) {
  std::string tag = node_tag(j);
  if (tag == "var" || tag == "const" || tag == "apply" || tag == "rec" ||
      tag == "defined") {
    return term_from_json(j);
  }
  if (tag == "funvar" || tag == "constfn" || tag == "lambda") {
    return functor_from_json(j);
  }
  return formula_from_json(j);
}

}  // namespace tsa
