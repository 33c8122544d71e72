#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "tsa/checks/gen.h"
#include "tsa/errors.h"
#include "tsa/kernel/env.h"
#include "tsa/kernel/eval.h"
#include "tsa/schemas/schemas.h"
#include "tsa/schemas/systems.h"
#include "tsa/syntax/builders.h"
#include "tsa/syntax/json_io.h"
#include "tsa/syntax/ops.h"
#include "tsa/syntax/parse.h"
#include "tsa/syntax/print.h"

using namespace tsa;

namespace {

FormulaPtr pf(const std::string& text) { return parse_formula(text); }
TermPtr pt(const std::string& text) { return parse_term(text); }

NumVar nv(const std::string& name) { return NumVar{name, 0}; }
FunVar fv(const std::string& name) { return FunVar{name, 0}; }

std::string violation(const std::string& condition) {
  return "side condition violated: " + condition;
}

}  // namespace

TEST_CASE("schema names roundtrip through the lookup table") {
  for (SchemaId id : all_schemas()) {
    auto back = schema_by_name(schema_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(!schema_by_name("no-such-schema").has_value());
  CHECK(std::string(schema_name(SchemaId::Ind)) == "ind");
  CHECK(std::string(schema_name(SchemaId::WkvPrimRec)) == "wkv-prim-rec");
}

TEST_CASE("induction instances assemble base, step, and conclusion") {
  FormulaPtr matrix = pf("x + 0 = x");
  FormulaPtr f =
      instantiate(SchemaId::Ind, {{"matrix", matrix}, {"var", nv("x")}});
  CHECK(congruent(
      f, pf("(0 + 0 = 0 & (forall x. x + 0 = x -> x' + 0 = x')) -> x + 0 = x")));
}

TEST_CASE("characteristic-function instances track the matrix") {
  FormulaPtr f = instantiate(
      SchemaId::Cfd,
      {{"matrix", pf("x = 0")}, {"var", nv("x")}, {"beta", fv("beta")}});
  FormulaPtr expected = pf(
      "(forall x. x = 0 \\/ ~x = 0) -> "
      "exists beta. forall x. (monus(beta(x)', 1) = 0 \\/ beta(x) = 1) & "
      "((beta(x) = 0 -> x = 0) & (x = 0 -> beta(x) = 0))");
  CHECK(congruent(f, expected));
}

TEST_CASE("lambda conversion instances substitute the argument") {
  FormulaPtr f = instantiate(SchemaId::LambdaConv, {{"var", nv("x")},
                                                    {"body", pt("x + x")},
                                                    {"arg", pt("y'")}});
  CHECK(congruent(f, pf("(lam x. x + x)(y') = y' + y'")));
  CHECK(to_text(f) == "(lam x. x + x)(y') = y' + y'");
}

TEST_CASE("choice instances expand unique existence") {
  FormulaPtr f = instantiate(SchemaId::Ac00Bang, {{"matrix", pf("x + y = 4")},
                                                  {"x", nv("x")},
                                                  {"y", nv("y")},
                                                  {"alpha", fv("alpha")}});
  FormulaPtr expected = pf(
      "(forall x. exists y. x + y = 4 & (forall z. x + z = 4 -> y = z)) -> "
      "exists alpha. forall x. x + alpha(x) = 4");
  CHECK(congruent(f, expected));
}

TEST_CASE("side conditions are reported by role and enforced") {
  SUBCASE("choice function free in the matrix") {
    CHECK_THROWS_WITH_AS(
        instantiate(SchemaId::Ac00Bang, {{"matrix", pf("alpha(x) = y")},
                                         {"x", nv("x")},
                                         {"y", nv("y")},
                                         {"alpha", fv("alpha")}}),
        violation("the choice function variable does not occur free in the "
                  "matrix")
            .c_str(),
        SideConditionError);
  }
  SUBCASE("argument and value variables must differ") {
    CHECK_THROWS_WITH_AS(
        instantiate(SchemaId::Ac00Bang, {{"matrix", pf("x = 0")},
                                         {"x", nv("x")},
                                         {"y", nv("x")},
                                         {"alpha", fv("alpha")}}),
        violation("the argument variable and the value variable are distinct")
            .c_str(),
        SideConditionError);
  }
  SUBCASE("quantified matrix rejected for the quantifier-free choice rule") {
    CHECK_THROWS_WITH_AS(
        instantiate(SchemaId::QfAc00, {{"matrix", pf("exists z. z = x")},
                                       {"x", nv("x")},
                                       {"y", nv("y")},
                                       {"alpha", fv("alpha")}}),
        violation("the matrix is quantifier-free").c_str(),
        SideConditionError);
  }
  SUBCASE("characteristic function free in the matrix") {
    CHECK_THROWS_WITH_AS(
        instantiate(SchemaId::Cfd, {{"matrix", pf("beta(x) = 0")},
                                    {"var", nv("x")},
                                    {"beta", fv("beta")}}),
        violation("the characteristic function variable does not occur free "
                  "in the matrix")
            .c_str(),
        SideConditionError);
  }
  SUBCASE("lambda conversion capture") {
    TermPtr body = pt("(lam y. x + y)(2)");
    CHECK_THROWS_WITH_AS(
        instantiate(SchemaId::LambdaConv,
                    {{"var", nv("x")}, {"body", body}, {"arg", pt("y")}}),
        violation("the argument is free for the bound variable in the body")
            .c_str(),
        SideConditionError);
  }
  SUBCASE("shared function variable in the primitive recursion axiom") {
    CHECK_THROWS_WITH_AS(
        instantiate(SchemaId::BimPrimRec, {{"alpha", fv("alpha")},
                                           {"beta", fv("alpha")},
                                           {"gamma", fv("gamma")},
                                           {"m", nv("m")},
                                           {"n", nv("n")}}),
        violation("the base and step function variables are distinct").c_str(),
        SideConditionError);
  }
  SUBCASE("course variable free in the base") {
    CHECK_THROWS_WITH_AS(
        instantiate(SchemaId::WkvPrimRec, {{"base", pt("beta(0)")},
                                           {"step", parse_functor("lam w. w")},
                                           {"beta", fv("beta")},
                                           {"y", nv("y")}}),
        violation("the course variable does not occur free in the base")
            .c_str(),
        SideConditionError);
  }
  SUBCASE("unknown ordering flag") {
    CHECK_THROWS_AS(
        instantiate(SchemaId::UnboundedSearch, {{"alpha", fv("alpha")},
                                                {"m", nv("m")},
                                                {"n", nv("n")},
                                                {"gamma", fv("gamma")},
                                                {"lt", std::string("bogus")}}),
        SortError);
  }
  SUBCASE("verdicts are recorded on the instance") {
    SchemaInstance inst;
    inst.schema = SchemaId::Ac00Bang;
    inst.pieces = {{"matrix", pf("alpha(x) = y")},
                   {"x", nv("x")},
                   {"y", nv("y")},
                   {"alpha", fv("alpha")}};
    CHECK_THROWS_AS(instantiate(inst), SideConditionError);
    REQUIRE(!inst.side_conditions.empty());
    CHECK(inst.side_conditions.back().holds == false);
    CHECK(inst.side_conditions.front().holds == true);
  }
}

TEST_CASE("matching is the inverse of instantiation") {
  SUBCASE("non-instances are rejected") {
    CHECK(!match(pf("0 = 0"), SchemaId::Ind).has_value());
    CHECK(!match(pf("x = x -> x = x"), SchemaId::Cfd).has_value());
  }
  SUBCASE("characteristic-function roundtrip recovers the matrix") {
    FormulaPtr f = instantiate(
        SchemaId::Cfd,
        {{"matrix", pf("x = 0")}, {"var", nv("x")}, {"beta", fv("beta")}});
    auto inst = match(f, SchemaId::Cfd);
    REQUIRE(inst.has_value());
    CHECK(congruent(std::get<FormulaPtr>(inst->pieces.at("matrix")),
                    pf("x = 0")));
    CHECK(congruent(instantiate(inst->schema, inst->pieces), f));
  }
  SUBCASE("induction roundtrip survives a renamed binder") {
    FormulaPtr f = pf(
        "(0 + 0 = 0 & (forall w. w + 0 = w -> w' + 0 = w')) -> x + 0 = x");
    auto inst = match(f, SchemaId::Ind);
    REQUIRE(inst.has_value());
    CHECK(congruent(instantiate(inst->schema, inst->pieces), f));
  }
}

TEST_CASE("generated instances roundtrip for every schema") {
  Gen gen(20260814);
  const NumVar x = nv("x"), y = nv("y"), m = nv("m"), n = nv("n");
  const FunVar alpha = fv("alpha"), beta = fv("beta"), gamma = fv("gamma");
  const int kRounds = 25;

  auto roundtrip = [&](SchemaId id, const PieceMap& pieces) {
    FormulaPtr f = instantiate(id, pieces);
    auto inst = match(f, id);
    REQUIRE_MESSAGE(inst.has_value(), schema_name(id), ": ", to_text(f));
    FormulaPtr again = instantiate(inst->schema, inst->pieces);
    CHECK_MESSAGE(congruent(f, again), schema_name(id), ": ", to_text(f),
                  " vs ", to_text(again));
  };

  for (int round = 0; round < kRounds; ++round) {
    roundtrip(SchemaId::Ind,
              {{"matrix", gen.decidable_formula(2, {x, y})}, {"var", x}});
    roundtrip(SchemaId::LambdaConv, {{"var", x},
                                     {"body", gen.small_term(2, {x, y})},
                                     {"arg", gen.small_term(1, {y})}});
    PieceMap rec_pieces = {{"base", gen.small_term(1, {x})},
                           {"step", gen.pool_functor()},
                           {"count", gen.small_term(1, {y})}};
    roundtrip(SchemaId::Rec, rec_pieces);
    roundtrip(SchemaId::RecAxiom, rec_pieces);
    roundtrip(SchemaId::Ac00Bang, {{"matrix", gen.decidable_formula(1, {x, y})},
                                   {"x", x},
                                   {"y", y},
                                   {"alpha", alpha}});
    roundtrip(SchemaId::QfAc00, {{"matrix", gen.qf_formula(2, {x, y})},
                                 {"x", x},
                                 {"y", y},
                                 {"alpha", alpha}});
    roundtrip(SchemaId::QftAc00, {{"template", gen.small_term(2, {nv("w")})},
                                  {"hole", nv("w")},
                                  {"x", x},
                                  {"y", y},
                                  {"alpha", alpha}});
    roundtrip(SchemaId::Cfd, {{"matrix", gen.decidable_formula(1, {x})},
                              {"var", x},
                              {"beta", beta}});
    switch (round % 4) {
      case 0: roundtrip(SchemaId::ReflRepl, {{"var", x}}); break;
      case 1: roundtrip(SchemaId::ReflRepl, {{"fun", alpha}}); break;
      case 2:
        roundtrip(SchemaId::ReflRepl,
                  {{"x", x},
                   {"y", y},
                   {"matrix", gen.decidable_formula(1, {x, y, nv("h")})},
                   {"hole", nv("h")}});
        break;
      default:
        roundtrip(SchemaId::ReflRepl,
                  {{"u", gamma},
                   {"v", beta},
                   {"matrix", pf("forall x. alpha(x) = beta(x'')")},
                   {"hole", alpha}});
        break;
    }
    roundtrip(SchemaId::FunVarEq, {{"x", x}, {"y", y}, {"alpha", alpha}});
    roundtrip(SchemaId::UnboundedSearch,
              {{"alpha", alpha},
               {"m", m},
               {"n", n},
               {"gamma", gamma},
               {"lt", std::string(round % 2 == 0 ? "plus" : "monus")}});
    roundtrip(SchemaId::MinimalCountableChoice,
              {{"alpha", alpha}, {"m", m}, {"n", n}, {"gamma", gamma}});
    roundtrip(SchemaId::BimPrimRec, {{"alpha", alpha},
                                     {"beta", beta},
                                     {"gamma", gamma},
                                     {"m", m},
                                     {"n", n}});
    roundtrip(SchemaId::WkvPrimRec, {{"base", gen.small_term(1, {x})},
                                     {"step", gen.pool_functor()},
                                     {"beta", beta},
                                     {"y", y}});
  }
}

TEST_CASE("builtin systems expose the expected inclusions") {
  auto sys = [](const std::string& name) {
    auto found = system_by_name(name);
    REQUIRE_MESSAGE(found.has_value(), name);
    return *found;
  };
  SystemDescriptor ia0 = sys("ia0"), ia1 = sys("ia1"), ha = sys("ha"),
                   ha1 = sys("ha1"), msys = sys("m"), el = sys("el"),
                   bim = sys("bim"), hsys = sys("h"), wkv = sys("wkv");

  CHECK(builtin_systems().size() == 9);
  CHECK(!system_by_name("zfc").has_value());

  auto subset = [](const auto& small, const auto& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  CHECK(subset(ia0.constants, ia1.constants));
  CHECK(subset(ia0.schemata, ia1.schemata));
  CHECK(subset(ha.constants, ha1.constants));
  CHECK(subset(ha.schemata, ha1.schemata));

  SystemDescriptor m_expected = ia1;
  m_expected.name = "m";
  m_expected.schemata.insert(SchemaId::Ac00Bang);
  CHECK(msys == m_expected);

  SystemDescriptor el_expected = ha1;
  el_expected.name = "el";
  el_expected.schemata.insert(SchemaId::QfAc00);
  CHECK(el == el_expected);

  CHECK(!bim.features.has_lambda);
  CHECK(!bim.features.has_rec);
  CHECK(bim.features.pairing == Pairing::Jkl);
  CHECK(hsys.schemata.count(SchemaId::UnboundedSearch) == 0);
  CHECK(bim.schemata.count(SchemaId::UnboundedSearch) == 1);
  CHECK(wkv.features.has_lambda);
  CHECK(wkv.features.pairing == Pairing::LowerJ);
  CHECK(wkv.schemata.count(SchemaId::WkvPrimRec) == 1);
}

TEST_CASE("language membership follows the system features") {
  SystemDescriptor ia0 = *system_by_name("ia0");
  SystemDescriptor ia1 = *system_by_name("ia1");
  SystemDescriptor ha1 = *system_by_name("ha1");
  SystemDescriptor bim = *system_by_name("bim");

  CHECK(formula_in_language(pf("x + y = y * x"), ia0));
  CHECK(!formula_in_language(pf("exp(x, 2) = y"), ia0));
  CHECK(!formula_in_language(pf("alpha(x) = 0"), ia0));

  FormulaPtr rec_eq = pf("rec(0; alpha; x) = 0");
  CHECK(!formula_in_language(rec_eq, ia1));
  CHECK(formula_in_language(rec_eq, ha1));

  CHECK(!functor_in_language(parse_functor("lam x. x"), bim));
  CHECK(functor_in_language(parse_functor("alpha"), bim));
  CHECK(formula_in_language(pf("exists alpha. alpha(0) = 0"), bim));

  CHECK(expr_in_language(parse_expr("x + y"), ia0));
  CHECK(!expr_in_language(parse_expr("lam x. x"), ia0));

  // Generated sentences in the smallest language stay inside the larger ones.
  Gen gen(7);
  for (int i = 0; i < 40; ++i) {
    FormulaPtr f = gen.qf_formula(2, {nv("x")});
    if (!formula_in_language(f, ia0)) continue;
    CHECK(formula_in_language(f, ia1));
    CHECK(formula_in_language(f, ha1));
  }
}

TEST_CASE("system descriptors serialize losslessly") {
  for (const auto& sys : builtin_systems()) {
    SystemDescriptor back = system_from_json(to_json(sys));
    CHECK(back == sys);
  }
  CHECK_THROWS_AS(system_from_json(nlohmann::json::array()), ParseError);
  CHECK_THROWS_AS(system_from_json(nlohmann::json{{"name", "x"}}), ParseError);
}

TEST_CASE("the shipped descriptor file matches the builtins") {
  std::ifstream in(std::string(TSA_DATA_DIR) + "/systems.json");
  REQUIRE(in.good());
  nlohmann::json doc = nlohmann::json::parse(in);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == builtin_systems().size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    CHECK(system_from_json(doc[i]) == builtin_systems()[i]);
  }
}

TEST_CASE("definitional extension by primitive recursion") {
  SystemDescriptor ha1 = *system_by_name("ha1");
  const NumVar x = nv("x"), prev = nv("p"), stage = nv("i");
  TermPtr g = mk_var(x);
  TermPtr h = pt("p * i'");

  Extension ext = define_prim_rec(ha1, "f", x, g, prev, stage, h);
  CHECK(ext.system.extension_names.count("f") == 1);
  CHECK(ext.system.name == "ha1");

  SUBCASE("the factorial-style value unfolds through the recursor") {
    CHECK(eval_defined(ext.rule, {ext.rule}, 1, 3) == 6);
    CHECK(eval_defined(ext.rule, {ext.rule}, 1, 5) == 120);
    CHECK(eval_defined(ext.rule, {ext.rule}, 4, 0) == 4);

    TermPtr call = mk_defined("f", numeral(1), numeral(3));
    TermPtr expanded = expand_defined(call, {ext.rule});
    CHECK(!contains_rec(Expr{call}));
    CHECK(contains_rec(Expr{expanded}));
    CHECK(eval_term(expanded, {}, {}) == 6);
  }

  SUBCASE("expansion at stage zero is the base term") {
    TermPtr call = mk_defined("f", mk_var(x), numeral(0));
    TermPtr expanded = expand_defined(call, {ext.rule});
    Assignment asg;
    asg.bind(x, Nat(9));
    CHECK(eval_term(expanded, {}, asg) == eval_term(g, {}, asg));
  }

  SUBCASE("the registry grows functionally and rejects reuse") {
    CHECK(ha1.extension_names.empty());
    CHECK_THROWS_WITH_AS(
        define_prim_rec(ext.system, "f", x, g, prev, stage, h),
        "'f' is already defined", LanguageError);
    CHECK_THROWS_AS(define_prim_rec(ha1, "rec", x, g, prev, stage, h),
                    LanguageError);
  }

  SUBCASE("systems without the needed features refuse definitions") {
    CHECK_THROWS_AS(
        define_prim_rec(*system_by_name("ia1"), "f", x, g, prev, stage, h),
        LanguageError);
    CHECK_THROWS_AS(
        define_prim_rec(*system_by_name("ia0"), "f", x, g, prev, stage, h),
        LanguageError);
  }

  SUBCASE("defining terms may only mention the declared variables") {
    CHECK_THROWS_AS(define_prim_rec(ha1, "f2", x, pt("x + y"), prev, stage, h),
                    LanguageError);
    CHECK_THROWS_AS(define_prim_rec(ha1, "f2", x, pt("alpha(x)"), prev, stage, h),
                    LanguageError);
    CHECK_THROWS_AS(define_prim_rec(ha1, "f2", x, g, prev, prev, h),
                    LanguageError);
  }

  SUBCASE("parsing recognizes registered names") {
    TermPtr parsed = parse_term("f(1, 3)", ext.system.extension_names);
    CHECK(equal(parsed, mk_defined("f", numeral(1), numeral(3))));
    CHECK(to_text(parsed) == "f(1, 3)");
    Expr round = expr_from_json(to_json(parsed));
    CHECK(equal(std::get<TermPtr>(round), parsed));
  }

  SUBCASE("language membership tracks the registry") {
    TermPtr call = mk_defined("f", numeral(1), numeral(3));
    SystemDescriptor closed = ext.system;
    closed.open_registry = false;
    CHECK(term_in_language(call, closed));
    closed.extension_names.clear();
    CHECK(!term_in_language(call, closed));
    CHECK(!term_in_language(call, *system_by_name("ia0")));
  }

  SUBCASE("chained definitions expand through earlier rules") {
    Extension ext2 = define_prim_rec(
        ext.system, "f2", x, pt("x'"), prev, stage,
        parse_term("f(p, 2)", ext.system.extension_names));
    std::vector<DefRule> rules = {ext.rule, ext2.rule};
    TermPtr call = parse_term("f2(2, 1)", ext2.system.extension_names);
    TermPtr expanded = expand_defined(call, rules);
    // f2(2,0) = 3; f2(2,1) = f(3,2) = 3*1*2 = 6.
    CHECK(eval_term(expanded, {}, {}) == 6);
    CHECK(eval_defined(ext2.rule, rules, 2, 1) == 6);
  }
}

TEST_CASE("expansion leaves base-language formulas alone") {
  std::vector<DefRule> rules;
  FormulaPtr f = pf("forall x. exists y. x + y = rec(0; alpha; x)");
  CHECK(equal(expand_defined(f, rules), f));

  CHECK_THROWS_WITH_AS(
      expand_defined(mk_defined("mystery", numeral(0), numeral(0)), rules),
      "no expansion rule for defined constant 'mystery'", LanguageError);
}

TEST_CASE("evaluation agrees between the definition and its expansion") {
  SystemDescriptor ha1 = *system_by_name("ha1");
  Gen gen(5150);
  const NumVar x = nv("x"), prev = nv("p"), stage = nv("i");
  int trials = 0;
  while (trials < 20) {
    TermPtr g = gen.small_term(1, {x});
    TermPtr h = gen.small_term(1, {prev, stage, x});
    Extension ext = define_prim_rec(ha1, "f", x, g, prev, stage, h);
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        TermPtr call = mk_defined("f", numeral(a), numeral(b));
        Nat direct = eval_defined(ext.rule, {ext.rule}, Nat(a), Nat(b));
        Nat via_expansion = eval_term(expand_defined(call, {ext.rule}), {}, {});
        CHECK(direct == via_expansion);
      }
    }
    ++trials;
  }
}
