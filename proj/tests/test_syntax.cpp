#include "doctest.h"

#include "tsa/errors.h"
#include "tsa/syntax/ast.h"
#include "tsa/syntax/builders.h"
#include "tsa/syntax/json_io.h"
#include "tsa/syntax/ops.h"
#include "tsa/syntax/parse.h"
#include "tsa/syntax/print.h"

using namespace tsa;

namespace {

// Parse, print, re-parse: the printed form must parse back to an equal tree.
void check_term_roundtrip(const std::string& src) {
  TermPtr t = parse_term(src);
  std::string printed = to_text(t);
  TermPtr again = parse_term(printed);
  CAPTURE(src);
  CAPTURE(printed);
  CHECK(equal(t, again));
  CHECK(to_text(again) == printed);
}

void check_formula_roundtrip(const std::string& src) {
  FormulaPtr f = parse_formula(src);
  std::string printed = to_text(f);
  FormulaPtr again = parse_formula(printed);
  CAPTURE(src);
  CAPTURE(printed);
  CHECK(equal(f, again));
  CHECK(to_text(again) == printed);
}

void check_functor_roundtrip(const std::string& src) {
  FunctorPtr u = parse_functor(src);
  std::string printed = to_text(u);
  FunctorPtr again = parse_functor(printed);
  CAPTURE(src);
  CAPTURE(printed);
  CHECK(equal(u, again));
  CHECK(to_text(again) == printed);
}

}  // namespace

TEST_CASE("numerals print in decimal and reparse") {
  CHECK(to_text(numeral(0)) == "0");
  CHECK(to_text(numeral(1)) == "1");
  CHECK(to_text(numeral(12)) == "12");
  std::uint64_t v = 0;
  CHECK(is_numeral(parse_term("7"), &v));
  CHECK(v == 7);
  CHECK_FALSE(is_numeral(parse_term("x"), &v));
  CHECK_FALSE(is_numeral(parse_term("x'"), &v));
  CHECK(is_numeral(parse_term("0''"), &v));
  CHECK(v == 2);
}

TEST_CASE("term roundtrips") {
  for (const char* s : {
           "x",
           "x'",
           "x''",
           "x + y",
           "x + y + z",
           "x * (y + z)",
           "(x + y) * z",
           "x * y'",
           "(x + y)'",
           "exp(x, 2)",
           "fact(x)",
           "pd(x)",
           "monus(x, y)",
           "minf(x, maxf(y, z))",
           "sgbar(sg(x))",
           "absdiff(x, y)",
           "rm(x, y)",
           "quot(x, y)",
           "sum(z, lam y. y * y)",
           "prod(z, 'a)",
           "minle(z, sg)",
           "maxle(z, lam y. pd(y))",
           "prime(i)",
           "expof(a, i)",
           "lh(a)",
           "concat(a, b)",
           "bar(x, alpha)",
           "tilde(x, alpha)",
           "join(a, b)",
           "ccp(e)",
           "alpha(x)",
           "'a(x + y)",
           "(sg)(x)",
           "(lam y. y + 1)(x)",
           "rec(x; lam w. expof(w, 0) + expof(w, 1); y)",
           "rec(0; sg; y')",
           "beta(rec(x; 'f; y))",
           "sum(x, lam y. alpha(y) + 1) * 2",
       }) {
    check_term_roundtrip(s);
  }
}

TEST_CASE("functor roundtrips") {
  for (const char* s : {
           "alpha",
           "'a",
           "'a1",
           "'gamma2",
           "sg",
           "pd",
           "fact",
           "lam x. x + 1",
           "lam x. rec(x; lam w. w; x)",
           "lam x. sum(x, lam y. y)",
       }) {
    check_functor_roundtrip(s);
  }
}

TEST_CASE("formula roundtrips") {
  for (const char* s : {
           "x = y",
           "x = 0 & y = 0",
           "x = 0 \\/ y = 0",
           "x = 0 -> y = 0",
           "x = 0 -> y = 0 -> z = 0",
           "(x = 0 -> y = 0) -> z = 0",
           "~x = 0",
           "~(x = 0 & y = 0)",
           "~x = 0 \\/ ~y = 0",
           "forall x. x = x",
           "exists y. y = x'",
           "forall alpha. alpha(0) = 0",
           "exists 'a. 'a(x) = x",
           "forall x. (exists y. y = x) & x = x",
           "(forall x. x = 0) -> 0 = 0",
           "x = 0 & y = 0 & z = 0",
           "x = 0 \\/ y = 0 & z = 0",
           "(x = 0 \\/ y = 0) & z = 0",
       }) {
    check_formula_roundtrip(s);
  }
}

TEST_CASE("comparison and divisibility abbreviations expand to equations") {
  FormulaPtr lt = parse_formula("x < y");
  CHECK(equal(lt, parse_formula("monus(x', y) = 0")));
  FormulaPtr le = parse_formula("x <= y");
  CHECK(equal(le, parse_formula("monus(x', y) = 0 \\/ x = y")));
  FormulaPtr dv = parse_formula("d | a");
  CHECK(equal(dv, parse_formula("sg(rm(a, d)) = 0")));
}

TEST_CASE("unique existence abbreviation expands") {
  FormulaPtr f = parse_formula("exists! y. y = x");
  FormulaPtr expected =
      parse_formula("exists y. y = x & (forall z. z = x -> y = z)");
  CHECK(equal(f, expected));
}

TEST_CASE("functor equality abbreviation expands pointwise") {
  FormulaPtr f = parse_formula("alpha = beta");
  CHECK(equal(f, parse_formula("forall x. alpha(x) = beta(x)")));
  // The pointwise variable avoids capture.
  FormulaPtr g = parse_formula("(lam x. x) = alpha");
  const auto* q = std::get_if<NumQuant>(&g->node());
  REQUIRE(q != nullptr);
  CHECK(q->universal);
}

TEST_CASE("parse errors carry positions and reject bad input") {
  CHECK_THROWS_AS(parse_term("x +"), ParseError);
  CHECK_THROWS_AS(parse_term("(x"), ParseError);
  CHECK_THROWS_AS(parse_term("add(x)"), ParseError);
  CHECK_THROWS_AS(parse_term("sum(x, y)"), ParseError);
  CHECK_THROWS_AS(parse_term("lam x. x"), ParseError);
  CHECK_THROWS_AS(parse_formula("x"), ParseError);
  CHECK_THROWS_AS(parse_formula("forall x x = 0"), ParseError);
  CHECK_THROWS_AS(parse_term("rec(x; y; z)"), ParseError);
  CHECK_THROWS_AS(parse_term("9999999999999"), ParseError);
  CHECK_THROWS_AS(parse_term("x0"), ParseError);
  CHECK_THROWS_AS(parse_term("x01"), ParseError);
  CHECK_THROWS_AS(parse_term("rec(x)"), ParseError);
  CHECK_THROWS_AS(parse_expr("forall"), ParseError);
}

TEST_CASE("variable spellings: suffix digits are indices") {
  TermPtr t = parse_term("x12");
  const auto* v = std::get_if<NumVarRef>(&t->node());
  REQUIRE(v != nullptr);
  CHECK(v->var.name == "x");
  CHECK(v->var.index == 12);
  CHECK(to_text(t) == "x12");

  FunctorPtr u = parse_functor("'a3");
  const auto* fv = std::get_if<FunVarRef>(&u->node());
  REQUIRE(fv != nullptr);
  CHECK(fv->var.name == "a");
  CHECK(fv->var.index == 3);
}

TEST_CASE("free variables respect binders") {
  FormulaPtr f = parse_formula("forall x. alpha(x) = y");
  VarSets fv = free_vars(f);
  CHECK(fv.nums == std::set<NumVar>{NumVar{"y", 0}});
  CHECK(fv.funs == std::set<FunVar>{FunVar{"alpha", 0}});

  TermPtr t = parse_term("sum(x, lam x. x)");
  VarSets tv = free_vars(t);
  CHECK(tv.nums == std::set<NumVar>{NumVar{"x", 0}});

  FormulaPtr g = parse_formula("exists 'a. 'a(x) = 'b(x)");
  VarSets gv = free_vars(g);
  CHECK(gv.funs == std::set<FunVar>{FunVar{"b", 0}});
}

TEST_CASE("substitution is capture avoiding") {
  // Substituting y for x under a binder on y must rename the binder.
  FormulaPtr f = parse_formula("exists y. y = x'");
  FormulaPtr g = substitute_num(f, NumVar{"x", 0}, parse_term("y"));
  // Plain replacement would read "exists y. y = y'", which is wrong.
  CHECK_FALSE(equal(g, parse_formula("exists y. y = y'")));
  CHECK(congruent(g, parse_formula("exists z. z = y'")));

  // Functor substitution under lambda.
  TermPtr t = parse_term("sum(x, lam y. alpha(y))");
  TermPtr u =
      substitute_fun(t, FunVar{"alpha", 0}, parse_functor("lam z. z + y"));
  // Applications of a replacement lambda stay explicit (no beta-reduction),
  // and the inner binder is renamed away from the replacement's free y.
  CHECK(congruent(u, parse_term("sum(x, lam w. (lam z. z + y)(w))")));
  CHECK_FALSE(congruent(u, parse_term("sum(x, lam y. (lam z. z + y)(y))")));
}

TEST_CASE("substituting a variable for itself is the identity") {
  FormulaPtr f = parse_formula("forall y. alpha(x + y) = 0");
  FormulaPtr g = substitute_num(f, NumVar{"x", 0}, parse_term("x"));
  CHECK(equal(f, g));
}

TEST_CASE("congruence identifies renamings and nothing else") {
  CHECK(congruent(parse_formula("forall x. x = y"),
                  parse_formula("forall z. z = y")));
  CHECK_FALSE(congruent(parse_formula("forall x. x = y"),
                        parse_formula("forall z. z = w")));
  CHECK(congruent(parse_functor("lam x. x + y"), parse_functor("lam z. z + y")));
  CHECK_FALSE(congruent(parse_functor("lam x. x"), parse_functor("lam x. y")));
  CHECK(congruent(parse_formula("exists 'a. 'a(x) = 0"),
                  parse_formula("exists 'b. 'b(x) = 0")));
  // Free variables must match exactly.
  CHECK_FALSE(congruent(parse_term("x"), parse_term("y")));
  // Nested binders with shadowing.
  CHECK(congruent(parse_term("sum(z, lam x. sum(x, lam x. x))"),
                  parse_term("sum(z, lam a. sum(a, lam b. b))")));
}

TEST_CASE("free-for checks detect capture") {
  FormulaPtr f = parse_formula("exists y. y = x");
  CHECK(is_free_for(parse_term("z"), NumVar{"x", 0}, Expr{f}));
  CHECK_FALSE(is_free_for(parse_term("y"), NumVar{"x", 0}, Expr{f}));
  CHECK(is_free_for(parse_term("y"), NumVar{"z", 0}, Expr{f}));

  FormulaPtr g = parse_formula("exists y. alpha(y) = 0");
  CHECK_FALSE(
      is_free_for(parse_functor("lam z. z + y"), FunVar{"alpha", 0}, Expr{g}));
  CHECK(is_free_for(parse_functor("lam z. z + w"), FunVar{"alpha", 0}, Expr{g}));
}

TEST_CASE("tuple views replace variables by coordinate components") {
  FormulaPtr f = parse_formula("x + y = alpha(y)");
  VarOrdering ord =
      VarOrdering::of(std::set<NumVar>{NumVar{"x", 0}, NumVar{"y", 0}});
  NumVar w{"w", 0};
  Expr viewed = coded_tuple_view(Expr{f}, w, ord);
  FormulaPtr expected =
      parse_formula("expof(w, 0) + expof(w, 1) = alpha(expof(w, 1))");
  CHECK(equal(std::get<FormulaPtr>(viewed), expected));

  // Bound occurrences are untouched.
  FormulaPtr g = parse_formula("forall x. x = y");
  VarOrdering ord2 = VarOrdering::of(std::set<NumVar>{NumVar{"y", 0}});
  Expr viewed2 = coded_tuple_view(Expr{g}, w, ord2);
  CHECK(equal(std::get<FormulaPtr>(viewed2),
              parse_formula("forall x. x = expof(w, 0)")));

  // The tuple variable must not already occur, and the ordering must cover
  // every free variable.
  CHECK_THROWS_AS(coded_tuple_view(Expr{parse_term("w + x")}, w, ord),
                  Error);
  CHECK_THROWS_AS(
      coded_tuple_view(Expr{parse_term("x + z")}, w, ord), Error);
}

TEST_CASE("variable orderings are ascending and positional") {
  std::set<NumVar> s{NumVar{"y", 0}, NumVar{"x", 0}, NumVar{"x", 2}};
  VarOrdering ord = VarOrdering::of(s);
  REQUIRE(ord.size() == 3);
  CHECK(ord[0] == NumVar{"x", 0});
  CHECK(ord[1] == NumVar{"x", 2});
  CHECK(ord[2] == NumVar{"y", 0});
  CHECK(ord.position(NumVar{"x", 2}) == 1);
  CHECK(ord.position(NumVar{"q", 0}) == VarOrdering::npos);
}

TEST_CASE("fresh variables avoid a used set") {
  std::set<NumVar> used{NumVar{"x", 0}, NumVar{"x", 1}};
  CHECK(fresh_num_var("x", used) == NumVar{"x", 2});
  CHECK(fresh_num_var("y", used) == NumVar{"y", 0});
  std::set<FunVar> fused{FunVar{"g", 0}};
  CHECK(fresh_fun_var("g", fused) == FunVar{"g", 1});
}

TEST_CASE("builders produce the documented shapes") {
  CHECK(to_text(lt_formula(parse_term("x"), parse_term("y"))) ==
        "monus(x', y) = 0");
  CHECK(to_text(le_formula(parse_term("x"), parse_term("y"))) ==
        "monus(x', y) = 0 \\/ x = y");
  CHECK(to_text(divides_formula(parse_term("d"), parse_term("a"))) ==
        "sg(rm(a, d)) = 0");
  CHECK(equal(tuple_code({parse_term("a"), parse_term("b")}),
              parse_term("exp(2, a) * exp(3, b)")));
  CHECK(equal(tuple_code({}), numeral(1)));
  FormulaPtr iff = iff_formula(parse_formula("x = 0"), parse_formula("y = 0"));
  CHECK(equal(iff, parse_formula("(x = 0 -> y = 0) & (y = 0 -> x = 0)")));
}

TEST_CASE("rec detection and lambda detection see through binders") {
  CHECK(contains_rec(Expr{parse_term("rec(0; sg; x)")}));
  CHECK(contains_rec(Expr{parse_formula("forall x. rec(0; sg; x) = 0")}));
  CHECK_FALSE(contains_rec(Expr{parse_formula("forall x. x = 0")}));
  CHECK(contains_lambda(Expr{parse_term("sum(x, lam y. y)")}));
  CHECK_FALSE(contains_lambda(Expr{parse_term("sum(x, sg)")}));
}

TEST_CASE("json serialization roundtrips every node kind") {
  for (const char* s : {
           "rec(x; lam w. expof(w, 0) + expof(w, 1); y)",
           "sum(x, lam y. alpha(y))",
           "(sg)(x)",
           "bar(x, alpha)",
       }) {
    TermPtr t = parse_term(s);
    TermPtr back = term_from_json(to_json(t));
    CHECK(equal(t, back));
  }
  for (const char* s : {
           "forall x. (exists 'a. 'a(x) = x) -> ~x = 0 \\/ x = 0",
           "exists alpha. forall x. alpha(x) = 0 & x = x",
       }) {
    FormulaPtr f = parse_formula(s);
    FormulaPtr back = formula_from_json(to_json(f));
    CHECK(equal(f, back));
  }
  FunctorPtr u = parse_functor("lam x. rec(x; 'f; x)");
  CHECK(equal(u, functor_from_json(to_json(u))));
}

TEST_CASE("json rejects malformed trees") {
  using nlohmann::json;
  CHECK_THROWS_AS(term_from_json(json{{"node", "nope"}}), ParseError);
  CHECK_THROWS_AS(term_from_json(json::array()), ParseError);
  CHECK_THROWS_AS(
      term_from_json(json{{"node", "var"}, {"name", "Sum"}, {"index", 0}}),
      ParseError);
  CHECK_THROWS_AS(
      term_from_json(json{{"node", "var"}, {"name", "alpha"}, {"index", 0}}),
      ParseError);
  CHECK_THROWS_AS(term_from_json(json{{"node", "const"},
                                      {"name", "add"},
                                      {"nums", json::array()},
                                      {"funs", json::array()}}),
                  ParseError);
  CHECK_THROWS_AS(functor_from_json(json{{"node", "constfn"}, {"name", "add"}}),
                  ParseError);
}

TEST_CASE("expression parsing dispatches by shape") {
  Expr e1 = parse_expr("x + y");
  CHECK(std::holds_alternative<TermPtr>(e1));
  Expr e2 = parse_expr("x = y");
  CHECK(std::holds_alternative<FormulaPtr>(e2));
  Expr e3 = parse_expr("lam x. x");
  CHECK(std::holds_alternative<FunctorPtr>(e3));
  Expr e4 = parse_expr("alpha");
  CHECK(std::holds_alternative<FunctorPtr>(e4));
}

TEST_CASE("printer inserts parentheses only where grammar demands") {
  CHECK(to_text(parse_term("x + (y + z)")) == "x + (y + z)");
  CHECK(to_text(parse_term("(x + y) + z")) == "x + y + z");
  CHECK(to_text(parse_term("x * y + z")) == "x * y + z");
  CHECK(to_text(parse_term("x * (y + z)")) == "x * (y + z)");
  CHECK(to_text(parse_term("(x + y)'")) == "(x + y)'");
  CHECK(to_text(parse_formula("x = 0 -> (y = 0 -> z = 0)")) ==
        "x = 0 -> y = 0 -> z = 0");
  CHECK(to_text(parse_formula("~(x = 0)")) == "~x = 0");
  CHECK(to_text(parse_formula("forall x. x = 0 \\/ ~x = 0")) ==
        "forall x. x = 0 \\/ ~x = 0");
}
