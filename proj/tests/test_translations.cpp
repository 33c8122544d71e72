#include <string>
#include <vector>

#include "doctest.h"
#include "tsa/checks/gen.h"
#include "tsa/errors.h"
#include "tsa/kernel/env.h"
#include "tsa/syntax/builders.h"
#include "tsa/syntax/ops.h"
#include "tsa/syntax/parse.h"
#include "tsa/syntax/print.h"
#include "tsa/translations/translate.h"

using namespace tsa;

namespace {

FormulaPtr pf(const std::string& text) { return parse_formula(text); }

Environment env_with(const std::string& name, const std::string& functor) {
  Environment env;
  env.bind(FunVar{name, 0}, parse_functor(functor));
  return env;
}

}  // namespace

TEST_CASE("occurrence finders pick the leftmost candidate") {
  SUBCASE("recursion") {
    CHECK(!find_rec_occurrence(pf("x + y = 0")).has_value());
    auto occ = find_rec_occurrence(pf("rec(0; alpha; y) = z"));
    REQUIRE(occ.has_value());
    CHECK(to_text(occ->term) == "rec(0; alpha; y)");
    CHECK(occ->path == std::vector<int>{0});
    REQUIRE(occ->ordering.size() == 1);
    CHECK(occ->ordering[0] == NumVar{"y", 0});

    // A recursion inside another one's components is found first.
    auto nested =
        find_rec_occurrence(pf("rec(rec(x; alpha; y); beta; 2) = 0"));
    REQUIRE(nested.has_value());
    CHECK(to_text(nested->term) == "rec(x; alpha; y)");
    CHECK(nested->path == std::vector<int>{0, 0});

    // Left equation side is scanned before the right.
    auto ordered = find_rec_occurrence(pf("rec(1; alpha; 1) = rec(2; alpha; 2)"));
    REQUIRE(ordered.has_value());
    CHECK(to_text(ordered->term) == "rec(1; alpha; 1)");
  }
  SUBCASE("lambda") {
    CHECK(!find_lambda_occurrence(pf("alpha(3) = 0")).has_value());
    auto occ = find_lambda_occurrence(pf("(lam x. (lam y. y)(x))(3) = 0"));
    REQUIRE(occ.has_value());
    CHECK(to_text(occ->functor) == "lam x. (lam y. y)(x)");
    CHECK(occ->path == std::vector<int>{0, 0});
  }
}

TEST_CASE("recursion elimination unfolds one occurrence at a time") {
  FormulaPtr f = pf("rec(0; alpha; y) = z");
  FormulaPtr out = rec_eliminate(f);
  CHECK(!contains_rec(Expr{out}));
  FormulaPtr expected = pf(
      "exists 'g. (forall w. exists 'b. 'b(0) = 0 & "
      "(forall z1. 'b(z1') = alpha(exp(2, 'b(z1)) * exp(3, z1))) & "
      "'b(expof(w, 0)) = 'g(w)) & 'g(exp(2, y)) = z");
  CHECK_MESSAGE(equal(out, expected), to_text(out));
}

TEST_CASE("lambda elimination introduces the defining conjunct") {
  FormulaPtr f = pf("(lam x. x)(3) = 3");
  FormulaPtr out = lambda_eliminate(f);
  CHECK(!contains_lambda(Expr{out}));
  FormulaPtr expected = pf("exists 'a. (forall x. x = 'a(x)) & 'a(3) = 3");
  CHECK_MESSAGE(equal(out, expected), to_text(out));
}

TEST_CASE("translations are identities on target-language formulas") {
  for (const char* text : {"x + y = 0", "forall x. x = 0 \\/ ~x = 0",
                           "exists alpha. alpha(0) = x"}) {
    FormulaPtr f = pf(text);
    CHECK(equal(rec_eliminate(f), f));
    CHECK(equal(lambda_eliminate(f), f));
  }
}

TEST_CASE("syntactic properties of both eliminations") {
  Gen gen(424242);
  const NumVar x = NumVar{"x", 0}, y = NumVar{"y", 0};
  for (int round = 0; round < 40; ++round) {
    FormulaPtr a = mk_eq(gen.term_with_rec(2, {x, y}), gen.small_term(1, {x}));
    FormulaPtr b = mk_eq(gen.small_term(1, {y}), gen.term_with_rec(1, {x, y}));
    FormulaPtr la =
        mk_eq(gen.term_with_lambda(2, {x, y}), gen.small_term(1, {x}));
    FormulaPtr lb =
        mk_eq(gen.small_term(1, {y}), gen.term_with_lambda(1, {x, y}));

    for (const FormulaPtr& f : {a, b, mk_and(a, b), mk_implies(a, b),
                                mk_forall(x, a), mk_exists_fun(FunVar{"phi", 0}, b)}) {
      FormulaPtr out = rec_eliminate(f);
      CHECK(!contains_rec(Expr{out}));
      CHECK(free_vars(out) == free_vars(f));
      CHECK(equal(rec_eliminate(out), out));
    }
    for (const FormulaPtr& f : {la, lb, mk_or(la, lb), mk_not(la),
                                mk_exists(y, lb)}) {
      FormulaPtr out = lambda_eliminate(f);
      CHECK(!contains_lambda(Expr{out}));
      CHECK(free_vars(out) == free_vars(f));
      CHECK(equal(lambda_eliminate(out), out));
    }

    // Exact commutation with every connective and quantifier.
    CHECK(equal(rec_eliminate(mk_and(a, b)),
                mk_and(rec_eliminate(a), rec_eliminate(b))));
    CHECK(equal(rec_eliminate(mk_or(a, b)),
                mk_or(rec_eliminate(a), rec_eliminate(b))));
    CHECK(equal(rec_eliminate(mk_implies(a, b)),
                mk_implies(rec_eliminate(a), rec_eliminate(b))));
    CHECK(equal(rec_eliminate(mk_not(a)), mk_not(rec_eliminate(a))));
    CHECK(equal(rec_eliminate(mk_forall(x, a)),
                mk_forall(x, rec_eliminate(a))));
    CHECK(equal(rec_eliminate(mk_exists(x, a)),
                mk_exists(x, rec_eliminate(a))));
    CHECK(equal(rec_eliminate(mk_forall_fun(FunVar{"phi", 0}, a)),
                mk_forall_fun(FunVar{"phi", 0}, rec_eliminate(a))));
    CHECK(equal(lambda_eliminate(mk_and(la, lb)),
                mk_and(lambda_eliminate(la), lambda_eliminate(lb))));
    CHECK(equal(lambda_eliminate(mk_not(lb)),
                mk_not(lambda_eliminate(lb))));
    CHECK(equal(lambda_eliminate(mk_exists(y, la)),
                mk_exists(y, lambda_eliminate(la))));
  }
}

TEST_CASE("recursion witness check validates the known instances") {
  Environment sum_env = env_with("u", "lam w. expof(w, 0) + expof(w, 1)");
  CHECK(check_rec_equiv(pf("rec(5; 'u; 3) = 8"), sum_env, {}, 16));
  CHECK(!check_rec_equiv(pf("rec(5; 'u; 3) = 9"), sum_env, {}, 16) == false);
  // Both routes false still means the equivalence holds.
  CHECK(check_rec_equiv(pf("rec(0; 'u; 0) = 1"), env_with("u", "lam w. 0"), {},
                        16));
  // Free variables come from the assignment.
  Assignment asg;
  asg.bind(NumVar{"y", 0}, Nat(3));
  asg.bind(NumVar{"z", 0}, Nat(8));
  CHECK(check_rec_equiv(pf("rec(5; 'u; y) = z"), sum_env, asg, 32));
}

TEST_CASE("lambda witness check validates the known instances") {
  CHECK(check_lambda_equiv(pf("(lam x. x * x)(3) = 9"), {}, {}));
  CHECK(check_lambda_equiv(pf("(lam x. x)(0) = 1"), {}, {}));
  Assignment asg;
  asg.bind(NumVar{"y", 0}, Nat(4));
  CHECK(check_lambda_equiv(pf("(lam x. x + y)(2) = 6"), {}, asg));
}

TEST_CASE("witness checks pass on generated prime formulas") {
  Gen gen(987);
  const NumVar x = NumVar{"x", 0}, y = NumVar{"y", 0};
  for (int round = 0; round < 12; ++round) {
    FormulaPtr rf =
        mk_eq(gen.term_with_rec(1, {x, y}), gen.small_term(1, {x, y}));
    FormulaPtr lf =
        mk_eq(gen.term_with_lambda(1, {x, y}), gen.small_term(1, {x, y}));
    for (std::uint64_t xv = 0; xv <= 2; ++xv) {
      for (std::uint64_t yv = 0; yv <= 2; ++yv) {
        Assignment asg;
        asg.bind(x, Nat(xv));
        asg.bind(y, Nat(yv));
        CHECK(check_rec_equiv(rf, {}, asg, 24));
        CHECK(check_lambda_equiv(lf, {}, asg));
      }
    }
  }
}

TEST_CASE("witness checks refuse untestable quantifiers") {
  CHECK_THROWS_AS(
      check_rec_equiv(pf("forall x. rec(0; alpha; x) = 0"),
                      env_with("alpha", "lam w. 0"), {}, 4),
      DecidabilityError);
  CHECK_THROWS_AS(
      check_lambda_equiv(pf("exists alpha. (lam x. x)(0) = alpha(0)"),
                         env_with("alpha", "lam w. 0"), {}),
      DecidabilityError);
  // Guarded quantifiers are enumerated instead.
  CHECK(check_rec_equiv(
      pf("forall v. (monus(v', 3) = 0) -> rec(0; alpha; v) = 0"),
      env_with("alpha", "lam w. 0"), {}, 8));
}
