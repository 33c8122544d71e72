#include "doctest.h"

#include "tsa/checks/gen.h"
#include "tsa/decidable/decidable.h"
#include "tsa/errors.h"
#include "tsa/syntax/builders.h"
#include "tsa/syntax/ops.h"
#include "tsa/syntax/parse.h"
#include "tsa/syntax/print.h"

using namespace tsa;

namespace {

bool truth_of(const std::string& text, const Environment& env = {},
              const Assignment& asg = {}) {
  return truth(parse_formula(text), env, asg);
}

// Independent route: expand every bounded quantifier into an explicit
// conjunction/disjunction of numeral instances, then evaluate the
// quantifier-free result.
FormulaPtr expand_bounded(const FormulaPtr& f, const Environment& env,
                          const Assignment& asg) {
  if (std::get_if<Eq>(&f->node())) return f;
  if (const auto* n = std::get_if<Not>(&f->node())) {
    return mk_not(expand_bounded(n->body, env, asg));
  }
  if (const auto* b = std::get_if<BinConn>(&f->node())) {
    FormulaPtr l = expand_bounded(b->lhs, env, asg);
    FormulaPtr r = expand_bounded(b->rhs, env, asg);
    switch (b->op) {
      case Conn::And:
        return mk_and(std::move(l), std::move(r));
      case Conn::Or:
        return mk_or(std::move(l), std::move(r));
      case Conn::Implies:
        return mk_implies(std::move(l), std::move(r));
    }
  }
  auto bq = match_bounded_quant(f);
  REQUIRE(bq.has_value());
  std::uint64_t top = nat_to_index(eval_term(bq->bound, env, asg));
  FormulaPtr acc;
  for (std::uint64_t n = 0; n <= top; ++n) {
    const auto* q = std::get_if<NumQuant>(&f->node());
    FormulaPtr inst = substitute_num(q->body, bq->var, numeral(n));
    inst = expand_bounded(inst, env, asg);
    if (!acc) {
      acc = std::move(inst);
    } else {
      acc = bq->universal ? mk_and(std::move(acc), std::move(inst))
                          : mk_or(std::move(acc), std::move(inst));
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("classification distinguishes the three classes") {
  CHECK(classify(parse_formula("x = y")) == DecidabilityClass::QuantifierFree);
  CHECK(classify(parse_formula("~(x = 0 & y = 0)")) ==
        DecidabilityClass::QuantifierFree);
  CHECK(classify(parse_formula("exists y. y < x & y * y = x")) ==
        DecidabilityClass::BoundedOnly);
  CHECK(classify(parse_formula("forall y. y <= x -> y = y")) ==
        DecidabilityClass::BoundedOnly);
  CHECK(classify(parse_formula("exists alpha. alpha(0) = 0")) ==
        DecidabilityClass::Other);
  CHECK(classify(parse_formula("forall x. x = 0")) == DecidabilityClass::Other);
  CHECK(classify(parse_formula("exists y. y = 0 & y < x")) ==
        DecidabilityClass::Other);
  // The quantified variable must not occur in its own bound.
  CHECK(classify(parse_formula("exists y. y < y & y = 0")) ==
        DecidabilityClass::Other);
  // One bad quantifier anywhere poisons the whole formula.
  CHECK(classify(parse_formula("x = 0 & (forall y. y = 0)")) ==
        DecidabilityClass::Other);
  CHECK(classify(parse_formula(
            "forall y. y < x -> (exists z. z < y & z + z = y)")) ==
        DecidabilityClass::BoundedOnly);
}

TEST_CASE("bounded-pattern matching reports the pieces") {
  auto bq = match_bounded_quant(parse_formula("exists y. y < x & y * y = x"));
  REQUIRE(bq.has_value());
  CHECK_FALSE(bq->universal);
  CHECK_FALSE(bq->inclusive);
  CHECK(bq->var == NumVar{"y", 0});
  CHECK(equal(bq->bound, parse_term("x")));
  CHECK(equal(bq->body, parse_formula("y * y = x")));

  auto uq = match_bounded_quant(parse_formula("forall y. y <= x + 1 -> y = y"));
  REQUIRE(uq.has_value());
  CHECK(uq->universal);
  CHECK(uq->inclusive);
  CHECK(equal(uq->bound, parse_term("x + 1")));

  CHECK_FALSE(match_bounded_quant(parse_formula("forall y. y < x & y = y")));
  CHECK_FALSE(match_bounded_quant(parse_formula("x = 0")).has_value());
}

TEST_CASE("truth on bounded formulas") {
  CHECK(truth_of("exists y. y < 5 & y * y = 9"));
  CHECK_FALSE(truth_of("0 = 0'"));
  Environment env;
  env.bind(FunVar{"alpha", 0}, parse_functor("lam x. 0"));
  CHECK(truth(parse_formula("forall i. i < 3 -> alpha(i) = 0"), env, {}));
  CHECK_FALSE(truth_of("exists y. y < 3 & y * y = 9"));
  CHECK(truth_of("forall y. y <= 4 -> y < 5"));
  CHECK(truth_of(
      "exists y. y <= 9 & (exists z. z < y & (z + z = y & z < 3))"));
  CHECK_THROWS_AS(truth_of("forall x. x = x"), DecidabilityError);
  CHECK_THROWS_AS(truth_of("exists alpha. alpha(0) = 0"), DecidabilityError);
  Assignment asg;
  asg.bind(NumVar{"x", 0}, 49);
  CHECK(truth(parse_formula("exists y. y <= x & y * y = x"), {}, asg));
}

TEST_CASE("characteristic terms match the examples") {
  CharTerm ct = char_term(parse_formula("x = y"));
  CHECK(equal(ct.q, parse_term("sg(absdiff(x, y))")));
  Assignment asg;
  asg.bind(NumVar{"x", 0}, 3);
  asg.bind(NumVar{"y", 0}, 3);
  CHECK(eval_term(ct.q, {}, asg) == 0);
  asg.bind(NumVar{"x", 0}, 2);
  asg.bind(NumVar{"y", 0}, 5);
  CHECK(eval_term(ct.q, {}, asg) == 1);

  CHECK(eval_term(char_term(parse_formula("~(0 = 0)")).q, {}, {}) == 1);
  CHECK_THROWS_AS(char_term(parse_formula("forall x. x = x")),
                  DecidabilityError);
}

TEST_CASE("characteristic terms stay within the source's free variables") {
  Gen gen(101);
  std::vector<NumVar> scope{NumVar{"x", 0}, NumVar{"y", 0}};
  for (int i = 0; i < 50; ++i) {
    FormulaPtr f = gen.decidable_formula(3, scope);
    CharTerm ct = char_term(f);
    VarSets ff = free_vars(f);
    VarSets qf = free_vars(ct.q);
    for (const auto& v : qf.nums) CHECK(ff.nums.count(v) == 1);
    CHECK(qf.funs.empty());
  }
}

TEST_CASE("characteristic terms agree with truth on random formulas") {
  Gen gen(2024);
  std::vector<NumVar> scope{NumVar{"x", 0}, NumVar{"y", 0}};
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    FormulaPtr f = gen.decidable_formula(3, scope);
    CharTerm ct = char_term(f);
    for (std::uint64_t x = 0; x <= 5; ++x) {
      for (std::uint64_t y = 0; y <= 5; ++y) {
        Assignment asg;
        asg.bind(NumVar{"x", 0}, x);
        asg.bind(NumVar{"y", 0}, y);
        Nat q = eval_term(ct.q, {}, asg);
        CHECK(q <= 1);
        bool t = truth(f, {}, asg);
        if ((q == 0) != t) {
          CAPTURE(to_text(f));
          CAPTURE(x);
          CAPTURE(y);
          CHECK((q == 0) == t);
        }
        ++checked;
      }
    }
  }
  CHECK(checked == 100 * 36);
}

TEST_CASE("truth agrees with explicit quantifier expansion") {
  Gen gen(7);
  std::vector<NumVar> scope{NumVar{"x", 0}, NumVar{"y", 0}};
  for (int i = 0; i < 60; ++i) {
    FormulaPtr f = gen.decidable_formula(3, scope);
    for (std::uint64_t x = 0; x <= 3; ++x) {
      for (std::uint64_t y = 0; y <= 3; ++y) {
        Assignment asg;
        asg.bind(NumVar{"x", 0}, x);
        asg.bind(NumVar{"y", 0}, y);
        FormulaPtr expanded = expand_bounded(f, {}, asg);
        CHECK(classify(expanded) == DecidabilityClass::QuantifierFree);
        CHECK(truth(f, {}, asg) == truth(expanded, {}, asg));
      }
    }
  }
}

TEST_CASE("least witnesses and their minimality") {
  NumVar y{"y", 0};
  auto w = least_witness(parse_formula("10 <= y * y"), y, {}, {}, 100);
  REQUIRE(w.has_value());
  CHECK(*w == 4);
  auto zero = least_witness(parse_formula("y = y"), y, {}, {}, 100);
  REQUIRE(zero.has_value());
  CHECK(*zero == 0);
  CHECK_FALSE(least_witness(parse_formula("y = y'"), y, {}, {}, 100));

  // Minimality by rescan.
  FormulaPtr f = parse_formula("exists z. z < y & (z + z = y & 4 < z)");
  auto lw = least_witness(f, y, {}, {}, 100);
  REQUIRE(lw.has_value());
  Assignment at;
  at.bind(y, *lw);
  CHECK(truth(f, {}, at));
  for (Nat m = 0; m < *lw; ++m) {
    Assignment below;
    below.bind(y, m);
    CHECK_FALSE(truth(f, {}, below));
  }
}

TEST_CASE("choice witnesses realize a total choice function") {
  NumVar x{"x", 0};
  NumVar y{"y", 0};
  auto majorant = choice_witness(parse_formula("x < y"), x, y, {}, {}, 3, 10);
  CHECK(majorant == std::vector<Nat>{1, 2, 3});
  auto zeros = choice_witness(parse_formula("y = 0"), x, y, {}, {}, 4, 10);
  CHECK(zeros == std::vector<Nat>{0, 0, 0, 0});
  CHECK_THROWS_AS(choice_witness(parse_formula("y * y = x"), x, y, {}, {}, 3, 10),
                  CapExceededError);

  // The characteristic term of the chosen instances evaluates to 0.
  FormulaPtr f = parse_formula("x < y * y & ~(y = x)");
  auto table = choice_witness(f, x, y, {}, {}, 6, 50);
  CharTerm ct = char_term(f);
  for (std::size_t m = 0; m < table.size(); ++m) {
    Assignment asg;
    asg.bind(x, m);
    asg.bind(y, table[m]);
    CHECK(eval_term(ct.q, {}, asg) == 0);
  }
}

TEST_CASE("decision tables match the characteristic route") {
  NumVar x{"x", 0};
  auto evens = cfd_witness(parse_formula("exists y. y < x & y + y = x"), x, {},
                           {}, 5);
  CHECK(evens == std::vector<Nat>{1, 1, 0, 1, 0});
  auto always = cfd_witness(parse_formula("x = x"), x, {}, {}, 3);
  CHECK(always == std::vector<Nat>{0, 0, 0});

  Gen gen(5);
  std::vector<NumVar> scope{x};
  for (int i = 0; i < 40; ++i) {
    FormulaPtr f = gen.decidable_formula(2, scope);
    auto table = cfd_witness(f, x, {}, {}, 6);
    CharTerm ct = char_term(f);
    for (std::size_t m = 0; m < table.size(); ++m) {
      Assignment asg;
      asg.bind(x, m);
      CHECK(table[m] == eval_term(ct.q, {}, asg));
      CHECK(table[m] <= 1);
    }
  }
}

TEST_CASE("witness searches respect their caps") {
  NumVar y{"y", 0};
  EvalLimits tight;
  tight.loop_cap = 50;
  CHECK_THROWS_AS(
      least_witness(parse_formula("y = y'"), y, {}, {}, 1000, tight),
      CapExceededError);
  CHECK_FALSE(least_witness(parse_formula("y = y'"), y, {}, {}, 30, tight));
}
