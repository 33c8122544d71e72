#include <random>

#include "doctest.h"
#include "tsa/errors.h"
#include "tsa/kernel/axioms.h"
#include "tsa/kernel/codec.h"
#include "tsa/kernel/env.h"
#include "tsa/kernel/eval.h"
#include "tsa/syntax/builders.h"
#include "tsa/syntax/ops.h"
#include "tsa/syntax/parse.h"

using namespace tsa;

namespace {

Nat ev(const std::string& term_text, const Environment& env = {},
       const Assignment& asg = {}) {
  return eval_term(parse_term(term_text), env, asg);
}

}  // namespace

TEST_CASE("arithmetic constants take their table values") {
  CHECK(ev("0") == 0);
  CHECK(ev("0'''") == 3);
  CHECK(ev("3 + 4") == 7);
  CHECK(ev("3 * 4") == 12);
  CHECK(ev("exp(2, 10)") == 1024);
  CHECK(ev("exp(5, 0)") == 1);
  CHECK(ev("exp(0, 0)") == 1);
  CHECK(ev("exp(0, 3)") == 0);
  CHECK(ev("fact(0)") == 1);
  CHECK(ev("fact(5)") == 120);
  CHECK(ev("pd(0)") == 0);
  CHECK(ev("pd(9)") == 8);
  CHECK(ev("monus(7, 3)") == 4);
  CHECK(ev("monus(3, 7)") == 0);
  CHECK(ev("minf(3, 7)") == 3);
  CHECK(ev("maxf(3, 7)") == 7);
  CHECK(ev("sgbar(0)") == 1);
  CHECK(ev("sgbar(5)") == 0);
  CHECK(ev("sg(0)") == 0);
  CHECK(ev("sg(7)") == 1);
  CHECK(ev("absdiff(3, 8)") == 5);
  CHECK(ev("absdiff(8, 3)") == 5);
  CHECK(ev("rm(7, 3)") == 1);
  CHECK(ev("rm(5, 0)") == 5);
  CHECK(ev("quot(7, 3)") == 2);
  CHECK(ev("quot(5, 0)") == 0);
}

TEST_CASE("iterator constants fold their functor argument") {
  CHECK(ev("sum(4, lam y. y)") == 6);
  CHECK(ev("sum(0, lam y. y + 9)") == 0);
  CHECK(ev("prod(4, lam y. y + 1)") == 24);
  CHECK(ev("prod(0, lam y. 0)") == 1);
  CHECK(ev("minle(3, lam y. monus(5, y))") == 2);
  CHECK(ev("maxle(3, lam y. monus(5, y))") == 5);
  CHECK(ev("minle(0, lam y. y + 4)") == 4);
}

TEST_CASE("prime machinery") {
  CHECK(ev("prime(0)") == 2);
  CHECK(ev("prime(1)") == 3);
  CHECK(ev("prime(5)") == 13);
  CHECK(ev("prime(40)") == 179);
  CHECK(ev("expof(12, 0)") == 2);
  CHECK(ev("expof(12, 1)") == 1);
  CHECK(ev("expof(12, 2)") == 0);
  CHECK(ev("expof(0, 3)") == 0);
  CHECK(ev("expof(1, 3)") == 0);
  CHECK(ev("lh(12)") == 2);
  CHECK(ev("lh(1)") == 0);
  CHECK(ev("lh(0)") == 0);
  CHECK(ev("concat(12, 8)") == 1500);
  CHECK(ev("join(12, 8)") == 24);
  CHECK(ev("bar(2, lam i. i)") == 18);
  CHECK(ev("tilde(2, lam i. i)") == 3);
  CHECK_THROWS_AS(ev("ccp(3)"), UnsupportedConstantError);
}

TEST_CASE("variables come from the assignment and environment") {
  Assignment asg;
  asg.bind(NumVar{"x", 0}, 5);
  Environment env;
  env.bind(FunVar{"alpha", 0}, parse_functor("lam x. 0"));
  CHECK(ev("x + 2", env, asg) == 7);
  CHECK(ev("alpha(9)", env, asg) == 0);
  CHECK_THROWS_AS(ev("y", env, asg), UnboundVariableError);
  CHECK_THROWS_AS(ev("beta(1)", env, asg), UnboundVariableError);
}

TEST_CASE("functor evaluation yields total handles") {
  Environment env;
  env.bind(FunVar{"alpha", 0}, parse_functor("lam x. 0"));
  CHECK(eval_functor(parse_functor("lam x. x'"), {}, {})(4) == 5);
  CHECK(eval_functor(parse_functor("alpha"), env, {})(9) == 0);
  CHECK(eval_functor(parse_functor("sg"), {}, {})(7) == 1);
}

TEST_CASE("recursion evaluates the course of the iteration") {
  CHECK(ev("rec(5; lam w. expof(w, 0) + expof(w, 1); 3)") == 8);
  CHECK(ev("rec(5; lam w. expof(w, 0) + expof(w, 1); 0)") == 5);
  CHECK(ev("(lam x. x * x)(3)") == 9);
}

TEST_CASE("recursion satisfies both recursion equations") {
  const char* steps[] = {
      "lam w. expof(w, 0) + expof(w, 1)",
      "lam w. expof(w, 0) + 2",
      "lam w. sg(expof(w, 1))",
      "lam w. 0",
      "lam w. 7",
  };
  for (const char* step_text : steps) {
    FunctorPtr u = parse_functor(step_text);
    FunHandle step = eval_functor(u, {}, {});
    for (std::uint64_t a : {0, 1, 5}) {
      TermPtr base = numeral(a);
      CHECK(eval_term(mk_rec(base, u, numeral(0)), {}, {}) == a);
      for (std::uint64_t s = 0; s < 6; ++s) {
        Nat at_s = eval_term(mk_rec(base, u, numeral(s)), {}, {});
        Nat at_s1 = eval_term(mk_rec(base, u, numeral(s + 1)), {}, {});
        CHECK(at_s1 == step(pair_code(at_s, s)));
      }
    }
  }
}

TEST_CASE("applying a lambda equals substituting its argument") {
  struct Case {
    const char* body;
    const char* arg;
  };
  for (const auto& [body, arg] : std::initializer_list<Case>{
           {"x * x + 1", "3"},
           {"sum(x, lam y. y + x)", "4"},
           {"rec(x; lam w. expof(w, 0) + x; x)", "3"},
           {"minf(x, y)", "y + 2"},
       }) {
    Assignment asg;
    asg.bind(NumVar{"y", 0}, 9);
    TermPtr body_t = parse_term(body);
    TermPtr arg_t = parse_term(arg);
    NumVar x{"x", 0};
    Nat applied =
        eval_term(mk_apply(mk_lambda(x, body_t), arg_t), {}, asg);
    Nat substituted = eval_term(substitute_num(body_t, x, arg_t), {}, asg);
    CHECK(applied == substituted);
  }
}

TEST_CASE("sequence codec oracle values") {
  CHECK(encode_seq({}) == 1);
  CHECK(encode_seq({2, 1}) == 12);
  CHECK(encode_seq({5, 6, 7}) == 1822500000);
  CHECK(component(12, 0) == 2);
  CHECK(component(12, 1) == 1);
  CHECK(component(0, 4) == 0);
  CHECK(component(1, 4) == 0);
  CHECK(seq_len(12) == 2);
  CHECK(seq_len(1) == 0);
  CHECK(seq_concat(12, 8) == 1500);
  CHECK(seq_concat(12, 8) == encode_seq({2, 1, 3}));
  CHECK(bar_code([](const Nat& i) { return i; }, 2) == 18);
  CHECK(tilde_code([](const Nat& i) { return i; }, 2) == 3);
  CHECK(seq_join(12, 8) == 24);
  CHECK(pair_code(2, 1) == 12);
  CHECK(decode_seq(12) == std::vector<Nat>{2, 1});
}

TEST_CASE("codec roundtrip and concatenation law on random sequences") {
  std::mt19937_64 rng(20260814);
  std::uniform_int_distribution<int> len_dist(0, 6);
  std::uniform_int_distribution<int> entry_dist(0, 20);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Nat> xs;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) xs.push_back(entry_dist(rng));
    Nat code = encode_seq(xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(component(code, i) == xs[i]);
    }
    // Length and concatenation are reliable when every entry is positive.
    std::vector<Nat> pos;
    for (const Nat& x : xs) pos.push_back(x + 1);
    std::vector<Nat> ys{3, 1};
    std::vector<Nat> both = pos;
    both.insert(both.end(), ys.begin(), ys.end());
    CHECK(seq_len(encode_seq(pos)) == pos.size());
    CHECK(seq_concat(encode_seq(pos), encode_seq(ys)) == encode_seq(both));
  }
}

TEST_CASE("shifted codes relate to unshifted codes") {
  FunHandle f = [](const Nat& i) { return i * i; };
  FunHandle f_plus_1 = [&](const Nat& i) { return f(i) + 1; };
  for (std::uint64_t x = 0; x <= 12; ++x) {
    CHECK(bar_code(f, x) == tilde_code(f_plus_1, x));
  }
}

TEST_CASE("course of values pins every component") {
  FunHandle next = [](const Nat& w) { return component(w, 0) + 1; };
  CHECK(course_of_values(5, next, 2) == 1822500000);
  CHECK(course_of_values(5, next, 2) == encode_seq({5, 6, 7}));
  FunHandle anything = [](const Nat& w) { return w + 13; };
  CHECK(course_of_values(9, anything, 0) == nat_pow(2, 9));
  FunHandle zero_fn = [](const Nat&) { return Nat(0); };
  CHECK(course_of_values(0, zero_fn, 3) == 1);

  // Each component of the code is the corresponding iterate.
  FunHandle step = [](const Nat& w) { return component(w, 0) * 2 + component(w, 1); };
  Nat v = course_of_values(3, step, 5);
  Nat beta = 3;
  CHECK(component(v, 0) == beta);
  for (std::uint64_t i = 0; i < 5; ++i) {
    beta = step(pair_code(beta, i));
    CHECK(component(v, i + 1) == beta);
  }
}

TEST_CASE("defining axioms hold at spot-check arguments") {
  CHECK(check_defining_axiom(Const::Maxf, {3, 7}, {}));
  CHECK(check_defining_axiom(Const::Monus, {3, 0}, {}));
  CHECK(check_defining_axiom(Const::Rm, {7, 3}, {}));
  CHECK(ev("rm(7, 3)") == 1);
  CHECK_THROWS_AS(check_defining_axiom(Const::Ccp, {3}, {}),
                  UnsupportedConstantError);
  CHECK_THROWS_AS(check_defining_axiom(Const::Add, {3}, {}), SortError);
}

TEST_CASE("defining axioms hold on a small grid for every constant") {
  std::vector<FunctorPtr> pool{
      parse_functor("lam w. expof(w, 0) + expof(w, 1)"),
      parse_functor("lam w. sg(expof(w, 1))"),
      parse_functor("lam w. 2"),
  };
  for (std::uint8_t ci = 0; ci < kConstCount; ++ci) {
    Const c = static_cast<Const>(ci);
    if (c == Const::Ccp) continue;
    const auto& sig = const_sig(c);
    for (std::uint64_t a = 0; a <= 6; ++a) {
      for (std::uint64_t b = 0; b <= (sig.num_args > 1 ? 6 : 0); ++b) {
        std::vector<Nat> nums;
        if (sig.num_args > 0) nums.push_back(a);
        if (sig.num_args > 1) nums.push_back(b);
        if (sig.fun_args == 0) {
          CAPTURE(std::string(sig.name));
          CHECK(check_defining_axiom(c, nums, {}));
        } else {
          for (const auto& f : pool) {
            CAPTURE(std::string(sig.name));
            CHECK(check_defining_axiom(c, nums, {f}));
          }
        }
      }
    }
  }
}

TEST_CASE("bounded least-search term equals direct least-search") {
  // cond is 0/1-valued with 0 meaning "holds"; the term form must agree
  // with a host-side scan for every bound.
  const char* conds[] = {
      "lam y. sg(monus(10, y * y))",
      "lam y. sg(absdiff(rm(y, 3), 1))",
      "lam y. 1",
      "lam y. 0",
      "lam y. sgbar(sg(monus(y, 4)))",
  };
  for (const char* cond_text : conds) {
    FunctorPtr cond = parse_functor(cond_text);
    FunHandle h = eval_functor(cond, {}, {});
    for (std::uint64_t bound = 0; bound <= 9; ++bound) {
      Nat direct = bound;
      for (std::uint64_t y = 0; y < bound; ++y) {
        if (h(y) == 0) {
          direct = y;
          break;
        }
      }
      TermPtr searched = bounded_search_term(numeral(bound), cond, {});
      CAPTURE(cond_text);
      CHECK(eval_term(searched, {}, {}) == direct);
    }
  }
}

TEST_CASE("bindings serialize to json and back") {
  Bindings b;
  b.env.bind(FunVar{"alpha", 0}, parse_functor("lam x. x + 1"));
  b.asg.bind(NumVar{"x", 0}, 3);
  b.asg.bind(NumVar{"y", 2}, nat_from_string("123456789012345678901234567890"));
  nlohmann::json j = to_json(b);
  Bindings back = bindings_from_json(j);
  CHECK(back.asg.lookup(NumVar{"x", 0}) == 3);
  CHECK(back.asg.lookup(NumVar{"y", 2}) ==
        nat_from_string("123456789012345678901234567890"));
  CHECK(equal(back.env.lookup(FunVar{"alpha", 0}), parse_functor("lam x. x + 1")));

  Bindings parsed = bindings_from_json(nlohmann::json::parse(
      R"({"funvars": {"alpha": "sg"}, "numvars": {"x": 3}})"));
  CHECK(parsed.asg.lookup(NumVar{"x", 0}) == 3);
  CHECK(eval_functor(parsed.env.lookup(FunVar{"alpha", 0}), {}, {})(5) == 1);
}

TEST_CASE("bindings reject malformed input") {
  using nlohmann::json;
  CHECK_THROWS_AS(bindings_from_json(json::parse(R"({"other": {}})")),
                  ParseError);
  CHECK_THROWS_AS(
      bindings_from_json(json::parse(R"({"numvars": {"x": -1}})")), ParseError);
  CHECK_THROWS_AS(
      bindings_from_json(json::parse(R"({"numvars": {"lam": 1}})")), ParseError);
  CHECK_THROWS_AS(
      bindings_from_json(json::parse(R"({"funvars": {"alpha": "lam x. y"}})")),
      UnboundVariableError);
  Environment env;
  CHECK_THROWS_AS(env.bind(FunVar{"alpha", 0}, parse_functor("lam x. x + z")),
                  UnboundVariableError);
}

TEST_CASE("runaway evaluations hit the loop budget") {
  EvalLimits tight;
  tight.loop_cap = 1000;
  CHECK_THROWS_AS(eval_term(parse_term("fact(2000)"), {}, {}, tight),
                  CapExceededError);
  CHECK_THROWS_AS(eval_term(parse_term("sum(2000, lam y. y)"), {}, {}, tight),
                  CapExceededError);
  CHECK_THROWS_AS(
      eval_term(parse_term("rec(0; lam w. w; 2000)"), {}, {}, tight),
      CapExceededError);
  // Nested budget spending crosses functor-handle boundaries.
  CHECK_THROWS_AS(
      eval_term(parse_term("sum(100, lam y. fact(y))"), {}, {}, tight),
      CapExceededError);
  // The same shapes fit comfortably in the default budget.
  CHECK(eval_term(parse_term("sum(2000, lam y. y)"), {}, {}) == 1999000);
  // Values too large for any host loop are rejected rather than attempted.
  Assignment asg;
  asg.bind(NumVar{"n", 0}, nat_from_string("123456789123456789123456789"));
  CHECK_THROWS_AS(eval_term(parse_term("fact(n)"), {}, asg, tight),
                  CapExceededError);
}
