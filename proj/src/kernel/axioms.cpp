#include "tsa/kernel/axioms.h"

#include <map>
#include <optional>

#include "tsa/errors.h"
#include "tsa/syntax/parse.h"

namespace tsa {

namespace {

// Defining equations as object-language text, parsed once. Number
// parameters are bound positionally; the function parameter (if any) is
// bound to "alpha". Recursive constants are checked at the given argument:
// the base equation plus the step equation joining the value at n+1 to the
// value at n.
struct AxiomSpec {
  std::vector<NumVar> params;
  std::optional<FunVar> fun_param;
  std::vector<std::pair<TermPtr, TermPtr>> equations;
};

const std::map<Const, AxiomSpec>& axiom_table() {
  static const std::map<Const, AxiomSpec> table = [] {
    std::map<Const, AxiomSpec> t;
    auto add = [&t](Const c, std::vector<std::string> params, bool has_fun,
                    std::vector<std::pair<std::string, std::string>> eqs) {
      AxiomSpec spec;
      for (const auto& p : params) spec.params.push_back(NumVar{p, 0});
      if (has_fun) spec.fun_param = FunVar{"alpha", 0};
      for (const auto& [l, r] : eqs) {
        spec.equations.emplace_back(parse_term(l), parse_term(r));
      }
      t.emplace(c, std::move(spec));
    };
    add(Const::Zero, {}, false, {});
    add(Const::Add, {"a", "b"}, false,
        {{"a + 0", "a"}, {"a + b'", "(a + b)'"}});
    add(Const::Mul, {"a", "b"}, false,
        {{"a * 0", "0"}, {"a * b'", "a * b + a"}});
    add(Const::Exp, {"a", "b"}, false,
        {{"exp(a, 0)", "1"}, {"exp(a, b')", "exp(a, b) * a"}});
    add(Const::Fact, {"a"}, false,
        {{"fact(0)", "1"}, {"fact(a')", "fact(a) * a'"}});
    add(Const::Pd, {"a"}, false, {{"pd(0)", "0"}, {"pd(a')", "a"}});
    add(Const::Monus, {"a", "b"}, false,
        {{"monus(a, 0)", "a"}, {"monus(a, b')", "pd(monus(a, b))"}});
    add(Const::Minf, {"a", "b"}, false,
        {{"minf(a, b)", "monus(b, monus(b, a))"}});
    add(Const::Maxf, {"a", "b"}, false,
        {{"maxf(a, b)", "monus(a, b) + b"}});
    add(Const::Sgbar, {"a"}, false, {{"sgbar(0)", "1"}, {"sgbar(a')", "0"}});
    add(Const::Sg, {"a"}, false, {{"sg(0)", "0"}, {"sg(a')", "1"}});
    add(Const::Absdiff, {"a", "b"}, false,
        {{"absdiff(a, b)", "monus(a, b) + monus(b, a)"}});
    add(Const::Rm, {"a", "b"}, false,
        {{"rm(0, b)", "0"},
         {"rm(a', b)", "rm(a, b)' * sg(absdiff(b, rm(a, b)'))"}});
    add(Const::Quot, {"a", "b"}, false,
        {{"quot(0, b)", "0"},
         {"quot(a', b)", "quot(a, b) + sgbar(absdiff(b, rm(a, b)'))"}});
    add(Const::Sum, {"z"}, true,
        {{"sum(0, alpha)", "0"}, {"sum(z', alpha)", "sum(z, alpha) + alpha(z)"}});
    add(Const::Prod, {"z"}, true,
        {{"prod(0, alpha)", "1"},
         {"prod(z', alpha)", "prod(z, alpha) * alpha(z)"}});
    add(Const::Minle, {"z"}, true,
        {{"minle(0, alpha)", "alpha(0)"},
         {"minle(z', alpha)", "minf(minle(z, alpha), alpha(z'))"}});
    add(Const::Maxle, {"z"}, true,
        {{"maxle(0, alpha)", "alpha(0)"},
         {"maxle(z', alpha)", "maxf(maxle(z, alpha), alpha(z'))"}});
    add(Const::Prime, {"i"}, false, {{"prime(0)", "2"}});
    add(Const::Expof, {"a", "i"}, false, {});
    add(Const::Lh, {"a"}, false, {{"lh(a)", "sum(a, lam i. sg(expof(a, i)))"}});
    add(Const::Concat, {"a", "b"}, false,
        {{"concat(a, b)",
          "a * prod(lh(b), lam i. exp(prime(lh(a) + i), expof(b, i)))"}});
    add(Const::Bar, {"x"}, true,
        {{"bar(0, alpha)", "1"},
         {"bar(x', alpha)", "bar(x, alpha) * exp(prime(x), alpha(x)')"}});
    add(Const::Tilde, {"x"}, true,
        {{"tilde(0, alpha)", "1"},
         {"tilde(x', alpha)", "tilde(x, alpha) * exp(prime(x), alpha(x))"}});
    add(Const::Join, {"a", "b"}, false,
        {{"join(a, b)",
          "prod(maxf(a, b), lam i. exp(prime(i), maxf(expof(a, i), "
          "expof(b, i))))"}});
    return t;
  }();
  return table;
}

Nat eval_text_once(const char* text, const Environment& env,
                   const Assignment& asg, const EvalLimits& limits) {
  // Tiny helper for the custom checks; parses per call site's static term.
  static std::map<std::string, TermPtr> cache;
  auto it = cache.find(text);
  if (it == cache.end()) it = cache.emplace(text, parse_term(text)).first;
  return eval_term(it->second, env, asg, limits);
}

// Successor laws: a' is never 0, and successor is injective and a
// congruence. The two-sided laws are checked against a sweep of partner
// values around the argument.
bool check_succ_laws(const Nat& a, const EvalLimits& limits) {
  Environment env;
  Assignment asg;
  asg.bind(NumVar{"a", 0}, a);
  Nat succ_a = eval_text_once("a'", env, asg, limits);
  if (succ_a == 0) return false;
  std::vector<Nat> partners{0, 1, 2, a, a + 1, a + 2};
  for (const Nat& b : partners) {
    Assignment asg_b;
    asg_b.bind(NumVar{"a", 0}, b);
    Nat succ_b = eval_text_once("a'", env, asg_b, limits);
    if ((succ_a == succ_b) != (a == b)) return false;
  }
  return true;
}

// Step law of the prime enumerator: the next prime is the least b below
// p_i! + 2 that exceeds p_i and has exactly two divisors. The divisor
// count is itself evaluated in the object language.
bool check_prime_step(const Nat& i, const EvalLimits& limits) {
  Environment env;
  Assignment asg;
  asg.bind(NumVar{"i", 0}, i);
  Nat bound = eval_text_once("fact(prime(i)) + 2", env, asg, limits);
  Nat found = bound;
  for (Nat b = 0; b < bound; ++b) {
    Assignment asg_b = asg;
    asg_b.bind(NumVar{"b", 0}, b);
    // First conjunct p_i < b is cheap and prunes the divisor scan.
    if (eval_text_once("monus(prime(i)', b)", env, asg_b, limits) != 0) {
      continue;
    }
    if (eval_text_once("sum(b', lam d. sgbar(sg(rm(b, d))))", env, asg_b,
                       limits) == 2) {
      found = b;
      break;
    }
  }
  return found < bound &&
         found == eval_text_once("prime(i')", env, asg, limits);
}

// Component extraction is defined as a bounded least-search: the least
// x < a with p_i^x dividing a and p_i^{x+1} not dividing a, and the bound
// itself when the search is empty.
bool check_expof_mu(const Nat& a, const Nat& i, const EvalLimits& limits) {
  Environment env;
  Assignment asg;
  asg.bind(NumVar{"a", 0}, a);
  asg.bind(NumVar{"i", 0}, i);
  Nat found = a;
  for (Nat x = 0; x < a; ++x) {
    Assignment asg_x = asg;
    asg_x.bind(NumVar{"x", 0}, x);
    bool divides =
        eval_text_once("sg(rm(a, exp(prime(i), x)))", env, asg_x, limits) == 0;
    bool next_divides =
        eval_text_once("sg(rm(a, exp(prime(i), x')))", env, asg_x, limits) ==
        0;
    if (divides && !next_divides) {
      found = x;
      break;
    }
  }
  return found == eval_text_once("expof(a, i)", env, asg, limits);
}

}  // namespace

bool check_defining_axiom(Const c, const std::vector<Nat>& nums,
                          const std::vector<FunctorPtr>& funs,
                          const EvalLimits& limits) {
  if (c == Const::Ccp) {
    throw UnsupportedConstantError(
        "ccp is signature-only and has no defining equations to check");
  }
  const auto& sig = const_sig(c);
  if (static_cast<int>(nums.size()) != sig.num_args ||
      static_cast<int>(funs.size()) != sig.fun_args) {
    throw SortError("wrong argument count for constant " +
                    std::string(sig.name));
  }
  if (c == Const::Succ) return check_succ_laws(nums[0], limits);

  const AxiomSpec& spec = axiom_table().at(c);
  Environment env;
  Assignment asg;
  for (std::size_t k = 0; k < spec.params.size(); ++k) {
    asg.bind(spec.params[k], nums[k]);
  }
  if (spec.fun_param) env.bind(*spec.fun_param, funs[0]);

  for (const auto& [lhs, rhs] : spec.equations) {
    if (eval_term(lhs, env, asg, limits) != eval_term(rhs, env, asg, limits)) {
      return false;
    }
  }
  if (c == Const::Prime) return check_prime_step(nums[0], limits);
  if (c == Const::Expof) return check_expof_mu(nums[0], nums[1], limits);
  return true;
}

}  // namespace tsa
