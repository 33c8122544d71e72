#include "tsa/checks/suites.h"

#include <algorithm>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "tsa/checks/gen.h"
#include "tsa/decidable/decidable.h"
#include "tsa/errors.h"
#include "tsa/kernel/axioms.h"
#include "tsa/kernel/codec.h"
#include "tsa/kernel/eval.h"
#include "tsa/schemas/schemas.h"
#include "tsa/schemas/systems.h"
#include "tsa/syntax/builders.h"
#include "tsa/syntax/ops.h"
#include "tsa/syntax/parse.h"
#include "tsa/syntax/print.h"
#include "tsa/translations/translate.h"

namespace tsa {
namespace {

// Collects pass/fail counts and freezes the first failing description.
class Recorder {
 public:
  explicit Recorder(std::string suite) { result_.suite = std::move(suite); }

  void begin_case() { ++result_.cases; }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      if (result_.first_counterexample.empty()) {
        result_.first_counterexample = describe();
      }
    }
  }

  void fail(const std::string& text) {
    expect(false, [&] { return text; });
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

// Runs one case body, charging any escaped exception as a failure so a
// stray throw cannot abort the whole suite.
template <typename Body>
void guarded_case(Recorder& rec, long long case_index, Body&& body) {
  rec.begin_case();
  try {
    body();
  } catch (const std::exception& e) {
    rec.fail("case " + std::to_string(case_index) +
             " raised: " + std::string(e.what()));
  }
}

std::string asg_text(const Assignment& asg) {
  std::string out = "[";
  bool first = true;
  for (const auto& [v, value] : asg.entries()) {
    if (!first) out += ", ";
    first = false;
    out += display_name(v) + " := " + nat_to_string(value);
  }
  return out + "]";
}

// Odometer step over tuples with entries 0..max; false once wrapped around.
bool advance(std::vector<int>& digits, int max) {
  for (auto& d : digits) {
    if (++d <= max) return true;
    d = 0;
  }
  return false;
}

// Every assignment of the listed variables to values 0..max, in odometer
// order (first variable cycles fastest).
template <typename Fn>
void for_each_assignment(const std::vector<NumVar>& vars, int max, Fn&& fn) {
  std::vector<int> values(vars.size(), 0);
  do {
    Assignment asg;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      asg.bind(vars[i], Nat(values[i]));
    }
    fn(asg);
  } while (advance(values, max));
}

bool subset_of(const VarSets& small, const VarSets& big) {
  return std::includes(big.nums.begin(), big.nums.end(), small.nums.begin(),
                       small.nums.end()) &&
         std::includes(big.funs.begin(), big.funs.end(), small.funs.begin(),
                       small.funs.end());
}

std::string describe_probe(Const c, const std::vector<Nat>& nums,
                           const std::vector<FunctorPtr>& funs) {
  std::string out(const_sig(c).name);
  out += "(";
  bool first = true;
  for (const auto& n : nums) {
    if (!first) out += ", ";
    first = false;
    out += nat_to_string(n);
  }
  for (const auto& f : funs) {
    if (!first) out += "; ";
    first = false;
    out += to_text(f);
  }
  return out + ")";
}

const std::vector<Const>& evaluable_constants() {
  static const std::vector<Const> table = [] {
    std::vector<Const> cs;
    for (int i = 0; i < kConstCount; ++i) {
      Const c = static_cast<Const>(i);
      if (c != Const::Ccp) cs.push_back(c);
    }
    return cs;
  }();
  return table;
}

void probe_defining_axiom(Recorder& rec, Const c, const std::vector<Nat>& nums,
                          const std::vector<FunctorPtr>& funs,
                          const EvalLimits& limits) {
  rec.begin_case();
  try {
    bool ok = check_defining_axiom(c, nums, funs, limits);
    rec.expect(ok, [&] { return describe_probe(c, nums, funs); });
  } catch (const std::exception& e) {
    rec.fail(describe_probe(c, nums, funs) +
             " raised: " + std::string(e.what()));
  }
}

}  // namespace

SuiteResult check_defining_axioms_sweep(int max_arg, const EvalLimits& limits) {
  Recorder rec("defining-axioms");
  const auto& pool = Gen::functor_pool();
  for (Const c : evaluable_constants()) {
    const ConstSig& sig = const_sig(c);
    std::vector<int> nums(sig.num_args, 0);
    do {
      std::vector<int> fidx(sig.fun_args, 0);
      do {
        std::vector<Nat> nat_args(nums.begin(), nums.end());
        std::vector<FunctorPtr> funs;
        for (int k : fidx) funs.push_back(pool[static_cast<std::size_t>(k)]);
        probe_defining_axiom(rec, c, nat_args, funs, limits);
      } while (advance(fidx, static_cast<int>(pool.size()) - 1));
    } while (advance(nums, max_arg));
  }
  return rec.take();
}

SuiteResult check_defining_axioms(int cases, std::uint64_t seed,
                                  const EvalLimits& limits) {
  Recorder rec("defining-axioms");
  Gen gen(seed);
  const auto& table = evaluable_constants();
  for (int i = 0; i < cases; ++i) {
    Const c = table[gen.pick(table.size())];
    const ConstSig& sig = const_sig(c);
    std::vector<Nat> nums;
    for (int k = 0; k < sig.num_args; ++k) nums.emplace_back(gen.pick(41));
    std::vector<FunctorPtr> funs;
    for (int k = 0; k < sig.fun_args; ++k) funs.push_back(gen.pool_functor());
    probe_defining_axiom(rec, c, nums, funs, limits);
  }
  return rec.take();
}

SuiteResult check_codec(int cases, std::uint64_t seed,
                        const EvalLimits& limits) {
  Recorder rec("codec");
  Gen gen(seed);

  auto vec_text = [](const std::vector<Nat>& xs) {
    std::string out = "<";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ",";
      out += nat_to_string(xs[i]);
    }
    return out + ">";
  };

  for (int i = 0; i < cases; ++i) {
    guarded_case(rec, i, [&] {
      // Component/encode roundtrip on an arbitrary sequence (zeros allowed).
      std::vector<Nat> xs;
      std::size_t len = gen.pick(7);
      for (std::size_t k = 0; k < len; ++k) xs.emplace_back(gen.pick(21));
      Nat code = encode_seq(xs);
      for (std::size_t k = 0; k < len; ++k) {
        rec.expect(component(code, Nat(k)) == xs[k], [&] {
          return "component " + std::to_string(k) + " of " + vec_text(xs) +
                 " code " + nat_to_string(code);
        });
      }
      rec.expect(component(code, Nat(len)) == 0, [&] {
        return "component past the end of " + vec_text(xs);
      });

      // Positive-entry sequences decode exactly and concatenate by the law.
      auto positive = [&](std::size_t n) {
        std::vector<Nat> ys;
        for (std::size_t k = 0; k < n; ++k) ys.emplace_back(gen.pick(20) + 1);
        return ys;
      };
      std::vector<Nat> ys = positive(gen.pick(7));
      std::vector<Nat> zs = positive(gen.pick(7));
      Nat ycode = encode_seq(ys);
      Nat zcode = encode_seq(zs);
      rec.expect(decode_seq(ycode) == ys,
                 [&] { return "decode of " + vec_text(ys); });
      rec.expect(seq_len(ycode) == Nat(ys.size()),
                 [&] { return "length of " + vec_text(ys); });
      std::vector<Nat> joined = ys;
      joined.insert(joined.end(), zs.begin(), zs.end());
      Nat cat = seq_concat(ycode, zcode);
      rec.expect(encode_seq(joined) == cat, [&] {
        return "concatenation of " + vec_text(ys) + " and " + vec_text(zs);
      });

      // The object-language coding constants agree with the host codec.
      rec.expect(const_value(Const::Concat, {ycode, zcode}, {}, limits) == cat,
                 [&] {
                   return "concat constant at " + nat_to_string(ycode) +
                          ", " + nat_to_string(zcode);
                 });
      rec.expect(const_value(Const::Lh, {code}, {}, limits) == seq_len(code),
                 [&] { return "length constant at " + nat_to_string(code); });
      Nat ci(gen.pick(8));
      rec.expect(const_value(Const::Expof, {code, ci}, {}, limits) ==
                     component(code, ci),
                 [&] {
                   return "exponent constant at " + nat_to_string(code) +
                          ", " + nat_to_string(ci);
                 });

      // Pair codes and componentwise joins.
      Nat a(gen.pick(30)), b(gen.pick(30));
      Nat pc = pair_code(a, b);
      rec.expect(component(pc, Nat(0)) == a && component(pc, Nat(1)) == b,
                 [&] {
                   return "pair code of " + nat_to_string(a) + ", " +
                          nat_to_string(b);
                 });
      Nat jn = seq_join(ycode, zcode);
      for (std::size_t k = 0; k < 8; ++k) {
        Nat want = std::max(component(ycode, Nat(k)), component(zcode, Nat(k)));
        rec.expect(component(jn, Nat(k)) == want, [&] {
          return "join component " + std::to_string(k) + " of " +
                 vec_text(ys) + " and " + vec_text(zs);
        });
      }
    });
  }

  // Initial-segment codes of every pooled functor, checked component by
  // component and against the object-language constants.
  const auto& pool = Gen::functor_pool();
  for (std::size_t p = 0; p < pool.size(); ++p) {
    FunHandle h = eval_functor(pool[p], Environment{}, Assignment{}, limits);
    for (int x = 0; x <= 12; ++x) {
      guarded_case(rec, static_cast<long long>(1000 + p * 13 + x), [&] {
        Nat nx(x);
        Nat bar = bar_code(h, nx);
        Nat til = tilde_code(h, nx);
        auto where = [&](const char* what) {
          return std::string(what) + " for functor " + to_text(pool[p]) +
                 " at length " + std::to_string(x);
        };
        rec.expect(seq_len(bar) == nx, [&] { return where("offset length"); });
        for (int k = 0; k < x; ++k) {
          Nat hk = h(Nat(k));
          rec.expect(component(bar, Nat(k)) == hk + 1,
                     [&] { return where("offset component"); });
          rec.expect(component(til, Nat(k)) == hk,
                     [&] { return where("raw component"); });
        }
        Nat ones = encode_seq(std::vector<Nat>(x, Nat(1)));
        rec.expect(bar == til * ones,
                   [&] { return where("offset/raw relation"); });
        rec.expect(const_value(Const::Bar, {nx}, {h}, limits) == bar,
                   [&] { return where("offset constant"); });
        rec.expect(const_value(Const::Tilde, {nx}, {h}, limits) == til,
                   [&] { return where("raw constant"); });
      });
    }
  }
  return rec.take();
}

SuiteResult check_char_term(int cases, std::uint64_t seed,
                            const EvalLimits& limits) {
  Recorder rec("char-term");
  Gen gen(seed);
  const std::vector<NumVar> names = {NumVar{"x", 0}, NumVar{"y", 0}};
  Environment env;
  for (int i = 0; i < cases; ++i) {
    guarded_case(rec, i, [&] {
      std::vector<NumVar> scope(
          names.begin(),
          names.begin() + static_cast<std::ptrdiff_t>(
                              gen.pick(names.size() + 1)));
      FormulaPtr f =
          gen.decidable_formula(1 + static_cast<int>(gen.pick(3)), scope);
      CharTerm ct = char_term(f);
      rec.expect(subset_of(free_vars(ct.q), free_vars(f)), [&] {
        return "variables of the tracking term escape " + to_text(f);
      });
      std::vector<NumVar> free = VarOrdering::of(free_vars(f).nums).vars();
      for_each_assignment(free, 5, [&](const Assignment& asg) {
        Nat q = eval_term(ct.q, env, asg, limits);
        rec.expect(q <= 1, [&] {
          return "tracking term exceeds 1 for " + to_text(f) + " at " +
                 asg_text(asg);
        });
        bool holds = truth(f, env, asg, limits);
        rec.expect((q == 0) == holds, [&] {
          return "tracking term disagrees with " + to_text(f) + " at " +
                 asg_text(asg);
        });
      });
    });
  }
  return rec.take();
}

SuiteResult check_witnesses(int cases, std::uint64_t seed,
                            const EvalLimits& limits) {
  Recorder rec("witnesses");
  Gen gen(seed);
  Environment env;
  const NumVar y{"y", 0}, m{"m", 0}, n{"n", 0};
  const Nat cap(24);
  for (int i = 0; i < cases; ++i) {
    guarded_case(rec, i, [&] {
      // Least witness, confirmed minimal (or absent) by rescanning.
      FormulaPtr f =
          gen.decidable_formula(1 + static_cast<int>(gen.pick(2)), {y, m});
      Assignment asg;
      asg.bind(m, Nat(gen.pick(6)));
      auto holds_at = [&](const Nat& value) {
        Assignment probe = asg;
        probe.bind(y, value);
        return truth(f, env, probe, limits);
      };
      std::optional<Nat> w = least_witness(f, y, env, asg, cap, limits);
      if (w.has_value()) {
        rec.expect(*w <= cap, [&] {
          return "witness above the ceiling for " + to_text(f) + " at " +
                 asg_text(asg);
        });
        rec.expect(holds_at(*w), [&] {
          return "reported witness fails " + to_text(f) + " at " +
                 asg_text(asg);
        });
        for (Nat k = 0; k < *w; ++k) {
          rec.expect(!holds_at(k), [&] {
            return "value " + nat_to_string(k) + " undercuts the witness of " +
                   to_text(f) + " at " + asg_text(asg);
          });
        }
      } else {
        for (Nat k = 0; k <= cap; ++k) {
          rec.expect(!holds_at(k), [&] {
            return "missed witness " + nat_to_string(k) + " for " +
                   to_text(f) + " at " + asg_text(asg);
          });
        }
      }

      // Choice table over a domain, with a planted fallback witness so
      // every point has one; both clauses rechecked from scratch.
      FormulaPtr base =
          gen.decidable_formula(1 + static_cast<int>(gen.pick(2)), {m, n});
      Nat fallback(gen.pick(12));
      FormulaPtr guarded = mk_or(
          base, mk_eq(mk_var(n), numeral(static_cast<std::uint64_t>(
                                     nat_to_index(fallback)))));
      const Nat domain(6);
      std::vector<Nat> table = choice_witness(guarded, m, n, env, Assignment{},
                                              domain, cap, limits);
      rec.expect(table.size() == 6, [&] {
        return "table size for " + to_text(guarded);
      });
      for (std::size_t mm = 0; mm < table.size(); ++mm) {
        auto pair_holds = [&](const Nat& nn) {
          Assignment probe;
          probe.bind(m, Nat(mm));
          probe.bind(n, nn);
          return truth(guarded, env, probe, limits);
        };
        rec.expect(pair_holds(table[mm]), [&] {
          return "table entry " + std::to_string(mm) + " fails " +
                 to_text(guarded);
        });
        for (Nat nn = 0; nn < table[mm]; ++nn) {
          rec.expect(!pair_holds(nn), [&] {
            return "table entry " + std::to_string(mm) +
                   " is not minimal for " + to_text(guarded);
          });
        }
      }
    });
  }
  return rec.take();
}

namespace {

// A formula carrying recursion nodes in assorted positions: prime roots,
// connectives, quantifiers of both sorts, and one nested-recursion shape.
FormulaPtr formula_with_rec(Gen& gen, const std::vector<NumVar>& scope) {
  auto prime = [&](const std::vector<NumVar>& sc) {
    TermPtr a = gen.term_with_rec(static_cast<int>(gen.pick(3)), sc);
    TermPtr b = gen.chance_in(1, 4)
                    ? gen.term_with_rec(static_cast<int>(gen.pick(2)), sc)
                    : gen.small_term(1 + static_cast<int>(gen.pick(2)), sc);
    return gen.chance_in(1, 2) ? mk_eq(a, b) : mk_eq(b, a);
  };
  switch (gen.pick(9)) {
    case 0: return prime(scope);
    case 1: return mk_not(prime(scope));
    case 2: return mk_and(prime(scope), gen.qf_formula(1, scope));
    case 3: return mk_or(gen.qf_formula(1, scope), prime(scope));
    case 4: return mk_implies(prime(scope), prime(scope));
    case 5:
    case 6: {
      std::set<NumVar> used(scope.begin(), scope.end());
      NumVar v = fresh_num_var("v", used);
      std::vector<NumVar> inner = scope;
      inner.push_back(v);
      FormulaPtr body = prime(inner);
      return gen.chance_in(1, 2) ? mk_forall(v, body) : mk_exists(v, body);
    }
    case 7: {
      TermPtr nested = mk_rec(gen.term_with_rec(0, scope), gen.pool_functor(),
                              gen.small_term(1, scope));
      return mk_eq(nested, gen.small_term(1, scope));
    }
    default:
      return mk_forall_fun(FunVar{"gamma", 0}, prime(scope));
  }
}

// Mirror for abstraction nodes.
FormulaPtr formula_with_lambda(Gen& gen, const std::vector<NumVar>& scope) {
  auto prime = [&](const std::vector<NumVar>& sc) {
    TermPtr a = gen.term_with_lambda(static_cast<int>(gen.pick(3)), sc);
    TermPtr b = gen.chance_in(1, 4)
                    ? gen.term_with_lambda(static_cast<int>(gen.pick(2)), sc)
                    : gen.small_term(1 + static_cast<int>(gen.pick(2)), sc);
    return gen.chance_in(1, 2) ? mk_eq(a, b) : mk_eq(b, a);
  };
  switch (gen.pick(8)) {
    case 0: return prime(scope);
    case 1: return mk_not(prime(scope));
    case 2: return mk_and(prime(scope), gen.qf_formula(1, scope));
    case 3: return mk_or(gen.qf_formula(1, scope), prime(scope));
    case 4: return mk_implies(prime(scope), prime(scope));
    case 5:
    case 6: {
      std::set<NumVar> used(scope.begin(), scope.end());
      NumVar v = fresh_num_var("v", used);
      std::vector<NumVar> inner = scope;
      inner.push_back(v);
      FormulaPtr body = prime(inner);
      return gen.chance_in(1, 2) ? mk_forall(v, body) : mk_exists(v, body);
    }
    default:
      return mk_forall_fun(FunVar{"gamma", 0}, prime(scope));
  }
}

std::vector<NumVar> drawn_scope(Gen& gen) {
  static const std::vector<NumVar> names = {NumVar{"x", 0}, NumVar{"y", 0}};
  return {names.begin(),
          names.begin() +
              static_cast<std::ptrdiff_t>(gen.pick(names.size() + 1))};
}

// Shared syntactic battery for both eliminations.
struct Elimination {
  const char* label;
  FormulaPtr (*translate)(const FormulaPtr&);
  bool (*contains)(const Expr&);
  FormulaPtr (*draw)(Gen&, const std::vector<NumVar>&);
  TermPtr (Gen::*draw_term)(int, const std::vector<NumVar>&);
};

void syntactic_block(Recorder& rec, Gen& gen, const Elimination& elim,
                     int cases) {
  for (int i = 0; i < cases; ++i) {
    guarded_case(rec, i, [&] {
      std::vector<NumVar> scope = drawn_scope(gen);
      FormulaPtr f = elim.draw(gen, scope);
      FormulaPtr out = elim.translate(f);
      rec.expect(!elim.contains(Expr(out)), [&] {
        return std::string(elim.label) + " left a node behind in " +
               to_text(out);
      });
      rec.expect(free_vars(out) == free_vars(f), [&] {
        return std::string(elim.label) + " disturbed the free variables of " +
               to_text(f);
      });
      rec.expect(equal(elim.translate(out), out), [&] {
        return std::string(elim.label) + " is not idempotent on " + to_text(f);
      });
      FormulaPtr plain = gen.decidable_formula(2, scope);
      rec.expect(equal(elim.translate(plain), plain), [&] {
        return std::string(elim.label) + " moved the clean formula " +
               to_text(plain);
      });

      // Commutation with one drawn connective or quantifier, node for node.
      TermPtr ta = (gen.*elim.draw_term)(static_cast<int>(gen.pick(2)), scope);
      TermPtr tb = (gen.*elim.draw_term)(static_cast<int>(gen.pick(2)), scope);
      FormulaPtr a = mk_eq(ta, gen.small_term(1, scope));
      FormulaPtr b = mk_eq(gen.small_term(1, scope), tb);
      FormulaPtr whole, rebuilt;
      switch (gen.pick(6)) {
        case 0:
          whole = mk_and(a, b);
          rebuilt = mk_and(elim.translate(a), elim.translate(b));
          break;
        case 1:
          whole = mk_or(a, b);
          rebuilt = mk_or(elim.translate(a), elim.translate(b));
          break;
        case 2:
          whole = mk_implies(a, b);
          rebuilt = mk_implies(elim.translate(a), elim.translate(b));
          break;
        case 3:
          whole = mk_not(a);
          rebuilt = mk_not(elim.translate(a));
          break;
        case 4: {
          std::set<NumVar> used(scope.begin(), scope.end());
          NumVar v = fresh_num_var("v", used);
          whole = mk_forall(v, a);
          rebuilt = mk_forall(v, elim.translate(a));
          break;
        }
        default:
          whole = mk_exists_fun(FunVar{"delta", 0}, a);
          rebuilt = mk_exists_fun(FunVar{"delta", 0}, elim.translate(a));
          break;
      }
      rec.expect(equal(elim.translate(whole), rebuilt), [&] {
        return std::string(elim.label) + " does not commute on " +
               to_text(whole);
      });
    });
  }
}

// A prime-rooted decidable shape around one translatable core, suitable for
// the semantic witness checks.
FormulaPtr dressed_prime(Gen& gen, const std::vector<NumVar>& scope,
                         TermPtr core) {
  FormulaPtr prime = gen.chance_in(1, 2)
                         ? mk_eq(core, gen.small_term(1, scope))
                         : mk_eq(gen.small_term(1, scope), core);
  switch (gen.pick(4)) {
    case 0: return prime;
    case 1: return mk_not(prime);
    case 2: return mk_and(prime, gen.qf_formula(1, scope));
    default: return prime;
  }
}

}  // namespace

SuiteResult check_rec_translate(int syntactic_cases, int semantic_cases,
                                std::uint64_t seed, std::uint64_t w_bound,
                                const EvalLimits& limits) {
  Recorder rec("rec-translate");
  Gen gen(seed);
  Elimination elim{"recursion elimination", rec_eliminate, contains_rec,
                   formula_with_rec, &Gen::term_with_rec};
  syntactic_block(rec, gen, elim, syntactic_cases);

  Environment env;
  for (int i = 0; i < semantic_cases; ++i) {
    guarded_case(rec, syntactic_cases + i, [&] {
      std::vector<NumVar> scope = drawn_scope(gen);
      FormulaPtr f;
      if (gen.chance_in(1, 5)) {
        // One recursion under a guarded bounded quantifier.
        std::set<NumVar> used(scope.begin(), scope.end());
        NumVar v = fresh_num_var("v", used);
        std::vector<NumVar> inner = scope;
        inner.push_back(v);
        TermPtr bound = gen.small_term(0, scope);
        FormulaPtr prime =
            mk_eq(gen.term_with_rec(static_cast<int>(gen.pick(2)), inner),
                  gen.small_term(1, inner));
        FormulaPtr guard = gen.chance_in(1, 2)
                               ? lt_formula(mk_var(v), bound)
                               : le_formula(mk_var(v), bound);
        f = gen.chance_in(1, 2) ? mk_forall(v, mk_implies(guard, prime))
                                : mk_exists(v, mk_and(guard, prime));
      } else {
        f = dressed_prime(
            gen, scope,
            gen.term_with_rec(static_cast<int>(gen.pick(2)), scope));
      }
      std::vector<NumVar> free = VarOrdering::of(free_vars(f).nums).vars();
      for_each_assignment(free, 4, [&](const Assignment& asg) {
        rec.expect(check_rec_equiv(f, env, asg, w_bound, limits), [&] {
          return "witness check failed for " + to_text(f) + " at " +
                 asg_text(asg);
        });
      });
    });
  }
  return rec.take();
}

SuiteResult check_lambda_translate(int syntactic_cases, int semantic_cases,
                                   std::uint64_t seed,
                                   const EvalLimits& limits) {
  Recorder rec("lambda-translate");
  Gen gen(seed);
  Elimination elim{"abstraction elimination", lambda_eliminate,
                   contains_lambda, formula_with_lambda,
                   &Gen::term_with_lambda};
  syntactic_block(rec, gen, elim, syntactic_cases);

  Environment env;
  for (int i = 0; i < semantic_cases; ++i) {
    guarded_case(rec, syntactic_cases + i, [&] {
      std::vector<NumVar> scope = drawn_scope(gen);
      TermPtr left = gen.term_with_lambda(static_cast<int>(gen.pick(2)), scope);
      FormulaPtr f;
      if (gen.chance_in(1, 3)) {
        // Two abstractions, one on each side of the equation.
        TermPtr right =
            gen.term_with_lambda(static_cast<int>(gen.pick(2)), scope);
        f = mk_eq(left, right);
      } else {
        f = dressed_prime(gen, scope, left);
      }
      std::vector<NumVar> free = VarOrdering::of(free_vars(f).nums).vars();
      for_each_assignment(free, 4, [&](const Assignment& asg) {
        rec.expect(check_lambda_equiv(f, env, asg, limits), [&] {
          return "witness check failed for " + to_text(f) + " at " +
                 asg_text(asg);
        });
      });
    });
  }
  return rec.take();
}

namespace {

PieceMap valid_pieces(SchemaId id, Gen& gen, int round) {
  const NumVar x{"x", 0}, y{"y", 0}, m{"m", 0}, n{"n", 0}, w{"w", 0},
      h{"h", 0};
  const FunVar alpha{"alpha", 0}, beta{"beta", 0}, gamma{"gamma", 0};
  switch (id) {
    case SchemaId::Ind:
      return {{"matrix", gen.decidable_formula(2, {x, y})}, {"var", x}};
    case SchemaId::LambdaConv:
      return {{"var", x},
              {"body", gen.small_term(2, {x, y})},
              {"arg", gen.small_term(1, {y})}};
    case SchemaId::Rec:
    case SchemaId::RecAxiom:
      return {{"base", gen.small_term(1, {x})},
              {"step", gen.pool_functor()},
              {"count", gen.small_term(1, {y})}};
    case SchemaId::Ac00Bang:
      return {{"matrix", gen.decidable_formula(1, {x, y})},
              {"x", x},
              {"y", y},
              {"alpha", alpha}};
    case SchemaId::QfAc00:
      return {{"matrix", gen.qf_formula(2, {x, y})},
              {"x", x},
              {"y", y},
              {"alpha", alpha}};
    case SchemaId::QftAc00:
      return {{"template", gen.small_term(2, {w})},
              {"hole", w},
              {"x", x},
              {"y", y},
              {"alpha", alpha}};
    case SchemaId::Cfd:
      return {{"matrix", gen.decidable_formula(1, {x})},
              {"var", x},
              {"beta", beta}};
    case SchemaId::ReflRepl:
      switch (round % 4) {
        case 0: return {{"var", x}};
        case 1: return {{"fun", alpha}};
        case 2:
          return {{"x", x},
                  {"y", y},
                  {"matrix", gen.decidable_formula(1, {x, y, h})},
                  {"hole", h}};
        default:
          return {{"u", gamma},
                  {"v", beta},
                  {"matrix", parse_formula("forall x. alpha(x) = beta(x'')")},
                  {"hole", alpha}};
      }
    case SchemaId::FunVarEq:
      return {{"x", x}, {"y", y}, {"alpha", alpha}};
    case SchemaId::UnboundedSearch:
      return {{"alpha", alpha},
              {"m", m},
              {"n", n},
              {"gamma", gamma},
              {"lt", std::string(round % 2 == 0 ? "plus" : "monus")}};
    case SchemaId::MinimalCountableChoice:
      return {{"alpha", alpha}, {"m", m}, {"n", n}, {"gamma", gamma}};
    case SchemaId::BimPrimRec:
      return {{"alpha", alpha},
              {"beta", beta},
              {"gamma", gamma},
              {"m", m},
              {"n", n}};
    case SchemaId::WkvPrimRec:
      return {{"base", gen.small_term(1, {x})},
              {"step", gen.pool_functor()},
              {"beta", beta},
              {"y", y}};
  }
  throw InternalError("unhandled schema id");
}

// True when instantiation rejects the pieces with exactly the given
// condition text.
bool rejects_naming(SchemaId id, const PieceMap& pieces,
                    const std::string& condition, std::string* detail) {
  try {
    instantiate(id, pieces);
    *detail = "no rejection";
    return false;
  } catch (const SideConditionError& e) {
    *detail = e.what();
    return std::string(e.what()) == "side condition violated: " + condition;
  } catch (const std::exception& e) {
    *detail = e.what();
    return false;
  }
}

}  // namespace

SuiteResult check_schema_roundtrip(int per_schema, int adversarial,
                                   std::uint64_t seed) {
  Recorder rec("schema-roundtrip");
  Gen gen(seed);

  for (int round = 0; round < per_schema; ++round) {
    for (SchemaId id : all_schemas()) {
      guarded_case(rec, round, [&] {
        PieceMap pieces = valid_pieces(id, gen, round);
        FormulaPtr f = instantiate(id, pieces);
        auto inst = match(f, id);
        rec.expect(inst.has_value(), [&] {
          return std::string(schema_name(id)) + " failed to recognize " +
                 to_text(f);
        });
        if (!inst.has_value()) return;
        FormulaPtr again = instantiate(inst->schema, inst->pieces);
        rec.expect(congruent(f, again), [&] {
          return std::string(schema_name(id)) + " rebuilt " + to_text(f) +
                 " as " + to_text(again);
        });
      });
    }
  }

  const NumVar x{"x", 0}, y{"y", 0}, m{"m", 0}, n{"n", 0};
  const FunVar alpha{"alpha", 0}, gamma{"gamma", 0};
  for (int k = 0; k < adversarial; ++k) {
    guarded_case(rec, per_schema + k, [&] {
      std::string detail;
      auto expect_named = [&](SchemaId id, const PieceMap& pieces,
                              const std::string& condition) {
        rec.expect(rejects_naming(id, pieces, condition, &detail), [&] {
          return std::string(schema_name(id)) + " adversarial case " +
                 std::to_string(k) + ": wanted '" + condition + "', got '" +
                 detail + "'";
        });
      };
      switch (k % 11) {
        case 0:
          expect_named(
              SchemaId::Ac00Bang,
              {{"matrix", mk_eq(mk_apply(mk_fun_var(alpha), mk_var(x)),
                                mk_var(y))},
               {"x", x},
               {"y", y},
               {"alpha", alpha}},
              "the choice function variable does not occur free in the "
              "matrix");
          break;
        case 1:
          expect_named(SchemaId::Ac00Bang,
                       {{"matrix", gen.qf_formula(1, {x})},
                        {"x", x},
                        {"y", x},
                        {"alpha", alpha}},
                       "the argument variable and the value variable are "
                       "distinct");
          break;
        case 2:
          expect_named(SchemaId::QfAc00,
                       {{"matrix", mk_exists(n, mk_eq(mk_var(n), mk_var(x)))},
                        {"x", x},
                        {"y", y},
                        {"alpha", alpha}},
                       "the matrix is quantifier-free");
          break;
        case 3:
          expect_named(
              SchemaId::Cfd,
              {{"matrix", mk_eq(mk_apply(mk_fun_var(FunVar{"beta", 0}),
                                         mk_var(x)),
                                numeral(0))},
               {"var", x},
               {"beta", FunVar{"beta", 0}}},
              "the characteristic function variable does not occur free in "
              "the matrix");
          break;
        case 4:
          expect_named(
              SchemaId::LambdaConv,
              {{"var", x},
               {"body", parse_term("(lam y. x + y)(2)")},
               {"arg", mk_var(y)}},
              "the argument is free for the bound variable in the body");
          break;
        case 5:
          expect_named(SchemaId::BimPrimRec,
                       {{"alpha", alpha},
                        {"beta", alpha},
                        {"gamma", gamma},
                        {"m", m},
                        {"n", n}},
                       "the base and step function variables are distinct");
          break;
        case 6:
          expect_named(
              SchemaId::WkvPrimRec,
              {{"base", mk_apply(mk_fun_var(FunVar{"beta", 0}), numeral(0))},
               {"step", parse_functor("lam w. w")},
               {"beta", FunVar{"beta", 0}},
               {"y", y}},
              "the course variable does not occur free in the base");
          break;
        case 7: {
          bool rejected = false;
          try {
            instantiate(SchemaId::UnboundedSearch,
                        {{"alpha", alpha},
                         {"m", m},
                         {"n", n},
                         {"gamma", gamma},
                         {"lt", std::string("sideways")}});
          } catch (const SortError&) {
            rejected = true;
          } catch (const std::exception&) {
          }
          rec.expect(rejected, [&] {
            return "an unknown ordering flag slipped through";
          });
          break;
        }
        case 8:
        case 9: {
          SchemaId id = all_schemas()[gen.pick(all_schemas().size())];
          FormulaPtr f = instantiate(id, valid_pieces(id, gen, k));
          FormulaPtr broken = (k % 11 == 8)
                                  ? mk_and(f, mk_eq(numeral(0), numeral(0)))
                                  : mk_not(f);
          rec.expect(!match(broken, id).has_value(), [&] {
            return std::string(schema_name(id)) + " accepted the reshaped " +
                   to_text(broken);
          });
          break;
        }
        default: {
          // The right shape with the bound function variable leaking into
          // the matrix: recognition must refuse it.
          FormulaPtr trap = parse_formula(
              "(forall x. beta(x) = 0 \\/ ~beta(x) = 0) -> exists beta. "
              "forall x. (monus(beta(x)', 1) = 0 \\/ beta(x) = 1) & "
              "((beta(x) = 0 -> beta(x) = 0) & (beta(x) = 0 -> beta(x) = "
              "0))");
          rec.expect(!match(trap, SchemaId::Cfd).has_value(), [&] {
            return "a captured characteristic variable was accepted: " +
                   to_text(trap);
          });
          break;
        }
      }
    });
  }
  return rec.take();
}

namespace {

// A step term for a primitive-recursive definition. The expanded form runs
// the recursor, which stores the previous value as a prime exponent at every
// stage, so any step that multiplies the previous value makes the expansion
// astronomically large. Growth in the previous value p is therefore kept at
// most additive: p may appear once, combined with p-free material through
// addition or through operations bounded by their arguments.
TermPtr slow_step(Gen& gen, const NumVar& p, const NumVar& i,
                  const NumVar& x) {
  TermPtr prev = mk_var(p);
  TermPtr other = gen.small_term(1, {i, x});
  switch (gen.pick(10)) {
    case 0:
      return mk_const(Const::Add, {prev, other});
    case 1:
      return mk_const(Const::Add, {other, prev});
    case 2:
      return mk_const(Const::Succ, {prev});
    case 3:
      return mk_const(Const::Monus, {prev, other});
    case 4:
      return mk_const(Const::Minf, {prev, other});
    case 5:
      return mk_const(Const::Maxf, {prev, other});
    case 6:
      return mk_const(Const::Rm, {prev, mk_const(Const::Succ, {other})});
    case 7:
      return mk_const(Const::Quot, {prev, mk_const(Const::Succ, {other})});
    case 8:
      return mk_const(Const::Absdiff, {prev, other});
    default:
      // The previous value is forgotten entirely.
      return other;
  }
}

}  // namespace

SuiteResult check_definitional_extension(int cases, std::uint64_t seed,
                                         const EvalLimits& limits) {
  Recorder rec("definitional-extension");
  Gen gen(seed);
  const SystemDescriptor base = *system_by_name("ha1");
  SystemDescriptor closed = base;
  closed.open_registry = false;
  closed.extension_names.clear();
  const NumVar x{"x", 0}, p{"p", 0}, i{"i", 0}, yv{"y", 0}, zv{"z", 0};
  Environment env;
  Assignment empty;

  for (int c = 0; c < cases; ++c) {
    guarded_case(rec, c, [&] {
      TermPtr g = gen.small_term(2, {x});
      TermPtr h = slow_step(gen, p, i, x);
      Extension ext = define_prim_rec(base, "f", x, g, p, i, h);
      std::vector<DefRule> rules = {ext.rule};
      auto describe = [&](const Nat& a, const Nat& b) {
        return "value at zero " + to_text(g) + ", next value " + to_text(h) +
               ", arguments " + nat_to_string(a) + ", " + nat_to_string(b);
      };
      for (int a = 0; a <= 8; ++a) {
        for (int b = 0; b <= 8; ++b) {
          Nat direct = eval_defined(ext.rule, rules, Nat(a), Nat(b), limits);
          TermPtr call = mk_defined("f", numeral(a), numeral(b));
          Nat expanded =
              eval_term(expand_defined(call, rules), env, empty, limits);
          rec.expect(direct == expanded,
                     [&] { return describe(Nat(a), Nat(b)); });
        }
      }
      FormulaPtr shape =
          mk_eq(mk_defined("f", mk_var(x), mk_var(yv)), mk_var(zv));
      FormulaPtr expanded_shape = expand_defined(shape, rules);
      rec.expect(formula_in_language(expanded_shape, closed), [&] {
        return "expansion left the base language: " + to_text(expanded_shape);
      });

      if (c % 10 == 9) {
        // A second definition recursing through the first.
        Extension ext2 = define_prim_rec(ext.system, "g", x, mk_var(x), p, i,
                                         mk_defined("f", mk_var(p), numeral(2)));
        std::vector<DefRule> chain = {ext.rule, ext2.rule};
        for (int a = 0; a <= 4; ++a) {
          for (int b = 0; b <= 4; ++b) {
            Nat direct =
                eval_defined(ext2.rule, chain, Nat(a), Nat(b), limits);
            TermPtr call = mk_defined("g", numeral(a), numeral(b));
            Nat expanded =
                eval_term(expand_defined(call, chain), env, empty, limits);
            rec.expect(direct == expanded, [&] {
              return "chained " + describe(Nat(a), Nat(b));
            });
          }
        }
      }
    });
  }
  return rec.take();
}

SuiteResult check_rec_semantics(int max_xy, const EvalLimits& limits) {
  Recorder rec("rec-semantics");
  Environment env;
  Assignment asg;
  const auto& pool = Gen::functor_pool();
  for (const FunctorPtr& u : pool) {
    FunHandle h = eval_functor(u, env, asg, limits);
    for (int x = 0; x <= max_xy; ++x) {
      std::vector<Nat> object_values;
      for (int y = 0; y <= max_xy; ++y) {
        guarded_case(rec, x * (max_xy + 1) + y, [&] {
          auto where = [&] {
            return "step " + to_text(u) + " from " + std::to_string(x) +
                   " at count " + std::to_string(y);
          };
          Nat value = eval_term(
              mk_rec(numeral(static_cast<std::uint64_t>(x)), u,
                     numeral(static_cast<std::uint64_t>(y))),
              env, asg, limits);
          // The two defining equations, on object-level values.
          if (y == 0) {
            rec.expect(value == Nat(x), where);
          } else {
            bool steps = !object_values.empty() &&
                         value == h(pair_code(object_values.back(),
                                              Nat(y - 1)));
            rec.expect(steps, where);
          }
          object_values.push_back(value);
          // The course-of-values code pins every stage at once.
          Nat code = course_of_values(Nat(x), h, Nat(y));
          rec.expect(component(code, Nat(0)) == Nat(x), where);
          for (int z = 0; z < y; ++z) {
            rec.expect(component(code, Nat(z + 1)) ==
                           h(pair_code(component(code, Nat(z)), Nat(z))),
                       where);
          }
          for (std::size_t z = 0; z < object_values.size(); ++z) {
            rec.expect(component(code, Nat(z)) == object_values[z], where);
          }
        });
      }
    }
  }
  return rec.take();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "defining-axioms",  "codec",
      "char-term",        "witnesses",
      "rec-translate",    "lambda-translate",
      "schema-roundtrip", "definitional-extension",
      "rec-semantics"};
  return names;
}

SuiteResult run_suite(const std::string& name, int cases, std::uint64_t seed,
                      const EvalLimits& limits) {
  auto volume = [&](int fallback) { return cases > 0 ? cases : fallback; };
  if (name == "defining-axioms") {
    return check_defining_axioms(volume(500), seed, limits);
  }
  if (name == "codec") return check_codec(volume(1000), seed, limits);
  if (name == "char-term") return check_char_term(volume(500), seed, limits);
  if (name == "witnesses") return check_witnesses(volume(500), seed, limits);
  if (name == "rec-translate") {
    int n = volume(300);
    return check_rec_translate(n, std::min(n, 200), seed, 64, limits);
  }
  if (name == "lambda-translate") {
    int n = volume(500);
    return check_lambda_translate(n, std::min(n, 200), seed, limits);
  }
  if (name == "schema-roundtrip") {
    int n = volume(300);
    return check_schema_roundtrip(n, std::max(1, n / 3), seed);
  }
  if (name == "definitional-extension") {
    return check_definitional_extension(volume(100), seed, limits);
  }
  if (name == "rec-semantics") {
    return check_rec_semantics(volume(12), limits);
  }
  throw ParseError("unknown check suite '" + name + "'");
}

}  // namespace tsa
