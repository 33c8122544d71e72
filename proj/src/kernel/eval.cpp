#include "tsa/kernel/eval.h"

#include <memory>

#include "tsa/errors.h"

namespace tsa {

namespace {

struct Budget {
  std::uint64_t used = 0;
  std::uint64_t cap = 0;

  void spend(std::uint64_t k = 1) {
    used += k;
    if (used > cap || used < k) {
      throw CapExceededError("evaluation exceeded its loop budget");
    }
  }
};

// One evaluation owns copies of its bindings so that returned function
// handles stay valid however long the caller keeps them.
struct EvalCtx {
  Environment env;
  Assignment asg;
  std::shared_ptr<Budget> budget;
};
using CtxPtr = std::shared_ptr<const EvalCtx>;

// Lambda-bound values live in immutable frames chained onto the base
// assignment; extending a chain never copies it.
struct Frame {
  NumVar var;
  Nat value;
  std::shared_ptr<const Frame> parent;
};
using FramePtr = std::shared_ptr<const Frame>;

Nat eval_term_in(const TermPtr& t, const CtxPtr& ctx, const FramePtr& frame);
FunHandle eval_functor_in(const FunctorPtr& u, const CtxPtr& ctx,
                          const FramePtr& frame);

Nat const_value_impl(Const c, const std::vector<Nat>& nums,
                     const std::vector<FunHandle>& funs, Budget& budget);

Nat eval_term_in(const TermPtr& t, const CtxPtr& ctx, const FramePtr& frame) {
  if (!t) throw InternalError("evaluating null term");
  if (const auto* v = std::get_if<NumVarRef>(&t->node())) {
    for (const Frame* f = frame.get(); f; f = f->parent.get()) {
      if (f->var == v->var) return f->value;
    }
    return ctx->asg.lookup(v->var);
  }
  if (const auto* c = std::get_if<ConstApp>(&t->node())) {
    // Successor chains (numerals) are walked iteratively; deep chains would
    // otherwise exhaust the call stack.
    if (c->id == Const::Succ) {
      Nat offset = 1;
      const Term* core = c->nums[0].get();
      while (const auto* inner = std::get_if<ConstApp>(&core->node())) {
        if (inner->id != Const::Succ) break;
        ++offset;
        core = inner->nums[0].get();
      }
      // Borrow the inner node as a shared_ptr without re-owning it.
      TermPtr borrowed(t, core);
      return eval_term_in(borrowed, ctx, frame) + offset;
    }
    std::vector<Nat> nums;
    nums.reserve(c->nums.size());
    for (const auto& a : c->nums) nums.push_back(eval_term_in(a, ctx, frame));
    std::vector<FunHandle> funs;
    funs.reserve(c->funs.size());
    for (const auto& u : c->funs) funs.push_back(eval_functor_in(u, ctx, frame));
    return const_value_impl(c->id, nums, funs, *ctx->budget);
  }
  if (const auto* a = std::get_if<Apply>(&t->node())) {
    FunHandle h = eval_functor_in(a->fun, ctx, frame);
    return h(eval_term_in(a->arg, ctx, frame));
  }
  if (const auto* d = std::get_if<DefApp>(&t->node())) {
    throw LanguageError("defined constant '" + d->name +
                        "' must be expanded before evaluation");
  }
  const auto& r = std::get<RecApp>(t->node());
  std::uint64_t n = nat_to_index(eval_term_in(r.count, ctx, frame));
  Nat value = eval_term_in(r.base, ctx, frame);
  FunHandle step = eval_functor_in(r.step, ctx, frame);
  for (std::uint64_t z = 0; z < n; ++z) {
    ctx->budget->spend();
    value = step(pair_code(value, z));
  }
  return value;
}

FunHandle eval_functor_in(const FunctorPtr& u, const CtxPtr& ctx,
                          const FramePtr& frame) {
  if (!u) throw InternalError("evaluating null functor");
  if (const auto* v = std::get_if<FunVarRef>(&u->node())) {
    // Environment functors are closed, so they need no frame of their own.
    FunctorPtr bound = ctx->env.lookup(v->var);
    if (std::get_if<FunVarRef>(&bound->node())) {
      throw InternalError("environment binds a bare function variable");
    }
    return eval_functor_in(bound, ctx, nullptr);
  }
  if (const auto* c = std::get_if<ConstFn>(&u->node())) {
    Const id = c->id;
    CtxPtr captured = ctx;
    return [id, captured](const Nat& n) {
      return const_value_impl(id, {n}, {}, *captured->budget);
    };
  }
  const auto& lam = std::get<Lambda>(u->node());
  NumVar var = lam.var;
  TermPtr body = lam.body;
  CtxPtr captured = ctx;
  FramePtr captured_frame = frame;
  return [var, body, captured, captured_frame](const Nat& n) {
    auto extended = std::make_shared<Frame>(Frame{var, n, captured_frame});
    return eval_term_in(body, captured, extended);
  };
}

Nat const_value_impl(Const c, const std::vector<Nat>& nums,
                     const std::vector<FunHandle>& funs, Budget& budget) {
  const auto& sig = const_sig(c);
  if (static_cast<int>(nums.size()) != sig.num_args ||
      static_cast<int>(funs.size()) != sig.fun_args) {
    throw SortError("wrong argument count for constant " +
                    std::string(sig.name));
  }
  switch (c) {
    case Const::Zero:
      return 0;
    case Const::Succ:
      return nums[0] + 1;
    case Const::Add:
      return nums[0] + nums[1];
    case Const::Mul:
      return nums[0] * nums[1];
    case Const::Exp:
      if (nums[0] >= 2 && nums[1] >= 2) budget.spend(nat_to_index(nums[1]));
      return nat_pow(nums[0], nums[1]);
    case Const::Fact: {
      std::uint64_t n = nat_to_index(nums[0]);
      budget.spend(n);
      Nat result = 1;
      for (std::uint64_t i = 2; i <= n; ++i) result *= i;
      return result;
    }
    case Const::Pd:
      return nums[0] == 0 ? Nat(0) : Nat(nums[0] - 1);
    case Const::Monus:
      return nums[0] >= nums[1] ? Nat(nums[0] - nums[1]) : Nat(0);
    case Const::Minf:
      return nums[0] <= nums[1] ? nums[0] : nums[1];
    case Const::Maxf:
      return nums[0] >= nums[1] ? nums[0] : nums[1];
    case Const::Sgbar:
      return nums[0] == 0 ? Nat(1) : Nat(0);
    case Const::Sg:
      return nums[0] == 0 ? Nat(0) : Nat(1);
    case Const::Absdiff:
      return nums[0] >= nums[1] ? Nat(nums[0] - nums[1])
                                : Nat(nums[1] - nums[0]);
    case Const::Rm:
      return nums[1] == 0 ? nums[0] : Nat(nums[0] % nums[1]);
    case Const::Quot:
      return nums[1] == 0 ? Nat(0) : Nat(nums[0] / nums[1]);
    case Const::Sum: {
      std::uint64_t n = nat_to_index(nums[0]);
      Nat acc = 0;
      for (std::uint64_t y = 0; y < n; ++y) {
        budget.spend();
        acc += funs[0](y);
      }
      return acc;
    }
    case Const::Prod: {
      std::uint64_t n = nat_to_index(nums[0]);
      Nat acc = 1;
      // A zero factor fixes the value; stopping early changes nothing.
      for (std::uint64_t y = 0; y < n && acc != 0; ++y) {
        budget.spend();
        acc *= funs[0](y);
      }
      return acc;
    }
    case Const::Minle: {
      std::uint64_t n = nat_to_index(nums[0]);
      Nat best = funs[0](0);
      for (std::uint64_t y = 1; y <= n; ++y) {
        budget.spend();
        Nat v = funs[0](y);
        if (v < best) best = std::move(v);
      }
      return best;
    }
    case Const::Maxle: {
      std::uint64_t n = nat_to_index(nums[0]);
      Nat best = funs[0](0);
      for (std::uint64_t y = 1; y <= n; ++y) {
        budget.spend();
        Nat v = funs[0](y);
        if (v > best) best = std::move(v);
      }
      return best;
    }
    case Const::Prime: {
      std::uint64_t i = nat_to_index(nums[0]);
      budget.spend(i + 1);
      return nth_prime(i);
    }
    case Const::Expof:
      budget.spend();
      return component(nums[0], nums[1]);
    case Const::Lh:
      budget.spend();
      return seq_len(nums[0]);
    case Const::Concat:
      budget.spend();
      return seq_concat(nums[0], nums[1]);
    case Const::Bar:
      budget.spend(nat_to_index(nums[0]));
      return bar_code(funs[0], nums[0]);
    case Const::Tilde:
      budget.spend(nat_to_index(nums[0]));
      return tilde_code(funs[0], nums[0]);
    case Const::Join:
      budget.spend();
      return seq_join(nums[0], nums[1]);
    case Const::Ccp:
      throw UnsupportedConstantError(
          "ccp is signature-only and has no evaluation semantics");
  }
  throw InternalError("unhandled constant in evaluation");
}

CtxPtr make_ctx(const Environment& env, const Assignment& asg,
                const EvalLimits& limits) {
  auto budget = std::make_shared<Budget>();
  budget->cap = limits.loop_cap;
  return std::make_shared<EvalCtx>(EvalCtx{env, asg, std::move(budget)});
}

}  // namespace

Nat eval_term(const TermPtr& t, const Environment& env, const Assignment& asg,
              const EvalLimits& limits) {
  return eval_term_in(t, make_ctx(env, asg, limits), nullptr);
}

FunHandle eval_functor(const FunctorPtr& u, const Environment& env,
                       const Assignment& asg, const EvalLimits& limits) {
  return eval_functor_in(u, make_ctx(env, asg, limits), nullptr);
}

Nat const_value(Const c, const std::vector<Nat>& nums,
                const std::vector<FunHandle>& funs, const EvalLimits& limits) {
  Budget budget;
  budget.cap = limits.loop_cap;
  return const_value_impl(c, nums, funs, budget);
}

}  // namespace tsa
