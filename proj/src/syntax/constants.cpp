#include "tsa/syntax/constants.h"

#include <array>

#include "tsa/errors.h"

namespace tsa {
namespace {

constexpr std::array<ConstSig, kConstCount> kTable = {{
    {Const::Zero, "0", 0, 0},
    {Const::Succ, "succ", 1, 0},
    {Const::Add, "add", 2, 0},
    {Const::Mul, "mul", 2, 0},
    {Const::Exp, "exp", 2, 0},
    {Const::Fact, "fact", 1, 0},
    {Const::Pd, "pd", 1, 0},
    {Const::Monus, "monus", 2, 0},
    {Const::Minf, "minf", 2, 0},
    {Const::Maxf, "maxf", 2, 0},
    {Const::Sgbar, "sgbar", 1, 0},
    {Const::Sg, "sg", 1, 0},
    {Const::Absdiff, "absdiff", 2, 0},
    {Const::Rm, "rm", 2, 0},
    {Const::Quot, "quot", 2, 0},
    {Const::Sum, "sum", 1, 1},
    {Const::Prod, "prod", 1, 1},
    {Const::Minle, "minle", 1, 1},
    {Const::Maxle, "maxle", 1, 1},
    {Const::Prime, "prime", 1, 0},
    {Const::Expof, "expof", 2, 0},
    {Const::Lh, "lh", 1, 0},
    {Const::Concat, "concat", 2, 0},
    {Const::Bar, "bar", 1, 1},
    {Const::Tilde, "tilde", 1, 1},
    {Const::Join, "join", 2, 0},
    {Const::Ccp, "ccp", 1, 0},
}};

}  // namespace

const ConstSig& const_sig(Const c) {
  auto i = static_cast<std::size_t>(c);
  if (i >= kTable.size() || kTable[i].id != c) {
    throw InternalError("constant signature table out of sync");
  }
  return kTable[i];
}

std::optional<Const> const_by_name(std::string_view name) {
  for (const auto& sig : kTable) {
    if (sig.name == name) return sig.id;
  }
  return std::nullopt;
}

bool is_unary_const(Const c) {
  const auto& sig = const_sig(c);
  return sig.num_args == 1 && sig.fun_args == 0;
}

}  // namespace tsa
