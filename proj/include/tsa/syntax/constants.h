#ifndef TSA_SYNTAX_CONSTANTS_H
#define TSA_SYNTAX_CONSTANTS_H

#include <cstdint>
#include <optional>
#include <string_view>

namespace tsa {

// The fixed alphabet of function(al) constants. Each takes `num_args`
// number arguments followed by `fun_args` one-place function arguments.
enum class Const : std::uint8_t {
  Zero,     // 0
  Succ,     // successor
  Add,      // a + b
  Mul,      // a * b
  Exp,      // a ^ b, with a^0 = 1
  Fact,     // a!
  Pd,       // predecessor, pd(0) = 0
  Monus,    // truncated subtraction
  Minf,     // min(a, b)
  Maxf,     // max(a, b)
  Sgbar,    // 1 at 0, else 0
  Sg,       // 0 at 0, else 1
  Absdiff,  // |a - b|
  Rm,       // remainder of a by b, rm(a, 0) = a
  Quot,     // floor quotient, quot(a, 0) = 0
  Sum,      // sum of alpha(y) for y < z
  Prod,     // product of alpha(y) for y < z
  Minle,    // min of alpha(y) for y <= z
  Maxle,    // max of alpha(y) for y <= z
  Prime,    // i-th prime, prime(0) = 2
  Expof,    // exponent of prime(i) in a (0 at a = 0; see kernel docs)
  Lh,       // number of nonzero prime exponents counted below a
  Concat,   // code concatenation a * b (sequence codes)
  Bar,      // code of the length-x initial segment of alpha, offset exponents
  Tilde,    // code of the length-x initial segment of alpha, raw exponents
  Join,     // componentwise max of two codes
  Ccp,      // signature only: no semantics in this kernel
};

inline constexpr int kConstCount = static_cast<int>(Const::Ccp) + 1;

struct ConstSig {
  Const id;
  std::string_view name;  // surface name in the text syntax
  int num_args;
  int fun_args;
};

// Signature table in enum order.
const ConstSig& const_sig(Const c);

// Lookup by surface name; nullopt for unknown names.
std::optional<Const> const_by_name(std::string_view name);

// True when the constant may be used as a functor on its own
// (exactly the one-place number-theoretic constants).
bool is_unary_const(Const c);

}  // namespace tsa

#endif  // TSA_SYNTAX_CONSTANTS_H
