#ifndef TSA_KERNEL_CODEC_H
#define TSA_KERNEL_CODEC_H

#include <functional>
#include <vector>

#include "tsa/kernel/nat.h"

namespace tsa {

// A total function over naturals, as produced by functor evaluation.
using FunHandle = std::function<Nat(const Nat&)>;

// Prime-power sequence codes: the code of x_0,...,x_k is
// p_0^{x_0} * ... * p_k^{x_k}, and the empty code is 1.
Nat encode_seq(const std::vector<Nat>& xs);

// Exponent of p_i in a, by the least-search convention that makes the
// function total: component(0, i) = component(1, i) = 0.
Nat component(const Nat& a, const Nat& i);

// Number of nonzero components of a (its count of distinct prime factors).
Nat seq_len(const Nat& a);

// Components of a up to its length: [component(a,0), ..., component(a,len-1)].
std::vector<Nat> decode_seq(const Nat& a);

// a * prod_{i < len(b)} p_{len(a)+i}^{component(b, i)}. Concatenation of
// codes whenever every entry is positive.
Nat seq_concat(const Nat& a, const Nat& b);

// prod_{i < x} p_i^{f(i) + 1}: the code of the first x values of f, shifted
// so that lengths are reliable even when f takes the value 0.
Nat bar_code(const FunHandle& f, const Nat& x);

// prod_{i < x} p_i^{f(i)}.
Nat tilde_code(const FunHandle& f, const Nat& x);

// Componentwise maximum of codes: prod p_i^{max(component(a,i), component(b,i))}.
Nat seq_join(const Nat& a, const Nat& b);

// Two-component code 2^a * 3^b.
Nat pair_code(const Nat& a, const Nat& b);

// Iterate beta(0) = x, beta(i+1) = alpha(pair_code(beta(i), i)) and return
// encode_seq([beta(0), ..., beta(y)]). The i-th component of the result is
// beta(i), which is how recursion values are recovered from the code.
Nat course_of_values(const Nat& x, const FunHandle& alpha, const Nat& y);

}  // namespace tsa

#endif  // TSA_KERNEL_CODEC_H
