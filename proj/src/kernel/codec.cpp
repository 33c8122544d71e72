#include "tsa/kernel/codec.h"

#include "tsa/errors.h"

namespace tsa {

Nat encode_seq(const std::vector<Nat>& xs) {
  Nat code = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    code *= nat_pow(nth_prime(i), xs[i]);
  }
  return code;
}

Nat component(const Nat& a, const Nat& i) {
  if (a < 2) return 0;
  const Nat& p = nth_prime(nat_to_index(i));
  Nat n = a;
  Nat mult = 0;
  while (n % p == 0) {
    n /= p;
    ++mult;
  }
  return mult;
}

Nat seq_len(const Nat& a) {
  // Every prime factor of a is some p_i with i < a, so the defining sum
  // over i < a counts exactly the distinct prime factors.
  return Nat(factorize(a).size());
}

std::vector<Nat> decode_seq(const Nat& a) {
  std::uint64_t len = nat_to_index(seq_len(a));
  std::vector<Nat> out;
  out.reserve(len);
  for (std::uint64_t i = 0; i < len; ++i) out.push_back(component(a, i));
  return out;
}

Nat seq_concat(const Nat& a, const Nat& b) {
  std::uint64_t shift = nat_to_index(seq_len(a));
  std::uint64_t len_b = nat_to_index(seq_len(b));
  Nat code = a;
  for (std::uint64_t i = 0; i < len_b; ++i) {
    code *= nat_pow(nth_prime(shift + i), component(b, i));
  }
  return code;
}

Nat bar_code(const FunHandle& f, const Nat& x) {
  std::uint64_t n = nat_to_index(x);
  Nat code = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    code *= nat_pow(nth_prime(i), f(i) + 1);
  }
  return code;
}

Nat tilde_code(const FunHandle& f, const Nat& x) {
  std::uint64_t n = nat_to_index(x);
  Nat code = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    code *= nat_pow(nth_prime(i), f(i));
  }
  return code;
}

Nat seq_join(const Nat& a, const Nat& b) {
  // The defining product ranges over i < max(a, b), but only indices whose
  // prime divides a or b contribute; both kinds of index satisfy i < max(a,b).
  auto fa = factorize(a);
  auto fb = factorize(b);
  Nat code = 1;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      code *= nat_pow(fa[i].first, fa[i].second);
      ++i;
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      code *= nat_pow(fb[j].first, fb[j].second);
      ++j;
    } else {
      code *= nat_pow(fa[i].first,
                      fa[i].second > fb[j].second ? fa[i].second : fb[j].second);
      ++i;
      ++j;
    }
  }
  return code;
}

Nat pair_code(const Nat& a, const Nat& b) {
  return nat_pow(2, a) * nat_pow(3, b);
}

Nat course_of_values(const Nat& x, const FunHandle& alpha, const Nat& y) {
  std::uint64_t n = nat_to_index(y);
  Nat beta = x;
  Nat code = nat_pow(2, beta);
  for (std::uint64_t i = 0; i < n; ++i) {
    beta = alpha(pair_code(beta, i));
    code *= nat_pow(nth_prime(i + 1), beta);
  }
  return code;
}

}  // namespace tsa
