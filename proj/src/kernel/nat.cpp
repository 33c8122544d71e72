#include "tsa/kernel/nat.h"

#include <mutex>

#include "tsa/errors.h"

namespace tsa {

Nat nat_pow(const Nat& base, const Nat& exp) {
  if (exp == 0) return 1;
  if (base == 0) return 0;
  if (base == 1) return 1;
  std::uint64_t e = nat_to_index(exp);
  // Square-and-multiply keeps the multiplication count logarithmic.
  Nat result = 1;
  Nat b = base;
  while (e != 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

namespace {

std::vector<Nat>& prime_cache() {
  static std::vector<Nat> primes{2, 3, 5, 7, 11, 13};
  return primes;
}

bool is_prime_by_cached(const Nat& n) {
  // Callers only ask about n at most (last cached prime)^2, so cached
  // primes suffice as trial divisors.
  for (const Nat& p : prime_cache()) {
    if (p * p > n) return true;
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace

const Nat& nth_prime(std::size_t i) {
  auto& primes = prime_cache();
  while (primes.size() <= i) {
    Nat candidate = primes.back() + 2;
    while (!is_prime_by_cached(candidate)) candidate += 2;
    primes.push_back(candidate);
  }
  return primes[i];
}

std::vector<std::pair<Nat, Nat>> factorize(Nat n) {
  std::vector<std::pair<Nat, Nat>> out;
  if (n < 2) return out;
  // Worst case is a prime square near the trial ceiling; beyond it the
  // cofactor would not be provably prime, so give up rather than guess.
  constexpr std::size_t kMaxTrialPrimes = 2'000'000;
  for (std::size_t i = 0;; ++i) {
    if (i >= kMaxTrialPrimes) {
      throw CapExceededError("factoring " + n.str() +
                             " exceeds the trial-division budget");
    }
    const Nat& p = nth_prime(i);
    if (p * p > n) break;
    if (n % p == 0) {
      Nat mult = 0;
      do {
        n /= p;
        ++mult;
      } while (n % p == 0);
      out.emplace_back(p, mult);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string nat_to_string(const Nat& n) { return n.str(); }

Nat nat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty number");
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw ParseError("'" + s + "' is not a decimal natural number");
    }
  }
  return Nat(s);
}

std::uint64_t nat_to_index(const Nat& n) {
  if (n > std::numeric_limits<std::uint64_t>::max()) {
    throw CapExceededError("value " + n.str() +
                           " is too large for a host-side loop bound");
  }
  return n.convert_to<std::uint64_t>();
}

}  // namespace tsa
