#ifndef TSA_KERNEL_NAT_H
#define TSA_KERNEL_NAT_H

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tsa {

// Arbitrary-precision natural number. Invariant: every Nat held by this
// library is >= 0; all arithmetic is exact.
using Nat = boost::multiprecision::cpp_int;

// base^exp with 0^0 = 1.
Nat nat_pow(const Nat& base, const Nat& exp);

// The i-th prime (p_0 = 2, p_1 = 3, ...), computed by trial division and
// cached across calls.
const Nat& nth_prime(std::size_t i);

// Prime factorization of n as ascending (prime, multiplicity) pairs.
// factorize(0) and factorize(1) are empty.
std::vector<std::pair<Nat, Nat>> factorize(Nat n);

// Decimal conversion. nat_from_string rejects anything but digit strings.
std::string nat_to_string(const Nat& n);
Nat nat_from_string(const std::string& s);

// Checked narrowing for loop bounds; throws CapExceededError when n is too
// large to drive a host-side loop.
std::uint64_t nat_to_index(const Nat& n);

}  // namespace tsa

#endif  // TSA_KERNEL_NAT_H
