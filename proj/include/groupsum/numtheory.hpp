#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace groupsum {

class GroupSpec;

// Exact arbitrary-precision integers.  Count is used for cardinalities (never
// negative once returned); Int for signed intermediates such as Mobius-weighted
// sums.
using Count = mpz_class;
using Int = mpz_class;

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with strictly increasing primes; factorize(1) is empty.
// Throws std::domain_error on 0.
using Factorization = std::vector<PrimePower>;
Factorization factorize(std::uint64_t m);

// All positive divisors of m in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t m);

// Mobius function: 0 if m has a squared prime factor, else (-1)^(#prime factors).
int mobius(std::uint64_t m);

// C(a, b) as a total function: 1 when b == 0 (even for negative a), and 0
// whenever b < 0, a < 0, or b > a.
Count binomial(const Int& a, const Int& b);

// Sum of mobius(s/d) * torsion_size(group, d) over the divisors d of gcd(s, e).
// This is the signed weight attached to the divisor s in the counting formulas;
// it is not itself a count and may be negative.
Int mobius_sum(std::uint64_t s, std::uint64_t e, const GroupSpec& group);

// Overflow-checked 64-bit helpers (throw std::overflow_error).
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

}  // namespace groupsum
