#include "groupsum/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "groupsum/group.hpp"

namespace groupsum {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("checked_mul: product exceeds 64 bits");
  return r;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

Factorization factorize(std::uint64_t m) {
  if (m == 0) throw std::domain_error("factorize: argument must be positive");
  Factorization out;
  for (std::uint64_t p = 2; p <= m / p; p += (p == 2) ? 1 : 2) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out{1};
  for (const PrimePower& pp : factorize(m)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= pp.exponent; ++k) {
      pk *= pp.prime;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(std::uint64_t m) {
  int sign = 1;
  for (const PrimePower& pp : factorize(m)) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

Count binomial(const Int& a, const Int& b) {
  if (b == 0) return 1;  // one way to choose nothing, whatever the domain
  if (b < 0 || a < 0 || b > a) return 0;
  Int lower = b;
  if (a - b < lower) lower = a - b;  // C(a,b) == C(a,a-b); take the cheap side
  if (!lower.fits_ulong_p())
    throw std::overflow_error("binomial: lower index too large");
  const unsigned long k = lower.get_ui();
  Count result = 1;
  for (unsigned long j = 1; j <= k; ++j) {
    result *= a - lower + j;
    // Every prefix product of this form is divisible by j (partial binomial
    // coefficients are integers), so exact division is safe.
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), j);
  }
  return result;
}

Int mobius_sum(std::uint64_t s, std::uint64_t e, const GroupSpec& group) {
  if (s == 0 || e == 0)
    throw std::domain_error("mobius_sum: divisor arguments must be positive");
  Int total = 0;
  for (std::uint64_t d : divisors(std::gcd(s, e))) {
    const int mu = mobius(s / d);
    if (mu == 0) continue;
    const Int term(static_cast<unsigned long>(torsion_size(group, d)));
    total += (mu > 0) ? term : -term;
  }
  return total;
}

}  // namespace groupsum
