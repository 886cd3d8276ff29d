#include "groupsum/closed_form.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace groupsum {
namespace {

// Divide by the group order, asserting exactness.  Every counting formula here
// produces a multiple of the order; a nonzero remainder means a formula bug,
// so it is reported as a logic error rather than silently truncated.
Count exact_quotient(const Int& numerator, std::uint64_t order, const char* what) {
  Int q, r;
  const Int n(static_cast<unsigned long>(order));
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(), n.get_mpz_t());
  if (r != 0)
    throw std::logic_error(std::string(what) + ": numerator not divisible by the group order");
  if (q < 0) throw std::logic_error(std::string(what) + ": negative count");
  return q;
}

// Shared divisor sum: for size >= 1 returns
//   sum over s | gcd(exponent, size) of C(n/s + size/s - 1, size/s) * w(s)
// where w(s) = mobius_sum(s, eg, group).  For size == 0 the gcd convention
// gcd(exponent, 0) == exponent makes the sum equal to order for eg ==
// exponent (the zero element) and 0 otherwise, which extends the formulas
// consistently to the empty multiset.
Int multiset_numerator(const GroupSpec& group, std::uint64_t size, std::uint64_t eg) {
  const std::uint64_t n = group.order();
  Int total = 0;
  for (std::uint64_t s : divisors(std::gcd(group.exponent(), size))) {
    if (n % s != 0)
      throw std::logic_error("multiset_numerator: exponent divisor does not divide the order");
    const Int w = mobius_sum(s, eg, group);
    if (w == 0) continue;
    const std::uint64_t size_s = size / s;
    total += binomial(Int(static_cast<unsigned long>(n / s)) +
                          Int(static_cast<unsigned long>(size_s)) - 1,
                      Int(static_cast<unsigned long>(size_s))) *
             w;
  }
  return total;
}

std::uint64_t valuation(std::uint64_t m, std::uint64_t p) {
  std::uint64_t v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace

Count multiset_count(const GroupSpec& group, std::uint64_t size, const GroupElement& target) {
  require_member(group, target);
  if (size == 0) return is_zero(target) ? 1 : 0;
  const Int num = multiset_numerator(group, size, e_of(group, target));
  return exact_quotient(num, group.order(), "multiset_count");
}

Count subset_count(const GroupSpec& group, std::uint64_t size, const GroupElement& target) {
  require_member(group, target);
  if (size == 0) return is_zero(target) ? 1 : 0;
  const std::uint64_t n = group.order();
  const std::uint64_t eg = e_of(group, target);
  Int total = 0;
  for (std::uint64_t s : divisors(std::gcd(size, group.exponent()))) {
    if (n % s != 0)
      throw std::logic_error("subset_count: exponent divisor does not divide the order");
    const Int w = mobius_sum(s, eg, group);
    if (w == 0) continue;
    const std::uint64_t size_s = size / s;
    Int term = binomial(Int(static_cast<unsigned long>(n / s)),
                        Int(static_cast<unsigned long>(size_s))) *
               w;
    if ((size + size_s) % 2 != 0) term = -term;
    total += term;
  }
  return exact_quotient(total, n, "subset_count");
}

Count partition_count(const GroupSpec& group, std::uint64_t size, const GroupElement& target) {
  require_member(group, target);
  if (size == 0) return is_zero(target) ? 1 : 0;
  const std::uint64_t eg = e_of(group, target);
  const Int num = multiset_numerator(group, size, eg) - multiset_numerator(group, size - 1, eg);
  return exact_quotient(num, group.order(), "partition_count");
}

Count multiset_count_coprime(const GroupSpec& group, std::uint64_t size,
                             const GroupElement& target) {
  require_member(group, target);
  if (size == 0 || std::gcd(size, group.exponent()) != 1)
    throw std::domain_error("multiset_count_coprime: size must be coprime to the exponent");
  const std::uint64_t n = group.order();
  const Count num = binomial(Int(static_cast<unsigned long>(n)) +
                                 Int(static_cast<unsigned long>(size)) - 1,
                             Int(static_cast<unsigned long>(size)));
  return exact_quotient(num, n, "multiset_count_coprime");
}

Count multiset_count_prime_power(std::uint64_t p, unsigned m, std::uint64_t size,
                                 std::uint64_t target) {
  {
    const Factorization f = factorize(p);
    if (f.size() != 1 || f[0].exponent != 1)
      throw std::domain_error("multiset_count_prime_power: p must be prime");
  }
  if (m == 0) throw std::domain_error("multiset_count_prime_power: m must be >= 1");
  if (size == 0) throw std::domain_error("multiset_count_prime_power: size must be >= 1");
  std::uint64_t n = 1;
  for (unsigned j = 0; j < m; ++j) n = checked_mul(n, p);
  if (target >= n)
    throw std::invalid_argument("multiset_count_prime_power: target out of range");

  const std::uint64_t w = valuation(size, p);
  const std::uint64_t u = (target == 0) ? m : valuation(target, p);

  const auto choose_rep = [](std::uint64_t dom, std::uint64_t sz) {
    // multisets of size sz from a dom-element set
    return binomial(Int(static_cast<unsigned long>(dom)) +
                        Int(static_cast<unsigned long>(sz)) - 1,
                    Int(static_cast<unsigned long>(sz)));
  };

  // ph runs over powers p^h; the weight attached to depth h is
  // p^h - p^(h-1) for 1 <= h <= min(w, u), and a single negative correction
  // -p^u appears at depth u+1 when u < min(w, m).
  Int num = choose_rep(n, size);
  std::uint64_t ph = 1;
  const std::uint64_t hmax = std::min(w, u);
  for (std::uint64_t h = 1; h <= hmax; ++h) {
    ph *= p;  // ph == p^h <= p^u <= n
    num += choose_rep(n / ph, size / ph) *
           Int(static_cast<unsigned long>(ph - ph / p));
  }
  if (u < std::min<std::uint64_t>(w, m)) {
    std::uint64_t pu1 = 1;
    for (std::uint64_t j = 0; j <= u; ++j) pu1 *= p;  // p^(u+1) <= n
    num -= choose_rep(n / pu1, size / pu1) * Int(static_cast<unsigned long>(pu1 / p));
  }
  return exact_quotient(num, n, "multiset_count_prime_power");
}

}  // namespace groupsum
