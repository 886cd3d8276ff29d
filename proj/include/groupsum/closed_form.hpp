#pragma once

#include <cstdint>

#include "groupsum/group.hpp"
#include "groupsum/numtheory.hpp"

namespace groupsum {

// Number of size-`size` multisubsets of the whole group whose elements sum to
// `target`.  Divisor-sum formula: runs in roughly d(gcd(size, exponent)) big
// binomial evaluations, so it scales to sizes far beyond enumeration.
Count multiset_count(const GroupSpec& group, std::uint64_t size, const GroupElement& target);

// Number of size-`size` subsets (distinct elements) of the whole group whose
// elements sum to `target`.
Count subset_count(const GroupSpec& group, std::uint64_t size, const GroupElement& target);

// Number of multisets of exactly `size` *nonzero* elements summing to
// `target`; equivalently multiset_count over the domain with zero removed.
Count partition_count(const GroupSpec& group, std::uint64_t size, const GroupElement& target);

// Single-binomial shortcut C(n+size-1, size)/n, valid only when
// gcd(size, exponent) == 1; throws std::domain_error otherwise.
Count multiset_count_coprime(const GroupSpec& group, std::uint64_t size, const GroupElement& target);

// Specialized closed form for the cyclic group of prime-power order p^m.
// `target` is a residue mod p^m; requires size >= 1 and p prime.
Count multiset_count_prime_power(std::uint64_t p, unsigned m, std::uint64_t size,
                                 std::uint64_t target);

}  // namespace groupsum
