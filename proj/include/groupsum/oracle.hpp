#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "groupsum/group.hpp"
#include "groupsum/numtheory.hpp"
#include "groupsum/restricted.hpp"

namespace groupsum {

// Default ceiling on the number of combinations an enumeration oracle may
// visit before refusing.  Override per call, or via GROUPSUM_ENUM_BUDGET in
// the command-line tool.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// Thrown when an enumeration oracle would exceed its combination budget.
class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive enumeration of multisets (combinations with repetition) over the
// group minus the excluded set.  Refuses with EnumerationBudgetExceeded when
// the number of combinations C(|D|+size-1, size) exceeds `budget`.
Count brute_multiset_count(const GroupSpec& group, const ExcludedSet& excluded,
                           std::uint64_t size, const GroupElement& target,
                           std::uint64_t budget = kDefaultEnumerationBudget);
Count brute_multiset_count(const GroupSpec& group, std::uint64_t size, const GroupElement& target,
                           std::uint64_t budget = kDefaultEnumerationBudget);

// Exhaustive enumeration of subsets (distinct elements); the budget bounds
// C(|D|, size).
Count brute_subset_count(const GroupSpec& group, const ExcludedSet& excluded, std::uint64_t size,
                         const GroupElement& target,
                         std::uint64_t budget = kDefaultEnumerationBudget);
Count brute_subset_count(const GroupSpec& group, std::uint64_t size, const GroupElement& target,
                         std::uint64_t budget = kDefaultEnumerationBudget);

// Table of counts for all sizes 0..max_size() and all targets.
struct CountTable {
  GroupSpec group;
  std::vector<std::vector<Count>> rows;  // rows[size][flat_index(target)]

  std::uint64_t max_size() const { return rows.size() - 1; }
  const Count& at(std::uint64_t size, const GroupElement& target) const;
};

// Generating-function oracle: multiplies out, degree by degree with exact
// integer coefficients indexed by group element, the product over domain
// elements d of 1/(1 - d*X) (multisets) or (1 + d*X) (subsets), truncated at
// X^max_size.  Independent of both the closed forms and the enumerators.
CountTable series_multiset_table(const GroupSpec& group, const ExcludedSet& excluded,
                                 std::uint64_t max_size);
CountTable series_subset_table(const GroupSpec& group, const ExcludedSet& excluded,
                               std::uint64_t max_size);

// Same computation with an explicit domain given in an arbitrary order; the
// result must not depend on that order (exercised by tests).
CountTable series_multiset_table(const GroupSpec& group, const std::vector<GroupElement>& domain,
                                 std::uint64_t max_size);
CountTable series_subset_table(const GroupSpec& group, const std::vector<GroupElement>& domain,
                               std::uint64_t max_size);

}  // namespace groupsum
