#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groupsum/group.hpp"
#include "groupsum/oracle.hpp"

namespace groupsum {

// Every presentation of a finite abelian group with order <= max_order: all
// multisets of cyclic factors >= 2 (non-decreasing) with product <= max_order,
// plus the trivial presentation [1].  Sorted by (order, factor list).
std::vector<GroupSpec> groups_up_to_order(std::uint64_t max_order);

struct VerifyOptions {
  std::uint64_t max_order = 6;    // sweep every group presentation up to here
  std::uint64_t max_size = 5;     // sizes 0..max_size
  std::size_t max_excluded = 2;   // excluded subsets of size 1..max_excluded
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  bool inject_fault = false;      // self-test: perturb one value, must be caught
};

struct VerifyMismatch {
  std::string quantity;  // "M", "N" or "P"
  std::string oracle;    // which independent computation disagreed
  GroupSpec group;
  std::vector<GroupElement> excluded;
  std::uint64_t size = 0;
  GroupElement target;
  std::string expected;  // oracle value
  std::string got;       // closed-form/derived value
};

struct VerifyReport {
  std::uint64_t groups_checked = 0;
  std::uint64_t comparisons = 0;
  std::vector<VerifyMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Sweeps every group presentation up to max_order and compares the closed
// forms against the enumeration and generating-function oracles, and the
// inclusion-exclusion restricted counts against peeling and enumeration.
VerifyReport run_verification(const VerifyOptions& options);

std::string describe(const VerifyMismatch& mismatch);

}  // namespace groupsum
