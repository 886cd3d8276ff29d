#include "groupsum/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace groupsum {
namespace {

std::vector<GroupElement> domain_without(const GroupSpec& group, const ExcludedSet& excluded) {
  if (excluded.group() != group)
    throw std::invalid_argument("excluded set belongs to a different group");
  std::vector<GroupElement> out;
  out.reserve(group.order() - excluded.size());
  for (GroupElement& g : elements(group))
    if (!excluded.contains(g)) out.push_back(std::move(g));
  return out;
}

void check_budget(const Int& combinations, std::uint64_t budget, const char* kind) {
  if (combinations > Int(static_cast<unsigned long>(budget)))
    throw EnumerationBudgetExceeded(std::string("enumeration budget exceeded: ") +
                                    combinations.get_str() + " " + kind +
                                    " combinations > budget " + std::to_string(budget));
}

void add_in_place(const GroupSpec& group, GroupElement& acc, const GroupElement& d) {
  for (std::size_t j = 0; j < group.rank(); ++j) {
    acc.residues[j] += d.residues[j];
    if (acc.residues[j] >= group.orders()[j]) acc.residues[j] -= group.orders()[j];
  }
}

void sub_in_place(const GroupSpec& group, GroupElement& acc, const GroupElement& d) {
  for (std::size_t j = 0; j < group.rank(); ++j) {
    if (acc.residues[j] < d.residues[j]) acc.residues[j] += group.orders()[j];
    acc.residues[j] -= d.residues[j];
  }
}

// Depth-first enumeration with an in-place running sum (no allocation per
// node).  `repetition` selects multisets vs subsets.
std::uint64_t enumerate(const GroupSpec& group, const std::vector<GroupElement>& domain,
                        bool repetition, std::uint64_t remaining, std::size_t start,
                        GroupElement& acc, const GroupElement& target) {
  if (remaining == 0) return acc == target ? 1 : 0;
  std::uint64_t total = 0;
  for (std::size_t idx = start; idx < domain.size(); ++idx) {
    add_in_place(group, acc, domain[idx]);
    total += enumerate(group, domain, repetition, remaining - 1, repetition ? idx : idx + 1,
                       acc, target);
    sub_in_place(group, acc, domain[idx]);
  }
  return total;
}

Count brute_count(const GroupSpec& group, const ExcludedSet& excluded, std::uint64_t size,
                  const GroupElement& target, std::uint64_t budget, bool repetition) {
  require_member(group, target);
  const std::vector<GroupElement> domain = domain_without(group, excluded);
  const Int dsize(static_cast<unsigned long>(domain.size()));
  const Int isize(static_cast<unsigned long>(size));
  if (repetition)
    check_budget(binomial(dsize + isize - 1, isize), budget, "multiset");
  else
    check_budget(binomial(dsize, isize), budget, "subset");
  GroupElement acc = zero(group);
  const std::uint64_t n =
      enumerate(group, domain, repetition, size, 0, acc, target);
  return Count(static_cast<unsigned long>(n));
}

CountTable series_table(const GroupSpec& group, const std::vector<GroupElement>& domain,
                        std::uint64_t max_size, bool repetition) {
  const std::uint64_t n = group.order();
  if (n > (std::uint64_t{1} << 26) || max_size > (std::uint64_t{1} << 32) / n)
    throw std::invalid_argument("series table too large to materialize");
  CountTable table{group,
                   std::vector<std::vector<Count>>(max_size + 1, std::vector<Count>(n))};
  table.rows[0][0] = 1;  // constant series 1 = indicator of the zero element
  std::vector<std::uint64_t> shifted(n);
  const std::vector<GroupElement> all = elements(group);
  for (const GroupElement& d : domain) {
    require_member(group, d);
    for (std::uint64_t f = 0; f < n; ++f)
      shifted[f] = flat_index(group, add(group, all[f], d));
    if (repetition) {
      // multiply by 1/(1 - d*X): coeff[j] += translate(coeff[j-1]), ascending
      for (std::uint64_t j = 1; j <= max_size; ++j)
        for (std::uint64_t f = 0; f < n; ++f)
          table.rows[j][shifted[f]] += table.rows[j - 1][f];
    } else {
      // multiply by (1 + d*X): descending so each element is used once
      for (std::uint64_t j = max_size; j >= 1; --j)
        for (std::uint64_t f = 0; f < n; ++f)
          table.rows[j][shifted[f]] += table.rows[j - 1][f];
    }
  }
  return table;
}

}  // namespace

const Count& CountTable::at(std::uint64_t size, const GroupElement& target) const {
  if (size >= rows.size()) throw std::out_of_range("CountTable::at: size out of range");
  return rows[size][flat_index(group, target)];
}

Count brute_multiset_count(const GroupSpec& group, const ExcludedSet& excluded,
                           std::uint64_t size, const GroupElement& target,
                           std::uint64_t budget) {
  return brute_count(group, excluded, size, target, budget, /*repetition=*/true);
}

Count brute_multiset_count(const GroupSpec& group, std::uint64_t size, const GroupElement& target,
                           std::uint64_t budget) {
  return brute_multiset_count(group, ExcludedSet::none(group), size, target, budget);
}

Count brute_subset_count(const GroupSpec& group, const ExcludedSet& excluded, std::uint64_t size,
                         const GroupElement& target, std::uint64_t budget) {
  return brute_count(group, excluded, size, target, budget, /*repetition=*/false);
}

Count brute_subset_count(const GroupSpec& group, std::uint64_t size, const GroupElement& target,
                         std::uint64_t budget) {
  return brute_subset_count(group, ExcludedSet::none(group), size, target, budget);
}

CountTable series_multiset_table(const GroupSpec& group, const ExcludedSet& excluded,
                                 std::uint64_t max_size) {
  return series_table(group, domain_without(group, excluded), max_size, /*repetition=*/true);
}

CountTable series_subset_table(const GroupSpec& group, const ExcludedSet& excluded,
                               std::uint64_t max_size) {
  return series_table(group, domain_without(group, excluded), max_size, /*repetition=*/false);
}

CountTable series_multiset_table(const GroupSpec& group, const std::vector<GroupElement>& domain,
                                 std::uint64_t max_size) {
  return series_table(group, domain, max_size, /*repetition=*/true);
}

CountTable series_subset_table(const GroupSpec& group, const std::vector<GroupElement>& domain,
                               std::uint64_t max_size) {
  return series_table(group, domain, max_size, /*repetition=*/false);
}

}  // namespace groupsum
