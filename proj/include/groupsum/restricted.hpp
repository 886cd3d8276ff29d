#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "groupsum/group.hpp"
#include "groupsum/numtheory.hpp"

namespace groupsum {

// A set of group elements removed from the counting domain.  Elements are
// validated against the owning group, deduplicated, and kept sorted in
// lexicographic order so that downstream recursions are deterministic.
class ExcludedSet {
 public:
  ExcludedSet(GroupSpec group, std::vector<GroupElement> elems);
  static ExcludedSet none(GroupSpec group) { return ExcludedSet(std::move(group), {}); }

  const GroupSpec& group() const noexcept { return group_; }
  const std::vector<GroupElement>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  bool contains(const GroupElement& g) const;

 private:
  GroupSpec group_;
  std::vector<GroupElement> elems_;
};

// rows[t] maps a sum h to the number of t-element subsets of the excluded set
// summing to h; rows[0] is {zero: 1}.  Row count is size()+1.
struct SubsetSumTable {
  std::vector<std::map<GroupElement, Count>> rows;
};
SubsetSumTable subset_sum_table(const ExcludedSet& excluded);

// Number of size-`size` multisubsets of the whole group summing to `target`
// that use at least one excluded element, by inclusion-exclusion over which
// excluded elements appear.  Requires size >= 1 and a nonempty excluded set.
Count multiset_hit_count(const ExcludedSet& excluded, std::uint64_t size,
                         const GroupElement& target);

// Multisubsets of (group minus excluded) summing to target: the full-group
// closed form minus multiset_hit_count.
Count multiset_count_excluding(const ExcludedSet& excluded, std::uint64_t size,
                               const GroupElement& target);

// Same quantity computed by peeling one excluded element at a time:
//   f_{D \ {u}}(i, g) = f_D(i, g) - f_D(i-1, g-u)  [multisets]
// (a multiset using u at least once drops one copy of u but keeps u available,
// so the smaller-size term stays on the unpeeled domain).  Independent of
// multiset_count_excluding; used to cross-check it.
Count multiset_count_excluding_peeled(const ExcludedSet& excluded, std::uint64_t size,
                                      const GroupElement& target);

// Subsets (distinct elements) of (group minus excluded) summing to target, by
// the subset peeling recursion
//   h_{D \ {u}}(i, g) = h_D(i, g) - h_{D \ {u}}(i-1, g-u)
// where, unlike the multiset case, the smaller-size term also excludes u.
Count subset_count_excluding(const ExcludedSet& excluded, std::uint64_t size,
                             const GroupElement& target);

}  // namespace groupsum
