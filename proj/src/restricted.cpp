#include "groupsum/restricted.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "groupsum/closed_form.hpp"

namespace groupsum {
namespace {

using MemoKey = std::array<std::uint64_t, 3>;  // {peeled prefix, size, target index}

// f(j, size, g): multisets over the group with the first j excluded elements
// removed.  f(0, ., .) is the full-group closed form.  Writing D for the
// domain with j-1 elements removed, a size-i multiset from D \ {u_j} is a
// multiset from D that does not use u_j, and a multiset from D using u_j at
// least once turns into an arbitrary size-(i-1) multiset from D (u_j stays
// available) after dropping one copy, so
//   f(j, i, g) = f(j-1, i, g) - f(j-1, i-1, g - u_j).
class MultisetPeel {
 public:
  explicit MultisetPeel(const ExcludedSet& excluded) : excluded_(excluded) {}

  Count eval(std::size_t j, std::uint64_t size, const GroupElement& g) {
    const GroupSpec& G = excluded_.group();
    if (size == 0) return is_zero(g) ? 1 : 0;
    if (j == 0) return multiset_count(G, size, g);
    const MemoKey key{j, size, flat_index(G, g)};
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    const GroupElement& u = excluded_.elements()[j - 1];
    const Int value = Int(eval(j - 1, size, g)) - Int(eval(j - 1, size - 1, sub(G, g, u)));
    if (value < 0) throw std::logic_error("multiset peel produced a negative count");
    return memo_.emplace(key, Count(value)).first->second;
  }

 private:
  const ExcludedSet& excluded_;
  std::map<MemoKey, Count> memo_;
};

// h(j, size, g): subsets of the group with the first j excluded elements
// removed.  A subset either avoids u_j (counted at prefix j-1 after the
// identity below) or contains it exactly once; in the latter case the
// remaining size-1 elements still avoid u_j, so the smaller-size term stays at
// prefix j.
class SubsetPeel {
 public:
  explicit SubsetPeel(const ExcludedSet& excluded) : excluded_(excluded) {}

  Count eval(std::size_t j, std::uint64_t size, const GroupElement& g) {
    const GroupSpec& G = excluded_.group();
    if (size == 0) return is_zero(g) ? 1 : 0;
    if (j == 0) return subset_count(G, size, g);
    const MemoKey key{j, size, flat_index(G, g)};
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    const GroupElement& u = excluded_.elements()[j - 1];
    const Int value = Int(eval(j - 1, size, g)) - Int(eval(j, size - 1, sub(G, g, u)));
    if (value < 0) throw std::logic_error("subset peel produced a negative count");
    return memo_.emplace(key, Count(value)).first->second;
  }

 private:
  const ExcludedSet& excluded_;
  std::map<MemoKey, Count> memo_;
};

}  // namespace

ExcludedSet::ExcludedSet(GroupSpec group, std::vector<GroupElement> elems)
    : group_(std::move(group)), elems_(std::move(elems)) {
  for (const GroupElement& g : elems_) require_member(group_, g);
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool ExcludedSet::contains(const GroupElement& g) const {
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

SubsetSumTable subset_sum_table(const ExcludedSet& excluded) {
  SubsetSumTable table;
  table.rows.resize(excluded.size() + 1);
  table.rows[0][zero(excluded.group())] = 1;
  std::size_t used = 0;
  for (const GroupElement& u : excluded.elements()) {
    ++used;
    // descending t so each element is used at most once
    for (std::size_t t = used; t >= 1; --t)
      for (const auto& [h, c] : table.rows[t - 1])
        table.rows[t][add(excluded.group(), h, u)] += c;
  }
  return table;
}

Count multiset_hit_count(const ExcludedSet& excluded, std::uint64_t size,
                         const GroupElement& target) {
  if (size == 0) throw std::domain_error("multiset_hit_count: size must be >= 1");
  if (excluded.empty())
    throw std::domain_error("multiset_hit_count: excluded set must be nonempty");
  const GroupSpec& G = excluded.group();
  require_member(G, target);
  const SubsetSumTable table = subset_sum_table(excluded);
  const std::uint64_t tmax = std::min<std::uint64_t>(size, excluded.size());
  Int acc = 0;
  for (std::uint64_t t = 1; t <= tmax; ++t) {
    for (const auto& [h, c] : table.rows[t]) {
      const Int term = Int(c) * Int(multiset_count(G, size - t, sub(G, target, h)));
      acc += (t % 2 == 1) ? term : -term;
    }
  }
  if (acc < 0) throw std::logic_error("multiset_hit_count: negative inclusion-exclusion total");
  return acc;
}

Count multiset_count_excluding(const ExcludedSet& excluded, std::uint64_t size,
                               const GroupElement& target) {
  const GroupSpec& G = excluded.group();
  require_member(G, target);
  if (size == 0) return is_zero(target) ? 1 : 0;
  if (excluded.empty()) return multiset_count(G, size, target);
  const Int value =
      Int(multiset_count(G, size, target)) - Int(multiset_hit_count(excluded, size, target));
  if (value < 0)
    throw std::logic_error("multiset_count_excluding: hit count exceeds the total");
  return value;
}

Count multiset_count_excluding_peeled(const ExcludedSet& excluded, std::uint64_t size,
                                      const GroupElement& target) {
  require_member(excluded.group(), target);
  MultisetPeel peel(excluded);
  return peel.eval(excluded.size(), size, target);
}

Count subset_count_excluding(const ExcludedSet& excluded, std::uint64_t size,
                             const GroupElement& target) {
  require_member(excluded.group(), target);
  SubsetPeel peel(excluded);
  return peel.eval(excluded.size(), size, target);
}

}  // namespace groupsum
