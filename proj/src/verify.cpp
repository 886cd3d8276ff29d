#include "groupsum/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "groupsum/closed_form.hpp"
#include "groupsum/restricted.hpp"

namespace groupsum {
namespace {

void collect_factorizations(std::uint64_t max_order, std::uint64_t min_factor,
                            std::vector<std::uint64_t>& current,
                            std::vector<std::vector<std::uint64_t>>& out) {
  for (std::uint64_t f = min_factor; f <= max_order; ++f) {
    current.push_back(f);
    out.push_back(current);
    if (f <= max_order / f) collect_factorizations(max_order / f, f, current, out);
    current.pop_back();
  }
}

struct Checker {
  VerifyReport& report;
  bool fault_pending;

  void check(const char* quantity, const char* oracle_name, const GroupSpec& group,
             const std::vector<GroupElement>& excluded, std::uint64_t size,
             const GroupElement& target, const Count& expected, const Count& got) {
    ++report.comparisons;
    if (expected == got) return;
    report.mismatches.push_back(VerifyMismatch{quantity, oracle_name, group, excluded, size,
                                               target, expected.get_str(), got.get_str()});
  }
};

// Enumerate all index subsets of {0..n-1} with 1 <= size <= max_subset_size.
void for_each_subset(std::size_t n, std::size_t max_subset_size,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> picked;
  const std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!picked.empty()) fn(picked);
    if (picked.size() == max_subset_size) return;
    for (std::size_t idx = start; idx < n; ++idx) {
      picked.push_back(idx);
      rec(idx + 1);
      picked.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<GroupSpec> groups_up_to_order(std::uint64_t max_order) {
  std::vector<std::vector<std::uint64_t>> factor_lists;
  factor_lists.push_back({1});
  if (max_order >= 2) {
    std::vector<std::uint64_t> current;
    collect_factorizations(max_order, 2, current, factor_lists);
  }
  std::vector<GroupSpec> out;
  out.reserve(factor_lists.size());
  for (std::vector<std::uint64_t>& f : factor_lists) out.emplace_back(std::move(f));
  std::sort(out.begin(), out.end(), [](const GroupSpec& a, const GroupSpec& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.orders() < b.orders();
  });
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  Checker checker{report, options.inject_fault};
  const std::vector<GroupElement> no_excluded;

  for (const GroupSpec& G : groups_up_to_order(options.max_order)) {
    ++report.groups_checked;
    const std::vector<GroupElement> elems = elements(G);
    const ExcludedSet none = ExcludedSet::none(G);
    const ExcludedSet zero_only(G, {zero(G)});

    const CountTable m_series = series_multiset_table(G, none, options.max_size);
    const CountTable n_series = series_subset_table(G, none, options.max_size);
    const CountTable p_series = series_multiset_table(G, zero_only, options.max_size);

    const bool prime_power_cyclic = [&] {
      if (G.rank() != 1 || G.order() < 2) return false;
      return factorize(G.order()).size() == 1;
    }();

    for (std::uint64_t size = 0; size <= options.max_size; ++size) {
      for (const GroupElement& g : elems) {
        Count m = multiset_count(G, size, g);
        if (checker.fault_pending) {
          m += 1;  // deliberate corruption; the sweep must flag it
          checker.fault_pending = false;
        }
        checker.check("M", "enumeration", G, no_excluded, size, g,
                      brute_multiset_count(G, none, size, g, options.enumeration_budget), m);
        checker.check("M", "series", G, no_excluded, size, g, m_series.at(size, g), m);

        const Count n = subset_count(G, size, g);
        checker.check("N", "enumeration", G, no_excluded, size, g,
                      brute_subset_count(G, none, size, g, options.enumeration_budget), n);
        checker.check("N", "series", G, no_excluded, size, g, n_series.at(size, g), n);

        const Count p = partition_count(G, size, g);
        checker.check("P", "enumeration", G, no_excluded, size, g,
                      brute_multiset_count(G, zero_only, size, g, options.enumeration_budget),
                      p);
        checker.check("P", "series", G, no_excluded, size, g, p_series.at(size, g), p);

        if (size >= 1 && std::gcd(size, G.exponent()) == 1)
          checker.check("M", "coprime shortcut", G, no_excluded, size, g,
                        multiset_count_coprime(G, size, g), m);
        if (size >= 1 && prime_power_cyclic) {
          const Factorization f = factorize(G.order());
          checker.check("M", "prime-power form", G, no_excluded, size, g,
                        multiset_count_prime_power(f[0].prime, f[0].exponent, size,
                                                   g.residues[0]),
                        m);
        }
      }
    }

    if (options.max_excluded == 0) continue;
    for_each_subset(elems.size(), options.max_excluded, [&](const std::vector<std::size_t>& idx) {
      std::vector<GroupElement> chosen;
      chosen.reserve(idx.size());
      for (std::size_t k : idx) chosen.push_back(elems[k]);
      const ExcludedSet excluded(G, chosen);
      for (std::uint64_t size = 0; size <= options.max_size; ++size) {
        for (const GroupElement& g : elems) {
          const Count mr = multiset_count_excluding(excluded, size, g);
          checker.check("M", "peeling", G, chosen, size, g,
                        multiset_count_excluding_peeled(excluded, size, g), mr);
          checker.check("M", "enumeration", G, chosen, size, g,
                        brute_multiset_count(G, excluded, size, g, options.enumeration_budget),
                        mr);
          const Count nr = subset_count_excluding(excluded, size, g);
          checker.check("N", "enumeration", G, chosen, size, g,
                        brute_subset_count(G, excluded, size, g, options.enumeration_budget),
                        nr);
        }
      }
    });
  }
  return report;
}

std::string describe(const VerifyMismatch& m) {
  std::string out = "mismatch: quantity=" + m.quantity + " oracle=" + m.oracle +
                    " group=" + format_group(m.group);
  out += " exclude=";
  if (m.excluded.empty()) {
    out += "-";
  } else {
    for (std::size_t j = 0; j < m.excluded.size(); ++j) {
      if (j > 0) out += ';';
      out += format_element(m.excluded[j]);
    }
  }
  out += " size=" + std::to_string(m.size) + " target=" + format_element(m.target) +
         " expected=" + m.expected + " got=" + m.got;
  return out;
}

}  // namespace groupsum
