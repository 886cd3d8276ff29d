// Acceptance sweep for the counting library: each criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "groupsum/closed_form.hpp"
#include "groupsum/group.hpp"
#include "groupsum/oracle.hpp"
#include "groupsum/restricted.hpp"
#include "groupsum/verify.hpp"

using namespace groupsum;

namespace {

GroupElement el(std::initializer_list<std::uint64_t> residues) {
  return GroupElement{std::vector<std::uint64_t>(residues)};
}

void expect(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

void expect_eq(const Count& actual, const Count& wanted, const std::string& what) {
  if (actual != wanted)
    throw std::runtime_error(what + ": got " + actual.get_str() + ", wanted " +
                             wanted.get_str());
}

struct Criterion {
  std::string name;
  double time_limit_seconds;  // 0 = no limit enforced
  std::function<void(std::string& detail)> body;
};

// --- criterion bodies -------------------------------------------------------

void reference_values(std::string& detail) {
  const GroupSpec z4({4});
  expect_eq(multiset_count(z4, 3, el({1})), 5, "M(Z4,3,1)");
  expect_eq(multiset_count(z4, 2, el({1})), 2, "M(Z4,2,1)");
  expect_eq(multiset_count(z4, 2, el({0})), 3, "M(Z4,2,0)");
  expect_eq(multiset_count(z4, 2, el({3})), 2, "M(Z4,2,3)");
  expect_eq(multiset_count(z4, 1, el({0})), 1, "M(Z4,1,0)");
  expect_eq(multiset_count(z4, 1, el({2})), 1, "M(Z4,1,2)");
  expect_eq(multiset_count(z4, 1, el({3})), 1, "M(Z4,1,3)");
  expect_eq(multiset_count(z4, 0, el({2})), 0, "M(Z4,0,2)");
  expect_eq(multiset_count(z4, 0, el({0})), 1, "M(Z4,0,0)");

  const ExcludedSet s01(z4, {el({0}), el({1})});
  expect_eq(multiset_hit_count(s01, 3, el({1})), 4, "hits for S={0,1}");
  expect_eq(multiset_count_excluding(s01, 3, el({1})), 1, "M without {0,1}");
  expect_eq(multiset_count_excluding_peeled(s01, 3, el({1})), 1, "M without {0,1}, peeled");
  const ExcludedSet s012(z4, {el({0}), el({1}), el({2})});
  expect_eq(multiset_hit_count(s012, 3, el({1})), 4, "hits for S={0,1,2}");
  expect_eq(multiset_count_excluding(s012, 3, el({1})), 1, "M without {0,1,2}");

  expect_eq(subset_count(z4, 2, el({0})), 1, "N(Z4,2,0)");
  expect_eq(subset_count(z4, 1, el({0})), 1, "N(Z4,1,0)");
  const ExcludedSet no_zero(z4, {el({0})});
  expect_eq(subset_count_excluding(no_zero, 2, el({0})), 1, "N without {0}");

  expect_eq(partition_count(z4, 2, el({0})), 2, "P(Z4,2,0)");
  expect_eq(partition_count(z4, 1, el({0})), 0, "P(Z4,1,0)");

  const GroupSpec z6({6});
  expect_eq(multiset_count(z6, 5, el({0})), 42, "M(Z6,5,0)");
  expect_eq(multiset_count_coprime(z6, 5, el({0})), 42, "M(Z6,5,0) shortcut");
  detail = "all reference values exact";
}

void full_domain_oracle_agreement(std::string& detail) {
  VerifyOptions options;
  options.max_order = 10;
  options.max_size = 8;
  options.max_excluded = 0;
  const VerifyReport report = run_verification(options);
  expect(report.groups_checked == 16, "expected 16 group presentations up to order 10");
  for (const VerifyMismatch& m : report.mismatches) throw std::runtime_error(describe(m));
  detail = std::to_string(report.comparisons) + " comparisons across " +
           std::to_string(report.groups_checked) + " groups";
}

void restricted_oracle_agreement(std::string& detail) {
  VerifyOptions options;
  options.max_order = 8;
  options.max_size = 6;
  options.max_excluded = 3;
  const VerifyReport report = run_verification(options);
  for (const VerifyMismatch& m : report.mismatches) throw std::runtime_error(describe(m));
  detail = std::to_string(report.comparisons) + " comparisons";
}

void mass_identities(std::string& detail) {
  std::uint64_t identities = 0;
  for (const GroupSpec& G : groups_up_to_order(10)) {
    const Int n(static_cast<unsigned long>(G.order()));
    for (std::uint64_t size = 0; size <= 8; ++size) {
      Count m_total = 0, n_total = 0;
      for (const GroupElement& g : elements(G)) {
        m_total += multiset_count(G, size, g);
        n_total += subset_count(G, size, g);
      }
      const Int s(static_cast<unsigned long>(size));
      expect_eq(m_total, binomial(n + s - 1, s),
                "multiset mass for " + format_group(G) + " size " + std::to_string(size));
      expect_eq(n_total, binomial(n, s),
                "subset mass for " + format_group(G) + " size " + std::to_string(size));
      identities += 2;
    }
  }
  detail = std::to_string(identities) + " identities";
}

void shortcut_agreement(std::string& detail) {
  std::uint64_t checks = 0;
  for (const GroupSpec& G : groups_up_to_order(10)) {
    for (std::uint64_t size = 1; size <= 8; ++size) {
      if (std::gcd(size, G.exponent()) != 1) continue;
      for (const GroupElement& g : elements(G)) {
        expect_eq(multiset_count_coprime(G, size, g), multiset_count(G, size, g),
                  "coprime shortcut for " + format_group(G) + " size " + std::to_string(size) +
                      " target " + format_element(g));
        ++checks;
      }
    }
  }
  for (std::uint64_t p : {2ull, 3ull}) {
    std::uint64_t n = 1;
    for (unsigned m = 1; m <= 4; ++m) {
      n *= p;
      const GroupSpec cyclic({n});
      for (std::uint64_t size = 1; size <= 50; ++size) {
        for (std::uint64_t target = 0; target < n; ++target) {
          expect_eq(multiset_count_prime_power(p, m, size, target),
                    multiset_count(cyclic, size, el({target})),
                    "prime-power form p=" + std::to_string(p) + " m=" + std::to_string(m) +
                        " size=" + std::to_string(size) + " target=" + std::to_string(target));
          ++checks;
        }
      }
    }
  }
  detail = std::to_string(checks) + " agreements";
}

void divisibility_class_invariance(std::string& detail) {
  std::uint64_t classes = 0;
  for (const GroupSpec& G : groups_up_to_order(10)) {
    for (std::uint64_t size = 0; size <= 8; ++size) {
      std::map<std::uint64_t, std::array<Count, 3>> first_in_class;
      for (const GroupElement& g : elements(G)) {
        const std::uint64_t cls = e_of(G, g);
        const std::array<Count, 3> values = {multiset_count(G, size, g),
                                             subset_count(G, size, g),
                                             partition_count(G, size, g)};
        const auto [it, inserted] = first_in_class.emplace(cls, values);
        if (!inserted)
          expect(it->second == values,
                 "counts differ inside one divisibility class: " + format_group(G) +
                     " size " + std::to_string(size) + " target " + format_element(g));
      }
      classes += first_in_class.size();
    }
  }
  detail = std::to_string(classes) + " classes compared";
}

void partition_telescoping(std::string& detail) {
  std::uint64_t checks = 0;
  for (const GroupSpec& G : groups_up_to_order(10)) {
    for (const GroupElement& g : elements(G)) {
      Count prefix = 0;
      for (std::uint64_t size = 0; size <= 8; ++size) {
        prefix += partition_count(G, size, g);
        expect_eq(prefix, multiset_count(G, size, g),
                  "partition prefix sums for " + format_group(G) + " target " +
                      format_element(g) + " size " + std::to_string(size));
        ++checks;
      }
    }
  }
  detail = std::to_string(checks) + " prefix sums";
}

void removal_direction_control(std::string& detail) {
  // Subtracting full-group subset counts of consecutive sizes is NOT the count
  // over the domain without zero; the peeling recursion must keep the removed
  // element out of the smaller-size term.  The deliberately wrong combination
  // gives 0 here, while the true count (and the implementation) gives 1.
  const GroupSpec z4({4});
  const Count wrong = subset_count(z4, 2, el({0})) - subset_count(z4, 1, el({0}));
  expect_eq(wrong, 0, "naive subtraction");
  const ExcludedSet no_zero(z4, {el({0})});
  expect_eq(subset_count_excluding(no_zero, 2, el({0})), 1, "subsets of Z4 minus {0}");
  expect_eq(brute_subset_count(z4, no_zero, 2, el({0}), kDefaultEnumerationBudget), 1,
            "enumeration of Z4 minus {0}");
  detail = "wrong combination 0 != implemented 1";
}

void coset_structural_zeros(std::string& detail) {
  // In Z2 x Z3 remove every element outside the subgroup Z2 x {0}; sums can
  // then never leave the subgroup.
  const GroupSpec G({2, 3});
  std::vector<GroupElement> outside;
  for (const GroupElement& g : elements(G))
    if (g.residues[1] != 0) outside.push_back(g);
  const ExcludedSet excluded(G, outside);
  std::uint64_t zero_cells = 0;
  for (std::uint64_t size = 0; size <= 6; ++size) {
    for (const GroupElement& g : elements(G)) {
      const Count value = multiset_count_excluding(excluded, size, g);
      expect_eq(value, brute_multiset_count(G, excluded, size, g, kDefaultEnumerationBudget),
                "restricted count vs enumeration at size " + std::to_string(size) +
                    " target " + format_element(g));
      if (g.residues[1] != 0) {
        expect_eq(value, 0, "target outside the subgroup must be unreachable");
        ++zero_cells;
      } else if (size >= 1) {
        expect(value > 0, "target " + format_element(g) + " inside the subgroup must be "
                          "reachable at size " + std::to_string(size));
      }
    }
  }
  expect_eq(multiset_count_excluding(excluded, 0, el({0, 0})), 1, "empty multiset");
  detail = std::to_string(zero_cells) + " structural zeros confirmed";
}

void integrality_guard(std::string& detail) {
  // Every closed form divides by the group order behind a remainder check that
  // throws std::logic_error; the whole sweep must complete without one.
  std::uint64_t evaluations = 0;
  try {
    for (const GroupSpec& G : groups_up_to_order(10)) {
      for (std::uint64_t size = 0; size <= 8; ++size) {
        for (const GroupElement& g : elements(G)) {
          (void)multiset_count(G, size, g);
          (void)subset_count(G, size, g);
          (void)partition_count(G, size, g);
          evaluations += 3;
        }
      }
    }
  } catch (const std::logic_error& e) {
    throw std::runtime_error(std::string("divisibility assertion fired: ") + e.what());
  }
  detail = std::to_string(evaluations) + " exact divisions";
}

void large_size_smoke(std::string& detail) {
  const GroupSpec G({2, 4, 8});
  const GroupElement g = el({1, 2, 3});
  const std::uint64_t size = 10000;
  const Count value = multiset_count(G, size, g);
  expect(value.get_str().size() >= 100, "expected a multi-hundred-digit exact count");

  // Re-evaluate the divisor sum in ascending and descending order; both must
  // reproduce the library value exactly.
  const std::uint64_t n = G.order();
  const std::uint64_t eg = e_of(G, g);
  const std::vector<std::uint64_t> divs = divisors(std::gcd(G.exponent(), size));
  Int forward = 0;
  for (std::uint64_t s : divs)
    forward += binomial(Int(static_cast<unsigned long>(n / s)) +
                            Int(static_cast<unsigned long>(size / s)) - 1,
                        Int(static_cast<unsigned long>(size / s))) *
               mobius_sum(s, eg, G);
  Int backward = 0;
  for (auto it = divs.rbegin(); it != divs.rend(); ++it)
    backward += binomial(Int(static_cast<unsigned long>(n / *it)) +
                             Int(static_cast<unsigned long>(size / *it)) - 1,
                         Int(static_cast<unsigned long>(size / *it))) *
                mobius_sum(*it, eg, G);
  expect(forward == backward, "divisor sum depends on evaluation order");
  expect_eq(Count(forward / n), value, "library value vs re-evaluated sum");
  detail = std::to_string(value.get_str().size()) + "-digit result";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"reference-values", 1.0, reference_values},
      {"full-domain-oracle-agreement", 120.0, full_domain_oracle_agreement},
      {"restricted-oracle-agreement", 300.0, restricted_oracle_agreement},
      {"mass-identities", 0.0, mass_identities},
      {"shortcut-agreement", 30.0, shortcut_agreement},
      {"divisibility-class-invariance", 0.0, divisibility_class_invariance},
      {"partition-telescoping", 0.0, partition_telescoping},
      {"removal-direction-control", 0.0, removal_direction_control},
      {"coset-structural-zeros", 0.0, coset_structural_zeros},
      {"integrality-guard", 0.0, integrality_guard},
      {"large-size-smoke", 1.0, large_size_smoke},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    std::string failure;
    try {
      criterion.body(detail);
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && criterion.time_limit_seconds > 0 &&
        seconds > criterion.time_limit_seconds) {
      std::ostringstream over;
      over << "took " << std::fixed << std::setprecision(2) << seconds
           << "s, limit is " << criterion.time_limit_seconds << "s";
      failure = over.str();
    }
    std::ostringstream line;
    line << (failure.empty() ? "[PASS] " : "[FAIL] ") << std::left << std::setw(30)
         << criterion.name << " (" << std::fixed << std::setprecision(2) << seconds << "s)";
    if (failure.empty() && !detail.empty()) line << " " << detail;
    if (!failure.empty()) line << " " << failure;
    std::cout << line.str() << std::endl;
    if (!failure.empty()) ++failures;
  }

  if (failures == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " of " << criteria.size() << " criteria FAILED"
            << std::endl;
  return 1;
}
