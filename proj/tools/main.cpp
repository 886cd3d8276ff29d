#include <charconv>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "groupsum/closed_form.hpp"
#include "groupsum/group.hpp"
#include "groupsum/oracle.hpp"
#include "groupsum/restricted.hpp"
#include "groupsum/verify.hpp"

namespace {

using nlohmann::json;
using namespace groupsum;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;        // bad arguments or unparsable input
constexpr int kExitMismatch = 2;     // verification found a disagreement
constexpr int kExitBudget = 3;       // enumeration oracle refused (budget)
constexpr int kExitInternal = 4;     // invariant violation inside the library

std::uint64_t enumeration_budget_from_env() {
  const char* raw = std::getenv("GROUPSUM_ENUM_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationBudget;
  std::uint64_t value = 0;
  const char* end = raw + std::string_view(raw).size();
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end)
    throw std::invalid_argument(std::string("invalid GROUPSUM_ENUM_BUDGET value '") + raw + "'");
  return value;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

json element_to_json(const GroupElement& g) { return json(g.residues); }

struct CountArgs {
  std::string group;
  std::string quantity = "M";
  std::string target;
  std::string exclude;
  std::string format = "text";
  std::uint64_t size = 0;
  bool oracle = false;
};

struct TableArgs {
  std::string group;
  std::string quantity = "M";
  std::string format = "text";
  std::uint64_t max_size = 0;
};

struct VerifyArgs {
  std::uint64_t max_order = 6;
  std::uint64_t max_size = 5;
  std::size_t max_excluded = 2;
  bool inject_mismatch = false;
};

Count evaluate(const GroupSpec& G, const std::string& quantity, const ExcludedSet& excluded,
               std::uint64_t size, const GroupElement& target) {
  if (quantity == "M") return multiset_count_excluding(excluded, size, target);
  if (quantity == "N") return subset_count_excluding(excluded, size, target);
  return partition_count(G, size, target);
}

int run_count(const CountArgs& args) {
  const GroupSpec G = parse_group(args.group);
  const GroupElement target = parse_element(G, args.target);
  const std::vector<GroupElement> excluded_elements = parse_element_list(G, args.exclude);
  if (args.quantity == "P" && !excluded_elements.empty())
    throw std::invalid_argument(
        "quantity P counts sums of nonzero elements and does not take --exclude");
  const ExcludedSet excluded(G, excluded_elements);

  const Count value = evaluate(G, args.quantity, excluded, args.size, target);

  if (args.oracle) {
    const std::uint64_t budget = enumeration_budget_from_env();
    Count reference;
    if (args.quantity == "M")
      reference = brute_multiset_count(G, excluded, args.size, target, budget);
    else if (args.quantity == "N")
      reference = brute_subset_count(G, excluded, args.size, target, budget);
    else
      reference = brute_multiset_count(G, ExcludedSet(G, {zero(G)}), args.size, target, budget);
    if (reference != value) {
      std::cerr << "mismatch: quantity=" << args.quantity << " group=" << format_group(G)
                << " size=" << args.size << " target=" << format_element(target)
                << " closed_form=" << value.get_str()
                << " enumeration=" << reference.get_str() << "\n";
      return kExitMismatch;
    }
  }

  if (args.format == "json") {
    json j;
    j["group"] = G.orders();
    j["quantity"] = args.quantity;
    j["size"] = args.size;
    j["target"] = element_to_json(target);
    json ex = json::array();
    for (const GroupElement& e : excluded.elements()) ex.push_back(element_to_json(e));
    j["exclude"] = ex;
    j["count"] = value.get_str();
    std::cout << j.dump(2) << "\n";
  } else if (args.format == "csv") {
    std::cout << "size,target,count\n"
              << args.size << "," << csv_field(format_element(target)) << ","
              << value.get_str() << "\n";
  } else {
    std::cout << value.get_str() << "\n";
  }
  return kExitOk;
}

int run_table(const TableArgs& args) {
  const GroupSpec G = parse_group(args.group);
  const ExcludedSet none = ExcludedSet::none(G);
  const std::vector<GroupElement> elems = elements(G);

  if (args.format == "json") {
    json j;
    j["group"] = G.orders();
    j["quantity"] = args.quantity;
    j["max_size"] = args.max_size;
    json rows = json::array();
    for (std::uint64_t size = 0; size <= args.max_size; ++size) {
      for (const GroupElement& g : elems) {
        json row;
        row["size"] = size;
        row["target"] = element_to_json(g);
        row["count"] = evaluate(G, args.quantity, none, size, g).get_str();
        rows.push_back(row);
      }
    }
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  const bool csv = args.format == "csv";
  if (csv) std::cout << "size,target,count\n";
  for (std::uint64_t size = 0; size <= args.max_size; ++size) {
    for (const GroupElement& g : elems) {
      const Count value = evaluate(G, args.quantity, none, size, g);
      if (csv)
        std::cout << size << "," << csv_field(format_element(g)) << "," << value.get_str()
                  << "\n";
      else
        std::cout << size << " " << format_element(g) << " " << value.get_str() << "\n";
    }
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& args) {
  VerifyOptions options;
  options.max_order = args.max_order;
  options.max_size = args.max_size;
  options.max_excluded = args.max_excluded;
  options.enumeration_budget = enumeration_budget_from_env();
  options.inject_fault = args.inject_mismatch;

  const VerifyReport report = run_verification(options);
  std::cout << "groups checked: " << report.groups_checked << "\n"
            << "comparisons:    " << report.comparisons << "\n"
            << "mismatches:     " << report.mismatches.size() << "\n";
  for (const VerifyMismatch& m : report.mismatches) std::cerr << describe(m) << "\n";
  std::cout << "result: " << (report.ok() ? "OK" : "FAIL") << "\n";
  return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact counts of subsets, multisubsets and partitions with a prescribed "
      "sum in a finite abelian group"};
  app.set_version_flag("--version", "groupsum 0.1.0");
  app.require_subcommand(1);

  CountArgs count_args;
  CLI::App* count = app.add_subcommand(
      "count", "Count selections of a given size with a prescribed sum");
  count->add_option("--group", count_args.group, "Group, e.g. Z4 or Z4xZ6 or 4x6")->required();
  count->add_option("--quantity", count_args.quantity,
                    "M = multisubsets, N = subsets, P = multisets of nonzero elements")
      ->check(CLI::IsMember({"M", "N", "P"}));
  count->add_option("--size", count_args.size, "Number of elements selected")->required();
  count->add_option("--target", count_args.target, "Required sum, e.g. 1 or 1,3")->required();
  count->add_option("--exclude", count_args.exclude,
                    "Semicolon-separated elements removed from the domain, e.g. 0;1");
  count->add_option("--format", count_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  count->add_flag("--oracle", count_args.oracle,
                  "Re-check the result by exhaustive enumeration (budgeted)");

  TableArgs table_args;
  CLI::App* table = app.add_subcommand(
      "table", "Print counts for every size up to a bound and every target");
  table->add_option("--group", table_args.group, "Group, e.g. Z4 or Z4xZ6")->required();
  table->add_option("--quantity", table_args.quantity, "M, N or P")
      ->check(CLI::IsMember({"M", "N", "P"}));
  table->add_option("--max-size", table_args.max_size, "Largest size to tabulate")->required();
  table->add_option("--format", table_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check the closed forms against independent oracles");
  verify->add_option("--max-order", verify_args.max_order,
                     "Sweep all group presentations up to this order");
  verify->add_option("--max-size", verify_args.max_size, "Largest selection size checked");
  verify->add_option("--max-excluded", verify_args.max_excluded,
                     "Largest excluded-set size checked");
  verify->add_flag("--inject-mismatch", verify_args.inject_mismatch,
                   "Deliberately corrupt one value (self-test of the checker)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(count_args);
    if (table->parsed()) return run_table(table_args);
    return run_verify(verify_args);
  } catch (const EnumerationBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
