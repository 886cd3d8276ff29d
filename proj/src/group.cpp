#include "groupsum/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace groupsum {
namespace {

constexpr std::uint64_t kMaxEnumerableOrder = std::uint64_t{1} << 32;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

[[noreturn]] void bad_token(const std::string& what, std::string_view token) {
  throw std::invalid_argument(what + " '" + std::string(token) + "'");
}

std::uint64_t reduce_mod(std::int64_t value, std::uint64_t modulus) {
  const auto m = static_cast<__int128>(modulus);
  __int128 r = static_cast<__int128>(value) % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

// Is g divisible by d, i.e. does d*x = g have a solution?  For a cyclic factor
// Z_n this holds iff gcd(d, n) divides the coordinate; the product group is
// handled coordinate-wise.
bool divisible_by(const GroupSpec& group, const GroupElement& g, std::uint64_t d) {
  for (std::size_t j = 0; j < group.rank(); ++j) {
    const std::uint64_t gd = std::gcd(d, group.orders()[j]);
    if (g.residues[j] % gd != 0) return false;
  }
  return true;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::uint64_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty())
    throw std::invalid_argument("GroupSpec: at least one cyclic factor is required");
  for (std::uint64_t n : orders_) {
    if (n == 0) throw std::invalid_argument("GroupSpec: cyclic factor orders must be >= 1");
    order_ = checked_mul(order_, n);
    exponent_ = checked_lcm(exponent_, n);
  }
}

GroupElement zero(const GroupSpec& group) {
  return GroupElement{std::vector<std::uint64_t>(group.rank(), 0)};
}

bool is_zero(const GroupElement& g) {
  return std::all_of(g.residues.begin(), g.residues.end(),
                     [](std::uint64_t r) { return r == 0; });
}

void require_member(const GroupSpec& group, const GroupElement& g) {
  if (g.residues.size() != group.rank())
    throw std::invalid_argument("element rank does not match the group");
  for (std::size_t j = 0; j < group.rank(); ++j)
    if (g.residues[j] >= group.orders()[j])
      throw std::invalid_argument("element coordinate out of range");
}

std::uint64_t torsion_size(const GroupSpec& group, std::uint64_t d) {
  if (d == 0) throw std::domain_error("torsion_size: d must be positive");
  std::uint64_t size = 1;
  for (std::uint64_t n : group.orders()) size *= std::gcd(d, n);  // <= order()
  return size;
}

std::uint64_t e_of(const GroupSpec& group, const GroupElement& g) {
  require_member(group, g);
  const std::vector<std::uint64_t> divs = divisors(group.exponent());
  for (auto it = divs.rbegin(); it != divs.rend(); ++it)
    if (divisible_by(group, g, *it)) return *it;
  return 1;  // unreachable: d == 1 always divides
}

GroupElement add(const GroupSpec& group, const GroupElement& a, const GroupElement& b) {
  require_member(group, a);
  require_member(group, b);
  GroupElement out = a;
  for (std::size_t j = 0; j < group.rank(); ++j) {
    out.residues[j] += b.residues[j];
    if (out.residues[j] >= group.orders()[j]) out.residues[j] -= group.orders()[j];
  }
  return out;
}

GroupElement neg(const GroupSpec& group, const GroupElement& a) {
  require_member(group, a);
  GroupElement out = a;
  for (std::size_t j = 0; j < group.rank(); ++j)
    out.residues[j] = a.residues[j] == 0 ? 0 : group.orders()[j] - a.residues[j];
  return out;
}

GroupElement sub(const GroupSpec& group, const GroupElement& a, const GroupElement& b) {
  return add(group, a, neg(group, b));
}

std::vector<GroupElement> elements(const GroupSpec& group) {
  if (group.order() > kMaxEnumerableOrder)
    throw std::invalid_argument("elements: group too large to materialize");
  std::vector<GroupElement> out;
  out.reserve(group.order());
  GroupElement cur = zero(group);
  while (true) {
    out.push_back(cur);
    // lexicographic increment, last coordinate fastest
    std::size_t j = group.rank();
    while (j > 0) {
      --j;
      if (++cur.residues[j] < group.orders()[j]) break;
      cur.residues[j] = 0;
      if (j == 0) return out;
    }
  }
}

std::uint64_t flat_index(const GroupSpec& group, const GroupElement& g) {
  require_member(group, g);
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < group.rank(); ++j)
    idx = idx * group.orders()[j] + g.residues[j];
  return idx;
}

GroupElement element_at(const GroupSpec& group, std::uint64_t index) {
  if (index >= group.order()) throw std::out_of_range("element_at: index out of range");
  GroupElement out = zero(group);
  for (std::size_t j = group.rank(); j > 0; --j) {
    out.residues[j - 1] = index % group.orders()[j - 1];
    index /= group.orders()[j - 1];
  }
  return out;
}

GroupSpec parse_group(std::string_view text) {
  const std::string_view whole = trim(text);
  if (whole.empty()) throw std::invalid_argument("empty group description");
  std::vector<std::uint64_t> orders;
  for (std::string_view raw : split(whole, 'x')) {
    std::string_view tok = trim(raw);
    // Uppercase X also separates factors; handle "Z4XZ6" by re-splitting.
    if (tok.find('X') != std::string_view::npos) {
      for (std::string_view raw2 : split(tok, 'X')) {
        std::string_view t2 = trim(raw2);
        if (t2.empty()) bad_token("invalid group factor", raw);
        if (t2.front() == 'Z' || t2.front() == 'z') t2.remove_prefix(1);
        std::uint64_t n = 0;
        const auto [ptr, ec] = std::from_chars(t2.data(), t2.data() + t2.size(), n);
        if (ec != std::errc{} || ptr != t2.data() + t2.size() || n == 0)
          bad_token("invalid group factor", raw2);
        orders.push_back(n);
      }
      continue;
    }
    if (tok.empty()) bad_token("invalid group factor", raw);
    if (tok.front() == 'Z' || tok.front() == 'z') tok.remove_prefix(1);
    std::uint64_t n = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || n == 0)
      bad_token("invalid group factor", raw);
    orders.push_back(n);
  }
  return GroupSpec(std::move(orders));
}

GroupElement parse_element(const GroupSpec& group, std::string_view text) {
  const std::vector<std::string_view> tokens = split(text, ',');
  if (tokens.size() != group.rank())
    throw std::invalid_argument("element '" + std::string(text) + "' has " +
                                std::to_string(tokens.size()) + " coordinate(s); group " +
                                format_group(group) + " needs " + std::to_string(group.rank()));
  GroupElement out = zero(group);
  for (std::size_t j = 0; j < tokens.size(); ++j) {
    const std::string_view tok = trim(tokens[j]);
    if (tok.empty()) bad_token("invalid element coordinate", tokens[j]);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      bad_token("invalid element coordinate", tok);
    out.residues[j] = reduce_mod(v, group.orders()[j]);
  }
  return out;
}

std::vector<GroupElement> parse_element_list(const GroupSpec& group, std::string_view text) {
  std::vector<GroupElement> out;
  if (trim(text).empty()) return out;
  for (std::string_view part : split(text, ';')) out.push_back(parse_element(group, part));
  return out;
}

std::string format_group(const GroupSpec& group) {
  std::string out;
  for (std::size_t j = 0; j < group.rank(); ++j) {
    if (j > 0) out += 'x';
    out += 'Z';
    out += std::to_string(group.orders()[j]);
  }
  return out;
}

std::string format_element(const GroupElement& g) {
  std::string out;
  for (std::size_t j = 0; j < g.residues.size(); ++j) {
    if (j > 0) out += ',';
    out += std::to_string(g.residues[j]);
  }
  return out;
}

}  // namespace groupsum
