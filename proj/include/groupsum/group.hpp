#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "groupsum/numtheory.hpp"

namespace groupsum {

// A finite abelian group presented as a direct product of cyclic factors
// Z_{n_1} x ... x Z_{n_k}.  Any list of factors >= 1 is accepted; results only
// depend on the isomorphism type, never on the chosen decomposition.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::uint64_t> orders);

  std::size_t rank() const noexcept { return orders_.size(); }
  const std::vector<std::uint64_t>& orders() const noexcept { return orders_; }
  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t exponent() const noexcept { return exponent_; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::uint64_t> orders_;
  std::uint64_t order_ = 1;     // product of the factor orders
  std::uint64_t exponent_ = 1;  // lcm of the factor orders
};

// Residue vector relative to an owning GroupSpec, stored reduced:
// 0 <= residues[j] < orders()[j].  Ordering is lexicographic.
struct GroupElement {
  std::vector<std::uint64_t> residues;
  auto operator<=>(const GroupElement&) const = default;
};

GroupElement zero(const GroupSpec& group);
bool is_zero(const GroupElement& g);

// Throws std::invalid_argument unless g is a reduced residue vector of group.
void require_member(const GroupSpec& group, const GroupElement& g);

// Number of solutions of d*x = 0, i.e. the size of the d-torsion subgroup:
// the product over factors of gcd(d, n_j).  Requires d >= 1.
std::uint64_t torsion_size(const GroupSpec& group, std::uint64_t d);

// The largest divisor d of exponent() such that g is divisible by d (g = d*h
// for some h).  e_of(zero) == exponent(); e_of never returns less than 1.
std::uint64_t e_of(const GroupSpec& group, const GroupElement& g);

GroupElement add(const GroupSpec& group, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupSpec& group, const GroupElement& a);
GroupElement sub(const GroupSpec& group, const GroupElement& a, const GroupElement& b);

// All group elements in lexicographic residue order.  Refuses (with
// std::invalid_argument) groups too large to materialize.
std::vector<GroupElement> elements(const GroupSpec& group);

// Position of g in the lexicographic enumeration, and its inverse.
std::uint64_t flat_index(const GroupSpec& group, const GroupElement& g);
GroupElement element_at(const GroupSpec& group, std::uint64_t index);

// Text grammar (shared with the command-line tool):
//   groups    "Z4", "Z4xZ6", bare "4x6" (case-insensitive Z and x)
//   elements  "1,3" with one coordinate per factor; coordinates may be
//             negative or out of range and are reduced mod n_j
//   lists     semicolon-separated elements, e.g. "0;1" or "0,1;2,3"
// Parse errors throw std::invalid_argument naming the offending token.
GroupSpec parse_group(std::string_view text);
GroupElement parse_element(const GroupSpec& group, std::string_view text);
std::vector<GroupElement> parse_element_list(const GroupSpec& group, std::string_view text);

std::string format_group(const GroupSpec& group);    // "Z4xZ6"
std::string format_element(const GroupElement& g);   // "1,3"

}  // namespace groupsum
