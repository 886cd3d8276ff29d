#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "groupsum/closed_form.hpp"
#include "groupsum/group.hpp"
#include "groupsum/oracle.hpp"
#include "groupsum/restricted.hpp"

namespace py = pybind11;
using namespace groupsum;

namespace {

// Counts can exceed every machine-word type; hand them to Python as exact ints
// via their decimal representation.
py::object count_to_python(const Count& value) {
  PyObject* obj = PyLong_FromString(value.get_str().c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

std::uint64_t reduce_coordinate(long long value, std::uint64_t modulus) {
  const auto m = static_cast<__int128>(modulus);
  __int128 r = static_cast<__int128>(value) % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

// Accepts a bare int (rank-1 groups) or any sequence of ints; coordinates are
// reduced modulo the factor orders, so negatives are fine.
GroupElement element_from_python(const GroupSpec& group, const py::object& obj) {
  std::vector<long long> coords;
  if (py::isinstance<py::int_>(obj)) {
    if (group.rank() != 1)
      throw std::invalid_argument("a bare integer element needs a rank-1 group; pass a tuple");
    coords.push_back(obj.cast<long long>());
  } else {
    coords = obj.cast<std::vector<long long>>();
  }
  if (coords.size() != group.rank())
    throw std::invalid_argument("element has " + std::to_string(coords.size()) +
                                " coordinate(s); group " + format_group(group) + " needs " +
                                std::to_string(group.rank()));
  GroupElement out = zero(group);
  for (std::size_t j = 0; j < coords.size(); ++j)
    out.residues[j] = reduce_coordinate(coords[j], group.orders()[j]);
  return out;
}

ExcludedSet excluded_from_python(const GroupSpec& group, const py::object& exclude) {
  std::vector<GroupElement> elems;
  if (!exclude.is_none())
    for (const py::handle item : exclude)
      elems.push_back(element_from_python(group, py::reinterpret_borrow<py::object>(item)));
  return ExcludedSet(group, std::move(elems));
}

py::tuple element_to_python(const GroupElement& g) {
  py::tuple out(g.residues.size());
  for (std::size_t j = 0; j < g.residues.size(); ++j) out[j] = g.residues[j];
  return out;
}

py::list table_to_python(const GroupSpec& group, const ExcludedSet& excluded,
                         std::uint64_t max_size, bool multisets) {
  py::list rows;
  for (std::uint64_t size = 0; size <= max_size; ++size) {
    for (const GroupElement& g : elements(group)) {
      const Count value = multisets ? multiset_count_excluding(excluded, size, g)
                                    : subset_count_excluding(excluded, size, g);
      rows.append(py::make_tuple(size, element_to_python(g), count_to_python(value)));
    }
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact counts of subsets, multisubsets and partitions with a prescribed sum "
      "in a finite abelian group";
  m.attr("__version__") = "0.1.0";

  py::class_<GroupSpec>(m, "Group")
      .def(py::init([](const py::object& spec) {
             if (py::isinstance<py::str>(spec)) return parse_group(spec.cast<std::string>());
             return GroupSpec(spec.cast<std::vector<std::uint64_t>>());
           }),
           py::arg("spec"),
           "Create from a string like 'Z4xZ6' or from a list of cyclic factor orders")
      .def_property_readonly("orders",
                             [](const GroupSpec& g) { return g.orders(); },
                             "Cyclic factor orders")
      .def("order", &GroupSpec::order, "Total number of elements")
      .def("exponent", &GroupSpec::exponent, "Least common multiple of the factor orders")
      .def(
          "torsion_size",
          [](const GroupSpec& g, std::uint64_t d) { return torsion_size(g, d); }, py::arg("d"),
          "Number of elements x with d*x = 0")
      .def(
          "divisibility_depth",
          [](const GroupSpec& g, const py::object& x) {
            return e_of(g, element_from_python(g, x));
          },
          py::arg("element"),
          "Largest divisor d of the exponent such that the element is d times something")
      .def(
          "elements",
          [](const GroupSpec& g) {
            py::list out;
            for (const GroupElement& e : elements(g)) out.append(element_to_python(e));
            return out;
          },
          "All elements as tuples, in lexicographic order")
      .def(
          "add",
          [](const GroupSpec& g, const py::object& a, const py::object& b) {
            return element_to_python(add(g, element_from_python(g, a), element_from_python(g, b)));
          },
          py::arg("a"), py::arg("b"))
      .def(
          "neg",
          [](const GroupSpec& g, const py::object& a) {
            return element_to_python(neg(g, element_from_python(g, a)));
          },
          py::arg("a"))
      .def(
          "sub",
          [](const GroupSpec& g, const py::object& a, const py::object& b) {
            return element_to_python(sub(g, element_from_python(g, a), element_from_python(g, b)));
          },
          py::arg("a"), py::arg("b"))
      .def("__eq__", [](const GroupSpec& a, const GroupSpec& b) { return a == b; })
      .def("__ne__", [](const GroupSpec& a, const GroupSpec& b) { return !(a == b); })
      .def("__repr__", [](const GroupSpec& g) { return "Group('" + format_group(g) + "')"; })
      .def("__str__", [](const GroupSpec& g) { return format_group(g); });

  m.def(
      "multiset_count",
      [](const GroupSpec& group, std::uint64_t size, const py::object& target,
         const py::object& exclude) {
        return count_to_python(multiset_count_excluding(excluded_from_python(group, exclude),
                                                        size, element_from_python(group, target)));
      },
      py::arg("group"), py::arg("size"), py::arg("target"), py::arg("exclude") = py::none(),
      "Multisubsets of the group (minus `exclude`) of the given size summing to target");

  m.def(
      "subset_count",
      [](const GroupSpec& group, std::uint64_t size, const py::object& target,
         const py::object& exclude) {
        return count_to_python(subset_count_excluding(excluded_from_python(group, exclude), size,
                                                      element_from_python(group, target)));
      },
      py::arg("group"), py::arg("size"), py::arg("target"), py::arg("exclude") = py::none(),
      "Subsets of distinct elements of the group (minus `exclude`) summing to target");

  m.def(
      "partition_count",
      [](const GroupSpec& group, std::uint64_t size, const py::object& target) {
        return count_to_python(partition_count(group, size, element_from_python(group, target)));
      },
      py::arg("group"), py::arg("size"), py::arg("target"),
      "Multisets of exactly `size` nonzero elements summing to target");

  m.def(
      "multiset_count_peeled",
      [](const GroupSpec& group, std::uint64_t size, const py::object& target,
         const py::object& exclude) {
        return count_to_python(multiset_count_excluding_peeled(
            excluded_from_python(group, exclude), size, element_from_python(group, target)));
      },
      py::arg("group"), py::arg("size"), py::arg("target"), py::arg("exclude") = py::none(),
      "Same as multiset_count, computed by the element-peeling recursion (cross-check)");

  m.def(
      "multiset_count_coprime",
      [](const GroupSpec& group, std::uint64_t size, const py::object& target) {
        return count_to_python(
            multiset_count_coprime(group, size, element_from_python(group, target)));
      },
      py::arg("group"), py::arg("size"), py::arg("target"),
      "Single-binomial shortcut; requires gcd(size, exponent) == 1");

  m.def(
      "multiset_count_prime_power",
      [](std::uint64_t p, unsigned m_, std::uint64_t size, std::uint64_t target) {
        return count_to_python(multiset_count_prime_power(p, m_, size, target));
      },
      py::arg("p"), py::arg("m"), py::arg("size"), py::arg("target"),
      "Closed form specialized to the cyclic group of order p**m");

  m.def(
      "brute_multiset_count",
      [](const GroupSpec& group, std::uint64_t size, const py::object& target,
         const py::object& exclude, std::uint64_t budget) {
        return count_to_python(brute_multiset_count(group, excluded_from_python(group, exclude),
                                                    size, element_from_python(group, target),
                                                    budget));
      },
      py::arg("group"), py::arg("size"), py::arg("target"), py::arg("exclude") = py::none(),
      py::arg("budget") = kDefaultEnumerationBudget,
      "Exhaustive enumeration oracle for multiset_count (refuses beyond `budget`)");

  m.def(
      "brute_subset_count",
      [](const GroupSpec& group, std::uint64_t size, const py::object& target,
         const py::object& exclude, std::uint64_t budget) {
        return count_to_python(brute_subset_count(group, excluded_from_python(group, exclude),
                                                  size, element_from_python(group, target),
                                                  budget));
      },
      py::arg("group"), py::arg("size"), py::arg("target"), py::arg("exclude") = py::none(),
      py::arg("budget") = kDefaultEnumerationBudget,
      "Exhaustive enumeration oracle for subset_count (refuses beyond `budget`)");

  m.def(
      "multiset_table",
      [](const GroupSpec& group, std::uint64_t max_size, const py::object& exclude) {
        return table_to_python(group, excluded_from_python(group, exclude), max_size, true);
      },
      py::arg("group"), py::arg("max_size"), py::arg("exclude") = py::none(),
      "List of (size, target, count) for all sizes up to max_size and all targets");

  m.def(
      "subset_table",
      [](const GroupSpec& group, std::uint64_t max_size, const py::object& exclude) {
        return table_to_python(group, excluded_from_python(group, exclude), max_size, false);
      },
      py::arg("group"), py::arg("max_size"), py::arg("exclude") = py::none(),
      "List of (size, target, count) for subsets of distinct elements");
}
