#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qell/group.hpp"
#include "qell/qell.hpp"

namespace qell {

struct GroupFactor {
  enum class Kind { Symmetric, Cyclic, Dihedral, Trivial, Generated };
  Kind kind = Kind::Trivial;
  std::size_t n = 1;      // degree for Generated
  std::vector<Perm> gens;  // Generated only

  bool operator==(const GroupFactor&) const = default;
};

// "S<n>", "C<n>", "D<n>", "1" and "perm:(1 2 3)(4 5),(1 2)", joined by "x".
struct GroupSpec {
  std::vector<GroupFactor> factors;

  std::string str() const;
  GroupPtr build(std::size_t cap = default_cap()) const;
  bool operator==(const GroupSpec&) const = default;
};

// Throws ParseError with the offending position.
GroupSpec parse_group_spec(const std::string& text);

// Integer Laurent combinations of "q", "q^k", "unit" and basis symbols
// "b[rep][index]", with "*", "+", "-" and parentheses, where rep is a class index or a permutation in cycle
// notation, e.g. "2*q^-1*b[(1 2)][1] - b[0][0] + q". Throws ParseError.
QEllElem parse_element(const GroupPtr& g, const std::string& text);

// Class of a permutation in cycle notation, or a class index.
std::size_t parse_class_rep(const GroupPtr& g, const std::string& text);

// Inverse of parse_element for display: "b[(1 2)][1]" style symbols.
std::string element_str(const QEllElem& a);

}  // namespace qell
