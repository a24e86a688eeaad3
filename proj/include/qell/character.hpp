#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qell/cyclo.hpp"
#include "qell/group.hpp"
#include "qell/wreath.hpp"

namespace qell {

// One value per conjugacy class, in the class order of the owning group.
using ClassFn = std::vector<CycloNum>;

struct CharacterTable {
  std::vector<ClassFn> irr;  // trivial first, then by degree, then by values
  std::vector<long> degrees;

  std::size_t size() const { return irr.size(); }
};

// Dixon's method: class-sum eigenvectors modulo p = 1 mod exp(G), lifted by
// eigenvalue multiplicities of each element.
CharacterTable dixon_character_table(const Group& g);

CycloNum inner_product(const Group& g, const ClassFn& a, const ClassFn& b);
ClassFn tensor(const ClassFn& a, const ClassFn& b);
ClassFn operator+(const ClassFn& a, const ClassFn& b);

// Integer coordinates in the irreducible basis; throws NotCharacter when a
// coordinate is not an integer.
std::vector<long> decompose_virtual(const Group& g, const ClassFn& chi);
// Nonzero (irreducible index, multiplicity) pairs; throws NotCharacter when a
// multiplicity is negative or fractional.
std::vector<std::pair<std::size_t, long>> decompose(const Group& g, const ClassFn& chi);
ClassFn combine(const Group& g, const std::vector<long>& coeffs);

// For h a subgroup of g on the same points: class of h -> class of g.
std::vector<std::size_t> fusion(const Group& g, const Group& h);
// Class of src -> class of dst.
std::vector<std::size_t> fusion(const GroupHom& phi);

ClassFn restrict_fn(const Group& g, const Group& h, const ClassFn& chi);
ClassFn restrict_fn(const GroupHom& phi, const ClassFn& chi);
ClassFn induce(const Group& g, const Group& h, const ClassFn& chi);
// Induction from a subgroup given elementwise: (element of g, value) for every
// element of the subgroup, whose order is `sub_order`.
ClassFn induce_elementwise(const Group& g, const std::vector<std::pair<std::size_t, CycloNum>>& values,
                           std::size_t sub_order);

using Partition = std::vector<int>;  // weakly decreasing positive parts

// Partitions of n, lexicographically decreasing: (n) first, (1^n) last.
std::vector<Partition> partitions(int n);
Partition cycle_type(const Perm& p);
// Murnaghan-Nakayama rule via beta-sets.
long mn_character(const Partition& lambda, const Partition& mu);
std::string partition_str(const Partition& p);

struct WreathIrrLabel {
  std::vector<Partition> parts;  // one partition (possibly empty) per irreducible of the base
  std::string str() const;
  bool operator==(const WreathIrrLabel&) const = default;
};

// Irreducible characters of G wreath Sigma_n built by inducing the extended
// tensor powers from Young-type subgroups. Labels come in lexicographic order
// of (sizes, partitions).
std::vector<std::pair<WreathIrrLabel, ClassFn>> wreath_irreducibles(const Wreath& w);

std::string table_text(const Group& g, const CharacterTable& t);

}  // namespace qell
