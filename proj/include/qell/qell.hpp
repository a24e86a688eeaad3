#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qell/group.hpp"
#include "qell/lambda.hpp"

namespace qell {

// Element of QEll_G(pt): one level-1 component per conjugacy class of G, over
// the context of the canonical class representative.
class QEllElem {
 public:
  QEllElem() = default;
  explicit QEllElem(GroupPtr g);

  static QEllElem unit(const GroupPtr& g);
  static QEllElem q(const GroupPtr& g);

  const GroupPtr& group() const { return g_; }
  const std::vector<LambdaElem>& components() const { return comps_; }
  const LambdaElem& component(std::size_t cls) const { return comps_.at(cls); }
  void set_component(std::size_t cls, LambdaElem v);

  QEllElem operator+(const QEllElem& o) const;
  QEllElem operator-(const QEllElem& o) const;
  QEllElem operator*(const QEllElem& o) const;
  QEllElem scaled(const LaurentPoly& p) const;
  bool operator==(const QEllElem& o) const;
  bool operator!=(const QEllElem& o) const { return !(*this == o); }

  // Character of the component at any element g (transported from the
  // canonical representative) evaluated at [h, t] for h in C_G(g).
  PhaseSeries series_at(std::size_t g, std::size_t h) const;

 private:
  void check_same(const QEllElem& o) const;

  GroupPtr g_;
  std::vector<LambdaElem> comps_;
};

std::size_t qell_rank(const GroupPtr& g);
std::vector<std::size_t> qell_component_ranks(const GroupPtr& g);

// Moves a component from the context of `a` to the context of the conjugate
// element `target` of the same group.
LambdaElem transport(const LambdaElem& a, std::size_t target);

// Component at class `cls` of the product group is determined by the pair of
// component characters; `gh` must be direct_product(a.group(), b.group()).
QEllElem kunneth(const QEllElem& a, const QEllElem& b, const GroupPtr& gh);

QEllElem restrict_hom(const GroupHom& phi, const QEllElem& b);

// h <= g; component at [x] sums inductions over the h-classes fusing into [x].
QEllElem transfer(const GroupPtr& g, const GroupPtr& h, const QEllElem& a);

// ------------------------------------------------------------------ G-sets

struct FiniteGSet {
  GroupPtr group;
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> act;  // act[element][point]
  std::vector<std::size_t> coset_rep;         // coset spaces only: smallest member per point
};

FiniteGSet coset_space(const GroupPtr& g, const GroupPtr& h);  // points ordered by smallest member
FiniteGSet trivial_gset(const GroupPtr& g, std::size_t n);
FiniteGSet regular_gset(const GroupPtr& g);

struct GSetOrbit {
  std::size_t basepoint = 0;  // smallest point of the orbit
  GroupPtr stabilizer;        // in the centralizer of the class rep
  LambdaContextPtr ctx;       // context of the class rep in the stabilizer
};

struct GSetQEllStructure {
  FiniteGSet set;
  std::vector<std::vector<GSetOrbit>> orbits;  // per class of G
  std::size_t rank() const;
};

GSetQEllStructure qell_of_gset(const FiniteGSet& x);

struct GSetQEllElem {
  std::vector<std::vector<LambdaElem>> values;  // per class, per orbit
  bool operator==(const GSetQEllElem&) const = default;
};

GSetQEllElem gset_unit(const GSetQEllStructure& s);
GSetQEllElem gset_mul(const GSetQEllElem& a, const GSetQEllElem& b);

// For x = coset_space(g, h): QEll_G(G/H) -> QEll_H(pt) and its inverse.
QEllElem change_of_group(const GSetQEllStructure& s, const GroupPtr& h, const GSetQEllElem& a);
GSetQEllElem change_of_group_inverse(const GSetQEllStructure& s, const QEllElem& b);

}  // namespace qell
