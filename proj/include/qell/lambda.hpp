#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qell/character.hpp"
#include "qell/cyclo.hpp"
#include "qell/group.hpp"

namespace qell {

// Integer Laurent polynomial in one formal variable.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(long exp, long coeff = 1);

  const std::map<long, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long coeff(long exp) const;
  void add(long exp, long coeff);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly shifted(long e) const;
  CycloNum evaluate(const CycloNum& x) const;
  // Text in `var`, e.g. "2*q^-1 + q"; `var` is used verbatim.
  std::string str(const std::string& var = "q") const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  std::map<long, long> terms_;
};

// Finite sum sum_r c_r e^{2 pi i r t} with rational exponents r.
class PhaseSeries {
 public:
  PhaseSeries() = default;
  explicit PhaseSeries(const CycloNum& constant);

  const std::map<mpq_class, CycloNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const mpq_class& r, const CycloNum& c);

  PhaseSeries operator+(const PhaseSeries& o) const;
  PhaseSeries operator-(const PhaseSeries& o) const;
  PhaseSeries operator*(const PhaseSeries& o) const;
  PhaseSeries& operator+=(const PhaseSeries& o) { return *this = *this + o; }
  PhaseSeries scaled(const CycloNum& c) const;
  // t -> a + b t
  PhaseSeries affine(const mpq_class& a, const mpq_class& b) const;
  CycloNum at(const mpq_class& t) const;
  std::string str() const;

  bool operator==(const PhaseSeries& o) const { return terms_ == o.terms_; }
  bool operator!=(const PhaseSeries& o) const { return !(*this == o); }

 private:
  std::map<mpq_class, CycloNum> terms_;
};

struct ProductTerm {
  std::size_t irr;
  long mult;
  long carry;  // c_a + c_b = c_irr + carry
};

// Data of the group C_G(g) x R / <(g, -1)>: one basis element per irreducible
// of the centralizer, graded by c with lambda(g) = e^{2 pi i c} deg(lambda).
struct LambdaContext {
  std::weak_ptr<const Group> group;
  std::size_t g = 0;  // element index in the group
  Perm g_perm;
  GroupPtr cent;
  std::size_t g_in_cent = 0;
  std::size_t order_g = 1;
  std::vector<mpq_class> grades;

  const CharacterTable& table() const { return cent->character_table(); }
  std::size_t rank() const { return grades.size(); }
  const std::vector<std::vector<std::vector<ProductTerm>>>& products() const;

 private:
  mutable std::once_flag products_once_;
  mutable std::vector<std::vector<std::vector<ProductTerm>>> products_;
};

using LambdaContextPtr = std::shared_ptr<const LambdaContext>;

// Memoized per (group, element).
LambdaContextPtr lambda_context(const GroupPtr& g, std::size_t elem);
LambdaContextPtr lambda_context(const GroupPtr& g, const Perm& elem);

struct LambdaBasisIndex {
  std::size_t irr;
  mpq_class grade;
};
std::vector<LambdaBasisIndex> canonical_basis(const LambdaContextPtr& ctx);

// Element of the level-k ring: sum over irreducibles of P(x) [lambda] with
// x = q^{1/k}; its character at [h, t] is
//   sum P(e^{2 pi i t/k}) chi_lambda(h) e^{2 pi i c_lambda t/k}.
class LambdaElem {
 public:
  LambdaElem() = default;
  explicit LambdaElem(LambdaContextPtr ctx, long level = 1);

  static LambdaElem unit(const LambdaContextPtr& ctx);
  static LambdaElem q(const LambdaContextPtr& ctx);
  static LambdaElem basis(const LambdaContextPtr& ctx, std::size_t irr, long exp = 0);

  const LambdaContextPtr& ctx() const { return ctx_; }
  long level() const { return level_; }
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  const LaurentPoly& coeff(std::size_t irr) const { return coeffs_[irr]; }
  void add_term(std::size_t irr, long exp, long c);
  bool is_zero() const;

  LambdaElem operator+(const LambdaElem& o) const;
  LambdaElem operator-(const LambdaElem& o) const;
  LambdaElem operator-() const;
  LambdaElem operator*(const LambdaElem& o) const;
  LambdaElem& operator+=(const LambdaElem& o) { return *this = *this + o; }
  LambdaElem scaled(const LaurentPoly& p) const;  // multiply by p(q^{1/k})
  LambdaElem pow(unsigned long e) const;

  // Character at [h, t] as a function of t, for h in the centralizer
  // (given by its class there).
  PhaseSeries series_at_class(std::size_t cent_class) const;
  std::vector<PhaseSeries> series() const;
  // h is an element of the ambient group; throws NotCentralizing.
  PhaseSeries series_at(const Perm& h) const;
  CycloNum evaluate(const Perm& h, const mpq_class& t) const;

  bool operator==(const LambdaElem& o) const;
  bool operator!=(const LambdaElem& o) const { return !(*this == o); }
  // "(poly)*b[i]" terms with the variable q^{1/k} written "q^(1/k)".
  std::string str() const;

 private:
  void check_same(const LambdaElem& o) const;

  LambdaContextPtr ctx_;
  long level_ = 1;
  std::vector<LaurentPoly> coeffs_;
};

// Inverse of series(): per centralizer class a phase series; throws
// DecompositionError when the values are not a virtual representation.
LambdaElem decompose_series(const LambdaContextPtr& ctx, long level, const std::vector<PhaseSeries>& values);

LambdaElem rescale(const LambdaElem& a, long k);

// sigma in h <= g: induction from the sub-context of h to the one of g.
LambdaElem induce_lambda(const GroupPtr& g, const GroupPtr& h, const Perm& sigma, const LambdaElem& a);
// Restriction along the inclusion of contexts; `h` <= `a`'s group.
LambdaElem restrict_lambda(const GroupPtr& h, const LambdaElem& a);
// Pullback along phi: Lambda_src(tau) -> Lambda_dst(phi(tau)).
LambdaElem restrict_lambda(const GroupHom& phi, std::size_t tau, const LambdaElem& b);

// Generator/relation text for abelian centralizers, basis text otherwise.
std::string presentation(const LambdaContextPtr& ctx);

}  // namespace qell
