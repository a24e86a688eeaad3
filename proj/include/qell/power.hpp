#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qell/character.hpp"
#include "qell/lambda.hpp"
#include "qell/qell.hpp"
#include "qell/wreath.hpp"

namespace qell {

// ------------------------------------------------------------ wreath classes

// Per class of the base group, the partition formed by the lengths of the
// cycles whose cycle product lies in that class.
using WreathType = std::vector<Partition>;

WreathType wreath_type(const Group& g, const WreathElement& x);
// Every type of total size n, without enumerating the wreath product.
std::vector<WreathType> wreath_types(const Group& g, std::size_t n);

struct WreathClass {
  WreathElement rep;  // canonical representative
  std::size_t index = 0;
  WreathType type;
  GroupPtr centralizer;
};

// Brute-force enumeration, cross-checked against wreath_types.
std::vector<WreathClass> wreath_conjugacy_classes(const Wreath& w);

// ------------------------------------------------------------ power operation

// Character of the power component at x, evaluated at [h, t] for h in the
// centralizer of x, as a function of t.
PhaseSeries power_character(const Wreath& w, const QEllElem& v, const WreathElement& x, const WreathElement& h);

// Component at the wreath element with index `x` (any element, canonical or
// not), over lambda_context(w.group(), x).
LambdaElem power_component(const Wreath& w, const QEllElem& v, std::size_t x);

QEllElem power_total(const Wreath& w, const QEllElem& v);

// ------------------------------------------------------------ axioms

enum class AxiomStatus { Pass, Fail, Skipped };

struct AxiomResult {
  std::string axiom;  // "i", "ii", "iii", "iv"
  AxiomStatus status = AxiomStatus::Skipped;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool passed() const;
};

struct AxiomOptions {
  std::size_t cap = default_cap();
  bool extended = false;       // composite axiom beyond |G| <= 2, n m <= 4
  bool throw_on_failure = true;
};

// (i) unit and identity, (ii) restriction to G wr S_n x G wr S_m,
// (iii) composite along (G wr S_n) wr S_m, (iv) external products with w.
AxiomReport check_axioms(const QEllElem& v, const QEllElem& w, std::size_t n, std::size_t m,
                         const AxiomOptions& opt = {});

// ------------------------------------------------------------ fibered wreath basis

struct FiberedWreathBasisElem {
  WreathIrrLabel label;  // partitions over the canonical basis of the context
  ClassFn slice;         // character at t = 0 on C wr S_d
  mpq_class phase;       // character at [y, t] is slice(y) e^{2 pi i phase t}
};

struct FiberedWreathBasis {
  LambdaContextPtr ctx;
  std::shared_ptr<const Wreath> wreath;  // C_G(sigma) wr S_d
  std::vector<FiberedWreathBasisElem> elems;
};

FiberedWreathBasis repfibwr_basis(const GroupPtr& g, std::size_t sigma, std::size_t d,
                                  std::size_t cap = default_cap());

// ------------------------------------------------------------ P-bar

struct DivisorPair {
  std::size_t d = 1, e = 1;
  bool operator==(const DivisorPair&) const = default;
};

// All (d, e) with d e = n, by ascending e.
std::vector<DivisorPair> divisor_pairs(std::size_t n);

// Element of QEll_G(pt) tensor prod_{n = d e} Z[q^+-][q']/(q^d - q'^e): per
// class of G and per pair, the coefficients of 1, q', ..., q'^{e-1}.
struct AdamsBarElem {
  GroupPtr group;
  std::size_t n = 1;
  std::vector<DivisorPair> pairs;
  std::vector<std::vector<std::vector<LambdaElem>>> coeffs;  // [class][pair][j]

  AdamsBarElem operator+(const AdamsBarElem& o) const;
  AdamsBarElem operator*(const AdamsBarElem& o) const;
  bool operator==(const AdamsBarElem& o) const;
  std::string str() const;
};

// Solves sum_j f_j(q) q'^j = X(s) at the points z_s (s = 0..e-1), where q' is
// e^{2 pi i (s + d t)/e}; X(s, h) is the character at [h, t] for h in the
// centralizer of ctx. Throws DecompositionError when no solution exists.
std::vector<LambdaElem> invert_qprime(const LambdaContextPtr& ctx, std::size_t d, std::size_t e,
                                      const std::function<PhaseSeries(std::size_t s, std::size_t h)>& x);

// Closed form: component (g, (d, e)) from X(s; h, t) = V_{g^e}(h^d g^-s, (s + d t)/e).
AdamsBarElem adams_bar(const QEllElem& v, std::size_t n);
// Power operation, restriction to G x S_n, and evaluation at the points z_s.
AdamsBarElem adams_bar_pipeline(const QEllElem& v, std::size_t n, std::size_t cap = default_cap());

// ------------------------------------------------------------ points of S_n

// Canonical element with d cycles of length e: (1..e)(e+1..2e)...
Perm pure_cycle_element(std::size_t d, std::size_t e);
// Element of C_{S_{de}}(pure_cycle_element(d, e)) cycling the blocks and
// rotating the first block by s; its d-th power is the s-th power of the
// pure cycle element.
Perm z_point(std::size_t d, std::size_t e, std::size_t s);

}  // namespace qell
