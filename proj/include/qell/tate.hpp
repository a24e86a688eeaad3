#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qell/cyclo.hpp"
#include "qell/group.hpp"
#include "qell/lambda.hpp"

namespace qell {

// Sigma_N as the group of 1 wr Sigma_N on N points, memoized per N. Every
// function below works over this group object.
GroupPtr tate_group(std::size_t n);

struct TransferGenerator {
  std::size_t i = 0, j = 0;  // Young subgroup Sigma_i x Sigma_j on {0..i-1}, {i..N-1}
  Perm rho;                  // class representative in the Young subgroup
  std::size_t source = 0;    // basis index in the context of rho there
  LambdaElem value;          // over the context of the class representative of Sigma_N
};

struct TransferIdealData {
  std::size_t n = 0;
  GroupPtr group;
  std::vector<std::vector<TransferGenerator>> generators;  // per class of Sigma_N
};

struct TateOptions {
  std::size_t max_n = 6;
  bool throw_on_failure = true;
};

// Images of basis elements under transfer from every proper Young subgroup.
TransferIdealData transfer_ideal(std::size_t n, const TateOptions& opt = {});

// Z[q^+-][q'] / (q^d - q'^e), as coefficients of 1, q', ..., q'^{e-1}.
struct SubgroupRingElem {
  std::size_t d = 1, e = 1;
  std::vector<LaurentPoly> c;

  static SubgroupRingElem zero(std::size_t d, std::size_t e);
  static SubgroupRingElem qprime_power(std::size_t d, std::size_t e, std::size_t a);

  SubgroupRingElem operator+(const SubgroupRingElem& o) const;
  SubgroupRingElem operator-(const SubgroupRingElem& o) const;
  SubgroupRingElem operator*(const SubgroupRingElem& o) const;
  bool operator==(const SubgroupRingElem& o) const = default;
  bool is_zero() const;
  std::string str() const;
};

// Cycle type e^d of a permutation, or nothing when the cycles have unequal
// lengths.
std::optional<std::pair<std::size_t, std::size_t>> pure_cycle_type(const Perm& sigma);

// Evaluation map of the component at a class with d cycles of length e:
// q -> [1, t] and q' -> the character value at the d-th roots of sigma^s.
SubgroupRingElem evaluation_map(const LambdaElem& a);

// Power operation of q over the trivial group, component at the class
// representative conjugate to sigma. Throws WrongCycleType.
LambdaElem q_prime(std::size_t n, const Perm& sigma);

struct CaseICertificate {
  std::size_t basis = 0;      // canonical basis index
  std::size_t generator = 0;  // index into the class's generator list
  long shift = 0;             // generator = sign q^shift basis element
  long sign = 1;
};

struct PhiChecks {
  bool kills_generators = false;
  bool qprime_powers = false;  // Phi(q'^a) = q'^a for a < e
  bool multiplicative = false; // on all products of basis elements
  bool relation = false;       // Phi(q'^e - q^d) = 0
  bool all() const { return kills_generators && qprime_powers && multiplicative && relation; }
};

struct ClassVerification {
  std::size_t class_index = 0;
  Perm sigma;
  int case_id = 1;  // 1: unequal cycle lengths, 2: d cycles of length e
  std::size_t d = 0, e = 0;
  std::size_t rank_before = 0;
  std::size_t generators = 0;
  std::size_t survivors = 0;
  bool torsion_free = false;
  std::vector<CaseICertificate> certificates;
  PhiChecks phi;
  std::optional<CycloNum> vandermonde_det;
  bool passed = false;
  std::string failure;
};

struct TateReport {
  std::size_t n = 0;
  std::vector<ClassVerification> classes;
  std::size_t total_rank = 0;
  std::size_t expected_rank = 0;  // sum of the divisors of N
  bool passed = false;
};

// Per class: Case I certificates or Case II evaluation checks, together with
// the per-grade integer elimination of the transfer generators. Throws
// VerificationFailed unless opt.throw_on_failure is off.
TateReport quotient_and_match(std::size_t n, const TateOptions& opt = {});

}  // namespace qell
