#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qell {

// Exact element of Q(zeta_n), stored in the Zumbroich basis of the minimal
// conductor n (never 2 mod 4). Equality is term-wise.
class CycloNum {
 public:
  using Term = std::pair<int, mpq_class>;  // exponent k of zeta_n, coefficient

  CycloNum() = default;
  CycloNum(long v);               // NOLINT(google-explicit-constructor)
  CycloNum(const mpq_class& v);   // NOLINT(google-explicit-constructor)

  static CycloNum zeta(int n, long k = 1);
  static CycloNum root_of_unity(const mpq_class& angle);  // e^{2 pi i angle}
  // sum_k c[k] zeta_n^k
  static CycloNum from_coeffs(int n, std::vector<mpq_class> c) { return from_dense(n, c); }

  int conductor() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return n_ == 1; }
  mpq_class rational() const;  // throws unless rational

  CycloNum operator-() const;
  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator/(const CycloNum& o) const;
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

  CycloNum conj() const;
  CycloNum galois(long j) const;  // zeta -> zeta^j, gcd(j, n) = 1
  CycloNum inverse() const;       // throws DivisionByZero
  CycloNum pow(long e) const;

  std::string str() const;  // "a*z(m)^k + ..."

  bool operator==(const CycloNum& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const CycloNum& o) const { return !(*this == o); }
  // Canonical total order (conductor, then terms); not an ordering of values.
  bool operator<(const CycloNum& o) const;

 private:
  static CycloNum from_dense(int n, std::vector<mpq_class>& c);
  static CycloNum minimize(int n, std::vector<Term> terms);

  int n_ = 1;
  std::vector<Term> terms_;
};

// c in [0,1) with root_of_unity(c) == z; throws NotRootOfUnity.
mpq_class rational_angle(const CycloNum& z);

// Reduced fraction text "a/b" or "a".
std::string rational_str(const mpq_class& q);

}  // namespace qell
