#include "qell/cyclo.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qell/errors.hpp"

namespace qell {

namespace {

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> f;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long inverse_mod(long a, long m) {
  long t = 0, nt = 1, r = m, nr = mod(a, m);
  while (nr) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return mod(t, m);
}

void zumbroich_reduce(int n, std::vector<mpq_class>& c) {
  for (auto [p, nu] : factorize(n)) {
    int pp = 1;
    for (int i = 0; i < nu; ++i) pp *= p;
    const long u = inverse_mod(n / pp, pp);
    const int step = n / p;
    const int threshold = pp / p;
    for (int k = 0; k < n; ++k) {
      if (sgn(c[k]) == 0) continue;
      const long digit = mod(static_cast<long>(k) * u, pp);
      if (p == 2) {
        if (digit < threshold) continue;
        c[(k + step) % n] -= c[k];
      } else {
        if (digit >= threshold) continue;
        for (int j = 1; j < p; ++j) c[(k + j * step) % n] -= c[k];
      }
      c[k] = 0;
    }
  }
}

}  // namespace

CycloNum::CycloNum(long v) {
  if (v != 0) terms_.emplace_back(0, mpq_class(v));
}

CycloNum::CycloNum(const mpq_class& v) {
  if (sgn(v) != 0) {
    terms_.emplace_back(0, v);
    terms_[0].second.canonicalize();
  }
}

CycloNum CycloNum::zeta(int n, long k) {
  if (n <= 0) throw Error("conductor must be positive");
  std::vector<mpq_class> c(n);
  c[mod(k, n)] = 1;
  return from_dense(n, c);
}

CycloNum CycloNum::root_of_unity(const mpq_class& angle) {
  mpq_class a = angle;
  a.canonicalize();
  const long den = a.get_den().get_si();
  const long num = mod(a.get_num().get_si(), den);
  return zeta(static_cast<int>(den), num);
}

mpq_class CycloNum::rational() const {
  if (n_ != 1) throw Error("cyclotomic value is not rational");
  return terms_.empty() ? mpq_class(0) : terms_[0].second;
}

CycloNum CycloNum::from_dense(int n, std::vector<mpq_class>& c) {
  for (auto& v : c) v.canonicalize();
  zumbroich_reduce(n, c);
  std::vector<Term> t;
  for (int k = 0; k < n; ++k)
    if (sgn(c[k]) != 0) t.emplace_back(k, c[k]);
  return minimize(n, std::move(t));
}

CycloNum CycloNum::minimize(int n, std::vector<Term> terms) {
  for (;;) {
    if (terms.empty()) return CycloNum();
    bool reduced = false;
    for (auto [p, nu] : factorize(n)) {
      if (nu >= 2 || p == 2) {
        bool all = std::all_of(terms.begin(), terms.end(), [p = p](const Term& t) { return t.first % p == 0; });
        if (!all) continue;
        for (auto& t : terms) t.first /= p;
        n /= p;
        reduced = true;
        break;
      }
      // p exactly divides n: the subfield Q(zeta_{n/p}) shows up as equal
      // coefficients across each fibre over k mod n/p.
      const int rest = n / p;
      std::map<int, std::vector<const Term*>> fibres;
      for (const auto& t : terms) fibres[t.first % rest].push_back(&t);
      bool ok = true;
      for (const auto& [r, v] : fibres) {
        if (static_cast<int>(v.size()) != p - 1) { ok = false; break; }
        for (const auto* t : v)
          if (t->second != v[0]->second) { ok = false; break; }
        if (!ok) break;
      }
      if (!ok) continue;
      std::vector<mpq_class> dense(rest);
      for (const auto& [r, v] : fibres) {
        // k0 = 0 mod p and k0 = r mod rest
        const long k0 = mod(static_cast<long>(r) * p * inverse_mod(p, rest), n);
        dense[(k0 / p) % rest] -= v[0]->second;
      }
      return from_dense(rest, dense);
    }
    if (!reduced) break;
  }
  if (n == 1) {
    mpq_class s = 0;
    for (const auto& t : terms) s += t.second;
    CycloNum r(s);
    return r;
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  CycloNum r;
  r.n_ = n;
  r.terms_ = std::move(terms);
  return r;
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (n_ == o.n_) {
    std::vector<Term> t;
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        t.push_back(*a++);
      } else if (a == terms_.end() || b->first < a->first) {
        t.push_back(*b++);
      } else {
        mpq_class s = a->second + b->second;
        if (sgn(s) != 0) t.emplace_back(a->first, s);
        ++a;
        ++b;
      }
    }
    return minimize(n_, std::move(t));
  }
  const int L = std::lcm(n_, o.n_);
  std::vector<mpq_class> c(L);
  for (const auto& t : terms_) c[t.first * (L / n_)] += t.second;
  for (const auto& t : o.terms_) c[t.first * (L / o.n_)] += t.second;
  return from_dense(L, c);
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
  if (is_zero() || o.is_zero()) return CycloNum();
  if (o.n_ == 1) {
    CycloNum r = *this;
    for (auto& t : r.terms_) t.second *= o.terms_[0].second;
    return r;
  }
  if (n_ == 1) return o * *this;
  const int L = std::lcm(n_, o.n_);
  std::vector<mpq_class> c(L);
  const int sa = L / n_, sb = L / o.n_;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) c[(a.first * sa + b.first * sb) % L] += a.second * b.second;
  return from_dense(L, c);
}

CycloNum CycloNum::operator/(const CycloNum& o) const { return *this * o.inverse(); }

CycloNum CycloNum::galois(long j) const {
  if (n_ == 1) return *this;
  if (std::gcd(j, static_cast<long>(n_)) != 1) throw Error("Galois exponent not coprime to conductor");
  std::vector<mpq_class> c(n_);
  for (const auto& t : terms_) c[mod(static_cast<long>(t.first) * j, n_)] += t.second;
  return from_dense(n_, c);
}

CycloNum CycloNum::conj() const { return galois(-1); }

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (n_ == 1) return CycloNum(mpq_class(1) / terms_[0].second);
  CycloNum others(1);
  for (long j = 2; j < n_; ++j)
    if (std::gcd(j, static_cast<long>(n_)) == 1) others *= galois(j);
  const CycloNum norm = *this * others;
  return others * CycloNum(mpq_class(1) / norm.rational());
}

CycloNum CycloNum::pow(long e) const {
  CycloNum base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  CycloNum r(1);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

bool CycloNum::operator<(const CycloNum& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  const std::size_t m = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (terms_[i].first != o.terms_[i].first) return terms_[i].first < o.terms_[i].first;
    if (terms_[i].second != o.terms_[i].second) return terms_[i].second < o.terms_[i].second;
  }
  return terms_.size() < o.terms_.size();
}

std::string rational_str(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

std::string CycloNum::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool neg = sgn(c) < 0;
    const mpq_class a = neg ? mpq_class(-c) : c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (n_ == 1 || k == 0) {
      s += rational_str(a);
      continue;
    }
    if (a != 1) s += rational_str(a) + "*";
    s += "z(" + std::to_string(n_) + ")";
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s;
}

mpq_class rational_angle(const CycloNum& z) {
  if (z == CycloNum(1)) return 0;
  const int n = z.conductor();
  const int m = n % 2 ? 2 * n : n;
  for (int k = 1; k < m; ++k) {
    mpq_class a(k, m);
    a.canonicalize();
    if (CycloNum::root_of_unity(a) == z) return a;
  }
  throw NotRootOfUnity("value " + z.str() + " is not a root of unity");
}

}  // namespace qell
