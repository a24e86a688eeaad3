#include "qell/character.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "qell/errors.hpp"

namespace qell {

namespace {

using i64 = long long;
using Mat = std::vector<std::vector<i64>>;

i64 md(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 powmod(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b = md(b, p);
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Columns of the returned matrix span {x : a x = 0}.
std::vector<std::vector<i64>> nullspace(Mat a, i64 p) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const i64 inv = invmod(a[r][c], p);
    for (auto& v : a[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const i64 f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = md(a[i][k] - f * a[r][k], p);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<i64>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<i64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = md(-a[i][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coordinates x (d x d) with B x = C, for B (n x d) of full column rank.
Mat solve_in_basis(const std::vector<std::vector<i64>>& bcols, const std::vector<std::vector<i64>>& ccols, i64 p) {
  const std::size_t n = bcols[0].size(), d = bcols.size();
  Mat a(n, std::vector<i64>(2 * d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      a[i][k] = bcols[k][i];
      a[i][d + k] = ccols[k][i];
    }
  std::size_t r = 0;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error("character table: degenerate subspace basis");
    std::swap(a[piv], a[r]);
    const i64 inv = invmod(a[r][c], p);
    for (auto& v : a[r]) v = v * inv % p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const i64 f = a[i][c];
      for (std::size_t k = 0; k < 2 * d; ++k) a[i][k] = md(a[i][k] - f * a[r][k], p);
    }
    ++r;
  }
  Mat x(d, std::vector<i64>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) x[i][k] = a[i][d + k];
  return x;
}

// Characteristic polynomial det(x - a) mod p, lowest degree first, via a
// Hessenberg form.
std::vector<i64> charpoly(Mat a, i64 p) {
  if (a.empty()) return {1};
  const std::size_t n = a.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && a[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(a[piv], a[j + 1]);
      for (auto& row : a) std::swap(row[piv], row[j + 1]);
    }
    const i64 inv = invmod(a[j + 1][j], p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (a[i][j] == 0) continue;
      const i64 u = a[i][j] * inv % p;
      for (std::size_t k = 0; k < n; ++k) a[i][k] = md(a[i][k] - u * a[j + 1][k], p);
      for (std::size_t k = 0; k < n; ++k) a[k][j + 1] = (a[k][j + 1] + u * a[k][i]) % p;
    }
  }
  std::vector<std::vector<i64>> polys{{1}};
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<i64> next(m + 2, 0);
    const auto& prev = polys[m];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] = (next[k + 1] + prev[k]) % p;
      next[k] = md(next[k] - a[m][m] * prev[k], p);
    }
    i64 sub = 1;
    for (std::size_t i = m; i-- > 0;) {
      sub = sub * a[i + 1][i] % p;
      const i64 f = sub * a[i][m] % p;
      if (f == 0) continue;
      for (std::size_t k = 0; k < polys[i].size(); ++k) next[k] = md(next[k] - f * polys[i][k], p);
    }
    polys.push_back(std::move(next));
  }
  return polys[n];
}

// ------------------------------------------------------------ polynomials mod p
// Coefficients lowest degree first, no trailing zeros (zero polynomial empty).

using Poly = std::vector<i64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b (b nonzero).
Poly poly_mod(Poly a, const Poly& b, i64 p) {
  trim(a);
  const i64 inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const i64 f = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = md(a[shift + k] - f * b[k], p);
    trim(a);
  }
  return a;
}

Poly poly_div(Poly a, const Poly& b, i64 p) {
  trim(a);
  if (a.size() < b.size()) return {};
  const i64 inv = invmod(b.back(), p);
  Poly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    const i64 f = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = md(a[shift + k] - f * b[k], p);
    a.pop_back();
    trim(a);
  }
  return q;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, i64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, i64 e, const Poly& f, i64 p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, i64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const i64 inv = invmod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

// Distinct roots in F_p of f (Cantor-Zassenhaus on gcd(f, x^p - x)).
std::vector<i64> poly_roots(Poly f, i64 p, std::mt19937_64& rng) {
  trim(f);
  std::vector<i64> roots;
  if (f.size() <= 1) return roots;
  Poly xp = poly_powmod({0, 1}, p, f, p);
  xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
  xp[1] = md(xp[1] - 1, p);
  Poly g = poly_gcd(f, xp, p);
  std::uniform_int_distribution<i64> coef(0, p - 1);
  std::vector<Poly> work{g};
  while (!work.empty()) {
    Poly h = std::move(work.back());
    work.pop_back();
    if (h.size() <= 1) continue;
    if (h.size() == 2) {
      roots.push_back(md(-h[0] * invmod(h[1], p), p));
      continue;
    }
    for (;;) {
      Poly t = poly_powmod({coef(rng), 1}, (p - 1) / 2, h, p);
      t.resize(std::max<std::size_t>(t.size(), 1), 0);
      t[0] = md(t[0] - 1, p);
      Poly d = poly_gcd(h, t, p);
      if (d.size() > 1 && d.size() < h.size()) {
        work.push_back(poly_div(h, d, p));
        work.push_back(std::move(d));
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

i64 primitive_root(i64 p) {
  std::vector<i64> primes;
  i64 t = p - 1;
  for (i64 q = 2; q * q <= t; ++q) {
    if (t % q) continue;
    primes.push_back(q);
    while (t % q == 0) t /= q;
  }
  if (t > 1) primes.push_back(t);
  for (i64 g = 2;; ++g)
    if (std::all_of(primes.begin(), primes.end(), [&](i64 q) { return powmod(g, (p - 1) / q, p) != 1; })) return g;
}

bool value_less(const ClassFn& a, const ClassFn& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

CharacterTable dixon_character_table(const Group& g) {
  const auto& cd = g.conjugacy();
  const std::size_t n = cd.count();
  const i64 order = static_cast<i64>(g.order());
  const i64 e = static_cast<i64>(cd.exponent);
  // A large prime keeps the eigenvalues of a random combination distinct.
  i64 p = ((i64{1} << 30) / e + 1) * e + 1;
  while (!is_prime(p)) p += e;

  // a[j][i][l] = #{x in C_j : x^-1 g_l in C_i}
  // stored sparsely by column: cols[j][l] lists (i, a[j][i][l]) with a nonzero
  std::vector<std::vector<std::vector<std::pair<std::size_t, i64>>>> cols(n, std::vector<std::vector<std::pair<std::size_t, i64>>>(n));
  {
    std::vector<i64> count(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        std::fill(count.begin(), count.end(), 0);
        for (auto x : cd.members[j]) ++count[cd.class_of[g.mul(g.inv(x), cd.reps[l])]];
        for (std::size_t i = 0; i < n; ++i)
          if (count[i]) cols[j][l].emplace_back(i, count[i]);
      }
  }

  std::vector<std::vector<std::vector<i64>>> spaces;
  {
    std::vector<std::vector<i64>> id;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<i64> v(n, 0);
      v[k] = 1;
      id.push_back(v);
    }
    spaces.push_back(id);
  }
  std::mt19937_64 rng(0x5eed);
  // One pass: split every space into eigenspaces of the operator `apply`.
  auto split = [&](const std::function<void(const std::vector<i64>&, std::vector<i64>&)>& apply) {
    std::vector<std::vector<std::vector<i64>>> next;
    for (auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      const std::size_t d = s.size();
      std::vector<std::vector<i64>> image;
      for (const auto& b : s) {
        std::vector<i64> v(n, 0);
        apply(b, v);
        image.push_back(std::move(v));
      }
      const Mat a = solve_in_basis(s, image, p);
      std::size_t found = 0;
      for (const i64 lam : poly_roots(charpoly(a, p), p, rng)) {
        Mat shifted = a;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = md(shifted[i][i] - lam, p);
        auto ns = nullspace(shifted, p);
        if (ns.empty()) continue;
        found += ns.size();
        std::vector<std::vector<i64>> sub;
        for (const auto& coords : ns) {
          std::vector<i64> v(n, 0);
          for (std::size_t k = 0; k < d; ++k)
            for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + coords[k] * s[k][i]) % p;
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
      if (found != d) throw Error("character table: class sums did not diagonalize");
    }
    spaces = std::move(next);
  };

  std::uniform_int_distribution<i64> coef(0, p - 1);
  auto random_combination = [&] {
    Mat comb(n, std::vector<i64>(n, 0));  // comb[l][i]
    for (std::size_t j = 1; j < n; ++j) {
      const i64 r = coef(rng);
      for (std::size_t l = 0; l < n; ++l)
        for (const auto& [i, c] : cols[j][l]) comb[l][i] = (comb[l][i] + r * c) % p;
    }
    return comb;
  };

  // Fast path: a random combination M with n distinct eigenvalues. With a
  // random b and charpoly f, the eigenvector for lambda is (f / (x - lambda))(M) b.
  for (int attempt = 0; attempt < 3 && spaces.size() < n && n > 1; ++attempt) {
    const Mat comb = random_combination();
    Mat m(n, std::vector<i64>(n));
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < n; ++i) m[i][l] = comb[l][i];
    const Poly f = charpoly(m, p);
    const auto roots = poly_roots(f, p, rng);
    if (roots.size() != n) continue;
    std::vector<std::vector<i64>> krylov(n, std::vector<i64>(n));
    for (auto& x : krylov[0]) x = coef(rng);
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        const i64 b = krylov[k - 1][l];
        if (b == 0) continue;
        for (std::size_t i = 0; i < n; ++i) krylov[k][i] = (krylov[k][i] + comb[l][i] * b) % p;
      }
    std::vector<std::vector<std::vector<i64>>> found;
    for (const i64 lam : roots) {
      const Poly g = poly_div(f, {md(-lam, p), 1}, p);
      std::vector<i64> v(n, 0);
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] == 0) continue;
        for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + g[k] * krylov[k][i]) % p;
      }
      if (std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; })) break;
      found.push_back({std::move(v)});
    }
    if (found.size() == n) spaces = std::move(found);
  }

  // Fallback: split by random combinations, then by single class sums.
  for (int round = 0; round < 6 && spaces.size() < n; ++round) {
    const Mat comb = random_combination();
    split([&](const std::vector<i64>& b, std::vector<i64>& v) {
      for (std::size_t l = 0; l < n; ++l) {
        if (b[l] == 0) continue;
        for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + comb[l][i] * b[l]) % p;
      }
    });
  }
  for (std::size_t j = 1; j < n && spaces.size() < n; ++j)
    split([&](const std::vector<i64>& b, std::vector<i64>& v) {
      for (std::size_t l = 0; l < n; ++l) {
        if (b[l] == 0) continue;
        for (const auto& [i, c] : cols[j][l]) v[i] += c * b[l];
      }
      for (auto& x : v) x %= p;
    });
  if (spaces.size() != n) throw Error("character table: class sums did not separate characters");

  const i64 gen = primitive_root(p);
  const i64 z = powmod(gen, (p - 1) / e, p);

  // Per class l: classes of rep^s and powers of a primitive o-th root mod p.
  std::vector<std::vector<std::size_t>> power_class(n);
  std::vector<std::vector<i64>> zeta_powers(n);
  for (std::size_t l = 0; l < n; ++l) {
    const i64 o = static_cast<i64>(cd.rep_orders[l]);
    const i64 zo = powmod(z, e / o, p);
    std::size_t x = 0;
    i64 zk = 1;
    for (i64 s2 = 0; s2 < o; ++s2) {
      power_class[l].push_back(cd.class_of[x]);
      x = g.mul(x, cd.reps[l]);
      zeta_powers[l].push_back(zk);
      zk = zk * zo % p;
    }
  }

  CharacterTable table;
  std::vector<long> degrees;
  for (const auto& s : spaces) {
    std::vector<i64> w = s[0];
    const i64 w0 = invmod(w[0], p);
    for (auto& v : w) v = v * w0 % p;
    i64 acc = 0;
    for (std::size_t l = 0; l < n; ++l)
      acc = (acc + w[l] * w[cd.inverse_class[l]] % p * invmod(static_cast<i64>(cd.sizes[l]), p)) % p;
    const i64 d2 = md(order % p * invmod(acc, p), p);
    i64 deg = 0;
    for (i64 d = 1; d * d <= order; ++d)
      if (d * d % p == d2) deg = d;
    if (deg == 0) throw Error("character table: no admissible degree");
    std::vector<i64> chi(n);
    for (std::size_t l = 0; l < n; ++l) chi[l] = w[l] * deg % p * invmod(static_cast<i64>(cd.sizes[l]), p) % p;
    ClassFn values(n);
    for (std::size_t l = 0; l < n; ++l) {
      const i64 o = static_cast<i64>(cd.rep_orders[l]);
      const auto& zo = zeta_powers[l];
      std::vector<i64> pw(o);
      for (i64 s2 = 0; s2 < o; ++s2) pw[s2] = chi[power_class[l][s2]];
      std::vector<mpq_class> coeffs(o);
      const i64 inv_o = invmod(o, p);
      for (i64 k = 0; k < o; ++k) {
        i64 mk = 0;
        for (i64 s2 = 0; s2 < o; ++s2) mk = (mk + pw[s2] * zo[md(-k * s2, o)]) % p;
        mk = mk * inv_o % p;
        if (mk > deg) throw Error("character table: eigenvalue multiplicity out of range");
        coeffs[k] = static_cast<long>(mk);
      }
      values[l] = CycloNum::from_coeffs(static_cast<int>(o), std::move(coeffs));
    }
    table.irr.push_back(std::move(values));
    degrees.push_back(deg);
  }
  long sq = 0;
  for (auto d : degrees) sq += d * d;
  if (sq != order) throw Error("character table: degree squares do not sum to the order");

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto is_trivial = [&](std::size_t i) {
    return std::all_of(table.irr[i].begin(), table.irr[i].end(), [](const CycloNum& v) { return v == CycloNum(1); });
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    return value_less(table.irr[a], table.irr[b]);
  });
  CharacterTable sorted;
  for (auto i : idx) {
    sorted.irr.push_back(table.irr[i]);
    sorted.degrees.push_back(degrees[i]);
  }
  return sorted;
}

const CharacterTable& Group::character_table() const {
  // Equal element sets give equal class data, so tables are shared across
  // group objects.
  static std::mutex mu;
  static std::map<std::vector<Perm>, std::shared_ptr<const CharacterTable>> shared;
  std::call_once(chars_once_, [this] {
    {
      std::lock_guard lock(mu);
      if (auto it = shared.find(elems_); it != shared.end()) {
        chars_ = it->second;
        return;
      }
    }
    auto t = std::make_shared<const CharacterTable>(dixon_character_table(*this));
    std::lock_guard lock(mu);
    chars_ = shared.emplace(elems_, std::move(t)).first->second;
  });
  return *chars_;
}

CycloNum inner_product(const Group& g, const ClassFn& a, const ClassFn& b) {
  const auto& cd = g.conjugacy();
  CycloNum s;
  for (std::size_t c = 0; c < cd.count(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    s += CycloNum(static_cast<long>(cd.sizes[c])) * a[c] * b[c].conj();
  }
  return s * CycloNum(mpq_class(1, static_cast<long>(g.order())));
}

ClassFn tensor(const ClassFn& a, const ClassFn& b) {
  if (a.size() != b.size()) throw ContextMismatch("class functions on different groups");
  ClassFn r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

ClassFn operator+(const ClassFn& a, const ClassFn& b) {
  if (a.size() != b.size()) throw ContextMismatch("class functions on different groups");
  ClassFn r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<long> decompose_virtual(const Group& g, const ClassFn& chi) {
  const auto& t = g.character_table();
  const auto& cd = g.conjugacy();
  // Accumulate densely in Q(zeta_L) and reduce once per irreducible. Character
  // values have integral coordinates, so the common case stays in Z.
  int L = static_cast<int>(cd.exponent);
  bool integral = true;
  for (const auto& v : chi) {
    L = std::lcm(L, v.conductor());
    for (const auto& [k, c] : v.terms()) integral = integral && c.get_den() == 1;
  }
  std::vector<std::vector<std::pair<int, mpz_class>>> weighted(cd.count());
  if (integral)
    for (std::size_t c = 0; c < cd.count(); ++c) {
      const int sa = L / chi[c].conductor();
      for (const auto& [ka, ca] : chi[c].terms())
        weighted[c].emplace_back(ka * sa, ca.get_num() * static_cast<unsigned long>(cd.sizes[c]));
    }
  std::vector<long> out(t.size());
  std::vector<mpq_class> acc(L);
  std::vector<mpz_class> zacc(L);
  mpq_class prod;
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool done = false;
    if (integral) {
      for (auto& z : zacc) z = 0;
      done = true;
      for (std::size_t c = 0; c < cd.count() && done; ++c) {
        const CycloNum& b = t.irr[i][cd.inverse_class[c]];  // conjugate value
        if (weighted[c].empty() || b.is_zero()) continue;
        const int sb = L / b.conductor();
        for (const auto& [kb, cb] : b.terms()) {
          if (cb.get_den() != 1 || !cb.get_num().fits_slong_p()) {
            done = false;
            break;
          }
          const long m = cb.get_num().get_si();
          const unsigned long am = static_cast<unsigned long>(m < 0 ? -m : m);
          for (const auto& [xa, za] : weighted[c]) {
            mpz_class& slot = zacc[(xa + kb * sb) % L];
            if (m < 0) mpz_submul_ui(slot.get_mpz_t(), za.get_mpz_t(), am);
            else mpz_addmul_ui(slot.get_mpz_t(), za.get_mpz_t(), am);
          }
        }
      }
      if (done)
        for (int k = 0; k < L; ++k) acc[k] = zacc[k];
    }
    if (!done) {
      std::fill(acc.begin(), acc.end(), mpq_class(0));
      for (std::size_t c = 0; c < cd.count(); ++c) {
        const CycloNum& a = chi[c];
        const CycloNum& b = t.irr[i][cd.inverse_class[c]];
        if (a.is_zero() || b.is_zero()) continue;
        const int sa = L / a.conductor(), sb = L / b.conductor();
        const long size = static_cast<long>(cd.sizes[c]);
        for (const auto& [ka, ca] : a.terms())
          for (const auto& [kb, cb] : b.terms()) {
            prod = ca * cb;
            prod *= size;
            acc[(ka * sa + kb * sb) % L] += prod;
          }
      }
    }
    const CycloNum v = CycloNum::from_coeffs(L, acc) * CycloNum(mpq_class(1, static_cast<long>(g.order())));
    if (!v.is_rational() || v.rational().get_den() != 1)
      throw NotCharacter("inner product " + v.str() + " with irreducible " + std::to_string(i) + " is not an integer");
    out[i] = v.rational().get_num().get_si();
  }
  return out;
}

std::vector<std::pair<std::size_t, long>> decompose(const Group& g, const ClassFn& chi) {
  std::vector<std::pair<std::size_t, long>> out;
  const auto m = decompose_virtual(g, chi);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw NotCharacter("negative multiplicity of irreducible " + std::to_string(i));
    if (m[i] > 0) out.emplace_back(i, m[i]);
  }
  return out;
}

ClassFn combine(const Group& g, const std::vector<long>& coeffs) {
  const auto& t = g.character_table();
  ClassFn r(g.class_count());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i]) continue;
    for (std::size_t c = 0; c < r.size(); ++c) r[c] += CycloNum(coeffs[i]) * t.irr[i][c];
  }
  return r;
}

std::vector<std::size_t> fusion(const Group& g, const Group& h) {
  if (g.degree() != h.degree()) throw NotSubgroup("subgroup acts on a different point set");
  std::vector<std::size_t> f;
  for (auto r : h.conjugacy().reps) {
    auto idx = g.find(h.element(r));
    if (!idx) throw NotSubgroup("element " + h.element(r).str() + " is not in the ambient group");
    f.push_back(g.class_of(*idx));
  }
  return f;
}

std::vector<std::size_t> fusion(const GroupHom& phi) {
  std::vector<std::size_t> f;
  for (auto r : phi.src->conjugacy().reps) f.push_back(phi.dst->class_of(phi.image[r]));
  return f;
}

ClassFn restrict_fn(const Group& g, const Group& h, const ClassFn& chi) {
  ClassFn r;
  for (auto c : fusion(g, h)) r.push_back(chi[c]);
  return r;
}

ClassFn restrict_fn(const GroupHom& phi, const ClassFn& chi) {
  ClassFn r;
  for (auto c : fusion(phi)) r.push_back(chi[c]);
  return r;
}

ClassFn induce_elementwise(const Group& g, const std::vector<std::pair<std::size_t, CycloNum>>& values,
                           std::size_t sub_order) {
  const auto& cd = g.conjugacy();
  ClassFn sums(cd.count());
  for (const auto& [x, v] : values) sums[cd.class_of[x]] += v;
  for (std::size_t c = 0; c < cd.count(); ++c) {
    if (sums[c].is_zero()) continue;
    sums[c] *= CycloNum(mpq_class(static_cast<long>(g.order()), static_cast<long>(cd.sizes[c] * sub_order)));
  }
  return sums;
}

ClassFn induce(const Group& g, const Group& h, const ClassFn& chi) {
  if (g.degree() != h.degree()) throw NotSubgroup("subgroup acts on a different point set");
  std::vector<std::pair<std::size_t, CycloNum>> values;
  values.reserve(h.order());
  for (std::size_t x = 0; x < h.order(); ++x) {
    auto idx = g.find(h.element(x));
    if (!idx) throw NotSubgroup("element " + h.element(x).str() + " is not in the ambient group");
    values.emplace_back(*idx, chi[h.class_of(x)]);
  }
  return induce_elementwise(g, values, h.order());
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int max) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, max); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Partition cycle_type(const Perm& p) {
  Partition t;
  for (const auto& c : p.cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

namespace {

long mn_rec(const Partition& lambda, const Partition& mu, std::size_t at,
            std::map<std::pair<Partition, std::size_t>, long>& memo) {
  if (at == mu.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, at);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = mu[at];
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  long total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[i], nb = b - r;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int between = 0;
    for (int c : beta)
      if (c > nb && c < b) ++between;
    std::vector<int> next = beta;
    next[i] = nb;
    std::sort(next.rbegin(), next.rend());
    Partition smaller;
    for (int k = 0; k < len; ++k) {
      const int part = next[k] - (len - 1 - k);
      if (part > 0) smaller.push_back(part);
    }
    const long v = mn_rec(smaller, mu, at + 1, memo);
    total += between % 2 ? -v : v;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
  std::map<std::pair<Partition, std::size_t>, long> memo;
  return mn_rec(lambda, mu, 0, memo);
}

std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string WreathIrrLabel::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + partition_str(parts[i]);
  return s + "]";
}

std::vector<std::pair<WreathIrrLabel, ClassFn>> wreath_irreducibles(const Wreath& w) {
  const Group& base = *w.base();
  const Group& wg = *w.group();
  const auto& bt = base.character_table();
  const std::size_t m = bt.size();
  const int n = static_cast<int>(w.n());

  std::vector<std::vector<int>> compositions;
  {
    std::vector<int> cur(m, 0);
    auto rec = [&](auto&& self, std::size_t i, int rest) -> void {
      if (i + 1 == m) {
        cur[i] = rest;
        compositions.push_back(cur);
        return;
      }
      for (int k = rest; k >= 0; --k) {
        cur[i] = k;
        self(self, i + 1, rest - k);
      }
    };
    if (m == 0) throw Error("base group without characters");
    rec(rec, 0, n);
  }

  std::vector<std::pair<WreathIrrLabel, ClassFn>> out;
  std::map<std::pair<Partition, Partition>, long> mn_cache;
  for (const auto& sizes : compositions) {
    std::vector<std::size_t> seg(n);
    {
      std::size_t pos = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (int k = 0; k < sizes[i]; ++k) seg[pos++] = i;
    }
    // Elements of the Young-type subgroup with their per-segment cycle data.
    struct Local {
      std::size_t index;
      std::vector<std::vector<std::size_t>> gamma_classes;  // per segment
      std::vector<Partition> types;                         // per segment
    };
    std::vector<Local> elems;
    for (std::size_t x = 0; x < wg.order(); ++x) {
      const auto we = w.structured(x);
      bool keeps = true;
      for (int i = 0; i < n && keeps; ++i)
        if (seg[we.sigma[i]] != seg[i]) keeps = false;
      if (!keeps) continue;
      const auto d = cycle_orbit_data(base, we);
      Local loc{x, std::vector<std::vector<std::size_t>>(m), std::vector<Partition>(m)};
      for (const auto& c : d.cycles) {
        const std::size_t s = seg[c.points[0]];
        loc.gamma_classes[s].push_back(base.class_of(c.gamma));
        loc.types[s].push_back(static_cast<int>(c.points.size()));
      }
      for (auto& t : loc.types) std::sort(t.rbegin(), t.rend());
      elems.push_back(std::move(loc));
    }
    std::vector<std::vector<Partition>> choices(m);
    for (std::size_t i = 0; i < m; ++i) choices[i] = sizes[i] ? partitions(sizes[i]) : std::vector<Partition>{{}};
    std::vector<std::size_t> pick(m, 0);
    for (;;) {
      WreathIrrLabel label;
      for (std::size_t i = 0; i < m; ++i) label.parts.push_back(choices[i][pick[i]]);
      std::vector<std::pair<std::size_t, CycloNum>> values;
      values.reserve(elems.size());
      for (const auto& loc : elems) {
        CycloNum v(1);
        for (std::size_t i = 0; i < m && !v.is_zero(); ++i) {
          if (!sizes[i]) continue;
          auto key = std::make_pair(label.parts[i], loc.types[i]);
          auto it = mn_cache.find(key);
          if (it == mn_cache.end()) it = mn_cache.emplace(key, mn_character(key.first, key.second)).first;
          if (it->second == 0) {
            v = CycloNum();
            break;
          }
          v *= CycloNum(it->second);
          for (auto c : loc.gamma_classes[i]) v *= bt.irr[i][c];
        }
        values.emplace_back(loc.index, v);
      }
      out.emplace_back(label, induce_elementwise(wg, values, elems.size()));
      std::size_t i = 0;
      while (i < m && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == m) break;
    }
  }
  return out;
}

std::string table_text(const Group& g, const CharacterTable& t) {
  const auto& cd = g.conjugacy();
  std::ostringstream os;
  os << "classes:";
  for (auto r : cd.reps) os << " " << g.element(r).str();
  os << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << "chi" << i << ":";
    for (const auto& v : t.irr[i]) os << " [" << v.str() << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace qell
