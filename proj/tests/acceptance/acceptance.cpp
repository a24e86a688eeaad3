#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "qell/character.hpp"
#include "qell/errors.hpp"
#include "qell/power.hpp"
#include "qell/qell.hpp"
#include "qell/tate.hpp"

using namespace qell;

namespace {

// Collects failures of one criterion; the first few are printed.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::string note;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

Perm cycle_power(std::size_t n, long a) {
  std::vector<std::vector<int>> full(1);
  for (std::size_t i = 1; i <= n; ++i) full[0].push_back(static_cast<int>(i));
  return Perm::from_cycles(n, full).pow(a);
}

std::set<mpq_class> grade_set(const LambdaContextPtr& ctx) {
  std::set<mpq_class> s;
  for (const auto& b : canonical_basis(ctx)) s.insert(b.grade);
  return s;
}

std::multiset<mpq_class> grade_multiset(const LambdaContextPtr& ctx) {
  std::multiset<mpq_class> s;
  for (const auto& b : canonical_basis(ctx)) s.insert(b.grade);
  return s;
}

PhaseSeries single(const mpq_class& exponent, const CycloNum& c) {
  PhaseSeries p;
  p.add(exponent, c);
  return p;
}

LambdaElem random_lambda(const LambdaContextPtr& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<long> coeff(-2, 2), exp(-1, 1);
  LambdaElem r(ctx);
  for (std::size_t i = 0; i < ctx->rank(); ++i)
    for (int k = 0; k < 2; ++k) r.add_term(i, exp(rng), coeff(rng));
  return r;
}

QEllElem random_qell(const GroupPtr& g, std::mt19937& rng) {
  QEllElem r(g);
  for (std::size_t c = 0; c < g->class_count(); ++c) r.set_component(c, random_lambda(r.component(c).ctx(), rng));
  return r;
}

ClassFn random_virtual(const Group& g, std::mt19937& rng) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::vector<long> c(g.class_count());
  for (auto& x : c) x = coeff(rng);
  return combine(g, c);
}

GSetQEllElem random_gset_elem(const GSetQEllStructure& s, std::mt19937& rng) {
  GSetQEllElem r;
  for (const auto& per : s.orbits) {
    std::vector<LambdaElem> v;
    for (const auto& o : per) v.push_back(random_lambda(o.ctx, rng));
    r.values.push_back(std::move(v));
  }
  return r;
}

GroupHom inclusion(const GroupPtr& h, const GroupPtr& g) {
  GroupHom phi{h, g, {}};
  for (const auto& p : h->elements()) phi.image.push_back(g->index(p));
  return phi;
}

// Coefficientwise pairing making the canonical basis orthonormal.
long pairing(const LambdaElem& a, const LambdaElem& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (auto [e, c] : a.coeff(i).terms()) s += c * b.coeff(i).coeff(e);
  return s;
}

// --------------------------------------------------------------------------

void criterion1(Tally& t) {
  const auto s3 = symmetric_group(3);
  const auto c1 = lambda_context(s3, Perm::identity(3));
  const auto c12 = lambda_context(s3, Perm::from_cycles(3, {{1, 2}}));
  const auto c123 = lambda_context(s3, Perm::from_cycles(3, {{1, 2, 3}}));
  t.expect(c1->rank() == 3 && c12->rank() == 2 && c123->rank() == 3, "S3 ranks");
  t.expect(grade_multiset(c1) == std::multiset<mpq_class>{0, 0, 0}, "grades at the identity");
  t.expect(grade_multiset(c12) == std::multiset<mpq_class>{0, mpq_class(1, 2)}, "grades at a transposition");
  t.expect(grade_multiset(c123) == std::multiset<mpq_class>{0, mpq_class(1, 3), mpq_class(2, 3)},
           "grades at a 3-cycle");

  for (std::size_t n = 1; n <= 8; ++n) {
    const auto c = cyclic_group(n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto ctx = lambda_context(c, cycle_power(n, static_cast<long>(k)));
      const auto gen_cls = ctx->cent->class_of(ctx->cent->index(cycle_power(n, 1)));
      std::optional<LambdaElem> x;
      for (std::size_t i = 0; i < ctx->rank(); ++i)
        if (ctx->table().irr[i][gen_cls] == CycloNum::zeta(static_cast<int>(n))) x = LambdaElem::basis(ctx, i);
      const std::string tag = "N=" + std::to_string(n) + " k=" + std::to_string(k);
      if (!x) {
        t.expect(false, tag + ": no character with generator value e^{2 pi i/N}");
        continue;
      }
      const auto lhs = x->pow(static_cast<long>(n));
      const auto rhs = LambdaElem::q(ctx).pow(static_cast<long>(k));
      t.expect(lhs == rhs, tag + ": x_k^N != q^k");
      for (long a = 0; a < static_cast<long>(n); ++a)
        for (long j = 0; j < 6; ++j) {
          const mpq_class s(j, 6);
          t.expect(lhs.evaluate(cycle_power(n, a), s) == rhs.evaluate(cycle_power(n, a), s),
                   tag + ": evaluation mismatch");
        }
    }
  }
}

void criterion2(Tally& t) {
  for (const auto& base : {trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group(3)})
    for (std::size_t n = 2; n <= 3; ++n) {
      const Wreath w(base, n);
      const auto& wg = w.group();
      if (wg->order() > 1296) continue;
      const auto irr = wreath_irreducibles(w);
      const auto& table = dixon_character_table(*wg);
      std::multiset<ClassFn> a(table.irr.begin(), table.irr.end()), b;
      for (const auto& [label, chi] : irr) b.insert(chi);
      t.expect(a == b, "wreath irreducibles differ from the table of order " + std::to_string(wg->order()));
    }
}

// P_n(q) over the trivial group: at sigma, with cycles of length k grouped into
// blocks, the character at [h, t] is the product over blocks of
// e^{2 pi i (M_k + d_k t)/k}, where d_k counts the k-cycles and M_k sums the
// rotations r with h(p_c) = sigma^r(p_{c'}) for base points p_c.
PhaseSeries rotation_oracle(const Perm& sigma, const Perm& h) {
  const std::size_t n = sigma.degree();
  std::vector<std::size_t> base(n), length(n);
  std::vector<bool> seen(n);
  for (std::size_t p = 0; p < n; ++p) {
    if (seen[p]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t x = p; !seen[x]; x = sigma[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    for (auto x : cyc) base[x] = p, length[x] = cyc.size();
  }
  std::map<std::size_t, std::pair<long, long>> blocks;  // k -> (d_k, M_k)
  for (std::size_t p = 0; p < n; ++p) {
    if (base[p] != p) continue;
    const std::size_t target = h[p];
    long r = 0;
    for (std::size_t x = base[target]; x != target; x = sigma[x]) ++r;
    auto& [d, m] = blocks[length[p]];
    ++d;
    m += r;
  }
  mpq_class exponent = 0;
  CycloNum value(1);
  for (const auto& [k, dm] : blocks) {
    exponent += mpq_class(dm.first, static_cast<long>(k));
    value *= CycloNum::zeta(static_cast<int>(k), dm.second);
  }
  exponent.canonicalize();
  return single(exponent, value);
}

void criterion3(Tally& t) {
  const auto one = trivial_group();
  const auto q = QEllElem::q(one);
  std::set<Partition> seen;
  for (std::size_t n = 1; n <= 4; ++n) {
    const Wreath w(one, n);
    const auto p = power_total(w, q);
    const auto& wg = w.group();
    for (std::size_t c = 0; c < wg->class_count(); ++c) {
      const auto& comp = p.component(c);
      const Perm& sigma = comp.ctx()->g_perm;
      const std::string tag = "n=" + std::to_string(n) + " type " + partition_str(cycle_type(sigma));
      seen.insert(cycle_type(sigma));
      long total = 0;
      for (const auto& poly : comp.coeffs())
        for (auto [e, m] : poly.terms()) {
          t.expect(m >= 0, tag + ": negative multiplicity");
          total += m;
        }
      t.expect(total == 1, tag + ": not a single basis element");
      for (const auto& h : comp.ctx()->cent->elements())
        t.expect(comp.series_at(h) == rotation_oracle(sigma, h), tag + ": character differs at " + h.str());
    }
  }
  for (const Partition& want : std::vector<Partition>{{2}, {3}, {2, 1}, {2, 2}, {4}})
    t.expect(seen.count(want) == 1, "missing component of type " + partition_str(want));
}

void criterion4(Tally& t) {
  const auto one = trivial_group();
  const auto c2 = cyclic_group(2);
  const auto k4 = direct_product(c2, c2);
  std::mt19937 rng(41);
  for (const auto& g : {one, c2, k4})
    for (const auto& h : {one, c2, k4}) {
      if (g->order() * h->order() > 4) continue;
      const auto v = random_qell(g, rng);
      const auto w = random_qell(h, rng);
      for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = 1; n + m <= 4; ++m) {
          const std::string tag = "|G|=" + std::to_string(g->order()) + " |H|=" + std::to_string(h->order()) +
                                  " n=" + std::to_string(n) + " m=" + std::to_string(m);
          AxiomOptions opt;
          opt.throw_on_failure = false;
          const auto report = check_axioms(v, w, n, m, opt);
          for (const auto& r : report.results) {
            const bool required = r.axiom != "iii" || (n == 2 && m == 2 && g->order() <= 2);
            if (r.status == AxiomStatus::Fail || (required && r.status != AxiomStatus::Pass))
              t.expect(false, tag + " axiom " + r.axiom + ": " + r.detail);
            else
              t.expect(true, "");
          }
        }
    }
}

void criterion5(Tally& t) {
  std::map<std::size_t, double> seconds;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto start = std::chrono::steady_clock::now();
    TateOptions opt;
    opt.throw_on_failure = false;
    const auto report = quotient_and_match(n, opt);
    std::size_t sigma = 0;
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) sigma += d;
    const std::string tag = "N=" + std::to_string(n);
    t.expect(report.total_rank == sigma, tag + ": surviving rank " + std::to_string(report.total_rank));
    for (const auto& c : report.classes) {
      t.expect(c.passed, tag + " class " + c.sigma.str() + ": " + c.failure);
      if (c.case_id == 2) t.expect(c.phi.relation, tag + ": q'^e != q^d at " + c.sigma.str());
    }
    t.expect(report.passed, tag + ": report not passed");
    seconds[n] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  const double small = seconds[2] + seconds[3] + seconds[4];
  t.expect(small <= 60, "N <= 4 over 60 s");
  t.expect(seconds[5] <= 600, "N = 5 over 600 s");
  char buf[96];
  std::snprintf(buf, sizeof buf, "; N<=4 %.2f s, N=5 %.2f s, N=6 %.2f s", small, seconds[5], seconds[6]);
  t.note = buf;
}

void criterion6(Tally& t) {
  const std::vector<GroupPtr> corpus = {trivial_group(),    cyclic_group(2),  cyclic_group(3),
                                        cyclic_group(4),    symmetric_group(3),
                                        direct_product(cyclic_group(2), cyclic_group(2)), dihedral_group(4)};
  const auto c2 = cyclic_group(2);
  std::mt19937 rng(61);
  for (const auto& g : corpus) {
    const std::string name = "|G|=" + std::to_string(g->order());
    const auto& table = g->character_table();
    for (std::size_t i = 0; i < table.size(); ++i)
      for (std::size_t j = 0; j < table.size(); ++j)
        t.expect(inner_product(*g, table.irr[i], table.irr[j]) == CycloNum(i == j ? 1 : 0), name + ": row orthogonality");
    const auto& cd = g->conjugacy();
    for (std::size_t a = 0; a < cd.count(); ++a)
      for (std::size_t b = 0; b < cd.count(); ++b) {
        CycloNum s;
        for (std::size_t i = 0; i < table.size(); ++i) s += table.irr[i][a] * table.irr[i][b].conj();
        t.expect(s == (a == b ? CycloNum(static_cast<long>(g->order() / cd.sizes[a])) : CycloNum()),
                 name + ": column orthogonality");
      }
    const auto gc2 = direct_product(g, c2);
    t.expect(qell_rank(gc2) == qell_rank(g) * qell_rank(c2), name + ": Kunneth rank");

    std::uniform_int_distribution<std::size_t> pick(0, g->order() - 1);
    std::uniform_int_distribution<std::size_t> power(2, 4);
    for (int trial = 0; trial < 100; ++trial) {
      const std::string tag = name + " trial " + std::to_string(trial);
      std::vector<Perm> gens;
      for (int k = 0; k < trial % 3; ++k) gens.push_back(g->element(pick(rng)));
      const auto h = subgroup(g, gens);

      // Frobenius reciprocity on class functions
      const auto chi = random_virtual(*h, rng);
      const auto psi = random_virtual(*g, rng);
      t.expect(inner_product(*g, induce(*g, *h, chi), psi) == inner_product(*h, chi, restrict_fn(*g, *h, psi)),
               tag + ": Frobenius reciprocity");

      // Frobenius reciprocity for the rotation-extended contexts
      const Perm sigma = h->element(std::uniform_int_distribution<std::size_t>(0, h->order() - 1)(rng));
      const auto ha = random_lambda(lambda_context(h, sigma), rng);
      const auto gb = random_lambda(lambda_context(g, sigma), rng);
      t.expect(pairing(induce_lambda(g, h, sigma, ha), gb) == pairing(ha, restrict_lambda(h, gb)),
               tag + ": Lambda-level Frobenius reciprocity");

      // Kunneth point isomorphism is multiplicative and additive
      const auto a1 = random_qell(g, rng), a2 = random_qell(g, rng);
      const auto b1 = random_qell(c2, rng), b2 = random_qell(c2, rng);
      t.expect(kunneth(a1 * a2, b1 * b2, gc2) == kunneth(a1, b1, gc2) * kunneth(a2, b2, gc2),
               tag + ": Kunneth multiplicativity");
      t.expect(kunneth(a1 + a2, b1, gc2) == kunneth(a1, b1, gc2) + kunneth(a2, b1, gc2), tag + ": Kunneth additivity");

      // change of group round trips through G/H
      const auto s = qell_of_gset(coset_space(g, h));
      t.expect(s.rank() == qell_rank(h), tag + ": rank of G/H");
      const auto hb = random_qell(h, rng);
      t.expect(change_of_group(s, h, change_of_group_inverse(s, hb)) == hb, tag + ": change of group round trip");
      const auto ga = random_gset_elem(s, rng);
      t.expect(change_of_group_inverse(s, change_of_group(s, h, ga)) == ga, tag + ": inverse round trip");

      // transfer projection formula
      const auto ta = random_qell(h, rng);
      t.expect(transfer(g, h, ta * restrict_hom(inclusion(h, g), a1)) == transfer(g, h, ta) * a1,
               tag + ": projection formula");

      // closed-form power operation is a ring map
      const std::size_t n = power(rng);
      t.expect(adams_bar(a1 * a2, n) == adams_bar(a1, n) * adams_bar(a2, n), tag + ": adams_bar multiplicative");
      t.expect(adams_bar(a1 + a2, n) == adams_bar(a1, n) + adams_bar(a2, n), tag + ": adams_bar additive");
      t.expect(adams_bar(QEllElem::unit(g), n) == adams_bar(QEllElem::unit(g), n) * adams_bar(QEllElem::unit(g), n),
               tag + ": adams_bar unit");
    }
  }
}

struct Criterion {
  int id;
  std::string what;
  double budget;  // seconds
  std::function<void(Tally&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Lambda tables for S3 and x_k^N = q^k for N <= 8", 1, criterion1},
      {2, "wreath irreducibles equal brute-force tables", 30, criterion2},
      {3, "power operation of q over the trivial group, n <= 4", 10, criterion3},
      {4, "power operation axioms", 120, criterion4},
      {5, "transfer quotient matches the Tate factors for N = 2..6", 660, criterion5},
      {6, "structural properties on 100 random inputs per group", 120, criterion6},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget;
    const bool ok = t.failures.empty() && in_time;
    all = all && ok;
    std::printf("%s criterion %d: %s (%zu checks, %.2f s of %.0f s%s)\n", ok ? "PASS" : "FAIL", c.id,
                c.what.c_str(), t.checks, secs, c.budget, t.note.c_str());
    for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i) std::printf("  %s\n", t.failures[i].c_str());
    if (!in_time) std::printf("  over the time budget\n");
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
