#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "qell/errors.hpp"
#include "qell/lattice.hpp"
#include "qell/power.hpp"
#include "qell/qell.hpp"
#include "qell/tate.hpp"

using namespace qell;

namespace {

mpz_class det2(const IntMatrix& a, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
}

mpz_class gcd_all(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

PhaseSeries single(const mpq_class& exponent, const CycloNum& c) {
  PhaseSeries p;
  p.add(exponent, c);
  return p;
}

}  // namespace

TEST_CASE("Smith invariants") {
  CHECK(smith_invariants({}).empty());
  CHECK(smith_invariants({{2, 4}, {6, 8}}) == std::vector<mpz_class>{2, 4});
  CHECK(smith_invariants({{1, 1}}) == std::vector<mpz_class>{1});
  CHECK(smith_invariants({{0, 0}, {0, 0}}).empty());
  CHECK(smith_invariants({{2, 0}, {0, 3}}) == std::vector<mpz_class>{1, 6});
  // determinantal divisors of random 2 x 3 matrices
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a(2, std::vector<mpz_class>(3));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    const auto inv = smith_invariants(a);
    const mpz_class d1 = gcd_all({a[0][0], a[0][1], a[0][2], a[1][0], a[1][1], a[1][2]});
    const mpz_class d2 = gcd_all({det2(a, 0, 1, 0, 1), det2(a, 0, 1, 0, 2), det2(a, 0, 1, 1, 2)});
    std::size_t rank = d1 == 0 ? 0 : (d2 == 0 ? 1 : 2);
    REQUIRE(inv.size() == rank);
    if (rank >= 1) CHECK(inv[0] == d1);
    if (rank == 2) {
      CHECK(inv[0] * inv[1] == d2);
      CHECK(inv[1] % inv[0] == 0);
    }
  }
}

TEST_CASE("transfer ideal generators") {
  const auto t2 = transfer_ideal(2);
  const auto& g2 = t2.group;
  REQUIRE(t2.generators.size() == 2);
  REQUIRE(t2.generators[0].size() == 1);
  CHECK(t2.generators[1].empty());  // nothing in the Young subgroup is conjugate to (12)
  const auto& reg = t2.generators[0][0];
  CHECK(reg.i == 1);
  CHECK(reg.j == 1);
  // the regular representation: each irreducible once, at grade 0
  for (const auto& c : reg.value.coeffs()) CHECK(c == LaurentPoly(1));

  const auto t3 = transfer_ideal(3);
  const auto c3 = t3.group->class_of(t3.group->index(Perm::from_cycles(3, {{1, 2, 3}})));
  CHECK(t3.generators[c3].empty());

  // each generator is the component of a transfer of a single basis element
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto t = transfer_ideal(n);
    const GroupPtr& g = t.group;
    for (std::size_t cls = 0; cls < t.generators.size(); ++cls)
      for (const auto& gen : t.generators[cls]) {
        std::vector<Perm> gens;
        for (std::size_t a = 0; a + 1 < n; ++a)
          if (a + 1 != gen.i) gens.push_back(Perm::from_cycles(n, {{static_cast<int>(a) + 1, static_cast<int>(a) + 2}}));
        const auto h = subgroup(g, gens);
        QEllElem a(h);
        const std::size_t rho_cls = h->class_of(h->index(gen.rho));
        a.set_component(rho_cls, LambdaElem::basis(a.component(rho_cls).ctx(), gen.source));
        CHECK(transfer(g, h, a).component(cls) == gen.value);
      }
  }
  CHECK_THROWS_AS(transfer_ideal(7), CapExceeded);
}

TEST_CASE("subgroup rings") {
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t e = 1; e <= 3; ++e) {
      const auto qp = SubgroupRingElem::qprime_power(d, e, 1);
      SubgroupRingElem p = SubgroupRingElem::qprime_power(d, e, 0);
      for (std::size_t k = 0; k < e; ++k) p = p * qp;
      SubgroupRingElem qd = SubgroupRingElem::zero(d, e);
      qd.c[0] = LaurentPoly::monomial(static_cast<long>(d));
      CHECK(p == qd);
    }
  std::mt19937 rng(22);
  std::uniform_int_distribution<long> coeff(-3, 3), exp(-2, 2);
  auto random_elem = [&](std::size_t d, std::size_t e) {
    SubgroupRingElem r = SubgroupRingElem::zero(d, e);
    for (auto& c : r.c) c.add(exp(rng), coeff(rng));
    return r;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_elem(2, 3), b = random_elem(2, 3), c = random_elem(2, 3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  CHECK(SubgroupRingElem::qprime_power(1, 2, 1).str() == "(1)*q'");
}

TEST_CASE("evaluation map and q'") {
  const auto g2 = tate_group(2);
  const auto id_ctx = lambda_context(g2, 0);
  std::multiset<std::string> images;
  for (std::size_t k = 0; k < id_ctx->rank(); ++k) images.insert(evaluation_map(LambdaElem::basis(id_ctx, k)).str());
  CHECK(images == std::multiset<std::string>{"1", "-1"});  // trivial and sign
  CHECK(evaluation_map(LambdaElem::q(id_ctx)).str() == "q");

  // (x)_2 at the transposition is q^{1/2}; at the identity it is q^2
  const Perm t = Perm::from_cycles(2, {{1, 2}});
  const auto qt = q_prime(2, t);
  CHECK(canonical_basis(qt.ctx())[1].grade == mpq_class(1, 2));
  CHECK(qt == LambdaElem::basis(qt.ctx(), 1));
  CHECK(q_prime(2, Perm::identity(2)) == LambdaElem::q(id_ctx).pow(2));
  CHECK_THROWS_AS(q_prime(3, Perm::from_cycles(3, {{1, 2}})), WrongCycleType);
  CHECK_THROWS_AS(evaluation_map(LambdaElem::unit(lambda_context(tate_group(3), Perm::from_cycles(3, {{1, 2}})))),
                  WrongCycleType);

  // q' at [h, t] is e^{2 pi i (sum of block rotations + d t)/e}
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto [d, e] : divisor_pairs(n)) {
      const Perm s = pure_cycle_element(d, e);
      const auto qp = q_prime(n, s);
      REQUIRE(qp.ctx()->g_perm == s);
      for (const auto& h : qp.ctx()->cent->elements()) {
        std::size_t rot = 0;
        for (std::size_t b = 0; b < d; ++b) rot += h[b * e] % e;
        CHECK(qp.series_at(h) == single(mpq_class(static_cast<long>(d), static_cast<long>(e)),
                                        CycloNum::zeta(static_cast<int>(e), static_cast<long>(rot))));
      }
    }

  // q' agrees with the closed form of P-bar applied to q
  const auto one = trivial_group();
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto ab = adams_bar(QEllElem::q(one), n);
    for (std::size_t p = 0; p < ab.pairs.size(); ++p) {
      const auto [d, e] = ab.pairs[p];
      const auto img = evaluation_map(q_prime(n, pure_cycle_element(d, e)));
      for (std::size_t j = 0; j < e; ++j) CHECK(img.c[j] == ab.coeffs[0][p][j].coeff(0));
    }
  }
}

TEST_CASE("quotient by the transfer ideal") {
  const std::vector<std::size_t> expected = {0, 1, 3, 4, 7, 6, 12};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto report = quotient_and_match(n);
    CHECK(report.passed);
    CHECK(report.total_rank == expected[n]);
    CHECK(report.expected_rank == expected[n]);
    std::size_t case_two = 0;
    for (const auto& cv : report.classes) {
      CHECK(cv.passed);
      CHECK(cv.torsion_free);
      if (cv.case_id == 2) {
        ++case_two;
        CHECK(cv.d * cv.e == n);
        CHECK(cv.survivors == cv.e);
        CHECK(cv.phi.all());
        REQUIRE(cv.vandermonde_det);
        CHECK(!cv.vandermonde_det->is_zero());
      } else {
        CHECK(cv.survivors == 0);
        // certificates multiply out to the basis elements
        const auto ctx = lambda_context(tate_group(n), cv.sigma);
        const auto ideal = transfer_ideal(n);
        REQUIRE(cv.certificates.size() == cv.rank_before);
        for (const auto& cert : cv.certificates) {
          LambdaElem b(ctx);
          b.add_term(cert.basis, cert.shift, cert.sign);
          CHECK(ideal.generators[cv.class_index][cert.generator].value == b);
        }
      }
    }
    std::size_t divisors = 0;
    for (std::size_t e = 1; e <= n; ++e) divisors += n % e == 0;
    CHECK(case_two == divisors);
  }
  // N = 2: the identity class keeps one survivor, the transposition both
  const auto r2 = quotient_and_match(2);
  CHECK(r2.classes[0].survivors == 1);
  CHECK(r2.classes[0].generators == 1);
  CHECK(r2.classes[1].survivors == 2);
  // N = 4: (12)(34) is the (2, 2) factor
  const auto r4 = quotient_and_match(4);
  const auto g4 = tate_group(4);
  const auto& cv = r4.classes[g4->class_of(g4->index(Perm::from_cycles(4, {{1, 2}, {3, 4}})))];
  CHECK(cv.case_id == 2);
  CHECK(cv.d == 2);
  CHECK(cv.e == 2);
  CHECK(cv.survivors == 2);
}
