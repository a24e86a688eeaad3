#include <set>

#include "doctest.h"
#include "qell/errors.hpp"
#include "qell/lambda.hpp"

using namespace qell;

namespace {

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

Perm cycle_power(std::size_t n, long a) {
  std::vector<std::vector<int>> full(1);
  for (std::size_t i = 1; i <= n; ++i) full[0].push_back(static_cast<int>(i));
  return Perm::from_cycles(n, full).pow(a);
}

// Basis element of the cyclic context whose character sends the standard
// generator to e^{2 pi i / N}.
LambdaElem x_generator(const LambdaContextPtr& ctx, std::size_t n) {
  const auto gen = ctx->cent->index(cycle_power(n, 1));
  const auto cls = ctx->cent->class_of(gen);
  for (std::size_t i = 0; i < ctx->rank(); ++i)
    if (ctx->table().irr[i][cls] == CycloNum::zeta(static_cast<int>(n))) return LambdaElem::basis(ctx, i);
  throw Error("no such character");
}

// Pairing making the canonical basis orthonormal over Z, coefficientwise in q.
long pairing(const LambdaElem& a, const LambdaElem& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (auto [e, c] : a.coeff(i).terms()) s += c * b.coeff(i).coeff(e);
  return s;
}

std::vector<LambdaElem> sample_elements(const LambdaContextPtr& ctx) {
  std::vector<LambdaElem> out;
  for (std::size_t i = 0; i < ctx->rank(); ++i) {
    out.push_back(LambdaElem::basis(ctx, i));
    out.push_back(LambdaElem::basis(ctx, i, -1) + LambdaElem::basis(ctx, 0, 2));
  }
  return out;
}

}  // namespace

TEST_CASE("canonical bases for S3") {
  auto s3 = symmetric_group(3);
  auto c1 = lambda_context(s3, Perm::identity(3));
  auto c12 = lambda_context(s3, Perm::from_cycles(3, {{1, 2}}));
  auto c123 = lambda_context(s3, Perm::from_cycles(3, {{1, 2, 3}}));
  CHECK(c1->rank() == 3);
  CHECK(c12->rank() == 2);
  CHECK(c123->rank() == 3);
  CHECK(grade_multiset(c1) == std::multiset<mpq_class>{0, 0, 0});
  CHECK(grade_set(c12) == std::set<mpq_class>{0, mpq_class(1, 2)});
  CHECK(grade_set(c123) == std::set<mpq_class>{0, mpq_class(1, 3), mpq_class(2, 3)});
  CHECK(presentation(c12) == "Z[q^±, x_1]/(x_1^2 - q) = Z[q^{±1/2}]");
  CHECK(presentation(c123) == "Z[q^±, x_1]/(x_1^3 - q) = Z[q^{±1/3}]");
}

TEST_CASE("cyclic groups: grades and x_k^N = q^k") {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto c = cyclic_group(n);
    for (std::size_t k = 0; k < n; ++k) {
      auto ctx = lambda_context(c, cycle_power(n, static_cast<long>(k)));
      std::set<mpq_class> want;
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class g(static_cast<long>((j * k) % n), static_cast<long>(n));
        g.canonicalize();
        want.insert(g);
      }
      CHECK(grade_set(ctx) == want);
      auto x = x_generator(ctx, n);
      auto lhs = x.pow(n);
      auto rhs = LambdaElem::basis(ctx, 0, static_cast<long>(k));
      CHECK(lhs == rhs);
      for (long a = 0; a < static_cast<long>(n); ++a)
        for (long j = 0; j < 12; ++j) {
          const mpq_class t(j, 12);
          CHECK(lhs.evaluate(cycle_power(n, a), t) == rhs.evaluate(cycle_power(n, a), t));
        }
      // x_k restricts to a -> e^{2 pi i a / N}
      for (long a = 0; a < static_cast<long>(n); ++a)
        CHECK(x.evaluate(cycle_power(n, a), 0) == CycloNum::root_of_unity(mpq_class(a, static_cast<long>(n))));
    }
  }
  auto c4 = cyclic_group(4);
  CHECK(presentation(lambda_context(c4, cycle_power(4, 1))) == "Z[q^±, x_1]/(x_1^4 - q) = Z[q^{±1/4}]");
  CHECK(presentation(lambda_context(c4, cycle_power(4, 2))) == "Z[q^±, x_2]/(x_2^4 - q^2)");
  CHECK(presentation(lambda_context(c4, cycle_power(4, 0))) == "Z[q^±, x_0]/(x_0^4 - 1)");
}

TEST_CASE("products carry grades into q") {
  auto c2 = cyclic_group(2);
  auto ctx = lambda_context(c2, cycle_power(2, 1));
  auto x = x_generator(ctx, 2);
  CHECK(x * x == LambdaElem::q(ctx));
  auto c3 = cyclic_group(3);
  auto ctx3 = lambda_context(c3, cycle_power(3, 1));
  CHECK(x_generator(ctx3, 3).pow(3) == LambdaElem::q(ctx3));
  auto u = LambdaElem::unit(ctx3);
  auto y = x_generator(ctx3, 3) + LambdaElem::q(ctx3);
  CHECK(u * y == y);
  auto other = lambda_context(c2, cycle_power(2, 0));
  CHECK_THROWS_AS(x + LambdaElem::unit(other), ContextMismatch);
}

TEST_CASE("grade law on character values") {
  for (const auto& g : {symmetric_group(3), cyclic_group(6), dihedral_group(4)}) {
    for (auto rep : g->conjugacy().reps) {
      auto ctx = lambda_context(g, rep);
      auto el = sample_elements(ctx);
      for (const auto& a : el)
        for (const auto& b : el) {
          const auto ab = a * b;
          CHECK(ab == b * a);
          for (std::size_t c = 0; c < ctx->cent->class_count(); ++c)
            CHECK(ab.series_at_class(c) == a.series_at_class(c) * b.series_at_class(c));
          for (long j = 0; j < 12; ++j) {
            const mpq_class t(j, 12);
            CHECK(ab.evaluate(ctx->g_perm, t) == a.evaluate(ctx->g_perm, t) * b.evaluate(ctx->g_perm, t));
          }
        }
    }
  }
}

TEST_CASE("series decomposition round trip") {
  auto g = symmetric_group(4);
  for (auto rep : g->conjugacy().reps) {
    auto ctx = lambda_context(g, rep);
    for (const auto& a : sample_elements(ctx)) CHECK(decompose_series(ctx, 1, a.series()) == a);
    auto r = rescale(sample_elements(ctx).back(), 3);
    CHECK(decompose_series(ctx, 3, r.series()) == r);
  }
  auto ctx = lambda_context(symmetric_group(3), Perm::from_cycles(3, {{1, 2}}));
  std::vector<PhaseSeries> bad(ctx->cent->class_count());
  bad[0].add(0, CycloNum(1));
  CHECK_THROWS_AS(decompose_series(ctx, 1, bad), DecompositionError);
  std::vector<PhaseSeries> wrong_grade(ctx->cent->class_count());
  for (auto& v : wrong_grade) v.add(0, CycloNum(1));
  wrong_grade[1] = PhaseSeries(CycloNum(-1));  // sign character at grade 0
  CHECK_THROWS_AS(decompose_series(ctx, 1, wrong_grade), DecompositionError);
}

TEST_CASE("rescaling") {
  auto ctx1 = lambda_context(trivial_group(), Perm::identity(1));
  auto q = LambdaElem::q(ctx1);
  auto half = rescale(q, 2);
  CHECK(half.level() == 2);
  CHECK(half.str() == "(q^(1/2))*b[0]");
  CHECK(half.evaluate(Perm::identity(1), mpq_class(1, 1)) == CycloNum(-1));
  CHECK(rescale(q, 1) == q);
  auto c2 = cyclic_group(2);
  auto ctx = lambda_context(c2, cycle_power(2, 1));
  auto x = x_generator(ctx, 2);
  CHECK(rescale(x, 3).pow(6) == rescale(LambdaElem::basis(ctx, 0, 3), 3));
  for (const auto& a : sample_elements(ctx)) {
    CHECK(rescale(rescale(a, 2), 3) == rescale(a, 6));
    for (const auto& b : sample_elements(ctx)) CHECK(rescale(a * b, 4) == rescale(a, 4) * rescale(b, 4));
  }
}

TEST_CASE("evaluation") {
  auto ctx1 = lambda_context(trivial_group(), Perm::identity(1));
  for (long j = 0; j < 10; ++j) {
    const mpq_class t(j, 10);
    CHECK(LambdaElem::q(ctx1).evaluate(Perm::identity(1), t) == CycloNum::root_of_unity(mpq_class(j, 10)));
  }
  auto s3 = symmetric_group(3);
  auto ctx = lambda_context(s3, Perm::from_cycles(3, {{1, 2}}));
  CHECK_THROWS_AS(LambdaElem::unit(ctx).evaluate(Perm::from_cycles(3, {{1, 3}}), 0), NotCentralizing);
}

TEST_CASE("induction and restriction of contexts") {
  auto s2 = symmetric_group(2);
  auto triv = Group::generate({}, 2);
  auto ind = induce_lambda(s2, triv, Perm::identity(2), LambdaElem::unit(lambda_context(triv, Perm::identity(2))));
  auto ctx2 = lambda_context(s2, Perm::identity(2));
  CHECK(ind == LambdaElem::basis(ctx2, 0) + LambdaElem::basis(ctx2, 1));
  CHECK(induce_lambda(s2, s2, Perm::identity(2), LambdaElem::q(ctx2)) == LambdaElem::q(ctx2));

  auto s3 = symmetric_group(3);
  auto c3 = subgroup(s3, {Perm::from_cycles(3, {{1, 2, 3}})});
  const Perm s = Perm::from_cycles(3, {{1, 2, 3}});
  auto ch = lambda_context(c3, s);
  auto cg = lambda_context(s3, s);
  for (std::size_t i = 0; i < ch->rank(); ++i) {
    auto r = induce_lambda(s3, c3, s, LambdaElem::basis(ch, i));
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < cg->rank(); ++j)
      if (!r.coeff(j).is_zero()) {
        ++nonzero;
        CHECK(r.coeff(j) == LaurentPoly(1));
        CHECK(cg->grades[j] == ch->grades[i]);
      }
    CHECK(nonzero == 1);
  }
  CHECK_THROWS_AS(induce_lambda(s3, c3, Perm::from_cycles(3, {{1, 2}}), LambdaElem::unit(ch)), SigmaNotInH);

  auto s2in3 = subgroup(s3, {Perm::from_cycles(3, {{1, 2}})});
  auto c1 = lambda_context(s3, Perm::identity(3));
  auto res = restrict_lambda(s2in3, LambdaElem::basis(c1, 2));
  auto r1 = lambda_context(s2in3, Perm::identity(3));
  CHECK(res == LambdaElem::basis(r1, 0) + LambdaElem::basis(r1, 1));
  CHECK(restrict_lambda(s2in3, LambdaElem::unit(c1)) == LambdaElem::unit(r1));
}

TEST_CASE("Frobenius reciprocity at the lambda level") {
  auto s4 = symmetric_group(4);
  std::vector<GroupPtr> subs = {
      subgroup(s4, {Perm::from_cycles(4, {{1, 2}})}),
      subgroup(s4, {Perm::from_cycles(4, {{1, 2}}), Perm::from_cycles(4, {{3, 4}})}),
      subgroup(s4, {Perm::from_cycles(4, {{1, 2, 3, 4}})}),
      subgroup(s4, {Perm::from_cycles(4, {{1, 2, 3}}), Perm::from_cycles(4, {{1, 2}})}),
  };
  for (const auto& h : subs)
    for (auto rep : h->conjugacy().reps) {
      const Perm sigma = h->element(rep);
      auto ch = lambda_context(h, sigma);
      auto cg = lambda_context(s4, sigma);
      for (const auto& a : sample_elements(ch))
        for (const auto& b : sample_elements(cg))
          CHECK(pairing(induce_lambda(s4, h, sigma, a), b) == pairing(a, restrict_lambda(h, b)));
    }
}

TEST_CASE("pullback along homomorphisms") {
  auto c2 = cyclic_group(2), c4 = cyclic_group(4);
  auto phi = GroupHom::from_generators(c2, c4, {cycle_power(4, 2)});
  auto tgt = lambda_context(c4, cycle_power(4, 2));
  auto x2 = x_generator(tgt, 4);
  const std::size_t tau = c2->index(cycle_power(2, 1));
  auto pulled = restrict_lambda(phi, tau, x2);
  auto src = lambda_context(c2, tau);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < src->rank(); ++i)
    if (!pulled.coeff(i).is_zero()) idx = i;
  CHECK(src->grades[idx] == mpq_class(1, 2));
  CHECK(pulled == LambdaElem::basis(src, idx));
  auto els = sample_elements(tgt);
  for (const auto& a : els)
    for (const auto& b : els)
      CHECK(restrict_lambda(phi, tau, a * b) == restrict_lambda(phi, tau, a) * restrict_lambda(phi, tau, b));
  CHECK(restrict_lambda(phi, tau, LambdaElem::unit(tgt)) == LambdaElem::unit(src));
}
