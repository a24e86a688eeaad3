#include "qell/tate.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "qell/errors.hpp"
#include "qell/lattice.hpp"
#include "qell/power.hpp"
#include "qell/qell.hpp"
#include "qell/wreath.hpp"

namespace qell {

namespace {

const Wreath& tate_wreath(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<Wreath>> cache;
  if (n == 0) throw Error("symmetric group of degree 0 is not supported");
  std::lock_guard lock(mu);
  auto& w = cache[n];
  if (!w) w = std::make_unique<Wreath>(trivial_group(), n);
  return *w;
}

const LambdaContextPtr& scalar_context() {
  static const GroupPtr one = trivial_group();
  static const LambdaContextPtr ctx = lambda_context(one, 0);
  return ctx;
}

Perm transposition(std::size_t n, std::size_t a) {
  return Perm::from_cycles(n, {{static_cast<int>(a) + 1, static_cast<int>(a) + 2}});
}

std::size_t divisor_sum(std::size_t n) {
  std::size_t s = 0;
  for (std::size_t e = 1; e <= n; ++e)
    if (n % e == 0) s += e;
  return s;
}

// Generator as (q-shift, integer vector) when it is one; nullopt otherwise.
std::optional<std::pair<long, std::vector<long>>> monomial_vector(const LambdaElem& a) {
  std::optional<long> shift;
  std::vector<long> v(a.coeffs().size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& terms = a.coeff(i).terms();
    if (terms.empty()) continue;
    if (terms.size() != 1) return std::nullopt;
    const auto [exp, c] = *terms.begin();
    if (shift && *shift != exp) return std::nullopt;
    shift = exp;
    v[i] = c;
  }
  return std::make_pair(shift.value_or(0), v);
}

}  // namespace

GroupPtr tate_group(std::size_t n) { return tate_wreath(n).group(); }

TransferIdealData transfer_ideal(std::size_t n, const TateOptions& opt) {
  if (n > opt.max_n) throw CapExceeded("N = " + std::to_string(n) + " exceeds the limit " + std::to_string(opt.max_n));
  const GroupPtr g = tate_group(n);
  const auto& reps = g->conjugacy().reps;
  TransferIdealData data{n, g, std::vector<std::vector<TransferGenerator>>(reps.size())};
  for (std::size_t j = 1; j < n; ++j) {
    const std::size_t i = n - j;
    std::vector<Perm> gens;
    for (std::size_t a = 0; a + 1 < i; ++a) gens.push_back(transposition(n, a));
    for (std::size_t a = i; a + 1 < n; ++a) gens.push_back(transposition(n, a));
    const GroupPtr h = subgroup(g, gens);
    for (auto rho : h->conjugacy().reps) {
      const Perm& rp = h->element(rho);
      const std::size_t cls = g->class_of(g->index(rp));
      const auto ctx = lambda_context(h, rho);
      for (std::size_t k = 0; k < ctx->rank(); ++k) {
        const LambdaElem induced = induce_lambda(g, h, rp, LambdaElem::basis(ctx, k));
        data.generators[cls].push_back({i, j, rp, k, transport(induced, reps[cls])});
      }
    }
  }
  return data;
}

// ------------------------------------------------------------ target ring

SubgroupRingElem SubgroupRingElem::zero(std::size_t d, std::size_t e) {
  return SubgroupRingElem{d, e, std::vector<LaurentPoly>(e)};
}

SubgroupRingElem SubgroupRingElem::qprime_power(std::size_t d, std::size_t e, std::size_t a) {
  SubgroupRingElem r = zero(d, e);
  r.c[a % e] = LaurentPoly::monomial(static_cast<long>((a / e) * d));
  return r;
}

SubgroupRingElem SubgroupRingElem::operator+(const SubgroupRingElem& o) const {
  if (d != o.d || e != o.e) throw ContextMismatch("different factors");
  SubgroupRingElem r = *this;
  for (std::size_t j = 0; j < e; ++j) r.c[j] += o.c[j];
  return r;
}

SubgroupRingElem SubgroupRingElem::operator-(const SubgroupRingElem& o) const {
  if (d != o.d || e != o.e) throw ContextMismatch("different factors");
  SubgroupRingElem r = *this;
  for (std::size_t j = 0; j < e; ++j) r.c[j] = r.c[j] - o.c[j];
  return r;
}

SubgroupRingElem SubgroupRingElem::operator*(const SubgroupRingElem& o) const {
  if (d != o.d || e != o.e) throw ContextMismatch("different factors");
  SubgroupRingElem r = zero(d, e);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) {
      LaurentPoly t = c[i] * o.c[j];
      if (i + j >= e) t = t.shifted(static_cast<long>(d));
      r.c[(i + j) % e] += t;
    }
  return r;
}

bool SubgroupRingElem::is_zero() const {
  for (const auto& p : c)
    if (!p.is_zero()) return false;
  return true;
}

std::string SubgroupRingElem::str() const {
  std::string out;
  for (std::size_t j = 0; j < e; ++j) {
    if (c[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (j == 0)
      out += c[j].str();
    else
      out += "(" + c[j].str() + ")*q'" + (j > 1 ? "^" + std::to_string(j) : "");
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------ evaluation

std::optional<std::pair<std::size_t, std::size_t>> pure_cycle_type(const Perm& sigma) {
  const Partition type = cycle_type(sigma);
  if (type.empty()) return std::nullopt;
  for (int k : type)
    if (k != type[0]) return std::nullopt;
  return std::make_pair(type.size(), static_cast<std::size_t>(type[0]));
}

SubgroupRingElem evaluation_map(const LambdaElem& a) {
  const auto& ctx = a.ctx();
  const GroupPtr g = ctx->group.lock();
  if (!g) throw Error("group of a context no longer exists");
  if (a.level() != 1) throw ContextMismatch("evaluation needs a level-1 element");
  const auto type = pure_cycle_type(ctx->g_perm);
  if (!type) throw WrongCycleType(ctx->g_perm.str() + " has cycles of unequal lengths");
  const auto [d, e] = *type;
  // ctx->g = x s0 x^-1 with s0 the pure cycle element
  const auto x = g->conjugator(ctx->g, g->index(pure_cycle_element(d, e)));
  if (!x) throw Error("pure cycle element is not conjugate to the context element");
  const Perm& xp = g->element(*x);
  std::vector<PhaseSeries> xs;
  for (std::size_t s = 0; s < e; ++s) xs.push_back(a.series_at(xp * z_point(d, e, s) * xp.inverse()));
  const auto f = invert_qprime(scalar_context(), d, e, [&](std::size_t s, std::size_t) { return xs[s]; });
  SubgroupRingElem r = SubgroupRingElem::zero(d, e);
  for (std::size_t j = 0; j < e; ++j) r.c[j] = f[j].coeff(0);
  return r;
}

LambdaElem q_prime(std::size_t n, const Perm& sigma) {
  if (!pure_cycle_type(sigma)) throw WrongCycleType(sigma.str() + " has cycles of unequal lengths");
  const Wreath& w = tate_wreath(n);
  const GroupPtr& g = w.group();
  const std::size_t rep = g->conjugacy().reps[g->class_of(g->index(sigma))];
  return power_component(w, QEllElem::q(w.base()), rep);
}

// ------------------------------------------------------------ verification

namespace {

void eliminate(ClassVerification& cv, const LambdaContextPtr& ctx, const std::vector<TransferGenerator>& gens) {
  const auto basis = canonical_basis(ctx);
  std::map<mpq_class, std::vector<std::size_t>> by_grade;
  for (std::size_t k = 0; k < basis.size(); ++k) by_grade[basis[k].grade].push_back(k);
  std::map<mpq_class, IntMatrix> rows;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto mv = monomial_vector(gens[gi].value);
    if (!mv) throw VerificationFailed("generator " + std::to_string(gi) + " is not a q-monomial times an integer vector");
    std::optional<mpq_class> grade;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (mv->second[k] != 0) {
        if (grade && *grade != basis[k].grade)
          throw VerificationFailed("generator " + std::to_string(gi) + " mixes rotation grades");
        grade = basis[k].grade;
      }
    if (!grade) continue;
    std::vector<mpz_class> row;
    for (auto k : by_grade[*grade]) row.emplace_back(mv->second[k]);
    rows[*grade].push_back(std::move(row));
  }
  cv.survivors = 0;
  cv.torsion_free = true;
  for (const auto& [grade, idx] : by_grade) {
    const auto inv = smith_invariants(rows[grade]);
    cv.survivors += idx.size() - inv.size();
    for (const auto& f : inv)
      if (f != 1) cv.torsion_free = false;
  }
}

void certify_case_one(ClassVerification& cv, const LambdaContextPtr& ctx, const std::vector<TransferGenerator>& gens) {
  for (std::size_t k = 0; k < ctx->rank(); ++k) {
    bool found = false;
    for (std::size_t gi = 0; gi < gens.size() && !found; ++gi) {
      const auto mv = monomial_vector(gens[gi].value);
      if (!mv) continue;
      const auto& v = mv->second;
      if (v[k] != 1 && v[k] != -1) continue;
      bool single = true;
      for (std::size_t l = 0; l < v.size(); ++l)
        if (l != k && v[l] != 0) single = false;
      if (!single) continue;
      cv.certificates.push_back({k, gi, mv->first, v[k]});
      found = true;
    }
    if (!found) throw VerificationFailed("basis element " + std::to_string(k) + " is not a generator");
  }
}

void check_case_two(ClassVerification& cv, std::size_t n, const LambdaContextPtr& ctx,
                    const std::vector<TransferGenerator>& gens) {
  const std::size_t d = cv.d, e = cv.e;
  cv.phi.kills_generators = true;
  for (const auto& gen : gens)
    if (!evaluation_map(gen.value).is_zero()) cv.phi.kills_generators = false;

  const LambdaElem qp = q_prime(n, cv.sigma);
  if (qp.ctx() != ctx) throw ContextMismatch("q' lives over a different context");
  cv.phi.qprime_powers = true;
  LambdaElem power = LambdaElem::unit(ctx);
  for (std::size_t a = 0; a < e; ++a) {
    if (evaluation_map(power) != SubgroupRingElem::qprime_power(d, e, a)) cv.phi.qprime_powers = false;
    power = power * qp;
  }
  cv.phi.relation = evaluation_map(power - LambdaElem::q(ctx).pow(d)).is_zero();

  std::vector<SubgroupRingElem> images;
  for (std::size_t k = 0; k < ctx->rank(); ++k) images.push_back(evaluation_map(LambdaElem::basis(ctx, k)));
  cv.phi.multiplicative = true;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i; j < images.size(); ++j)
      if (evaluation_map(LambdaElem::basis(ctx, i) * LambdaElem::basis(ctx, j)) != images[i] * images[j])
        cv.phi.multiplicative = false;

  CycloNum det(1);
  const int el = static_cast<int>(e);
  for (std::size_t j = 0; j < e; ++j)
    for (std::size_t k = j + 1; k < e; ++k)
      det = det * (CycloNum::zeta(el, static_cast<long>(k)) - CycloNum::zeta(el, static_cast<long>(j)));
  cv.vandermonde_det = det;
}

}  // namespace

TateReport quotient_and_match(std::size_t n, const TateOptions& opt) {
  const TransferIdealData ideal = transfer_ideal(n, opt);
  const GroupPtr& g = ideal.group;
  const auto& reps = g->conjugacy().reps;
  TateReport report;
  report.n = n;
  report.expected_rank = divisor_sum(n);
  for (std::size_t c = 0; c < reps.size(); ++c) {
    ClassVerification cv;
    cv.class_index = c;
    cv.sigma = g->element(reps[c]);
    const auto ctx = lambda_context(g, reps[c]);
    const auto& gens = ideal.generators[c];
    cv.rank_before = ctx->rank();
    cv.generators = gens.size();
    try {
      eliminate(cv, ctx, gens);
      if (const auto type = pure_cycle_type(cv.sigma)) {
        cv.case_id = 2;
        std::tie(cv.d, cv.e) = *type;
        check_case_two(cv, n, ctx, gens);
        if (!cv.phi.all())
          cv.failure = "evaluation map checks failed";
        else if (cv.vandermonde_det->is_zero())
          cv.failure = "Vandermonde determinant vanishes";
        else if (cv.survivors != cv.e || !cv.torsion_free)
          cv.failure = "quotient is not free of rank " + std::to_string(cv.e);
      } else {
        cv.case_id = 1;
        certify_case_one(cv, ctx, gens);
        if (cv.survivors != 0) cv.failure = "basis elements survive the quotient";
      }
    } catch (const Error& ex) {
      cv.failure = ex.what();
    }
    cv.passed = cv.failure.empty();
    report.total_rank += cv.survivors;
    report.classes.push_back(std::move(cv));
  }
  report.passed = report.total_rank == report.expected_rank;
  for (const auto& cv : report.classes) report.passed = report.passed && cv.passed;
  if (!report.passed && opt.throw_on_failure) {
    for (const auto& cv : report.classes)
      if (!cv.passed) throw VerificationFailed("class " + cv.sigma.str() + ": " + cv.failure);
    throw VerificationFailed("total rank " + std::to_string(report.total_rank) + " differs from " +
                             std::to_string(report.expected_rank));
  }
  return report;
}

}  // namespace qell
