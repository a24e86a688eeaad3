#include "qell/qell.hpp"

#include <algorithm>
#include <map>

#include "qell/errors.hpp"

namespace qell {

namespace {

std::pair<Perm, Perm> split(const Perm& p, std::size_t d1) {
  std::vector<std::uint16_t> a(d1), b(p.degree() - d1);
  for (std::size_t i = 0; i < d1; ++i) a[i] = p[i];
  for (std::size_t i = d1; i < p.degree(); ++i) b[i - d1] = static_cast<std::uint16_t>(p[i] - d1);
  return {Perm(std::move(a)), Perm(std::move(b))};
}

GroupPtr owner(const LambdaElem& a) {
  auto g = a.ctx()->group.lock();
  if (!g) throw Error("group of a lambda element no longer exists");
  return g;
}

// Memoized series of one element, keyed by component and centralizer class.
class SeriesCache {
 public:
  explicit SeriesCache(const QEllElem& a) : a_(a) {}

  const PhaseSeries& at(std::size_t g, std::size_t h) {
    const GroupPtr& grp = a_.group();
    const auto& cd = grp->conjugacy();
    const std::size_t cls = cd.class_of[g];
    const std::size_t c = *grp->conjugator(g, cd.reps[cls]);
    if (grp->mul(g, h) != grp->mul(h, g)) throw NotCentralizing("element does not centralize");
    const LambdaElem& comp = a_.component(cls);
    const Perm x = grp->element(grp->mul(grp->inv(c), grp->mul(h, c)));
    const auto& cent = comp.ctx()->cent;
    const std::size_t key = cent->class_of(*cent->find(x));
    auto [it, fresh] = memo_.try_emplace({cls, key});
    if (fresh) it->second = comp.series_at_class(key);
    return it->second;
  }

 private:
  const QEllElem& a_;
  std::map<std::pair<std::size_t, std::size_t>, PhaseSeries> memo_;
};

}  // namespace

QEllElem::QEllElem(GroupPtr g) : g_(std::move(g)) {
  for (auto rep : g_->conjugacy().reps) comps_.emplace_back(lambda_context(g_, rep));
}

QEllElem QEllElem::unit(const GroupPtr& g) {
  QEllElem r(g);
  for (auto& c : r.comps_) c = LambdaElem::unit(c.ctx());
  return r;
}

QEllElem QEllElem::q(const GroupPtr& g) {
  QEllElem r(g);
  for (auto& c : r.comps_) c = LambdaElem::q(c.ctx());
  return r;
}

void QEllElem::set_component(std::size_t cls, LambdaElem v) {
  if (v.ctx() != comps_.at(cls).ctx() || v.level() != 1) throw ContextMismatch("component over the wrong context");
  comps_[cls] = std::move(v);
}

void QEllElem::check_same(const QEllElem& o) const {
  if (g_ != o.g_) throw ContextMismatch("elements over different groups");
}

QEllElem QEllElem::operator+(const QEllElem& o) const {
  check_same(o);
  QEllElem r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] + o.comps_[i];
  return r;
}

QEllElem QEllElem::operator-(const QEllElem& o) const {
  check_same(o);
  QEllElem r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] - o.comps_[i];
  return r;
}

QEllElem QEllElem::operator*(const QEllElem& o) const {
  check_same(o);
  QEllElem r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] * o.comps_[i];
  return r;
}

QEllElem QEllElem::scaled(const LaurentPoly& p) const {
  QEllElem r = *this;
  for (auto& c : r.comps_) c = c.scaled(p);
  return r;
}

bool QEllElem::operator==(const QEllElem& o) const { return g_ == o.g_ && comps_ == o.comps_; }

PhaseSeries QEllElem::series_at(std::size_t g, std::size_t h) const {
  const auto& cd = g_->conjugacy();
  const std::size_t cls = cd.class_of[g];
  const std::size_t rep = cd.reps[cls];
  const std::size_t c = *g_->conjugator(g, rep);  // g c = c rep
  if (g_->mul(g, h) != g_->mul(h, g)) throw NotCentralizing("element does not centralize");
  return comps_[cls].series_at(g_->element(g_->mul(g_->inv(c), g_->mul(h, c))));
}

std::vector<std::size_t> qell_component_ranks(const GroupPtr& g) {
  std::vector<std::size_t> r;
  for (auto rep : g->conjugacy().reps) r.push_back(lambda_context(g, rep)->rank());
  return r;
}

std::size_t qell_rank(const GroupPtr& g) {
  std::size_t s = 0;
  for (auto r : qell_component_ranks(g)) s += r;
  return s;
}

LambdaElem transport(const LambdaElem& a, std::size_t target) {
  const GroupPtr g = owner(a);
  const std::size_t src = a.ctx()->g;
  auto c = g->conjugator(target, src);  // target c = c src
  if (!c) throw NotCentralizing("transport between non-conjugate elements");
  auto ctx = lambda_context(g, target);
  if (ctx == a.ctx()) return a;
  std::vector<PhaseSeries> values;
  for (auto rep : ctx->cent->conjugacy().reps) {
    const std::size_t h = g->index(ctx->cent->element(rep));
    values.push_back(a.series_at(g->element(g->mul(g->inv(*c), g->mul(h, *c)))));
  }
  return decompose_series(ctx, a.level(), values);
}

QEllElem kunneth(const QEllElem& a, const QEllElem& b, const GroupPtr& gh) {
  const GroupPtr& g = a.group();
  const GroupPtr& h = b.group();
  if (gh->degree() != g->degree() + h->degree() || gh->order() != g->order() * h->order())
    throw ContextMismatch("product group does not match the factors");
  QEllElem r(gh);
  SeriesCache sa(a), sb(b);
  const auto& cd = gh->conjugacy();
  for (std::size_t cls = 0; cls < cd.count(); ++cls) {
    auto [rg, rh] = split(gh->element(cd.reps[cls]), g->degree());
    const std::size_t gi = g->index(rg), hi = h->index(rh);
    auto ctx = r.component(cls).ctx();
    std::vector<PhaseSeries> values;
    for (auto rep : ctx->cent->conjugacy().reps) {
      auto [x, y] = split(ctx->cent->element(rep), g->degree());
      values.push_back(sa.at(gi, g->index(x)) * sb.at(hi, h->index(y)));
    }
    r.set_component(cls, decompose_series(ctx, 1, values));
  }
  return r;
}

QEllElem restrict_hom(const GroupHom& phi, const QEllElem& b) {
  if (b.group() != phi.dst) throw ContextMismatch("element does not live over the target group");
  QEllElem r(phi.src);
  SeriesCache sb(b);
  const auto& cd = phi.src->conjugacy();
  for (std::size_t cls = 0; cls < cd.count(); ++cls) {
    const std::size_t tau = cd.reps[cls];
    auto ctx = r.component(cls).ctx();
    std::vector<PhaseSeries> values;
    for (auto rep : ctx->cent->conjugacy().reps) {
      const std::size_t x = phi.src->index(ctx->cent->element(rep));
      values.push_back(sb.at(phi.image[tau], phi.image[x]));
    }
    r.set_component(cls, decompose_series(ctx, 1, values));
  }
  return r;
}

QEllElem transfer(const GroupPtr& g, const GroupPtr& h, const QEllElem& a) {
  if (!g->contains(*h)) throw NotSubgroup("transfer needs a subgroup");
  if (a.group() != h) throw ContextMismatch("element does not live over the subgroup");
  QEllElem r(g);
  const auto& hd = h->conjugacy();
  const auto& gd = g->conjugacy();
  std::vector<LambdaElem> sums = r.components();
  for (std::size_t hc = 0; hc < hd.count(); ++hc) {
    const Perm rho = h->element(hd.reps[hc]);
    const std::size_t rg = g->index(rho);
    const std::size_t cls = gd.class_of[rg];
    const LambdaElem induced = induce_lambda(g, h, rho, a.component(hc));
    sums[cls] += transport(induced, gd.reps[cls]);
  }
  for (std::size_t cls = 0; cls < gd.count(); ++cls) r.set_component(cls, sums[cls]);
  return r;
}

// ------------------------------------------------------------------ G-sets

FiniteGSet coset_space(const GroupPtr& g, const GroupPtr& h) {
  if (!g->contains(*h)) throw NotSubgroup("coset space needs a subgroup");
  std::vector<std::size_t> hidx;
  for (const auto& p : h->elements()) hidx.push_back(g->index(p));
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> point_of(g->order(), none);
  FiniteGSet x;
  x.group = g;
  for (std::size_t e = 0; e < g->order(); ++e) {
    if (point_of[e] != none) continue;
    for (auto y : hidx) point_of[g->mul(e, y)] = x.size;
    x.coset_rep.push_back(e);
    ++x.size;
  }
  x.act.assign(g->order(), std::vector<std::size_t>(x.size));
  for (std::size_t e = 0; e < g->order(); ++e)
    for (std::size_t p = 0; p < x.size; ++p) x.act[e][p] = point_of[g->mul(e, x.coset_rep[p])];
  return x;
}

FiniteGSet trivial_gset(const GroupPtr& g, std::size_t n) {
  FiniteGSet x;
  x.group = g;
  x.size = n;
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  x.act.assign(g->order(), id);
  return x;
}

FiniteGSet regular_gset(const GroupPtr& g) { return coset_space(g, Group::generate({}, g->degree())); }

std::size_t GSetQEllStructure::rank() const {
  std::size_t s = 0;
  for (const auto& per : orbits)
    for (const auto& o : per) s += o.ctx->rank();
  return s;
}

GSetQEllStructure qell_of_gset(const FiniteGSet& x) {
  GSetQEllStructure s;
  s.set = x;
  const Group& g = *x.group;
  for (auto rep : g.conjugacy().reps) {
    auto cent = g.centralizer(rep);
    std::vector<std::size_t> cidx;
    for (const auto& p : cent->elements()) cidx.push_back(g.index(p));
    std::vector<bool> seen(x.size, false);
    std::vector<GSetOrbit> orbits;
    for (std::size_t p = 0; p < x.size; ++p) {
      if (seen[p] || x.act[rep][p] != p) continue;
      std::vector<Perm> stab;
      for (std::size_t k = 0; k < cidx.size(); ++k) {
        const std::size_t y = x.act[cidx[k]][p];
        seen[y] = true;
        if (y == p) stab.push_back(cent->element(k));
      }
      GSetOrbit o;
      o.basepoint = p;
      o.stabilizer = Group::from_elements(std::move(stab), g.degree());
      o.ctx = lambda_context(o.stabilizer, g.element(rep));
      orbits.push_back(std::move(o));
    }
    s.orbits.push_back(std::move(orbits));
  }
  return s;
}

GSetQEllElem gset_unit(const GSetQEllStructure& s) {
  GSetQEllElem r;
  for (const auto& per : s.orbits) {
    std::vector<LambdaElem> v;
    for (const auto& o : per) v.push_back(LambdaElem::unit(o.ctx));
    r.values.push_back(std::move(v));
  }
  return r;
}

GSetQEllElem gset_mul(const GSetQEllElem& a, const GSetQEllElem& b) {
  GSetQEllElem r = a;
  for (std::size_t c = 0; c < a.values.size(); ++c)
    for (std::size_t o = 0; o < a.values[c].size(); ++o) r.values[c][o] = a.values[c][o] * b.values.at(c).at(o);
  return r;
}

QEllElem change_of_group(const GSetQEllStructure& s, const GroupPtr& h, const GSetQEllElem& a) {
  const GroupPtr& g = s.set.group;
  if (s.set.coset_rep.empty()) throw Error("change of group needs a coset space");
  const auto& gd = g->conjugacy();
  QEllElem r(h);
  const auto& hd = h->conjugacy();
  for (std::size_t hc = 0; hc < hd.count(); ++hc) {
    const std::size_t tau = g->index(h->element(hd.reps[hc]));
    const std::size_t cls = gd.class_of[tau];
    const std::size_t sigma = gd.reps[cls];
    const std::size_t x = *g->conjugator(tau, sigma);  // tau = x sigma x^-1
    const std::size_t p = s.set.act[g->inv(x)][0];
    auto cent = g->centralizer(sigma);
    std::size_t orbit = 0, c = 0;
    bool found = false;
    for (std::size_t o = 0; o < s.orbits[cls].size() && !found; ++o)
      for (const auto& cp : cent->elements()) {
        const std::size_t ci = g->index(cp);
        if (s.set.act[ci][s.orbits[cls][o].basepoint] == p) {
          orbit = o;
          c = ci;
          found = true;
          break;
        }
      }
    if (!found) throw Error("fixed point outside every orbit");
    const std::size_t xc = g->mul(x, c);
    auto ctx = r.component(hc).ctx();
    std::vector<PhaseSeries> values;
    for (auto rep : ctx->cent->conjugacy().reps) {
      const std::size_t y = g->index(ctx->cent->element(rep));
      values.push_back(a.values[cls][orbit].series_at(g->element(g->mul(g->inv(xc), g->mul(y, xc)))));
    }
    r.set_component(hc, decompose_series(ctx, 1, values));
  }
  return r;
}

GSetQEllElem change_of_group_inverse(const GSetQEllStructure& s, const QEllElem& b) {
  const GroupPtr& g = s.set.group;
  const GroupPtr& h = b.group();
  if (s.set.coset_rep.empty()) throw Error("change of group needs a coset space");
  const auto& gd = g->conjugacy();
  GSetQEllElem r;
  for (std::size_t cls = 0; cls < gd.count(); ++cls) {
    const std::size_t sigma = gd.reps[cls];
    std::vector<LambdaElem> per;
    for (const auto& o : s.orbits[cls]) {
      const std::size_t u = s.set.coset_rep[o.basepoint];
      const std::size_t tau = h->index(g->element(g->mul(g->inv(u), g->mul(sigma, u))));
      std::vector<PhaseSeries> values;
      for (auto rep : o.ctx->cent->conjugacy().reps) {
        const std::size_t st = g->index(o.ctx->cent->element(rep));
        values.push_back(b.series_at(tau, h->index(g->element(g->mul(g->inv(u), g->mul(st, u))))));
      }
      per.push_back(decompose_series(o.ctx, 1, values));
    }
    r.values.push_back(std::move(per));
  }
  return r;
}

}  // namespace qell
