#include "qell/power.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "qell/errors.hpp"

namespace qell {

namespace {

std::pair<Perm, Perm> split_perm(const Perm& p, std::size_t d1) {
  std::vector<std::uint16_t> a(d1), b(p.degree() - d1);
  for (std::size_t i = 0; i < d1; ++i) a[i] = p[i];
  for (std::size_t i = d1; i < p.degree(); ++i) b[i - d1] = static_cast<std::uint16_t>(p[i] - d1);
  return {Perm(std::move(a)), Perm(std::move(b))};
}

Perm concat_perm(const Perm& a, const Perm& b) {
  std::vector<std::uint16_t> img(a.degree() + b.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) img[i] = a[i];
  for (std::size_t i = 0; i < b.degree(); ++i) img[a.degree() + i] = static_cast<std::uint16_t>(b[i] + a.degree());
  return Perm(std::move(img));
}

GroupHom inclusion_hom(const GroupPtr& h, const GroupPtr& g) {
  GroupHom phi{h, g, {}};
  phi.image.reserve(h->order());
  for (const auto& p : h->elements()) phi.image.push_back(g->index(p));
  return phi;
}

// Compares two elements over groups with the same element list; returns a
// description of the first differing class or an empty string.
std::string first_difference(const QEllElem& a, const QEllElem& b) {
  const auto& ga = a.group();
  const auto& gb = b.group();
  if (ga->elements() != gb->elements()) return "the two sides live over different groups";
  for (std::size_t c = 0; c < ga->class_count(); ++c) {
    const auto& x = a.component(c);
    const auto& y = b.component(c);
    if (x.coeffs() != y.coeffs())
      return "class " + ga->element(ga->conjugacy().reps[c]).str() + ": " + x.str() + " vs " + y.str();
  }
  return {};
}

PhaseSeries phase(const mpq_class& r) {
  PhaseSeries p;
  p.add(r, CycloNum(1));
  return p;
}

}  // namespace

// ------------------------------------------------------------ wreath classes

WreathType wreath_type(const Group& g, const WreathElement& x) {
  const auto dx = cycle_orbit_data(g, x);
  WreathType t(g.class_count());
  for (const auto& c : dx.cycles) t[g.class_of(c.gamma)].push_back(static_cast<int>(c.points.size()));
  for (auto& p : t) std::sort(p.begin(), p.end(), std::greater<>());
  return t;
}

std::vector<WreathType> wreath_types(const Group& g, std::size_t n) {
  const std::size_t k = g.class_count();
  std::vector<WreathType> out;
  WreathType cur(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t cls, std::size_t left) {
    if (cls + 1 == k) {
      if (left == 0) {
        cur[cls] = {};
        out.push_back(cur);
      } else {
        for (const auto& p : partitions(static_cast<int>(left))) {
          cur[cls] = p;
          out.push_back(cur);
        }
      }
      return;
    }
    for (std::size_t m = 0; m <= left; ++m) {
      if (m == 0) {
        cur[cls] = {};
        rec(cls + 1, left);
        continue;
      }
      for (const auto& p : partitions(static_cast<int>(m))) {
        cur[cls] = p;
        rec(cls + 1, left - m);
      }
    }
  };
  rec(0, n);
  return out;
}

std::vector<WreathClass> wreath_conjugacy_classes(const Wreath& w) {
  const auto& g = *w.base();
  const auto& wg = w.group();
  std::vector<WreathClass> out;
  std::set<WreathType> seen;
  for (auto rep : wg->conjugacy().reps) {
    WreathClass c;
    c.rep = w.structured(rep);
    c.index = rep;
    c.type = wreath_type(g, c.rep);
    c.centralizer = wg->centralizer(rep);
    if (!seen.insert(c.type).second) throw Error("two wreath classes share a type");
    out.push_back(std::move(c));
  }
  const auto types = wreath_types(g, w.n());
  if (types.size() != out.size() || std::set<WreathType>(types.begin(), types.end()) != seen)
    throw Error("wreath classes disagree with the type enumeration");
  return out;
}

// ------------------------------------------------------------ power operation

PhaseSeries power_character(const Wreath& w, const QEllElem& v, const WreathElement& x, const WreathElement& h) {
  const Group& g = *w.base();
  if (v.group() != w.base()) throw ContextMismatch("element does not live over the wreath base");
  check_centralizing(g, x, x, h);
  const auto dx = cycle_orbit_data(g, x);
  const std::size_t nc = dx.cycles.size();
  std::vector<CycleMap> maps(nc);
  for (std::size_t i = 0; i < nc; ++i) maps[i] = beta_element(g, x, dx, x, dx, h, i);
  std::vector<bool> done(nc, false);
  PhaseSeries value(CycloNum(1));
  for (std::size_t c = 0; c < nc; ++c) {
    if (done[c]) continue;
    std::size_t prod = 0, offset = 0, len = 0, cur = c;
    do {
      done[cur] = true;
      prod = g.mul(maps[cur].beta, prod);
      offset += maps[cur].offset;
      ++len;
      cur = maps[cur].target;
    } while (cur != c);
    const long k = static_cast<long>(dx.cycles[c].points.size());
    const PhaseSeries s = v.series_at(dx.cycles[c].gamma, prod);
    value = value * s.affine(mpq_class(static_cast<long>(offset), k), mpq_class(static_cast<long>(len), k));
  }
  return value;
}

LambdaElem power_component(const Wreath& w, const QEllElem& v, std::size_t x) {
  const auto& wg = w.group();
  auto ctx = lambda_context(wg, x);
  const WreathElement xs = w.structured(x);
  std::vector<PhaseSeries> values;
  for (auto rep : ctx->cent->conjugacy().reps)
    values.push_back(power_character(w, v, xs, w.structured(ctx->cent->element(rep))));
  return decompose_series(ctx, 1, values);
}

QEllElem power_total(const Wreath& w, const QEllElem& v) {
  QEllElem r(w.group());
  const auto& reps = w.group()->conjugacy().reps;
  for (std::size_t c = 0; c < reps.size(); ++c) r.set_component(c, power_component(w, v, reps[c]));
  return r;
}

// ------------------------------------------------------------ axioms

bool AxiomReport::passed() const {
  return std::none_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.status == AxiomStatus::Fail; });
}

AxiomReport check_axioms(const QEllElem& v, const QEllElem& w, std::size_t n, std::size_t m, const AxiomOptions& opt) {
  const GroupPtr& g = v.group();
  AxiomReport report;
  auto record = [&](const std::string& name, const std::string& diff, const std::string& what) {
    AxiomResult r{name, diff.empty() ? AxiomStatus::Pass : AxiomStatus::Fail, diff.empty() ? what : diff};
    report.results.push_back(r);
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    report.results.push_back(AxiomResult{name, AxiomStatus::Skipped, why});
  };

  {
    const Wreath w1(g, 1, opt.cap);
    std::string diff = first_difference(power_total(w1, v), v);
    if (diff.empty()) {
      const Wreath w0(g, 0, opt.cap);
      const QEllElem p0 = power_total(w0, v);
      if (p0 != QEllElem::unit(w0.group())) diff = "P_0 is not the unit: " + p0.component(0).str();
    }
    record("i", diff, "P_1 = id and P_0 = 1");
  }

  if (n >= 1 && m >= 1) {
    const Wreath wn(g, n, opt.cap), wm(g, m, opt.cap), wnm(g, n + m, opt.cap);
    const auto prod = direct_product(wn.group(), wm.group());
    const auto lhs = restrict_hom(inclusion_hom(prod, wnm.group()), power_total(wnm, v));
    const auto rhs = kunneth(power_total(wn, v), power_total(wm, v), prod);
    record("ii", first_difference(lhs, rhs), "res P_{n+m} = P_n x P_m");
  } else {
    skip("ii", "needs n, m >= 1");
  }

  if (opt.extended || (g->order() <= 2 && n == 2 && m == 2)) {
    const Wreath wn(g, n, opt.cap);
    const Wreath outer(wn.group(), m, opt.cap);
    const Wreath wmn(g, n * m, opt.cap);
    const auto lhs = power_total(outer, power_total(wn, v));
    const auto rhs = restrict_hom(inclusion_hom(outer.group(), wmn.group()), power_total(wmn, v));
    record("iii", first_difference(lhs, rhs), "P_m P_n = res P_{mn}");
  } else {
    skip("iii", "composite check runs for n = m = 2 and |G| <= 2 unless extended");
  }

  if (n >= 1) {
    const GroupPtr& h = w.group();
    const auto gh = direct_product(g, h);
    const Wreath wgh(gh, n, opt.cap), wg(g, n, opt.cap), wh(h, n, opt.cap);
    const auto prod = direct_product(wg.group(), wh.group());
    GroupHom delta{wgh.group(), prod, {}};
    for (const auto& p : wgh.group()->elements()) {
      const WreathElement x = wgh.structured(p);
      WreathElement xg{std::vector<std::size_t>(n), x.sigma}, xh{std::vector<std::size_t>(n), x.sigma};
      for (std::size_t i = 0; i < n; ++i) {
        auto [a, b] = split_perm(gh->element(x.word[i]), g->degree());
        xg.word[i] = g->index(a);
        xh.word[i] = h->index(b);
      }
      delta.image.push_back(prod->index(concat_perm(wg.realize(xg), wh.realize(xh))));
    }
    const auto lhs = power_total(wgh, kunneth(v, w, gh));
    const auto rhs = restrict_hom(delta, kunneth(power_total(wg, v), power_total(wh, w), prod));
    record("iv", first_difference(lhs, rhs), "P_n(V x W) = res (P_n V x P_n W)");
  } else {
    skip("iv", "needs n >= 1");
  }

  if (opt.throw_on_failure)
    for (const auto& r : report.results)
      if (r.status == AxiomStatus::Fail) throw AxiomViolation("axiom (" + r.axiom + ") fails at " + r.detail);
  return report;
}

// ------------------------------------------------------------ fibered wreath basis

FiberedWreathBasis repfibwr_basis(const GroupPtr& g, std::size_t sigma, std::size_t d, std::size_t cap) {
  FiberedWreathBasis out;
  out.ctx = lambda_context(g, sigma);
  out.wreath = std::make_shared<const Wreath>(out.ctx->cent, d, cap);
  for (auto& [label, chi] : wreath_irreducibles(*out.wreath)) {
    mpq_class ph = 0;
    for (std::size_t i = 0; i < label.parts.size(); ++i) {
      long size = 0;
      for (int part : label.parts[i]) size += part;
      ph += out.ctx->grades[i] * size;
    }
    out.elems.push_back(FiberedWreathBasisElem{label, std::move(chi), ph});
  }
  return out;
}

// ------------------------------------------------------------ P-bar

std::vector<DivisorPair> divisor_pairs(std::size_t n) {
  std::vector<DivisorPair> out;
  for (std::size_t e = 1; e <= n; ++e)
    if (n % e == 0) out.push_back(DivisorPair{n / e, e});
  return out;
}

AdamsBarElem AdamsBarElem::operator+(const AdamsBarElem& o) const {
  if (group != o.group || n != o.n) throw ContextMismatch("different groups or orders");
  AdamsBarElem r = *this;
  for (std::size_t c = 0; c < coeffs.size(); ++c)
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (std::size_t j = 0; j < coeffs[c][p].size(); ++j) r.coeffs[c][p][j] += o.coeffs[c][p][j];
  return r;
}

AdamsBarElem AdamsBarElem::operator*(const AdamsBarElem& o) const {
  if (group != o.group || n != o.n) throw ContextMismatch("different groups or orders");
  AdamsBarElem r = *this;
  for (std::size_t c = 0; c < coeffs.size(); ++c)
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [d, e] = pairs[p];
      const auto& a = coeffs[c][p];
      const auto& b = o.coeffs[c][p];
      std::vector<LambdaElem> out(e, LambdaElem(a[0].ctx()));
      for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) {
          LambdaElem t = a[i] * b[j];
          // q'^e = q^d
          if (i + j >= e) t = t.scaled(LaurentPoly::monomial(static_cast<long>(d)));
          out[(i + j) % e] += t;
        }
      r.coeffs[c][p] = std::move(out);
    }
  return r;
}

bool AdamsBarElem::operator==(const AdamsBarElem& o) const {
  return group == o.group && n == o.n && pairs == o.pairs && coeffs == o.coeffs;
}

std::string AdamsBarElem::str() const {
  std::ostringstream os;
  const auto& reps = group->conjugacy().reps;
  for (std::size_t c = 0; c < coeffs.size(); ++c)
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      os << group->element(reps[c]).str() << " (d,e)=(" << pairs[p].d << "," << pairs[p].e << "):";
      bool any = false;
      for (std::size_t j = 0; j < coeffs[c][p].size(); ++j) {
        if (coeffs[c][p][j].is_zero()) continue;
        os << (any ? " + " : " ") << "[" << coeffs[c][p][j].str() << "]";
        if (j == 1) os << "*q'";
        if (j > 1) os << "*q'^" << j;
        any = true;
      }
      if (!any) os << " 0";
      os << "\n";
    }
  return os.str();
}

std::vector<LambdaElem> invert_qprime(const LambdaContextPtr& ctx, std::size_t d, std::size_t e,
                                      const std::function<PhaseSeries(std::size_t, std::size_t)>& x) {
  auto g = ctx->group.lock();
  if (!g) throw Error("group of a context no longer exists");
  const auto& reps = ctx->cent->conjugacy().reps;
  const long el = static_cast<long>(e);
  std::vector<std::vector<PhaseSeries>> values(e, std::vector<PhaseSeries>(reps.size()));
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const std::size_t h = g->index(ctx->cent->element(reps[r]));
    std::vector<PhaseSeries> xs;
    for (std::size_t s = 0; s < e; ++s) xs.push_back(x(s, h));
    for (std::size_t j = 0; j < e; ++j) {
      PhaseSeries f;
      for (std::size_t s = 0; s < e; ++s)
        f += xs[s].scaled(CycloNum::zeta(static_cast<int>(e), -static_cast<long>(j * s)));
      f = f.scaled(CycloNum(mpq_class(1, el))) * phase(mpq_class(-static_cast<long>(j * d), el));
      values[j][r] = std::move(f);
    }
  }
  std::vector<LambdaElem> out;
  for (std::size_t j = 0; j < e; ++j) out.push_back(decompose_series(ctx, 1, values[j]));
  return out;
}

AdamsBarElem adams_bar(const QEllElem& v, std::size_t n) {
  const GroupPtr& g = v.group();
  AdamsBarElem r{g, n, divisor_pairs(n), {}};
  const auto& reps = g->conjugacy().reps;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const std::size_t x = reps[c];
    const auto& ctx = v.component(c).ctx();
    std::vector<std::vector<LambdaElem>> per;
    for (const auto [d, e] : r.pairs) {
      const long el = static_cast<long>(e);
      const std::size_t xe = g->pow(x, el);
      per.push_back(invert_qprime(ctx, d, e, [&](std::size_t s, std::size_t h) {
        const std::size_t y = g->mul(g->pow(h, static_cast<long>(d)), g->pow(x, -static_cast<long>(s)));
        return v.series_at(xe, y).affine(mpq_class(static_cast<long>(s), el), mpq_class(static_cast<long>(d), el));
      }));
    }
    r.coeffs.push_back(std::move(per));
  }
  return r;
}

AdamsBarElem adams_bar_pipeline(const QEllElem& v, std::size_t n, std::size_t cap) {
  const GroupPtr& g = v.group();
  const Wreath w(g, n, cap);
  AdamsBarElem r{g, n, divisor_pairs(n), {}};
  const auto& reps = g->conjugacy().reps;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const auto& ctx = v.component(c).ctx();
    std::vector<std::vector<LambdaElem>> per;
    for (const auto [d, e] : r.pairs) {
      const WreathElement x{std::vector<std::size_t>(n, reps[c]), pure_cycle_element(d, e)};
      const LambdaElem comp = power_component(w, v, w.index_of(x));
      per.push_back(invert_qprime(ctx, d, e, [&](std::size_t s, std::size_t h) {
        const WreathElement y{std::vector<std::size_t>(n, h), z_point(d, e, s)};
        return comp.series_at(w.realize(y));
      }));
    }
    r.coeffs.push_back(std::move(per));
  }
  return r;
}

// ------------------------------------------------------------ points of S_n

Perm pure_cycle_element(std::size_t d, std::size_t e) {
  std::vector<std::uint16_t> img(d * e);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t j = 0; j < e; ++j) img[b * e + j] = static_cast<std::uint16_t>(b * e + (j + 1) % e);
  return Perm(std::move(img));
}

Perm z_point(std::size_t d, std::size_t e, std::size_t s) {
  std::vector<std::uint16_t> img(d * e);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t j = 0; j < e; ++j)
      img[b * e + j] = static_cast<std::uint16_t>(b + 1 < d ? (b + 1) * e + j : (j + s) % e);
  return Perm(std::move(img));
}

}  // namespace qell
