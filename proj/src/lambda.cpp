#include "qell/lambda.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qell/errors.hpp"

namespace qell {

namespace {

mpq_class canonical(mpq_class r) {
  r.canonicalize();
  return r;
}

mpq_class frac(const mpq_class& r) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return canonical(r - mpq_class(f));
}

long floor_of(const mpq_class& r) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return f.get_si();
}

std::string var_name(long level) { return level == 1 ? "q" : "q^(1/" + std::to_string(level) + ")"; }

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(long exp, long coeff) {
  LaurentPoly p;
  p.add(exp, coeff);
  return p;
}

long LaurentPoly::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add(long exp, long coeff) {
  if (!coeff) return;
  auto& v = terms_[exp];
  v += coeff;
  if (!v) terms_.erase(exp);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto [e, c] : o.terms_) r.add(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto [a, x] : terms_)
    for (auto [b, y] : o.terms_) r.add(a + b, x * y);
  return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
  LaurentPoly r;
  for (auto [a, x] : terms_) r.terms_[a + e] = x;
  return r;
}

CycloNum LaurentPoly::evaluate(const CycloNum& x) const {
  CycloNum s;
  for (auto [e, c] : terms_) s += CycloNum(c) * x.pow(e);
  return s;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto [e, c] : terms_) {
    const long a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ---------------------------------------------------------------- PhaseSeries

PhaseSeries::PhaseSeries(const CycloNum& constant) { add(0, constant); }

void PhaseSeries::add(const mpq_class& r, const CycloNum& c) {
  if (c.is_zero()) return;
  const mpq_class key = canonical(r);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PhaseSeries PhaseSeries::operator+(const PhaseSeries& o) const {
  PhaseSeries r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

PhaseSeries PhaseSeries::operator-(const PhaseSeries& o) const {
  PhaseSeries r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, -c);
  return r;
}

PhaseSeries PhaseSeries::operator*(const PhaseSeries& o) const {
  PhaseSeries r;
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) r.add(a + b, x * y);
  return r;
}

PhaseSeries PhaseSeries::scaled(const CycloNum& c) const {
  PhaseSeries r;
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

PhaseSeries PhaseSeries::affine(const mpq_class& a, const mpq_class& b) const {
  PhaseSeries r;
  for (const auto& [e, x] : terms_) r.add(e * b, x * CycloNum::root_of_unity(frac(e * a)));
  return r;
}

CycloNum PhaseSeries::at(const mpq_class& t) const {
  CycloNum s;
  for (const auto& [e, x] : terms_) s += x * CycloNum::root_of_unity(frac(e * t));
  return s;
}

std::string PhaseSeries::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, x] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + x.str() + ")";
    if (e != 0) s += "*e(" + rational_str(e) + "t)";
  }
  return s;
}

// ---------------------------------------------------------------- contexts

const std::vector<std::vector<std::vector<ProductTerm>>>& LambdaContext::products() const {
  std::call_once(products_once_, [this] {
    const auto& t = table();
    const std::size_t n = t.size();
    products_.assign(n, std::vector<std::vector<ProductTerm>>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        std::vector<ProductTerm> terms;
        for (auto [irr, m] : decompose(*cent, tensor(t.irr[a], t.irr[b]))) {
          const mpq_class carry = grades[a] + grades[b] - grades[irr];
          if (carry.get_den() != 1) throw Error("grade law violated in a tensor product");
          terms.push_back(ProductTerm{irr, m, carry.get_num().get_si()});
        }
        products_[a][b] = terms;
        products_[b][a] = terms;
      }
  });
  return products_;
}

LambdaContextPtr lambda_context(const GroupPtr& g, std::size_t elem) {
  return g->lambda_context_cache(elem, [&] {
    auto ctx = std::make_shared<LambdaContext>();
    ctx->group = g;
    ctx->g = elem;
    ctx->g_perm = g->element(elem);
    ctx->cent = g->centralizer(elem);
    ctx->g_in_cent = ctx->cent->index(ctx->g_perm);
    ctx->order_g = ctx->g_perm.order();
    const auto& t = ctx->table();
    const std::size_t cls = ctx->cent->class_of(ctx->g_in_cent);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const CycloNum scalar = t.irr[i][cls] * CycloNum(mpq_class(1, t.degrees[i]));
      ctx->grades.push_back(rational_angle(scalar));
      if (CycloNum::root_of_unity(ctx->grades.back()) * CycloNum(t.degrees[i]) != t.irr[i][cls])
        throw Error("central element does not act by a scalar");
    }
    return std::shared_ptr<const LambdaContext>(ctx);
  });
}

LambdaContextPtr lambda_context(const GroupPtr& g, const Perm& elem) { return lambda_context(g, g->index(elem)); }

std::vector<LambdaBasisIndex> canonical_basis(const LambdaContextPtr& ctx) {
  std::vector<LambdaBasisIndex> out;
  for (std::size_t i = 0; i < ctx->rank(); ++i) out.push_back(LambdaBasisIndex{i, ctx->grades[i]});
  return out;
}

// ---------------------------------------------------------------- LambdaElem

LambdaElem::LambdaElem(LambdaContextPtr ctx, long level)
    : ctx_(std::move(ctx)), level_(level), coeffs_(ctx_->rank()) {
  if (level < 1) throw Error("level must be positive");
}

LambdaElem LambdaElem::unit(const LambdaContextPtr& ctx) { return basis(ctx, 0, 0); }

LambdaElem LambdaElem::q(const LambdaContextPtr& ctx) { return basis(ctx, 0, 1); }

LambdaElem LambdaElem::basis(const LambdaContextPtr& ctx, std::size_t irr, long exp) {
  LambdaElem r(ctx);
  if (irr >= ctx->rank()) throw Error("basis index out of range");
  r.coeffs_[irr].add(exp, 1);
  return r;
}

void LambdaElem::add_term(std::size_t irr, long exp, long c) { coeffs_.at(irr).add(exp, c); }

bool LambdaElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

void LambdaElem::check_same(const LambdaElem& o) const {
  if (ctx_ != o.ctx_) throw ContextMismatch("elements live over different contexts");
  if (level_ != o.level_) throw ContextMismatch("elements live at different levels");
}

LambdaElem LambdaElem::operator+(const LambdaElem& o) const {
  check_same(o);
  LambdaElem r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

LambdaElem LambdaElem::operator-() const {
  LambdaElem r = *this;
  for (auto& p : r.coeffs_) p = -p;
  return r;
}

LambdaElem LambdaElem::operator-(const LambdaElem& o) const { return *this + (-o); }

LambdaElem LambdaElem::operator*(const LambdaElem& o) const {
  check_same(o);
  const auto& prod = ctx_->products();
  LambdaElem r(ctx_, level_);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < coeffs_.size(); ++b) {
      if (o.coeffs_[b].is_zero()) continue;
      const LaurentPoly pq = coeffs_[a] * o.coeffs_[b];
      for (const auto& t : prod[a][b])
        for (auto [e, c] : pq.terms()) r.coeffs_[t.irr].add(e + t.carry, c * t.mult);
    }
  }
  return r;
}

LambdaElem LambdaElem::scaled(const LaurentPoly& p) const {
  LambdaElem r = *this;
  for (auto& c : r.coeffs_) c = c * p;
  return r;
}

LambdaElem LambdaElem::pow(unsigned long e) const {
  LambdaElem r = unit(ctx_);
  r.level_ = level_;
  LambdaElem b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

PhaseSeries LambdaElem::series_at_class(std::size_t cls) const {
  const auto& t = ctx_->table();
  // Accumulate densely in Q(zeta_L) per exponent and reduce once per exponent.
  int L = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) L = std::lcm(L, t.irr[i][cls].conductor());
  std::map<mpq_class, std::vector<mpq_class>> acc;
  mpq_class r, prod;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const CycloNum& chi = t.irr[i][cls];
    if (chi.is_zero()) continue;
    const int step = L / chi.conductor();
    for (const auto& [e, c] : coeffs_[i].terms()) {
      r = mpq_class(e) + ctx_->grades[i];
      r /= level_;
      auto& a = acc.try_emplace(canonical(r), std::vector<mpq_class>(L)).first->second;
      for (const auto& [k, v] : chi.terms()) {
        prod = v * c;
        a[k * step] += prod;
      }
    }
  }
  PhaseSeries s;
  for (auto& [x, a] : acc) s.add(x, CycloNum::from_coeffs(L, std::move(a)));
  return s;
}

std::vector<PhaseSeries> LambdaElem::series() const {
  std::vector<PhaseSeries> out;
  for (std::size_t c = 0; c < ctx_->cent->class_count(); ++c) out.push_back(series_at_class(c));
  return out;
}

PhaseSeries LambdaElem::series_at(const Perm& h) const {
  auto idx = ctx_->cent->find(h);
  if (!idx) throw NotCentralizing("element " + h.str() + " does not centralize " + ctx_->g_perm.str());
  return series_at_class(ctx_->cent->class_of(*idx));
}

CycloNum LambdaElem::evaluate(const Perm& h, const mpq_class& t) const { return series_at(h).at(t); }

bool LambdaElem::operator==(const LambdaElem& o) const {
  return ctx_ == o.ctx_ && level_ == o.level_ && coeffs_ == o.coeffs_;
}

std::string LambdaElem::str() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[i].str(var_name(level_)) + ")*b[" + std::to_string(i) + "]";
  }
  return s.empty() ? "0" : s;
}

LambdaElem decompose_series(const LambdaContextPtr& ctx, long level, const std::vector<PhaseSeries>& values) {
  const Group& c = *ctx->cent;
  if (values.size() != c.class_count()) throw ContextMismatch("one phase series per centralizer class required");
  std::set<mpq_class> exponents;
  for (const auto& v : values)
    for (const auto& [e, x] : v.terms()) exponents.insert(e);
  LambdaElem r(ctx, level);
  for (const auto& e : exponents) {
    ClassFn fn;
    for (const auto& v : values) {
      auto it = v.terms().find(e);
      fn.push_back(it == v.terms().end() ? CycloNum() : it->second);
    }
    std::vector<long> m;
    try {
      m = decompose_virtual(c, fn);
    } catch (const NotCharacter& err) {
      throw DecompositionError("exponent " + rational_str(e) + ": " + err.what());
    }
    const mpq_class scaled = canonical(e * level);
    const mpq_class grade = frac(scaled);
    const long power = floor_of(scaled);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (ctx->grades[i] != grade)
        throw DecompositionError("irreducible " + std::to_string(i) + " of grade " + rational_str(ctx->grades[i]) +
                                 " appears at exponent " + rational_str(e));
      r.add_term(i, power, m[i]);
    }
  }
  return r;
}

LambdaElem rescale(const LambdaElem& a, long k) {
  if (k < 1) throw Error("rescaling factor must be positive");
  LambdaElem r(a.ctx(), a.level() * k);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (auto [e, c] : a.coeff(i).terms()) r.add_term(i, e, c);
  return r;
}

LambdaElem induce_lambda(const GroupPtr& g, const GroupPtr& h, const Perm& sigma, const LambdaElem& a) {
  if (!h->contains(sigma)) throw SigmaNotInH("element " + sigma.str() + " is not in the subgroup");
  if (!g->contains(*h)) throw NotSubgroup("induction needs a subgroup");
  auto ch = lambda_context(h, sigma);
  if (a.ctx() != ch) throw ContextMismatch("element does not live over the subgroup context");
  auto cg = lambda_context(g, sigma);
  const auto& th = ch->table();
  LambdaElem r(cg, a.level());
  for (std::size_t i = 0; i < th.size(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (auto [j, m] : decompose(*cg->cent, induce(*cg->cent, *ch->cent, th.irr[i]))) {
      if (cg->grades[j] != ch->grades[i]) throw Error("induction changed a grade");
      for (auto [e, c] : a.coeff(i).terms()) r.add_term(j, e, c * m);
    }
  }
  return r;
}

LambdaElem restrict_lambda(const GroupPtr& h, const LambdaElem& a) {
  auto cg = a.ctx();
  auto ch = lambda_context(h, cg->g_perm);
  const auto& tg = cg->table();
  LambdaElem r(ch, a.level());
  for (std::size_t i = 0; i < tg.size(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (auto [j, m] : decompose(*ch->cent, restrict_fn(*cg->cent, *ch->cent, tg.irr[i]))) {
      if (ch->grades[j] != cg->grades[i]) throw Error("restriction changed a grade");
      for (auto [e, c] : a.coeff(i).terms()) r.add_term(j, e, c * m);
    }
  }
  return r;
}

LambdaElem restrict_lambda(const GroupHom& phi, std::size_t tau, const LambdaElem& b) {
  auto src = lambda_context(phi.src, tau);
  if (b.ctx()->g_perm != phi.dst->element(phi.image[tau]))
    throw ContextMismatch("element does not live over the image context");
  std::vector<PhaseSeries> values;
  for (auto rep : src->cent->conjugacy().reps) {
    const std::size_t x = phi.src->index(src->cent->element(rep));
    values.push_back(b.series_at(phi.dst->element(phi.image[x])));
  }
  return decompose_series(src, b.level(), values);
}

namespace {

struct CyclicFactor {
  std::size_t gen;  // element index in the centralizer
  std::size_t order;
};

// Smallest list of generators realizing an abelian group as a product of
// cyclic groups (brute force; presentation text only).
std::vector<CyclicFactor> cyclic_factors(const Group& c) {
  const std::size_t n = c.order();
  if (n == 1) return {};
  for (std::size_t r = 1; r <= 4; ++r) {
    std::vector<std::size_t> pick(r, 0);
    auto rec = [&](auto&& self, std::size_t at, std::size_t from) -> bool {
      if (at == r) {
        std::size_t prod = 1;
        for (auto p : pick) prod *= c.element(p).order();
        if (prod != n) return false;
        std::set<std::size_t> seen{0};
        std::vector<std::size_t> cur{0};
        for (auto p : pick) {
          std::vector<std::size_t> next;
          for (auto x : cur)
            for (std::size_t k = 0, y = x; k < c.element(p).order(); ++k, y = c.mul(y, p)) next.push_back(y);
          cur = next;
        }
        return std::set<std::size_t>(cur.begin(), cur.end()).size() == n;
      }
      for (std::size_t i = from; i < n; ++i) {
        pick[at] = i;
        if (self(self, at + 1, i + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0, 1)) {
      std::vector<CyclicFactor> out;
      for (auto p : pick) out.push_back({p, c.element(p).order()});
      return out;
    }
  }
  return {};
}

bool is_abelian(const Group& c) { return c.class_count() == c.order(); }

std::string basis_text(const LambdaContextPtr& ctx) {
  std::string s = "R(C) ⊗ Z[q^±] on basis";
  for (std::size_t i = 0; i < ctx->rank(); ++i)
    s += " b[" + std::to_string(i) + "]:" + rational_str(ctx->grades[i]);
  return s;
}

}  // namespace

std::string presentation(const LambdaContextPtr& ctx) {
  const Group& c = *ctx->cent;
  if (c.order() == 1) return "Z[q^±]";
  if (!is_abelian(c)) return basis_text(ctx);
  const auto factors = cyclic_factors(c);
  if (factors.empty()) return basis_text(ctx);
  // g = prod gen_j^{k_j}
  std::vector<std::size_t> ks(factors.size(), 0);
  bool found = false;
  auto rec = [&](auto&& self, std::size_t at, std::size_t acc) -> void {
    if (found) return;
    if (at == factors.size()) {
      if (acc == ctx->g_in_cent) found = true;
      return;
    }
    for (std::size_t k = 0, y = acc; k < factors[at].order && !found; ++k, y = c.mul(y, factors[at].gen)) {
      ks[at] = k;
      self(self, at + 1, y);
    }
  };
  rec(rec, 0, 0);
  if (!found) return basis_text(ctx);
  std::ostringstream gens, rels;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const std::string name =
        (factors.size() == 1 ? std::string("x") : "x" + std::to_string(j + 1)) + "_" + std::to_string(ks[j]);
    gens << ", " << name;
    rels << (j ? ", " : "") << name << "^" << factors[j].order << " - "
         << (ks[j] == 0 ? std::string("1") : ks[j] == 1 ? std::string("q") : "q^" + std::to_string(ks[j]));
  }
  std::string s = "Z[q^±" + gens.str() + "]/(" + rels.str() + ")";
  if (factors.size() == 1 && std::gcd(ks[0], factors[0].order) == 1)
    s += " = Z[q^{±1/" + std::to_string(factors[0].order) + "}]";
  return s;
}

}  // namespace qell
