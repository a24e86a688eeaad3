#include "qell/wreath.hpp"

#include <algorithm>
#include <string>

#include "qell/errors.hpp"

namespace qell {

namespace {

std::size_t checked_wreath_order(const Group& g, std::size_t n, std::size_t cap) {
  unsigned long long order = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    order *= g.order() * i;
    if (order > cap) throw CapExceeded("wreath product order exceeds cap " + std::to_string(cap));
  }
  return static_cast<std::size_t>(order);
}

}  // namespace

Wreath::Wreath(GroupPtr base, std::size_t n, std::size_t cap) : base_(std::move(base)), n_(n) {
  const std::size_t order = checked_wreath_order(*base_, n, cap);
  const std::size_t d = base_->degree();
  std::vector<Perm> gens;
  if (n >= 1) {
    for (const auto& s : base_->generators()) {
      WreathElement x = identity();
      x.word[0] = base_->index(s);
      gens.push_back(realize(x));
    }
  }
  if (n >= 2) {
    WreathElement swap = identity();
    swap.sigma = Perm::from_cycles(n, {{1, 2}});
    gens.push_back(realize(swap));
    std::vector<std::vector<int>> full(1);
    for (std::size_t i = 1; i <= n; ++i) full[0].push_back(static_cast<int>(i));
    WreathElement cyc = identity();
    cyc.sigma = Perm::from_cycles(n, full);
    gens.push_back(realize(cyc));
  }
  group_ = Group::generate(gens, n * d, std::max(cap, order));
  if (group_->order() != order) throw Error("wreath realization has the wrong order");
}

WreathElement Wreath::identity() const {
  return WreathElement{std::vector<std::size_t>(n_, 0), Perm::identity(n_)};
}

Perm Wreath::realize(const WreathElement& x) const {
  const std::size_t d = base_->degree();
  std::vector<std::uint16_t> img(n_ * d);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t t = x.sigma[i];
    const Perm& g = base_->element(x.word[t]);
    for (std::size_t p = 0; p < d; ++p) img[i * d + p] = static_cast<std::uint16_t>(t * d + g[p]);
  }
  return Perm(std::move(img));
}

WreathElement Wreath::structured(const Perm& p) const {
  const std::size_t d = base_->degree();
  if (p.degree() != n_ * d) throw DegreeMismatch("permutation is not on the wreath point set");
  WreathElement x{std::vector<std::size_t>(n_, 0), Perm()};
  std::vector<std::uint16_t> sigma(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t t = p[i * d] / d;
    sigma[i] = static_cast<std::uint16_t>(t);
    std::vector<std::uint16_t> block(d);
    for (std::size_t q = 0; q < d; ++q) {
      const std::size_t v = p[i * d + q];
      if (v / d != t) throw Error("permutation does not preserve the block system");
      block[q] = static_cast<std::uint16_t>(v - t * d);
    }
    x.word[t] = base_->index(Perm(std::move(block)));
  }
  x.sigma = Perm(std::move(sigma));
  return x;
}

WreathElement Wreath::multiply(const WreathElement& a, const WreathElement& b) const {
  WreathElement r{std::vector<std::size_t>(n_, 0), a.sigma * b.sigma};
  const Perm ainv = a.sigma.inverse();
  for (std::size_t j = 0; j < n_; ++j) r.word[j] = base_->mul(a.word[j], b.word[ainv[j]]);
  return r;
}

CycleOrbitData cycle_orbit_data(const Group& g, const WreathElement& x) {
  CycleOrbitData d;
  const std::size_t n = x.sigma.degree();
  d.cycle_of.assign(n, 0);
  d.pos_in_cycle.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    WreathCycle c;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      d.cycle_of[j] = d.cycles.size();
      d.pos_in_cycle[j] = c.points.size();
      c.points.push_back(j);
      j = x.sigma[j];
    }
    std::size_t gamma = 0;
    for (auto p : c.points) gamma = g.mul(x.word[p], gamma);
    c.gamma = gamma;
    d.cycles.push_back(std::move(c));
  }
  d.block_of.assign(d.cycles.size(), 0);
  for (std::size_t c = 0; c < d.cycles.size(); ++c) {
    const auto& cyc = d.cycles[c];
    bool placed = false;
    for (std::size_t b = 0; b < d.blocks.size() && !placed; ++b) {
      const auto& first = d.cycles[d.blocks[b].cycles[0]];
      if (d.blocks[b].length == cyc.points.size() &&
          g.class_of(first.gamma) == g.class_of(cyc.gamma)) {
        d.blocks[b].cycles.push_back(c);
        d.block_of[c] = b;
        placed = true;
      }
    }
    if (!placed) {
      d.block_of[c] = d.blocks.size();
      d.blocks.push_back(CycleBlock{cyc.points.size(), {c}});
    }
  }
  return d;
}

CycleMap beta_element(const Group& g, const WreathElement& x, const CycleOrbitData& dx,
                      const WreathElement& xp, const CycleOrbitData& dxp,
                      const WreathElement& h, std::size_t i) {
  const auto& src = dxp.cycles.at(i).points;
  const std::size_t k = src.size();
  const std::size_t hit = h.sigma[src[0]];
  CycleMap out;
  out.target = dx.cycle_of[hit];
  out.offset = dx.pos_in_cycle[hit];
  const auto& dst = dx.cycles[out.target].points;
  if (dst.size() != k) throw NotCentralizing("tau maps a cycle onto one of different length");
  const std::size_t m = out.offset;
  for (std::size_t l = 0; l < k; ++l) {
    if (h.sigma[src[l]] != dst[(l + m) % k])
      throw NotCentralizing("tau does not intertwine the two permutations");
    // g_{j_l} h_{j_{l-1}} = h_{j_l} g'_{i_{l-m}}
    const std::size_t lhs = g.mul(x.word[dst[l]], h.word[dst[(l + k - 1) % k]]);
    const std::size_t rhs = g.mul(h.word[dst[l]], xp.word[src[(l + k - m) % k]]);
    if (lhs != rhs) throw NotCentralizing("wreath centralizing relation fails on a cycle");
  }
  std::size_t beta = h.word[dst[k - 1]];
  for (std::size_t p = k - m; p < k; ++p) beta = g.mul(beta, g.inv(xp.word[src[p]]));
  const std::size_t gj = dx.cycles[out.target].gamma;
  const std::size_t gi = dxp.cycles[i].gamma;
  if (g.mul(gj, beta) != g.mul(beta, gi))
    throw NotCentralizing("beta element does not intertwine the cycle products");
  out.beta = beta;
  return out;
}

void check_centralizing(const Group& g, const WreathElement& x, const WreathElement& xp,
                        const WreathElement& h) {
  const std::size_t n = x.sigma.degree();
  if (h.sigma * xp.sigma != x.sigma * h.sigma)
    throw NotCentralizing("tau sigma' differs from sigma tau");
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ti = h.sigma[i];
    const std::size_t lhs = g.mul(x.word[x.sigma[ti]], h.word[ti]);
    const std::size_t rhs = g.mul(h.word[h.sigma[xp.sigma[i]]], xp.word[xp.sigma[i]]);
    if (lhs != rhs) throw NotCentralizing("wreath centralizing relation fails");
  }
}

}  // namespace qell
