#include "qell/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>

#include "qell/errors.hpp"

namespace qell {

namespace {

constexpr std::size_t kTableLimit = 1024;

std::vector<std::size_t> greedy_generators(const Group& g) {
  std::vector<std::size_t> gens;
  std::vector<char> in(g.order(), 0);
  std::vector<std::size_t> members{0};
  in[0] = 1;
  for (std::size_t i = 1; i < g.order(); ++i) {
    if (in[i]) continue;
    gens.push_back(i);
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (auto s : gens) {
        auto y = g.mul(s, members[k]);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

std::size_t default_cap() {
  if (const char* env = std::getenv("QELL_CAP")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultCap;
}

GroupPtr Group::generate(const std::vector<Perm>& gens, std::size_t degree, std::size_t cap) {
  for (const auto& s : gens)
    if (s.degree() != degree) throw DegreeMismatch("generator degree differs from group degree");
  std::unordered_map<Perm, std::size_t, PermHash> seen;
  std::vector<Perm> elems{Perm::identity(degree)};
  seen.emplace(elems[0], 0);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& s : gens) {
      Perm y = s * elems[k];
      if (seen.count(y)) continue;
      if (elems.size() >= cap)
        throw CapExceeded("group order exceeds cap " + std::to_string(cap));
      seen.emplace(y, elems.size());
      elems.push_back(std::move(y));
    }
  }
  std::shared_ptr<Group> g(new Group());
  g->degree_ = degree;
  g->elems_ = std::move(elems);
  g->build_index();
  for (const auto& s : gens)
    if (!s.is_identity() && std::find(g->gens_.begin(), g->gens_.end(), s) == g->gens_.end())
      g->gens_.push_back(s);
  return g;
}

GroupPtr Group::from_elements(std::vector<Perm> elems, std::size_t degree) {
  std::shared_ptr<Group> g(new Group());
  g->degree_ = degree;
  g->elems_ = std::move(elems);
  g->build_index();
  for (auto i : greedy_generators(*g)) g->gens_.push_back(g->elems_[i]);
  return g;
}

void Group::build_index() {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty() || !elems_[0].is_identity()) throw Error("element list lacks the identity");
  index_.clear();
  index_.reserve(elems_.size() * 2);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i].degree() != degree_) throw DegreeMismatch("element degree differs from group degree");
    index_.emplace(elems_[i], i);
  }
  inv_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) inv_[i] = index(elems_[i].inverse());
}

std::optional<std::size_t> Group::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Group::index(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw NotSubgroup("permutation " + p.str() + " is not in the group");
  return it->second;
}

bool Group::contains(const Group& h) const {
  if (h.degree() != degree_) return false;
  for (const auto& s : h.elements())
    if (!contains(s)) return false;
  return true;
}

void Group::build_table() const {
  const std::size_t n = elems_.size();
  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table_[a * n + b] = static_cast<std::uint32_t>(index_.at(elems_[a] * elems_[b]));
}

std::size_t Group::mul(std::size_t a, std::size_t b) const {
  const std::size_t n = elems_.size();
  if (n <= kTableLimit) {
    std::call_once(table_once_, [this] { build_table(); });
    return table_[a * n + b];
  }
  return index_.at(elems_[a] * elems_[b]);
}

std::size_t Group::inv(std::size_t a) const { return inv_[a]; }

std::size_t Group::pow(std::size_t a, long k) const {
  std::size_t base = k < 0 ? inv(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  std::size_t r = 0;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

const ConjugacyData& Group::conjugacy() const {
  std::call_once(conj_once_, [this] {
    const std::size_t n = elems_.size();
    ConjugacyData d;
    constexpr auto none = static_cast<std::size_t>(-1);
    d.class_of.assign(n, none);
    d.transporter.assign(n, 0);
    std::vector<std::size_t> gens;
    for (const auto& s : gens_) gens.push_back(index(s));
    for (std::size_t i = 0; i < n; ++i) {
      if (d.class_of[i] != none) continue;
      const std::size_t c = d.reps.size();
      d.reps.push_back(i);
      std::vector<std::size_t> mem{i};
      d.class_of[i] = c;
      for (std::size_t k = 0; k < mem.size(); ++k) {
        const std::size_t y = mem[k];
        for (auto s : gens) {
          const std::size_t z = conj(s, y);
          if (d.class_of[z] != none) continue;
          d.class_of[z] = c;
          d.transporter[z] = mul(s, d.transporter[y]);
          mem.push_back(z);
        }
      }
      std::sort(mem.begin(), mem.end());
      d.sizes.push_back(mem.size());
      d.members.push_back(std::move(mem));
    }
    d.exponent = 1;
    for (auto r : d.reps) {
      d.inverse_class.push_back(d.class_of[inv(r)]);
      d.rep_orders.push_back(elems_[r].order());
      d.exponent = std::lcm(d.exponent, d.rep_orders.back());
    }
    conj_ = std::move(d);
  });
  return conj_;
}

GroupPtr Group::centralizer(std::size_t g) const {
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = centralizers_.find(g);
    if (it != centralizers_.end()) return it->second;
  }
  std::vector<Perm> elems;
  for (std::size_t x = 0; x < elems_.size(); ++x)
    if (mul(x, g) == mul(g, x)) elems.push_back(elems_[x]);
  GroupPtr c = from_elements(std::move(elems), degree_);
  std::lock_guard<std::mutex> lock(cache_mu_);
  return centralizers_.emplace(g, c).first->second;
}

std::optional<std::size_t> Group::conjugator(std::size_t g, std::size_t h) const {
  const auto& d = conjugacy();
  if (d.class_of[g] != d.class_of[h]) return std::nullopt;
  return mul(d.transporter[g], inv(d.transporter[h]));
}

std::shared_ptr<const LambdaContext> Group::lambda_context_cache(
    std::size_t g, const std::function<std::shared_ptr<const LambdaContext>()>& make) const {
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = lambda_.find(g);
    if (it != lambda_.end()) return it->second;
  }
  auto made = make();
  std::lock_guard<std::mutex> lock(cache_mu_);
  return lambda_.emplace(g, made).first->second;
}

GroupPtr symmetric_group(std::size_t n) {
  if (n < 2) return Group::generate({}, n);
  std::vector<std::vector<int>> full(1);
  for (std::size_t i = 1; i <= n; ++i) full[0].push_back(static_cast<int>(i));
  return Group::generate({Perm::from_cycles(n, {{1, 2}}), Perm::from_cycles(n, full)}, n);
}

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw Error("cyclic group needs n >= 1");
  std::vector<std::vector<int>> full(1);
  for (std::size_t i = 1; i <= n; ++i) full[0].push_back(static_cast<int>(i));
  return Group::generate({Perm::from_cycles(n, full)}, n);
}

GroupPtr dihedral_group(std::size_t n) {
  if (n < 3) throw Error("dihedral group needs n >= 3");
  std::vector<std::vector<int>> full(1);
  for (std::size_t i = 1; i <= n; ++i) full[0].push_back(static_cast<int>(i));
  std::vector<int> refl;
  for (std::size_t i = 1; i <= n; ++i) refl.push_back(static_cast<int>((n - i + 1) % n + 1));
  return Group::generate({Perm::from_cycles(n, full), Perm::from_images(refl)}, n);
}

GroupPtr trivial_group() { return Group::generate({}, 1); }

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
  std::vector<Perm> gens;
  const Perm ig = Perm::identity(g->degree());
  const Perm ih = Perm::identity(h->degree());
  for (const auto& s : g->generators()) gens.push_back(direct_sum(s, ih));
  for (const auto& s : h->generators()) gens.push_back(direct_sum(ig, s));
  return Group::generate(gens, g->degree() + h->degree());
}

GroupPtr subgroup(const GroupPtr& g, const std::vector<Perm>& gens) {
  for (const auto& s : gens)
    if (!g->contains(s)) throw NotSubgroup("generator " + s.str() + " is not in the ambient group");
  return Group::generate(gens, g->degree());
}

GroupHom GroupHom::from_generators(const GroupPtr& src, const GroupPtr& dst,
                                   const std::vector<Perm>& gen_images) {
  if (gen_images.size() != src->generators().size())
    throw NotHomomorphism("one image per generator required");
  std::vector<std::size_t> gi, si;
  for (std::size_t k = 0; k < gen_images.size(); ++k) {
    auto f = dst->find(gen_images[k]);
    if (!f) throw NotHomomorphism("generator image outside target group");
    gi.push_back(*f);
    si.push_back(src->index(src->generators()[k]));
  }
  constexpr auto none = static_cast<std::size_t>(-1);
  GroupHom hom{src, dst, std::vector<std::size_t>(src->order(), none)};
  hom.image[0] = 0;
  std::vector<std::size_t> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::size_t x = queue[k];
    for (std::size_t j = 0; j < si.size(); ++j) {
      const std::size_t y = src->mul(si[j], x);
      const std::size_t fy = dst->mul(gi[j], hom.image[x]);
      if (hom.image[y] == none) {
        hom.image[y] = fy;
        queue.push_back(y);
      } else if (hom.image[y] != fy) {
        throw NotHomomorphism("generator images violate a relation");
      }
    }
  }
  return hom;
}

}  // namespace qell
