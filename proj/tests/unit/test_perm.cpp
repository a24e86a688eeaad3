#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "qell/errors.hpp"
#include "qell/group.hpp"
#include "qell/wreath.hpp"

using namespace qell;

namespace {

// Brute-force centralizer order straight from the permutations.
std::size_t brute_centralizer_order(const Group& g, const Perm& x) {
  std::size_t n = 0;
  for (const auto& y : g.elements())
    if (x * y == y * x) ++n;
  return n;
}

std::size_t partitions(std::size_t n, std::size_t max) {
  if (n == 0) return 1;
  std::size_t s = 0;
  for (std::size_t k = std::min(n, max); k >= 1; --k) s += partitions(n - k, k);
  return s;
}

// Number of maps from `classes` labels to partitions with total size n.
std::size_t type_functions(std::size_t classes, std::size_t n) {
  std::vector<std::size_t> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t c = 0; c < classes; ++c) {
    std::vector<std::size_t> next(n + 1, 0);
    for (std::size_t a = 0; a <= n; ++a)
      for (std::size_t b = 0; a + b <= n; ++b) next[a + b] += ways[a] * partitions(b, b);
    ways = next;
  }
  return ways[n];
}

}  // namespace

TEST_CASE("enumerate groups") {
  CHECK(Group::generate({Perm::from_cycles(2, {{1, 2}})}, 2)->order() == 2);
  auto s3 = Group::generate({Perm::from_cycles(3, {{1, 2}}), Perm::from_cycles(3, {{1, 2, 3}})}, 3);
  CHECK(s3->order() == 6);
  CHECK_THROWS_AS(Group::generate({Perm::from_cycles(5, {{1, 2, 3, 4, 5}}), Perm::from_cycles(5, {{1, 2}})}, 5, 100),
                  CapExceeded);
  CHECK_THROWS_AS(Group::generate({Perm::from_cycles(2, {{1, 2}}), Perm::from_cycles(3, {{1, 2}})}, 2), DegreeMismatch);
}

TEST_CASE("cycle decomposition") {
  CHECK(cycle_decomposition(Perm::identity(3)) == std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(cycle_decomposition(Perm::from_cycles(4, {{1, 2}, {3, 4}})) == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(cycle_decomposition(Perm::from_images({2, 3, 1})) == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(Perm::from_cycles(4, {{1, 2}, {3, 4}}).str() == "(1 2)(3 4)");
}

TEST_CASE("conjugacy classes") {
  auto s3 = symmetric_group(3);
  const auto& d = s3->conjugacy();
  REQUIRE(d.count() == 3);
  CHECK(s3->element(d.reps[0]).is_identity());
  std::set<std::string> reps;
  for (auto r : d.reps) reps.insert(s3->element(r).str());
  CHECK(reps == std::set<std::string>{"()", "(1 2)", "(1 2 3)"});

  auto c4 = cyclic_group(4);
  CHECK(c4->class_count() == 4);

  auto s4 = symmetric_group(4);
  std::multiset<std::size_t> orders;
  for (auto r : s4->conjugacy().reps) orders.insert(brute_centralizer_order(*s4, s4->element(r)));
  CHECK(orders == std::multiset<std::size_t>{24, 4, 3, 4, 8});
}

TEST_CASE("class equation and centralizers") {
  for (const auto& g : {symmetric_group(4), dihedral_group(5), cyclic_group(6),
                        direct_product(cyclic_group(2), symmetric_group(3))}) {
    const auto& d = g->conjugacy();
    std::size_t total = 0;
    for (std::size_t c = 0; c < d.count(); ++c) {
      total += d.sizes[c];
      CHECK(d.sizes[c] * g->centralizer(d.reps[c])->order() == g->order());
      CHECK(d.reps[c] == d.members[c].front());
    }
    CHECK(total == g->order());
    for (std::size_t y = 0; y < g->order(); ++y) {
      const std::size_t c = d.class_of[y];
      CHECK(g->conj(d.transporter[y], d.reps[c]) == y);
    }
  }
}

TEST_CASE("centralizer and conjugator") {
  auto s3 = symmetric_group(3);
  const auto t12 = s3->index(Perm::from_cycles(3, {{1, 2}}));
  const auto t13 = s3->index(Perm::from_cycles(3, {{1, 3}}));
  const auto c123 = s3->index(Perm::from_cycles(3, {{1, 2, 3}}));
  auto c = s3->centralizer(t12);
  CHECK(c->order() == 2);
  CHECK(c->contains(Perm::from_cycles(3, {{1, 2}})));
  auto x = s3->conjugator(t12, t13);
  REQUIRE(x);
  CHECK(s3->mul(t12, *x) == s3->mul(*x, t13));
  CHECK(!s3->conjugator(t12, c123));
}

TEST_CASE("wreath products") {
  Wreath w1(trivial_group(), 2);
  CHECK(w1.group()->order() == 2);
  Wreath w2(cyclic_group(2), 2);
  CHECK(w2.group()->order() == 8);
  CHECK(w2.group()->class_count() == 5);
  Wreath w3(symmetric_group(3), 2);
  CHECK(w3.group()->order() == 72);
  CHECK_THROWS_AS(Wreath(symmetric_group(3), 4, 20160), CapExceeded);
}

TEST_CASE("wreath multiplication matches realization") {
  Wreath w(symmetric_group(3), 2);
  const auto& g = *w.group();
  for (std::size_t a = 0; a < g.order(); a += 5)
    for (std::size_t b = 0; b < g.order(); b += 7) {
      auto x = w.structured(a), y = w.structured(b);
      CHECK(w.index_of(w.multiply(x, y)) == g.mul(a, b));
    }
}

TEST_CASE("wreath class count equals type functions") {
  for (const auto& base : {trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group(3), cyclic_group(4),
                           direct_product(cyclic_group(2), cyclic_group(2))})
    for (std::size_t n = 1; n <= 3; ++n) {
      Wreath w(base, n);
      CHECK(w.group()->class_count() == type_functions(base->class_count(), n));
    }
}

TEST_CASE("cycle orbit data") {
  {
    Wreath w(trivial_group(), 4);
    WreathElement x = w.identity();
    x.sigma = Perm::from_cycles(4, {{1, 2}, {3, 4}});
    auto d = cycle_orbit_data(*w.base(), x);
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].cycles.size() == 2);
    CHECK(d.blocks[0].length == 2);
  }
  {
    auto c2 = cyclic_group(2);
    Wreath w(c2, 4);
    WreathElement x{{0, 0, 1, 1}, Perm::from_cycles(4, {{1, 2}, {3, 4}})};
    auto d = cycle_orbit_data(*c2, x);
    REQUIRE(d.cycles.size() == 2);
    CHECK(d.cycles[0].gamma == 0);
    CHECK(d.cycles[1].gamma == 0);
    CHECK(d.blocks.size() == 1);
  }
  {
    auto s3 = symmetric_group(3);
    Wreath w(s3, 2);
    WreathElement x{{s3->index(Perm::from_cycles(3, {{1, 2}})), s3->index(Perm::from_cycles(3, {{1, 3}}))},
                    Perm::identity(2)};
    auto d = cycle_orbit_data(*s3, x);
    CHECK(d.blocks.size() == 1);
    CHECK(d.blocks[0].cycles.size() == 2);
  }
}

TEST_CASE("cycle sizes sum to n") {
  auto c2 = cyclic_group(2);
  Wreath w(c2, 4);
  for (std::size_t i = 0; i < w.group()->order(); ++i) {
    auto d = cycle_orbit_data(*c2, w.structured(i));
    std::size_t total = 0;
    for (const auto& b : d.blocks) total += b.length * b.cycles.size();
    CHECK(total == 4);
  }
}

TEST_CASE("beta elements on every centralizing pair") {
  // Exhaustive: for every x, x' and every h with x h = h x', each beta
  // intertwines the cycle products.
  for (auto [base, n] : std::vector<std::pair<GroupPtr, std::size_t>>{
           {trivial_group(), 3}, {cyclic_group(2), 3}, {cyclic_group(3), 2}, {symmetric_group(3), 2}}) {
    Wreath w(base, n);
    const auto& g = *w.group();
    std::size_t checked = 0;
    for (std::size_t a = 0; a < g.order(); ++a) {
      auto x = w.structured(a);
      auto dx = cycle_orbit_data(*base, x);
      for (std::size_t hi = 0; hi < g.order(); ++hi) {
        const std::size_t b = g.conj(g.inv(hi), a);  // x' = h^-1 x h
        auto xp = w.structured(b);
        auto h = w.structured(hi);
        check_centralizing(*base, x, xp, h);
        auto dxp = cycle_orbit_data(*base, xp);
        for (std::size_t i = 0; i < dxp.cycles.size(); ++i) {
          auto m = beta_element(*base, x, dx, xp, dxp, h, i);
          CHECK(base->mul(dx.cycles[m.target].gamma, m.beta) == base->mul(m.beta, dxp.cycles[i].gamma));
          ++checked;
        }
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("beta element rejects non-centralizing data") {
  auto c2 = cyclic_group(2);
  Wreath w(c2, 2);
  WreathElement x{{1, 0}, Perm::identity(2)};
  WreathElement xp{{0, 0}, Perm::identity(2)};
  WreathElement h = w.identity();
  CHECK_THROWS_AS(check_centralizing(*c2, x, xp, h), NotCentralizing);
  auto dx = cycle_orbit_data(*c2, x), dxp = cycle_orbit_data(*c2, xp);
  CHECK_THROWS_AS(beta_element(*c2, x, dx, xp, dxp, h, 0), NotCentralizing);
}

TEST_CASE("trivial base gives trivial beta") {
  Wreath w(trivial_group(), 3);
  const auto& g = *w.group();
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t hi = 0; hi < g.order(); ++hi) {
      auto x = w.structured(a), h = w.structured(hi), xp = w.structured(g.conj(g.inv(hi), a));
      auto dx = cycle_orbit_data(*w.base(), x), dxp = cycle_orbit_data(*w.base(), xp);
      for (std::size_t i = 0; i < dxp.cycles.size(); ++i) CHECK(beta_element(*w.base(), x, dx, xp, dxp, h, i).beta == 0);
    }
}

TEST_CASE("homomorphisms") {
  auto c2 = cyclic_group(2), c4 = cyclic_group(4);
  auto phi = GroupHom::from_generators(c2, c4, {Perm::from_cycles(4, {{1, 3}, {2, 4}})});
  CHECK(phi.image[1] != 0);
  CHECK_THROWS_AS(GroupHom::from_generators(c2, c4, {Perm::from_cycles(4, {{1, 2, 3, 4}})}), NotHomomorphism);
}
