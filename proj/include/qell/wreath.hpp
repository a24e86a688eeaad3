#pragma once

#include <cstddef>
#include <vector>

#include "qell/group.hpp"

namespace qell {

// (g_1..g_n; sigma) with letters stored as element indices of the base group.
// Positions are 0-based.
struct WreathElement {
  std::vector<std::size_t> word;
  Perm sigma;

  bool operator==(const WreathElement&) const = default;
};

// G wreath Sigma_n with its imprimitive realization on n * degree(G) points:
// (g; sigma) sends (i, x) to (sigma(i), g_{sigma(i)}(x)).
class Wreath {
 public:
  Wreath(GroupPtr base, std::size_t n, std::size_t cap = default_cap());

  const GroupPtr& base() const { return base_; }
  std::size_t n() const { return n_; }
  const GroupPtr& group() const { return group_; }

  Perm realize(const WreathElement& x) const;
  std::size_t index_of(const WreathElement& x) const { return group_->index(realize(x)); }
  WreathElement structured(const Perm& p) const;
  WreathElement structured(std::size_t idx) const { return structured(group_->element(idx)); }

  // (g; s)(h; t) = (g_1 h_{s^-1(1)}, ..., g_n h_{s^-1(n)}; s t).
  WreathElement multiply(const WreathElement& a, const WreathElement& b) const;
  WreathElement identity() const;

 private:
  GroupPtr base_;
  std::size_t n_;
  GroupPtr group_;
};

struct WreathCycle {
  std::vector<std::size_t> points;  // minimum first, points[l+1] = sigma(points[l])
  std::size_t gamma = 0;            // g_{i_k} ... g_{i_1}
};

struct CycleBlock {
  std::size_t length = 0;
  std::vector<std::size_t> cycles;  // cycle indices, ascending by smallest point
};

struct CycleOrbitData {
  std::vector<WreathCycle> cycles;       // ascending by smallest point
  std::vector<std::size_t> cycle_of;     // per position
  std::vector<std::size_t> pos_in_cycle; // per position
  std::vector<CycleBlock> blocks;        // ascending by smallest point of first cycle
  std::vector<std::size_t> block_of;     // per cycle
};

CycleOrbitData cycle_orbit_data(const Group& g, const WreathElement& x);

struct CycleMap {
  std::size_t target = 0;  // cycle of x hit by tau applied to the source cycle of x'
  std::size_t offset = 0;  // tau(i_1) = j_{1+offset}
  std::size_t beta = 0;    // element of C_G(Gamma_target, Gamma'_source)
};

// For h = (h; tau) with x h = h x', the beta element attached to cycle `i`
// of x'. Throws NotCentralizing when the wreath relations fail on the cycle.
CycleMap beta_element(const Group& g, const WreathElement& x, const CycleOrbitData& dx,
                      const WreathElement& xp, const CycleOrbitData& dxp,
                      const WreathElement& h, std::size_t i);

// Throws NotCentralizing unless x h = h x'.
void check_centralizing(const Group& g, const WreathElement& x, const WreathElement& xp,
                        const WreathElement& h);

}  // namespace qell
