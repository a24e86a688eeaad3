#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qell {

// Permutation of {0..n-1}; the public text form is one-based.
// Composition is right-to-left: (p * q)(x) = p(q(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images);

  static Perm identity(std::size_t n);
  static Perm from_images(const std::vector<int>& one_based);
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<int>>& one_based);

  std::size_t degree() const { return img_.size(); }
  std::uint16_t operator[](std::size_t i) const { return img_[i]; }
  const std::vector<std::uint16_t>& data() const { return img_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  Perm pow(long k) const;
  bool is_identity() const;
  std::size_t order() const;

  // Cycles with the minimum point first, 1-cycles included (one-based).
  std::vector<std::vector<int>> cycles() const;
  std::vector<int> images_one_based() const;
  std::string str() const;

  // Canonical order: degree, then largest moved point, then image sequence.
  // Permutations supported on {1..k} precede any that move k+1.
  std::strong_ordering operator<=>(const Perm& o) const;
  std::size_t largest_moved() const;  // 0 for the identity, else one-based point
  bool operator==(const Perm&) const = default;

 private:
  std::vector<std::uint16_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

inline std::vector<std::vector<int>> cycle_decomposition(const Perm& p) { return p.cycles(); }

// Block sum: p acts on the first p.degree() points, q on the next q.degree().
Perm direct_sum(const Perm& p, const Perm& q);

}  // namespace qell
