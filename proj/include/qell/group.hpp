#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qell/permutation.hpp"

namespace qell {

class Group;
struct CharacterTable;
struct LambdaContext;
using GroupPtr = std::shared_ptr<const Group>;

inline constexpr std::size_t kDefaultCap = 20160;

// kDefaultCap unless QELL_CAP is set to a positive integer.
std::size_t default_cap();

struct ConjugacyData {
  std::vector<std::size_t> reps;          // ascending element indices; reps[0] is the identity
  std::vector<std::size_t> class_of;      // per element
  std::vector<std::size_t> transporter;   // per element y: y = t * rep * t^-1
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> inverse_class;
  std::vector<std::size_t> rep_orders;
  std::size_t exponent = 1;

  std::size_t count() const { return reps.size(); }
};

// Enumerated permutation group. Elements are sorted by the total order on
// Perm, so index 0 is the identity and the minimal element of any subset is
// the one with the smallest index.
class Group : public std::enable_shared_from_this<Group> {
 public:
  static GroupPtr generate(const std::vector<Perm>& gens, std::size_t degree,
                           std::size_t cap = default_cap());
  // `elems` must already be closed under composition.
  static GroupPtr from_elements(std::vector<Perm> elems, std::size_t degree);

  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  std::size_t order() const { return elems_.size(); }
  std::size_t degree() const { return degree_; }
  const Perm& element(std::size_t i) const { return elems_[i]; }
  const std::vector<Perm>& elements() const { return elems_; }
  const std::vector<Perm>& generators() const { return gens_; }

  std::optional<std::size_t> find(const Perm& p) const;
  std::size_t index(const Perm& p) const;  // throws NotSubgroup when absent
  bool contains(const Perm& p) const { return find(p).has_value(); }
  bool contains(const Group& h) const;

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  std::size_t pow(std::size_t a, long k) const;
  std::size_t conj(std::size_t x, std::size_t y) const { return mul(mul(x, y), inv(x)); }  // x y x^-1

  const ConjugacyData& conjugacy() const;
  std::size_t class_of(std::size_t i) const { return conjugacy().class_of[i]; }
  std::size_t class_count() const { return conjugacy().count(); }

  GroupPtr centralizer(std::size_t g) const;
  // Some x with g x = x h, or nothing when g and h are not conjugate.
  std::optional<std::size_t> conjugator(std::size_t g, std::size_t h) const;
  std::size_t exponent() const { return conjugacy().exponent; }

  const CharacterTable& character_table() const;   // defined in character.cpp
  std::shared_ptr<const LambdaContext> lambda_context_cache(
      std::size_t g, const std::function<std::shared_ptr<const LambdaContext>()>& make) const;

 private:
  Group() = default;
  void build_index();
  void build_table() const;

  std::size_t degree_ = 0;
  std::vector<Perm> elems_;
  std::vector<Perm> gens_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
  std::vector<std::size_t> inv_;

  mutable std::once_flag table_once_;
  mutable std::vector<std::uint32_t> table_;
  mutable std::once_flag conj_once_;
  mutable ConjugacyData conj_;
  mutable std::once_flag chars_once_;
  mutable std::shared_ptr<const CharacterTable> chars_;
  mutable std::mutex cache_mu_;
  mutable std::map<std::size_t, GroupPtr> centralizers_;
  mutable std::map<std::size_t, std::shared_ptr<const LambdaContext>> lambda_;
};

GroupPtr symmetric_group(std::size_t n);
GroupPtr cyclic_group(std::size_t n);
GroupPtr dihedral_group(std::size_t n);  // order 2n, on n points
GroupPtr trivial_group();                // one point
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);
// Subgroup of `g` generated by `gens` (all must lie in `g`).
GroupPtr subgroup(const GroupPtr& g, const std::vector<Perm>& gens);

struct GroupHom {
  GroupPtr src, dst;
  std::vector<std::size_t> image;  // src element index -> dst element index

  // Extends generator images; throws NotHomomorphism when inconsistent.
  static GroupHom from_generators(const GroupPtr& src, const GroupPtr& dst,
                                  const std::vector<Perm>& gen_images);
  std::size_t operator()(std::size_t i) const { return image[i]; }
};

}  // namespace qell
