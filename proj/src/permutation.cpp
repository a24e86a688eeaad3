#include "qell/permutation.hpp"

#include <numeric>

#include "qell/errors.hpp"

namespace qell {

Perm::Perm(std::vector<std::uint16_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw Error("images do not form a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<std::uint16_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  Perm p;
  p.img_ = std::move(v);
  return p;
}

Perm Perm::from_images(const std::vector<int>& one_based) {
  std::vector<std::uint16_t> v;
  v.reserve(one_based.size());
  for (int x : one_based) {
    if (x < 1) throw Error("image out of range");
    v.push_back(static_cast<std::uint16_t>(x - 1));
  }
  return Perm(std::move(v));
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<int>>& one_based) {
  Perm p = identity(n);
  std::vector<bool> used(n, false);
  for (const auto& c : one_based) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i];
      int b = c[(i + 1) % c.size()];
      if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n)
        throw Error("cycle entry out of range");
      if (used[a - 1]) throw Error("point repeated in cycles");
      used[a - 1] = true;
      p.img_[a - 1] = static_cast<std::uint16_t>(b - 1);
    }
  }
  return p;
}

std::size_t Perm::largest_moved() const {
  for (std::size_t i = img_.size(); i-- > 0;)
    if (img_[i] != i) return i + 1;
  return 0;
}

std::strong_ordering Perm::operator<=>(const Perm& o) const {
  if (auto c = img_.size() <=> o.img_.size(); c != 0) return c;
  if (auto c = largest_moved() <=> o.largest_moved(); c != 0) return c;
  return img_ <=> o.img_;
}

Perm Perm::operator*(const Perm& o) const {
  if (o.img_.size() != img_.size()) throw DegreeMismatch("composing permutations of different degree");
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[o.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

Perm Perm::pow(long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Perm r = identity(img_.size());
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::size_t Perm::order() const {
  std::size_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, c.size());
  return o;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      c.push_back(static_cast<int>(j) + 1);
      j = img_[j];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Perm::images_one_based() const {
  std::vector<int> v;
  v.reserve(img_.size());
  for (auto x : img_) v.push_back(x + 1);
  return v;
}

std::string Perm::str() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.data()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Perm direct_sum(const Perm& p, const Perm& q) {
  std::vector<std::uint16_t> v(p.data());
  const auto off = static_cast<std::uint16_t>(p.degree());
  for (auto x : q.data()) v.push_back(static_cast<std::uint16_t>(x + off));
  return Perm(std::move(v));
}

}  // namespace qell
