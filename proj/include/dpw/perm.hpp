#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dpw {

// Permutation on at most 256 points, stored as a flat image array of
// 1-byte indices. Products compose left to right: x^(a*b) = (x^a)^b.
class Perm {
public:
  Perm() = default;
  explicit Perm(int n) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = (std::uint8_t)i;
  }
  static Perm from_images(std::vector<std::uint8_t> images) {
    if (images.size() > 256) throw std::invalid_argument("Perm: degree > 256");
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
      if (v >= images.size() || seen[v]) throw std::invalid_argument("Perm: not a bijection");
      seen[v] = true;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
  }

  int degree() const { return (int)img_.size(); }
  int operator[](int x) const { return img_[x]; }
  const std::uint8_t* data() const { return img_.data(); }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = (std::uint8_t)i;
    return r;
  }

  int order() const;  // lcm of cycle lengths (fits in int for degree <= 256)

  // (length, multiplicity) pairs with lengths ascending.
  std::vector<std::pair<int, int>> cycle_type() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  friend Perm compose(const Perm& a, const Perm& b);

private:
  std::vector<std::uint8_t> img_;
};

// a then b: x -> b[a[x]].
inline Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  Perm c;
  c.img_.resize(a.img_.size());
  const std::uint8_t* bp = b.img_.data();
  const std::uint8_t* ap = a.img_.data();
  std::uint8_t* cp = c.img_.data();
  for (int i = 0; i < a.degree(); ++i) cp[i] = bp[ap[i]];
  return c;
}

}  // namespace dpw
