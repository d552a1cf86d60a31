#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sylowlens {

using Point = std::uint32_t;

// A permutation of {0, ..., degree-1} stored as its image array.
//
// Products are written left to right: (a * b)(i) = b(a(i)), i.e. the left
// factor is applied first. Conjugation follows the same convention:
// x^g = g^-1 * x * g.
class Perm {
 public:
  Perm() = default;

  // Identity on `degree` points.
  explicit Perm(std::size_t degree);

  // Throws Error(InvalidPermutation) unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  // Parses cycle notation such as "(0 1 2)(3 4)"; "()" or "" is the identity.
  static Perm from_cycles(std::size_t degree, std::string_view cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  std::uint64_t order() const;
  Perm pow(std::uint64_t e) const;

  // Smallest moved point, or degree() for the identity.
  Point first_moved_point() const noexcept;

  std::string to_cycles() const;
  std::size_t hash() const noexcept;

  // Skips the bijection check; for images produced by composing valid perms.
  static Perm unchecked(std::vector<Point> images) {
    Perm r;
    r.images_ = std::move(images);
    return r;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

// Apply a, then b. Throws Error(DegreeMismatch) on unequal degrees.
Perm compose(const Perm& a, const Perm& b);
inline Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }

// g^-1 x g
Perm conjugate(const Perm& x, const Perm& g);
// a^-1 b^-1 a b
Perm commutator(const Perm& a, const Perm& b);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept { return p.hash(); }
};

}  // namespace sylowlens
