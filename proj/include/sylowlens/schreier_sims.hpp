#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sylowlens/perm.hpp"

namespace sylowlens {

// Base and strong generating set built by deterministic Schreier-Sims.
//
// Initial base points are taken in generator order as the smallest point
// moved by a generator that fixes all earlier base points; points added
// during sifting are the smallest point moved by the residue. No
// randomization is used, so the chain is a pure function of the generator
// list.
class StabChain {
 public:
  StabChain(std::size_t degree, std::span<const Perm> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  std::vector<Point> base() const;
  std::span<const Point> orbit(std::size_t level) const { return levels_[level].orbit; }
  // Coset representative u with base[level]^u == p; p must lie in the orbit.
  const Perm& transversal(std::size_t level, Point p) const;
  std::span<const Perm> level_generators(std::size_t level) const {
    return levels_[level].gens;
  }

  // Throws Error(CapExceeded) if the order overflows 64 bits.
  std::uint64_t order() const;
  bool contains(const Perm& x) const;

  // Every element exactly once, unordered.
  std::vector<Perm> elements() const;

 private:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // point -> index into reps, or -1
    std::vector<Perm> reps;
  };

  // Strips h through levels [start, depth). Returns the residue and the level
  // at which stripping stopped (depth() when it went all the way through).
  std::pair<Perm, std::size_t> sift(Perm h, std::size_t start) const;
  void rebuild_orbit(Level& level) const;
  void push_level(Point base_point);

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace sylowlens
