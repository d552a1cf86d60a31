#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sylowlens/group.hpp"

namespace sylowlens {

// A subgroup of an ambient Group, on the same point set.
//
// Identity is by member set: two handles compare equal when they contain the
// same elements, whatever generators they were built from.
class Subgroup {
 public:
  // Throws Error(NotSubgroup) if a generator is not in `ambient`.
  Subgroup(Group ambient, std::vector<Perm> generators, std::string name = {});

  static Subgroup whole(const Group& ambient);
  static Subgroup trivial(const Group& ambient);

  const Group& ambient() const noexcept { return ambient_; }
  // The subgroup as a group in its own right.
  const Group& group() const noexcept { return group_; }
  std::span<const Perm> generators() const noexcept { return group_.generators(); }
  const std::string& name() const noexcept { return group_.name(); }
  Subgroup renamed(std::string name) const;

  std::uint64_t order() const { return group_.order(); }
  std::uint64_t index() const { return ambient_.order() / order(); }
  bool contains(const Perm& x) const { return group_.contains(x); }
  bool is_trivial() const { return order() == 1; }
  bool is_whole() const { return order() == ambient_.order(); }

  // Every generator of *this lies in `other`.
  bool is_contained_in(const Subgroup& other) const;
  bool is_normal() const;

  // Sorted element list digest, usable as a dedup key.
  std::uint64_t key() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  Group ambient_;
  Group group_;
};

// Reinterpret a group whose elements all lie in `ambient` as a subgroup of it.
Subgroup as_subgroup(const Group& ambient, const Group& g);

// Adds elements as generators only when they are not yet in the span; keeps
// generating sets short when a subgroup is assembled from many elements.
std::vector<Perm> reduced_generators(std::size_t degree, std::span<const Perm> elements);

}  // namespace sylowlens
