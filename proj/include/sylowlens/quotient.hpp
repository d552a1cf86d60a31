#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "sylowlens/group.hpp"
#include "sylowlens/subgroup.hpp"

namespace sylowlens {

// G/N realized as the action of G by right multiplication on the right
// cosets Nx. Coset 0 is N itself; coset representatives are the first
// members of each coset in canonical element order.
class QuotientImage {
 public:
  const Group& ambient() const noexcept { return ambient_; }
  const Subgroup& kernel() const noexcept { return kernel_; }
  const Group& image() const noexcept { return image_; }
  std::uint64_t kernel_order() const { return kernel_.order(); }

  // Coset permutation induced by x in the ambient group.
  Perm project(const Perm& x) const;
  // HN/N as a subgroup of image().
  Subgroup project(const Subgroup& h) const;
  // A coset representative mapping onto y.
  Perm lift(const Perm& y) const;
  // Full preimage of a subgroup of image(); always contains the kernel.
  Subgroup preimage(const Subgroup& k) const;

 private:
  friend QuotientImage coset_action(const Group&, const Subgroup&);

  QuotientImage(Group ambient, Subgroup kernel, Group image)
      : ambient_(std::move(ambient)), kernel_(std::move(kernel)), image_(std::move(image)) {}

  Group ambient_;
  Subgroup kernel_;
  Group image_;
  std::vector<Perm> reps_;
  std::vector<std::uint32_t> coset_of_;  // indexed by ambient element position
};

// Action of g on the right cosets of h (h need not be normal). The kernel
// field of the result holds h itself, not the kernel of the action.
QuotientImage coset_action(const Group& g, const Subgroup& h);

// G/N. Throws Error(NotSubgroup) or Error(NotNormal) when N is not a normal
// subgroup of G; Error(CapExceeded) when G cannot be enumerated.
QuotientImage quotient(const Group& g, const Subgroup& n);

}  // namespace sylowlens
