#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sylowlens/config.hpp"
#include "sylowlens/perm.hpp"
#include "sylowlens/schreier_sims.hpp"

namespace sylowlens {

class SubgroupLattice;

// Canonically ordered element list with a reverse lookup.
class ElementIndex {
 public:
  explicit ElementIndex(std::vector<Perm> sorted_elements);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  const Perm& operator[](std::size_t i) const { return elements_[i]; }
  // Position of x, or size() if x is not a member.
  std::size_t find(const Perm& x) const;

 private:
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::uint32_t, PermHash> lookup_;
};

// A finite permutation group given by generators on `degree` points.
//
// The stabilizer chain, the element list and the subgroup lattice are
// built on first use and shared by every copy of the Group. Cache fills are
// guarded by std::call_once, so a Group may be read from several threads.
class Group {
 public:
  // Throws Error(DegreeMismatch) if a generator has a different degree.
  Group(std::size_t degree, std::vector<Perm> generators, std::string name = {});

  static Group trivial(std::size_t degree, std::string name = "1");

  std::size_t degree() const noexcept { return degree_; }
  std::span<const Perm> generators() const noexcept { return generators_; }
  const std::string& name() const noexcept { return name_; }
  Group renamed(std::string name) const;

  Perm identity() const { return Perm(degree_); }

  const StabChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool is_trivial() const { return order() == 1; }
  bool contains(const Perm& x) const;

  // Sorted (lexicographic on image arrays) list of all members.
  // Throws Error(CapExceeded) when |G| > enumeration_cap().
  const std::vector<Perm>& elements() const { return element_index().elements(); }
  const ElementIndex& element_index() const;

  bool is_abelian() const;
  std::vector<std::uint64_t> prime_divisors() const;

  // Same point set and same member set.
  bool same_as(const Group& other) const;
  // True when both objects share one cache (cheap identity test).
  bool shares_cache_with(const Group& other) const noexcept { return cache_ == other.cache_; }

  // Used by lattice.cpp to memoize the full subgroup lattice.
  std::shared_ptr<const SubgroupLattice> cached_lattice() const;
  void store_lattice(std::shared_ptr<const SubgroupLattice> lattice) const;

 private:
  struct Cache;

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::string name_;
  std::shared_ptr<Cache> cache_;
};

Group group_from_generators(std::size_t degree, std::vector<Perm> generators,
                            std::string name = {});

// Plain integer helpers shared across modules.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_prime(std::uint64_t n);
// Every prime divisor of n lies in `primes` (so n == 1 always qualifies).
bool is_pi_number(std::uint64_t n, std::span<const std::uint64_t> primes);

}  // namespace sylowlens
