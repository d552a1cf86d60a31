#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sylowlens/group.hpp"
#include "sylowlens/subgroup.hpp"

namespace sylowlens {

// ---------------------------------------------------------------------------
// Generic subgroup operations. These work from generators and the stabilizer
// chain; those marked "enumerates" need |G| <= enumeration_cap().
// ---------------------------------------------------------------------------

// Throws Error(AmbientMismatch) unless both handles live in the same group.
// Enumerates the smaller factor.
Subgroup intersection(const Subgroup& h, const Subgroup& k);
Subgroup join(const Subgroup& h, const Subgroup& k);
// HK == KH, decided by |<H,K>| * |H n K| == |H| * |K|.
bool permutes(const Subgroup& h, const Subgroup& k);

// Brute force over the elements of g; h may be any group on the same points.
Subgroup normalizer(const Group& g, const Subgroup& h);
Subgroup centralizer(const Group& g, const Subgroup& h);
// Smallest normal subgroup of g containing s (s must lie in g).
Subgroup normal_closure(const Group& g, const Subgroup& s);
// Largest normal subgroup of g inside h: kernel of the action on h's cosets.
Subgroup core(const Group& g, const Subgroup& h);

// First member (in canonical element order) of each conjugacy class.
std::vector<Perm> conjugacy_class_representatives(const Group& g);

// All normal subgroups, obtained as joins of normal closures of conjugacy
// classes. Enumerates g but does not need the full lattice.
std::vector<Subgroup> normal_subgroups(const Group& g);

// ---------------------------------------------------------------------------
// Dense lattice representation.
// ---------------------------------------------------------------------------

// Fixed-size bitset over the canonical element positions of a group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  void insert(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  std::size_t count() const;
  bool is_subset_of(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  std::vector<std::uint32_t> positions() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

// Every subgroup of a group of order <= lattice_cap(), deduplicated by
// member set.
//
// Members are seeded with the cyclic subgroups and closed under joins with
// cyclic subgroups, which reaches every subgroup since each is generated by
// its cyclic subgroups. Indices are canonical: sorted by order, then by the
// sorted list of element positions, so index 0 is the trivial subgroup and
// the last index is the whole group.
class SubgroupLattice {
 public:
  // Throws Error(CapExceeded) when |g| > lattice_cap().
  explicit SubgroupLattice(const Group& g);

  const Group& ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t whole_index() const noexcept { return nodes_.size() - 1; }

  const Subgroup& subgroup(std::size_t i) const { return handles_[i]; }
  std::uint64_t order(std::size_t i) const { return nodes_[i].order; }
  const ElementSet& members(std::size_t i) const { return nodes_[i].members; }
  bool is_normal(std::size_t i) const { return nodes_[i].normal; }
  bool is_maximal(std::size_t i) const { return nodes_[i].maximal; }
  bool is_cyclic(std::size_t i) const { return nodes_[i].cyclic; }

  // S_small is contained in S_big.
  bool includes(std::size_t big, std::size_t small) const;
  // All j with S_j contained in S_i (i itself included), ascending.
  std::span<const std::uint32_t> below(std::size_t i) const { return nodes_[i].below; }
  // All j with S_i contained in S_j (i itself included), ascending.
  std::span<const std::uint32_t> above(std::size_t i) const { return nodes_[i].above; }

  std::size_t index_of(const ElementSet& members) const;
  std::optional<std::size_t> find(const Subgroup& h) const;

  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;
  // Memoized; safe to call from several threads.
  bool permutes(std::size_t i, std::size_t j) const;
  // Index of HK when it is a subgroup.
  std::optional<std::size_t> product(std::size_t i, std::size_t j) const;
  // Normal closure of S_i in S_within (S_i must lie in S_within).
  std::size_t normal_closure_in(std::size_t i, std::size_t within) const;
  // S_i normal in S_within.
  bool is_normal_in(std::size_t i, std::size_t within) const;

  std::vector<std::size_t> normal_indices() const;
  std::vector<std::size_t> maximal_indices() const;
  std::vector<std::size_t> minimal_normal_indices() const;

  // Element-position arithmetic.
  std::size_t group_order() const noexcept { return n_; }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  ElementSet closure(std::span<const std::uint32_t> generators) const;
  std::span<const std::uint32_t> generator_positions(std::size_t i) const {
    return nodes_[i].gens;
  }

 private:
  struct Node {
    ElementSet members;
    std::vector<std::uint32_t> gens;
    std::uint64_t order = 0;
    bool normal = false;
    bool maximal = false;
    bool cyclic = false;
    std::vector<std::uint32_t> below;
    std::vector<std::uint32_t> above;
  };

  Group ambient_;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> group_gens_;
  std::vector<Node> nodes_;
  std::vector<Subgroup> handles_;
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> lookup_;
  std::unique_ptr<std::atomic<std::int8_t>[]> permutes_memo_;
};

// Builds (or reuses the cached) lattice of g.
// Throws Error(CapExceeded) when |g| > lattice_cap().
std::shared_ptr<const SubgroupLattice> all_subgroups(const Group& g);

std::vector<Subgroup> maximal_subgroups(const Group& g);
// Intersection of the maximal subgroups; the trivial group for trivial g.
Subgroup frattini(const Group& g);
std::vector<Subgroup> minimal_normal_subgroups(const Group& g);

}  // namespace sylowlens
