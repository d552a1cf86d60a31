#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sylowlens/group.hpp"
#include "sylowlens/lattice.hpp"
#include "sylowlens/subgroup.hpp"
#include "sylowlens/verdict.hpp"

namespace sylowlens {

enum class FactorSide { A, B };

// Factor `side` does not permute with `u`, a subgroup of the other factor.
struct PermutingFailure {
  Subgroup u;
  FactorSide side;
};

struct MutPermWitness {
  MutPermWitness(Subgroup a_, Subgroup b_) : a(std::move(a_)), b(std::move(b_)) {}

  Subgroup a;
  Subgroup b;
  bool holds = false;
  bool product_covers = false;  // G = AB
  bool trivial = false;         // A = G or B = G
  std::uint64_t pairs_checked = 0;
  std::optional<PermutingFailure> counterexample;
};

// G = AB with A permuting with every subgroup of B and B with every subgroup
// of A. Uses the lattice of G when |G| <= lattice_cap(), otherwise the
// lattices of A and B.
MutPermWitness is_mutually_permutable(const Group& g, const Subgroup& a, const Subgroup& b);

// Unordered pairs {A, B} with AB = G, each listed once with A at or before B
// in lattice order (so {G, G} and {1, G} appear). Needs the lattice of G.
std::vector<MutPermWitness> find_factorizations(const Group& g, bool require_mut_perm);

struct LemmaSuiteOptions {
  // Subgroups U tested for the intersection lemma. When the lattice has at
  // most this many members all are tested; otherwise every normal U (strided
  // down to this many if there are more) plus this many strided non-normal
  // ones. 0 tests every subgroup.
  std::size_t intersection_budget = 200;
};

// Counts from one run of the imported-lemma suite on G = AB.
struct LemmaSuiteOutcome {
  // Per prime of |G|: A, B, G p-solvable.
  struct PSolvable {
    std::uint64_t p;
    bool a, b, g;
  };
  std::vector<PSolvable> p_solvable;
  std::uint64_t minimal_normals = 0;
  std::uint64_t quotient_passes = 0;       // G/N = (AN/N)(BN/N) mutually permutable
  std::uint64_t core_product_order = 1;    // |A_G B_G|
  std::uint64_t membership_passes = 0;     // minimal-normal intersection and centralizer checks
  std::uint64_t intersection_tested = 0;
  std::uint64_t intersection_passes = 0;
  // First failures, as lattice indices, for the witness trail.
  std::optional<std::uint32_t> quotient_failure;
  std::optional<std::uint32_t> membership_failure;
  std::optional<std::uint32_t> intersection_failure;

  friend bool operator==(const LemmaSuiteOutcome&, const LemmaSuiteOutcome&) = default;
};

// Memoized product computations on the lattice of one group. Every method
// is safe to call from several threads.
class ProductAnalyzer {
 public:
  explicit ProductAnalyzer(std::shared_ptr<const SubgroupLattice> lattice);
  explicit ProductAnalyzer(const Group& g) : ProductAnalyzer(all_subgroups(g)) {}

  const SubgroupLattice& lattice() const noexcept { return *lattice_; }
  const Group& group() const noexcept { return lattice_->ambient(); }

  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;
  // |S_a||S_b| = |G||S_a meet S_b|, i.e. the set product is all of G.
  bool covers(std::size_t a, std::size_t b) const;
  // S_x S_y is a subgroup, S_x permutes with every subgroup of S_y and S_y
  // with every subgroup of S_x.
  bool mutually_permutable(std::size_t x, std::size_t y) const;
  // Largest normal subgroup of G inside S_i.
  std::size_t core(std::size_t i) const;
  // Every element of S_n commutes with every element of S_x.
  bool centralizes(std::size_t n, std::size_t x) const;
  bool p_solvable(std::size_t i, std::uint64_t p) const;
  // For normal S_n inside S_an and S_bn: G/N is the mutually permutable
  // product of S_an/N and S_bn/N. Decided through the correspondence between
  // subgroups of G/N and subgroups of G containing N.
  bool quotient_mutually_permutable(std::size_t an, std::size_t bn, std::size_t n) const;

  struct Factorization {
    std::uint32_t a;
    std::uint32_t b;
    bool trivial;
    bool mutually_permutable;
  };
  std::vector<Factorization> factorizations(bool require_mut_perm) const;

  std::vector<std::uint32_t> intersection_sample(std::size_t budget) const;
  LemmaSuiteOutcome lemma_suite(std::size_t a, std::size_t b, const LemmaSuiteOptions& options = {}) const;

 private:
  std::shared_ptr<const SubgroupLattice> lattice_;
  std::size_t m_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint32_t> minimal_normals_;
  std::unique_ptr<std::atomic<std::uint32_t>[]> meet_memo_;
  std::unique_ptr<std::atomic<std::uint32_t>[]> join_memo_;
  std::unique_ptr<std::atomic<std::int8_t>[]> mut_perm_memo_;
  std::unique_ptr<std::atomic<std::int8_t>[]> p_solvable_memo_;  // m x |primes|
  std::unique_ptr<std::atomic<std::int64_t>[]> core_memo_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, bool> quotient_memo_;
  mutable std::unordered_map<std::uint64_t, bool> centralizes_memo_;
  mutable std::vector<std::vector<std::uint32_t>> samples_;
  mutable std::vector<std::size_t> sample_budgets_;
};

// Imported-lemma suite on G = AB (claims bea_2_1 ... bea_2_5). Returns one
// verdict per lemma; every verdict has a failed precondition when the pair
// is not mutually permutable. Needs the lattice of G.
std::vector<BoundVerdict> product_lemma_suite(const Group& g, const Subgroup& a, const Subgroup& b,
                                          const LemmaSuiteOptions& options = {});
std::vector<BoundVerdict> product_lemma_suite(const ProductAnalyzer& analyzer, std::size_t a, std::size_t b,
                                          const LemmaSuiteOptions& options = {});
// Renders an outcome already computed for the pair (a, b).
std::vector<BoundVerdict> render_lemma_suite(const ProductAnalyzer& analyzer, std::size_t a, std::size_t b,
                                             bool mutually_permutable, const LemmaSuiteOutcome& outcome);

// |H : N_H(Q)| = |G : A N_G(Q)| for A a normal p-subgroup, G = AH,
// A meet H = 1 and Q a Sylow q-subgroup of H, q != p (claim lemma_2_6).
BoundVerdict check_split_extension_index(const Group& g, const Subgroup& a, const Subgroup& h, std::uint64_t q);

}  // namespace sylowlens
