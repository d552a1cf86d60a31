#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sylowlens/group.hpp"
#include "sylowlens/products.hpp"
#include "sylowlens/subgroup.hpp"
#include "sylowlens/sylow.hpp"
#include "sylowlens/verdict.hpp"

namespace sylowlens {

// Claim identifiers used on the command line and in reports.
inline constexpr const char* kClaimIds[] = {
    "thm_1_1", "thm_1_2a", "thm_1_2b", "lemma_2_6", "lemma_2_7", "hall", "zhang_pnilp", "conj_1_4",
    "bea_2_1", "bea_2_2",  "bea_2_3",  "bea_2_4",   "bea_2_5"};
bool is_claim_id(std::string_view id);

// Invariants of one group that the checks consume. Lengths are only filled
// by `ambient_invariants`; factors need the rest.
struct GroupInvariants {
  std::string name;
  std::uint64_t order = 1;
  std::vector<std::uint64_t> primes;  // primes of the ambient group the checks run over
  TauProfile tau;
  bool solvable = true;
  std::map<std::uint64_t, bool> p_solvable;
  std::map<std::uint64_t, bool> p_nilpotent;
  std::map<std::uint64_t, unsigned> p_length;  // p-solvable primes only
  std::optional<unsigned> fitting_length;
  std::optional<unsigned> derived_length;
  std::optional<unsigned> frattini_quotient_derived_length;
};

// `primes` are the primes to evaluate p-solvability and p-nilpotency at,
// normally those of the ambient group.
GroupInvariants factor_invariants(const Group& h, std::span<const std::uint64_t> primes);
// Everything, including lengths; the Frattini quotient needs the lattice.
GroupInvariants ambient_invariants(const Group& g);

// Exact and decimal forms of the bounds. `tau` is the larger of the two
// factor values; u = max(tau, 1) since f(0) = f(1) and g(0) = g(1).
//   4 + 2 f(tau) as a decimal, and  fl <= 4 + 2 f(tau)  <=>  4 * 3^fl <= 81 u^2
//   2 + 6 g(tau) as a decimal, and  dl <= 2 + 6 g(tau)  <=>  2^dl <= 4 u^6
long double fitting_bound_decimal(unsigned tau);
long double derived_bound_decimal(unsigned tau);
std::pair<std::int64_t, std::int64_t> fitting_bound_exact(unsigned fitting_length, unsigned tau);
std::pair<std::int64_t, std::int64_t> derived_bound_exact(unsigned derived_length, unsigned tau);

// Compact outcome of one check; also the grouping key used by scans.
struct Evaluation {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::uint32_t failed_preconditions = 0;  // bitmask over the claim's conditions
  std::optional<bool> holds;
  friend bool operator==(const Evaluation&, const Evaluation&) = default;
  friend auto operator<=>(const Evaluation&, const Evaluation&) = default;
};

// A factor of a checked factorization: its invariants plus how to name it.
struct FactorRef {
  const GroupInvariants* inv;
  nlohmann::json description;
};

// p-length bound for G = AB mutually permutable (claim thm_1_1), or the same
// inequality without conditions (a)/(b) when `conjecture` (claim conj_1_4).
Evaluation evaluate_p_length_bound(const GroupInvariants& g, const GroupInvariants& a, const GroupInvariants& b,
                                   bool mutually_permutable, std::uint64_t p, bool conjecture);
BoundVerdict render_p_length_bound(const GroupInvariants& g, const FactorRef& a, const FactorRef& b,
                                   bool mutually_permutable, std::uint64_t p, bool conjecture);
Evaluation evaluate_fitting_length_bound(const GroupInvariants& g, const GroupInvariants& a, const GroupInvariants& b,
                                         bool mutually_permutable);
BoundVerdict render_fitting_length_bound(const GroupInvariants& g, const FactorRef& a, const FactorRef& b,
                                         bool mutually_permutable);
Evaluation evaluate_frattini_derived_length_bound(const GroupInvariants& g, const GroupInvariants& a,
                                                  const GroupInvariants& b, bool mutually_permutable);
BoundVerdict render_frattini_derived_length_bound(const GroupInvariants& g, const FactorRef& a, const FactorRef& b,
                                                  bool mutually_permutable);
BoundVerdict render_group_p_length_bound(const GroupInvariants& g, std::uint64_t p);
std::vector<BoundVerdict> render_hall_sylow_numbers(const GroupInvariants& g);
std::vector<BoundVerdict> render_sylow_p_nilpotency(const GroupInvariants& g);

// Group-level entry points. Factor subgroups may belong to any group on the
// same point set; they are re-read inside g.
BoundVerdict check_p_length_bound(const Group& g, const Subgroup& a, const Subgroup& b, std::uint64_t p);
BoundVerdict check_p_length_conjecture(const Group& g, const Subgroup& a, const Subgroup& b, std::uint64_t p);
BoundVerdict check_fitting_length_bound(const Group& g, const Subgroup& a, const Subgroup& b);
BoundVerdict check_frattini_derived_length_bound(const Group& g, const Subgroup& a, const Subgroup& b);
BoundVerdict check_group_p_length_bound(const Group& g, std::uint64_t p);
std::vector<BoundVerdict> check_hall_sylow_numbers(const Group& g);
std::vector<BoundVerdict> check_sylow_p_nilpotency(const Group& g);

// ---------------------------------------------------------------------------
// Corpus scans.

struct ScanOptions {
  std::vector<std::string> claims;  // claim ids; "bea" expands to bea_2_1..bea_2_5
  unsigned workers = 1;
  LemmaSuiteOptions lemma_suite;
};

// Verdicts of a scan. Instances with identical outcomes on the same group,
// prime and factor orders are merged into one verdict whose `instances`
// counts them and whose inputs name the first instance in lattice order.
struct ScanResult {
  std::vector<BoundVerdict> verdicts;
  // Bound verdicts with lhs == rhs.
  std::vector<BoundVerdict> equality_instances;
  // Conjecture verdicts with rhs - lhs == 1.
  std::vector<BoundVerdict> near_tight_instances;
  std::uint64_t groups = 0;
  std::uint64_t factorizations = 0;
};

ScanResult scan_corpus(std::span<const Group> corpus, const ScanOptions& options);
// The p-length inequality on every mutually permutable factorization and
// every prime with both factors p-solvable, without conditions (a)/(b).
ScanResult scan_p_length_conjecture(std::span<const Group> corpus, unsigned workers = 1);

}  // namespace sylowlens
