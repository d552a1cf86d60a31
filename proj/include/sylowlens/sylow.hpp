#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sylowlens/group.hpp"
#include "sylowlens/subgroup.hpp"

namespace sylowlens {

// n = prod p_i^{a_i} with strictly increasing primes and a_i >= 1.
struct FactorDecomposition {
  std::uint64_t n = 1;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
};

// Trial division; factorize(1) has no factors.
FactorDecomposition factorize(std::uint64_t n);

// Exponent of p in n.
unsigned tau_p(std::uint64_t p, std::uint64_t n);
// Largest exponent in the factorization of n; tau(1) == 0.
unsigned tau(std::uint64_t n);

// Every prime-power factor of n is 1 mod p. n == 1 qualifies.
bool hall_admissible(std::uint64_t n, std::uint64_t p);

// A Sylow p-subgroup, built by normalizer ascent from the first p-element in
// canonical order: while P is not Sylow, adjoin the first element of
// N_G(P) \ P of p-power order. The trivial subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const Group& g, std::uint64_t p);

// |G : N_G(P)|.
std::uint64_t sylow_number(const Group& g, std::uint64_t p);

struct TauProfile {
  std::uint64_t group_order = 1;
  std::map<std::uint64_t, std::uint64_t> sylow_numbers;  // q -> n_q(G), q | |G|
  unsigned tau_of_group = 0;
  std::map<std::uint64_t, unsigned> tau_p_of_group;  // p -> tau_p(G), p | |G|

  // tau_p(G) for any prime; zero when p does not divide |G|.
  unsigned tau_p(std::uint64_t p) const;
};

TauProfile tau_profile(const Group& g);
unsigned tau_p_group(const Group& g, std::uint64_t p);
unsigned tau_group(const Group& g);

}  // namespace sylowlens
