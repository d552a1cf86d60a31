#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sylowlens/group.hpp"
#include "sylowlens/subgroup.hpp"

namespace sylowlens {

enum class SeriesKind { Derived, Fitting, LowerP };

// Classification of one factor of a series (larger term over smaller term).
struct StepAnnotation {
  std::uint64_t quotient_order = 1;
  bool abelian = true;
  bool nilpotent = true;
  // Only meaningful when the record carries a prime.
  bool p_group = true;
  bool p_prime_group = true;
};

// Terms of a derived or lower p-series descend from G; terms of the Fitting
// series ascend from 1. All terms are subgroups of the group the series was
// computed for. `reaches_end` is false when the series stalled (non-solvable
// or non-p-solvable input).
struct SeriesRecord {
  SeriesKind kind = SeriesKind::Derived;
  std::vector<Subgroup> terms;
  std::vector<StepAnnotation> steps;
  std::optional<std::uint64_t> prime;
  bool reaches_end = true;
};

Subgroup derived_subgroup(const Group& g);
SeriesRecord derived_series(const Group& g);
// Number of strict steps down to 1; nullopt when g is not solvable.
std::optional<unsigned> derived_length(const Group& g);

// Largest normal p-subgroup: the core of a Sylow p-subgroup.
Subgroup o_p(const Group& g, std::uint64_t p);
// Largest normal pi-subgroup: generated by the normal closures of conjugacy
// classes that are pi-groups. Needs |G| <= enumeration_cap().
Subgroup o_pi(const Group& g, std::span<const std::uint64_t> pi);
// Smallest normal subgroup with pi-quotient: normal closure of the Sylow
// q-subgroups for the primes q of |G| outside pi.
Subgroup o_upper_pi(const Group& g, std::span<const std::uint64_t> pi);

// G >= O^{p'}(G) >= O^{p',p}(G) >= ...; starts with the O^{p'} step and
// stops at 1 or when two consecutive steps make no progress.
SeriesRecord lower_p_series(const Group& g, std::uint64_t p);
// Number of non-trivial p-factors of the lower p-series.
// Throws Error(Precondition) when g is not p-solvable.
unsigned p_length(const Group& g, std::uint64_t p);

Subgroup fitting_subgroup(const Group& g);
// Ascending 1 = F_0 < F_1 < ... with F_{i+1}/F_i = F(G/F_i).
SeriesRecord fitting_series(const Group& g);
// Nullopt when g is not solvable.
std::optional<unsigned> fitting_length(const Group& g);

bool is_solvable(const Group& g);
// Alternately factor out O_{p'} and O_p; p-solvable iff this reaches the
// trivial quotient.
bool is_p_solvable(const Group& g, std::uint64_t p);
// Lower central series reaches 1.
bool is_nilpotent(const Group& g);
// Has a normal p-complement: |O_{p'}(G)| equals the p'-part of |G|.
bool is_p_nilpotent(const Group& g, std::uint64_t p);

// Primes of |G| other than p.
std::vector<std::uint64_t> complement_primes(const Group& g, std::uint64_t p);

}  // namespace sylowlens
