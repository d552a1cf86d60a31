#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sylowlens/lattice.hpp"
#include "sylowlens/named.hpp"
#include "sylowlens/quotient.hpp"
#include "sylowlens/series.hpp"
#include "sylowlens/sylow.hpp"

using namespace sylowlens;

namespace {

std::set<Perm> members(const Subgroup& h) {
  return {h.group().elements().begin(), h.group().elements().end()};
}

std::vector<Group> sample_groups() {
  return {symmetric(3), symmetric(4), alternating(4), alternating(5), symmetric(5), dihedral(8),
          dihedral(20), cyclic(12), dicyclic(12), dicyclic(16), affine(5, 4), affine(7, 6), affine(7, 3),
          elementary_abelian(3, 2), direct_product(symmetric(3), symmetric(3)),
          direct_product(alternating(4), cyclic(3)), generalized_dihedral(3, 2)};
}

}  // namespace

TEST_CASE("factorize") {
  using F = std::vector<std::pair<std::uint64_t, unsigned>>;
  CHECK(factorize(12).factors == F{{2, 2}, {3, 1}});
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(360).factors == F{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(97).factors == F{{97, 1}});
}

TEST_CASE("factorize round trips on random integers") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(1, 5'000'000);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t n = pick(rng);
    FactorDecomposition d = factorize(n);
    std::uint64_t prod = 1;
    std::uint64_t prev = 1;
    for (auto [p, a] : d.factors) {
      CHECK(p > prev);
      CHECK(a >= 1);
      CHECK(is_prime(p));
      for (unsigned k = 0; k < a; ++k) prod *= p;
      prev = p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("tau of integers") {
  CHECK(tau_p(2, 12) == 2);
  CHECK(tau_p(3, 12) == 1);
  CHECK(tau_p(5, 12) == 0);
  CHECK(tau(12) == 2);
  CHECK(tau(1) == 0);
  CHECK(tau_p(2, 1) == 0);
  CHECK(tau(1024) == 10);
}

TEST_CASE("Hall admissibility") {
  CHECK(hall_admissible(4, 3));
  CHECK_FALSE(hall_admissible(6, 5));
  CHECK(hall_admissible(1, 7));
  CHECK(hall_admissible(3, 2));
  CHECK(hall_admissible(28, 3));    // 4 and 7 are both 1 mod 3
  CHECK_FALSE(hall_admissible(10, 3));
}

TEST_CASE("Sylow subgroups") {
  Group s4 = symmetric(4);
  Subgroup p2 = sylow_subgroup(s4, 2);
  CHECK(p2.order() == 8);
  CHECK_FALSE(p2.group().is_abelian());
  CHECK(sylow_subgroup(s4, 5).is_trivial());
  Group c12 = cyclic(12);
  Subgroup c4 = sylow_subgroup(c12, 2);
  CHECK(c4.order() == 4);
  CHECK(c4.group().is_abelian());

  for (const Group& g : sample_groups()) {
    for (std::uint64_t p : g.prime_divisors()) CHECK(sylow_subgroup(g, p).order() == p_part(g.order(), p));
  }
}

TEST_CASE("Sylow subgroups are deterministic") {
  Group a = symmetric(5);
  Group b = symmetric(5);
  CHECK(members(sylow_subgroup(a, 2)) == members(sylow_subgroup(b, 2)));
}

TEST_CASE("Sylow numbers") {
  CHECK(sylow_number(symmetric(4), 2) == 3);
  CHECK(sylow_number(symmetric(4), 3) == 4);
  CHECK(sylow_number(alternating(4), 3) == 4);
  CHECK(sylow_number(alternating(5), 2) == 5);
  CHECK(sylow_number(alternating(5), 5) == 6);
  CHECK(sylow_number(cyclic(30), 5) == 1);
  CHECK(sylow_number(symmetric(4), 7) == 1);
}

TEST_CASE("Sylow number equals conjugate count") {
  for (const Group& g : sample_groups()) {
    std::set<Perm> all(g.elements().begin(), g.elements().end());
    for (std::uint64_t p : g.prime_divisors()) {
      std::uint64_t n = sylow_number(g, p);
      CHECK_MESSAGE(n == oracle::count_conjugates(all, members(sylow_subgroup(g, p))), g.name() << " p=" << p);
      CHECK(n % p == 1);
      CHECK((g.order() / p_part(g.order(), p)) % n == 0);
    }
  }
}

TEST_CASE("tau profiles") {
  Group a4 = alternating(4);
  Group d8 = dihedral(8);
  CHECK(tau_p_group(a4, 2) == 2);
  CHECK(tau_p_group(d8, 2) == 0);
  CHECK(tau_group(symmetric(4)) == 2);
  CHECK(tau_p_group(cyclic(12), 2) == 0);
  CHECK(tau_group(cyclic(12)) == 0);

  TauProfile prof = tau_profile(symmetric(4));
  CHECK(prof.group_order == 24);
  CHECK(prof.sylow_numbers.at(2) == 3);
  CHECK(prof.sylow_numbers.at(3) == 4);
  CHECK(prof.tau_p(2) == 2);
  CHECK(prof.tau_p(3) == 1);
  CHECK(prof.tau_p(5) == 0);
  CHECK(prof.tau_of_group == 2);
}

TEST_CASE("tau vanishes exactly on nilpotent groups") {
  for (const Group& g : sample_groups()) {
    TauProfile prof = tau_profile(g);
    bool all_zero = true;
    for (auto [p, t] : prof.tau_p_of_group) all_zero = all_zero && t == 0;
    CHECK(all_zero == (prof.tau_of_group == 0));
    CHECK(all_zero == is_nilpotent(g));
  }
}

TEST_CASE("Sylow numbers of quotients divide those of the group") {
  for (const Group& g : sample_groups()) {
    for (const Subgroup& n : normal_subgroups(g)) {
      Group bar = quotient(g, n).image();
      for (std::uint64_t q : g.prime_divisors()) CHECK(sylow_number(g, q) % sylow_number(bar, q) == 0);
    }
  }
}
