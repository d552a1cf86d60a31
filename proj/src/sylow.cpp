#include "sylowlens/sylow.hpp"
#include "sylowlens/error.hpp"
#include "sylowlens/lattice.hpp"

#include <algorithm>

namespace sylowlens {

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::Precondition, std::to_string(p) + " is not prime");
}

}  // namespace

FactorDecomposition factorize(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::Precondition, "factorize: n must be positive");
  FactorDecomposition d;
  d.n = n;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    unsigned a = 0;
    while (n % q == 0) {
      n /= q;
      ++a;
    }
    if (a > 0) d.factors.emplace_back(q, a);
  }
  if (n > 1) d.factors.emplace_back(n, 1);
  return d;
}

unsigned tau_p(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  if (n == 0) throw Error(ErrorKind::Precondition, "tau_p: n must be positive");
  unsigned a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  return a;
}

unsigned tau(std::uint64_t n) {
  unsigned best = 0;
  for (const auto& [q, a] : factorize(n).factors) best = std::max(best, a);
  return best;
}

bool hall_admissible(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  for (const auto& [q, a] : factorize(n).factors) {
    std::uint64_t power = 1;
    for (unsigned i = 0; i < a; ++i) power *= q;
    if (power % p != 1 % p) return false;
  }
  return true;
}

Subgroup sylow_subgroup(const Group& g, std::uint64_t p) {
  require_prime(p);
  const std::uint64_t target = p_part(g.order(), p);
  if (target == 1) return Subgroup::trivial(g);

  const std::vector<Perm>& elements = g.elements();
  auto p_element = std::find_if(elements.begin(), elements.end(), [&](const Perm& x) {
    return !x.is_identity() && is_power_of(x.order(), p);
  });
  Subgroup current(g, {*p_element});
  while (current.order() < target) {
    Subgroup n = normalizer(g, current);
    const std::vector<Perm>& candidates = n.group().elements();
    auto next = std::find_if(candidates.begin(), candidates.end(), [&](const Perm& x) {
      return is_power_of(x.order(), p) && !current.contains(x);
    });
    if (next == candidates.end()) {
      throw Error(ErrorKind::Precondition, "normalizer ascent stalled");  // unreachable
    }
    std::vector<Perm> gens(current.generators().begin(), current.generators().end());
    gens.push_back(*next);
    current = Subgroup(g, std::move(gens));
  }
  return current;
}

std::uint64_t sylow_number(const Group& g, std::uint64_t p) {
  require_prime(p);
  if (g.order() % p != 0) return 1;
  Subgroup sylow = sylow_subgroup(g, p);
  return g.order() / normalizer(g, sylow).order();
}

unsigned TauProfile::tau_p(std::uint64_t p) const {
  auto it = tau_p_of_group.find(p);
  return it == tau_p_of_group.end() ? 0 : it->second;
}

TauProfile tau_profile(const Group& g) {
  TauProfile profile;
  profile.group_order = g.order();
  const std::vector<std::uint64_t> primes = g.prime_divisors();
  for (std::uint64_t q : primes) profile.sylow_numbers[q] = sylow_number(g, q);
  for (std::uint64_t p : primes) {
    unsigned best = 0;
    for (const auto& [q, n] : profile.sylow_numbers) {
      best = std::max(best, sylowlens::tau_p(p, n));
    }
    profile.tau_p_of_group[p] = best;
  }
  for (const auto& [q, n] : profile.sylow_numbers) {
    profile.tau_of_group = std::max(profile.tau_of_group, tau(n));
  }
  return profile;
}

unsigned tau_p_group(const Group& g, std::uint64_t p) { return tau_profile(g).tau_p(p); }
unsigned tau_group(const Group& g) { return tau_profile(g).tau_of_group; }

}  // namespace sylowlens
