#include "sylowlens/series.hpp"
#include "sylowlens/error.hpp"
#include "sylowlens/lattice.hpp"
#include "sylowlens/quotient.hpp"
#include "sylowlens/sylow.hpp"

#include <algorithm>

namespace sylowlens {

namespace {

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// [H, G] for H normal in G.
Subgroup commutator_with(const Group& g, const Subgroup& h) {
  std::vector<Perm> gens;
  for (const Perm& x : h.generators()) {
    for (const Perm& y : g.generators()) {
      Perm c = commutator(x, y);
      if (!c.is_identity()) gens.push_back(std::move(c));
    }
  }
  return normal_closure(g, Subgroup(g, std::move(gens)));
}

// Factor `upper / lower` where lower is normal in upper.
StepAnnotation annotate(const Subgroup& upper, const Subgroup& lower,
                        std::optional<std::uint64_t> prime) {
  StepAnnotation a;
  a.quotient_order = upper.order() / lower.order();
  for (const Perm& x : upper.generators()) {
    for (const Perm& y : upper.generators()) {
      if (!lower.contains(commutator(x, y))) a.abelian = false;
    }
  }
  if (a.abelian) {
    a.nilpotent = true;
  } else {
    QuotientImage q = quotient(upper.group(), as_subgroup(upper.group(), lower.group()));
    a.nilpotent = is_nilpotent(q.image());
  }
  if (prime) {
    a.p_group = is_p_power(a.quotient_order, *prime);
    a.p_prime_group = a.quotient_order % *prime != 0;
  }
  return a;
}

void annotate_descending(SeriesRecord& record) {
  for (std::size_t i = 0; i + 1 < record.terms.size(); ++i) {
    record.steps.push_back(annotate(record.terms[i], record.terms[i + 1], record.prime));
  }
}

Subgroup lift_to(const Group& ambient, const Subgroup& inner) {
  return as_subgroup(ambient, inner.group());
}

}  // namespace

std::vector<std::uint64_t> complement_primes(const Group& g, std::uint64_t p) {
  std::vector<std::uint64_t> primes = g.prime_divisors();
  std::erase(primes, p);
  return primes;
}

Subgroup derived_subgroup(const Group& g) { return commutator_with(g, Subgroup::whole(g)); }

SeriesRecord derived_series(const Group& g) {
  SeriesRecord record;
  record.kind = SeriesKind::Derived;
  record.terms.push_back(Subgroup::whole(g));
  while (!record.terms.back().is_trivial()) {
    const Subgroup& last = record.terms.back();
    Subgroup next = lift_to(g, derived_subgroup(last.group()));
    if (next.order() == last.order()) {
      record.reaches_end = false;
      break;
    }
    record.terms.push_back(std::move(next));
  }
  annotate_descending(record);
  return record;
}

std::optional<unsigned> derived_length(const Group& g) {
  SeriesRecord s = derived_series(g);
  if (!s.reaches_end) return std::nullopt;
  return static_cast<unsigned>(s.terms.size() - 1);
}

Subgroup o_p(const Group& g, std::uint64_t p) {
  if (g.order() % p != 0) return Subgroup::trivial(g);
  return core(g, sylow_subgroup(g, p));
}

Subgroup o_pi(const Group& g, std::span<const std::uint64_t> pi) {
  std::vector<Perm> gens;
  Group current = Group::trivial(g.degree());
  for (const Perm& x : conjugacy_class_representatives(g)) {
    if (x.is_identity() || !is_pi_number(x.order(), pi) || current.contains(x)) continue;
    Subgroup closure = normal_closure(g, Subgroup(g, {x}));
    if (!is_pi_number(closure.order(), pi)) continue;
    gens.push_back(x);
    current = Group(g.degree(), gens);
  }
  // Join of normal subgroups is normal; close anyway so the handle is exact.
  return normal_closure(g, Subgroup(g, std::move(gens)));
}

Subgroup o_upper_pi(const Group& g, std::span<const std::uint64_t> pi) {
  std::vector<Perm> gens;
  for (std::uint64_t q : g.prime_divisors()) {
    if (std::find(pi.begin(), pi.end(), q) != pi.end()) continue;
    Subgroup s = sylow_subgroup(g, q);
    gens.insert(gens.end(), s.generators().begin(), s.generators().end());
  }
  return normal_closure(g, Subgroup(g, std::move(gens)));
}

SeriesRecord lower_p_series(const Group& g, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::Precondition, std::to_string(p) + " is not prime");
  SeriesRecord record;
  record.kind = SeriesKind::LowerP;
  record.prime = p;
  record.terms.push_back(Subgroup::whole(g));
  const std::uint64_t only_p[1] = {p};
  bool remove_p_prime = true;
  unsigned stalled = 0;
  while (!record.terms.back().is_trivial()) {
    const Group& current = record.terms.back().group();
    // O^{p'} is generated by the Sylow p-subgroups, O^p by the other Sylows.
    Subgroup next = remove_p_prime ? o_upper_pi(current, complement_primes(current, p))
                                   : o_upper_pi(current, std::span(only_p));
    stalled = next.order() == current.order() ? stalled + 1 : 0;
    if (stalled == 2) {
      record.reaches_end = false;
      break;
    }
    record.terms.push_back(lift_to(g, next));
    remove_p_prime = !remove_p_prime;
  }
  annotate_descending(record);
  return record;
}

unsigned p_length(const Group& g, std::uint64_t p) {
  SeriesRecord s = lower_p_series(g, p);
  if (!s.reaches_end) {
    throw Error(ErrorKind::Precondition, "p_length: group is not " + std::to_string(p) + "-solvable");
  }
  unsigned count = 0;
  for (const StepAnnotation& step : s.steps) {
    if (step.quotient_order > 1 && step.p_group) ++count;
  }
  return count;
}

Subgroup fitting_subgroup(const Group& g) {
  std::vector<Perm> gens;
  for (std::uint64_t p : g.prime_divisors()) {
    Subgroup o = o_p(g, p);
    gens.insert(gens.end(), o.generators().begin(), o.generators().end());
  }
  return Subgroup(g, std::move(gens));
}

SeriesRecord fitting_series(const Group& g) {
  SeriesRecord record;
  record.kind = SeriesKind::Fitting;
  record.terms.push_back(Subgroup::trivial(g));
  while (record.terms.back().order() < g.order()) {
    const Subgroup& last = record.terms.back();
    QuotientImage q = quotient(g, last);
    Subgroup f = fitting_subgroup(q.image());
    if (f.is_trivial()) {
      record.reaches_end = false;
      break;
    }
    record.terms.push_back(q.preimage(f));
  }
  for (std::size_t i = 0; i + 1 < record.terms.size(); ++i) {
    record.steps.push_back(annotate(record.terms[i + 1], record.terms[i], std::nullopt));
  }
  return record;
}

std::optional<unsigned> fitting_length(const Group& g) {
  SeriesRecord s = fitting_series(g);
  if (!s.reaches_end) return std::nullopt;
  return static_cast<unsigned>(s.terms.size() - 1);
}

bool is_solvable(const Group& g) { return derived_length(g).has_value(); }

bool is_p_solvable(const Group& g, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::Precondition, std::to_string(p) + " is not prime");
  if (g.order() % p != 0) return true;
  Subgroup bottom = Subgroup::trivial(g);
  bool take_p_prime = true;
  unsigned stalled = 0;
  while (bottom.order() < g.order()) {
    QuotientImage q = quotient(g, bottom);
    const Group& image = q.image();
    Subgroup top = take_p_prime ? o_pi(image, complement_primes(image, p)) : o_p(image, p);
    take_p_prime = !take_p_prime;
    if (top.is_trivial()) {
      if (++stalled == 2) return false;
      continue;
    }
    stalled = 0;
    bottom = q.preimage(top);
  }
  return true;
}

bool is_nilpotent(const Group& g) {
  Subgroup term = Subgroup::whole(g);
  while (!term.is_trivial()) {
    Subgroup next = commutator_with(g, term);
    if (next.order() == term.order()) return false;
    term = std::move(next);
  }
  return true;
}

bool is_p_nilpotent(const Group& g, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::Precondition, std::to_string(p) + " is not prime");
  std::uint64_t n = g.order();
  Subgroup complement = o_pi(g, complement_primes(g, p));
  return complement.order() == n / p_part(n, p);
}

}  // namespace sylowlens
