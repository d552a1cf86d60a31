#include "sylowlens/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "sylowlens/config.hpp"
#include "sylowlens/error.hpp"
#include "sylowlens/lattice.hpp"
#include "sylowlens/quotient.hpp"
#include "sylowlens/series.hpp"

namespace sylowlens {

bool is_claim_id(std::string_view id) {
  return std::any_of(std::begin(kClaimIds), std::end(kClaimIds), [&](const char* c) { return id == c; });
}

namespace {

std::size_t claim_rank(const std::string& id) {
  for (std::size_t i = 0; i < std::size(kClaimIds); ++i) {
    if (id == kClaimIds[i]) return i;
  }
  return std::size(kClaimIds);
}

void fill_common(GroupInvariants& inv, const Group& h, std::span<const std::uint64_t> primes) {
  inv.name = h.name();
  inv.order = h.order();
  inv.primes.assign(primes.begin(), primes.end());
  inv.tau = tau_profile(h);
  inv.solvable = is_solvable(h);
  for (std::uint64_t p : primes) {
    inv.p_solvable[p] = is_p_solvable(h, p);
    inv.p_nilpotent[p] = is_p_nilpotent(h, p);
  }
}

// Saturates at INT64_MAX / 128 so small multipliers cannot overflow either.
std::int64_t ipow(std::int64_t base, unsigned e) {
  constexpr std::int64_t kCeil = std::numeric_limits<std::int64_t>::max() / 128;
  std::int64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (out > kCeil / base) return kCeil;
    out *= base;
  }
  return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// 1 + t/2 rendered exactly.
std::string half_bound(unsigned t) {
  return t % 2 == 0 ? std::to_string(1 + t / 2) : std::to_string(1 + t / 2) + ".5";
}

std::string decimal(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", x);
  return buf;
}

unsigned tau_p_of(const GroupInvariants& inv, std::uint64_t p) { return inv.tau.tau_p(p); }

Subgroup inside(const Group& g, const Subgroup& h) {
  if (h.ambient().degree() != g.degree()) {
    throw Error(ErrorKind::AmbientMismatch, "subgroup acts on a different point set");
  }
  if (h.ambient().same_as(g)) return h;
  return Subgroup(g, std::vector<Perm>(h.generators().begin(), h.generators().end()), h.name());
}

nlohmann::json describe_subgroup(const Subgroup& h) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Perm& x : h.generators()) gens.push_back(x.to_cycles());
  nlohmann::json j = {{"order", h.order()}, {"generators", gens}};
  if (!h.name().empty()) j["name"] = h.name();
  return j;
}

void settle(BoundVerdict& v, const Evaluation& e) {
  v.lhs = e.lhs;
  v.rhs = e.rhs;
  v.holds = e.holds;
}

}  // namespace

GroupInvariants factor_invariants(const Group& h, std::span<const std::uint64_t> primes) {
  GroupInvariants inv;
  fill_common(inv, h, primes);
  return inv;
}

GroupInvariants ambient_invariants(const Group& g) {
  GroupInvariants inv;
  std::vector<std::uint64_t> primes = g.prime_divisors();
  fill_common(inv, g, primes);
  for (std::uint64_t p : primes) {
    if (inv.p_solvable[p]) inv.p_length[p] = p_length(g, p);
  }
  inv.fitting_length = fitting_length(g);
  inv.derived_length = derived_length(g);
  if (inv.solvable && g.order() <= lattice_cap()) {
    QuotientImage q = quotient(g, frattini(g));
    inv.frattini_quotient_derived_length = derived_length(q.image());
  }
  return inv;
}

long double fitting_bound_decimal(unsigned tau) {
  long double x = tau == 0 ? 0.5L : static_cast<long double>(tau) / 2.0L;
  return 4.0L + 2.0L * std::log(x) / std::log(3.0L);
}

long double derived_bound_decimal(unsigned tau) {
  return tau == 0 ? 2.0L : 2.0L + 6.0L * std::log2(static_cast<long double>(tau));
}

std::pair<std::int64_t, std::int64_t> fitting_bound_exact(unsigned fitting_length, unsigned tau) {
  std::int64_t u = std::max<unsigned>(tau, 1);
  return {4 * ipow(3, fitting_length), 81 * u * u};
}

std::pair<std::int64_t, std::int64_t> derived_bound_exact(unsigned derived_length, unsigned tau) {
  std::int64_t u = std::max<unsigned>(tau, 1);
  return {ipow(2, derived_length), 4 * ipow(u, 6)};
}

// ---------------------------------------------------------------------------
// p-length bound and its conjectured unconditional form.

Evaluation evaluate_p_length_bound(const GroupInvariants& g, const GroupInvariants& a, const GroupInvariants& b,
                                   bool mp, std::uint64_t p, bool conjecture) {
  Evaluation e;
  const bool divides = g.order % p == 0;
  const bool a_solv = a.p_solvable.contains(p) ? a.p_solvable.at(p) : true;
  const bool b_solv = b.p_solvable.contains(p) ? b.p_solvable.at(p) : true;
  const bool cond_a = std::gcd(g.order, p - 1) == 1;
  const bool cond_b = (a.p_nilpotent.contains(p) && a.p_nilpotent.at(p)) ||
                      (b.p_nilpotent.contains(p) && b.p_nilpotent.at(p));
  if (!mp) e.failed_preconditions |= 1u;
  if (!divides) e.failed_preconditions |= 2u;
  if (!a_solv) e.failed_preconditions |= 4u;
  if (!b_solv) e.failed_preconditions |= 8u;
  if (!conjecture && !cond_a && !cond_b) e.failed_preconditions |= 16u;
  e.rhs = std::max(tau_p_of(a, p), tau_p_of(b, p));
  auto lp = g.p_length.find(p);
  if (lp != g.p_length.end()) e.lhs = 2 * (static_cast<std::int64_t>(lp->second) - 1);
  if (e.failed_preconditions == 0) {
    // A, B p-solvable and mutually permutable force G p-solvable; a missing
    // p-length here is reported as a failure, not skipped.
    e.holds = lp != g.p_length.end() && e.lhs <= e.rhs;
  }
  return e;
}

BoundVerdict render_p_length_bound(const GroupInvariants& g, const FactorRef& a, const FactorRef& b, bool mp,
                                   std::uint64_t p, bool conjecture) {
  Evaluation e = evaluate_p_length_bound(g, *a.inv, *b.inv, mp, p, conjecture);
  BoundVerdict v;
  v.claim_id = conjecture ? "conj_1_4" : "thm_1_1";
  v.group = g.name;
  v.inputs = {{"A", a.description}, {"B", b.description}, {"p", p}};
  v.relation = "<=";
  v.preconditions.push_back({"mutually permutable product", mp, ""});
  v.preconditions.push_back({"p divides |G|", !(e.failed_preconditions & 2u), "|G| = " + std::to_string(g.order)});
  v.preconditions.push_back({"A p-solvable", !(e.failed_preconditions & 4u), ""});
  v.preconditions.push_back({"B p-solvable", !(e.failed_preconditions & 8u), ""});
  if (!conjecture) {
    const bool cond_a = std::gcd(g.order, p - 1) == 1;
    const bool a_nil = a.inv->p_nilpotent.contains(p) && a.inv->p_nilpotent.at(p);
    const bool b_nil = b.inv->p_nilpotent.contains(p) && b.inv->p_nilpotent.at(p);
    v.preconditions.push_back({"condition (a) or (b)", !(e.failed_preconditions & 16u),
                               "(a) gcd(|G|, p - 1) = " + std::to_string(std::gcd(g.order, p - 1)) + ": " +
                                   yes(cond_a) + "; (b) A p-nilpotent: " + yes(a_nil) +
                                   ", B p-nilpotent: " + yes(b_nil)});
  }
  settle(v, e);
  const unsigned ta = tau_p_of(*a.inv, p);
  const unsigned tb = tau_p_of(*b.inv, p);
  auto lp = g.p_length.find(p);
  std::string lp_text = lp == g.p_length.end() ? "undefined" : std::to_string(lp->second);
  v.display = "l_" + std::to_string(p) + "(G) = " + lp_text + " <= max(1 + " + std::to_string(ta) + "/2, 1 + " +
              std::to_string(tb) + "/2) = " + half_bound(std::max(ta, tb)) + "; exact: 2(l_p - 1) = " +
              std::to_string(e.lhs) + " <= " + std::to_string(e.rhs);
  v.witness.push_back("tau_p(A) = " + std::to_string(ta) + ", tau_p(B) = " + std::to_string(tb));
  for (const auto& [q, n] : a.inv->tau.sylow_numbers) {
    v.witness.push_back("n_" + std::to_string(q) + "(A) = " + std::to_string(n));
  }
  for (const auto& [q, n] : b.inv->tau.sylow_numbers) {
    v.witness.push_back("n_" + std::to_string(q) + "(B) = " + std::to_string(n));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Fitting length and Frattini-quotient derived length bounds.

Evaluation evaluate_fitting_length_bound(const GroupInvariants& g, const GroupInvariants& a, const GroupInvariants& b,
                                         bool mp) {
  Evaluation e;
  if (!mp) e.failed_preconditions |= 1u;
  if (!a.solvable) e.failed_preconditions |= 2u;
  if (!b.solvable) e.failed_preconditions |= 4u;
  const unsigned tau = std::max(a.tau.tau_of_group, b.tau.tau_of_group);
  if (g.fitting_length) std::tie(e.lhs, e.rhs) = fitting_bound_exact(*g.fitting_length, tau);
  if (e.failed_preconditions == 0) e.holds = g.fitting_length && e.lhs <= e.rhs;
  return e;
}

BoundVerdict render_fitting_length_bound(const GroupInvariants& g, const FactorRef& a, const FactorRef& b, bool mp) {
  Evaluation e = evaluate_fitting_length_bound(g, *a.inv, *b.inv, mp);
  BoundVerdict v;
  v.claim_id = "thm_1_2a";
  v.group = g.name;
  v.inputs = {{"A", a.description}, {"B", b.description}};
  v.preconditions.push_back({"mutually permutable product", mp, ""});
  v.preconditions.push_back({"A solvable", a.inv->solvable, ""});
  v.preconditions.push_back({"B solvable", b.inv->solvable, ""});
  settle(v, e);
  const unsigned ta = a.inv->tau.tau_of_group;
  const unsigned tb = b.inv->tau.tau_of_group;
  const unsigned tau = std::max(ta, tb);
  std::string fl = g.fitting_length ? std::to_string(*g.fitting_length) : "undefined";
  v.display = "F_l(G) = " + fl + " <= max(4 + 2f(" + std::to_string(ta) + "), 4 + 2f(" + std::to_string(tb) +
              ")) = " + decimal(fitting_bound_decimal(tau)) + "; exact: 4*3^F_l = " + std::to_string(e.lhs) +
              " <= 81*u^2 = " + std::to_string(e.rhs) + " with u = " + std::to_string(std::max(tau, 1u));
  v.witness.push_back("tau(A) = " + std::to_string(ta) + ", tau(B) = " + std::to_string(tb));
  return v;
}

Evaluation evaluate_frattini_derived_length_bound(const GroupInvariants& g, const GroupInvariants& a,
                                                  const GroupInvariants& b, bool mp) {
  Evaluation e;
  if (!mp) e.failed_preconditions |= 1u;
  if (!a.solvable) e.failed_preconditions |= 2u;
  if (!b.solvable) e.failed_preconditions |= 4u;
  const bool computable = !g.solvable || g.frattini_quotient_derived_length.has_value();
  if (!computable) e.failed_preconditions |= 8u;
  const unsigned tau = std::max(a.tau.tau_of_group, b.tau.tau_of_group);
  if (g.frattini_quotient_derived_length) {
    std::tie(e.lhs, e.rhs) = derived_bound_exact(*g.frattini_quotient_derived_length, tau);
  }
  if (e.failed_preconditions == 0) e.holds = g.frattini_quotient_derived_length && e.lhs <= e.rhs;
  return e;
}

BoundVerdict render_frattini_derived_length_bound(const GroupInvariants& g, const FactorRef& a, const FactorRef& b,
                                                  bool mp) {
  Evaluation e = evaluate_frattini_derived_length_bound(g, *a.inv, *b.inv, mp);
  BoundVerdict v;
  v.claim_id = "thm_1_2b";
  v.group = g.name;
  v.inputs = {{"A", a.description}, {"B", b.description}};
  v.preconditions.push_back({"mutually permutable product", mp, ""});
  v.preconditions.push_back({"A solvable", a.inv->solvable, ""});
  v.preconditions.push_back({"B solvable", b.inv->solvable, ""});
  v.preconditions.push_back({"Frattini subgroup computable", !(e.failed_preconditions & 8u),
                             "|G| = " + std::to_string(g.order) + ", lattice cap " + std::to_string(lattice_cap())});
  settle(v, e);
  const unsigned ta = a.inv->tau.tau_of_group;
  const unsigned tb = b.inv->tau.tau_of_group;
  const unsigned tau = std::max(ta, tb);
  std::string dl = g.frattini_quotient_derived_length ? std::to_string(*g.frattini_quotient_derived_length)
                                                      : "undefined";
  v.display = "dl(G/Phi(G)) = " + dl + " <= max(2 + 6g(" + std::to_string(ta) + "), 2 + 6g(" + std::to_string(tb) +
              ")) = " + decimal(derived_bound_decimal(tau)) + "; exact: 2^dl = " + std::to_string(e.lhs) +
              " <= 4*u^6 = " + std::to_string(e.rhs) + " with u = " + std::to_string(std::max(tau, 1u));
  v.witness.push_back("tau(A) = " + std::to_string(ta) + ", tau(B) = " + std::to_string(tb));
  return v;
}

// ---------------------------------------------------------------------------
// Single-group claims.

BoundVerdict render_group_p_length_bound(const GroupInvariants& g, std::uint64_t p) {
  BoundVerdict v;
  v.claim_id = "lemma_2_7";
  v.group = g.name;
  v.inputs = {{"p", p}};
  const bool solv = g.p_solvable.contains(p) ? g.p_solvable.at(p) : true;
  v.preconditions.push_back({"G p-solvable", solv, ""});
  auto lp = g.p_length.find(p);
  const unsigned l = lp != g.p_length.end() ? lp->second : 0;
  v.lhs = 2 * (static_cast<std::int64_t>(l) - 1);
  v.rhs = g.tau.tau_p(p);
  if (solv) v.holds = v.lhs <= v.rhs;
  v.display = "l_" + std::to_string(p) + "(G) = " + (solv ? std::to_string(l) : "undefined") + " <= 1 + " +
              std::to_string(v.rhs) + "/2 = " + half_bound(static_cast<unsigned>(v.rhs)) +
              "; exact: 2(l_p - 1) = " + std::to_string(v.lhs) + " <= " + std::to_string(v.rhs);
  for (const auto& [q, n] : g.tau.sylow_numbers) v.witness.push_back("n_" + std::to_string(q) + "(G) = " + std::to_string(n));
  return v;
}

std::vector<BoundVerdict> render_hall_sylow_numbers(const GroupInvariants& g) {
  std::vector<BoundVerdict> out;
  for (std::uint64_t p : g.primes) {
    BoundVerdict v;
    v.claim_id = "hall";
    v.group = g.name;
    v.inputs = {{"p", p}};
    v.relation = "hall";
    v.preconditions.push_back({"G solvable", g.solvable, ""});
    const std::uint64_t n = g.tau.sylow_numbers.at(p);
    v.lhs = static_cast<std::int64_t>(n);
    v.rhs = static_cast<std::int64_t>(p);
    if (g.solvable) v.holds = v.relation_holds();
    std::string factors;
    for (auto [q, a] : factorize(n).factors) {
      std::uint64_t pa = p_part(n, q);
      if (!factors.empty()) factors += ", ";
      factors += std::to_string(q) + "^" + std::to_string(a) + " = " + std::to_string(pa) + " = " +
                 std::to_string(pa % p) + " mod " + std::to_string(p);
    }
    v.display = "n_" + std::to_string(p) + "(G) = " + std::to_string(n) +
                (factors.empty() ? " has no prime-power factors" : ": " + factors);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<BoundVerdict> render_sylow_p_nilpotency(const GroupInvariants& g) {
  std::vector<BoundVerdict> out;
  for (std::uint64_t p : g.primes) {
    BoundVerdict v;
    v.claim_id = "zhang_pnilp";
    v.group = g.name;
    v.inputs = {{"p", p}};
    bool coprime = true;
    std::string divisible;
    for (const auto& [q, n] : g.tau.sylow_numbers) {
      if (n % p == 0) {
        coprime = false;
        if (divisible.empty()) divisible = "n_" + std::to_string(q) + " = " + std::to_string(n);
      }
    }
    const bool nilp = g.p_nilpotent.at(p);
    if (p == 3) {
      v.relation = "=>";
      v.lhs = nilp;
      v.rhs = coprime;
      v.display = "3-nilpotent: " + yes(nilp) + " => 3 prime to every Sylow number: " + yes(coprime);
    } else {
      v.relation = "==";
      v.lhs = coprime;
      v.rhs = nilp;
      v.display = std::to_string(p) + " prime to every Sylow number: " + yes(coprime) + " <=> " + std::to_string(p) +
                  "-nilpotent: " + yes(nilp);
    }
    if (!divisible.empty()) v.witness.push_back(divisible + " is divisible by " + std::to_string(p));
    v.holds = v.relation_holds();
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Group-level entry points.

namespace {

struct PairContext {
  Subgroup a;
  Subgroup b;
  GroupInvariants g;
  GroupInvariants ai;
  GroupInvariants bi;
  bool mp;
};

PairContext pair_context(const Group& g, const Subgroup& a_in, const Subgroup& b_in) {
  Subgroup a = inside(g, a_in);
  Subgroup b = inside(g, b_in);
  bool mp = is_mutually_permutable(g, a, b).holds;
  GroupInvariants gi = ambient_invariants(g);
  return {a, b, gi, factor_invariants(a.group(), gi.primes), factor_invariants(b.group(), gi.primes), mp};
}

}  // namespace

BoundVerdict check_p_length_bound(const Group& g, const Subgroup& a, const Subgroup& b, std::uint64_t p) {
  PairContext c = pair_context(g, a, b);
  return render_p_length_bound(c.g, {&c.ai, describe_subgroup(c.a)}, {&c.bi, describe_subgroup(c.b)}, c.mp, p, false);
}

BoundVerdict check_p_length_conjecture(const Group& g, const Subgroup& a, const Subgroup& b, std::uint64_t p) {
  PairContext c = pair_context(g, a, b);
  return render_p_length_bound(c.g, {&c.ai, describe_subgroup(c.a)}, {&c.bi, describe_subgroup(c.b)}, c.mp, p, true);
}

BoundVerdict check_fitting_length_bound(const Group& g, const Subgroup& a, const Subgroup& b) {
  PairContext c = pair_context(g, a, b);
  return render_fitting_length_bound(c.g, {&c.ai, describe_subgroup(c.a)}, {&c.bi, describe_subgroup(c.b)}, c.mp);
}

BoundVerdict check_frattini_derived_length_bound(const Group& g, const Subgroup& a, const Subgroup& b) {
  PairContext c = pair_context(g, a, b);
  return render_frattini_derived_length_bound(c.g, {&c.ai, describe_subgroup(c.a)}, {&c.bi, describe_subgroup(c.b)},
                                              c.mp);
}

BoundVerdict check_group_p_length_bound(const Group& g, std::uint64_t p) {
  GroupInvariants inv;
  std::vector<std::uint64_t> primes = g.prime_divisors();
  if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  fill_common(inv, g, primes);
  if (inv.p_solvable[p]) inv.p_length[p] = p_length(g, p);
  return render_group_p_length_bound(inv, p);
}

std::vector<BoundVerdict> check_hall_sylow_numbers(const Group& g) {
  GroupInvariants inv;
  fill_common(inv, g, g.prime_divisors());
  return render_hall_sylow_numbers(inv);
}

std::vector<BoundVerdict> check_sylow_p_nilpotency(const Group& g) {
  GroupInvariants inv;
  fill_common(inv, g, g.prime_divisors());
  return render_sylow_p_nilpotency(inv);
}

// ---------------------------------------------------------------------------
// Scans.

namespace {

struct ClaimSet {
  bool has(const char* id) const { return ids.contains(id); }
  std::set<std::string> ids;
  bool pairs = false;
};

ClaimSet expand_claims(const std::vector<std::string>& claims) {
  ClaimSet out;
  for (const std::string& c : claims) {
    if (c == "bea") {
      for (const char* b : {"bea_2_1", "bea_2_2", "bea_2_3", "bea_2_4", "bea_2_5"}) out.ids.insert(b);
    } else if (c == "all") {
      for (const char* id : kClaimIds) out.ids.insert(id);
    } else if (is_claim_id(c)) {
      out.ids.insert(c);
    } else {
      throw Error(ErrorKind::Unsupported, "unknown claim id '" + c + "'");
    }
  }
  for (const char* id : {"thm_1_1", "thm_1_2a", "thm_1_2b", "conj_1_4", "bea_2_1", "bea_2_2", "bea_2_3", "bea_2_4",
                         "bea_2_5"}) {
    if (out.has(id)) out.pairs = true;
  }
  return out;
}

// Merges instances of one claim on one group by outcome.
struct Grouper {
  struct Entry {
    std::uint32_t a;
    std::uint32_t b;
    std::uint64_t count;
  };
  std::map<std::vector<std::int64_t>, Entry> entries;

  void add(std::vector<std::int64_t> key, std::uint32_t a, std::uint32_t b) {
    auto [it, fresh] = entries.try_emplace(std::move(key), Entry{a, b, 0});
    ++it->second.count;
  }
};

std::vector<std::int64_t> eval_key(std::int64_t claim, std::int64_t p, std::int64_t oa, std::int64_t ob,
                                   const Evaluation& e) {
  return {claim, p, oa, ob, e.lhs, e.rhs, e.failed_preconditions, e.holds ? (*e.holds ? 1 : 0) : -1};
}

BoundVerdict error_verdict(const Group& g, const std::string& claim, const std::string& what) {
  BoundVerdict v;
  v.claim_id = claim;
  v.group = g.name();
  v.error = what;
  v.display = "error: " + what;
  return v;
}

std::vector<BoundVerdict> scan_group(const Group& g, const ClaimSet& claims, const ScanOptions& options,
                                     std::uint64_t& factorization_count) {
  std::vector<BoundVerdict> out;
  GroupInvariants gi;
  try {
    gi = ambient_invariants(g);
  } catch (const Error& e) {
    out.push_back(error_verdict(g, "*", e.what()));
    return out;
  }

  if (claims.has("lemma_2_7")) {
    for (std::uint64_t p : gi.primes) out.push_back(render_group_p_length_bound(gi, p));
  }
  if (claims.has("hall")) {
    for (BoundVerdict& v : render_hall_sylow_numbers(gi)) out.push_back(std::move(v));
  }
  if (claims.has("zhang_pnilp")) {
    for (BoundVerdict& v : render_sylow_p_nilpotency(gi)) out.push_back(std::move(v));
  }

  if (claims.has("lemma_2_6")) {
    try {
      auto lattice = all_subgroups(g);
      std::map<std::vector<std::int64_t>, BoundVerdict> merged;
      for (std::uint64_t p : gi.primes) {
        Subgroup a = o_p(g, p);
        if (a.is_trivial()) continue;
        const std::size_t ai = *lattice->find(a);
        for (std::size_t i = 0; i < lattice->size(); ++i) {
          if (lattice->order(i) * a.order() != g.order() || lattice->meet(ai, i) != lattice->trivial_index()) continue;
          const Subgroup& h = lattice->subgroup(i);
          for (std::uint64_t q : prime_divisors(h.order())) {
            if (q == p) continue;
            BoundVerdict v = check_split_extension_index(g, a, h, q);
            v.inputs["H_index"] = i;
            std::vector<std::int64_t> key{static_cast<std::int64_t>(p), static_cast<std::int64_t>(q), v.lhs, v.rhs,
                                          v.holds ? (*v.holds ? 1 : 0) : -1};
            auto [it, fresh] = merged.try_emplace(key, v);
            if (!fresh) ++it->second.instances;
          }
        }
      }
      for (auto& [key, v] : merged) out.push_back(std::move(v));
    } catch (const Error& e) {
      out.push_back(error_verdict(g, "lemma_2_6", e.what()));
    }
  }

  if (!claims.pairs) return out;

  std::shared_ptr<const SubgroupLattice> lattice;
  try {
    lattice = all_subgroups(g);
  } catch (const Error& e) {
    out.push_back(error_verdict(g, "*", e.what()));
    return out;
  }
  ProductAnalyzer an(lattice);
  const SubgroupLattice& l = *lattice;
  auto facts = an.factorizations(true);
  factorization_count += facts.size();

  std::vector<std::optional<GroupInvariants>> cache(l.size());
  auto factor = [&](std::uint32_t i) -> const GroupInvariants& {
    if (!cache[i]) cache[i] = factor_invariants(l.subgroup(i).group(), gi.primes);
    return *cache[i];
  };

  const bool lemmas = claims.has("bea_2_1") || claims.has("bea_2_2") || claims.has("bea_2_3") ||
                   claims.has("bea_2_4") || claims.has("bea_2_5");
  Grouper grouper;
  for (const auto& f : facts) {
    const GroupInvariants& a = factor(f.a);
    const GroupInvariants& b = factor(f.b);
    const std::int64_t oa = static_cast<std::int64_t>(a.order);
    const std::int64_t ob = static_cast<std::int64_t>(b.order);
    for (std::uint64_t p : gi.primes) {
      const auto sp = static_cast<std::int64_t>(p);
      if (claims.has("thm_1_1")) {
        grouper.add(eval_key(0, sp, oa, ob, evaluate_p_length_bound(gi, a, b, true, p, false)), f.a, f.b);
      }
      if (claims.has("conj_1_4")) {
        grouper.add(eval_key(7, sp, oa, ob, evaluate_p_length_bound(gi, a, b, true, p, true)), f.a, f.b);
      }
    }
    if (claims.has("thm_1_2a")) grouper.add(eval_key(1, 0, oa, ob, evaluate_fitting_length_bound(gi, a, b, true)), f.a, f.b);
    if (claims.has("thm_1_2b")) {
      grouper.add(eval_key(2, 0, oa, ob, evaluate_frattini_derived_length_bound(gi, a, b, true)), f.a, f.b);
    }
    if (lemmas) {
      LemmaSuiteOutcome o = an.lemma_suite(f.a, f.b, options.lemma_suite);
      std::int64_t solv_ok = 0;
      for (const auto& row : o.p_solvable) solv_ok += !(row.a && row.b) || row.g;
      const auto np = static_cast<std::int64_t>(o.p_solvable.size());
      const auto mn = static_cast<std::int64_t>(o.minimal_normals);
      if (claims.has("bea_2_1")) grouper.add({8, 0, oa, ob, solv_ok, np}, f.a, f.b);
      if (claims.has("bea_2_2")) grouper.add({9, 0, oa, ob, static_cast<std::int64_t>(o.quotient_passes), mn}, f.a, f.b);
      if (claims.has("bea_2_3")) grouper.add({10, 0, oa, ob, static_cast<std::int64_t>(o.core_product_order)}, f.a, f.b);
      if (claims.has("bea_2_4")) grouper.add({11, 0, oa, ob, static_cast<std::int64_t>(o.membership_passes), mn}, f.a, f.b);
      if (claims.has("bea_2_5")) {
        grouper.add({12, 0, oa, ob, static_cast<std::int64_t>(o.intersection_passes),
                     static_cast<std::int64_t>(o.intersection_tested)},
                    f.a, f.b);
      }
    }
  }

  for (const auto& [key, entry] : grouper.entries) {
    const auto claim = key[0];
    const auto p = static_cast<std::uint64_t>(key[1]);
    FactorRef a{&factor(entry.a), nlohmann::json(nullptr)};
    FactorRef b{&factor(entry.b), nlohmann::json(nullptr)};
    a.description = describe_subgroup(l.subgroup(entry.a));
    a.description["index"] = entry.a;
    b.description = describe_subgroup(l.subgroup(entry.b));
    b.description["index"] = entry.b;
    BoundVerdict v;
    switch (claim) {
      case 0: v = render_p_length_bound(gi, a, b, true, p, false); break;
      case 7: v = render_p_length_bound(gi, a, b, true, p, true); break;
      case 1: v = render_fitting_length_bound(gi, a, b, true); break;
      case 2: v = render_frattini_derived_length_bound(gi, a, b, true); break;
      default: {
        LemmaSuiteOutcome o = an.lemma_suite(entry.a, entry.b, options.lemma_suite);
        v = render_lemma_suite(an, entry.a, entry.b, true, o).at(static_cast<std::size_t>(claim - 8));
        break;
      }
    }
    v.instances = entry.count;
    out.push_back(std::move(v));
  }
  return out;
}

std::int64_t sort_prime(const BoundVerdict& v) {
  return v.inputs.contains("p") ? v.inputs["p"].get<std::int64_t>() : 0;
}

std::int64_t sort_index(const BoundVerdict& v, const char* key) {
  if (v.inputs.contains(key) && v.inputs[key].contains("index")) return v.inputs[key]["index"].get<std::int64_t>();
  return -1;
}

}  // namespace

ScanResult scan_corpus(std::span<const Group> corpus, const ScanOptions& options) {
  ClaimSet claims = expand_claims(options.claims);
  std::vector<std::vector<BoundVerdict>> per_group(corpus.size());
  std::vector<std::uint64_t> fact_counts(corpus.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      per_group[i] = scan_group(corpus[i], claims, options, fact_counts[i]);
      std::stable_sort(per_group[i].begin(), per_group[i].end(), [](const BoundVerdict& x, const BoundVerdict& y) {
        auto kx = std::make_tuple(claim_rank(x.claim_id), sort_prime(x), sort_index(x, "A"), sort_index(x, "B"));
        auto ky = std::make_tuple(claim_rank(y.claim_id), sort_prime(y), sort_index(y, "A"), sort_index(y, "B"));
        return kx < ky;
      });
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  ScanResult result;
  result.groups = corpus.size();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    result.factorizations += fact_counts[i];
    for (BoundVerdict& v : per_group[i]) {
      static const std::set<std::string> bounds{"thm_1_1", "thm_1_2a", "thm_1_2b", "lemma_2_7", "conj_1_4"};
      if (bounds.contains(v.claim_id) && v.is_equality()) result.equality_instances.push_back(v);
      if (v.claim_id == "conj_1_4" && v.holds == true && v.rhs - v.lhs == 1) result.near_tight_instances.push_back(v);
      result.verdicts.push_back(std::move(v));
    }
  }
  return result;
}

ScanResult scan_p_length_conjecture(std::span<const Group> corpus, unsigned workers) {
  ScanOptions options;
  options.claims = {"conj_1_4"};
  options.workers = workers;
  return scan_corpus(corpus, options);
}

}  // namespace sylowlens
