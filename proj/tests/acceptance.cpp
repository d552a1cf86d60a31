// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sylowlens/corpus.hpp"
#include "sylowlens/error.hpp"
#include "sylowlens/lattice.hpp"
#include "sylowlens/named.hpp"
#include "sylowlens/products.hpp"
#include "sylowlens/series.hpp"
#include "sylowlens/sylow.hpp"
#include "sylowlens/theorems.hpp"

using namespace sylowlens;

namespace {

constexpr std::uint64_t kMaxOrder = 120;

Perm cyc(std::size_t n, const char* s) { return Perm::from_cycles(n, s); }

// Collects failed expectations for one criterion.
struct Expect {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

const std::vector<Group>& corpus() {
  static const std::vector<Group> c = build_corpus(kMaxOrder);
  return c;
}

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;  // 0 = no runtime limit
  std::function<std::string(Expect&)> body;  // returns a short note
};

Subgroup find_complement(const Group& g, const Subgroup& a) {
  auto lattice = all_subgroups(g);
  const std::size_t ai = *lattice->find(a);
  for (std::size_t i = 0; i < lattice->size(); ++i) {
    if (lattice->order(i) * a.order() == g.order() && lattice->meet(ai, i) == lattice->trivial_index()) {
      return lattice->subgroup(i);
    }
  }
  throw Error(ErrorKind::Precondition, "no complement in " + g.name());
}

std::string scan_note(const ScanResult& r) {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::uint64_t errors = 0;
  for (const BoundVerdict& v : r.verdicts) {
    if (v.error) errors += v.instances;
    if (v.holds) checked += v.instances;
    if (v.holds == false) failed += v.instances;
  }
  std::ostringstream s;
  s << r.groups << " groups, " << r.factorizations << " factorizations, " << checked << " checked, " << failed
    << " failed, " << errors << " errors";
  return s.str();
}

void expect_clean(Expect& expect, const ScanResult& r) {
  for (const BoundVerdict& v : r.verdicts) {
    expect(!v.error, v.group + " " + v.claim_id + ": " + v.error.value_or(""));
    expect(v.holds != false, v.group + " " + v.claim_id + " failed: " + v.display);
  }
}

std::string criterion_s4(Expect& expect) {
  Group s4 = symmetric(4);
  Subgroup a4(s4, {cyc(4, "(0 1 2)"), cyc(4, "(1 2 3)")}, "A4");
  Subgroup d8(s4, {cyc(4, "(0 1 2 3)"), cyc(4, "(0 2)")}, "D8");
  bool found = false;
  for (const MutPermWitness& w : find_factorizations(s4, true)) {
    if ((w.a == a4 && w.b == d8) || (w.a == d8 && w.b == a4)) found = true;
  }
  expect(found, "find_factorizations misses {A4, D8}");
  expect(is_mutually_permutable(s4, a4, d8).holds, "A4, D8 not mutually permutable");
  expect(tau_p_group(a4.group(), 2) == 2, "tau_2(A4) != 2");
  expect(tau_p_group(d8.group(), 2) == 0, "tau_2(D8) != 0");
  expect(p_length(s4, 2) == 2, "l_2(S4) != 2");
  BoundVerdict v = check_p_length_bound(s4, a4, d8, 2);
  expect(v.preconditions_met(), "preconditions not met");
  bool via_b = false;
  for (const Condition& c : v.preconditions) {
    if (c.name == "condition (a) or (b)") via_b = c.detail.find("B p-nilpotent: yes") != std::string::npos;
  }
  expect(via_b, "condition (b) not recorded via D8");
  expect(v.lhs == 2 && v.rhs == 2 && v.is_equality(), "not the equality 2(l_2 - 1) = 2 = tau_2");
  return v.display;
}

std::string criterion_s3(Expect& expect) {
  Group s3 = symmetric(3);
  Subgroup c3(s3, {cyc(3, "(0 1 2)")}, "C3");
  Subgroup c2(s3, {cyc(3, "(0 1)")}, "C2");
  expect(fitting_length(s3) == 2u, "F_l(S3) != 2");
  expect(derived_length(s3) == 2u, "dl(S3) != 2");
  BoundVerdict b = check_frattini_derived_length_bound(s3, c3, c2);
  expect(b.preconditions_met() && b.is_equality() && b.lhs == 4, "dl(G/Phi) bound is not the equality 2^2 = 4");
  expect(derived_bound_decimal(0) == 2.0L, "2 + 6g(0) != 2");
  BoundVerdict a = check_fitting_length_bound(s3, c3, c2);
  expect(a.preconditions_met() && a.holds == true, "F_l bound does not hold");
  const long double bound = fitting_bound_decimal(0);
  expect(std::fabs(static_cast<double>(bound) - (4.0 + 2.0 * std::log(0.5) / std::log(3.0))) < 1e-12,
         "4 + 2 log_3(1/2) mismatch");
  expect(a.lhs == 36 && a.rhs == 81, "exact form is not 36 <= 81");
  return b.display + "; " + a.display;
}

std::string criterion_regression(Expect& expect) {
  ScanOptions opts;
  opts.claims = {"thm_1_1", "thm_1_2a", "thm_1_2b", "lemma_2_7", "hall", "zhang_pnilp"};
  ScanResult r = scan_corpus(corpus(), opts);
  expect_clean(expect, r);
  return scan_note(r);
}

std::string criterion_split_extensions(Expect& expect) {
  struct Case {
    Group g;
    Subgroup a;
    std::uint64_t q;
    std::optional<Subgroup> h;  // found in the lattice when absent
  };
  std::vector<Case> cases;
  Group s4 = symmetric(4);
  cases.push_back({s4, Subgroup(s4, {cyc(4, "(0 1)(2 3)"), cyc(4, "(0 2)(1 3)")}), 3});
  Group d18 = generalized_dihedral(3, 2);
  cases.push_back({d18, o_p(d18, 3), 2});
  Group a4 = alternating(4);
  cases.push_back({a4, o_p(a4, 2), 3});
  Group s3 = symmetric(3);
  cases.push_back({s3, o_p(s3, 3), 2});
  for (std::uint64_t d : {2, 4}) {
    Group f = affine(5, d);
    cases.push_back({f, o_p(f, 5), 2});
  }
  Group f42 = affine(7, 6);
  cases.push_back({f42, o_p(f42, 7), 2});
  cases.push_back({f42, o_p(f42, 7), 3});
  Group s3c2 = direct_product(symmetric(3), cyclic(2));
  cases.push_back({s3c2, o_p(s3c2, 3), 2});
  // Complements with a non-normal Sylow q-subgroup.
  Group c5s3 = direct_product(cyclic(5), symmetric(3));
  cases.push_back({c5s3, o_p(c5s3, 5), 2});
  Group s4c3 = direct_product(symmetric(4), cyclic(3));
  cases.push_back({s4c3, o_p(s4c3, 3), 2});
  Group s3s3 = direct_product(symmetric(3), symmetric(3));
  cases.push_back({s3s3, Subgroup(s3s3, {cyc(6, "(0 1 2)")}), 2});
  Group c5a5 = direct_product(cyclic(5), alternating(5));
  std::vector<Perm> a5_block(c5a5.generators().begin() + 1, c5a5.generators().end());
  for (std::uint64_t q : {2, 3}) cases.push_back({c5a5, o_p(c5a5, 5), q, Subgroup(c5a5, a5_block)});
  std::ostringstream note;
  int nontrivial = 0;
  for (const Case& c : cases) {
    Subgroup h = c.h ? *c.h : find_complement(c.g, c.a);
    BoundVerdict v = check_split_extension_index(c.g, c.a, h, c.q);
    expect(v.preconditions_met(), c.g.name() + ": preconditions not met");
    expect(v.holds == true && v.lhs == v.rhs, c.g.name() + ": " + v.display);
    nontrivial += v.lhs > 1;
    note << c.g.name() << " q=" << c.q << ": " << v.lhs << "=" << v.rhs << "; ";
  }
  expect(cases.size() >= 5, "fewer than 5 split extensions");
  expect(nontrivial >= 3, "fewer than 3 extensions with index above 1");
  return note.str();
}

std::string criterion_bea(Expect& expect) {
  ScanOptions opts;
  opts.claims = {"bea"};
  ScanResult r = scan_corpus(corpus(), opts);
  expect_clean(expect, r);
  std::map<std::string, std::uint64_t> checked;
  for (const BoundVerdict& v : r.verdicts) {
    if (v.holds) checked[v.claim_id] += v.instances;
  }
  for (const char* id : {"bea_2_1", "bea_2_2", "bea_2_3", "bea_2_4", "bea_2_5"}) {
    expect(checked[id] == r.factorizations, std::string(id) + " did not check every factorization");
  }
  return scan_note(r);
}

std::string criterion_oracles(Expect& expect) {
  std::vector<Group> groups = corpus();
  for (Group g : {symmetric(5), symmetric(6), alternating(6), alternating(7), affine(31, 30),
                  direct_product(symmetric(4), symmetric(4))}) {
    groups.push_back(std::move(g));
  }
  std::size_t order_checks = 0;
  std::size_t sylow_checks = 0;
  std::size_t lattice_checks = 0;
  for (const Group& g : groups) {
    if (g.order() > 5000) continue;
    const std::vector<Perm> gens(g.generators().begin(), g.generators().end());
    std::set<Perm> all = oracle::closure(g.degree(), gens);
    expect(all.size() == g.order(), g.name() + ": chain order differs from enumeration");
    ++order_checks;
    if (g.order() <= kMaxOrder) {
      for (std::uint64_t p : g.prime_divisors()) {
        Subgroup s = sylow_subgroup(g, p);
        std::set<Perm> ps(s.group().elements().begin(), s.group().elements().end());
        expect(oracle::count_conjugates(all, ps) == sylow_number(g, p),
               g.name() + ": n_" + std::to_string(p) + " differs from conjugate count");
        ++sylow_checks;
      }
    }
    if (g.order() <= 24) {
      oracle::Cayley c = oracle::cayley(all);
      std::set<std::set<Perm>> expected;
      for (const auto& sub : oracle::subgroups_by_subset_search(c)) {
        std::set<Perm> s;
        for (std::uint32_t pos : sub) s.insert(c.elements[pos]);
        expected.insert(std::move(s));
      }
      auto lattice = all_subgroups(g);
      std::set<std::set<Perm>> got;
      for (std::size_t i = 0; i < lattice->size(); ++i) {
        const auto& el = lattice->subgroup(i).group().elements();
        got.insert(std::set<Perm>(el.begin(), el.end()));
      }
      expect(got == expected && lattice->size() == expected.size(), g.name() + ": lattice differs from subset search");
      ++lattice_checks;
    }
  }
  const std::size_t s4_subgroups = all_subgroups(symmetric(4))->size();
  expect(s4_subgroups == 30, "S4 has " + std::to_string(s4_subgroups) + " subgroups");
  return std::to_string(order_checks) + " orders, " + std::to_string(sylow_checks) + " Sylow numbers, " +
         std::to_string(lattice_checks) + " lattices; S4 has " + std::to_string(s4_subgroups) + " subgroups";
}

std::string criterion_negative(Expect& expect) {
  Group a5 = alternating(5);
  Subgroup a4(a5, {cyc(5, "(0 1 2)"), cyc(5, "(1 2 3)")});
  Subgroup c5(a5, {cyc(5, "(0 1 2 3 4)")});
  MutPermWitness w = is_mutually_permutable(a5, a4, c5);
  expect(!w.holds, "A4 C5 reported mutually permutable");
  expect(w.product_covers, "A4 C5 does not cover A5");
  expect(w.counterexample.has_value(), "no counterexample recorded");
  expect(!is_solvable(a5), "A5 reported solvable");
  expect(!derived_length(a5).has_value(), "dl(A5) defined");
  expect(!is_p_solvable(a5, 2), "A5 reported 2-solvable");
  auto z = check_sylow_p_nilpotency(symmetric(4));
  const BoundVerdict& z2 = z.at(0);
  expect(z2.inputs["p"] == 2 && z2.lhs == 0 && z2.rhs == 0 && z2.holds == true, "S4 p = 2 Sylow-number criterion mismatch");
  expect(!z2.witness.empty() && z2.witness[0].find("n_3 = 4") != std::string::npos, "witness n_3 = 4 missing");
  return z2.display + " (" + (z2.witness.empty() ? "" : z2.witness[0]) + ")";
}

std::string criterion_conjecture(Expect& expect) {
  ScanResult r = scan_p_length_conjecture(corpus());
  expect_clean(expect, r);
  bool s4 = false;
  for (const BoundVerdict& v : r.equality_instances) {
    if (v.group != "S4" || v.inputs["p"] != 2) continue;
    const auto oa = v.inputs["A"]["order"].get<std::uint64_t>();
    const auto ob = v.inputs["B"]["order"].get<std::uint64_t>();
    if ((oa == 12 && ob == 8) || (oa == 8 && ob == 12)) s4 = true;
  }
  expect(s4, "S4 (A4, D8, p = 2) missing from the equality instances");
  std::uint64_t eq = 0;
  std::uint64_t near = 0;
  for (const BoundVerdict& v : r.equality_instances) eq += v.instances;
  for (const BoundVerdict& v : r.near_tight_instances) near += v.instances;
  return scan_note(r) + "; " + std::to_string(eq) + " equality instances (" +
         std::to_string(r.equality_instances.size()) + " entries), " + std::to_string(near) + " with slack 1";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "S4 = A4 D8 p-length equality", 10, criterion_s4},
      {2, "S3 = C3 C2 Fitting and derived length bounds", 5, criterion_s3},
      {3, "regression scan to order 120", 900, criterion_regression},
      {4, "split extension index identity", 0, criterion_split_extensions},
      {5, "lemma suite on every mutually permutable factorization to order 120", 0, criterion_bea},
      {6, "oracle equivalence", 0, criterion_oracles},
      {7, "negative controls", 0, criterion_negative},
      {8, "p-length conjecture scan to order 120", 0, criterion_conjecture},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Expect expect;
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    try {
      note = c.body(expect);
    } catch (const std::exception& e) {
      expect.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      expect.failures.push_back("runtime " + std::to_string(seconds) + "s over budget");
    }
    const bool ok = expect.failures.empty();
    failed += !ok;
    std::printf("%s [%d] %s (%.2fs): %s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), seconds, note.c_str());
    for (std::size_t i = 0; i < expect.failures.size() && i < 20; ++i) {
      std::printf("    %s\n", expect.failures[i].c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
