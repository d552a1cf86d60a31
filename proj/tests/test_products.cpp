#include <doctest.h>

#include "oracles.hpp"
#include "sylowlens/config.hpp"
#include "sylowlens/error.hpp"
#include "sylowlens/lattice.hpp"
#include "sylowlens/named.hpp"
#include "sylowlens/products.hpp"
#include "sylowlens/quotient.hpp"
#include "sylowlens/series.hpp"
#include "sylowlens/sylow.hpp"

using namespace sylowlens;

namespace {

Perm cyc(std::size_t n, const char* s) { return Perm::from_cycles(n, s); }

std::set<Perm> members(const Subgroup& h) {
  return {h.group().elements().begin(), h.group().elements().end()};
}

std::set<Perm> set_product(const std::set<Perm>& x, const std::set<Perm>& y) {
  std::set<Perm> out;
  for (const Perm& a : x) {
    for (const Perm& b : y) out.insert(a * b);
  }
  return out;
}

// All subgroups of H as element sets, by subset search on H's own table.
std::vector<std::set<Perm>> subgroups_of(const Subgroup& h) {
  oracle::Cayley c = oracle::cayley(members(h));
  std::vector<std::set<Perm>> out;
  for (const auto& sub : oracle::subgroups_by_subset_search(c)) {
    std::set<Perm> s;
    for (std::uint32_t i : sub) s.insert(c.elements[i]);
    out.push_back(std::move(s));
  }
  return out;
}

bool brute_mutually_permutable(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::set<Perm> sa = members(a);
  std::set<Perm> sb = members(b);
  if (set_product(sa, sb).size() != g.order()) return false;
  for (const auto& u : subgroups_of(b)) {
    if (set_product(sa, u) != set_product(u, sa)) return false;
  }
  for (const auto& v : subgroups_of(a)) {
    if (set_product(sb, v) != set_product(v, sb)) return false;
  }
  return true;
}

struct S4Fixture {
  Group s4 = symmetric(4);
  Subgroup a4 = Subgroup(s4, {cyc(4, "(0 1 2)"), cyc(4, "(1 2 3)")}, "A4");
  Subgroup d8 = Subgroup(s4, {cyc(4, "(0 1 2 3)"), cyc(4, "(0 2)")}, "D8");
  Subgroup v4 = Subgroup(s4, {cyc(4, "(0 1)(2 3)"), cyc(4, "(0 2)(1 3)")}, "V4");
  Subgroup s3 = Subgroup(s4, {cyc(4, "(0 1)"), cyc(4, "(0 1 2)")}, "S3");
};

bool all_hold(const std::vector<BoundVerdict>& vs) {
  return std::all_of(vs.begin(), vs.end(), [](const BoundVerdict& v) { return v.holds == true; });
}

}  // namespace

TEST_CASE_FIXTURE(S4Fixture, "A4 D8 is a mutually permutable factorization of S4") {
  MutPermWitness w = is_mutually_permutable(s4, a4, d8);
  CHECK(w.holds);
  CHECK(w.product_covers);
  CHECK_FALSE(w.trivial);
  CHECK_FALSE(w.counterexample.has_value());
  CHECK(w.pairs_checked > 0);
  CHECK(brute_mutually_permutable(s4, a4, d8));
  CHECK(is_mutually_permutable(s4, d8, a4).holds);
}

TEST_CASE("C3 C2 is a mutually permutable factorization of S3") {
  Group s3 = symmetric(3);
  Subgroup c3(s3, {cyc(3, "(0 1 2)")});
  Subgroup c2(s3, {cyc(3, "(0 1)")});
  CHECK(is_mutually_permutable(s3, c3, c2).holds);
  CHECK(brute_mutually_permutable(s3, c3, c2));
}

TEST_CASE("A4 C5 inside A5 is not mutually permutable") {
  Group a5 = alternating(5);
  Subgroup a4(a5, {cyc(5, "(0 1 2)"), cyc(5, "(1 2 3)")});
  Subgroup c5(a5, {cyc(5, "(0 1 2 3 4)")});
  MutPermWitness w = is_mutually_permutable(a5, a4, c5);
  CHECK(w.product_covers);
  CHECK_FALSE(w.holds);
  REQUIRE(w.counterexample.has_value());
  // The failing subgroup lies in A4 and does not permute with C5.
  CHECK(w.counterexample->side == FactorSide::B);
  CHECK(w.counterexample->u.is_contained_in(a4));
  CHECK_FALSE(permutes(c5, w.counterexample->u));
  CHECK_FALSE(brute_mutually_permutable(a5, a4, c5));
}

TEST_CASE("non-covering pairs are rejected without a counterexample") {
  Group s4 = symmetric(4);
  Subgroup c3(s4, {cyc(4, "(0 1 2)")});
  Subgroup c2(s4, {cyc(4, "(0 1)")});
  MutPermWitness w = is_mutually_permutable(s4, c3, c2);
  CHECK_FALSE(w.product_covers);
  CHECK_FALSE(w.holds);
  CHECK_FALSE(w.counterexample.has_value());
}

TEST_CASE("lattice-based and factor-lattice-based checks agree") {
  Group g = symmetric(4);
  for (const MutPermWitness& w : find_factorizations(g, false)) {
    if (w.a.order() > 12 || w.b.order() > 12) continue;
    ScopedLatticeCap cap(12);  // forces the path through the factor lattices
    MutPermWitness generic = is_mutually_permutable(g, w.a, w.b);
    CHECK(generic.holds == w.holds);
    CHECK(generic.product_covers);
  }
}

TEST_CASE("mutual permutability agrees with set products on whole lattices") {
  for (const Group& g : {symmetric(3), symmetric(4), dihedral(12), dicyclic(12), direct_product(symmetric(3), cyclic(3))}) {
    for (const MutPermWitness& w : find_factorizations(g, false)) {
      CHECK_MESSAGE(w.holds == brute_mutually_permutable(g, w.a, w.b), g.name());
      CHECK(set_product(members(w.a), members(w.b)).size() == g.order());
    }
  }
}

TEST_CASE("find_factorizations") {
  Group s4 = symmetric(4);
  auto all = find_factorizations(s4, false);
  auto mp = find_factorizations(s4, true);
  CHECK(mp.size() <= all.size());
  bool found = false;
  bool whole_pair = false;
  for (const MutPermWitness& w : mp) {
    if ((w.a.order() == 12 && w.b.order() == 8) || (w.a.order() == 8 && w.b.order() == 12)) found = true;
    if (w.a.is_whole() && w.b.is_whole()) whole_pair = true;
    CHECK(w.holds);
    CHECK(w.trivial == (w.a.is_whole() || w.b.is_whole()));
  }
  CHECK(found);
  CHECK(whole_pair);

  auto cp = find_factorizations(cyclic(7), false);
  REQUIRE(cp.size() == 2);
  for (const MutPermWitness& w : cp) CHECK(w.trivial);

  bool s3_pair = false;
  for (const MutPermWitness& w : find_factorizations(symmetric(3), true)) {
    if (w.a.order() * w.b.order() == 6 && !w.trivial) s3_pair = true;
  }
  CHECK(s3_pair);
}

TEST_CASE("witness symmetry") {
  for (const Group& g : {symmetric(4), dihedral(8), affine(5, 4)}) {
    for (const MutPermWitness& w : find_factorizations(g, false)) {
      CHECK(is_mutually_permutable(g, w.b, w.a).holds == w.holds);
    }
  }
}

TEST_CASE("quotient check via correspondence matches explicit quotients") {
  for (const Group& g : {symmetric(4), direct_product(symmetric(3), symmetric(3)), dihedral(12), affine(5, 4)}) {
    ProductAnalyzer an(g);
    const SubgroupLattice& l = an.lattice();
    for (const auto& f : an.factorizations(false)) {
      for (std::size_t n : l.normal_indices()) {
        QuotientImage q = quotient(g, l.subgroup(n));
        bool explicit_check =
            is_mutually_permutable(q.image(), q.project(l.subgroup(f.a)), q.project(l.subgroup(f.b))).holds;
        CHECK(an.quotient_mutually_permutable(an.join(f.a, n), an.join(f.b, n), n) == explicit_check);
        if (f.mutually_permutable) CHECK(explicit_check);
      }
    }
  }
}

TEST_CASE_FIXTURE(S4Fixture, "imported lemma suite on S4 = A4 D8") {
  auto vs = product_lemma_suite(s4, a4, d8);
  REQUIRE(vs.size() == 5);
  CHECK(all_hold(vs));
  CHECK(vs[0].claim_id == "bea_2_1");
  CHECK(vs[4].claim_id == "bea_2_5");
  CHECK(vs[1].rhs == 1);  // V4 is the only minimal normal subgroup
}

TEST_CASE("imported lemma suite on S3 = C3 C2") {
  Group s3 = symmetric(3);
  Subgroup c3(s3, {cyc(3, "(0 1 2)")});
  Subgroup c2(s3, {cyc(3, "(0 1)")});
  ProductAnalyzer an(s3);
  std::size_t a = *an.lattice().find(c3);
  std::size_t b = *an.lattice().find(c2);
  CHECK(an.lattice().order(an.core(a)) == 3);
  CHECK(an.core(b) == an.lattice().trivial_index());
  auto vs = product_lemma_suite(an, a, b);
  CHECK(all_hold(vs));
  CHECK(vs[2].display.find("|A_G B_G| = 3") != std::string::npos);
}

TEST_CASE("imported lemma suite on the trivial group") {
  Group one = Group::trivial(1);
  auto vs = product_lemma_suite(one, Subgroup::whole(one), Subgroup::whole(one));
  CHECK(all_hold(vs));
}

TEST_CASE("imported lemma suite reports unmet preconditions") {
  Group a5 = alternating(5);
  Subgroup a4(a5, {cyc(5, "(0 1 2)"), cyc(5, "(1 2 3)")});
  Subgroup c5(a5, {cyc(5, "(0 1 2 3 4)")});
  for (const BoundVerdict& v : product_lemma_suite(a5, a4, c5)) {
    CHECK_FALSE(v.preconditions_met());
    CHECK_FALSE(v.holds.has_value());
  }
}

TEST_CASE("imported lemmas hold on every mutually permutable factorization") {
  for (const Group& g : {symmetric(4), dihedral(12), dicyclic(12), direct_product(symmetric(3), symmetric(3)),
                         affine(7, 6), direct_product(alternating(4), cyclic(2)), symmetric(5)}) {
    ProductAnalyzer an(g);
    for (const auto& f : an.factorizations(true)) {
      auto vs = product_lemma_suite(an, f.a, f.b, {0});
      CHECK_MESSAGE(all_hold(vs), g.name() << " " << f.a << " " << f.b);
    }
  }
}

TEST_CASE("intersection sample") {
  Group g = elementary_abelian(2, 5);
  ProductAnalyzer an(g);
  const std::size_t m = an.lattice().size();
  REQUIRE(m == 374);
  CHECK(an.intersection_sample(0).size() == m);
  CHECK(an.intersection_sample(1000).size() == m);
  auto sample = an.intersection_sample(200);
  CHECK(sample.size() == 200);
  CHECK(sample.front() == an.lattice().trivial_index());
  CHECK(sample.back() == an.lattice().whole_index());

  Group s4 = symmetric(4);
  ProductAnalyzer small(s4);
  auto some = small.intersection_sample(10);
  for (std::size_t n : small.lattice().normal_indices()) {
    CHECK(std::find(some.begin(), some.end(), n) != some.end());
  }
}

TEST_CASE("split extension index identity") {
  S4Fixture f;
  BoundVerdict v = check_split_extension_index(f.s4, f.v4, f.s3, 3);
  CHECK(v.preconditions_met());
  CHECK(v.holds == true);
  CHECK(v.lhs == 1);
  CHECK(v.rhs == 1);

  Group s3 = symmetric(3);
  BoundVerdict w = check_split_extension_index(s3, Subgroup(s3, {cyc(3, "(0 1 2)")}), Subgroup(s3, {cyc(3, "(0 1)")}), 2);
  CHECK(w.holds == true);
  CHECK(w.lhs == 1);

  Group dih = generalized_dihedral(3, 2);
  Subgroup a = sylow_subgroup(dih, 3);
  Subgroup h = sylow_subgroup(dih, 2);
  BoundVerdict x = check_split_extension_index(dih, a, h, 2);
  CHECK(x.holds == true);
  CHECK(x.lhs == 1);
  CHECK(x.rhs == 1);

  BoundVerdict bad = check_split_extension_index(s3, Subgroup(s3, {cyc(3, "(0 1 2)")}), Subgroup(s3, {cyc(3, "(0 1)")}), 3);
  CHECK_FALSE(bad.preconditions_met());
  CHECK_FALSE(bad.holds.has_value());
  BoundVerdict not_normal = check_split_extension_index(f.s4, Subgroup(f.s4, {cyc(4, "(0 1)")}), f.a4, 3);
  CHECK_FALSE(not_normal.preconditions_met());
}

TEST_CASE("split extension index identity against brute force on constructed complements") {
  int instances = 0;
  for (const Group& g : {symmetric(4), alternating(4), affine(5, 4), affine(7, 3), generalized_dihedral(3, 2),
                         dihedral(10), direct_product(symmetric(3), cyclic(3)), affine(7, 6)}) {
    auto lattice = all_subgroups(g);
    std::set<Perm> all(g.elements().begin(), g.elements().end());
    for (std::uint64_t p : g.prime_divisors()) {
      Subgroup a = o_p(g, p);
      if (a.is_trivial()) continue;
      for (std::size_t i = 0; i < lattice->size(); ++i) {
        const Subgroup& h = lattice->subgroup(i);
        if (h.order() * a.order() != g.order() || !intersection(a, h).is_trivial()) continue;
        for (std::uint64_t q : prime_divisors(h.order())) {
          if (q == p) continue;
          BoundVerdict v = check_split_extension_index(g, a, h, q);
          REQUIRE(v.preconditions_met());
          CHECK(v.holds == true);
          std::set<Perm> hq = members(sylow_subgroup(h.group(), q));
          std::set<Perm> sh = members(h);
          std::size_t nh = oracle::normalizer(sh, hq).size();
          std::set<Perm> an = set_product(members(a), oracle::normalizer(all, hq));
          CHECK(v.lhs == static_cast<std::int64_t>(sh.size() / nh));
          CHECK(v.rhs == static_cast<std::int64_t>(all.size() / an.size()));
          ++instances;
        }
      }
    }
  }
  CHECK(instances >= 5);
}
