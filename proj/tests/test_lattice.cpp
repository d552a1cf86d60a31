#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "sylowlens/error.hpp"
#include "sylowlens/lattice.hpp"
#include "sylowlens/named.hpp"

using namespace sylowlens;

namespace {

Perm cyc(std::size_t n, const char* s) { return Perm::from_cycles(n, s); }

std::set<Perm> members(const Subgroup& h) {
  return {h.group().elements().begin(), h.group().elements().end()};
}

struct S4Fixture {
  Group s4 = symmetric(4);
  Subgroup a4 = Subgroup(s4, {cyc(4, "(0 1 2)"), cyc(4, "(1 2 3)")}, "A4");
  Subgroup d8 = Subgroup(s4, {cyc(4, "(0 1 2 3)"), cyc(4, "(0 2)")}, "D8");
  Subgroup v4 = Subgroup(s4, {cyc(4, "(0 1)(2 3)"), cyc(4, "(0 2)(1 3)")}, "V4");
  Subgroup one = Subgroup::trivial(s4);
};

std::multiset<std::uint64_t> orders(const std::vector<Subgroup>& list) {
  std::multiset<std::uint64_t> out;
  for (const Subgroup& h : list) out.insert(h.order());
  return out;
}

}  // namespace

TEST_CASE_FIXTURE(S4Fixture, "intersection") {
  Subgroup meet = intersection(a4, d8);
  CHECK(meet.order() == 4);
  std::set<Perm> expected;
  for (const Perm& x : members(a4)) {
    if (members(d8).contains(x)) expected.insert(x);
  }
  CHECK(members(meet) == expected);
  CHECK(meet == v4);
  CHECK(intersection(d8, d8) == d8);
  CHECK(intersection(d8, one).is_trivial());
  CHECK(std::gcd(a4.order(), d8.order()) % meet.order() == 0);

  Group other = symmetric(4);
  CHECK_THROWS_AS(intersection(a4, Subgroup::whole(alternating(5))), Error);
  CHECK_NOTHROW(intersection(a4, Subgroup::whole(other)));
}

TEST_CASE_FIXTURE(S4Fixture, "join") {
  CHECK(join(a4, d8).order() == 24);
  CHECK(join(d8, one) == d8);
  CHECK(join(d8, d8) == d8);
}

TEST_CASE_FIXTURE(S4Fixture, "permutes") {
  CHECK(permutes(a4, d8));
  CHECK(join(a4, d8).order() * intersection(a4, d8).order() == 12 * 8);
  Subgroup c2(s4, {cyc(4, "(0 1)")});
  CHECK(permutes(c2, v4));
  CHECK(permutes(Subgroup(s4, {cyc(4, "(0 1 2)")}), a4));

  Group a5 = alternating(5);
  Subgroup c5(a5, {cyc(5, "(0 1 2 3 4)")});
  Subgroup c2b(a5, {cyc(5, "(0 1)(2 3)")});
  CHECK(oracle::closure(5, {cyc(5, "(0 1 2 3 4)"), cyc(5, "(0 1)(2 3)")}).size() > 10);
  CHECK_FALSE(permutes(c5, c2b));
  CHECK_FALSE(permutes(c2b, c5));
}

TEST_CASE_FIXTURE(S4Fixture, "normalizer and centralizer against brute force") {
  Subgroup c3(s4, {cyc(4, "(0 1 2)")});
  CHECK(normalizer(s4, c3).order() == 6);
  CHECK(members(normalizer(s4, c3)) == oracle::normalizer(members(Subgroup::whole(s4)), members(c3)));
  CHECK(normalizer(s4, Subgroup::whole(s4)).order() == 24);
  CHECK(normalizer(s4, one).order() == 24);

  CHECK(centralizer(s4, v4) == v4);
  CHECK(members(centralizer(s4, d8)) ==
        oracle::centralizer(members(Subgroup::whole(s4)), members(d8)));
  CHECK(centralizer(s4, one).order() == 24);
  Group c6 = cyclic(6);
  CHECK(centralizer(c6, Subgroup::whole(c6)).order() == 6);
}

TEST_CASE_FIXTURE(S4Fixture, "normal closure") {
  CHECK(normal_closure(s4, Subgroup(s4, {cyc(4, "(0 1)")})).order() == 24);
  CHECK(normal_closure(s4, a4) == a4);
  CHECK(normal_closure(s4, Subgroup(s4, {cyc(4, "(0 1)(2 3)")})) == v4);
}

TEST_CASE_FIXTURE(S4Fixture, "core") {
  CHECK(core(s4, d8) == v4);
  CHECK(core(s4, a4) == a4);
  Subgroup stabilizer(s4, {cyc(4, "(0 1)"), cyc(4, "(0 1 2)")});
  CHECK(stabilizer.order() == 6);
  CHECK(core(s4, stabilizer).is_trivial());
}

TEST_CASE("all_subgroups counts") {
  CHECK(all_subgroups(symmetric(3))->size() == 6);
  CHECK(all_subgroups(cyclic(7))->size() == 2);
  CHECK(all_subgroups(symmetric(4))->size() == 30);
  CHECK(all_subgroups(alternating(5))->size() == 59);
  CHECK(all_subgroups(elementary_abelian(2, 4))->size() == 67);

  auto s3 = all_subgroups(symmetric(3));
  std::multiset<std::uint64_t> got;
  for (std::size_t i = 0; i < s3->size(); ++i) got.insert(s3->order(i));
  CHECK(got == std::multiset<std::uint64_t>{1, 2, 2, 2, 3, 6});
}

TEST_CASE("all_subgroups respects the lattice cap") {
  ScopedLatticeCap cap(50);
  CHECK_THROWS_AS(all_subgroups(alternating(5)), Error);
  CHECK_NOTHROW(all_subgroups(symmetric(4)));
}

TEST_CASE("lattice agrees with exhaustive subset closure for small groups") {
  std::vector<Group> groups{symmetric(3), symmetric(4), alternating(4), dihedral(8), dihedral(12),
                            cyclic(12), dicyclic(8), dicyclic(12), elementary_abelian(2, 3),
                            direct_product(cyclic(2), cyclic(4)), generalized_dihedral(3, 2),
                            affine(5, 4), direct_product(symmetric(3), cyclic(3))};
  for (const Group& g : groups) {
    oracle::Cayley c = oracle::cayley(oracle::closure(g.degree(), {g.generators().begin(), g.generators().end()}));
    auto expected = oracle::subgroups_by_subset_search(c);
    auto lattice = all_subgroups(g);
    std::set<std::set<Perm>> from_lattice;
    for (std::size_t i = 0; i < lattice->size(); ++i) {
      std::set<Perm> s;
      for (std::uint32_t pos : lattice->members(i).positions()) s.insert(g.elements()[pos]);
      from_lattice.insert(std::move(s));
    }
    std::set<std::set<Perm>> from_search;
    for (const auto& sub : expected) {
      std::set<Perm> s;
      for (std::uint32_t pos : sub) s.insert(c.elements[pos]);
      from_search.insert(std::move(s));
    }
    CHECK_MESSAGE(from_lattice == from_search, g.name());
    CHECK(lattice->size() == expected.size());
  }
}

TEST_CASE("lattice structure invariants") {
  for (const Group& g : {symmetric(4), dicyclic(12), affine(7, 6), direct_product(cyclic(2), alternating(4))}) {
    auto lattice = all_subgroups(g);
    const std::size_t m = lattice->size();
    CHECK(lattice->order(lattice->trivial_index()) == 1);
    CHECK(lattice->order(lattice->whole_index()) == g.order());
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(g.order() % lattice->order(i) == 0);
      CHECK(lattice->subgroup(i).order() == lattice->order(i));
      CHECK(lattice->subgroup(i).is_normal() == lattice->is_normal(i));
      for (std::size_t j = 0; j < m; ++j) {
        bool inc = lattice->includes(i, j);
        CHECK(inc == lattice->members(j).is_subset_of(lattice->members(i)));
        if (inc && lattice->includes(j, i)) CHECK(i == j);
        CHECK(lattice->permutes(i, j) == lattice->permutes(j, i));
        if (lattice->permutes(i, j)) {
          std::size_t meet = lattice->meet(i, j);
          CHECK(lattice->order(lattice->join(i, j)) * lattice->order(meet) ==
                lattice->order(i) * lattice->order(j));
        }
      }
    }
  }
}

TEST_CASE("dense lattice operations agree with generic subgroup operations") {
  Group g = symmetric(4);
  auto lattice = all_subgroups(g);
  for (std::size_t i = 0; i < lattice->size(); ++i) {
    for (std::size_t j = 0; j < lattice->size(); ++j) {
      const Subgroup& h = lattice->subgroup(i);
      const Subgroup& k = lattice->subgroup(j);
      CHECK(lattice->subgroup(lattice->meet(i, j)) == intersection(h, k));
      CHECK(lattice->subgroup(lattice->join(i, j)) == join(h, k));
      CHECK(lattice->permutes(i, j) == permutes(h, k));
    }
    CHECK(*lattice->find(lattice->subgroup(i)) == i);
  }
}

TEST_CASE("maximal subgroups") {
  auto s4_max = orders(maximal_subgroups(symmetric(4)));
  CHECK(std::set<std::uint64_t>(s4_max.begin(), s4_max.end()) == std::set<std::uint64_t>{6, 8, 12});
  CHECK(s4_max == std::multiset<std::uint64_t>{6, 6, 6, 6, 8, 8, 8, 12});
  CHECK(orders(maximal_subgroups(cyclic(6))) == std::multiset<std::uint64_t>{2, 3});
  CHECK(orders(maximal_subgroups(cyclic(5))) == std::multiset<std::uint64_t>{1});
}

TEST_CASE("Frattini subgroup") {
  CHECK(frattini(symmetric(4)).is_trivial());
  CHECK(frattini(cyclic(4)).order() == 2);
  CHECK(frattini(symmetric(3)).is_trivial());
  CHECK(frattini(Group::trivial(1)).is_trivial());
  CHECK(frattini(dicyclic(8)).order() == 2);
  CHECK(frattini(dihedral(8)).order() == 2);
  for (const Group& g : {dihedral(16), dicyclic(24), cyclic(12)}) CHECK(frattini(g).is_normal());
}

TEST_CASE("minimal normal subgroups") {
  auto s4 = minimal_normal_subgroups(symmetric(4));
  REQUIRE(s4.size() == 1);
  CHECK(s4[0].order() == 4);
  auto s3 = minimal_normal_subgroups(symmetric(3));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].order() == 3);
  CHECK(orders(minimal_normal_subgroups(elementary_abelian(2, 2))) ==
        std::multiset<std::uint64_t>{2, 2, 2});
}

TEST_CASE("normal subgroups from class closures match lattice normality") {
  for (const Group& g : {symmetric(4), dihedral(12), dicyclic(12), direct_product(symmetric(3), symmetric(3)),
                         alternating(5), affine(5, 4)}) {
    auto lattice = all_subgroups(g);
    std::vector<Subgroup> normals = normal_subgroups(g);
    CHECK(normals.size() == lattice->normal_indices().size());
    for (const Subgroup& n : normals) {
      auto idx = lattice->find(n);
      REQUIRE(idx.has_value());
      CHECK(lattice->is_normal(*idx));
    }
  }
}

TEST_CASE("core is normal and contained in the subgroup") {
  Group g = direct_product(symmetric(3), dihedral(8));
  auto lattice = all_subgroups(g);
  for (std::size_t i = 0; i < lattice->size(); i += 3) {
    Subgroup c = core(g, lattice->subgroup(i));
    CHECK(c.is_normal());
    CHECK(c.is_contained_in(lattice->subgroup(i)));
  }
}
