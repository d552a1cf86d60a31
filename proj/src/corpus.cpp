#include "sylowlens/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sylowlens/lattice.hpp"
#include "sylowlens/series.hpp"

namespace sylowlens {

namespace {

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

std::uint64_t element_order(const Perm& x) {
  std::uint64_t k = 1;
  for (Perm y = x; !y.is_identity(); y = y * x) ++k;
  return k;
}

std::vector<Group> family_members(Family f, std::uint64_t max_order) {
  std::vector<Group> out;
  switch (f) {
    case Family::Symmetric:
      for (std::uint64_t n = 1; factorial(n) <= max_order; ++n) out.push_back(symmetric(n));
      break;
    case Family::Alternating:
      for (std::uint64_t n = 3; factorial(n) / 2 <= max_order; ++n) out.push_back(alternating(n));
      break;
    case Family::Cyclic:
      for (std::uint64_t n = 1; n <= max_order; ++n) out.push_back(cyclic(n));
      break;
    case Family::Dihedral:
      for (std::uint64_t n = 4; n <= max_order; n += 2) out.push_back(dihedral(n));
      break;
    case Family::ElementaryAbelian:
      for (std::uint64_t p = 2; p * p <= max_order; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t order = p * p;
        for (std::size_t k = 2; order <= max_order; ++k, order *= p) out.push_back(elementary_abelian(p, k));
      }
      break;
    case Family::Affine:
      for (std::uint64_t p = 3; p * 2 <= max_order; ++p) {
        if (!is_prime(p)) continue;
        for (std::uint64_t d = 2; d < p && p * d <= max_order; ++d) {
          if ((p - 1) % d == 0) out.push_back(affine(p, d));
        }
      }
      break;
    case Family::Dicyclic:
      for (std::uint64_t n = 8; n <= max_order; n += 4) out.push_back(dicyclic(n));
      break;
    case Family::GeneralizedDihedral:
      for (std::uint64_t n = 3; 2 * n * n <= max_order; ++n) {
        std::uint64_t order = 2 * n * n;
        for (std::size_t k = 2; order <= max_order; ++k, order *= n) out.push_back(generalized_dihedral(n, k));
      }
      break;
  }
  return out;
}

}  // namespace

std::vector<Family> all_families() {
  return {Family::Cyclic, Family::ElementaryAbelian, Family::Dihedral, Family::Symmetric,
          Family::Alternating, Family::Affine, Family::Dicyclic, Family::GeneralizedDihedral};
}

std::vector<std::uint64_t> fingerprint(const Group& g) {
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t centre = 0;
  for (const Perm& x : g.elements()) {
    ++histogram[element_order(x)];
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](const Perm& y) { return x * y == y * x; });
    centre += central;
  }
  auto lattice = all_subgroups(g);
  std::uint64_t normals = 0;
  for (std::size_t i = 0; i < lattice->size(); ++i) normals += lattice->is_normal(i);
  std::vector<std::uint64_t> out{g.order(), g.is_abelian(), centre, derived_subgroup(g).order(), lattice->size(),
                                 normals};
  for (auto [k, n] : histogram) {
    out.push_back(k);
    out.push_back(n);
  }
  return out;
}

std::vector<Group> build_corpus(std::uint64_t max_order, std::span<const Family> families) {
  std::vector<Group> members;
  for (Family f : families) {
    for (Group& g : family_members(f, max_order)) members.push_back(std::move(g));
  }
  std::vector<Group> candidates = members;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      const std::uint64_t oi = members[i].order();
      const std::uint64_t oj = members[j].order();
      if (oi > 1 && oj > 1 && oi * oj <= max_order) candidates.push_back(direct_product(members[i], members[j]));
    }
  }
  // Stable by order keeps generation order within one order.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Group& x, const Group& y) { return x.order() < y.order(); });
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Group> out;
  for (Group& g : candidates) {
    if (seen.insert(fingerprint(g)).second) out.push_back(std::move(g));
  }
  if (out.empty()) out.push_back(Group::trivial(1, "1"));
  return out;
}

std::vector<Group> build_corpus(std::uint64_t max_order) {
  std::vector<Family> families = all_families();
  return build_corpus(max_order, families);
}

nlohmann::json describe_corpus(std::uint64_t max_order, std::span<const Family> families,
                               std::span<const Group> corpus) {
  nlohmann::json names = nlohmann::json::array();
  for (Family f : families) names.push_back(std::string(to_string(f)));
  nlohmann::json groups = nlohmann::json::array();
  for (const Group& g : corpus) groups.push_back({{"name", g.name()}, {"order", g.order()}});
  return {{"max_order", max_order},
          {"families", names},
          {"direct_products", "pairs of nontrivial family members"},
          {"deduplication", "order, abelian, element-order histogram, centre order, derived subgroup order, "
                            "subgroup count, normal subgroup count"},
          {"isomorphism_complete", false},
          {"groups", groups}};
}

}  // namespace sylowlens
