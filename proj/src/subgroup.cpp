#include "sylowlens/subgroup.hpp"
#include "sylowlens/error.hpp"

#include <algorithm>

namespace sylowlens {

Subgroup::Subgroup(Group ambient, std::vector<Perm> generators, std::string name)
    : ambient_(std::move(ambient)),
      group_(ambient_.degree(), std::move(generators), std::move(name)) {
  for (const Perm& g : group_.generators()) {
    if (!ambient_.contains(g)) {
      throw Error(ErrorKind::NotSubgroup,
                  "generator " + g.to_cycles() + " is not a member of the ambient group");
    }
  }
}

Subgroup Subgroup::whole(const Group& ambient) {
  std::vector<Perm> gens(ambient.generators().begin(), ambient.generators().end());
  return Subgroup(ambient, std::move(gens), ambient.name());
}

Subgroup Subgroup::trivial(const Group& ambient) { return Subgroup(ambient, {}, "1"); }

Subgroup Subgroup::renamed(std::string name) const {
  Subgroup copy = *this;
  copy.group_ = group_.renamed(std::move(name));
  return copy;
}

bool Subgroup::is_contained_in(const Subgroup& other) const {
  return std::all_of(generators().begin(), generators().end(),
                     [&](const Perm& g) { return other.contains(g); });
}

bool Subgroup::is_normal() const {
  for (const Perm& g : ambient_.generators()) {
    for (const Perm& h : generators()) {
      if (!contains(conjugate(h, g))) return false;
    }
  }
  return true;
}

std::uint64_t Subgroup::key() const {
  std::uint64_t h = 1469598103934665603ull;
  for (const Perm& x : group_.elements()) {
    h ^= x.hash();
    h *= 1099511628211ull;
  }
  return h;
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  if (a.group_.degree() != b.group_.degree() || a.order() != b.order()) return false;
  return a.is_contained_in(b);
}

Subgroup as_subgroup(const Group& ambient, const Group& g) {
  std::vector<Perm> gens(g.generators().begin(), g.generators().end());
  return Subgroup(ambient, std::move(gens), g.name());
}

std::vector<Perm> reduced_generators(std::size_t degree, std::span<const Perm> elements) {
  std::vector<Perm> gens;
  Group span(degree, {});
  for (const Perm& x : elements) {
    if (x.is_identity() || span.contains(x)) continue;
    gens.push_back(x);
    span = Group(degree, gens);
  }
  return gens;
}

}  // namespace sylowlens
