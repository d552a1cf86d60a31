#include "sylowlens/quotient.hpp"
#include "sylowlens/error.hpp"

#include <limits>

namespace sylowlens {

namespace {
constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
}

QuotientImage coset_action(const Group& g, const Subgroup& h) {
  for (const Perm& x : h.generators()) {
    if (x.degree() != g.degree() || !g.contains(x)) {
      throw Error(ErrorKind::NotSubgroup, "coset action: subgroup not contained in group");
    }
  }
  const ElementIndex& index = g.element_index();
  const std::vector<Perm>& h_elements = h.group().elements();

  std::vector<std::uint32_t> coset_of(index.size(), kUnassigned);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (coset_of[i] != kUnassigned) continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(index[i]);
    for (const Perm& n : h_elements) coset_of[index.find(n * index[i])] = c;
  }

  auto act = [&](const Perm& x) {
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) {
      images[c] = coset_of[index.find(reps[c] * x)];
    }
    return Perm::unchecked(std::move(images));
  };

  std::vector<Perm> gens;
  for (const Perm& x : g.generators()) {
    Perm y = act(x);
    if (!y.is_identity()) gens.push_back(std::move(y));
  }
  std::string name;
  if (!g.name().empty()) name = g.name() + "/" + (h.name().empty() ? "N" : h.name());
  QuotientImage q(g, h, Group(reps.size(), std::move(gens), std::move(name)));
  q.reps_ = std::move(reps);
  q.coset_of_ = std::move(coset_of);
  return q;
}

QuotientImage quotient(const Group& g, const Subgroup& n) {
  for (const Perm& x : n.generators()) {
    if (x.degree() != g.degree() || !g.contains(x)) {
      throw Error(ErrorKind::NotSubgroup, "quotient: N is not a subgroup of G");
    }
  }
  for (const Perm& x : g.generators()) {
    for (const Perm& y : n.generators()) {
      if (!n.contains(conjugate(y, x))) {
        throw Error(ErrorKind::NotNormal, "quotient: N is not normal in G");
      }
    }
  }
  return coset_action(g, n);
}

Perm QuotientImage::project(const Perm& x) const {
  const ElementIndex& index = ambient_.element_index();
  if (index.find(x) == index.size()) {
    throw Error(ErrorKind::NotSubgroup, "projection of a non-member");
  }
  std::vector<Point> images(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c) {
    images[c] = coset_of_[index.find(reps_[c] * x)];
  }
  return Perm::unchecked(std::move(images));
}

Subgroup QuotientImage::project(const Subgroup& h) const {
  std::vector<Perm> gens;
  for (const Perm& x : h.generators()) {
    Perm y = project(x);
    if (!y.is_identity()) gens.push_back(std::move(y));
  }
  return Subgroup(image_, std::move(gens));
}

Perm QuotientImage::lift(const Perm& y) const {
  if (y.degree() != reps_.size()) {
    throw Error(ErrorKind::DegreeMismatch, "lift: element does not act on the cosets");
  }
  return reps_[y[0]];
}

Subgroup QuotientImage::preimage(const Subgroup& k) const {
  std::vector<Perm> gens(kernel_.generators().begin(), kernel_.generators().end());
  for (const Perm& y : k.generators()) gens.push_back(lift(y));
  return Subgroup(ambient_, std::move(gens));
}

}  // namespace sylowlens
