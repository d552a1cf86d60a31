#include "sylowlens/schreier_sims.hpp"
#include "sylowlens/error.hpp"

#include <algorithm>

namespace sylowlens {

StabChain::StabChain(std::size_t degree, std::span<const Perm> generators)
    : degree_(degree) {
  std::vector<Perm> gens;
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorKind::DegreeMismatch, "generator degree differs from group degree");
    }
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) {
      gens.push_back(g);
    }
  }

  for (const Perm& g : gens) {
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](const Level& l) { return g[l.base] == l.base; });
    if (fixes_base) push_level(g.first_moved_point());
  }
  // Level i holds the generators fixing base[0..i-1].
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const Perm& g : gens) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = g[levels_[j].base] == levels_[j].base;
      if (fixes) levels_[i].gens.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  if (levels_.empty()) return;
  std::size_t i = levels_.size() - 1;
  for (;;) {
    bool restarted = false;
    Level& level = levels_[i];
    for (std::size_t oi = 0; oi < level.orbit.size() && !restarted; ++oi) {
      Point beta = level.orbit[oi];
      for (std::size_t gi = 0; gi < level.gens.size(); ++gi) {
        const Perm& s = level.gens[gi];
        const Perm& u_beta = level.reps[level.slot[beta]];
        const Perm& u_image = level.reps[level.slot[s[beta]]];
        Perm schreier = u_beta * s * u_image.inverse();
        if (schreier.is_identity()) continue;
        auto [residue, stop] = sift(std::move(schreier), i + 1);
        if (stop == levels_.size()) {
          if (residue.is_identity()) continue;
          push_level(residue.first_moved_point());
        }
        for (std::size_t l = i + 1; l <= stop; ++l) {
          levels_[l].gens.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = stop;
        restarted = true;
        break;
      }
    }
    if (restarted) continue;
    if (i == 0) break;
    --i;
  }
}

void StabChain::push_level(Point base_point) {
  Level l;
  l.base = base_point;
  levels_.push_back(std::move(l));
}

void StabChain::rebuild_orbit(Level& level) const {
  level.orbit.clear();
  level.reps.clear();
  level.slot.assign(degree_, -1);
  level.orbit.push_back(level.base);
  level.reps.emplace_back(degree_);
  level.slot[level.base] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point b = level.orbit[k];
    for (const Perm& s : level.gens) {
      Point c = s[b];
      if (level.slot[c] >= 0) continue;
      level.slot[c] = static_cast<std::int32_t>(level.reps.size());
      level.reps.push_back(level.reps[level.slot[b]] * s);
      level.orbit.push_back(c);
    }
  }
}

std::pair<Perm, std::size_t> StabChain::sift(Perm h, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    Point b = h[level.base];
    if (level.slot[b] < 0) return {std::move(h), l};
    h = h * level.reps[level.slot[b]].inverse();
  }
  return {std::move(h), levels_.size()};
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  for (const Level& l : levels_) b.push_back(l.base);
  return b;
}

const Perm& StabChain::transversal(std::size_t level, Point p) const {
  const Level& l = levels_.at(level);
  if (p >= degree_ || l.slot[p] < 0) {
    throw Error(ErrorKind::Precondition, "point not in basic orbit");
  }
  return l.reps[l.slot[p]];
}

std::uint64_t StabChain::order() const {
  std::uint64_t n = 1;
  for (const Level& l : levels_) {
    if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(l.orbit.size()), &n)) {
      throw Error(ErrorKind::CapExceeded, "group order exceeds 64 bits");
    }
  }
  return n;
}

bool StabChain::contains(const Perm& x) const {
  if (x.degree() != degree_) {
    throw Error(ErrorKind::DegreeMismatch, "membership test with wrong degree");
  }
  auto [residue, stop] = sift(x, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Perm> StabChain::elements() const {
  // g = u_{k-1} * ... * u_0 with u_i ranging over the level-i transversal.
  std::vector<Perm> current{Perm(degree_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Perm> next;
    next.reserve(current.size() * levels_[l].reps.size());
    for (const Perm& g : current) {
      for (const Perm& u : levels_[l].reps) next.push_back(g * u);
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace sylowlens
