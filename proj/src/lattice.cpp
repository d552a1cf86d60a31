#include "sylowlens/lattice.hpp"
#include "sylowlens/error.hpp"
#include "sylowlens/quotient.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace sylowlens {

namespace {

void require_same_ambient(const Subgroup& h, const Subgroup& k) {
  if (!h.ambient().same_as(k.ambient())) {
    throw Error(ErrorKind::AmbientMismatch, "subgroups belong to different ambient groups");
  }
}

void require_inside(const Group& g, const Subgroup& h, const char* what) {
  if (h.ambient().degree() != g.degree()) {
    throw Error(ErrorKind::DegreeMismatch, std::string(what) + ": degree mismatch");
  }
  for (const Perm& x : h.generators()) {
    if (!g.contains(x)) {
      throw Error(ErrorKind::NotSubgroup, std::string(what) + ": subgroup not contained in group");
    }
  }
}

}  // namespace

Subgroup intersection(const Subgroup& h, const Subgroup& k) {
  require_same_ambient(h, k);
  const Subgroup& small = h.order() <= k.order() ? h : k;
  const Subgroup& large = h.order() <= k.order() ? k : h;
  std::vector<Perm> common;
  for (const Perm& x : small.group().elements()) {
    if (large.contains(x)) common.push_back(x);
  }
  return Subgroup(h.ambient(), reduced_generators(h.ambient().degree(), common));
}

Subgroup join(const Subgroup& h, const Subgroup& k) {
  require_same_ambient(h, k);
  std::vector<Perm> gens(h.generators().begin(), h.generators().end());
  for (const Perm& x : k.generators()) {
    if (!h.contains(x)) gens.push_back(x);
  }
  return Subgroup(h.ambient(), std::move(gens));
}

bool permutes(const Subgroup& h, const Subgroup& k) {
  require_same_ambient(h, k);
  std::uint64_t meet = intersection(h, k).order();
  return join(h, k).order() * meet == h.order() * k.order();
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
  if (h.ambient().degree() != g.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "normalizer: degree mismatch");
  }
  std::vector<Perm> kept;
  for (const Perm& x : g.elements()) {
    bool normalizes = std::all_of(h.generators().begin(), h.generators().end(),
                                  [&](const Perm& y) { return h.contains(conjugate(y, x)); });
    if (normalizes) kept.push_back(x);
  }
  return Subgroup(g, reduced_generators(g.degree(), kept));
}

Subgroup centralizer(const Group& g, const Subgroup& h) {
  if (h.ambient().degree() != g.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "centralizer: degree mismatch");
  }
  std::vector<Perm> kept;
  for (const Perm& x : g.elements()) {
    bool commutes = std::all_of(h.generators().begin(), h.generators().end(),
                                [&](const Perm& y) { return x * y == y * x; });
    if (commutes) kept.push_back(x);
  }
  return Subgroup(g, reduced_generators(g.degree(), kept));
}

Subgroup normal_closure(const Group& g, const Subgroup& s) {
  require_inside(g, s, "normal_closure");
  std::vector<Perm> gens;
  for (const Perm& x : s.generators()) {
    if (!x.is_identity()) gens.push_back(x);
  }
  Group current(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const Perm& t : g.generators()) {
      Perm c = conjugate(gens[i], t);
      if (current.contains(c)) continue;
      gens.push_back(std::move(c));
      current = Group(g.degree(), gens);
    }
  }
  return Subgroup(g, std::move(gens));
}

Subgroup core(const Group& g, const Subgroup& h) {
  require_inside(g, h, "core");
  if (h.order() == g.order()) return Subgroup(g, {h.generators().begin(), h.generators().end()});
  QuotientImage action = coset_action(g, h);
  std::vector<Perm> kernel;
  for (const Perm& x : h.group().elements()) {
    if (action.project(x).is_identity()) kernel.push_back(x);
  }
  return Subgroup(g, reduced_generators(g.degree(), kernel));
}

std::vector<Perm> conjugacy_class_representatives(const Group& g) {
  const ElementIndex& index = g.element_index();
  std::vector<bool> classified(index.size(), false);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (classified[i]) continue;
    reps.push_back(index[i]);
    std::vector<std::size_t> cls{i};
    classified[i] = true;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (const Perm& t : g.generators()) {
        std::size_t j = index.find(conjugate(index[cls[k]], t));
        if (!classified[j]) {
          classified[j] = true;
          cls.push_back(j);
        }
      }
    }
  }
  return reps;
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  auto add_unique = [](Subgroup s, std::vector<Subgroup>& list) {
    for (const Subgroup& t : list) {
      if (t == s) return;
    }
    list.push_back(std::move(s));
  };

  std::vector<Subgroup> closures;
  for (const Perm& x : conjugacy_class_representatives(g)) {
    add_unique(normal_closure(g, Subgroup(g, {x})), closures);
  }

  std::vector<Subgroup> normals = closures;
  for (std::size_t a = 0; a < normals.size(); ++a) {
    for (const Subgroup& c : closures) {
      if (c.is_contained_in(normals[a])) continue;
      add_unique(join(normals[a], c), normals);
    }
  }
  std::stable_sort(normals.begin(), normals.end(),
                   [](const Subgroup& x, const Subgroup& y) { return x.order() < y.order(); });
  return normals;
}

// ---------------------------------------------------------------------------
// ElementSet

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
  return r;
}

std::vector<std::uint32_t> ElementSet::positions() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// SubgroupLattice

ElementSet SubgroupLattice::closure(std::span<const std::uint32_t> generators) const {
  ElementSet set(n_);
  std::vector<std::uint32_t> queue{0};
  set.insert(0);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    std::uint32_t x = queue[k];
    for (std::uint32_t g : generators) {
      std::uint32_t y = multiply(x, g);
      if (!set.contains(y)) {
        set.insert(y);
        queue.push_back(y);
      }
    }
  }
  return set;
}

SubgroupLattice::SubgroupLattice(const Group& g) : ambient_(g) {
  std::uint64_t order = g.order();
  if (order > lattice_cap()) {
    throw Error(ErrorKind::CapExceeded,
                "group of order " + std::to_string(order) + " exceeds the lattice cap " +
                    std::to_string(lattice_cap()));
  }
  const ElementIndex& index = g.element_index();
  n_ = index.size();

  table_.resize(n_ * n_);
  inverse_.resize(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      table_[a * n_ + b] = static_cast<std::uint32_t>(index.find(index[a] * index[b]));
    }
  }
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (table_[a * n_ + b] == 0) {
        inverse_[a] = static_cast<std::uint32_t>(b);
        break;
      }
    }
  }
  for (const Perm& x : g.generators()) {
    if (!x.is_identity()) group_gens_.push_back(static_cast<std::uint32_t>(index.find(x)));
  }

  struct Raw {
    ElementSet members;
    std::vector<std::uint32_t> gens;
  };
  std::vector<Raw> raw;
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> seen;
  auto add = [&](ElementSet members, std::vector<std::uint32_t> gens) {
    auto [it, inserted] = seen.emplace(members, static_cast<std::uint32_t>(raw.size()));
    if (inserted) raw.push_back({std::move(members), std::move(gens)});
  };

  add(closure({}), {});
  std::vector<std::uint32_t> cyclic_raw;
  for (std::uint32_t x = 1; x < n_; ++x) {
    std::uint32_t gen[1] = {x};
    ElementSet c = closure(gen);
    auto it = seen.find(c);
    if (it == seen.end()) {
      cyclic_raw.push_back(static_cast<std::uint32_t>(raw.size()));
      add(std::move(c), {x});
    }
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::uint32_t c : cyclic_raw) {
      std::uint32_t cg = raw[c].gens[0];
      if (raw[i].members.contains(cg)) continue;
      std::vector<std::uint32_t> gens = raw[i].gens;
      gens.push_back(cg);
      ElementSet j = closure(gens);
      if (!seen.contains(j)) add(std::move(j), std::move(gens));
    }
  }

  // Canonical order.
  std::vector<std::vector<std::uint32_t>> positions(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) positions[i] = raw[i].members.positions();
  std::vector<std::uint32_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (positions[a].size() != positions[b].size()) return positions[a].size() < positions[b].size();
    return positions[a] < positions[b];
  });

  nodes_.resize(raw.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    Node& node = nodes_[k];
    node.members = std::move(raw[perm[k]].members);
    node.gens = std::move(raw[perm[k]].gens);
    node.order = positions[perm[k]].size();
    node.cyclic = node.gens.size() <= 1;
    lookup_.emplace(node.members, static_cast<std::uint32_t>(k));
  }

  const std::size_t m = nodes_.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (nodes_[i].order % nodes_[j].order != 0) continue;
      if (nodes_[j].members.is_subset_of(nodes_[i].members)) {
        nodes_[i].below.push_back(static_cast<std::uint32_t>(j));
        nodes_[j].above.push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
  for (Node& node : nodes_) {
    node.normal = true;
    for (std::uint32_t t : group_gens_) {
      for (std::uint32_t s : node.gens) {
        if (!node.members.contains(multiply(multiply(inverse(t), s), t))) {
          node.normal = false;
          break;
        }
      }
      if (!node.normal) break;
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    // Proper and contained in no proper subgroup other than itself.
    nodes_[i].maximal = nodes_[i].above.size() == 2;
  }

  handles_.reserve(m);
  for (const Node& node : nodes_) {
    std::vector<Perm> gens;
    for (std::uint32_t x : node.gens) gens.push_back(index[x]);
    handles_.emplace_back(g, std::move(gens));
  }

  permutes_memo_ = std::make_unique<std::atomic<std::int8_t>[]>(m * m);
  for (std::size_t i = 0; i < m * m; ++i) permutes_memo_[i].store(-1, std::memory_order_relaxed);
}

bool SubgroupLattice::includes(std::size_t big, std::size_t small) const {
  const auto& b = nodes_[small].above;
  return std::binary_search(b.begin(), b.end(), static_cast<std::uint32_t>(big));
}

std::size_t SubgroupLattice::index_of(const ElementSet& members) const {
  auto it = lookup_.find(members);
  if (it == lookup_.end()) {
    throw Error(ErrorKind::NotSubgroup, "element set is not a subgroup of the lattice group");
  }
  return it->second;
}

std::optional<std::size_t> SubgroupLattice::find(const Subgroup& h) const {
  if (h.ambient().degree() != ambient_.degree()) return std::nullopt;
  const ElementIndex& index = ambient_.element_index();
  std::vector<std::uint32_t> gens;
  for (const Perm& x : h.generators()) {
    std::size_t pos = index.find(x);
    if (pos == index.size()) return std::nullopt;
    gens.push_back(static_cast<std::uint32_t>(pos));
  }
  auto it = lookup_.find(closure(gens));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::meet(std::size_t i, std::size_t j) const {
  if (includes(i, j)) return j;
  if (includes(j, i)) return i;
  return index_of(nodes_[i].members & nodes_[j].members);
}

std::size_t SubgroupLattice::join(std::size_t i, std::size_t j) const {
  if (includes(i, j)) return i;
  if (includes(j, i)) return j;
  std::vector<std::uint32_t> gens = nodes_[i].gens;
  for (std::uint32_t x : nodes_[j].gens) {
    if (!nodes_[i].members.contains(x)) gens.push_back(x);
  }
  return index_of(closure(gens));
}

bool SubgroupLattice::permutes(std::size_t i, std::size_t j) const {
  const std::size_t m = nodes_.size();
  std::int8_t cached = permutes_memo_[i * m + j].load(std::memory_order_relaxed);
  if (cached >= 0) return cached == 1;

  bool result;
  if (includes(i, j) || includes(j, i) || nodes_[i].normal || nodes_[j].normal) {
    result = true;
  } else {
    std::uint64_t product = nodes_[i].order * nodes_[j].order / nodes_[meet(i, j)].order;
    if (product > n_ || n_ % product != 0) {
      result = false;
    } else {
      result = nodes_[join(i, j)].order == product;
    }
  }
  permutes_memo_[i * m + j].store(result ? 1 : 0, std::memory_order_relaxed);
  permutes_memo_[j * m + i].store(result ? 1 : 0, std::memory_order_relaxed);
  return result;
}

std::optional<std::size_t> SubgroupLattice::product(std::size_t i, std::size_t j) const {
  if (!permutes(i, j)) return std::nullopt;
  return join(i, j);
}

bool SubgroupLattice::is_normal_in(std::size_t i, std::size_t within) const {
  if (!includes(within, i)) return false;
  for (std::uint32_t t : nodes_[within].gens) {
    for (std::uint32_t s : nodes_[i].gens) {
      if (!nodes_[i].members.contains(multiply(multiply(inverse(t), s), t))) return false;
    }
  }
  return true;
}

std::size_t SubgroupLattice::normal_closure_in(std::size_t i, std::size_t within) const {
  if (!includes(within, i)) {
    throw Error(ErrorKind::NotSubgroup, "normal closure: subgroup not contained in the container");
  }
  std::vector<std::uint32_t> gens = nodes_[i].gens;
  ElementSet current = nodes_[i].members;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::uint32_t t : nodes_[within].gens) {
      std::uint32_t c = multiply(multiply(inverse(t), gens[k]), t);
      if (current.contains(c)) continue;
      gens.push_back(c);
      current = closure(gens);
    }
  }
  return index_of(current);
}

std::vector<std::size_t> SubgroupLattice::normal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].normal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> SubgroupLattice::maximal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].maximal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> SubgroupLattice::minimal_normal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!nodes_[i].normal) continue;
    bool minimal = true;
    for (std::uint32_t j : nodes_[i].below) {
      if (j != 0 && j != i && nodes_[j].normal) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

std::shared_ptr<const SubgroupLattice> all_subgroups(const Group& g) {
  if (auto cached = g.cached_lattice()) return cached;
  auto lattice = std::make_shared<const SubgroupLattice>(g);
  g.store_lattice(lattice);
  return g.cached_lattice();
}

std::vector<Subgroup> maximal_subgroups(const Group& g) {
  auto lattice = all_subgroups(g);
  std::vector<Subgroup> out;
  for (std::size_t i : lattice->maximal_indices()) out.push_back(lattice->subgroup(i));
  return out;
}

Subgroup frattini(const Group& g) {
  auto lattice = all_subgroups(g);
  std::size_t current = lattice->whole_index();
  for (std::size_t i : lattice->maximal_indices()) current = lattice->meet(current, i);
  if (g.is_trivial()) current = lattice->trivial_index();
  return lattice->subgroup(current);
}

std::vector<Subgroup> minimal_normal_subgroups(const Group& g) {
  auto lattice = all_subgroups(g);
  std::vector<Subgroup> out;
  for (std::size_t i : lattice->minimal_normal_indices()) out.push_back(lattice->subgroup(i));
  return out;
}

}  // namespace sylowlens
