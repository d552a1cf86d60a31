#include "sylowlens/products.hpp"

#include <algorithm>
#include <limits>

#include "sylowlens/config.hpp"
#include "sylowlens/error.hpp"
#include "sylowlens/series.hpp"
#include "sylowlens/sylow.hpp"

namespace sylowlens {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

template <class T>
std::unique_ptr<std::atomic<T>[]> filled(std::size_t n, T value) {
  auto out = std::make_unique<std::atomic<T>[]>(n);
  for (std::size_t i = 0; i < n; ++i) out[i].store(value, std::memory_order_relaxed);
  return out;
}

Subgroup inside(const Group& g, const Subgroup& h) {
  if (h.ambient().degree() != g.degree()) {
    throw Error(ErrorKind::AmbientMismatch, "subgroup acts on a different point set");
  }
  if (h.ambient().same_as(g)) return h;
  return Subgroup(g, std::vector<Perm>(h.generators().begin(), h.generators().end()), h.name());
}

std::size_t index_in(const SubgroupLattice& lattice, const Subgroup& h) {
  auto i = lattice.find(h);
  if (!i) throw Error(ErrorKind::NotSubgroup, "subgroup not found in the lattice of " + lattice.ambient().name());
  return *i;
}

// Fills the counterexample search of a witness using a lattice of G.
void fill_from_lattice(const SubgroupLattice& lattice, std::size_t a, std::size_t b, MutPermWitness& w) {
  const std::uint64_t n = lattice.group_order();
  w.product_covers = lattice.order(a) * lattice.order(b) == n * lattice.order(lattice.meet(a, b));
  w.trivial = a == lattice.whole_index() || b == lattice.whole_index();
  if (!w.product_covers) return;
  for (std::uint32_t u : lattice.below(b)) {
    ++w.pairs_checked;
    if (!lattice.permutes(a, u)) {
      w.counterexample = PermutingFailure{lattice.subgroup(u), FactorSide::A};
      return;
    }
  }
  for (std::uint32_t v : lattice.below(a)) {
    ++w.pairs_checked;
    if (!lattice.permutes(b, v)) {
      w.counterexample = PermutingFailure{lattice.subgroup(v), FactorSide::B};
      return;
    }
  }
  w.holds = true;
}

std::string describe(const SubgroupLattice& lattice, std::size_t i) {
  const Subgroup& h = lattice.subgroup(i);
  std::string out = "#" + std::to_string(i) + " order " + std::to_string(h.order());
  if (!h.name().empty()) out += " (" + h.name() + ")";
  return out;
}

}  // namespace

MutPermWitness is_mutually_permutable(const Group& g, const Subgroup& a_in, const Subgroup& b_in) {
  Subgroup a = inside(g, a_in);
  Subgroup b = inside(g, b_in);
  MutPermWitness w(a, b);
  if (g.order() <= lattice_cap()) {
    auto lattice = all_subgroups(g);
    fill_from_lattice(*lattice, index_in(*lattice, a), index_in(*lattice, b), w);
    return w;
  }

  w.product_covers = a.order() * b.order() == g.order() * intersection(a, b).order();
  w.trivial = a.is_whole() || b.is_whole();
  if (!w.product_covers) return w;
  auto check = [&](const Subgroup& fixed, const Subgroup& other, FactorSide side) {
    auto sub = all_subgroups(other.group());
    for (std::size_t i = 0; i < sub->size(); ++i) {
      ++w.pairs_checked;
      Subgroup u = inside(g, sub->subgroup(i));
      if (!permutes(fixed, u)) {
        w.counterexample = PermutingFailure{u, side};
        return false;
      }
    }
    return true;
  };
  w.holds = check(a, b, FactorSide::A) && check(b, a, FactorSide::B);
  return w;
}

std::vector<MutPermWitness> find_factorizations(const Group& g, bool require_mut_perm) {
  auto lattice = all_subgroups(g);
  const std::size_t m = lattice->size();
  const std::uint64_t n = g.order();
  std::vector<MutPermWitness> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      if (lattice->order(i) * lattice->order(j) < n) continue;
      if (lattice->order(i) * lattice->order(j) != n * lattice->order(lattice->meet(i, j))) continue;
      MutPermWitness w(lattice->subgroup(i), lattice->subgroup(j));
      fill_from_lattice(*lattice, i, j, w);
      if (require_mut_perm && !w.holds) continue;
      out.push_back(std::move(w));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ProductAnalyzer::ProductAnalyzer(std::shared_ptr<const SubgroupLattice> lattice)
    : lattice_(std::move(lattice)), m_(lattice_->size()) {
  primes_ = lattice_->ambient().prime_divisors();
  for (std::size_t i : lattice_->minimal_normal_indices()) minimal_normals_.push_back(static_cast<std::uint32_t>(i));
  meet_memo_ = filled<std::uint32_t>(m_ * m_, kUnset);
  join_memo_ = filled<std::uint32_t>(m_ * m_, kUnset);
  mut_perm_memo_ = filled<std::int8_t>(m_ * m_, -1);
  p_solvable_memo_ = filled<std::int8_t>(m_ * std::max<std::size_t>(primes_.size(), 1), -1);
  core_memo_ = filled<std::int64_t>(m_, -1);
}

std::size_t ProductAnalyzer::meet(std::size_t i, std::size_t j) const {
  std::uint32_t v = meet_memo_[i * m_ + j].load(std::memory_order_relaxed);
  if (v != kUnset) return v;
  v = static_cast<std::uint32_t>(lattice_->meet(i, j));
  meet_memo_[i * m_ + j].store(v, std::memory_order_relaxed);
  meet_memo_[j * m_ + i].store(v, std::memory_order_relaxed);
  return v;
}

std::size_t ProductAnalyzer::join(std::size_t i, std::size_t j) const {
  std::uint32_t v = join_memo_[i * m_ + j].load(std::memory_order_relaxed);
  if (v != kUnset) return v;
  v = static_cast<std::uint32_t>(lattice_->join(i, j));
  join_memo_[i * m_ + j].store(v, std::memory_order_relaxed);
  join_memo_[j * m_ + i].store(v, std::memory_order_relaxed);
  return v;
}

bool ProductAnalyzer::covers(std::size_t a, std::size_t b) const {
  return lattice_->order(a) * lattice_->order(b) == lattice_->group_order() * lattice_->order(meet(a, b));
}

bool ProductAnalyzer::mutually_permutable(std::size_t x, std::size_t y) const {
  std::int8_t v = mut_perm_memo_[x * m_ + y].load(std::memory_order_relaxed);
  if (v >= 0) return v == 1;
  const SubgroupLattice& l = *lattice_;
  bool ok = l.permutes(x, y);
  if (ok) {
    for (std::uint32_t u : l.below(y)) {
      if (!l.permutes(x, u)) {
        ok = false;
        break;
      }
    }
  }
  if (ok) {
    for (std::uint32_t u : l.below(x)) {
      if (!l.permutes(y, u)) {
        ok = false;
        break;
      }
    }
  }
  mut_perm_memo_[x * m_ + y].store(ok ? 1 : 0, std::memory_order_relaxed);
  mut_perm_memo_[y * m_ + x].store(ok ? 1 : 0, std::memory_order_relaxed);
  return ok;
}

std::size_t ProductAnalyzer::core(std::size_t i) const {
  std::int64_t v = core_memo_[i].load(std::memory_order_relaxed);
  if (v >= 0) return static_cast<std::size_t>(v);
  // Indices are sorted by order, so the last normal member below i is the
  // largest normal subgroup inside S_i.
  std::size_t best = lattice_->trivial_index();
  for (std::uint32_t j : lattice_->below(i)) {
    if (lattice_->is_normal(j)) best = j;
  }
  core_memo_[i].store(static_cast<std::int64_t>(best), std::memory_order_relaxed);
  return best;
}

bool ProductAnalyzer::centralizes(std::size_t n, std::size_t x) const {
  const std::uint64_t key = n * m_ + x;
  {
    std::lock_guard lock(mutex_);
    auto it = centralizes_memo_.find(key);
    if (it != centralizes_memo_.end()) return it->second;
  }
  const SubgroupLattice& l = *lattice_;
  bool ok = true;
  for (std::uint32_t s : l.generator_positions(n)) {
    for (std::uint32_t t : l.generator_positions(x)) {
      if (l.multiply(s, t) != l.multiply(t, s)) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }
  std::lock_guard lock(mutex_);
  centralizes_memo_.emplace(key, ok);
  return ok;
}

bool ProductAnalyzer::p_solvable(std::size_t i, std::uint64_t p) const {
  auto it = std::find(primes_.begin(), primes_.end(), p);
  if (it == primes_.end()) return true;  // S_i is a p'-group
  const std::size_t slot = i * primes_.size() + static_cast<std::size_t>(it - primes_.begin());
  std::int8_t v = p_solvable_memo_[slot].load(std::memory_order_relaxed);
  if (v >= 0) return v == 1;
  bool ok = is_p_solvable(lattice_->subgroup(i).group(), p);
  p_solvable_memo_[slot].store(ok ? 1 : 0, std::memory_order_relaxed);
  return ok;
}

bool ProductAnalyzer::quotient_mutually_permutable(std::size_t an, std::size_t bn, std::size_t n) const {
  const std::uint64_t key = (static_cast<std::uint64_t>(an) * m_ + bn) * m_ + n;
  {
    std::lock_guard lock(mutex_);
    auto it = quotient_memo_.find(key);
    if (it != quotient_memo_.end()) return it->second;
  }
  const SubgroupLattice& l = *lattice_;
  bool ok = covers(an, bn);
  auto sweep = [&](std::size_t fixed, std::size_t over) {
    for (std::uint32_t u : l.below(over)) {
      if (l.includes(u, n) && !l.permutes(fixed, u)) return false;
    }
    return true;
  };
  ok = ok && sweep(an, bn) && sweep(bn, an);
  std::lock_guard lock(mutex_);
  quotient_memo_.emplace(key, ok);
  return ok;
}

std::vector<ProductAnalyzer::Factorization> ProductAnalyzer::factorizations(bool require_mut_perm) const {
  const SubgroupLattice& l = *lattice_;
  const std::uint64_t n = l.group_order();
  std::vector<Factorization> out;
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = i; j < m_; ++j) {
      if (l.order(i) * l.order(j) < n || !covers(i, j)) continue;
      bool mp = mutually_permutable(i, j);
      if (require_mut_perm && !mp) continue;
      bool trivial = i == l.whole_index() || j == l.whole_index();
      out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), trivial, mp});
    }
  }
  return out;
}

std::vector<std::uint32_t> ProductAnalyzer::intersection_sample(std::size_t budget) const {
  std::lock_guard lock(mutex_);
  for (std::size_t k = 0; k < sample_budgets_.size(); ++k) {
    if (sample_budgets_[k] == budget) return samples_[k];
  }
  std::vector<std::uint32_t> out;
  if (budget == 0 || m_ <= budget) {
    for (std::uint32_t i = 0; i < m_; ++i) out.push_back(i);
  } else {
    std::vector<std::uint32_t> normal;
    std::vector<std::uint32_t> other;
    for (std::uint32_t i = 0; i < m_; ++i) (lattice_->is_normal(i) ? normal : other).push_back(i);
    auto strided = [&](const std::vector<std::uint32_t>& from) {
      if (from.size() <= budget) {
        out.insert(out.end(), from.begin(), from.end());
        return;
      }
      for (std::size_t k = 0; k < budget; ++k) out.push_back(from[k * (from.size() - 1) / (budget - 1)]);
    };
    strided(normal);
    strided(other);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  sample_budgets_.push_back(budget);
  samples_.push_back(out);
  return out;
}

LemmaSuiteOutcome ProductAnalyzer::lemma_suite(std::size_t a, std::size_t b, const LemmaSuiteOptions& options) const {
  const SubgroupLattice& l = *lattice_;
  const std::size_t one = l.trivial_index();
  LemmaSuiteOutcome out;

  for (std::uint64_t p : primes_) {
    out.p_solvable.push_back({p, p_solvable(a, p), p_solvable(b, p), p_solvable(l.whole_index(), p)});
  }

  for (std::uint32_t n : minimal_normals_) {
    ++out.minimal_normals;
    if (quotient_mutually_permutable(join(a, n), join(b, n), n)) {
      ++out.quotient_passes;
    } else if (!out.quotient_failure) {
      out.quotient_failure = n;
    }

    const std::size_t an = meet(a, n);
    const std::size_t bn = meet(b, n);
    bool ok = (an == one || an == n) && (bn == one || bn == n);
    auto centralizer_part = [&](std::size_t x, std::size_t xn, std::size_t y, std::size_t yn) {
      if (xn != n || yn != one) return true;
      if (!centralizes(n, x) && !centralizes(n, y)) return false;
      return l.is_cyclic(n) || centralizes(n, y);
    };
    ok = ok && centralizer_part(a, an, b, bn) && centralizer_part(b, bn, a, an);
    if (ok) {
      ++out.membership_passes;
    } else if (!out.membership_failure) {
      out.membership_failure = n;
    }
  }

  out.core_product_order = l.order(join(core(a), core(b)));

  for (std::uint32_t u : intersection_sample(options.intersection_budget)) {
    ++out.intersection_tested;
    const std::size_t x = meet(a, u);
    const std::size_t y = meet(b, u);
    bool ok = mutually_permutable(x, y);
    if (ok && l.is_normal(u)) ok = l.is_normal(join(x, y));
    if (ok) {
      ++out.intersection_passes;
    } else if (!out.intersection_failure) {
      out.intersection_failure = u;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json subgroup_json(const SubgroupLattice& l, std::size_t i) {
  const Subgroup& h = l.subgroup(i);
  nlohmann::json gens = nlohmann::json::array();
  for (const Perm& x : h.generators()) gens.push_back(x.to_cycles());
  return {{"index", i}, {"order", h.order()}, {"generators", gens}};
}

BoundVerdict suite_verdict(const ProductAnalyzer& an, std::size_t a, std::size_t b, bool mp, std::string claim) {
  const SubgroupLattice& l = an.lattice();
  BoundVerdict v;
  v.claim_id = std::move(claim);
  v.group = an.group().name();
  v.inputs = {{"A", subgroup_json(l, a)}, {"B", subgroup_json(l, b)}};
  v.preconditions.push_back({"mutually permutable product", mp,
                             "G = AB with A = " + describe(l, a) + ", B = " + describe(l, b)});
  return v;
}

void settle(BoundVerdict& v) {
  if (v.preconditions_met()) v.holds = v.relation_holds();
}

}  // namespace

std::vector<BoundVerdict> render_lemma_suite(const ProductAnalyzer& an, std::size_t a, std::size_t b, bool mp,
                                             const LemmaSuiteOutcome& o) {
  const SubgroupLattice& l = an.lattice();
  std::vector<BoundVerdict> out;

  BoundVerdict v1 = suite_verdict(an, a, b, mp, "bea_2_1");
  v1.relation = "==";
  v1.rhs = static_cast<std::int64_t>(o.p_solvable.size());
  for (const auto& row : o.p_solvable) {
    bool ok = !(row.a && row.b) || row.g;
    v1.lhs += ok;
    v1.witness.push_back("p=" + std::to_string(row.p) + ": A " + (row.a ? "" : "not ") + "p-solvable, B " +
                         (row.b ? "" : "not ") + "p-solvable, G " + (row.g ? "" : "not ") + "p-solvable");
  }
  v1.display = std::to_string(v1.lhs) + " of " + std::to_string(v1.rhs) +
               " primes satisfy: A, B p-solvable implies G p-solvable";
  settle(v1);
  out.push_back(std::move(v1));

  BoundVerdict v2 = suite_verdict(an, a, b, mp, "bea_2_2");
  v2.relation = "==";
  v2.lhs = static_cast<std::int64_t>(o.quotient_passes);
  v2.rhs = static_cast<std::int64_t>(o.minimal_normals);
  v2.display = std::to_string(v2.lhs) + " of " + std::to_string(v2.rhs) +
               " minimal normal N give G/N = (AN/N)(BN/N) mutually permutable";
  if (o.quotient_failure) v2.witness.push_back("fails for N = " + describe(l, *o.quotient_failure));
  settle(v2);
  out.push_back(std::move(v2));

  BoundVerdict v3 = suite_verdict(an, a, b, mp, "bea_2_3");
  v3.relation = "=>";
  v3.lhs = l.group_order() > 1;
  v3.rhs = o.core_product_order > 1;
  v3.display = "|G| = " + std::to_string(l.group_order()) + ", |A_G B_G| = " + std::to_string(o.core_product_order);
  v3.witness.push_back("A_G = " + describe(l, an.core(a)));
  v3.witness.push_back("B_G = " + describe(l, an.core(b)));
  settle(v3);
  out.push_back(std::move(v3));

  BoundVerdict v4 = suite_verdict(an, a, b, mp, "bea_2_4");
  v4.relation = "==";
  v4.lhs = static_cast<std::int64_t>(o.membership_passes);
  v4.rhs = static_cast<std::int64_t>(o.minimal_normals);
  v4.display = std::to_string(v4.lhs) + " of " + std::to_string(v4.rhs) +
               " minimal normal N satisfy A meet N, B meet N in {1, N} and the centralizer condition";
  if (o.membership_failure) v4.witness.push_back("fails for N = " + describe(l, *o.membership_failure));
  settle(v4);
  out.push_back(std::move(v4));

  BoundVerdict v5 = suite_verdict(an, a, b, mp, "bea_2_5");
  v5.relation = "==";
  v5.lhs = static_cast<std::int64_t>(o.intersection_passes);
  v5.rhs = static_cast<std::int64_t>(o.intersection_tested);
  v5.display = std::to_string(v5.lhs) + " of " + std::to_string(v5.rhs) +
               " sampled U give (A meet U)(B meet U) mutually permutable, normal when U is";
  if (o.intersection_tested < l.size()) {
    v5.witness.push_back("sampled " + std::to_string(o.intersection_tested) + " of " + std::to_string(l.size()) +
                         " subgroups");
  }
  if (o.intersection_failure) v5.witness.push_back("fails for U = " + describe(l, *o.intersection_failure));
  settle(v5);
  out.push_back(std::move(v5));
  return out;
}

std::vector<BoundVerdict> product_lemma_suite(const ProductAnalyzer& an, std::size_t a, std::size_t b,
                                          const LemmaSuiteOptions& options) {
  bool mp = an.covers(a, b) && an.mutually_permutable(a, b);
  LemmaSuiteOutcome o = mp ? an.lemma_suite(a, b, options) : LemmaSuiteOutcome{};
  return render_lemma_suite(an, a, b, mp, o);
}

std::vector<BoundVerdict> product_lemma_suite(const Group& g, const Subgroup& a, const Subgroup& b,
                                          const LemmaSuiteOptions& options) {
  ProductAnalyzer an(g);
  return product_lemma_suite(an, index_in(an.lattice(), inside(g, a)), index_in(an.lattice(), inside(g, b)), options);
}

BoundVerdict check_split_extension_index(const Group& g, const Subgroup& a_in, const Subgroup& h_in, std::uint64_t q) {
  Subgroup a = inside(g, a_in);
  Subgroup h = inside(g, h_in);
  BoundVerdict v;
  v.claim_id = "lemma_2_6";
  v.group = g.name();
  v.relation = "==";
  v.inputs = {{"A_order", a.order()}, {"H_order", h.order()}, {"q", q}};

  auto a_primes = prime_divisors(a.order());
  std::uint64_t p = a_primes.empty() ? 0 : a_primes.front();
  Subgroup meet = intersection(a, h);
  v.preconditions.push_back({"A normal in G", a.is_normal(), ""});
  v.preconditions.push_back({"A is a p-group", a_primes.size() <= 1,
                             a_primes.empty() ? "A trivial" : "p = " + std::to_string(p)});
  v.preconditions.push_back({"q prime, q != p", is_prime(q) && q != p, "q = " + std::to_string(q)});
  v.preconditions.push_back({"G = AH", a.order() * h.order() == g.order() * meet.order(), ""});
  v.preconditions.push_back({"A meet H = 1", meet.is_trivial(), ""});
  if (p != 0) v.inputs["p"] = p;
  if (!v.preconditions_met()) {
    v.display = "preconditions not met";
    return v;
  }

  Subgroup q_in_h = sylow_subgroup(h.group(), q);
  Subgroup q_sub = inside(g, q_in_h);
  Subgroup n_h = normalizer(h.group(), q_in_h);
  Subgroup n_g = normalizer(g, q_sub);
  Subgroup a_n = join(a, n_g);
  v.lhs = static_cast<std::int64_t>(h.order() / n_h.order());
  v.rhs = static_cast<std::int64_t>(g.order() / a_n.order());
  v.display = "|H : N_H(Q)| = " + std::to_string(v.lhs) + ", |G : A N_G(Q)| = " + std::to_string(v.rhs);
  v.witness.push_back("|Q| = " + std::to_string(q_sub.order()) + ", |N_H(Q)| = " + std::to_string(n_h.order()) +
                      ", |N_G(Q)| = " + std::to_string(n_g.order()) + ", |A N_G(Q)| = " + std::to_string(a_n.order()));
  v.holds = v.relation_holds();
  return v;
}

}  // namespace sylowlens
