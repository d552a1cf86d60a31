#include "sylowlens/group.hpp"
#include "sylowlens/error.hpp"

#include <algorithm>
#include <mutex>

namespace sylowlens {

ElementIndex::ElementIndex(std::vector<Perm> sorted_elements)
    : elements_(std::move(sorted_elements)) {
  lookup_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    lookup_.emplace(elements_[i], static_cast<std::uint32_t>(i));
  }
}

std::size_t ElementIndex::find(const Perm& x) const {
  auto it = lookup_.find(x);
  return it == lookup_.end() ? elements_.size() : it->second;
}

struct Group::Cache {
  std::once_flag chain_once;
  std::unique_ptr<StabChain> chain;
  std::once_flag elements_once;
  std::unique_ptr<ElementIndex> elements;
  std::mutex lattice_mutex;
  std::shared_ptr<const SubgroupLattice> lattice;
};

Group::Group(std::size_t degree, std::vector<Perm> generators, std::string name)
    : degree_(degree),
      generators_(std::move(generators)),
      name_(std::move(name)),
      cache_(std::make_shared<Cache>()) {
  if (degree_ == 0) throw Error(ErrorKind::Precondition, "group degree must be at least 1");
  for (const Perm& g : generators_) {
    if (g.degree() != degree_) {
      throw Error(ErrorKind::DegreeMismatch,
                  "generator of degree " + std::to_string(g.degree()) +
                      " in a group of degree " + std::to_string(degree_));
    }
  }
}

Group Group::trivial(std::size_t degree, std::string name) {
  return Group(degree, {}, std::move(name));
}

Group Group::renamed(std::string name) const {
  Group copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

const StabChain& Group::chain() const {
  std::call_once(cache_->chain_once, [this] {
    cache_->chain = std::make_unique<StabChain>(degree_, generators_);
  });
  return *cache_->chain;
}

bool Group::contains(const Perm& x) const {
  if (x.degree() != degree_) {
    throw Error(ErrorKind::DegreeMismatch, "membership test with wrong degree");
  }
  return chain().contains(x);
}

const ElementIndex& Group::element_index() const {
  std::uint64_t n = order();
  if (n > enumeration_cap()) {
    throw Error(ErrorKind::CapExceeded,
                "group of order " + std::to_string(n) + " exceeds the enumeration cap " +
                    std::to_string(enumeration_cap()));
  }
  std::call_once(cache_->elements_once, [this] {
    std::vector<Perm> all = chain().elements();
    std::sort(all.begin(), all.end());
    cache_->elements = std::make_unique<ElementIndex>(std::move(all));
  });
  return *cache_->elements;
}

bool Group::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> Group::prime_divisors() const {
  return sylowlens::prime_divisors(order());
}

bool Group::same_as(const Group& other) const {
  if (shares_cache_with(other)) return true;
  if (degree_ != other.degree_ || order() != other.order()) return false;
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Perm& g) { return contains(g); });
}

std::shared_ptr<const SubgroupLattice> Group::cached_lattice() const {
  std::lock_guard lock(cache_->lattice_mutex);
  return cache_->lattice;
}

void Group::store_lattice(std::shared_ptr<const SubgroupLattice> lattice) const {
  std::lock_guard lock(cache_->lattice_mutex);
  if (!cache_->lattice) cache_->lattice = std::move(lattice);
}

Group group_from_generators(std::size_t degree, std::vector<Perm> generators, std::string name) {
  return Group(degree, std::move(generators), std::move(name));
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_pi_number(std::uint64_t n, std::span<const std::uint64_t> primes) {
  for (std::uint64_t q : prime_divisors(n)) {
    if (std::find(primes.begin(), primes.end(), q) == primes.end()) return false;
  }
  return true;
}

}  // namespace sylowlens
