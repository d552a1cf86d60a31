#include "sylowlens/named.hpp"
#include "sylowlens/error.hpp"

#include <array>
#include <numeric>

namespace sylowlens {

namespace {

Error unsupported(const std::string& what) { return Error(ErrorKind::Unsupported, what); }

Perm cycle_on(std::size_t degree, std::size_t start, std::size_t length) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < length; ++i) {
    images[start + i] = static_cast<Point>(start + (i + 1) % length);
  }
  return Perm(std::move(images));
}

std::uint64_t power_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1u) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  std::uint64_t k = 1;
  for (std::uint64_t x = a % p; x != 1; x = x * a % p) ++k;
  return k;
}

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::Symmetric, "symmetric"},
    {Family::Alternating, "alternating"},
    {Family::Cyclic, "cyclic"},
    {Family::Dihedral, "dihedral"},
    {Family::ElementaryAbelian, "elementary_abelian"},
    {Family::Affine, "affine"},
    {Family::Dicyclic, "dicyclic"},
    {Family::GeneralizedDihedral, "generalized_dihedral"},
}};

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (const auto& [family, n] : kFamilyNames) {
    if (n == name) return family;
  }
  return std::nullopt;
}

Group construct_named(Family family, std::span<const std::uint64_t> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw unsupported(std::string(to_string(family)) + " takes " + std::to_string(count) +
                        " parameter(s)");
    }
  };
  switch (family) {
    case Family::Symmetric: need(1); return symmetric(params[0]);
    case Family::Alternating: need(1); return alternating(params[0]);
    case Family::Cyclic: need(1); return cyclic(params[0]);
    case Family::Dihedral: need(1); return dihedral(params[0]);
    case Family::ElementaryAbelian: need(2); return elementary_abelian(params[0], params[1]);
    case Family::Affine: need(2); return affine(params[0], params[1]);
    case Family::Dicyclic: need(1); return dicyclic(params[0]);
    case Family::GeneralizedDihedral: need(2); return generalized_dihedral(params[0], params[1]);
  }
  throw unsupported("unknown family");
}

Group symmetric(std::size_t n) {
  if (n == 0) throw unsupported("symmetric(0)");
  std::string name = "S" + std::to_string(n);
  if (n == 1) return Group::trivial(1, name);
  if (n == 2) return Group(2, {cycle_on(2, 0, 2)}, name);
  return Group(n, {cycle_on(n, 0, n), cycle_on(n, 0, 2)}, name);
}

Group alternating(std::size_t n) {
  if (n == 0) throw unsupported("alternating(0)");
  std::string name = "A" + std::to_string(n);
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    images[0] = 1;
    images[1] = static_cast<Point>(i);
    images[i] = 0;
    gens.emplace_back(std::move(images));
  }
  return Group(n, std::move(gens), name);
}

Group cyclic(std::size_t n) {
  if (n == 0) throw unsupported("cyclic(0)");
  std::string name = "C" + std::to_string(n);
  if (n == 1) return Group::trivial(1, name);
  return Group(n, {cycle_on(n, 0, n)}, name);
}

Group dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0) throw unsupported("dihedral order must be even and >= 2");
  std::string name = "D" + std::to_string(order);
  const std::size_t n = order / 2;
  if (n == 1) return Group(2, {cycle_on(2, 0, 2)}, name);
  if (n == 2) {
    return Group(4, {Perm::from_cycles(4, "(0 1)(2 3)"), Perm::from_cycles(4, "(0 2)(1 3)")}, name);
  }
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return Group(n, {cycle_on(n, 0, n), Perm(std::move(reflection))}, name);
}

Group elementary_abelian(std::uint64_t p, std::size_t k) {
  if (!is_prime(p)) throw unsupported("elementary_abelian: p must be prime");
  std::string name = "C" + std::to_string(p) + "^" + std::to_string(k);
  if (k == 0) return Group::trivial(1, name);
  const std::size_t degree = static_cast<std::size_t>(p) * k;
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(cycle_on(degree, i * p, p));
  return Group(degree, std::move(gens), name);
}

Group affine(std::uint64_t p, std::uint64_t d) {
  if (!is_prime(p)) throw unsupported("affine: p must be prime");
  if (d == 0 || (p - 1) % d != 0) throw unsupported("affine: d must divide p - 1");
  std::uint64_t root = 1;
  if (p > 2) {
    for (root = 2; multiplicative_order(root, p) != p - 1; ++root) {
    }
  }
  const std::uint64_t a = power_mod(root, (p - 1) / d, p);
  std::vector<Point> scale(p);
  for (std::uint64_t x = 0; x < p; ++x) scale[x] = static_cast<Point>(x * a % p);
  std::string name = d == p - 1 ? "AGL(1," + std::to_string(p) + ")"
                                : "C" + std::to_string(p) + ":C" + std::to_string(d);
  std::vector<Perm> gens{cycle_on(p, 0, p)};
  if (d > 1) gens.emplace_back(std::move(scale));
  return Group(p, std::move(gens), name);
}

Group dicyclic(std::size_t order) {
  if (order < 8 || order % 4 != 0) throw unsupported("dicyclic order must be a multiple of 4, >= 8");
  const std::size_t n = order / 4;
  const std::size_t m = 2 * n;  // order of a
  // Element a^i x^j has index i + m*j.
  std::vector<std::vector<std::uint32_t>> table(order, std::vector<std::uint32_t>(order));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          std::size_t exponent;
          std::size_t xs;
          if (j == 0) {
            exponent = (i + k) % m;
            xs = l;
          } else if (l == 0) {
            exponent = (i + m - k) % m;
            xs = 1;
          } else {
            exponent = (i + m - k + n) % m;
            xs = 0;
          }
          table[i + m * j][k + m * l] = static_cast<std::uint32_t>(exponent + m * xs);
        }
      }
    }
  }
  std::string name = order == 8 ? "Q8" : "Dic" + std::to_string(order);
  return regular_from_multiplication_table(table, name);
}

Group generalized_dihedral(std::size_t n, std::size_t k) {
  if (n < 3 || k == 0) throw unsupported("generalized_dihedral needs n >= 3 and k >= 1");
  const std::size_t degree = n * k;
  std::vector<Perm> gens;
  std::vector<Point> inversion(degree);
  for (std::size_t b = 0; b < k; ++b) {
    gens.push_back(cycle_on(degree, b * n, n));
    for (std::size_t i = 0; i < n; ++i) {
      inversion[b * n + i] = static_cast<Point>(b * n + (n - i) % n);
    }
  }
  gens.emplace_back(std::move(inversion));
  std::string base = "C" + std::to_string(n) + (k > 1 ? "^" + std::to_string(k) : "");
  return Group(degree, std::move(gens), "Dih(" + base + ")");
}

Group direct_product(std::span<const Group> factors) {
  if (factors.empty()) return Group::trivial(1, "1");
  std::size_t degree = 0;
  for (const Group& f : factors) degree += f.degree();
  std::vector<Perm> gens;
  std::string name;
  std::size_t offset = 0;
  for (const Group& f : factors) {
    for (const Perm& g : f.generators()) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::size_t i = 0; i < f.degree(); ++i) {
        images[offset + i] = static_cast<Point>(offset + g[static_cast<Point>(i)]);
      }
      gens.emplace_back(std::move(images));
    }
    offset += f.degree();
    if (!name.empty()) name += " x ";
    name += f.name().empty() ? "?" : f.name();
  }
  return Group(degree, std::move(gens), name);
}

Group direct_product(const Group& a, const Group& b) {
  const Group both[2] = {a, b};
  return direct_product(std::span<const Group>(both));
}

Group semidirect_from_generators(std::size_t degree, std::vector<Perm> generators,
                                 std::string name) {
  return Group(degree, std::move(generators), std::move(name));
}

Group regular_from_multiplication_table(const std::vector<std::vector<std::uint32_t>>& table,
                                        std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::Precondition, "empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::Precondition, "multiplication table is not square");
    for (std::uint32_t v : row) {
      if (v >= n) throw Error(ErrorKind::Precondition, "multiplication table entry out of range");
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::Precondition, "multiplication table has no identity");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorKind::Precondition, "multiplication table is not associative");
        }
      }
    }
  }
  std::vector<Perm> gens;
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = table[x][g];
    // Fails (InvalidPermutation) when some element has no inverse.
    Perm right(std::move(images));
    gens.push_back(std::move(right));
  }
  // Keep a short generating set.
  std::vector<Perm> reduced;
  Group span = Group::trivial(n);
  for (const Perm& g : gens) {
    if (g.is_identity() || span.contains(g)) continue;
    reduced.push_back(g);
    span = Group(n, reduced);
  }
  return Group(n, std::move(reduced), std::move(name));
}

}  // namespace sylowlens
