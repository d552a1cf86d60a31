#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sylowlens/group.hpp"

namespace sylowlens {

enum class Family {
  Symmetric,           // (n)
  Alternating,         // (n)
  Cyclic,              // (n)
  Dihedral,            // (order 2n)
  ElementaryAbelian,   // (p, k)
  Affine,              // (p, d): x -> ax + b over Z/p with a of order d
  Dicyclic,            // (order 4n), regular action from a multiplication table
  GeneralizedDihedral, // (n, k): (C_n)^k extended by inversion
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

// Builds a member of a parameterized family with deterministic generators.
// Throws Error(Unsupported) for parameters outside the supported range.
Group construct_named(Family family, std::span<const std::uint64_t> params);

Group symmetric(std::size_t n);
Group alternating(std::size_t n);
Group cyclic(std::size_t n);
// Dihedral group of the given order (2n), acting on n points for n >= 3.
Group dihedral(std::size_t order);
Group elementary_abelian(std::uint64_t p, std::size_t k);
Group affine(std::uint64_t p, std::uint64_t d);
Group dicyclic(std::size_t order);
Group generalized_dihedral(std::size_t n, std::size_t k);

// Factors act on disjoint blocks of points, in order.
Group direct_product(std::span<const Group> factors);
Group direct_product(const Group& a, const Group& b);

// Any group handed over as explicit generators (e.g. a semidirect product
// written out by hand).
Group semidirect_from_generators(std::size_t degree, std::vector<Perm> generators,
                                 std::string name);

// Right regular representation of the group with Cayley table
// table[a][b] = a*b. Throws Error(Precondition) unless the table is a group
// (closed, associative, with identity and inverses).
Group regular_from_multiplication_table(const std::vector<std::vector<std::uint32_t>>& table,
                                        std::string name = {});

}  // namespace sylowlens
