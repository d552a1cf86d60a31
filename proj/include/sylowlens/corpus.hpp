#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>
#include "sylowlens/group.hpp"
#include "sylowlens/named.hpp"

namespace sylowlens {

// Every named family, in generation order.
std::vector<Family> all_families();

// Members of the chosen families with order at most `max_order`, plus the
// direct products of two nontrivial members that stay within the bound.
// Groups sharing a fingerprint (see below) are kept once, first one wins.
// Sorted by order, then generation order, so the output is deterministic.
// Not isomorphism-complete.
std::vector<Group> build_corpus(std::uint64_t max_order, std::span<const Family> families);
std::vector<Group> build_corpus(std::uint64_t max_order);

// Isomorphism invariants used for deduplication: order, abelian flag,
// element-order histogram, centre and derived subgroup orders, and the
// numbers of subgroups and normal subgroups.
std::vector<std::uint64_t> fingerprint(const Group& g);

// The corpus definition as recorded in reports.
nlohmann::json describe_corpus(std::uint64_t max_order, std::span<const Family> families,
                               std::span<const Group> corpus);

}  // namespace sylowlens
