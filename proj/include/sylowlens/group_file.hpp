#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>
#include "sylowlens/group.hpp"

namespace sylowlens {

// On-disk description of a permutation group:
//
//   {"name": "S3", "degree": 3, "generators": [[1,0,2], "(0 1 2)"],
//    "metadata": {...}}
//
// Generators may be 0-based image arrays or cycle-notation strings on input;
// they are always emitted as image arrays.
struct GroupSpec {
  std::string name;
  std::size_t degree = 1;
  std::vector<Perm> generators;
  nlohmann::json metadata;  // null when absent

  Group to_group() const;
  static GroupSpec from_group(const Group& g);
};

// Throws Error(Parse) with a line/column or field path in the message.
GroupSpec parse_group_file(std::string_view bytes);
std::string emit_group_file(const GroupSpec& spec);

GroupSpec load_group_file(const std::string& path);

}  // namespace sylowlens
