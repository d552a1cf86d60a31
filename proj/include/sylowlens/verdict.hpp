#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace sylowlens {

// One precondition of a check, e.g. "condition (b): B is 2-nilpotent".
struct Condition {
  std::string name;
  bool met = false;
  std::string detail;
};

// Structured result of checking one claim on one instance.
//
// The comparison is `lhs relation rhs` over exact integers. Relations:
//   "<="  numeric bound            "=="  exact identity
//   ">"   strict lower bound       "=>"  implication between 0/1 values
//   "hall" every prime-power factor of lhs is 1 mod rhs
// `holds` is empty when a precondition failed. `instances` counts how many
// concrete instances a grouped verdict stands for (1 for a single check).
struct BoundVerdict {
  std::string claim_id;
  std::string group;
  nlohmann::json inputs = nlohmann::json::object();
  std::string relation = "<=";
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::vector<Condition> preconditions;
  std::optional<bool> holds;
  std::string display;
  std::vector<std::string> witness;
  std::uint64_t instances = 1;
  // Set when a computation raised instead of producing a verdict.
  std::optional<std::string> error;

  bool preconditions_met() const;
  // lhs == rhs with the claim holding; the tight cases of a bound.
  bool is_equality() const { return holds == true && lhs == rhs; }
  // lhs relation rhs evaluated from the stored integers.
  bool relation_holds() const;
};

nlohmann::json to_json(const BoundVerdict& v);
// Throws Error(Parse) on a malformed object.
BoundVerdict verdict_from_json(const nlohmann::json& j);

}  // namespace sylowlens
