#include "sylowlens/verdict.hpp"

#include <algorithm>

#include "sylowlens/error.hpp"
#include "sylowlens/sylow.hpp"

namespace sylowlens {

bool BoundVerdict::preconditions_met() const {
  return std::all_of(preconditions.begin(), preconditions.end(), [](const Condition& c) { return c.met; });
}

bool BoundVerdict::relation_holds() const {
  if (relation == "<=") return lhs <= rhs;
  if (relation == "==") return lhs == rhs;
  if (relation == ">") return lhs > rhs;
  if (relation == "=>") return lhs == 0 || rhs != 0;
  if (relation == "hall") return lhs >= 1 && rhs >= 2 && hall_admissible(static_cast<std::uint64_t>(lhs), static_cast<std::uint64_t>(rhs));
  throw Error(ErrorKind::Unsupported, "unknown relation '" + relation + "'");
}

nlohmann::json to_json(const BoundVerdict& v) {
  nlohmann::json pre = nlohmann::json::array();
  for (const Condition& c : v.preconditions) {
    pre.push_back({{"name", c.name}, {"met", c.met}, {"detail", c.detail}});
  }
  nlohmann::json j = {
      {"claim_id", v.claim_id},
      {"group", v.group},
      {"inputs", v.inputs},
      {"relation", v.relation},
      {"lhs", v.lhs},
      {"rhs", v.rhs},
      {"preconditions", pre},
      {"preconditions_met", v.preconditions_met()},
      {"holds", v.holds ? nlohmann::json(*v.holds) : nlohmann::json(nullptr)},
      {"display", v.display},
      {"witness", v.witness},
      {"instances", v.instances},
  };
  if (v.error) j["error"] = *v.error;
  return j;
}

BoundVerdict verdict_from_json(const nlohmann::json& j) {
  try {
    BoundVerdict v;
    v.claim_id = j.at("claim_id").get<std::string>();
    v.group = j.at("group").get<std::string>();
    v.inputs = j.at("inputs");
    v.relation = j.at("relation").get<std::string>();
    v.lhs = j.at("lhs").get<std::int64_t>();
    v.rhs = j.at("rhs").get<std::int64_t>();
    for (const auto& c : j.at("preconditions")) {
      v.preconditions.push_back(
          {c.at("name").get<std::string>(), c.at("met").get<bool>(), c.at("detail").get<std::string>()});
    }
    if (!j.at("holds").is_null()) v.holds = j.at("holds").get<bool>();
    v.display = j.at("display").get<std::string>();
    v.witness = j.at("witness").get<std::vector<std::string>>();
    v.instances = j.at("instances").get<std::uint64_t>();
    if (j.contains("error")) v.error = j.at("error").get<std::string>();
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("verdict: ") + e.what());
  }
}

}  // namespace sylowlens
