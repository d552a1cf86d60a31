#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>
#include "sylowlens/verdict.hpp"

namespace sylowlens {

// Counts weighted by `instances`, except `entries` (verdict objects).
struct ReportSummary {
  std::uint64_t entries = 0;
  std::uint64_t checked = 0;              // holds defined
  std::uint64_t held = 0;
  std::uint64_t failed = 0;
  std::uint64_t precondition_failed = 0;  // no error, some precondition unmet
  std::uint64_t errors = 0;
  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

ReportSummary summarize(std::span<const BoundVerdict> verdicts);

struct Report {
  std::string tool_version = SYLOWLENS_VERSION;
  nlohmann::json corpus = nlohmann::json::object();
  std::vector<BoundVerdict> verdicts;
  std::vector<BoundVerdict> equality_instances;
  std::vector<BoundVerdict> near_tight_instances;

  ReportSummary summary() const { return summarize(verdicts); }
  // 0 when nothing failed, 1 otherwise.
  int exit_code() const { return summary().failed == 0 ? 0 : 1; }
};

inline constexpr int kReportVersion = 1;

nlohmann::json to_json(const Report& report);
// Pretty-printed JSON with a trailing newline.
std::string emit_report(const Report& report);
// Throws Error(Parse) on malformed input, a different report_version, or a
// summary that does not match a recount of the verdicts.
Report parse_report(std::string_view bytes);

}  // namespace sylowlens
