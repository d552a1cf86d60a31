#include "sylowlens/report.hpp"

#include "sylowlens/error.hpp"

namespace sylowlens {

namespace {

nlohmann::json summary_json(const ReportSummary& s) {
  return {{"entries", s.entries}, {"checked", s.checked}, {"held", s.held}, {"failed", s.failed},
          {"precondition_failed", s.precondition_failed}, {"errors", s.errors}};
}

nlohmann::json verdict_list(const std::vector<BoundVerdict>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (const BoundVerdict& v : vs) out.push_back(to_json(v));
  return out;
}

std::vector<BoundVerdict> read_list(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw Error(ErrorKind::Parse, std::string("report: missing array '") + field + "'");
  }
  std::vector<BoundVerdict> out;
  for (const auto& v : j[field]) out.push_back(verdict_from_json(v));
  return out;
}

}  // namespace

ReportSummary summarize(std::span<const BoundVerdict> verdicts) {
  ReportSummary s;
  for (const BoundVerdict& v : verdicts) {
    ++s.entries;
    if (v.error) {
      s.errors += v.instances;
      continue;
    }
    if (v.holds) {
      s.checked += v.instances;
      (*v.holds ? s.held : s.failed) += v.instances;
    } else if (!v.preconditions_met()) {
      s.precondition_failed += v.instances;
    }
  }
  return s;
}

nlohmann::json to_json(const Report& report) {
  return {{"report_version", kReportVersion},
          {"tool_version", report.tool_version},
          {"corpus", report.corpus},
          {"summary", summary_json(report.summary())},
          {"verdicts", verdict_list(report.verdicts)},
          {"equality_instances", verdict_list(report.equality_instances)},
          {"near_tight_instances", verdict_list(report.near_tight_instances)}};
}

std::string emit_report(const Report& report) { return to_json(report).dump(2) + "\n"; }

Report parse_report(std::string_view bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("report: ") + e.what());
  }
  if (!j.is_object() || j.value("report_version", 0) != kReportVersion) {
    throw Error(ErrorKind::Parse, "report: expected report_version 1");
  }
  Report r;
  r.tool_version = j.value("tool_version", "");
  r.corpus = j.value("corpus", nlohmann::json::object());
  r.verdicts = read_list(j, "verdicts");
  r.equality_instances = read_list(j, "equality_instances");
  r.near_tight_instances = read_list(j, "near_tight_instances");
  if (!j.contains("summary") || j["summary"] != summary_json(r.summary())) {
    throw Error(ErrorKind::Parse, "report: summary does not match the verdict list");
  }
  return r;
}

}  // namespace sylowlens
