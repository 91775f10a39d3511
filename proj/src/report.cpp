#include "hv/report.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace hv {

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Pass:
      return "pass";
    case ClaimStatus::Fail:
      return "fail";
    case ClaimStatus::Informational:
      return "informational";
    case ClaimStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

ReportSummary summarize(const std::vector<ClaimRecord>& records) {
  ReportSummary s;
  for (const auto& r : records) {
    switch (r.status) {
      case ClaimStatus::Pass:
        ++s.pass;
        break;
      case ClaimStatus::Fail:
        ++s.fail;
        break;
      case ClaimStatus::Informational:
        ++s.informational;
        break;
      case ClaimStatus::Skipped:
        ++s.skipped;
        break;
    }
  }
  return s;
}

namespace {

std::string group_of(const std::string& id) { return id.substr(0, id.find('.')); }

void emit_json(std::ostream& out, const std::vector<ClaimRecord>& records) {
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["claim_id"] = r.claim_id;
    j["paper_anchor"] = r.anchor;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["status"] = std::string(to_string(r.status));
    out << j.dump() << '\n';
  }
}

void emit_text(std::ostream& out, const std::vector<ClaimRecord>& records) {
  std::string current;
  for (const auto& r : records) {
    const std::string group = group_of(r.claim_id);
    if (group != current) {
      if (!current.empty()) out << '\n';
      out << "== " << group << " ==\n";
      current = group;
    }
    out << "[" << to_string(r.status) << "] " << r.claim_id << "  (" << r.anchor << ")\n";
    out << "    expected: " << r.expected << "\n";
    out << "    computed: " << r.computed << "\n";
  }
  if (records.empty()) return;
  const ReportSummary s = summarize(records);
  out << "\n" << records.size() << " claims: " << s.pass << " pass, " << s.fail << " fail, " << s.informational
      << " informational, " << s.skipped << " skipped\n";
}

}  // namespace

void emit(std::ostream& out, const std::vector<ClaimRecord>& records, ReportFormat format) {
  if (format == ReportFormat::JsonLines)
    emit_json(out, records);
  else
    emit_text(out, records);
}

std::string emit(const std::vector<ClaimRecord>& records, ReportFormat format) {
  std::ostringstream os;
  emit(os, records, format);
  return os.str();
}

}  // namespace hv
