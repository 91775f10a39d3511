#pragma once

// Claim records and their json-lines / text rendering.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hv {

enum class ClaimStatus { Pass, Fail, Informational, Skipped };

std::string_view to_string(ClaimStatus status);

struct ClaimRecord {
  std::string claim_id;
  std::string anchor;
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::Informational;
};

inline ClaimRecord make_claim(std::string id, std::string anchor, std::string expected, std::string computed, bool ok) {
  return {std::move(id), std::move(anchor), std::move(expected), std::move(computed),
          ok ? ClaimStatus::Pass : ClaimStatus::Fail};
}

struct ReportSummary {
  int pass = 0;
  int fail = 0;
  int informational = 0;
  int skipped = 0;
};

ReportSummary summarize(const std::vector<ClaimRecord>& records);

enum class ReportFormat { JsonLines, Text };

/// json-lines: one object per record with keys in the order
/// claim_id, paper_anchor, expected, computed, status.
/// text: records grouped by the claim-id prefix before the first '.'.
void emit(std::ostream& out, const std::vector<ClaimRecord>& records, ReportFormat format);
std::string emit(const std::vector<ClaimRecord>& records, ReportFormat format);

}  // namespace hv
