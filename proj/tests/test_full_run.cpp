#include "hv/verify.hpp"

#include <doctest.h>

#include <set>

using namespace hv;

namespace {

const std::vector<ClaimRecord>& full_run() {
  static const std::vector<ClaimRecord> records = verify_all(RunConfig{});
  return records;
}

}  // namespace

TEST_CASE("full run: record count, ids and anchors") {
  const auto& records = full_run();
  CHECK(records.size() >= 80);
  std::set<std::string> ids;
  for (const auto& r : records) {
    CAPTURE(r.claim_id);
    CHECK(ids.insert(r.claim_id).second);
    CHECK_FALSE(r.anchor.empty());
    if (r.status != ClaimStatus::Informational) {
      CHECK_FALSE(r.expected.empty());
      CHECK_FALSE(r.computed.empty());
    }
  }
}

TEST_CASE("full run: re-emitting is byte-identical") {
  const auto& records = full_run();
  CHECK(emit(records, ReportFormat::JsonLines) == emit(records, ReportFormat::JsonLines));
}

TEST_CASE("full run: E8 o(q) = 16 selection") {
  RunConfig c;
  c.cases = {"E8.o16"};
  const auto records = verify_all(c);
  CHECK(records.size() == 5);
  std::vector<ClaimRecord> from_full;
  for (const auto& r : full_run())
    if (r.claim_id.rfind("E8.o16.", 0) == 0) from_full.push_back(r);
  CHECK(emit(records, ReportFormat::JsonLines) == emit(from_full, ReportFormat::JsonLines));
}

TEST_CASE("full run: default configuration has no failing claims") {
  std::vector<std::string> failing;
  for (const auto& r : full_run())
    if (r.status == ClaimStatus::Fail) failing.push_back(r.claim_id);
  std::string list;
  for (const auto& id : failing) list += id + " ";
  INFO("failing claims: " << list);
  CHECK(failing.empty());
}
