#include "hv/report.hpp"
#include "hv/verify.hpp"

#include <doctest.h>

#include <set>

using namespace hv;

TEST_CASE("report: empty and single records") {
  CHECK(emit({}, ReportFormat::JsonLines).empty());
  CHECK(emit({}, ReportFormat::Text).empty());
  const std::vector<ClaimRecord> one = {make_claim("X.y", "anchor", "1", "1", true)};
  const std::string line = emit(one, ReportFormat::JsonLines);
  CHECK(line == "{\"claim_id\":\"X.y\",\"paper_anchor\":\"anchor\",\"expected\":\"1\",\"computed\":\"1\",\"status\":\"pass\"}\n");
  const ReportSummary s = summarize(one);
  CHECK(s.pass == 1);
  CHECK(s.fail == 0);
}

TEST_CASE("config: parsing and validation") {
  const RunConfig c = parse_config(R"({"prime_bound": 120, "cases": ["E8.o16"], "format": "text", "jobs": 2})");
  CHECK(c.orbits.prime_bound == 120);
  CHECK(c.cases == std::vector<std::string>{"E8.o16"});
  CHECK(c.format == ReportFormat::Text);
  CHECK(c.jobs == 2);
  CHECK_THROWS_AS(parse_config("{\"dim_cap\": 0}"), ConfigError);
  CHECK_THROWS_AS(parse_config("{\"colour\": 1}"), ConfigError);
  CHECK_THROWS_AS(parse_config("{\"jobs\": \"many\"}"), ConfigError);
  CHECK_THROWS_AS(parse_config("[1, 2]"), ConfigError);
  CHECK_THROWS_AS(parse_config("{"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("verify: selection") {
  RunConfig c;
  c.cases = {"E8.o16"};
  CHECK(unit_ids(c) == std::vector<std::string>{"E8.o16"});
  c.cases = {"hecke"};
  CHECK(unit_ids(c).size() == 7);
  c.cases = {"Z9.o1"};
  CHECK_THROWS_AS(unit_ids(c), ConfigError);
  CHECK(slug("theta_x theta_{-x} = 1") == "theta_x_theta_x_1");
}

TEST_CASE("verify: deterministic across job counts") {
  RunConfig c;
  c.cases = {"partitions", "weyl.E6", "hecke.lengths", "torus.G2", "D7.o9"};
  const auto serial = emit(verify_all(c), ReportFormat::JsonLines);
  c.jobs = 3;
  const auto parallel = emit(verify_all(c), ReportFormat::JsonLines);
  CHECK(serial == parallel);
  CHECK_FALSE(serial.empty());
}

TEST_CASE("verify: a record selector keeps only that record") {
  RunConfig c;
  c.cases = {"weyl.E6.valid_orders"};
  const auto records = verify_all(c);
  REQUIRE(records.size() == 1);
  CHECK(records[0].status == ClaimStatus::Pass);
}

TEST_CASE("verify: a small prime bound skips E8 o(q) = 29") {
  RunConfig c;
  c.orbits.prime_bound = 100;
  c.cases = {"E8.o29"};
  const auto records = verify_all(c);
  REQUIRE_FALSE(records.empty());
  for (const auto& r : records) {
    CAPTURE(r.claim_id);
    CHECK(r.status == ClaimStatus::Skipped);
    CHECK(r.computed.find("admissible primes") != std::string::npos);
  }
}
