#pragma once

// The full verification run: every computational ingredient bound to a claim id.

#include "hv/nilorbits.hpp"
#include "hv/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hv {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  OrbitConfig orbits;
  long long weyl_budget = 10'000'000;
  int hecke_rank_cap = 2;
  int hecke_radius = 2;
  /// Largest D_n in the case sweep.
  int d_max = 12;
  int partition_range = 500;
  int tau_max = 60;
  /// Claim-id prefixes ("E8.o16", "weyl", "hecke.A2"); empty runs everything.
  std::vector<std::string> cases;
  ReportFormat format = ReportFormat::JsonLines;
  int jobs = 1;

  /// Throws ConfigError on a non-positive cap.
  void validate() const;
};

/// Keys: prime_bound, min_primes, dim_cap, label_budget, weyl_budget,
/// hecke_rank_cap, hecke_radius, d_max, partition_range, tau_max, cases,
/// format ("json" or "text"), jobs. Unknown keys are errors.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text, RunConfig base = {});

/// Ids of the independent work units in report order.
std::vector<std::string> unit_ids(const RunConfig& config);

/// Units run on config.jobs threads; records come back in unit order.
/// Throws ConfigError when a selector matches nothing.
std::vector<ClaimRecord> verify_all(const RunConfig& config);

/// Lowercase alphanumerics joined by '_'.
std::string slug(const std::string& text);

}  // namespace hv
