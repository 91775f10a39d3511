#pragma once

// Tabulated centralizer generators, q-eigenspace roots and submodule data for
// the exceptional cases and the D_n series, with checks against computation.
//
// Symbols: "a3" is the simple root alpha_3, a leading '-' negates, any other
// name refers to the case's symbol table (for D_n the names are epsilon
// expressions such as "-e2-e4").

#include "hv/nilorbits.hpp"
#include "hv/partitions.hpp"
#include "hv/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hv {

enum class BoundKind {
  /// Stated lower bound; pass iff the grouped product equals it.
  LowerBound,
  /// Stated exact count of the whole space.
  Exact,
  /// Not tabulated, only asserted to be at least the bound.
  AtLeast,
  /// No count is stated; computed values are reported only.
  None,
};

struct CaseModule {
  std::string name;
  std::vector<std::string> elements;
};

/// Modules counted jointly and the stated count of their sum.
struct CaseGroup {
  std::vector<std::string> modules;
  long long expected = 0;
  /// Vectors with coefficient 1 on each listed symbol, e.g. {"a1", "-eta2"};
  /// stated to lie in pairwise distinct orbits.
  std::vector<std::vector<std::string>> representatives;

  std::string label() const;
};

/// A tabulated reading corrected before comparison.
struct Erratum {
  std::string item;  // "generators", "roots" or "decomposition"
  std::string note;
};

struct OrbitCase {
  std::string id;  // "E8.o16", "D7.o9"
  RootSystemType type;
  int order = 0;
  std::string anchor;
  std::map<std::string, Root> symbols;

  bool has_lists = true;
  std::vector<std::string> generators;  // one of each pair +-gamma
  std::vector<std::string> nonsimple;
  std::vector<CaseModule> modules;

  /// Joint groups with stated counts. When empty, each computed component is
  /// counted alone and the multiset of counts is compared to component_counts.
  std::vector<CaseGroup> groups;
  std::vector<long long> component_counts;

  BoundKind bound_kind = BoundKind::None;
  long long bound = 0;
  std::vector<Erratum> errata;
  bool extrapolated = false;
};

std::vector<OrbitCase> exceptional_cases();
/// Tabulated data for D_n, o(q) = m = n + i with n - i odd, 1 <= i <= n - 3.
OrbitCase d_series_case(int n, int m);
/// Exceptional cases followed by D_n for 4 <= n <= d_max and every valid order.
std::vector<OrbitCase> all_cases(int d_max = 12);
std::optional<OrbitCase> find_case(std::string_view id, int d_max = 12);

Root resolve_symbol(const RootSystem& rs, const OrbitCase& c, std::string_view symbol);
/// Symbol for a root when the table names it, else its coefficients.
std::string name_root(const RootSystem& rs, const OrbitCase& c, const Root& r);

struct GroupCount {
  std::string label;
  long long expected = 0;
  OrbitCount count;
};

struct CaseBound {
  BigCount product = 1;
  std::vector<GroupCount> groups;
  /// Joint count of the whole space, for stated exact counts.
  std::optional<OrbitCount> whole;
  /// False if any group was refused or unstable, or a group is not a submodule.
  bool complete = true;
  /// Some count needs more admissible primes than the prime bound allows.
  bool prime_shortage = false;
  std::string note;
};

/// Product of orbit counts over the case's grouping.
CaseBound case_bound(const OrbitCase& c, const OrbitConfig& config = {});

/// Records <id>.generators, .roots, .decomposition, .orbits, .bound for cases
/// with lists; cases without lists give a single count record.
std::vector<ClaimRecord> verify_case(const OrbitCase& c, const OrbitConfig& config = {});

}  // namespace hv
