#pragma once

// Partition counts p(n), pair counts for types B/C/D, and the injection
// tau : Q_{n,>=2} u Q_{n-1,>=2} -> Q_{n-2} behind p(n) <= 2 p(n-2).

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hv {

using BigCount = boost::multiprecision::cpp_int;

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// p(n) by the pentagonal recurrence; p(0) = 1, p(n) = 0 for n < 0.
BigCount partition_count(int n);

/// sum_{i=0}^{n} p(i) p(n-i).
BigCount ordered_pairs(int n);

/// Unordered pairs of partitions of total weight n, equal pairs counted
/// twice (the number of irreducible characters of W(D_n)). n >= 4.
BigCount typeD_count(int n);

/// 2^4 3^{(n-4)/2} (n even) or 2^5 3^{(n-5)/2} (n odd). n >= 4.
BigCount typeD_bound(int n);

bool is_partition(const Partition& a);
int weight(const Partition& a);
std::string format_partition(const Partition& a);

/// Calls fn on every partition of n (parts in decreasing order).
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

class TauDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct TauResult {
  Partition image;
  std::string branch;
  /// True when the raw formula produced a non-decreasing or zero part and the
  /// parts were re-sorted (only the two-part branch at n = 8, 9).
  bool normalized = false;
};

/// tau(A) for A a partition of n or n-1 with smallest part >= 2; n >= 8.
TauResult tau(const Partition& a, int n);

/// Position of a partition of weight(a) in the reverse-lexicographic order.
long long partition_rank(const Partition& a);

struct InequalityCheck {
  std::string name;
  int from = 0;
  int to = 0;
  bool holds = true;
  std::optional<int> counterexample;
  std::string detail;
};

struct TauCheck {
  int n = 0;
  long long domain_size = 0;
  long long image_size = 0;
  bool injective = true;
  bool well_defined = true;
  long long normalized_cases = 0;
};

/// All inequalities of the p(n) <= 2p(n-2) / D(n) > P(n) argument, exactly.
/// tau_max bounds the exhaustive injectivity check (capped at range_max).
std::vector<InequalityCheck> check_inequalities(int range_max, int tau_max = 60);

TauCheck check_tau(int n);

}  // namespace hv
