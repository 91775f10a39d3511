#include "hv/partitions.hpp"

#include <doctest.h>

#include <set>

using namespace hv;

namespace {

/// Coin-change count of partitions, independent of the pentagonal recurrence.
std::vector<long long> dp_partitions(int n) {
  std::vector<long long> ways(static_cast<size_t>(n + 1), 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k) ways[static_cast<size_t>(k)] += ways[static_cast<size_t>(k - part)];
  return ways;
}

}  // namespace

TEST_CASE("partitions: p(n) against the coin-change count") {
  const auto ways = dp_partitions(120);
  for (int n = 0; n <= 120; ++n) CHECK(partition_count(n) == BigCount(ways[static_cast<size_t>(n)]));
  CHECK(partition_count(-1) == 0);
}

TEST_CASE("partitions: type D counts from pairs") {
  const auto ways = dp_partitions(60);
  auto p = [&](int k) { return ways[static_cast<size_t>(k)]; };
  for (int n = 4; n <= 60; ++n) {
    long long ordered = 0;
    for (int k = 0; k <= n; ++k) ordered += p(k) * p(n - k);
    const long long diagonal = n % 2 == 0 ? p(n / 2) : 0;
    CHECK(ordered_pairs(n) == BigCount(ordered));
    CHECK(typeD_count(n) == BigCount((ordered + diagonal) / 2 + diagonal));
  }
}

TEST_CASE("partitions: comparison bound") {
  CHECK(typeD_bound(4) == 16);
  CHECK(typeD_bound(5) == 32);
  CHECK(typeD_bound(10) == 16 * 27);
  CHECK(typeD_bound(11) == 32 * 27);
}

TEST_CASE("partitions: enumeration") {
  std::set<Partition> seen;
  for_each_partition(9, [&](const Partition& a) {
    CHECK(is_partition(a));
    CHECK(weight(a) == 9);
    seen.insert(a);
  });
  CHECK(seen.size() == 30);
  CHECK(format_partition({3, 2, 2}) == "(3,2,2)");
  CHECK_FALSE(is_partition({1, 2}));
}

TEST_CASE("partitions: ranks are a bijection onto [0, p(n))") {
  for (int n : {6, 10}) {
    std::set<long long> ranks;
    for_each_partition(n, [&](const Partition& a) { ranks.insert(partition_rank(a)); });
    CHECK(static_cast<long long>(ranks.size()) == static_cast<long long>(partition_count(n)));
    CHECK(*ranks.begin() == 0);
    CHECK(*ranks.rbegin() == static_cast<long long>(partition_count(n)) - 1);
  }
}

TEST_CASE("partitions: tau maps into partitions of n - 2 injectively") {
  for (int n = 8; n <= 20; ++n) {
    CAPTURE(n);
    const TauCheck t = check_tau(n);
    CHECK(t.injective);
    CHECK(t.well_defined);
    CHECK(t.domain_size == t.image_size);
  }
  CHECK_THROWS_AS(tau({5, 1}, 8), TauDomainError);
}

TEST_CASE("partitions: inequalities") {
  for (const auto& c : check_inequalities(120, 24)) {
    CAPTURE(c.name);
    CHECK(c.holds);
  }
  CHECK_THROWS_AS(check_inequalities(5), std::invalid_argument);
}
