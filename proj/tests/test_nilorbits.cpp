#include "hv/case_table.hpp"
#include "hv/nilorbits.hpp"

#include <doctest.h>

#include <set>

using namespace hv;

TEST_CASE("nilorbits: admissible primes") {
  CHECK(admissible_primes(7, 100) == std::vector<int>{29, 43, 71});
  CHECK(admissible_primes(17, 100).empty());
  CHECK(admissible_primes(4, 20) == std::vector<int>{5, 13, 17});
}

TEST_CASE("nilorbits: eigenspace for E6 o(q) = 7") {
  const RootSystem rs(RootSystemType::parse("E6"));
  const auto sc = structure_constants(rs);
  const NilModule nm = build_nqs(rs, QOrder::finite(7));
  // every basis root has alpha(s) = q, so sums of two lie outside
  std::set<std::vector<int>> basis;
  for (const auto& r : nm.basis) basis.insert(to_std(r));
  for (const auto& a : nm.basis)
    for (const auto& b : nm.basis) CHECK_FALSE(basis.count(to_std(a + b)));
  const auto parts = decompose(rs, nm, sc);
  std::multiset<int> dims;
  size_t total = 0;
  for (const auto& p : parts) {
    dims.insert(p.dim());
    total += p.support.size();
  }
  CHECK(total == nm.basis.size());
  CHECK(dims == std::multiset<int>{1, 2, 4, 4});
}

TEST_CASE("nilorbits: component counts and joint counts") {
  const RootSystem rs(RootSystemType::parse("E6"));
  const auto sc = structure_constants(rs);
  const NilModule nm = build_nqs(rs, QOrder::finite(7));
  const auto parts = decompose(rs, nm, sc);
  std::multiset<long long> counts;
  for (const auto& p : parts) {
    const OrbitCount c = orbit_count(rs, sc, nm, p);
    CHECK(c.stable);
    CHECK(c.primes_used.size() >= 2);
    counts.insert(c.count);
  }
  CHECK(counts == std::multiset<long long>{2, 2, 3, 3});
  // a joint count is never below the product of the parts
  const OrbitCount a = orbit_count(rs, sc, nm, parts[0]);
  const OrbitCount b = orbit_count(rs, sc, nm, parts[1]);
  const OrbitCount ab = orbit_count(rs, sc, nm, join(rs, {parts[0], parts[1]}));
  CHECK(ab.count >= a.count * b.count);
}

TEST_CASE("nilorbits: regular case gives 2^rank") {
  for (const char* name : {"A3", "B3", "G2", "D4", "F4"}) {
    CAPTURE(name);
    const RootSystem rs(RootSystemType::parse(name));
    const OrbitCount c = orbit_count_regular(rs);
    CHECK(c.count == (1LL << rs.rank()));
  }
}

TEST_CASE("nilorbits: orbit counts agree across primes") {
  const RootSystem rs(RootSystemType::parse("B3"));
  const auto sc = structure_constants(rs);
  const NilModule nm = build_nqs(rs, QOrder::finite(5));
  Submodule all;
  all.support = nm.basis;
  std::set<long long> seen;
  for (int p : admissible_primes(5, 80)) seen.insert(orbit_count_ff(rs, sc, nm, all, p).count);
  CHECK(seen.size() == 1);
}

TEST_CASE("nilorbits: caps refuse instead of running") {
  const RootSystem rs(RootSystemType::parse("E8"));
  const auto sc = structure_constants(rs);
  const NilModule nm = build_nqs(rs, QOrder::finite(11));
  Submodule all;
  all.support = nm.basis;
  OrbitConfig tight;
  tight.dim_cap = 4;
  CHECK(orbit_count(rs, sc, nm, all, tight).refused);
  OrbitConfig few;
  few.prime_bound = 30;
  const OrbitCount c = orbit_count(rs, sc, nm, all, few);
  CHECK(c.refused);
  CHECK(c.prime_shortage);
}

TEST_CASE("case table: ids and anchors") {
  std::set<std::string> ids;
  for (const auto& c : all_cases(8)) {
    CHECK_FALSE(c.anchor.empty());
    CHECK(ids.insert(c.id).second);
  }
  CHECK(find_case("E8.o16").has_value());
  CHECK_FALSE(find_case("E8.o15").has_value());
}

TEST_CASE("case table: E6 o(q) = 7 records") {
  const auto records = verify_case(*find_case("E6.o7"));
  REQUIRE(records.size() == 5);
  for (const auto& r : records) {
    CAPTURE(r.claim_id);
    CHECK(r.status == ClaimStatus::Pass);
  }
  CHECK(records.back().computed == "36");
}
