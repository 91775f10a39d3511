#include "hv/rootsys.hpp"

#include <doctest.h>

#include <set>

using namespace hv;

namespace {

std::set<std::vector<int>> as_set(const std::vector<Root>& roots) {
  std::set<std::vector<int>> out;
  for (const auto& r : roots) out.insert(to_std(r));
  return out;
}

}  // namespace

TEST_CASE("rootsys: parse and rank limits") {
  CHECK(RootSystemType::parse("e8").name() == "E8");
  CHECK_THROWS_AS(RootSystemType::parse("C2"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystemType::parse("Q3"), std::invalid_argument);
  CHECK(RootSystemType::parse("D4").simply_laced());
  CHECK_FALSE(RootSystemType::parse("F4").simply_laced());
}

TEST_CASE("rootsys: positive root counts and highest roots") {
  struct Row {
    const char* name;
    int positive;
    std::vector<int> highest;
  };
  const std::vector<Row> rows = {
      {"A4", 10, {1, 1, 1, 1}},          {"B3", 9, {1, 2, 2}},        {"C3", 9, {2, 2, 1}},
      {"D5", 20, {1, 2, 2, 1, 1}},       {"G2", 6, {3, 2}},           {"F4", 24, {2, 3, 4, 2}},
      {"E6", 36, {1, 2, 2, 3, 2, 1}},    {"E7", 63, {2, 2, 3, 4, 3, 2, 1}},
      {"E8", 120, {2, 3, 4, 6, 5, 4, 3, 2}},
  };
  for (const auto& row : rows) {
    CAPTURE(row.name);
    const RootSystem rs(RootSystemType::parse(row.name));
    CHECK(rs.positive_count() == row.positive);
    CHECK(to_std(rs.highest_root()) == row.highest);
    CHECK(as_set(rs.positive_roots()) == as_set(positive_roots_by_reflection(rs)));
  }
}

TEST_CASE("rootsys: highest short roots") {
  CHECK(to_std(RootSystem(RootSystemType::parse("B3")).highest_short_root()) == std::vector<int>{1, 1, 1});
  CHECK(to_std(RootSystem(RootSystemType::parse("G2")).highest_short_root()) == std::vector<int>{2, 1});
  CHECK(to_std(RootSystem(RootSystemType::parse("F4")).highest_short_root()) == std::vector<int>{1, 2, 3, 2});
}

TEST_CASE("rootsys: center orders are Cartan determinants") {
  CHECK(RootSystem(RootSystemType::parse("A5")).center_order() == 6);
  CHECK(RootSystem(RootSystemType::parse("D6")).center_order() == 4);
  CHECK(RootSystem(RootSystemType::parse("E6")).center_order() == 3);
  CHECK(RootSystem(RootSystemType::parse("E7")).center_order() == 2);
  CHECK(RootSystem(RootSystemType::parse("E8")).center_order() == 1);
}

TEST_CASE("rootsys: structure constants") {
  for (const char* name : {"B3", "G2", "F4", "D4"}) {
    CAPTURE(name);
    const RootSystem rs(RootSystemType::parse(name));
    for (int sign : {1, -1}) {
      const auto sc = structure_constants(rs, sign);
      CHECK(jacobi_violations(rs, sc) == 0);
      for (int a = 0; a < rs.root_count(); ++a)
        for (int b = 0; b < rs.root_count(); ++b) {
          const Root sum = rs.root(a) + rs.root(b);
          if (!rs.index_of(sum)) {
            CHECK(sc(a, b) == 0);
            continue;
          }
          // |N(alpha, beta)| = p + 1 with p from the alpha-string through beta
          CHECK(std::abs(sc(a, b)) == string_below(rs, a, b) + 1);
          CHECK(sc(a, b) == -sc(b, a));
        }
    }
  }
}

TEST_CASE("rootsys: epsilon coordinates") {
  const RootSystem rs(RootSystemType::parse("B2"));
  for (const auto& r : rs.roots()) CHECK(rs.from_epsilon(rs.epsilon_coords(r)) == r);
  CHECK(rs.norm2(rs.simple_root(1)) < rs.norm2(rs.simple_root(0)));
}
