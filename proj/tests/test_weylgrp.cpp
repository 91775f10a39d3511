#include "hv/weylgrp.hpp"

#include <doctest.h>

using namespace hv;

TEST_CASE("weylgrp: group orders from enumeration") {
  CHECK(enumerate(RootSystem(RootSystemType::parse("A3"))).size() == 24);
  CHECK(enumerate(RootSystem(RootSystemType::parse("B3"))).size() == 48);
  CHECK(enumerate(RootSystem(RootSystemType::parse("G2"))).size() == 12);
  CHECK(enumerate(RootSystem(RootSystemType::parse("F4"))).size() == 1152);
  CHECK(weyl_order(RootSystem(RootSystemType::parse("E8"))) == 696729600);
}

TEST_CASE("weylgrp: Poincare polynomial by degrees equals the enumerated one") {
  for (const char* name : {"A3", "B4", "C3", "D4", "G2", "F4"}) {
    CAPTURE(name);
    const RootSystem rs(RootSystemType::parse(name));
    const auto p = poincare(rs);
    CHECK(p == poincare_by_enumeration(rs));
    CHECK(p.palindromic());
    CHECK(p.degree() == rs.positive_count());
  }
}

TEST_CASE("weylgrp: longest element and reduced words") {
  const RootSystem rs(RootSystemType::parse("B3"));
  const WeylElement w0 = longest_element(rs);
  CHECK(w0.length == 9);
  const auto word = reduced_word(rs, w0);
  CHECK(word.size() == 9);
  WeylElement w = WeylElement::identity(3);
  for (int i : word) w = compose(rs, w, simple_reflection(rs, i));
  CHECK(w.images == w0.images);
  CHECK(inverse(rs, w0).images == w0.images);
}

TEST_CASE("weylgrp: cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
  CHECK(poly_div_exact(IntPoly{-1, 0, 0, 1}, cyclotomic(3)) == IntPoly{-1, 1});
  CHECK_FALSE(poly_div_exact(IntPoly{1, 0, 1}, cyclotomic(3)).has_value());
}

TEST_CASE("weylgrp: valid orders") {
  CHECK(valid_orders(RootSystem(RootSystemType::parse("E6"))) == std::vector<int>{7, 10, 11});
  CHECK(valid_orders(RootSystem(RootSystemType::parse("G2"))) == std::vector<int>{4, 5});
  CHECK(valid_orders(RootSystem(RootSystemType::parse("A5"))).empty());
  CHECK(valid_orders(RootSystem(RootSystemType::parse("D7"))) == std::vector<int>{9, 11});
  CHECK(poincare_vanishes(RootSystem(RootSystemType::parse("A2")), QOrder::finite(2)));
  CHECK(poincare_vanishes_cyclotomic(RootSystem(RootSystemType::parse("A2")), 3));
  CHECK_FALSE(poincare_vanishes(RootSystem(RootSystemType::parse("A2")), QOrder::infinite()));
}

TEST_CASE("weylgrp: irreducible counts equal class counts") {
  for (const char* name : {"A4", "A5", "B3", "B4", "C4", "D4", "D5", "G2", "F4"}) {
    CAPTURE(name);
    const RootSystem rs(RootSystemType::parse(name));
    const auto classes = conjugacy_class_count(rs);
    REQUIRE(classes.has_value());
    CHECK(*classes == irr_count(rs.type()));
  }
}

TEST_CASE("weylgrp: budget refusal") {
  const RootSystem rs(RootSystemType::parse("E8"));
  CHECK_THROWS_AS(enumerate(rs, 1000), WeylBudgetExceeded);
  CHECK_FALSE(conjugacy_class_count(rs).has_value());
}
