#include "hv/torus.hpp"
#include "hv/weylgrp.hpp"

#include <doctest.h>

using namespace hv;

TEST_CASE("torus: exponents of the standard point") {
  const RootSystem rs(RootSystemType::parse("G2"));
  const TorusPoint s = standard_point(rs, QOrder::finite(5));
  for (const auto& r : rs.roots()) {
    // alpha(s) = q^{height}, reduced mod 5
    const int h = ((RootSystem::height(r) % 5) + 5) % 5;
    CHECK(eval(rs, s, r) == Rational(h));
  }
  CHECK(roots_with_exponent(rs, s, 0).size() == 2);
  CHECK(roots_with_exponent(rs, s, 1).size() == 3);
}

TEST_CASE("torus: mixed point sends long simple roots to q^-1") {
  const RootSystem rs(RootSystemType::parse("B3"));
  const TorusPoint s = mixed_point(rs, QOrder::finite(5));
  CHECK(eval(rs, s, rs.simple_root(0)) == Rational(4));
  CHECK(eval(rs, s, rs.simple_root(2)) == Rational(1));
}

TEST_CASE("torus: central elements") {
  for (const char* name : {"A3", "B4", "D4", "E6", "E7", "G2"}) {
    const RootSystem rs(RootSystemType::parse(name));
    CHECK(static_cast<long long>(central_elements(rs).size()) == rs.center_order());
  }
}

TEST_CASE("torus: conjugacy is W0-invariant") {
  const RootSystem rs(RootSystemType::parse("C3"));
  const TorusPoint s = mixed_point(rs, QOrder::finite(5));
  for (const auto& w : enumerate(rs)) {
    const TorusPoint t = act(rs, w.images, s);
    CHECK(conjugate_in_G(rs, s, t));
    CHECK(same_point(rs, canonical_form(rs, s), canonical_form(rs, t)));
  }
  CHECK_FALSE(conjugate_in_G(rs, s, standard_point(rs, QOrder::finite(5))));
}

TEST_CASE("torus: centralizer signatures") {
  const RootSystem rs(RootSystemType::parse("F4"));
  const auto sig = centralizer_signature(rs, mixed_point(rs, QOrder::finite(5)));
  CHECK(sig.str() == "A1(1L,0S) A2(0L,3S)");
  CHECK(identify_type(2, 4, 2, 2) == "B2");
  CHECK(identify_type(2, 6, 3, 3) == "G2");
}

TEST_CASE("torus: standard and mixed points are not conjugate") {
  for (auto [name, m] : std::vector<std::pair<const char*, int>>{{"B3", 5}, {"F4", 7}, {"G2", 4}, {"G2", 5}}) {
    CAPTURE(name);
    const RootSystem rs(RootSystemType::parse(name));
    const auto r = verify_lemma32(rs, QOrder::finite(m));
    CHECK(r.applicable);
    CHECK_FALSE(r.conjugate);
  }
}

TEST_CASE("torus: one-dimensional central characters") {
  const RootSystem b2(RootSystemType::parse("B2"));
  CHECK(count_one_dim_characters(b2, QOrder::finite(1)).count == 2);
  CHECK(count_one_dim_characters(b2, QOrder::finite(3)).count == 4);
  const RootSystem g2(RootSystemType::parse("G2"));
  CHECK(count_one_dim_characters(g2, QOrder::finite(5)).count == 2);
}
