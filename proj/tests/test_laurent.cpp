#include "hv/laurent.hpp"

#include <doctest.h>

#include <random>

using hv::Laurent;

namespace {

Laurent random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(-4, 4), coef(-3, 3), count(0, 4);
  Laurent out;
  for (int k = count(rng); k > 0; --k) out += Laurent::monomial(deg(rng), coef(rng));
  return out;
}

}  // namespace

TEST_CASE("laurent: basic arithmetic") {
  const Laurent q = Laurent::q();
  CHECK((q - 1) * (q + 1) == Laurent::q(2) - 1);
  CHECK(Laurent::v(3) * Laurent::v(-3) == Laurent(1));
  CHECK((q - q).is_zero());
  CHECK((Laurent::v(2) - 1).str() == "v^2 - 1");
  CHECK((-Laurent::v(-1) + 3).str() == "3 - v^-1");
  CHECK(Laurent(0).str() == "0");
}

TEST_CASE("laurent: specialisations and bar") {
  const Laurent p = Laurent::monomial(3, 2) - Laurent::monomial(-1, 5) + 7;
  CHECK(p.at_one() == 4);
  CHECK(p.at_minus_one() == -2 + 5 + 7);
  CHECK(p.bar().coeff(-3) == 2);
  CHECK(p.bar().bar() == p);
  CHECK(p.min_degree() == -1);
  CHECK(p.max_degree() == 3);
}

TEST_CASE("laurent: ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Laurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).at_one() == a.at_one() * b.at_one());
    CHECK((a * b).bar() == a.bar() * b.bar());
  }
}
