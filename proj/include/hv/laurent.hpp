#pragma once

// Integer Laurent polynomials in v, with q = v^2.

#include <map>
#include <string>

namespace hv {

class Laurent {
 public:
  Laurent() = default;
  Laurent(long long c) {  // NOLINT: constants convert implicitly
    if (c != 0) terms_[0] = c;
  }

  /// c v^k.
  static Laurent monomial(int k, long long c = 1);
  static Laurent v(int k = 1) { return monomial(k); }
  static Laurent q(int k = 1) { return monomial(2 * k); }

  bool is_zero() const { return terms_.empty(); }
  long long coeff(int k) const;
  const std::map<int, long long>& terms() const { return terms_; }
  int min_degree() const;
  int max_degree() const;
  /// Single term c v^k.
  bool is_monomial() const { return terms_.size() == 1; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  bool operator==(const Laurent&) const = default;

  /// Value at v = 1 (so q = 1).
  long long at_one() const;
  /// Value at v = -1.
  long long at_minus_one() const;
  /// Substitutes v -> v^{-1}.
  Laurent bar() const;

  /// Highest degree first, e.g. "v^2 - 1".
  std::string str() const;

 private:
  std::map<int, long long> terms_;
};

}  // namespace hv
