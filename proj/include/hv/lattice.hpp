#pragma once

// Exact integer / rational linear algebra on small lattices.

#include <Eigen/Dense>
#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hv {

inline constexpr int kMaxRank = 12;

using Rational = boost::rational<long long>;

// Fixed-capacity dynamic types: no heap traffic for rank <= kMaxRank.
using IntVec = Eigen::Matrix<int, Eigen::Dynamic, 1, 0, kMaxRank, 1>;
using IntMat = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxRank, kMaxRank>;

using LongMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using LongVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hv

namespace Eigen {
template <>
struct NumTraits<hv::Rational> : GenericNumTraits<hv::Rational> {
  using Real = hv::Rational;
  using NonInteger = hv::Rational;
  using Nested = hv::Rational;
  using Literal = hv::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace hv {

template <typename Derived>
RatMat to_rational(const Eigen::MatrixBase<Derived>& m) {
  RatMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(static_cast<long long>(m(i, j)));
  return out;
}

/// Exact determinant by fraction-free Gaussian elimination (Bareiss).
/// Scalar must be an exact integral type.
template <typename Derived>
long long exact_determinant(const Eigen::MatrixBase<Derived>& input) {
  const Eigen::Index n = input.rows();
  if (n != input.cols()) throw LatticeError("determinant of non-square matrix");
  if (n == 0) return 1;
  LongMat a = input.template cast<long long>();
  long long sign = 1;
  long long prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Exact inverse over the rationals; throws on a singular matrix.
RatMat exact_inverse(const RatMat& m);

template <typename Derived>
RatMat exact_inverse_of(const Eigen::MatrixBase<Derived>& m) {
  return exact_inverse(to_rational(m));
}

/// Converts a rational matrix with integral entries; throws otherwise.
LongMat to_integral(const RatMat& m);

/// Smith normal form D = left * M * right, with unimodular left/right and
/// D diagonal, d_1 | d_2 | ... ; left_inverse is left^{-1}.
struct SmithForm {
  LongMat left;
  LongMat left_inverse;
  LongMat right;
  std::vector<long long> divisors;  // nonzero diagonal entries, in order
  Eigen::Index rank() const { return static_cast<Eigen::Index>(divisors.size()); }
};

SmithForm smith_normal_form(const LongMat& m);

long long floor_mod(long long a, long long m);
long long gcd_ll(long long a, long long b);

}  // namespace hv
