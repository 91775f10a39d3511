#include "hv/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

namespace hv {

long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

RatMat exact_inverse(const RatMat& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw LatticeError("inverse of non-square matrix");
  RatMat a = m;
  RatMat inv = RatMat::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (a(r, col).numerator() != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw LatticeError("singular matrix");
    a.row(col).swap(a.row(pivot));
    inv.row(col).swap(inv.row(pivot));
    const Rational p = a(col, col);
    a.row(col) /= p;
    inv.row(col) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col).numerator() == 0) continue;
      const Rational f = a(r, col);
      a.row(r) -= f * a.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

LongMat to_integral(const RatMat& m) {
  LongMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j).denominator() != 1) throw LatticeError("matrix is not integral");
      out(i, j) = m(i, j).numerator();
    }
  return out;
}

namespace {

struct SmithState {
  LongMat a, left, left_inv, right;

  void row_sub(Eigen::Index i, Eigen::Index t, long long q) {  // row_i -= q row_t
    a.row(i) -= q * a.row(t);
    left.row(i) -= q * left.row(t);
    left_inv.col(t) += q * left_inv.col(i);
  }
  void row_swap(Eigen::Index i, Eigen::Index j) {
    a.row(i).swap(a.row(j));
    left.row(i).swap(left.row(j));
    left_inv.col(i).swap(left_inv.col(j));
  }
  void row_negate(Eigen::Index i) {
    a.row(i) *= -1;
    left.row(i) *= -1;
    left_inv.col(i) *= -1;
  }
  void col_sub(Eigen::Index j, Eigen::Index t, long long q) {  // col_j -= q col_t
    a.col(j) -= q * a.col(t);
    right.col(j) -= q * right.col(t);
  }
  void col_swap(Eigen::Index i, Eigen::Index j) {
    a.col(i).swap(a.col(j));
    right.col(i).swap(right.col(j));
  }
};

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const LongMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SmithState s{m, LongMat::Identity(rows, rows), LongMat::Identity(rows, rows), LongMat::Identity(cols, cols)};
  SmithForm out;
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      Eigen::Index pr = -1, pc = -1;
      long long best = 0;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j) {
          const long long v = std::llabs(s.a(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) {
        out.left = s.left;
        out.left_inverse = s.left_inv;
        out.right = s.right;
        return out;
      }
      if (pr != t) s.row_swap(pr, t);
      if (pc != t) s.col_swap(pc, t);
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (s.a(i, t) == 0) continue;
        s.row_sub(i, t, floor_div(s.a(i, t), s.a(t, t)));
        if (s.a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (s.a(t, j) == 0) continue;
        s.col_sub(j, t, floor_div(s.a(t, j), s.a(t, t)));
        if (s.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility condition on the remaining block
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (s.a(i, j) % s.a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        s.row_sub(t, bad, -1);
        continue;
      }
      if (s.a(t, t) < 0) s.row_negate(t);
      out.divisors.push_back(s.a(t, t));
      break;
    }
  }
  out.left = s.left;
  out.left_inverse = s.left_inv;
  out.right = s.right;
  return out;
}

}  // namespace hv
