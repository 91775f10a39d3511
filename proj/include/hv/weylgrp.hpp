#pragma once

// Finite Weyl group W0: BFS enumeration, Poincare polynomial, orders of q at
// which it vanishes, and |Irr(W0)|.

#include "hv/qorder.hpp"
#include "hv/rootsys.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hv {

inline constexpr long long kDefaultWeylBudget = 10'000'000;

class WeylBudgetExceeded : public std::runtime_error {
 public:
  WeylBudgetExceeded(long long order, long long budget);
  long long order() const { return order_; }

 private:
  long long order_;
};

struct WeylElement {
  /// Column i is w(alpha_i) over the simple roots.
  IntMat images;
  int length = 0;

  Root apply(const Root& r) const { return images * r; }
  static WeylElement identity(int rank);
};

/// Product w1 w2 and the inverse, recomputing the length from inversions.
WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);
WeylElement simple_reflection(const RootSystem& rs, int i);
/// Number of positive roots sent to negative roots.
int inversion_count(const RootSystem& rs, const IntMat& images);
/// Longest element w0.
WeylElement longest_element(const RootSystem& rs);
/// Reduced word (simple reflection indices, leftmost first).
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w);

/// |W0| = product of the degrees.
long long weyl_order(const RootSystem& rs);

/// Visits every element once, in BFS order by length. Throws
/// WeylBudgetExceeded when |W0| > budget.
void for_each_element(const RootSystem& rs, const std::function<void(const WeylElement&)>& fn,
                      long long budget = kDefaultWeylBudget);
std::vector<WeylElement> enumerate(const RootSystem& rs, long long budget = kDefaultWeylBudget);

/// Coefficients of sum_{w} q^{l(w)}.
struct PoincarePoly {
  std::vector<long long> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  long long total() const;
  bool palindromic() const;
  bool operator==(const PoincarePoly&) const = default;
};

/// prod_i (q^{d_i} - 1) / (q - 1)^n by exact polynomial division.
PoincarePoly poincare(const RootSystem& rs);
/// Length histogram of a BFS enumeration.
PoincarePoly poincare_by_enumeration(const RootSystem& rs, long long budget = kDefaultWeylBudget);

/// Integer polynomial helpers (coefficients lowest degree first).
using IntPoly = std::vector<long long>;
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
/// Exact division; nullopt when b does not divide a.
std::optional<IntPoly> poly_div_exact(const IntPoly& a, const IntPoly& b);
IntPoly cyclotomic(int m);

/// True iff the Poincare polynomial vanishes at a primitive m-th root of
/// unity, i.e. m divides some degree. Infinite order never vanishes; order 1
/// (q = 1) never vanishes.
bool poincare_vanishes(const RootSystem& rs, QOrder m);
/// Same question decided by divisibility of the Poincare polynomial by Phi_m.
bool poincare_vanishes_cyclotomic(const RootSystem& rs, int m);

/// m in [2, max degree - 1] with nonvanishing Poincare polynomial.
std::vector<int> valid_orders(const RootSystem& rs);

/// |Irr(W0)| from the classification (partition counts, exceptional table).
long long irr_count(const RootSystemType& type);

/// Number of conjugacy classes by orbit closure under conjugation by simple
/// reflections; nullopt if |W0| exceeds the budget.
std::optional<long long> conjugacy_class_count(const RootSystem& rs, long long budget = kDefaultWeylBudget);

}  // namespace hv
