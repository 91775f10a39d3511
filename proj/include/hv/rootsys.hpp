#pragma once

// Irreducible reduced root systems of types A-G with Bourbaki numbering.
//
// E-type simple roots (Bourbaki):
//
//            2
//            |
//    1 - 3 - 4 - 5 - 6 - 7 - 8
//
// F4: 1 = 2 => 3 - 4 (alpha1, alpha2 long).  G2: alpha1 short, alpha2 long.
// B_n: alpha_n short.  C_n: alpha_n long.  D_n: alpha_n attached to alpha_{n-2}.

#include "hv/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hv {

enum class Family { A, B, C, D, E, F, G };

struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  /// Throws std::invalid_argument when the rank is not allowed for the family.
  static RootSystemType make(Family family, int rank);
  /// Parses names like "E8", "b3", "G2".
  static RootSystemType parse(std::string_view name);

  std::string name() const;
  bool simply_laced() const;
  auto operator<=>(const RootSystemType&) const = default;
};

/// Coefficients over the simple roots.
using Root = IntVec;

enum class RootLength { Long, Short };

/// Chevalley structure constants N(alpha, beta) indexed by root index pairs.
class StructureConstants {
 public:
  StructureConstants() = default;
  StructureConstants(int root_count, std::vector<int> table, int sign)
      : root_count_(root_count), table_(std::move(table)), sign_(sign) {}

  /// 0 when alpha + beta is not a root.
  int operator()(int alpha, int beta) const { return table_[static_cast<size_t>(alpha * root_count_ + beta)]; }
  bool defined(int alpha, int beta) const { return (*this)(alpha, beta) != 0; }
  /// +1 or -1: the sign imposed on extraspecial pairs.
  int convention() const { return sign_; }

 private:
  int root_count_ = 0;
  std::vector<int> table_;
  int sign_ = 1;
};

class RootSystem {
 public:
  explicit RootSystem(RootSystemType type);

  const RootSystemType& type() const { return type_; }
  int rank() const { return type_.rank; }

  /// cartan()(i, j) = <alpha_i^vee, alpha_j>.
  const IntMat& cartan() const { return cartan_; }
  /// Symmetric form (alpha_i, alpha_j), short roots of squared length 2.
  const IntMat& form() const { return form_; }
  /// Row i is the fundamental weight omega_i over the simple roots.
  const RatMat& fundamental_weights() const { return fundamental_weights_; }

  /// Positive roots first (sorted by height, then lexicographically descending),
  /// followed by their negatives in the same order.
  const std::vector<Root>& roots() const { return roots_; }
  int positive_count() const { return static_cast<int>(roots_.size() / 2); }
  int root_count() const { return static_cast<int>(roots_.size()); }
  std::vector<Root> positive_roots() const;
  const Root& root(int index) const { return roots_[static_cast<size_t>(index)]; }
  int negative_of(int index) const;
  bool is_positive_index(int index) const { return index < positive_count(); }
  std::optional<int> index_of(const Root& r) const;
  Root simple_root(int i) const;

  const Root& highest_root() const { return highest_root_; }
  /// Highest short root (equals the highest root for simply-laced types).
  const Root& highest_short_root() const { return highest_short_root_; }
  const std::vector<int>& degrees() const { return degrees_; }

  RootLength length_class(const Root& r) const;
  int inner(const Root& a, const Root& b) const;
  int norm2(const Root& a) const { return inner(a, a); }
  /// <beta, alpha^vee> for a root alpha.
  int pairing(const Root& beta, const Root& alpha) const;
  /// <beta, alpha_i^vee>.
  int simple_pairing(const Root& beta, int i) const;
  Root reflect(const Root& beta, int i) const;
  static int height(const Root& r) { return r.sum(); }

  /// Cartan determinant, the order of X/Q.
  long long center_order() const;

  /// epsilon coordinates for B, C, D and F4; empty otherwise.
  bool has_epsilon_view() const { return !epsilon_basis_.empty(); }
  RatVec epsilon_coords(const Root& r) const;
  /// Root with the given epsilon coordinates, if any.
  std::optional<Root> from_epsilon(const RatVec& eps) const;

  /// Coefficients of alpha^vee over the simple coroots.
  IntVec coroot(const Root& alpha) const;

 private:
  void build_cartan();
  void enumerate_roots();

  RootSystemType type_;
  IntMat cartan_;
  IntMat form_;
  RatMat fundamental_weights_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, int> index_;
  Root highest_root_;
  Root highest_short_root_;
  std::vector<int> degrees_;
  std::vector<RatVec> epsilon_basis_;
};

std::vector<int> degrees_of(const RootSystemType& type);
long long center_order(const RootSystemType& type);

/// Positive roots by reflection closure of the simple roots; independent of
/// the root-string enumeration used by RootSystem.
std::vector<Root> positive_roots_by_reflection(const RootSystem& rs);

/// Chevalley basis signs with N > 0 (sign = +1) or N < 0 (sign = -1) on
/// extraspecial pairs.
StructureConstants structure_constants(const RootSystem& rs, int sign = 1);

/// Largest p with beta - p alpha a root (alpha, beta root indices).
int string_below(const RootSystem& rs, int alpha, int beta);

/// Checks the Jacobi identity on every triple of Chevalley basis vectors.
/// Returns the number of violated triples.
long long jacobi_violations(const RootSystem& rs, const StructureConstants& sc);

std::vector<int> to_std(const Root& r);
Root from_std(const std::vector<int>& v);
std::string format_root(const Root& r);

}  // namespace hv
