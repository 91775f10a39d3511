#pragma once

// Extended affine Weyl group W = W0 x| X (X the weight lattice) and its
// Iwahori-Hecke algebra over Z[v, v^-1], q = v^2.
//
// An element (w, x) stands for w t_x; weights are in fundamental-weight
// coordinates. Affine simple reflections are r_1..r_n (finite) and
// r_0 = s_theta t_{-theta} with theta the highest short root, so that
// W0 x| Q is the affine Weyl group of the dual root system.

#include "hv/laurent.hpp"
#include "hv/weylgrp.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hv {

struct ExtAffineElement {
  WeylElement w;
  IntVec x;

  bool operator==(const ExtAffineElement& o) const { return w.images == o.w.images && x == o.x; }
};

class HeckeRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// omega r_{k_1} ... r_{k_l} with omega of length 0 and l the length.
struct AffineWord {
  ExtAffineElement omega;
  std::vector<int> letters;  // 0 = r_0
};

class AffineWeyl {
 public:
  explicit AffineWeyl(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }

  ExtAffineElement identity() const;
  ExtAffineElement translation(const IntVec& x) const;
  ExtAffineElement finite(const WeylElement& w) const;
  /// r_i for 0 <= i <= rank.
  ExtAffineElement simple(int i) const;

  ExtAffineElement compose(const ExtAffineElement& a, const ExtAffineElement& b) const;
  ExtAffineElement inverse(const ExtAffineElement& a) const;
  /// a r_i, without a general composition.
  ExtAffineElement times_simple(const ExtAffineElement& a, int i) const;
  ExtAffineElement word(const std::vector<int>& letters) const;

  /// sum over alpha > 0 with w(alpha) < 0 of |<x, alpha^vee> + 1| plus the
  /// sum over the other positive roots of |<x, alpha^vee>|.
  int length(const ExtAffineElement& u) const;
  AffineWord reduced(const ExtAffineElement& u) const;

  /// w acting on a weight in fundamental-weight coordinates.
  IntVec act(const WeylElement& w, const IntVec& x) const;
  /// Fundamental-weight coordinates of a root.
  IntVec weight_of_root(const Root& r) const;
  /// <x, alpha^vee>.
  int pairing(const IntVec& x, const Root& alpha) const;

  /// l(w x) = l(w) + l(x) for every w in W0.
  bool is_dominant_by_length(const IntVec& x) const;
  static bool is_dominant(const IntVec& x) { return x.minCoeff() >= 0; }

  /// Length-zero elements, identity first.
  const std::vector<ExtAffineElement>& omega() const { return omega_; }
  /// pi with u r_i u^{-1} = r_{pi(i)} for a length-zero u.
  std::vector<int> diagram_action(const ExtAffineElement& u) const;
  /// Order of r_i r_j (0 if infinite).
  int coxeter_order(int i, int j) const;

  /// Key for ordered containers.
  std::vector<int> key(const ExtAffineElement& u) const;
  std::string str(const ExtAffineElement& u) const;

 private:
  const RootSystem& rs_;
  std::vector<Root> positive_;
  std::vector<IntVec> positive_coroots_;
  RatMat cartan_inverse_;
  Root theta_;
  IntVec theta_weight_;
  IntVec theta_coroot_;
  std::vector<WeylElement> reflections_;
  WeylElement s_theta_;
  std::vector<ExtAffineElement> omega_;
};

class HeckeElement {
 public:
  struct Term {
    ExtAffineElement u;
    Laurent c;
  };

  void add(const std::vector<int>& key, const ExtAffineElement& u, const Laurent& c);
  const std::map<std::vector<int>, Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(const std::vector<int>& key) const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  HeckeElement scaled(const Laurent& c) const;
  bool operator==(const HeckeElement& o) const;

 private:
  std::map<std::vector<int>, Term> terms_;
};

class HeckeAlgebra {
 public:
  /// Products that are not length-additive are refused above rank_cap.
  explicit HeckeAlgebra(const RootSystem& rs, int rank_cap = 2);

  const AffineWeyl& weyl() const { return weyl_; }

  HeckeElement one() const;
  HeckeElement T(const ExtAffineElement& u) const;
  HeckeElement T_inverse(const ExtAffineElement& u) const;
  HeckeElement T_word(const std::vector<int>& letters) const;

  /// a T_{r_i}, using (T_r - q)(T_r + 1) = 0.
  HeckeElement times_simple(const HeckeElement& a, int i) const;
  /// a T_{r_i}^{-1} with T_r^{-1} = q^{-1} T_r + (q^{-1} - 1).
  HeckeElement times_simple_inverse(const HeckeElement& a, int i) const;
  /// T_{r_i} a.
  HeckeElement simple_times(int i, const HeckeElement& a) const;
  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;

  /// theta_x = v^{l(z) - l(y)} T_y T_z^{-1}, x = y - z with y, z dominant;
  /// the default z is the negative part of x.
  HeckeElement theta(const IntVec& x) const;
  HeckeElement theta(const IntVec& x, const IntVec& z) const;
  /// S_x, the sum of theta_y over the W0-orbit of a dominant x.
  HeckeElement central_sum(const IntVec& x) const;
  /// a theta_x through the factorisation of theta_x, not its expansion.
  HeckeElement times_theta(const HeckeElement& a, const IntVec& x) const;

  /// Value with q = 1: the multiset of group elements (coefficient sums).
  std::map<std::vector<int>, long long> at_q_one(const HeckeElement& a) const;
  std::string str(const HeckeElement& a) const;

 private:
  const RootSystem& rs_;
  AffineWeyl weyl_;
  int rank_cap_;
};

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Weights with |c_1| + ... + |c_n| <= radius in fundamental-weight coordinates.
std::vector<IntVec> weight_ball(int rank, int radius);

/// theta multiplicativity, commutativity, decomposition independence, the
/// rank-one Bernstein relation and centrality of S_{x_i} on the ball.
std::vector<IdentityCheck> verify_bernstein(const RootSystem& rs, int radius = 2);

/// The type A theta_{alpha_i} expression through T_{x_i} (rank <= cap).
std::vector<IdentityCheck> verify_theta_alpha_formula(const RootSystem& rs);

/// Type A tau-words (n <= 4), G2 words and lattice identities, the F4 word
/// for x_4 and the F4 lattice identities behind its theta relations.
std::vector<IdentityCheck> verify_translation_words();

/// l(x_i) = i(n + 1 - i) in type A_n.
std::vector<IdentityCheck> verify_type_a_lengths(int n_max = 6);

enum class Scalar { Q, MinusOne };

struct CharacterExponents {
  /// theta_{alpha_i} -> sign * q^{exponent}.
  std::vector<int> exponent;
  std::vector<int> sign;
};

/// One-dimensional character with T_{r_i} -> assignment[i] (i = 0 is r_0)
/// and T_omega -> 1. Throws std::invalid_argument when two generators joined
/// by an odd braid relation get different scalars.
CharacterExponents one_dim_character(const RootSystem& rs, const std::vector<Scalar>& assignment);

struct DDPrime {
  HeckeElement d;
  HeckeElement d_prime;
  std::vector<IdentityCheck> checks;
};

/// D = sum T_w and D' = sum (-q)^{-l(w)} T_w over W0 with their eigen-relations
/// under every finite T_r; rank <= 3.
DDPrime build_d_dprime(const RootSystem& rs);

}  // namespace hv
