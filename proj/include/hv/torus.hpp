#pragma once

// Semisimple elements of the maximal torus of the simply connected group,
// written s = exp(2 pi i v / m) with q = exp(2 pi i / m), so that
// alpha(s) = q^{<alpha, v>}. Coordinates are a_i = <alpha_i, v>.
// For infinite order, s = q^v c with c central and q generic.

#include "hv/qorder.hpp"
#include "hv/rootsys.hpp"

#include <string>
#include <vector>

namespace hv {

struct TorusPoint {
  RatVec a;
  QOrder order;
  /// Central factor (coordinates of a coweight, mod the coroot lattice);
  /// folded into a when the order is finite.
  IntVec twist;
};

/// alpha_i(s) = q^{exponents[i]}.
TorusPoint standard_point(const RootSystem& rs, const std::vector<Rational>& exponents, QOrder order);
/// All simple roots to q.
TorusPoint standard_point(const RootSystem& rs, QOrder order);
/// Short simple roots to q, long simple roots to q^{-1}.
TorusPoint mixed_point(const RootSystem& rs, QOrder order);

/// Coweight representatives of the center P^vee / Q^vee (first is 0).
std::vector<IntVec> central_elements(const RootSystem& rs);
TorusPoint times_central(const RootSystem& rs, const TorusPoint& s, const IntVec& c);

/// <root, v>, reduced into [0, m) when the order is finite.
Rational eval(const RootSystem& rs, const TorusPoint& s, const Root& root);
/// Roots with alpha(s) = q^k, in root-index order.
std::vector<Root> roots_with_exponent(const RootSystem& rs, const TorusPoint& s, int k);

struct SubsystemComponent {
  std::string type;
  std::vector<Root> simple_roots;
  int positive_roots = 0;
  int long_roots = 0;   // positive roots long in the ambient system
  int short_roots = 0;
};

struct SubsystemSignature {
  std::vector<SubsystemComponent> components;

  /// Sorted component types with long/short composition, e.g. "A1(L) A2(S)".
  std::string str() const;
  bool empty() const { return components.empty(); }
  bool same_shape(const SubsystemSignature& other) const { return str() == other.str(); }
};

/// Closed subsystem {alpha : alpha(s) = 1} with a simple system per component.
SubsystemSignature centralizer_signature(const RootSystem& rs, const TorusPoint& s);
/// Positive roots of the centralizer subsystem.
std::vector<Root> centralizer_roots(const RootSystem& rs, const TorusPoint& s);
/// Simple system of an arbitrary closed set of roots (positive roots in it
/// that are not sums of two others).
std::vector<Root> simple_system(const RootSystem& rs, const std::vector<Root>& closed_positive);
/// Irreducible type of a subsystem from rank, root count and root lengths.
std::string identify_type(int rank, int positive_roots, int long_roots, int short_roots);

/// Representative of the W0 (finite order: affine Weyl group W0 x m Q^vee)
/// orbit in the closed fundamental alcove, plus the twist class.
TorusPoint canonical_form(const RootSystem& rs, const TorusPoint& s);
/// Conjugacy in G, i.e. W0-conjugacy in T.
bool conjugate_in_G(const RootSystem& rs, const TorusPoint& s, const TorusPoint& t);
bool same_point(const RootSystem& rs, const TorusPoint& s, const TorusPoint& t);
/// Applies w (given by its action on simple roots) to s.
TorusPoint act(const RootSystem& rs, const IntMat& w_images, const TorusPoint& s);

struct Lemma32Result {
  std::string type;
  QOrder order;
  bool applicable = true;
  std::string note;
  SubsystemSignature standard_signature;
  SubsystemSignature mixed_signature;
  bool standard_regular = false;
  bool conjugate = false;
  std::string decided_by;  // "signature" or "alcove"
};

/// Standard t versus mixed s for B_n, C_n, F4, G2 at a valid order (or
/// infinite order).
Lemma32Result verify_lemma32(const RootSystem& rs, QOrder order);

struct CentralCharacterCount {
  long long count = 0;
  long long center = 0;
  bool refused = false;
  std::string note;
};

/// Non-conjugate points among standard s.c (and mixed t.c for
/// non-simply-laced types), c central. Order 1 is the q = 1 model.
CentralCharacterCount count_one_dim_characters(const RootSystem& rs, QOrder order);

}  // namespace hv
