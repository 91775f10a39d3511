#pragma once

// The q-eigenspace N_{q,s} of Ad(s) for the standard point s, its
// decomposition into C_G(s)-submodules, and C_G(s)-orbit counts via a
// finite-field model.

#include "hv/qorder.hpp"
#include "hv/rootsys.hpp"
#include "hv/torus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hv {

struct NilModule {
  QOrder order;
  /// Roots beta with beta(s) = q, in root-index order.
  std::vector<Root> basis;
  /// Roots gamma with gamma(s) = 1 (both signs), in root-index order.
  std::vector<Root> generators;
};

class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws HypothesisError when (q - 1) times the Poincare polynomial
/// vanishes at the given order.
NilModule build_nqs(const RootSystem& rs, QOrder order);

struct Submodule {
  std::vector<Root> support;  // root-index order
  int dim() const { return static_cast<int>(support.size()); }
};

/// Connected components of beta -- beta + gamma (N(gamma, beta) != 0),
/// ordered by their smallest root index.
std::vector<Submodule> decompose(const RootSystem& rs, const NilModule& nm, const StructureConstants& sc);

/// Basis roots of the named submodules, merged.
Submodule join(const RootSystem& rs, const std::vector<Submodule>& parts);

struct OrbitConfig {
  int prime_bound = 256;
  int min_primes = 2;
  int dim_cap = 14;
  long long label_budget = 2'000'000;
};

/// Primes p > 3 with p = 1 (mod m) up to the bound (m = 0: any p > 3).
std::vector<int> admissible_primes(int m, int bound);

/// A vector over F_p given by its nonzero coordinates.
using FieldVector = std::vector<std::pair<Root, long long>>;

struct FieldOrbits {
  int p = 0;
  long long count = 0;
  long long labels = 0;
  /// Orbit index of each query vector (same order as requested), or -1.
  std::vector<long long> query_classes;
};

class OrbitRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Orbits of the group generated by T(F_p) and u_gamma(c) on the span of
/// the support. Torus classes follow the complex torus: vectors with the
/// same support whose log-coordinates agree on the cokernel of the weight
/// matrix form one class.
FieldOrbits orbit_count_ff(const RootSystem& rs, const StructureConstants& sc, const NilModule& nm,
                           const Submodule& module, int p, const OrbitConfig& config = {},
                           const std::vector<FieldVector>& queries = {});

struct OrbitCount {
  long long count = 0;
  std::vector<int> primes_used;
  std::vector<long long> per_prime;
  bool stable = false;
  bool refused = false;
  /// Refused because the prime bound leaves too few admissible primes.
  bool prime_shortage = false;
  std::string note;
  /// Orbit indices of query vectors for the first prime.
  std::vector<long long> query_classes;
};

/// orbit_count_ff over the first config.min_primes admissible primes.
OrbitCount orbit_count(const RootSystem& rs, const StructureConstants& sc, const NilModule& nm, const Submodule& module,
                       const OrbitConfig& config = {}, const std::vector<FieldVector>& queries = {});

/// 2^rank: orbits on the span of the simple root vectors when s is regular,
/// checked by the finite-field model on N_{q,s} at infinite order.
OrbitCount orbit_count_regular(const RootSystem& rs, const OrbitConfig& config = {});

}  // namespace hv
