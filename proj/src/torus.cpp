#include "hv/torus.hpp"

#include "hv/weylgrp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hv {

namespace {

bool is_zero(const Rational& r) { return r.numerator() == 0; }
bool is_negative(const Rational& r) { return r.numerator() < 0; }

Rational floor_mod_rational(const Rational& r, long long m) {
  const long long num = r.numerator(), den = r.denominator();
  const long long md = m * den;
  return Rational(floor_mod(num, md), den);
}

// a-coordinates of an element of Q^vee have the form C^T b with b integral.
bool in_coroot_lattice(const RootSystem& rs, const RatVec& a, long long scale) {
  const RatMat inv = exact_inverse_of(rs.cartan().transpose());
  const RatVec b = inv * a;
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    const Rational x = b(i) / Rational(scale);
    if (x.denominator() != 1) return false;
  }
  return true;
}

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

bool rat_equal(const RatVec& x, const RatVec& y) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) != y(i)) return false;
  return true;
}

}  // namespace

TorusPoint standard_point(const RootSystem& rs, const std::vector<Rational>& exponents, QOrder order) {
  if (static_cast<int>(exponents.size()) != rs.rank()) throw std::invalid_argument("one exponent per simple root");
  TorusPoint s{RatVec(rs.rank()), order, IntVec::Zero(rs.rank())};
  for (int i = 0; i < rs.rank(); ++i) s.a(i) = exponents[static_cast<size_t>(i)];
  return s;
}

TorusPoint standard_point(const RootSystem& rs, QOrder order) {
  return standard_point(rs, std::vector<Rational>(static_cast<size_t>(rs.rank()), Rational(1)), order);
}

TorusPoint mixed_point(const RootSystem& rs, QOrder order) {
  std::vector<Rational> e;
  for (int i = 0; i < rs.rank(); ++i)
    e.emplace_back(rs.length_class(rs.simple_root(i)) == RootLength::Short || rs.type().simply_laced() ? 1 : -1);
  return standard_point(rs, e, order);
}

std::vector<IntVec> central_elements(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<IntVec> reps{IntVec::Zero(n)};
  auto known = [&](const IntVec& c) {
    for (const auto& r : reps)
      if (in_coroot_lattice(rs, to_rat(IntVec(c - r)), 1)) return true;
    return false;
  };
  for (size_t done = 0; done < reps.size(); ++done)
    for (int k = 0; k < n; ++k) {
      IntVec c = reps[done];
      c(k) += 1;
      if (!known(c)) reps.push_back(c);
    }
  if (static_cast<long long>(reps.size()) != rs.center_order())
    throw std::logic_error("center enumeration disagrees with det(Cartan)");
  return reps;
}

TorusPoint times_central(const RootSystem& rs, const TorusPoint& s, const IntVec& c) {
  (void)rs;
  TorusPoint out = s;
  if (s.order.is_finite())
    out.a += to_rat(c) * Rational(s.order.value());
  else
    out.twist += c;
  return out;
}

Rational eval(const RootSystem& rs, const TorusPoint& s, const Root& root) {
  Rational r(0);
  for (int i = 0; i < rs.rank(); ++i) r += Rational(root(i)) * s.a(i);
  if (s.order.is_finite()) r = floor_mod_rational(r, s.order.value());
  return r;
}

std::vector<Root> roots_with_exponent(const RootSystem& rs, const TorusPoint& s, int k) {
  Rational target(k);
  if (s.order.is_finite()) target = floor_mod_rational(target, s.order.value());
  std::vector<Root> out;
  for (const auto& r : rs.roots())
    if (eval(rs, s, r) == target) out.push_back(r);
  return out;
}

std::vector<Root> centralizer_roots(const RootSystem& rs, const TorusPoint& s) {
  std::vector<Root> out;
  for (int i = 0; i < rs.positive_count(); ++i)
    if (is_zero(eval(rs, s, rs.root(i)))) out.push_back(rs.root(i));
  return out;
}

std::vector<Root> simple_system(const RootSystem& rs, const std::vector<Root>& closed_positive) {
  std::map<std::vector<int>, bool> members;
  for (const auto& r : closed_positive) members[to_std(r)] = true;
  std::vector<Root> out;
  for (const auto& b : closed_positive) {
    bool decomposable = false;
    for (const auto& g : closed_positive) {
      Root d = b - g;
      if (d.minCoeff() >= 0 && d.maxCoeff() > 0 && members.count(to_std(d))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(b);
  }
  (void)rs;
  return out;
}

std::string identify_type(int rank, int positive_roots, int long_roots, int short_roots) {
  const bool one_length = long_roots == 0 || short_roots == 0;
  const std::string r = std::to_string(rank);
  if (one_length) {
    if (positive_roots == rank * (rank + 1) / 2) return "A" + r;
    if (rank >= 4 && positive_roots == rank * (rank - 1)) return "D" + r;
    if ((rank == 6 && positive_roots == 36) || (rank == 7 && positive_roots == 63) || (rank == 8 && positive_roots == 120))
      return "E" + r;
  } else {
    if (rank == 2 && positive_roots == 4) return "B2";
    if (rank == 2 && positive_roots == 6) return "G2";
    if (rank == 4 && positive_roots == 24) return "F4";
    if (positive_roots == rank * rank) {
      if (short_roots == rank) return "B" + r;
      if (long_roots == rank) return "C" + r;
    }
  }
  throw std::logic_error("unrecognised subsystem: rank " + r + ", " + std::to_string(positive_roots) + " positive roots");
}

std::string SubsystemSignature::str() const {
  if (components.empty()) return "T";
  std::vector<std::string> parts;
  for (const auto& c : components)
    parts.push_back(c.type + "(" + std::to_string(c.long_roots) + "L," + std::to_string(c.short_roots) + "S)");
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

SubsystemSignature centralizer_signature(const RootSystem& rs, const TorusPoint& s) {
  const std::vector<Root> pos = centralizer_roots(rs, s);
  for (const auto& x : pos)
    for (const auto& y : pos) {
      const auto sum = rs.index_of(Root(x + y));
      if (sum && !is_zero(eval(rs, s, rs.root(*sum)))) throw std::logic_error("centralizer root set is not closed");
    }
  const std::vector<Root> simple = simple_system(rs, pos);
  const int k = static_cast<int>(simple.size());
  std::vector<int> comp(static_cast<size_t>(k));
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[static_cast<size_t>(x)] == x ? x : comp[static_cast<size_t>(x)] = find(comp[static_cast<size_t>(x)]); };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (rs.inner(simple[static_cast<size_t>(i)], simple[static_cast<size_t>(j)]) != 0) comp[static_cast<size_t>(find(i))] = find(j);
  std::map<int, SubsystemComponent> by_root;
  for (int i = 0; i < k; ++i) by_root[find(i)].simple_roots.push_back(simple[static_cast<size_t>(i)]);
  for (const auto& b : pos) {
    int owner = -1;
    for (int i = 0; i < k && owner < 0; ++i)
      if (rs.inner(b, simple[static_cast<size_t>(i)]) != 0) owner = find(i);
    auto& c = by_root.at(owner);
    ++c.positive_roots;
    if (rs.length_class(b) == RootLength::Long)
      ++c.long_roots;
    else
      ++c.short_roots;
  }
  SubsystemSignature sig;
  for (auto& [key, c] : by_root) {
    c.type = identify_type(static_cast<int>(c.simple_roots.size()), c.positive_roots, c.long_roots, c.short_roots);
    sig.components.push_back(std::move(c));
  }
  return sig;
}

TorusPoint canonical_form(const RootSystem& rs, const TorusPoint& s) {
  const int n = rs.rank();
  TorusPoint out = s;
  const Root& theta = rs.highest_root();
  std::vector<int> theta_pair(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) theta_pair[static_cast<size_t>(i)] = rs.pairing(rs.simple_root(i), theta);
  RatVec& a = out.a;
  while (true) {
    int neg = -1;
    for (int j = 0; j < n && neg < 0; ++j)
      if (is_negative(a(j))) neg = j;
    if (neg >= 0) {
      const Rational aj = a(neg);
      for (int i = 0; i < n; ++i) a(i) -= aj * Rational(rs.cartan()(neg, i));
      continue;
    }
    if (s.order.is_infinite()) break;
    Rational h(0);
    for (int j = 0; j < n; ++j) h += Rational(theta(j)) * a(j);
    const Rational excess = h - Rational(s.order.value());
    if (excess.numerator() <= 0) break;
    for (int i = 0; i < n; ++i) a(i) -= excess * Rational(theta_pair[static_cast<size_t>(i)]);
  }
  if (s.order.is_infinite()) {
    for (const auto& c : central_elements(rs))
      if (in_coroot_lattice(rs, to_rat(IntVec(s.twist - c)), 1)) {
        out.twist = c;
        break;
      }
  }
  return out;
}

bool same_point(const RootSystem& rs, const TorusPoint& s, const TorusPoint& t) {
  if (s.order != t.order) throw std::invalid_argument("torus points of different orders");
  if (s.order.is_finite()) return in_coroot_lattice(rs, RatVec(s.a - t.a), s.order.value());
  return rat_equal(s.a, t.a) && in_coroot_lattice(rs, to_rat(IntVec(s.twist - t.twist)), 1);
}

bool conjugate_in_G(const RootSystem& rs, const TorusPoint& s, const TorusPoint& t) {
  if (s.order != t.order) throw std::invalid_argument("torus points of different orders");
  const TorusPoint cs = canonical_form(rs, s), ct = canonical_form(rs, t);
  return rat_equal(cs.a, ct.a) && (s.order.is_finite() || cs.twist == ct.twist);
}

TorusPoint act(const RootSystem& rs, const IntMat& w_images, const TorusPoint& s) {
  const RatMat inv = exact_inverse_of(w_images);
  TorusPoint out = s;
  for (int i = 0; i < rs.rank(); ++i) {
    Rational x(0);
    for (int j = 0; j < rs.rank(); ++j) x += inv(j, i) * s.a(j);
    out.a(i) = x;
  }
  return out;
}

Lemma32Result verify_lemma32(const RootSystem& rs, QOrder order) {
  Lemma32Result r;
  r.type = rs.type().name();
  r.order = order;
  const Family f = rs.type().family;
  if (f != Family::B && f != Family::C && f != Family::F && f != Family::G) {
    r.applicable = false;
    r.note = "only non-simply-laced types";
    return r;
  }
  if (order.is_finite()) {
    const auto valid = valid_orders(rs);
    if (std::find(valid.begin(), valid.end(), order.value()) == valid.end()) {
      r.applicable = false;
      r.note = "order " + order.str() + " is not a valid order for " + r.type;
      return r;
    }
  }
  const TorusPoint t = standard_point(rs, order);
  const TorusPoint s = mixed_point(rs, order);
  r.standard_signature = centralizer_signature(rs, t);
  r.mixed_signature = centralizer_signature(rs, s);
  r.standard_regular = r.standard_signature.empty();
  r.conjugate = conjugate_in_G(rs, s, t);
  r.decided_by = r.standard_signature.same_shape(r.mixed_signature) ? "alcove" : "signature";
  return r;
}

CentralCharacterCount count_one_dim_characters(const RootSystem& rs, QOrder order) {
  CentralCharacterCount out;
  out.center = rs.center_order();
  if (order.is_finite() && order.value() > 1 && poincare_vanishes(rs, order)) {
    out.refused = true;
    out.note = "Poincare polynomial vanishes at order " + order.str();
    return out;
  }
  std::vector<TorusPoint> points;
  for (const auto& c : central_elements(rs)) {
    points.push_back(times_central(rs, standard_point(rs, order), c));
    if (!rs.type().simply_laced()) points.push_back(times_central(rs, mixed_point(rs, order), c));
  }
  std::vector<TorusPoint> classes;
  for (const auto& p : points) {
    bool seen = false;
    for (const auto& c : classes)
      if (conjugate_in_G(rs, p, c)) {
        seen = true;
        break;
      }
    if (!seen) classes.push_back(p);
  }
  out.count = static_cast<long long>(classes.size());
  return out;
}

}  // namespace hv
