#include "hv/weylgrp.hpp"

#include "hv/partitions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace hv {

WeylBudgetExceeded::WeylBudgetExceeded(long long order, long long budget)
    : std::runtime_error("refusing to enumerate |W0| = " + std::to_string(order) + " elements (budget " +
                         std::to_string(budget) + ")"),
      order_(order) {}

WeylElement WeylElement::identity(int rank) { return WeylElement{IntMat::Identity(rank, rank), 0}; }

int inversion_count(const RootSystem& rs, const IntMat& images) {
  int count = 0;
  for (int k = 0; k < rs.positive_count(); ++k) {
    const Root img = images * rs.root(k);
    if (img.maxCoeff() <= 0) ++count;
  }
  return count;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  IntMat m = IntMat::Identity(rs.rank(), rs.rank());
  m.row(i) -= rs.cartan().row(i);
  return WeylElement{m, 1};
}

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  IntMat m = a.images * b.images;
  return WeylElement{m, inversion_count(rs, m)};
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  IntMat m = to_integral(exact_inverse_of(w.images)).cast<int>();
  return WeylElement{m, inversion_count(rs, m)};
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> word;
  IntMat m = w.images;
  const int n = rs.rank();
  while (true) {
    int descent = -1;
    for (int i = 0; i < n && descent < 0; ++i)
      if (m.col(i).maxCoeff() <= 0) descent = i;
    if (descent < 0) break;
    word.push_back(descent);
    m = m * simple_reflection(rs, descent).images;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement longest_element(const RootSystem& rs) {
  IntMat m = IntMat::Identity(rs.rank(), rs.rank());
  while (true) {
    int ascent = -1;
    for (int i = 0; i < rs.rank() && ascent < 0; ++i)
      if (m.col(i).minCoeff() >= 0) ascent = i;
    if (ascent < 0) break;
    m = m * simple_reflection(rs, ascent).images;
  }
  return WeylElement{m, rs.positive_count()};
}

long long weyl_order(const RootSystem& rs) {
  long long order = 1;
  for (int d : rs.degrees()) order *= d;
  return order;
}

namespace {

// 7 bits per coordinate in a 64-bit key
constexpr int kWalkRank = 9;
constexpr int kCells = kWalkRank * kWalkRank;

struct Layered {
  std::uint64_t key;
  std::array<std::int16_t, kWalkRank> lambda;  // w(rho) paired with the simple coroots
  std::array<std::int16_t, kCells> images;    // w(alpha_j) over simple roots, row-major
  std::array<std::int16_t, kCells> weights;   // w(alpha_j) paired with the simple coroots
};

std::uint64_t pack(const std::int16_t* lambda, int n) {
  std::uint64_t key = 0;
  for (int j = 0; j < n; ++j) key = (key << 7) | static_cast<std::uint64_t>(lambda[j] + 64);
  return key;
}

// Open addressing; keys are never 0 because of the +64 offset in pack().
class KeyIndex {
 public:
  explicit KeyIndex(long long count) {
    size_t cap = 16;
    while (cap < static_cast<size_t>(count) * 2) cap <<= 1;
    keys_.assign(cap, 0);
    values_.assign(cap, -1);
    mask_ = cap - 1;
  }
  // Returns the existing value, or inserts value and returns -1.
  std::int32_t insert(std::uint64_t key, std::int32_t value) {
    size_t slot = hash(key);
    while (keys_[slot] != 0) {
      if (keys_[slot] == key) return values_[slot];
      slot = (slot + 1) & mask_;
    }
    keys_[slot] = key;
    values_[slot] = value;
    return -1;
  }
  std::int32_t find(std::uint64_t key) const {
    size_t slot = hash(key);
    while (keys_[slot] != 0) {
      if (keys_[slot] == key) return values_[slot];
      slot = (slot + 1) & mask_;
    }
    return -1;
  }

 private:
  size_t hash(std::uint64_t key) const { return static_cast<size_t>((key * 0x9E3779B97F4A7C15ULL) >> 20) & mask_; }
  std::vector<std::uint64_t> keys_;
  std::vector<std::int32_t> values_;
  size_t mask_ = 0;
};

struct UnionFind {
  std::vector<std::int32_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::int32_t find(std::int32_t x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// BFS by length. With classes, elements of length <= l+1 are indexed while
// layer l is processed, so conjugates s w s of length <= l(w) are found.
long long walk(const RootSystem& rs, long long budget, const std::function<void(const WeylElement&)>* visit,
               bool classes) {
  const long long order = weyl_order(rs);
  if (order > budget || rs.rank() > kWalkRank) throw WeylBudgetExceeded(order, budget);
  const int n = rs.rank();
  const IntMat& c = rs.cartan();
  KeyIndex index(classes ? order : 0);
  std::optional<UnionFind> uf;
  if (classes) uf.emplace(static_cast<size_t>(order));

  Layered start{};
  for (int j = 0; j < n; ++j) {
    start.lambda[static_cast<size_t>(j)] = 1;
    start.images[static_cast<size_t>(j * n + j)] = 1;
    for (int k = 0; k < n; ++k) start.weights[static_cast<size_t>(k * n + j)] = static_cast<std::int16_t>(c(k, j));
  }
  start.key = pack(start.lambda.data(), n);
  index.insert(start.key, 0);
  std::vector<Layered> layer{start};
  std::int32_t next_index = 1;
  std::array<std::int16_t, kWalkRank> mu{};
  for (int len = 0; !layer.empty(); ++len) {
    std::vector<Layered> next;
    for (const Layered& w : layer) {
      if (visit) {
        WeylElement e{IntMat(n, n), len};
        for (int r = 0; r < n; ++r)
          for (int col = 0; col < n; ++col) e.images(r, col) = w.images[static_cast<size_t>(r * n + col)];
        (*visit)(e);
      }
      for (int i = 0; i < n; ++i) {
        const int li = w.lambda[static_cast<size_t>(i)];
        if (li <= 0) continue;
        for (int j = 0; j < n; ++j) mu[static_cast<size_t>(j)] = static_cast<std::int16_t>(w.lambda[static_cast<size_t>(j)] - li * c(j, i));
        std::uint64_t key = 0;
        if (classes) {
          key = pack(mu.data(), n);
          if (index.insert(key, next_index) >= 0) continue;
        } else {
          // reached only from its smallest left descent
          bool first = true;
          for (int j = 0; j < i && first; ++j) first = mu[static_cast<size_t>(j)] >= 0;
          if (!first) continue;
        }
        ++next_index;
        Layered& s = next.emplace_back(w);
        s.key = key;
        s.lambda = mu;
        // s_i acts on the coefficient of alpha_i and on each coroot pairing
        for (int col = 0; col < n; ++col) {
          int dot = 0;
          for (int k = 0; k < n; ++k) dot += c(i, k) * w.images[static_cast<size_t>(k * n + col)];
          s.images[static_cast<size_t>(i * n + col)] = static_cast<std::int16_t>(s.images[static_cast<size_t>(i * n + col)] - dot);
          const int wi = w.weights[static_cast<size_t>(i * n + col)];
          for (int k = 0; k < n; ++k)
            s.weights[static_cast<size_t>(k * n + col)] = static_cast<std::int16_t>(w.weights[static_cast<size_t>(k * n + col)] - wi * c(k, i));
        }
      }
      if (!classes) continue;
      const std::int32_t self = index.find(w.key);
      for (int g = 0; g < n; ++g) {
        // s_g w s_g (rho) = s_g (w rho - w alpha_g)
        for (int j = 0; j < n; ++j)
          mu[static_cast<size_t>(j)] = static_cast<std::int16_t>(w.lambda[static_cast<size_t>(j)] - w.weights[static_cast<size_t>(j * n + g)]);
        const int mg = mu[static_cast<size_t>(g)];
        for (int j = 0; j < n; ++j) mu[static_cast<size_t>(j)] = static_cast<std::int16_t>(mu[static_cast<size_t>(j)] - mg * c(j, g));
        const std::int32_t other = index.find(pack(mu.data(), n));
        if (other >= 0) uf->unite(self, other);
      }
    }
    layer = std::move(next);
  }
  if (next_index != order) throw std::logic_error("Weyl group BFS size disagrees with the degrees");
  if (!classes) return order;
  long long count = 0;
  for (std::int32_t x = 0; x < next_index; ++x)
    if (uf->find(x) == x) ++count;
  return count;
}

}  // namespace

void for_each_element(const RootSystem& rs, const std::function<void(const WeylElement&)>& fn, long long budget) {
  walk(rs, budget, &fn, false);
}

std::vector<WeylElement> enumerate(const RootSystem& rs, long long budget) {
  std::vector<WeylElement> out;
  for_each_element(rs, [&](const WeylElement& w) { out.push_back(w); }, budget);
  return out;
}

std::optional<long long> conjugacy_class_count(const RootSystem& rs, long long budget) {
  if (weyl_order(rs) > budget || rs.rank() > kWalkRank) return std::nullopt;
  return walk(rs, budget, nullptr, true);
}

long long PoincarePoly::total() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0LL); }

bool PoincarePoly::palindromic() const { return std::equal(coeffs.begin(), coeffs.end(), coeffs.rbegin()); }

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

std::optional<IntPoly> poly_div_exact(const IntPoly& a, const IntPoly& b) {
  IntPoly num = a, den = b;
  trim(num);
  trim(den);
  if (den.empty()) throw std::invalid_argument("division by the zero polynomial");
  if (num.empty()) return IntPoly{};
  if (num.size() < den.size()) return std::nullopt;
  IntPoly quot(num.size() - den.size() + 1, 0);
  for (size_t k = quot.size(); k-- > 0;) {
    const long long lead = num[k + den.size() - 1];
    if (lead % den.back() != 0) return std::nullopt;
    const long long c = lead / den.back();
    quot[k] = c;
    for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) return std::nullopt;
  return quot;
}

IntPoly cyclotomic(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
  IntPoly p(static_cast<size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = *poly_div_exact(p, cyclotomic(d));
  return p;
}

PoincarePoly poincare(const RootSystem& rs) {
  IntPoly num{1};
  for (int d : rs.degrees()) {
    IntPoly f(static_cast<size_t>(d) + 1, 0);
    f[0] = -1;
    f[static_cast<size_t>(d)] = 1;
    num = poly_mul(num, f);
  }
  for (int i = 0; i < rs.rank(); ++i) {
    auto q = poly_div_exact(num, {-1, 1});
    if (!q) throw std::logic_error("product of degrees not divisible by (q-1)^n");
    num = *q;
  }
  return PoincarePoly{num};
}

PoincarePoly poincare_by_enumeration(const RootSystem& rs, long long budget) {
  PoincarePoly out;
  out.coeffs.assign(static_cast<size_t>(rs.positive_count()) + 1, 0);
  for_each_element(rs, [&](const WeylElement& w) { ++out.coeffs[static_cast<size_t>(w.length)]; }, budget);
  return out;
}

bool poincare_vanishes(const RootSystem& rs, QOrder m) {
  if (m.is_infinite() || m.value() == 1) return false;
  for (int d : rs.degrees())
    if (d % m.value() == 0) return true;
  return false;
}

bool poincare_vanishes_cyclotomic(const RootSystem& rs, int m) {
  return poly_div_exact(poincare(rs).coeffs, cyclotomic(m)).has_value();
}

std::vector<int> valid_orders(const RootSystem& rs) {
  std::vector<int> out;
  const int top = rs.degrees().back();
  for (int m = 2; m < top; ++m)
    if (!poincare_vanishes(rs, QOrder::finite(m))) out.push_back(m);
  return out;
}

long long irr_count(const RootSystemType& type) {
  const int n = type.rank;
  switch (type.family) {
    case Family::A: return static_cast<long long>(partition_count(n + 1));
    case Family::B:
    case Family::C: return static_cast<long long>(ordered_pairs(n));
    case Family::D: return static_cast<long long>(typeD_count(n));
    case Family::E: return n == 6 ? 25 : n == 7 ? 60 : 112;
    case Family::F: return 25;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace hv
