#include "hv/nilorbits.hpp"

#include "hv/weylgrp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace hv {

namespace {

int index_or_throw(const RootSystem& rs, const Root& r) {
  const auto idx = rs.index_of(r);
  if (!idx) throw std::invalid_argument("not a root: " + format_root(r));
  return *idx;
}

void sort_by_index(const RootSystem& rs, std::vector<Root>& roots) {
  std::sort(roots.begin(), roots.end(),
            [&](const Root& a, const Root& b) { return index_or_throw(rs, a) < index_or_throw(rs, b); });
}

long long mod(long long a, long long m) { return floor_mod(a, m); }

long long pow_mod(long long b, long long e, long long p) {
  long long r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int primitive_root(int p) {
  std::vector<int> factors;
  int n = p - 1;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) factors.push_back(n);
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int f : factors)
      if (pow_mod(g, (p - 1) / f, p) == 1) ok = false;
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

struct UnionFind {
  std::vector<long long> parent;
  explicit UnionFind(long long n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0LL); }
  long long find(long long x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(long long a, long long b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

NilModule build_nqs(const RootSystem& rs, QOrder order) {
  if (order.is_finite() && (order.value() == 1 || poincare_vanishes(rs, order)))
    throw HypothesisError("(q-1) * Poincare polynomial of " + rs.type().name() + " vanishes at order " + order.str());
  const TorusPoint s = standard_point(rs, order);
  NilModule nm;
  nm.order = order;
  nm.basis = roots_with_exponent(rs, s, 1);
  nm.generators = roots_with_exponent(rs, s, 0);
  return nm;
}

std::vector<Submodule> decompose(const RootSystem& rs, const NilModule& nm, const StructureConstants& sc) {
  const int d = static_cast<int>(nm.basis.size());
  std::map<int, int> pos;
  for (int k = 0; k < d; ++k) pos[index_or_throw(rs, nm.basis[static_cast<size_t>(k)])] = k;
  std::vector<int> parent(static_cast<size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]);
  };
  for (const auto& g : nm.generators) {
    const int gi = index_or_throw(rs, g);
    for (int k = 0; k < d; ++k) {
      const Root& b = nm.basis[static_cast<size_t>(k)];
      const auto target = rs.index_of(Root(b + g));
      if (!target) continue;
      const auto it = pos.find(*target);
      if (it == pos.end()) throw std::logic_error("ad(e_gamma) leaves N_{q,s}: " + format_root(b) + " + " + format_root(g));
      if (sc(gi, index_or_throw(rs, b)) != 0) parent[static_cast<size_t>(find(k))] = find(it->second);
    }
  }
  std::map<int, Submodule> comps;
  for (int k = 0; k < d; ++k) comps[find(k)].support.push_back(nm.basis[static_cast<size_t>(k)]);
  std::vector<Submodule> out;
  for (auto& [key, c] : comps) {
    sort_by_index(rs, c.support);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [&](const Submodule& a, const Submodule& b) {
    return index_or_throw(rs, a.support.front()) < index_or_throw(rs, b.support.front());
  });
  return out;
}

Submodule join(const RootSystem& rs, const std::vector<Submodule>& parts) {
  Submodule out;
  for (const auto& p : parts) out.support.insert(out.support.end(), p.support.begin(), p.support.end());
  sort_by_index(rs, out.support);
  return out;
}

std::vector<int> admissible_primes(int m, int bound) {
  std::vector<int> out;
  for (int p = 5; p <= bound; ++p)
    if (is_prime(p) && (m == 0 || (p - 1) % m == 0)) out.push_back(p);
  return out;
}

namespace {

struct Term {
  int from;
  int to;
  int power;
  long long coef;
};

struct SupportData {
  std::vector<int> members;  // basis positions, increasing
  LongMat left;
  LongMat left_inverse;
  std::vector<long long> head_mod;  // gcd(d_i, p - 1) for i < rank
  int tail = 0;
  long long offset = 0;
};

class FieldModel {
 public:
  FieldModel(const RootSystem& rs, const StructureConstants& sc, const NilModule& nm, const Submodule& module, int p,
             const OrbitConfig& config)
      : p_(p), d_(module.dim()) {
    if (d_ > config.dim_cap)
      throw OrbitRefusal("module dimension " + std::to_string(d_) + " exceeds the cap " + std::to_string(config.dim_cap));
    if (!is_prime(p) || p <= 3) throw std::invalid_argument("p must be a prime > 3");
    std::map<int, int> pos;
    for (int k = 0; k < d_; ++k) pos[index_or_throw(rs, module.support[static_cast<size_t>(k)])] = k;
    pos_ = pos;
    const int n = rs.rank();
    weights_ = LongMat(d_, n);
    for (int k = 0; k < d_; ++k) {
      const IntVec w = rs.cartan() * module.support[static_cast<size_t>(k)];
      for (int i = 0; i < n; ++i) weights_(k, i) = w(i);
    }
    const long long inv_fact[4] = {1, 1, pow_mod(2, p - 2, p), pow_mod(6, p - 2, p)};
    for (const auto& g : nm.generators) {
      const int gi = index_or_throw(rs, g);
      std::vector<Term> terms;
      for (int k = 0; k < d_; ++k) {
        Root cur = module.support[static_cast<size_t>(k)];
        long long coef = 1;
        for (int e = 1; e <= 3; ++e) {
          const auto next = rs.index_of(Root(cur + g));
          if (!next) break;
          const int nc = sc(gi, index_or_throw(rs, cur));
          if (nc == 0) break;
          coef *= nc;
          const auto it = pos.find(*next);
          if (it == pos.end()) throw std::logic_error("unipotent move leaves the chosen submodule");
          terms.push_back({k, it->second, e, mod(coef * inv_fact[e], p)});
          cur = rs.root(*next);
        }
      }
      if (!terms.empty()) moves_.push_back(std::move(terms));
    }
    const int g = primitive_root(p);
    pow_.assign(static_cast<size_t>(p - 1), 0);
    dlog_.assign(static_cast<size_t>(p), -1);
    long long x = 1;
    for (int e = 0; e < p - 1; ++e) {
      pow_[static_cast<size_t>(e)] = x;
      dlog_[static_cast<size_t>(x)] = e;
      x = x * g % p;
    }
    supports_.resize(size_t{1} << d_);
    long long offset = 0;
    for (size_t mask = 0; mask < supports_.size(); ++mask) {
      SupportData& s = supports_[mask];
      for (int k = 0; k < d_; ++k)
        if (mask >> k & 1) s.members.push_back(k);
      const int r = static_cast<int>(s.members.size());
      s.offset = offset;
      if (r == 0) {
        offset += 1;
        continue;
      }
      LongMat w(r, n);
      for (int i = 0; i < r; ++i) w.row(i) = weights_.row(s.members[static_cast<size_t>(i)]);
      const SmithForm snf = smith_normal_form(w);
      s.left = snf.left;
      s.left_inverse = snf.left_inverse;
      for (long long dv : snf.divisors) s.head_mod.push_back(std::gcd(dv, static_cast<long long>(p - 1)));
      s.tail = r - static_cast<int>(snf.rank());
      long long count = 1;
      for (int t = 0; t < s.tail; ++t) {
        count *= p - 1;
        if (count > config.label_budget) break;
      }
      offset += count;
      if (offset > config.label_budget)
        throw OrbitRefusal("torus classes exceed the label budget " + std::to_string(config.label_budget) + " (dim " +
                           std::to_string(d_) + ", p = " + std::to_string(p) + ")");
    }
    labels_ = offset;
  }

  long long labels() const { return labels_; }

  long long label_of(const std::vector<long long>& v) const {
    size_t mask = 0;
    for (int k = 0; k < d_; ++k)
      if (v[static_cast<size_t>(k)] != 0) mask |= size_t{1} << k;
    const SupportData& s = supports_[mask];
    if (s.members.empty()) return s.offset;
    const int r = static_cast<int>(s.members.size());
    const int rho = r - s.tail;
    long long index = 0;
    for (int i = r - 1; i >= rho; --i) {
      long long b = 0;
      for (int j = 0; j < r; ++j)
        b += s.left(i, j) * dlog_[static_cast<size_t>(v[static_cast<size_t>(s.members[static_cast<size_t>(j)])])];
      index = index * (p_ - 1) + mod(b, p_ - 1);
    }
    return s.offset + index;
  }

  long long run(UnionFind& uf) const {
    std::vector<long long> v(static_cast<size_t>(d_)), w(static_cast<size_t>(d_));
    for (const SupportData& s : supports_) {
      const int r = static_cast<int>(s.members.size());
      if (r == 0 || moves_.empty()) continue;
      const int rho = r - s.tail;
      std::vector<long long> b(static_cast<size_t>(r), 0);
      // iterate tail values and torus cosets of the head
      std::function<void(int)> rec = [&](int i) {
        if (i == r) {
          visit(s, b, v, w, uf);
          return;
        }
        const long long limit = i < rho ? s.head_mod[static_cast<size_t>(i)] : p_ - 1;
        for (long long x = 0; x < limit; ++x) {
          b[static_cast<size_t>(i)] = x;
          rec(i + 1);
        }
      };
      rec(0);
    }
    return labels_;
  }

  int position(int root_index) const {
    const auto it = pos_.find(root_index);
    return it == pos_.end() ? -1 : it->second;
  }
  int dim() const { return d_; }
  int p() const { return p_; }

 private:
  void visit(const SupportData& s, const std::vector<long long>& b, std::vector<long long>& v, std::vector<long long>& w,
             UnionFind& uf) const {
    const int r = static_cast<int>(s.members.size());
    std::fill(v.begin(), v.end(), 0);
    for (int j = 0; j < r; ++j) {
      long long a = 0;
      for (int i = 0; i < r; ++i) a += s.left_inverse(j, i) * b[static_cast<size_t>(i)];
      v[static_cast<size_t>(s.members[static_cast<size_t>(j)])] = pow_[static_cast<size_t>(mod(a, p_ - 1))];
    }
    const long long self = label_of(v);
    // a label covers a whole torus orbit, so each root group needs every c
    for (const auto& terms : moves_) {
      bool active = false;
      for (const Term& t : terms) active = active || v[static_cast<size_t>(t.from)] != 0;
      if (!active) continue;
      for (long long c = 1; c < p_; ++c) {
        const long long cpow[4] = {1, c, c * c % p_, c * c % p_ * c % p_};
        w = v;
        for (const Term& t : terms) {
          const long long src = v[static_cast<size_t>(t.from)];
          if (src == 0) continue;
          w[static_cast<size_t>(t.to)] = (w[static_cast<size_t>(t.to)] + t.coef * cpow[t.power] % p_ * src) % p_;
        }
        uf.unite(self, label_of(w));
      }
    }
  }

  int p_;
  int d_;
  std::map<int, int> pos_;
  LongMat weights_;
  std::vector<std::vector<Term>> moves_;
  std::vector<long long> pow_;
  std::vector<long long> dlog_;
  std::vector<SupportData> supports_;
  long long labels_ = 0;
};

}  // namespace

FieldOrbits orbit_count_ff(const RootSystem& rs, const StructureConstants& sc, const NilModule& nm,
                           const Submodule& module, int p, const OrbitConfig& config,
                           const std::vector<FieldVector>& queries) {
  const FieldModel model(rs, sc, nm, module, p, config);
  UnionFind uf(model.labels());
  model.run(uf);
  std::map<long long, long long> class_index;
  for (long long x = 0; x < model.labels(); ++x) {
    const long long root = uf.find(x);
    if (!class_index.count(root)) class_index.emplace(root, static_cast<long long>(class_index.size()));
  }
  FieldOrbits out;
  out.p = p;
  out.count = static_cast<long long>(class_index.size());
  out.labels = model.labels();
  for (const auto& q : queries) {
    std::vector<long long> v(static_cast<size_t>(model.dim()), 0);
    bool inside = true;
    for (const auto& [root, c] : q) {
      const int k = model.position(index_or_throw(rs, root));
      if (k < 0) inside = false;
      else v[static_cast<size_t>(k)] = mod(c, p);
    }
    out.query_classes.push_back(inside ? class_index.at(uf.find(model.label_of(v))) : -1);
  }
  return out;
}

OrbitCount orbit_count(const RootSystem& rs, const StructureConstants& sc, const NilModule& nm, const Submodule& module,
                       const OrbitConfig& config, const std::vector<FieldVector>& queries) {
  OrbitCount out;
  const int m = nm.order.is_finite() ? nm.order.value() : 0;
  auto primes = admissible_primes(m, config.prime_bound);
  // primes with p - 1 prime to |Z| first: central torsion splits F_p-orbits
  const long long z = rs.center_order();
  std::stable_sort(primes.begin(), primes.end(),
                   [z](int a, int b) { return std::gcd(z, a - 1LL) < std::gcd(z, b - 1LL); });
  if (static_cast<int>(primes.size()) < config.min_primes) {
    out.refused = true;
    out.prime_shortage = true;
    out.note = "fewer than " + std::to_string(config.min_primes) + " admissible primes p = 1 mod " + std::to_string(m) +
               " below " + std::to_string(config.prime_bound);
    return out;
  }
  try {
    for (int i = 0; i < config.min_primes; ++i) {
      const FieldOrbits f = orbit_count_ff(rs, sc, nm, module, primes[static_cast<size_t>(i)], config, queries);
      out.primes_used.push_back(f.p);
      out.per_prime.push_back(f.count);
      if (i == 0) out.query_classes = f.query_classes;
    }
  } catch (const OrbitRefusal& e) {
    out.refused = true;
    out.note = e.what();
    return out;
  }
  out.count = out.per_prime.front();
  out.stable = std::all_of(out.per_prime.begin(), out.per_prime.end(), [&](long long c) { return c == out.count; });
  if (!out.stable) out.note = "orbit count depends on the prime";
  return out;
}

OrbitCount orbit_count_regular(const RootSystem& rs, const OrbitConfig& config) {
  const NilModule nm = build_nqs(rs, QOrder::infinite());
  const StructureConstants sc = structure_constants(rs);
  Submodule all;
  all.support = nm.basis;
  return orbit_count(rs, sc, nm, all, config);
}

}  // namespace hv
