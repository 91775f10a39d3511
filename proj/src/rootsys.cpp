#include "hv/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hv {

// ---------------------------------------------------------------- types

RootSystemType RootSystemType::make(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (rank > kMaxRank) ok = false;
  RootSystemType t;
  t.family = family;
  t.rank = rank;
  if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for type " + t.name().substr(0, 1));
  return t;
}

RootSystemType RootSystemType::parse(std::string_view name) {
  if (name.size() < 2) throw std::invalid_argument("bad root system name: " + std::string(name));
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  static const std::string families = "ABCDEFG";
  const auto pos = families.find(f);
  if (pos == std::string::npos) throw std::invalid_argument("unknown family: " + std::string(name));
  int rank = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad rank in: " + std::string(name));
    rank = rank * 10 + (c - '0');
  }
  return make(static_cast<Family>(pos), rank);
}

std::string RootSystemType::name() const {
  static const char* letters = "ABCDEFG";
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

bool RootSystemType::simply_laced() const {
  return family == Family::A || family == Family::D || family == Family::E;
}

std::vector<int> degrees_of(const RootSystemType& t) {
  const int n = t.rank;
  std::vector<int> d;
  switch (t.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::G: d = {2, 6}; break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

long long center_order(const RootSystemType& type) { return RootSystem(type).center_order(); }

// ---------------------------------------------------------------- helpers

std::vector<int> to_std(const Root& r) { return std::vector<int>(r.data(), r.data() + r.size()); }

Root from_std(const std::vector<int>& v) {
  Root r(static_cast<Eigen::Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) r(static_cast<Eigen::Index>(i)) = v[i];
  return r;
}

std::string format_root(const Root& r) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < r.size(); ++i) os << (i ? " " : "") << r(i);
  return os.str();
}

// ---------------------------------------------------------------- RootSystem

RootSystem::RootSystem(RootSystemType type) : type_(RootSystemType::make(type.family, type.rank)) {
  build_cartan();
  enumerate_roots();
  degrees_ = degrees_of(type_);
  int exps = 0;
  for (int d : degrees_) exps += d - 1;
  if (exps != positive_count()) throw std::logic_error("degree table disagrees with |R+| for " + type_.name());
}

void RootSystem::build_cartan() {
  const int n = rank();
  form_ = IntMat::Zero(n, n);
  std::vector<int> len2(static_cast<size_t>(n), 2);
  auto link = [&](int i, int j) {  // 1-based simple bond between nodes of equal or compatible length
    const int a = len2[static_cast<size_t>(i - 1)], b = len2[static_cast<size_t>(j - 1)];
    form_(i - 1, j - 1) = form_(j - 1, i - 1) = -std::min(a, b) / 2 * (a == b ? 1 : std::max(a, b) / std::min(a, b));
  };
  switch (type_.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i < n - 1; ++i) len2[static_cast<size_t>(i)] = 4;
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::C:
      len2[static_cast<size_t>(n - 1)] = 4;
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      len2 = {4, 4, 2, 2};
      link(1, 2);
      link(2, 3);
      link(3, 4);
      break;
    case Family::G:
      len2 = {2, 6};
      link(1, 2);
      break;
  }
  for (int i = 0; i < n; ++i) form_(i, i) = len2[static_cast<size_t>(i)];
  cartan_ = IntMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_(i, j) = 2 * form_(i, j) / form_(i, i);
  fundamental_weights_ = exact_inverse_of(cartan_).transpose();

  const auto eps_unit = [n](int k, Rational c) {
    RatVec v = RatVec::Constant(n, Rational(0));
    v(k) = c;
    return v;
  };
  epsilon_basis_.clear();
  if (type_.family == Family::B || type_.family == Family::C || type_.family == Family::D) {
    for (int i = 0; i + 1 < n; ++i) epsilon_basis_.push_back(eps_unit(i, 1) - eps_unit(i + 1, 1));
    if (type_.family == Family::B) epsilon_basis_.push_back(eps_unit(n - 1, 1));
    if (type_.family == Family::C) epsilon_basis_.push_back(eps_unit(n - 1, 2));
    if (type_.family == Family::D) epsilon_basis_.push_back(eps_unit(n - 2, 1) + eps_unit(n - 1, 1));
  } else if (type_.family == Family::F) {
    epsilon_basis_.push_back(eps_unit(1, 1) - eps_unit(2, 1));
    epsilon_basis_.push_back(eps_unit(2, 1) - eps_unit(3, 1));
    epsilon_basis_.push_back(eps_unit(3, 1));
    const Rational h(1, 2);
    epsilon_basis_.push_back(eps_unit(0, h) - eps_unit(1, h) - eps_unit(2, h) - eps_unit(3, h));
  }
}

int RootSystem::inner(const Root& a, const Root& b) const { return a.dot(form_ * b); }

int RootSystem::pairing(const Root& beta, const Root& alpha) const {
  return 2 * inner(beta, alpha) / inner(alpha, alpha);
}

int RootSystem::simple_pairing(const Root& beta, int i) const { return cartan_.row(i).dot(beta); }

Root RootSystem::reflect(const Root& beta, int i) const {
  Root r = beta;
  r(i) -= simple_pairing(beta, i);
  return r;
}

Root RootSystem::simple_root(int i) const {
  Root r = Root::Zero(rank());
  r(i) = 1;
  return r;
}

void RootSystem::enumerate_roots() {
  const int n = rank();
  std::set<std::vector<int>> known;
  std::vector<std::vector<Root>> by_height(1);
  for (int i = 0; i < n; ++i) {
    by_height[0].push_back(simple_root(i));
    known.insert(to_std(simple_root(i)));
  }
  while (!by_height.back().empty()) {
    std::vector<Root> next;
    for (const Root& beta : by_height.back()) {
      for (int i = 0; i < n; ++i) {
        if (beta == simple_root(i)) continue;
        int p = 0;
        Root down = beta;
        while (true) {
          down(i) -= 1;
          if (down(i) < 0 || !known.count(to_std(down))) break;
          ++p;
        }
        const int q = p - simple_pairing(beta, i);
        if (q <= 0) continue;
        Root up = beta;
        up(i) += 1;
        if (known.insert(to_std(up)).second) next.push_back(up);
      }
    }
    by_height.push_back(std::move(next));
  }
  std::vector<Root> pos;
  for (auto& layer : by_height) {
    std::sort(layer.begin(), layer.end(), [](const Root& a, const Root& b) { return to_std(a) > to_std(b); });
    for (auto& r : layer) pos.push_back(r);
  }
  roots_ = pos;
  for (const auto& r : pos) roots_.push_back(-r);
  index_.clear();
  for (size_t i = 0; i < roots_.size(); ++i) index_[to_std(roots_[i])] = static_cast<int>(i);
  highest_root_ = pos.back();
  highest_short_root_ = highest_root_;
  for (const auto& r : pos)
    if (length_class(r) == RootLength::Short) highest_short_root_ = r;  // heights ascend
}

std::vector<Root> RootSystem::positive_roots() const {
  return std::vector<Root>(roots_.begin(), roots_.begin() + positive_count());
}

int RootSystem::negative_of(int index) const {
  const int p = positive_count();
  return index < p ? index + p : index - p;
}

std::optional<int> RootSystem::index_of(const Root& r) const {
  if (r.size() != rank()) return std::nullopt;
  auto it = index_.find(to_std(r));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootLength RootSystem::length_class(const Root& r) const {
  if (type_.simply_laced()) return RootLength::Long;
  int longest = 0;
  for (int i = 0; i < rank(); ++i) longest = std::max(longest, form_(i, i));
  return norm2(r) == longest ? RootLength::Long : RootLength::Short;
}

long long RootSystem::center_order() const { return exact_determinant(cartan_); }

RatVec RootSystem::epsilon_coords(const Root& r) const {
  if (!has_epsilon_view()) throw std::logic_error("no epsilon view for " + type_.name());
  RatVec out = RatVec::Constant(epsilon_basis_.front().size(), Rational(0));
  for (int i = 0; i < rank(); ++i) out += Rational(r(i)) * epsilon_basis_[static_cast<size_t>(i)];
  return out;
}

std::optional<Root> RootSystem::from_epsilon(const RatVec& eps) const {
  for (const auto& r : roots_)
    if (epsilon_coords(r) == eps) return r;
  return std::nullopt;
}

IntVec RootSystem::coroot(const Root& alpha) const {
  const int a2 = norm2(alpha);
  IntVec c(rank());
  for (int i = 0; i < rank(); ++i) {
    const int num = alpha(i) * form_(i, i);
    if (num % a2 != 0) throw std::logic_error("non-integral coroot");
    c(i) = num / a2;
  }
  return c;
}

std::vector<Root> positive_roots_by_reflection(const RootSystem& rs) {
  std::set<std::vector<int>> seen;
  std::deque<Root> queue;
  for (int i = rs.rank() - 1; i >= 0; --i) {
    queue.push_back(rs.simple_root(i));
    seen.insert(to_std(rs.simple_root(i)));
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = rs.rank() - 1; i >= 0; --i) {
      Root s = rs.reflect(r, i);
      if (seen.insert(to_std(s)).second) queue.push_back(s);
    }
  }
  std::vector<Root> out;
  for (const auto& v : seen) {
    Root r = from_std(v);
    if (r.minCoeff() >= 0) out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------- structure constants

int string_below(const RootSystem& rs, int alpha, int beta) {
  int p = 0;
  Root r = rs.root(beta);
  while (true) {
    r -= rs.root(alpha);
    if (!rs.index_of(r)) return p;
    ++p;
  }
}

namespace {

class ChevalleyBuilder {
 public:
  ChevalleyBuilder(const RootSystem& rs, int sign)
      : rs_(rs), n_(rs.root_count()), sign_(sign), memo_(static_cast<size_t>(n_ * n_), INT_MIN),
        sum_(static_cast<size_t>(n_ * n_), -1), extraspecial_(static_cast<size_t>(rs.positive_count()), -1) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        auto c = rs_.index_of(Root(rs_.root(a) + rs_.root(b)));
        if (c) sum_[idx(a, b)] = *c;
      }
    // extraspecial pair of xi: (alpha, xi - alpha) with alpha minimal
    for (int a = 0; a < rs_.positive_count(); ++a)
      for (int b = 0; b < rs_.positive_count(); ++b) {
        const int c = sum_[idx(a, b)];
        if (c >= 0 && extraspecial_[static_cast<size_t>(c)] < 0) extraspecial_[static_cast<size_t>(c)] = a;
      }
  }

  std::vector<int> build() {
    std::vector<int> table(static_cast<size_t>(n_ * n_), 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (sum_[idx(a, b)] >= 0) table[idx(a, b)] = value(a, b);
    return table;
  }

 private:
  size_t idx(int a, int b) const { return static_cast<size_t>(a * n_ + b); }
  int norm(int a) const { return rs_.norm2(rs_.root(a)); }
  int sum(int a, int b) const { return sum_[idx(a, b)]; }

  int value(int a, int b) {
    if (sum(a, b) < 0) return 0;
    int& slot = memo_[idx(a, b)];
    if (slot != INT_MIN) return slot;
    slot = compute(a, b);
    return slot;
  }

  static int exact(long long num, long long den) {
    if (num % den != 0) throw std::logic_error("non-integral structure constant");
    return static_cast<int>(num / den);
  }

  int compute(int a, int b) {
    const bool pa = rs_.is_positive_index(a), pb = rs_.is_positive_index(b);
    if (pa && pb) return positive_case(a, b);
    if (!pa && !pb) return -value(rs_.negative_of(a), rs_.negative_of(b));
    if (!pa) return -value(b, a);
    // a positive, b negative; g = -(a + b)
    const int g = rs_.negative_of(sum(a, b));
    if (rs_.is_positive_index(sum(a, b))) return exact(static_cast<long long>(norm(g)) * value(b, g), norm(a));
    return exact(static_cast<long long>(norm(g)) * value(g, a), norm(b));
  }

  int positive_case(int a, int b) {
    const int xi = sum(a, b);
    const int e1 = extraspecial_[static_cast<size_t>(xi)];
    const int f = sum(rs_.negative_of(e1), xi);
    if (a == e1 && b == f) return sign_ * (string_below(rs_, e1, f) + 1);
    if (a == f && b == e1) return -value(e1, f);
    const int n1 = value(e1, f);
    const int ne1 = rs_.negative_of(e1), nf = rs_.negative_of(f);
    // four-term relation on (a, b, -e1, -f)
    Rational acc(0);
    if (sum(b, ne1) >= 0)
      acc += Rational(static_cast<long long>(value(b, ne1)) * value(a, nf), norm(sum(b, ne1)));
    if (sum(a, ne1) >= 0)
      acc += Rational(static_cast<long long>(value(ne1, a)) * value(b, nf), norm(sum(a, ne1)));
    acc *= Rational(norm(xi), n1);
    if (acc.denominator() != 1) throw std::logic_error("non-integral structure constant");
    return static_cast<int>(acc.numerator());
  }

  const RootSystem& rs_;
  int n_;
  int sign_;
  std::vector<int> memo_;
  std::vector<int> sum_;
  std::vector<int> extraspecial_;
};

}  // namespace

StructureConstants structure_constants(const RootSystem& rs, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign convention must be +1 or -1");
  ChevalleyBuilder builder(rs, sign);
  return StructureConstants(rs.root_count(), builder.build(), sign);
}

long long jacobi_violations(const RootSystem& rs, const StructureConstants& sc) {
  const int n = rs.rank();
  const int nr = rs.root_count();
  const int dim = n + nr;
  // basis: 0..n-1 -> h_i, n + k -> e_{root k}
  std::vector<int> sum(static_cast<size_t>(nr * nr), -1);
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      auto c = rs.index_of(Root(rs.root(a) + rs.root(b)));
      if (c) sum[static_cast<size_t>(a * nr + b)] = *c;
    }
  std::vector<IntVec> coroots;
  for (int a = 0; a < nr; ++a) coroots.push_back(rs.coroot(rs.root(a)));
  using Sparse = std::vector<std::pair<int, long long>>;
  auto bracket = [&](int x, int y, long long c, Sparse& out) {
    if (c == 0) return;
    if (x < n && y < n) return;
    if (x < n) {
      out.emplace_back(y, c * rs.simple_pairing(rs.root(y - n), x));
      return;
    }
    if (y < n) {
      out.emplace_back(x, -c * rs.simple_pairing(rs.root(x - n), y));
      return;
    }
    const int a = x - n, b = y - n;
    if (b == rs.negative_of(a)) {
      for (int i = 0; i < n; ++i)
        if (coroots[static_cast<size_t>(a)](i) != 0) out.emplace_back(i, c * coroots[static_cast<size_t>(a)](i));
      return;
    }
    const int s = sum[static_cast<size_t>(a * nr + b)];
    if (s >= 0) out.emplace_back(n + s, c * sc(a, b));
  };
  auto nested = [&](int x, int y, int z, std::vector<long long>& acc, std::vector<int>& touched) {
    Sparse first;
    bracket(x, y, 1, first);
    for (auto [u, c] : first) {
      Sparse second;
      bracket(u, z, c, second);
      for (auto [v, d] : second) {
        if (acc[static_cast<size_t>(v)] == 0) touched.push_back(v);
        acc[static_cast<size_t>(v)] += d;
      }
    }
  };
  long long bad = 0;
  std::vector<long long> acc(static_cast<size_t>(dim), 0);
  std::vector<int> touched;
  for (int x = 0; x < dim; ++x)
    for (int y = x + 1; y < dim; ++y)
      for (int z = y + 1; z < dim; ++z) {
        touched.clear();
        nested(x, y, z, acc, touched);
        nested(y, z, x, acc, touched);
        nested(z, x, y, acc, touched);
        bool ok = true;
        for (int v : touched) {
          if (acc[static_cast<size_t>(v)] != 0) ok = false;
          acc[static_cast<size_t>(v)] = 0;
        }
        if (!ok) ++bad;
      }
  return bad;
}

}  // namespace hv
