#include "hv/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hv {

namespace {

std::mutex memo_mutex;
std::vector<BigCount> memo{1};

BigCount pow_int(int base, int exp) {
  BigCount r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

BigCount partition_count(int n) {
  if (n < 0) return 0;
  std::lock_guard<std::mutex> lock(memo_mutex);
  for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
    BigCount acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const bool plus = k % 2 == 1;
      const BigCount term = memo[static_cast<size_t>(m - g1)] + (g2 <= m ? memo[static_cast<size_t>(m - g2)] : BigCount(0));
      if (plus)
        acc += term;
      else
        acc -= term;
    }
    memo.push_back(acc);
  }
  return memo[static_cast<size_t>(n)];
}

BigCount ordered_pairs(int n) {
  if (n < 0) return 0;
  BigCount acc = 0;
  for (int i = 0; i <= n; ++i) acc += partition_count(i) * partition_count(n - i);
  return acc;
}

BigCount typeD_count(int n) {
  if (n < 4) throw std::invalid_argument("typeD_count requires n >= 4");
  BigCount acc = 0;
  for (int i = 0; 2 * i < n; ++i) acc += partition_count(n - i) * partition_count(i);
  if (n % 2 == 0) {
    const BigCount pk = partition_count(n / 2);
    acc += pk * (pk + 3) / 2;
  }
  return acc;
}

BigCount typeD_bound(int n) {
  if (n < 4) throw std::invalid_argument("typeD_bound requires n >= 4");
  return n % 2 == 0 ? 16 * pow_int(3, (n - 4) / 2) : 32 * pow_int(3, (n - 5) / 2);
}

bool is_partition(const Partition& a) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) return false;
    if (i > 0 && a[i] > a[i - 1]) return false;
  }
  return true;
}

int weight(const Partition& a) {
  int w = 0;
  for (int x : a) w += x;
  return w;
}

std::string format_partition(const Partition& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      fn(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
}

TauResult tau(const Partition& a, int n) {
  if (n < 8) throw TauDomainError("tau is defined for n >= 8");
  if (!is_partition(a) || a.empty()) throw TauDomainError("not a partition: " + format_partition(a));
  const int w = weight(a);
  const int k = a.back();
  const int r = static_cast<int>(a.size());
  if (k < 2) throw TauDomainError("smallest part must be >= 2: " + format_partition(a));
  TauResult out;
  auto ones = [&](int count) { out.image.insert(out.image.end(), static_cast<size_t>(count), 1); };
  if (w == n - 1) {
    out.branch = "Q(n-1,k>=2): lower last part";
    out.image = a;
    out.image.back() -= 1;
  } else if (w != n) {
    throw TauDomainError("weight " + std::to_string(w) + " is neither n nor n-1");
  } else if (k >= 4) {
    out.branch = "Q(n,k>=4): last part to k-2 ones";
    out.image.assign(a.begin(), a.end() - 1);
    ones(k - 2);
  } else if (k == 3) {
    if (r < 2) throw TauDomainError("Q(n,3) with a single part");
    out.branch = "Q(n,3)";
    out.image.assign(a.begin(), a.end() - 2);
    out.image.push_back(2);
    ones(a[static_cast<size_t>(r - 2)] - 1);
  } else if (r >= 3) {
    const int x = a[static_cast<size_t>(r - 3)], y = a[static_cast<size_t>(r - 2)];
    if (x == y) {
      out.branch = "Q(n,2), r>=3, equal";
      out.image.assign(a.begin(), a.end() - 1);
    } else {
      out.branch = "Q(n,2), r>=3, unequal";
      out.image.assign(a.begin(), a.end() - 3);
      out.image.push_back(y + 1);
      ones(x - 1);
    }
  } else if (r == 2) {
    out.branch = "Q(n,2), two parts";
    out.image = {a[0] - 6, 2, 2, 1, 1};
  } else {
    throw TauDomainError("partition (2) lies outside the domain");
  }
  if (!is_partition(out.image)) {
    std::erase_if(out.image, [](int x) { return x <= 0; });
    std::sort(out.image.begin(), out.image.end(), std::greater<>());
    out.normalized = true;
  }
  return out;
}

namespace {

// bounded[m][k] = number of partitions of m with all parts <= k
const std::vector<std::vector<long long>>& bounded_table(int m) {
  static std::mutex mutex;
  static std::vector<std::vector<long long>> table;
  std::lock_guard<std::mutex> lock(mutex);
  if (static_cast<int>(table.size()) <= m) {
    const int size = std::max(m + 1, 2 * static_cast<int>(table.size()));
    table.assign(static_cast<size_t>(size), std::vector<long long>(static_cast<size_t>(size), 0));
    for (int k = 0; k < size; ++k) table[0][static_cast<size_t>(k)] = 1;
    for (int mm = 1; mm < size; ++mm)
      for (int k = 1; k < size; ++k) {
        long long v = table[static_cast<size_t>(mm)][static_cast<size_t>(k - 1)];
        if (k <= mm) v += table[static_cast<size_t>(mm - k)][static_cast<size_t>(k)];
        table[static_cast<size_t>(mm)][static_cast<size_t>(k)] = v;
      }
  }
  return table;
}

}  // namespace

long long partition_rank(const Partition& a) {
  if (!is_partition(a)) throw std::invalid_argument("not a partition: " + format_partition(a));
  const int total = weight(a);
  const auto& table = bounded_table(total);
  long long rank = 0;
  int rest = total;
  for (int part : a) {
    // partitions whose next part is smaller than this one come first
    for (int j = 1; j < part; ++j) rank += table[static_cast<size_t>(rest - j)][static_cast<size_t>(j)];
    rest -= part;
  }
  return rank;
}

TauCheck check_tau(int n) {
  TauCheck out;
  out.n = n;
  const long long target = static_cast<long long>(partition_count(n - 2));
  std::vector<bool> hit(static_cast<size_t>(target), false);
  auto visit = [&](const Partition& a) {
    if (a.back() < 2) return;
    ++out.domain_size;
    const TauResult t = tau(a, n);
    if (t.normalized) ++out.normalized_cases;
    if (!is_partition(t.image) || weight(t.image) != n - 2) {
      out.well_defined = false;
      return;
    }
    const long long r = partition_rank(t.image);
    if (hit[static_cast<size_t>(r)]) out.injective = false;
    hit[static_cast<size_t>(r)] = true;
    ++out.image_size;
  };
  for_each_partition(n, visit);
  for_each_partition(n - 1, visit);
  return out;
}

std::vector<InequalityCheck> check_inequalities(int range_max, int tau_max) {
  if (range_max < 12) throw std::invalid_argument("range_max must be >= 12");
  std::vector<InequalityCheck> out;
  auto run = [&](std::string name, int from, int to, const std::function<bool(int)>& pred) {
    InequalityCheck c{std::move(name), from, to, true, std::nullopt, ""};
    for (int n = from; n <= to; ++n)
      if (!pred(n)) {
        c.holds = false;
        c.counterexample = n;
        break;
      }
    out.push_back(std::move(c));
  };
  const auto p = partition_count;
  run("2^n > p(n+1)", 2, range_max, [&](int n) { return pow_int(2, n) > p(n + 1); });
  run("p(n) <= p(n-1) + p(n-2)", 2, range_max, [&](int n) { return p(n) <= p(n - 1) + p(n - 2); });
  run("p(n) <= 2 p(n-2)", 8, range_max, [&](int n) { return p(n) <= 2 * p(n - 2); });
  run("2 p(k+1) <= p(k+2) + p(k)", 1, range_max, [&](int k) { return 2 * p(k + 1) <= p(k + 2) + p(k); });
  const int d_max = std::min(range_max, 200);
  run("3 P(n) > P(n+2)", 11, d_max, [&](int n) { return 3 * typeD_count(n) > typeD_count(n + 2); });
  run("D(n) > P(n)", 4, d_max, [&](int n) { return typeD_bound(n) > typeD_count(n); });
  InequalityCheck tc{"tau injective and well defined", 8, std::min(range_max, tau_max), true, std::nullopt, ""};
  long long normalized = 0;
  for (int n = tc.from; n <= tc.to; ++n) {
    const TauCheck t = check_tau(n);
    normalized += t.normalized_cases;
    if (!t.injective || !t.well_defined) {
      tc.holds = false;
      tc.counterexample = n;
      break;
    }
  }
  tc.detail = std::to_string(normalized) + " image(s) re-sorted in the two-part branch";
  out.push_back(std::move(tc));
  return out;
}

}  // namespace hv
