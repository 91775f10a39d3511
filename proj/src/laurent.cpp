#include "hv/laurent.hpp"

#include <stdexcept>

namespace hv {

Laurent Laurent::monomial(int k, long long c) {
  Laurent out;
  if (c != 0) out.terms_[k] = c;
  return out;
}

long long Laurent::coeff(int k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? 0 : it->second;
}

int Laurent::min_degree() const {
  if (is_zero()) throw std::logic_error("zero polynomial has no degree");
  return terms_.begin()->first;
}

int Laurent::max_degree() const {
  if (is_zero()) throw std::logic_error("zero polynomial has no degree");
  return terms_.rbegin()->first;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) {
    const long long s = (terms_[k] += c);
    if (s == 0) terms_.erase(k);
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) {
    const long long s = (terms_[k] -= c);
    if (s == 0) terms_.erase(k);
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [i, x] : a.terms_)
    for (const auto& [j, y] : b.terms_) {
      const long long s = (out.terms_[i + j] += x * y);
      if (s == 0) out.terms_.erase(i + j);
    }
  return out;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

long long Laurent::at_one() const {
  long long s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

long long Laurent::at_minus_one() const {
  long long s = 0;
  for (const auto& [k, c] : terms_) s += (k % 2 == 0) ? c : -c;
  return s;
}

Laurent Laurent::bar() const {
  Laurent out;
  for (const auto& [k, c] : terms_) out.terms_[-k] = c;
  return out;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [k, c] = *it;
    const long long mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += k == 1 ? "v" : "v^" + std::to_string(k);
  }
  return out;
}

}  // namespace hv
