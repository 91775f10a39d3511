#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace hv {

/// Multiplicative order of q: a finite m >= 1, or infinite (q generic).
/// m = 1 is the q = 1 specialisation.
class QOrder {
 public:
  constexpr QOrder() = default;
  static constexpr QOrder infinite() { return QOrder(); }
  static QOrder finite(int m) {
    if (m < 1) throw std::invalid_argument("order of q must be positive");
    QOrder o;
    o.m_ = m;
    return o;
  }

  constexpr bool is_infinite() const { return m_ == 0; }
  constexpr bool is_finite() const { return m_ != 0; }
  int value() const {
    if (is_infinite()) throw std::logic_error("infinite order has no value");
    return m_;
  }
  std::string str() const { return is_infinite() ? "inf" : std::to_string(m_); }

  constexpr auto operator<=>(const QOrder&) const = default;

 private:
  int m_ = 0;
};

}  // namespace hv
