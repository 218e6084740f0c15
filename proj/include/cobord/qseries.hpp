#pragma once

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "cobord/rational.hpp"
#include "cobord/ring.hpp"

namespace cobord {

inline Rational zero_like(const Rational&) { return 0; }
inline GradedElement zero_like(const GradedElement& x) { return x.ring()->zero(); }
inline Rational one_like(const Rational&) { return 1; }
inline GradedElement one_like(const GradedElement& x) { return x.ring()->one(); }

/// Power series in q truncated after q^order. Coefficient type is a Rational,
/// a GradedElement of one ring, or another series (for bivariate expansions).
template <class T>
class QSeries {
 public:
  /// Series with coefficients 0..order, all copies of `zero`.
  QSeries(std::size_t order, const T& zero) : coefficients_(order + 1, zero) {}
  explicit QSeries(std::vector<T> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw std::invalid_argument("series needs at least a constant term");
  }

  std::size_t order() const { return coefficients_.size() - 1; }
  const T& operator[](std::size_t i) const { return coefficients_.at(i); }
  T& operator[](std::size_t i) { return coefficients_.at(i); }
  const std::vector<T>& coefficients() const { return coefficients_; }

  QSeries& operator+=(const QSeries& other) {
    require_order(other);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
    return *this;
  }
  QSeries& operator-=(const QSeries& other) {
    require_order(other);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
    return *this;
  }
  friend QSeries operator+(QSeries x, const QSeries& y) { return x += y; }
  friend QSeries operator-(QSeries x, const QSeries& y) { return x -= y; }
  QSeries operator-() const {
    QSeries out = *this;
    for (auto& c : out.coefficients_) c = -c;
    return out;
  }
  QSeries& operator*=(const QSeries& other) { return *this = *this * other; }
  friend QSeries operator*(const QSeries& x, const QSeries& y) {
    x.require_order(y);
    return series_mul(x, y, x.order());
  }
  friend bool operator==(const QSeries& x, const QSeries& y) { return x.coefficients_ == y.coefficients_; }

 private:
  void require_order(const QSeries& other) const {
    if (other.order() != order()) throw std::invalid_argument("q-series orders differ");
  }

  std::vector<T> coefficients_;
};

inline QSeries<Rational> zero_like(const QSeries<Rational>& x) { return QSeries<Rational>(x.order(), Rational(0)); }

/// Cauchy product truncated after q^order. Each product of coefficients must be
/// defined (both scalars, both in one ring, or series times scalar series).
template <class S, class T>
auto series_mul(const QSeries<S>& s, const QSeries<T>& t, std::size_t order) {
  constexpr bool keep_left = std::is_same_v<S, T> || std::is_same_v<T, Rational>;
  static_assert(keep_left || std::is_same_v<S, Rational>, "incompatible coefficient kinds");
  using R = std::conditional_t<keep_left, S, T>;
  QSeries<R> out = [&] {
    if constexpr (keep_left)
      return QSeries<R>(order, zero_like(s[0]));
    else
      return QSeries<R>(order, zero_like(t[0]));
  }();
  for (std::size_t i = 0; i <= std::min(order, s.order()); ++i)
    for (std::size_t j = 0; i + j <= order && j <= t.order(); ++j) {
      if constexpr (keep_left)
        out[i + j] += R(s[i] * t[j]);
      else
        out[i + j] += R(t[j] * s[i]);
    }
  return out;
}

/// Multiplicative inverse; the constant term must be a unit.
inline Rational inverse(const Rational& x) {
  if (x == 0) throw std::domain_error("division by zero");
  return 1 / x;
}

template <class T>
QSeries<T> inverse(const QSeries<T>& s) {
  const T c0 = inverse(s[0]);
  QSeries<T> out(s.order(), zero_like(s[0]));
  out[0] = c0;
  for (std::size_t n = 1; n <= s.order(); ++n) {
    T acc = zero_like(s[0]);
    for (std::size_t i = 1; i <= n; ++i) acc += s[i] * out[n - i];
    out[n] = -(c0 * acc);
  }
  return out;
}

template <class T>
QSeries<T> series_pow(const QSeries<T>& s, unsigned n) {
  QSeries<T> result(s.order(), zero_like(s[0]));
  result[0] = zero_like(s[0]);
  result[0] += one_like(s[0]);
  QSeries<T> base = s;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

inline QSeries<Rational> one_like(const QSeries<Rational>& x) {
  QSeries<Rational> out(x.order(), Rational(0));
  out[0] = 1;
  return out;
}

/// Truncated power series in one variable with rational coefficients.
using PowerSeries = QSeries<Rational>;

}  // namespace cobord
