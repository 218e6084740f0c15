#pragma once

#include <string>
#include <vector>

#include "cobord/rational.hpp"

namespace cobord {

/// Univariate polynomial with exact coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(std::size_t power) const;
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  /// Some coefficient of positive degree is nonzero.
  bool is_nonconstant() const { return coefficients_.size() > 1; }

  Rational operator()(const Rational& x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// e.g. "43008*c^5 + 9216*c^3"
  std::string to_string(const std::string& variable = "c") const;

 private:
  std::vector<Rational> coefficients_;
};

/// Unique polynomial of degree < xs.size() through the given points (exact Vandermonde solve).
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace cobord
