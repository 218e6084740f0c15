#include "cobord/polynomial.hpp"

#include <stdexcept>

#include "cobord/matrix.hpp"

namespace cobord {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Polynomial::to_string(const std::string& variable) const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const Rational& c = coefficients_[i];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (i == 0) {
      out += cobord::to_string(mag);
      continue;
    }
    if (mag != 1) out += cobord::to_string(mag) + "*";
    out += variable;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolation needs matching, nonempty samples");
  const std::size_t n = xs.size();
  RationalMatrix vandermonde(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    Rational power = 1;
    for (std::size_t c = 0; c < n; ++c) {
      vandermonde(r, c) = power;
      power *= xs[r];
    }
  }
  auto solution = solve(vandermonde, ys);
  if (!solution || rank(vandermonde) != n) throw std::invalid_argument("interpolation nodes are not distinct");
  return Polynomial(std::move(*solution));
}

}  // namespace cobord
