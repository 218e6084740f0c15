#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cobord {

// Arbitrary-precision fraction, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Thrown when two independent computations of the same quantity disagree.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "num/den", or plain "num" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "n" or "n/d" with an optional leading sign.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational rational(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace cobord
