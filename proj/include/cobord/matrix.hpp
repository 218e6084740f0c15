#pragma once

#include <optional>
#include <vector>

#include "cobord/rational.hpp"

namespace cobord {

using RationalVector = std::vector<Rational>;

/// Dense exact matrix. Sizes here stay small (at most a few dozen rows), so
/// plain rational Gaussian elimination is used throughout.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalVector operator*(const RationalVector& v) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// One exact solution of m*x = v, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& v);

/// Basis of {x : m*x = 0}.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

}  // namespace cobord
