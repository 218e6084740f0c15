#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cobord/rational.hpp"

namespace cobord {

/// Exponent of each generator, in generator order.
using Exponents = std::vector<int>;

/// Sparse polynomial body: monomial -> nonzero coefficient.
using Terms = std::map<Exponents, Rational>;

struct Generator {
  std::string name;
  int degree = 2;
};

/// head^power may be replaced by `replacement`.
struct RewriteRule {
  std::size_t generator = 0;
  int power = 1;
  Terms replacement;
};

class GradedElement;

/// Commutative graded ring on even-degree generators, presented by single-head
/// rewrite rules and truncated above a fixed degree.
///
/// Normal form is taken with respect to lexicographic order, generator 0 greatest.
/// Every replacement monomial must be lex-smaller than its rule head and of the
/// same degree; both are checked in create(), so normalization always terminates.
class RingSpec : public std::enable_shared_from_this<RingSpec> {
 public:
  static std::shared_ptr<const RingSpec> create(std::vector<Generator> generators,
                                                int truncation_dimension,
                                                std::vector<RewriteRule> rules = {});

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int truncation_dimension() const { return truncation_; }
  std::size_t arity() const { return generators_.size(); }

  int degree(const Exponents& monomial) const;
  std::size_t index_of(const std::string& name) const;

  /// Unique normal form of an arbitrary term map.
  Terms normalize(Terms terms) const;

  /// True if no rule applies and the degree is within the truncation.
  bool is_normal(const Exponents& monomial) const;

  GradedElement zero() const;
  GradedElement one() const;
  GradedElement constant(const Rational& value) const;
  GradedElement generator(std::size_t index) const;
  GradedElement generator(const std::string& name) const;
  GradedElement monomial(const Exponents& exponents, const Rational& coefficient = 1) const;

  /// Monomials in normal form, by enumeration up to the truncation degree.
  std::vector<Exponents> normal_monomials() const;

  std::string format(const Exponents& monomial) const;

 private:
  RingSpec(std::vector<Generator> generators, int truncation, std::vector<RewriteRule> rules);

  const RewriteRule* applicable_rule(const Exponents& monomial) const;

  std::vector<Generator> generators_;
  int truncation_;
  std::vector<RewriteRule> rules_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

/// Element of a RingSpec, always held in normal form with no zero coefficients.
class GradedElement {
 public:
  GradedElement(RingPtr ring, Terms terms);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& monomial) const;

  /// Component of the given degree.
  GradedElement homogeneous_part(int degree) const;

  /// All degrees with a nonzero component.
  std::vector<int> degrees() const;

  GradedElement& operator+=(const GradedElement& other);
  GradedElement& operator-=(const GradedElement& other);
  GradedElement& operator*=(const GradedElement& other);
  GradedElement& operator*=(const Rational& scalar);

  friend GradedElement operator+(GradedElement x, const GradedElement& y) { return x += y; }
  friend GradedElement operator-(GradedElement x, const GradedElement& y) { return x -= y; }
  friend GradedElement operator*(const GradedElement& x, const GradedElement& y);
  friend GradedElement operator*(GradedElement x, const Rational& s) { return x *= s; }
  friend GradedElement operator*(const Rational& s, GradedElement x) { return x *= s; }
  GradedElement operator-() const;

  friend bool operator==(const GradedElement& x, const GradedElement& y);

  std::string to_string() const;

 private:
  void require_same_ring(const GradedElement& other) const;

  RingPtr ring_;
  Terms terms_;
};

/// Normal form of an element whose terms may be reducible.
GradedElement normalize(const GradedElement& e);

GradedElement ring_mul(const GradedElement& x, const GradedElement& y);
GradedElement ring_pow(const GradedElement& x, unsigned n);

/// Sum over j of coefficients[j] * x^j, computed by Horner's rule.
GradedElement evaluate_polynomial(const std::vector<Rational>& coefficients, const GradedElement& x);

}  // namespace cobord
