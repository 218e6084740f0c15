#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cobord/manifold.hpp"
#include "cobord/matrix.hpp"
#include "cobord/partition.hpp"
#include "cobord/polynomial.hpp"
#include "cobord/rational.hpp"

namespace cobord {

/// Largest supported weight dim/4.
inline constexpr int kMaxWeight = 7;

/// Pontryagin numbers of a 4k-manifold, one per partition of k.
struct CharNumberVector {
  int dimension = 0;
  std::map<Partition, Rational> values;

  friend bool operator==(const CharNumberVector&, const CharNumberVector&) = default;
};

/// Linear combination of Pontryagin numbers in dimension 4k.
struct Functional {
  int dimension = 0;
  std::map<Partition, Rational> coefficients;

  /// All partitions of dim/4 present with zero coefficients.
  static Functional zero(int dimension);
  /// The single Pontryagin number p_I.
  static Functional pontryagin(const Partition& index);

  Rational operator()(const CharNumberVector& numbers) const;
  Functional& operator+=(const Functional& other);
  Functional& operator*=(const Rational& scalar);
  friend Functional operator+(Functional x, const Functional& y) { return x += y; }
  friend Functional operator-(Functional x, const Functional& y) { return x += y * Rational(-1); }
  friend Functional operator*(Functional x, const Rational& s) { return x *= s; }
  friend Functional operator*(const Rational& s, Functional x) { return x *= s; }
  friend bool operator==(const Functional&, const Functional&) = default;

  bool is_zero() const;
  /// Coefficients in partitions_of order.
  std::vector<Rational> as_vector() const;
  /// e.g. "1/3*p1^3 - 2*p1*p2 + p3"; "0" for the zero functional.
  std::string to_string() const;
};

CharNumberVector pontryagin_numbers(const ManifoldModel& m);

/// Products of even complex projective spaces CP^{2 i_1} x ... indexed by the
/// partitions of dim/4; their Pontryagin-number matrix is checked to be invertible.
std::vector<ManifoldModel> basis_manifolds(int dimension);

/// Square matrix of basis Pontryagin numbers: row = basis manifold, column = partition.
RationalMatrix basis_pontryagin_matrix(int dimension);

using GenusEvaluator = std::function<Rational(const ManifoldModel&)>;
using SeriesEvaluator = std::function<std::vector<Rational>(const ManifoldModel&)>;

/// The functional that agrees with `genus` on the rational basis (hence everywhere,
/// provided the genus is a combination of Pontryagin numbers).
Functional genus_as_functional(const GenusEvaluator& genus, int dimension);

/// Same for several genera at once (one evaluation per basis manifold).
std::vector<Functional> genus_as_functionals(const SeriesEvaluator& genera, int dimension);

struct EllipticSpan {
  /// Functionals of the coefficients of q^0..q^N of q^{k/2} phi.
  std::vector<Functional> functionals;
  std::size_t rank = 0;
};

EllipticSpan elliptic_span(int dimension, int q_order);

std::size_t span_rank(const std::vector<Functional>& functionals, int dimension);
bool span_membership(const Functional& f, const std::vector<Functional>& span);

/// One-parameter family c -> manifold, whose Pontryagin numbers are polynomial in c.
struct FamilySpec {
  std::string name;
  int dimension = 0;
  /// Human-readable substitution, e.g. "c -> 2c (spin)".
  std::string parameterization;
  int max_degree = 7;
  std::function<ManifoldModel(long)> build;
};

// Families from projectivized line-bundle sums. The spin variants substitute
// c -> 2c for the families whose spin condition is c even.
FamilySpec family_x12(bool spin_parameterization = true);
FamilySpec family_y16();
FamilySpec family_z20(bool spin_parameterization = true);
FamilySpec family_x12_hp(int n);

/// Names: X12, Y16, Z20, X12xHP:<n>; append ":raw" to X12/Z20 for the unsubstituted c.
FamilySpec family_by_name(const std::string& name);

/// Families used by the boundedness verdict: 12 -> X12, 16 -> Y16, 20 -> Z20, X12xHP:2.
/// Other dimensions >= 20 use X12xHP:<dim/4 - 3>.
std::vector<FamilySpec> designated_families(int dimension);

/// Parameter values used for interpolation: 1..max_degree+1, plus max_degree+2 as a check.
std::vector<long> sample_parameters(const FamilySpec& fam);

/// The exact polynomial c -> f(fam(c)); throws ConsistencyError if the check sample disagrees.
Polynomial family_polynomial(const FamilySpec& fam, const Functional& f);

/// Pontryagin-number polynomials of a family, one per partition.
std::map<Partition, Polynomial> family_pontryagin_polynomials(const FamilySpec& fam);

struct FamilyEvaluation {
  std::string family;
  std::string parameterization;
  Polynomial polynomial;
};

struct Verdict {
  bool unbounded = false;
  std::optional<FamilyEvaluation> witness;
  std::vector<FamilyEvaluation> evaluations;
};

Verdict unbounded_verdict(const Functional& f, const std::vector<FamilySpec>& families);

struct Separation {
  long first = 0;
  long second = 0;
  std::optional<Partition> separator;
};

struct DistinctnessCertificate {
  bool distinct = false;
  std::vector<Separation> pairs;
};

DistinctnessCertificate distinct_cobordism_types(const FamilySpec& fam, const std::vector<long>& params);

}  // namespace cobord
