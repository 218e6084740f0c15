#pragma once

#include <map>
#include <string>
#include <vector>

#include "cobord/manifold.hpp"
#include "cobord/partition.hpp"
#include "cobord/qseries.hpp"
#include "cobord/rational.hpp"

namespace cobord {

/// Even power series f(x) = sum_j coefficients[j] x^{2j}, with f(0) = 1.
struct CharacteristicSeries {
  std::string name;
  std::vector<Rational> coefficients;
};

/// x / tanh(x), through x^{2*max_j}. Gives the signature.
CharacteristicSeries l_series(int max_j);
/// (x/2) / sinh(x/2), through x^{2*max_j}.
CharacteristicSeries ahat_series(int max_j);

/// Polynomial in p_1, p_2, ...: partition (i_1..i_m) stands for p_{i_1}...p_{i_m}.
using PontryaginPolynomial = std::map<Partition, Rational>;

struct MultiplicativeSequence {
  CharacteristicSeries source;
  /// k_polys[j] is K_j, homogeneous of weight j; k_polys[0] = 1.
  std::vector<PontryaginPolynomial> k_polys;
};

/// Expands prod_{i<=m} f(x_i) in m formal variables (m = max_weight unless given),
/// rewrites each weight part in elementary symmetric functions of the x_i^2 and
/// substitutes e_j -> p_j.
MultiplicativeSequence universal_k_polynomials(const CharacteristicSeries& series, int max_weight,
                                               int variables = 0);

/// Coefficients of a symmetric polynomial in elementary symmetric functions.
/// The input lives in a ring whose generators y_1..y_m all have one degree and
/// carry no relations.
PontryaginPolynomial symmetric_to_elementary(const GradedElement& symmetric);

/// m_lambda (monomial symmetric function) expanded in e_mu, for every partition
/// lambda of `weight`, computed with `variables` formal variables (default: weight).
/// Thread-safe memo.
const std::map<Partition, PontryaginPolynomial>& monomial_to_elementary(int weight, int variables = 0);

/// Value of a polynomial in Pontryagin classes as an element of the manifold's ring.
GradedElement evaluate_classes(const ManifoldModel& m, const PontryaginPolynomial& poly);

struct GenusValue {
  Rational value;
  /// Set when dim is not divisible by 4; the value is then 0 by convention.
  bool flagged = false;
};

/// K_{dim/4}(p)[M]. For manifolds with stable Chern roots the product over the
/// roots is paired as well, and disagreement raises ConsistencyError.
GenusValue evaluate_genus(const ManifoldModel& m, const MultiplicativeSequence& seq);

/// Memoized L and A-hat sequences up to the given weight.
const MultiplicativeSequence& l_sequence(int max_weight);
const MultiplicativeSequence& ahat_sequence(int max_weight);

Rational signature(const ManifoldModel& m);
Rational ahat(const ManifoldModel& m);

/// Coefficient of x^{2j} (j = 0..max_j) of A-hat(x) * prod_{n odd} (1-q^n e^x)(1-q^n e^-x)
/// * prod_{n even} ((1-q^n e^x)(1-q^n e^-x))^{-1}, each a q-series through q^q_order.
std::vector<PowerSeries> elliptic_characteristic_series(int max_j, int q_order);

/// Coefficients of q^0..q^order of q^{k/2} phi(M) for dim M = 4k. Coefficient 0 is
/// A-hat(M), coefficient 1 is -A-hat(M; T_C M). Manifolds with stable Chern roots
/// are evaluated through the roots and cross-checked against the universal
/// polynomials; otherwise the universal polynomials are used.
std::vector<Rational> elliptic_q_coefficients(const ManifoldModel& m, int order);

/// Same series through the universal polynomial route only.
std::vector<Rational> elliptic_q_coefficients_universal(const ManifoldModel& m, int order);
/// Same series through the Chern roots only (stable complex manifolds).
std::vector<Rational> elliptic_q_coefficients_roots(const ManifoldModel& m, int order);

/// Index of the Dirac operator twisted by the complexified tangent bundle,
/// pair(A-hat class * ch(T_C M)).
Rational twisted_ahat_tangent(const ManifoldModel& m);

/// ch(T_C M) from Newton power sums of the Pontryagin classes.
GradedElement tangent_character(const ManifoldModel& m);

}  // namespace cobord
