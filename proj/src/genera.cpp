#include "cobord/genera.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace cobord {

namespace {

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Series in y = x^2 through y^max_j.
PowerSeries y_series(int max_j, auto&& coefficient) {
  PowerSeries s(static_cast<std::size_t>(max_j), Rational(0));
  for (int j = 0; j <= max_j; ++j) s[static_cast<std::size_t>(j)] = coefficient(j);
  return s;
}

// e^x + e^-x as a series in y.
PowerSeries two_cosh(int max_j) {
  return y_series(max_j, [](int j) -> Rational { return 2 / factorial(2 * j); });
}

std::vector<Rational> truncated(const std::vector<Rational>& coefficients, int max_j) {
  if (static_cast<int>(coefficients.size()) <= max_j)
    throw std::invalid_argument("characteristic series has too few coefficients for weight " + std::to_string(max_j));
  return {coefficients.begin(), coefficients.begin() + max_j + 1};
}

PowerSeries scaled(PowerSeries s, const Rational& factor) {
  for (std::size_t i = 0; i <= s.order(); ++i) s[i] *= factor;
  return s;
}

int weight_of(const ManifoldModel& m) {
  if (m.real_dimension() % 4 != 0)
    throw std::invalid_argument(m.name() + " has dimension " + std::to_string(m.real_dimension()) +
                                ", not divisible by 4");
  return m.real_dimension() / 4;
}

// Roots grouped by equality, with multiplicities.
std::vector<std::pair<GradedElement, unsigned>> grouped_roots(const ManifoldModel& m) {
  std::vector<std::pair<GradedElement, unsigned>> groups;
  for (const auto& x : m.tangent().roots) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == x; });
    if (it == groups.end())
      groups.emplace_back(x, 1U);
    else
      ++it->second;
  }
  return groups;
}

void require_roots(const ManifoldModel& m) {
  if (m.tangent().kind != TangentKind::ComplexStableRoots)
    throw std::invalid_argument(m.name() + " carries no Chern roots");
}

// prod over roots of f(x) for f given by its x^2-coefficients.
GradedElement root_product(const ManifoldModel& m, const std::vector<Rational>& coefficients) {
  GradedElement total = m.ring()->one();
  for (const auto& [x, mult] : grouped_roots(m)) total *= ring_pow(evaluate_polynomial(coefficients, x * x), mult);
  return total;
}

Rational pontryagin_pairing(const ManifoldModel& m, const PontryaginPolynomial& poly) {
  Rational value = 0;
  for (const auto& [index, coef] : poly) value += coef * pontryagin_number(m, index);
  return value;
}

}  // namespace

CharacteristicSeries l_series(int max_j) {
  const PowerSeries cosh = y_series(max_j, [](int j) -> Rational { return 1 / factorial(2 * j); });
  const PowerSeries sinh_over_x = y_series(max_j, [](int j) -> Rational { return 1 / factorial(2 * j + 1); });
  return {"L", (cosh * inverse(sinh_over_x)).coefficients()};
}

CharacteristicSeries ahat_series(int max_j) {
  Rational quarter_power = 1;
  PowerSeries sinh_half(static_cast<std::size_t>(max_j), Rational(0));
  for (int j = 0; j <= max_j; ++j, quarter_power /= 4)
    sinh_half[static_cast<std::size_t>(j)] = quarter_power / factorial(2 * j + 1);
  return {"A-hat", inverse(sinh_half).coefficients()};
}

PontryaginPolynomial symmetric_to_elementary(const GradedElement& symmetric) {
  const RingPtr& ring = symmetric.ring();
  const std::size_t m = ring->arity();
  // e_j(y_1..y_m)
  std::vector<GradedElement> elementary{ring->one()};
  for (std::size_t j = 1; j <= m; ++j) {
    GradedElement e = ring->zero();
    std::vector<int> mask(m, 0);
    std::fill(mask.end() - static_cast<std::ptrdiff_t>(j), mask.end(), 1);
    do {
      e += ring->monomial(mask);
    } while (std::next_permutation(mask.begin(), mask.end()));
    elementary.push_back(std::move(e));
  }

  PontryaginPolynomial out;
  GradedElement rest = symmetric;
  while (!rest.is_zero()) {
    const auto& [lead, coef] = *rest.terms().rbegin();
    std::vector<int> parts;
    GradedElement term = ring->constant(coef);
    for (std::size_t j = 0; j < m; ++j) {
      const int next = j + 1 < m ? lead[j + 1] : 0;
      const int power = lead[j] - next;
      if (power < 0) throw std::invalid_argument("polynomial is not symmetric");
      if (power == 0) continue;
      parts.insert(parts.end(), static_cast<std::size_t>(power), static_cast<int>(j + 1));
      term *= ring_pow(elementary[j + 1], static_cast<unsigned>(power));
    }
    out[Partition(parts)] += coef;
    rest -= term;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

MultiplicativeSequence universal_k_polynomials(const CharacteristicSeries& series, int max_weight, int variables) {
  if (max_weight < 0) throw std::invalid_argument("negative weight");
  const int m = variables > 0 ? variables : max_weight;
  if (m < max_weight) throw std::invalid_argument("need at least as many formal variables as the weight");
  if (series.coefficients.empty() || series.coefficients.front() != 1)
    throw std::invalid_argument("characteristic series must have constant term 1");
  const std::vector<Rational> f = truncated(series.coefficients, max_weight);

  std::vector<Generator> gens;
  for (int i = 1; i <= m; ++i) gens.push_back({"y" + std::to_string(i), 4});
  auto ring = RingSpec::create(std::move(gens), 4 * max_weight);
  GradedElement total = ring->one();
  for (int i = 0; i < m; ++i) total *= evaluate_polynomial(f, ring->generator(static_cast<std::size_t>(i)));

  MultiplicativeSequence seq{series, {}};
  for (int j = 0; j <= max_weight; ++j) seq.k_polys.push_back(symmetric_to_elementary(total.homogeneous_part(4 * j)));
  return seq;
}

const std::map<Partition, PontryaginPolynomial>& monomial_to_elementary(int weight, int variables) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::map<Partition, PontryaginPolynomial>> memo;
  const int m = variables > 0 ? variables : weight;
  std::lock_guard lock(mutex);
  auto [it, inserted] = memo.try_emplace({weight, m});
  if (!inserted) return it->second;

  std::vector<Generator> gens;
  for (int i = 1; i <= m; ++i) gens.push_back({"y" + std::to_string(i), 4});
  auto ring = RingSpec::create(std::move(gens), 4 * weight);
  for (const auto& lambda : partitions_of(weight)) {
    if (static_cast<int>(lambda.length()) > m) {
      it->second.emplace(lambda, PontryaginPolynomial{});
      continue;
    }
    std::vector<int> exponents(static_cast<std::size_t>(m), 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), exponents.begin());
    std::sort(exponents.begin(), exponents.end());
    GradedElement sym = ring->zero();
    do {
      sym += ring->monomial(exponents);
    } while (std::next_permutation(exponents.begin(), exponents.end()));
    it->second.emplace(lambda, symmetric_to_elementary(sym));
  }
  return it->second;
}

GradedElement evaluate_classes(const ManifoldModel& m, const PontryaginPolynomial& poly) {
  const auto classes = pontryagin_classes(m);
  GradedElement total = m.ring()->zero();
  for (const auto& [index, coef] : poly) {
    GradedElement term = m.ring()->constant(coef);
    for (int part : index.parts()) {
      if (part > static_cast<int>(classes.size())) {
        term = m.ring()->zero();
        break;
      }
      term *= classes[static_cast<std::size_t>(part - 1)];
    }
    total += term;
  }
  return total;
}

GenusValue evaluate_genus(const ManifoldModel& m, const MultiplicativeSequence& seq) {
  if (m.real_dimension() % 4 != 0) return {0, true};
  const int k = m.real_dimension() / 4;
  if (static_cast<int>(seq.k_polys.size()) <= k)
    throw std::invalid_argument("multiplicative sequence " + seq.source.name + " stops below weight " +
                                std::to_string(k));
  const Rational universal = pontryagin_pairing(m, seq.k_polys[static_cast<std::size_t>(k)]);
  if (m.tangent().kind == TangentKind::ComplexStableRoots) {
    const Rational direct = pair(m, root_product(m, truncated(seq.source.coefficients, k)));
    if (direct != universal)
      throw ConsistencyError(seq.source.name + "-genus of " + m.name() + ": roots give " + to_string(direct) +
                             ", universal polynomials give " + to_string(universal));
  }
  return {universal, false};
}

namespace {

const MultiplicativeSequence& memo_sequence(int max_weight, bool is_l) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, MultiplicativeSequence> memo;
  std::lock_guard lock(mutex);
  auto it = memo.find({max_weight, is_l});
  if (it == memo.end()) {
    auto series = is_l ? l_series(max_weight) : ahat_series(max_weight);
    it = memo.emplace(std::pair{max_weight, is_l}, universal_k_polynomials(series, max_weight)).first;
  }
  return it->second;
}

}  // namespace

const MultiplicativeSequence& l_sequence(int max_weight) { return memo_sequence(max_weight, true); }
const MultiplicativeSequence& ahat_sequence(int max_weight) { return memo_sequence(max_weight, false); }

Rational signature(const ManifoldModel& m) {
  return evaluate_genus(m, l_sequence(std::max(m.real_dimension() / 4, 0))).value;
}

Rational ahat(const ManifoldModel& m) {
  return evaluate_genus(m, ahat_sequence(std::max(m.real_dimension() / 4, 0))).value;
}

std::vector<PowerSeries> elliptic_characteristic_series(int max_j, int q_order) {
  if (max_j < 0 || q_order < 0) throw std::invalid_argument("negative series order");
  const auto n_max = static_cast<std::size_t>(q_order);
  const PowerSeries zero(static_cast<std::size_t>(max_j), Rational(0));
  const PowerSeries one = one_like(zero);
  const PowerSeries c = two_cosh(max_j);

  // Coefficients in q are series in y = x^2.
  QSeries<PowerSeries> total(n_max, zero);
  total[0] = one;
  for (std::size_t n = 1; n <= n_max; ++n) {
    // (1 - q^n e^x)(1 - q^n e^-x) = 1 - q^n (e^x + e^-x) + q^{2n}
    QSeries<PowerSeries> factor(n_max, zero);
    factor[0] = one;
    factor[n] = -c;
    if (2 * n <= n_max) factor[2 * n] = one;
    total = n % 2 == 1 ? total * factor : total * inverse(factor);
  }
  const PowerSeries a(ahat_series(max_j).coefficients);
  std::vector<PowerSeries> out(static_cast<std::size_t>(max_j) + 1, PowerSeries(n_max, Rational(0)));
  for (std::size_t i = 0; i <= n_max; ++i) {
    const PowerSeries coefficient = total[i] * a;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(max_j); ++j) out[j][i] = coefficient[j];
  }
  return out;
}

std::vector<Rational> elliptic_q_coefficients_universal(const ManifoldModel& m, int order) {
  if (order < 0) throw std::invalid_argument("negative q-order");
  const int k = weight_of(m);
  const auto f = elliptic_characteristic_series(k, order);
  const PowerSeries f0_inverse = inverse(f[0]);
  std::vector<PowerSeries> normalized;
  for (const auto& fj : f) normalized.push_back(fj * f0_inverse);

  std::map<Partition, Rational> numbers;
  for (const auto& index : partitions_of(k)) numbers[index] = pontryagin_number(m, index);

  // prod_i F(y_i) over 2k formal roots = F_0^{2k} sum_lambda (prod G_{lambda_j}) m_lambda(y).
  PowerSeries acc(static_cast<std::size_t>(order), Rational(0));
  for (const auto& [lambda, expansion] : monomial_to_elementary(k)) {
    Rational monomial_number = 0;
    for (const auto& [mu, coef] : expansion) monomial_number += coef * numbers.at(mu);
    if (monomial_number == 0) continue;
    PowerSeries term = one_like(acc);
    for (int part : lambda.parts()) term *= normalized[static_cast<std::size_t>(part)];
    acc += scaled(term, monomial_number);
  }
  acc *= series_pow(f[0], static_cast<unsigned>(2 * k));
  return acc.coefficients();
}

std::vector<Rational> elliptic_q_coefficients_roots(const ManifoldModel& m, int order) {
  if (order < 0) throw std::invalid_argument("negative q-order");
  require_roots(m);
  const int k = weight_of(m);
  const auto n = static_cast<std::size_t>(order);
  const auto f = elliptic_characteristic_series(k, order);
  const RingPtr& ring = m.ring();

  QSeries<GradedElement> total(n, ring->zero());
  total[0] = ring->one();
  for (const auto& [x, mult] : grouped_roots(m)) {
    const GradedElement y = x * x;
    QSeries<GradedElement> per_root(n, ring->zero());
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<Rational> in_y;
      for (const auto& fj : f) in_y.push_back(fj[i]);
      per_root[i] = evaluate_polynomial(in_y, y);
    }
    total *= series_pow(per_root, mult);
  }
  // Stably trivial roots each contributed F(0, q); remove them so the twist sees T_C M itself.
  const int trivial = m.trivial_root_count();
  const PowerSeries correction = trivial >= 0 ? series_pow(inverse(f[0]), static_cast<unsigned>(trivial))
                                              : series_pow(f[0], static_cast<unsigned>(-trivial));
  total = series_mul(total, correction, n);

  std::vector<Rational> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(pair(m, total[i]));
  return out;
}

std::vector<Rational> elliptic_q_coefficients(const ManifoldModel& m, int order) {
  weight_of(m);
  std::vector<Rational> universal = elliptic_q_coefficients_universal(m, order);
  if (m.tangent().kind != TangentKind::ComplexStableRoots) return universal;
  std::vector<Rational> roots = elliptic_q_coefficients_roots(m, order);
  if (roots != universal) throw ConsistencyError("elliptic q-expansion of " + m.name() + " differs between pipelines");
  return roots;
}

GradedElement tangent_character(const ManifoldModel& m) {
  const RingPtr& ring = m.ring();
  const auto p = pontryagin_classes(m);
  const int top = static_cast<int>(p.size());
  // Newton: P_j = sum_{i<j} (-1)^{i-1} e_i P_{j-i} + (-1)^{j-1} j e_j, with e_i = p_i.
  std::vector<GradedElement> power_sums{ring->constant(m.real_dimension() / 2)};
  GradedElement ch = ring->constant(m.real_dimension());
  for (int j = 1; j <= top; ++j) {
    GradedElement pj = p[static_cast<std::size_t>(j - 1)] * Rational(j % 2 == 1 ? j : -j);
    for (int i = 1; i < j; ++i) {
      GradedElement term = p[static_cast<std::size_t>(i - 1)] * power_sums[static_cast<std::size_t>(j - i)];
      pj += i % 2 == 1 ? term : -term;
    }
    ch += pj * (Rational(2) / factorial(2 * j));
    power_sums.push_back(std::move(pj));
  }
  return ch;
}

Rational twisted_ahat_tangent(const ManifoldModel& m) {
  const int k = weight_of(m);
  const auto& seq = ahat_sequence(k);
  GradedElement ahat_class = m.ring()->zero();
  for (int j = 0; j <= k; ++j) ahat_class += evaluate_classes(m, seq.k_polys[static_cast<std::size_t>(j)]);
  const Rational newton = pair(m, ahat_class * tangent_character(m));
  if (m.tangent().kind != TangentKind::ComplexStableRoots) return newton;

  const std::vector<Rational> cosh_coefficients = two_cosh(k).coefficients();
  GradedElement ch = m.ring()->constant(-2 * m.trivial_root_count());
  for (const auto& x : m.tangent().roots) ch += evaluate_polynomial(cosh_coefficients, x * x);
  const Rational direct = pair(m, root_product(m, truncated(seq.source.coefficients, k)) * ch);
  if (direct != newton)
    throw ConsistencyError("A-hat(M; T_C M) of " + m.name() + ": roots give " + to_string(direct) +
                           ", Newton sums give " + to_string(newton));
  return direct;
}

}  // namespace cobord
