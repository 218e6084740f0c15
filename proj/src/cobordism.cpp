#include "cobord/cobordism.hpp"

#include <algorithm>
#include <stdexcept>

#include "cobord/genera.hpp"
#include "cobord/matrix.hpp"

namespace cobord {

namespace {

int weight_for(int dimension) {
  if (dimension < 0 || dimension % 4 != 0)
    throw std::invalid_argument("dimension " + std::to_string(dimension) + " is not a multiple of 4");
  const int k = dimension / 4;
  if (k > kMaxWeight)
    throw std::invalid_argument("dimension " + std::to_string(dimension) + " exceeds the supported maximum " +
                                std::to_string(4 * kMaxWeight));
  return k;
}

}  // namespace

Functional Functional::zero(int dimension) {
  Functional f{dimension, {}};
  for (const auto& index : partitions_of(weight_for(dimension))) f.coefficients.emplace(index, 0);
  return f;
}

Functional Functional::pontryagin(const Partition& index) {
  Functional f = zero(4 * index.weight());
  f.coefficients[index] = 1;
  return f;
}

Rational Functional::operator()(const CharNumberVector& numbers) const {
  if (numbers.dimension != dimension) throw std::invalid_argument("functional and manifold dimensions differ");
  Rational value = 0;
  for (const auto& [index, coef] : coefficients) value += coef * numbers.values.at(index);
  return value;
}

Functional& Functional::operator+=(const Functional& other) {
  if (other.dimension != dimension) throw std::invalid_argument("functional dimensions differ");
  for (const auto& [index, coef] : other.coefficients) coefficients[index] += coef;
  return *this;
}

Functional& Functional::operator*=(const Rational& scalar) {
  for (auto& [index, coef] : coefficients) coef *= scalar;
  return *this;
}

bool Functional::is_zero() const {
  for (const auto& [index, coef] : coefficients)
    if (coef != 0) return false;
  return true;
}

std::vector<Rational> Functional::as_vector() const {
  std::vector<Rational> out;
  for (const auto& index : partitions_of(weight_for(dimension))) {
    auto it = coefficients.find(index);
    out.push_back(it == coefficients.end() ? Rational(0) : it->second);
  }
  return out;
}

std::string Functional::to_string() const {
  std::string out;
  for (const auto& index : partitions_of(weight_for(dimension))) {
    auto it = coefficients.find(index);
    if (it == coefficients.end() || it->second == 0) continue;
    const Rational& coef = it->second;
    if (out.empty())
      out += coef < 0 ? "-" : "";
    else
      out += coef < 0 ? " - " : " + ";
    const Rational mag = abs(coef);
    if (mag != 1) out += cobord::to_string(mag) + "*";
    out += index.key();
  }
  return out.empty() ? "0" : out;
}

CharNumberVector pontryagin_numbers(const ManifoldModel& m) {
  const int k = weight_for(m.real_dimension());
  CharNumberVector v{m.real_dimension(), {}};
  const auto classes = pontryagin_classes(m);
  for (const auto& index : partitions_of(k)) {
    GradedElement monomial = m.ring()->one();
    for (int part : index.parts()) monomial *= classes.at(static_cast<std::size_t>(part - 1));
    v.values.emplace(index, pair(m, monomial));
  }
  return v;
}

std::vector<ManifoldModel> basis_manifolds(int dimension) {
  const int k = weight_for(dimension);
  std::vector<ManifoldModel> basis;
  for (const auto& index : partitions_of(k)) {
    ManifoldModel m = build_point();
    for (int part : index.parts()) m = product(m, build_cp(2 * part));
    basis.push_back(std::move(m));
  }
  return basis;
}

RationalMatrix basis_pontryagin_matrix(int dimension) {
  const auto basis = basis_manifolds(dimension);
  std::vector<RationalVector> rows;
  for (const auto& m : basis) {
    RationalVector row;
    for (const auto& [index, value] : pontryagin_numbers(m).values) row.push_back(value);
    rows.push_back(std::move(row));
  }
  // Columns follow std::map order of partitions; Functional coefficients use the same keys.
  RationalMatrix matrix = RationalMatrix::from_rows(rows);
  if (rank(matrix) != basis.size())
    throw ConsistencyError("products of even complex projective spaces fail to span dimension " +
                           std::to_string(dimension));
  return matrix;
}

std::vector<Functional> genus_as_functionals(const SeriesEvaluator& genera, int dimension) {
  const int k = weight_for(dimension);
  const auto basis = basis_manifolds(dimension);
  const RationalMatrix numbers = basis_pontryagin_matrix(dimension);
  std::vector<std::vector<Rational>> values;
  for (const auto& m : basis) values.push_back(genera(m));
  const std::size_t count = values.empty() ? 0 : values.front().size();

  std::vector<Partition> keys;
  for (const auto& index : partitions_of(k)) keys.push_back(index);
  std::sort(keys.begin(), keys.end());

  std::vector<Functional> out;
  for (std::size_t g = 0; g < count; ++g) {
    RationalVector rhs;
    for (const auto& v : values) rhs.push_back(v.at(g));
    auto lambda = solve(numbers, rhs);
    if (!lambda || numbers * *lambda != rhs)
      throw ConsistencyError("genus is not a combination of Pontryagin numbers in dimension " +
                             std::to_string(dimension));
    Functional f{dimension, {}};
    for (std::size_t i = 0; i < keys.size(); ++i) f.coefficients.emplace(keys[i], (*lambda)[i]);
    out.push_back(std::move(f));
  }
  return out;
}

Functional genus_as_functional(const GenusEvaluator& genus, int dimension) {
  return genus_as_functionals([&](const ManifoldModel& m) { return std::vector<Rational>{genus(m)}; }, dimension)
      .front();
}

EllipticSpan elliptic_span(int dimension, int q_order) {
  if (q_order < 0) throw std::invalid_argument("negative q-order");
  EllipticSpan span;
  span.functionals = genus_as_functionals(
      [q_order](const ManifoldModel& m) { return elliptic_q_coefficients(m, q_order); }, dimension);
  span.rank = span_rank(span.functionals, dimension);
  return span;
}

std::size_t span_rank(const std::vector<Functional>& functionals, int dimension) {
  if (functionals.empty()) return 0;
  std::vector<RationalVector> rows;
  for (const auto& f : functionals) {
    if (f.dimension != dimension) throw std::invalid_argument("functional dimensions differ");
    rows.push_back(f.as_vector());
  }
  return rank(RationalMatrix::from_rows(rows));
}

bool span_membership(const Functional& f, const std::vector<Functional>& span) {
  std::vector<Functional> extended = span;
  extended.push_back(f);
  return span_rank(span, f.dimension) == span_rank(extended, f.dimension);
}

FamilySpec family_x12(bool spin_parameterization) {
  if (spin_parameterization)
    return {"X12", 12, "c -> 2c (X12_{2c}, spin)", 7, [](long c) { return build_x12(2 * c); }};
  return {"X12:raw", 12, "c -> c (X12_c, spin iff c even)", 7, [](long c) { return build_x12(c); }};
}

FamilySpec family_y16() { return {"Y16", 16, "c -> c (Y16_c, spin)", 7, [](long c) { return build_y16(c); }}; }

FamilySpec family_z20(bool spin_parameterization) {
  if (spin_parameterization)
    return {"Z20", 20, "c -> 2c (Z20_{2c}, spin)", 7, [](long c) { return build_z20(2 * c); }};
  return {"Z20:raw", 20, "c -> c (Z20_c, spin iff c even)", 7, [](long c) { return build_z20(c); }};
}

FamilySpec family_x12_hp(int n) {
  if (n < 1) throw std::invalid_argument("X12xHP needs n >= 1");
  const std::string hp = "HP^" + std::to_string(n);
  return {"X12xHP:" + std::to_string(n), 12 + 4 * n, "c -> 2c (X12_{2c} x " + hp + ", spin)", 7,
          [n](long c) { return product(build_x12(2 * c), build_hp(n)); }};
}

FamilySpec family_by_name(const std::string& name) {
  if (name == "X12") return family_x12(true);
  if (name == "X12:raw") return family_x12(false);
  if (name == "Y16") return family_y16();
  if (name == "Z20") return family_z20(true);
  if (name == "Z20:raw") return family_z20(false);
  const std::string prefix = "X12xHP:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string digits = name.substr(prefix.size());
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 3)
      return family_x12_hp(std::stoi(digits));
  }
  throw std::invalid_argument("unknown family '" + name + "' (expected X12, X12:raw, Y16, Z20, Z20:raw, X12xHP:<n>)");
}

std::vector<FamilySpec> designated_families(int dimension) {
  const int k = weight_for(dimension);
  switch (k) {
    case 3: return {family_x12(true)};
    case 4: return {family_y16()};
    case 5: return {family_z20(true), family_x12_hp(2)};
    default:
      if (k > 5) return {family_x12_hp(k - 3)};
      return {};
  }
}

std::vector<long> sample_parameters(const FamilySpec& fam) {
  std::vector<long> out;
  for (long c = 1; c <= fam.max_degree + 2; ++c) out.push_back(c);
  return out;
}

namespace {

Polynomial interpolate_checked(const FamilySpec& fam, const std::vector<long>& params,
                               const std::vector<Rational>& values, const std::string& what) {
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i + 1 < params.size(); ++i) {
    xs.emplace_back(params[i]);
    ys.push_back(values[i]);
  }
  Polynomial poly = interpolate(xs, ys);
  if (poly(Rational(params.back())) != values.back())
    throw ConsistencyError(what + " on family " + fam.name + " is not a polynomial of degree <= " +
                           std::to_string(fam.max_degree));
  return poly;
}

}  // namespace

Polynomial family_polynomial(const FamilySpec& fam, const Functional& f) {
  if (f.dimension != fam.dimension)
    throw std::invalid_argument("functional has dimension " + std::to_string(f.dimension) + ", family " + fam.name +
                                " has dimension " + std::to_string(fam.dimension));
  const auto params = sample_parameters(fam);
  std::vector<Rational> values;
  for (long c : params) values.push_back(f(pontryagin_numbers(fam.build(c))));
  return interpolate_checked(fam, params, values, f.to_string());
}

std::map<Partition, Polynomial> family_pontryagin_polynomials(const FamilySpec& fam) {
  const auto params = sample_parameters(fam);
  std::vector<CharNumberVector> samples;
  for (long c : params) samples.push_back(pontryagin_numbers(fam.build(c)));
  std::map<Partition, Polynomial> out;
  for (const auto& index : partitions_of(weight_for(fam.dimension))) {
    std::vector<Rational> values;
    for (const auto& s : samples) values.push_back(s.values.at(index));
    out.emplace(index, interpolate_checked(fam, params, values, index.key()));
  }
  return out;
}

Verdict unbounded_verdict(const Functional& f, const std::vector<FamilySpec>& families) {
  Verdict verdict;
  for (const auto& fam : families) {
    FamilyEvaluation eval{fam.name, fam.parameterization, family_polynomial(fam, f)};
    if (!verdict.unbounded && eval.polynomial.is_nonconstant()) {
      verdict.unbounded = true;
      verdict.witness = eval;
    }
    verdict.evaluations.push_back(std::move(eval));
  }
  return verdict;
}

DistinctnessCertificate distinct_cobordism_types(const FamilySpec& fam, const std::vector<long>& params) {
  std::vector<CharNumberVector> numbers;
  for (long c : params) numbers.push_back(pontryagin_numbers(fam.build(c)));
  const auto order = partitions_of(weight_for(fam.dimension));
  DistinctnessCertificate cert{true, {}};
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = i + 1; j < params.size(); ++j) {
      Separation s{params[i], params[j], std::nullopt};
      // Prefer the top Pontryagin number p_k, then the other partitions in reverse order.
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (numbers[i].values.at(*it) != numbers[j].values.at(*it)) {
          s.separator = *it;
          break;
        }
      }
      if (!s.separator) cert.distinct = false;
      cert.pairs.push_back(std::move(s));
    }
  }
  return cert;
}

}  // namespace cobord
