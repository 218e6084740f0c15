#include "cobord/manifold.hpp"

#include <stdexcept>

namespace cobord {

ManifoldModel::ManifoldModel(std::string name, int real_dimension, RingPtr ring, TangentData tangent,
                             Exponents pairing_monomial, ManifoldMetadata metadata)
    : name_(std::move(name)),
      real_dimension_(real_dimension),
      ring_(std::move(ring)),
      tangent_(std::move(tangent)),
      pairing_monomial_(std::move(pairing_monomial)),
      metadata_(std::move(metadata)) {
  if (real_dimension_ < 0 || real_dimension_ % 2 != 0)
    throw std::invalid_argument("manifold dimension must be even and nonnegative");
  if (ring_->degree(pairing_monomial_) != real_dimension_)
    throw std::invalid_argument("pairing monomial must have top degree");
  if (!ring_->is_normal(pairing_monomial_)) throw std::invalid_argument("pairing monomial is not in normal form");
  for (const auto& x : tangent_.roots) {
    if (x.ring() != ring_) throw std::invalid_argument("tangent root in a foreign ring");
    if (!x.is_zero() && x.degrees() != std::vector<int>{2})
      throw std::invalid_argument("tangent roots must be degree-2 classes");
  }
  for (std::size_t i = 0; i < tangent_.pontryagin.size(); ++i) {
    const auto& p = tangent_.pontryagin[i];
    if (p.ring() != ring_) throw std::invalid_argument("Pontryagin class in a foreign ring");
    for (int d : p.degrees())
      if (d != 4 * static_cast<int>(i + 1)) throw std::invalid_argument("p_i must have degree 4i");
  }
}

int ManifoldModel::trivial_root_count() const {
  if (tangent_.kind != TangentKind::ComplexStableRoots) return 0;
  return static_cast<int>(tangent_.roots.size()) - real_dimension_ / 2;
}

namespace {

RingPtr truncated_polynomial_ring(const std::string& name, int degree, int top_power) {
  RewriteRule vanish{0, top_power + 1, {}};
  return RingSpec::create({{name, degree}}, degree * top_power, {vanish});
}

// Element of `source` carried into `target`, whose generators
// [offset, offset + source.arity()) are a copy of the source generators.
GradedElement embed(const GradedElement& x, const RingPtr& target, std::size_t offset) {
  Terms terms;
  for (const auto& [mono, coef] : x.terms()) {
    Exponents e(target->arity(), 0);
    for (std::size_t i = 0; i < mono.size(); ++i) e[offset + i] = mono[i];
    terms.emplace(std::move(e), coef);
  }
  return GradedElement(target, std::move(terms));
}

}  // namespace

ManifoldModel build_point() {
  auto ring = RingSpec::create({}, 0);
  return ManifoldModel("pt", 0, ring, {}, {}, {true, "point"});
}

ManifoldModel build_cp(int n) {
  if (n < 1) throw std::invalid_argument("CP^n needs n >= 1");
  auto ring = truncated_polynomial_ring("b", 2, n);
  TangentData tangent;
  tangent.roots.assign(static_cast<std::size_t>(n + 1), ring->generator(0));
  return ManifoldModel("CP^" + std::to_string(n), 2 * n, ring, std::move(tangent), {n},
                       {n % 2 == 1, "compact symmetric space"});
}

ManifoldModel build_hp(int n) {
  if (n < 1) throw std::invalid_argument("HP^n needs n >= 1");
  auto ring = truncated_polynomial_ring("u", 4, n);
  const GradedElement u = ring->generator(0);
  // (1+u)^{2n+2} (1+4u)^{-1}
  std::vector<Rational> geometric;
  Rational term = 1;
  for (int j = 0; j <= n; ++j, term *= -4) geometric.push_back(term);
  const GradedElement total = ring_pow(ring->one() + u, static_cast<unsigned>(2 * n + 2)) *
                              evaluate_polynomial(geometric, u);
  TangentData tangent;
  tangent.kind = TangentKind::ExplicitPontryagin;
  for (int i = 1; i <= n; ++i) tangent.pontryagin.push_back(total.homogeneous_part(4 * i));
  return ManifoldModel("HP^" + std::to_string(n), 4 * n, ring, std::move(tangent), {n},
                       {true, "compact symmetric space"});
}

GradedElement bundle_chern_class(const LineBundleSum& bundle, const RingPtr& base_ring) {
  const GradedElement b = base_ring->generator(0);
  GradedElement total = base_ring->one();
  for (long d : bundle.degrees) total *= base_ring->one() + b * Rational(d);
  return total;
}

ManifoldModel build_proj_bundle(const LineBundleSum& bundle, std::string name) {
  const int l = bundle.base_l;
  const int r = static_cast<int>(bundle.degrees.size());
  if (l < 0) throw std::invalid_argument("base CP^l needs l >= 0");
  if (r < 1) throw std::invalid_argument("bundle needs rank >= 1");
  const int dim = 2 * l + 2 * (r - 1);

  // Elementary symmetric functions of the degrees: c_i(E) = e_i(d) b^i.
  std::vector<Rational> elementary(static_cast<std::size_t>(r + 1), Rational(0));
  elementary[0] = 1;
  for (long d : bundle.degrees)
    for (int i = r; i >= 1; --i) elementary[i] += elementary[i - 1] * d;

  // Leray-Hirsch: a^r = -sum_{i>=1} c_i(E) a^{r-i}; the base relation b^{l+1} = 0.
  RewriteRule fibre{0, r, {}};
  for (int i = 1; i <= r; ++i)
    if (elementary[i] != 0) fibre.replacement.emplace(Exponents{r - i, i}, -elementary[i]);
  RewriteRule base{1, l + 1, {}};
  auto ring = RingSpec::create({{"a", 2}, {"b", 2}}, dim, {fibre, base});

  const GradedElement a = ring->generator(0);
  const GradedElement b = ring->generator(1);
  TangentData tangent;
  tangent.roots.assign(static_cast<std::size_t>(l + 1), b);
  for (long d : bundle.degrees) tangent.roots.push_back(a + b * Rational(d));

  if (name.empty()) {
    name = "P(";
    for (std::size_t i = 0; i < bundle.degrees.size(); ++i)
      name += (i ? "," : "") + std::to_string(bundle.degrees[i]);
    name += ")->CP^" + std::to_string(l);
  }
  ManifoldMetadata meta;
  meta.curvature_certificate = "quotient of S^" + std::to_string(2 * l + 1) + " x S^" +
                               std::to_string(2 * r - 1) + " by a free isometric T^2-action";
  ManifoldModel draft(name, dim, ring, tangent, {r - 1, l}, meta);
  meta.spin = is_spin(draft);
  return ManifoldModel(std::move(name), dim, std::move(ring), std::move(tangent), {r - 1, l}, std::move(meta));
}

ManifoldModel build_x12(long c) {
  return build_proj_bundle({3, {c, 0, 0, 0}}, "X12[c=" + std::to_string(c) + "]");
}

ManifoldModel build_y16(long c) {
  return build_proj_bundle({5, {c, 2 * c, -3 * c, 0}}, "Y16[c=" + std::to_string(c) + "]");
}

ManifoldModel build_z20(long c) {
  return build_proj_bundle({7, {c, 0, 0, 0}}, "Z20[c=" + std::to_string(c) + "]");
}

ManifoldModel product(const ManifoldModel& m1, const ManifoldModel& m2) {
  if (m2.real_dimension() == 0 && m2.ring()->arity() == 0) return m1;
  if (m1.real_dimension() == 0 && m1.ring()->arity() == 0) return m2;

  const RingSpec& r1 = *m1.ring();
  const RingSpec& r2 = *m2.ring();
  std::vector<Generator> gens;
  for (const auto& g : r1.generators()) gens.push_back({g.name + "_1", g.degree});
  for (const auto& g : r2.generators()) gens.push_back({g.name + "_2", g.degree});
  const std::size_t offset = r1.arity();
  auto shift_rule = [&](const RewriteRule& rule, std::size_t shift) {
    RewriteRule out{rule.generator + shift, rule.power, {}};
    for (const auto& [mono, coef] : rule.replacement) {
      Exponents e(gens.size(), 0);
      for (std::size_t i = 0; i < mono.size(); ++i) e[shift + i] = mono[i];
      out.replacement.emplace(std::move(e), coef);
    }
    return out;
  };
  std::vector<RewriteRule> rules;
  for (const auto& rule : r1.rules()) rules.push_back(shift_rule(rule, 0));
  for (const auto& rule : r2.rules()) rules.push_back(shift_rule(rule, offset));
  const int dim = m1.real_dimension() + m2.real_dimension();
  auto ring = RingSpec::create(std::move(gens), dim, std::move(rules));

  TangentData tangent;
  if (m1.tangent().kind == TangentKind::ComplexStableRoots &&
      m2.tangent().kind == TangentKind::ComplexStableRoots) {
    for (const auto& x : m1.tangent().roots) tangent.roots.push_back(embed(x, ring, 0));
    for (const auto& x : m2.tangent().roots) tangent.roots.push_back(embed(x, ring, offset));
  } else {
    tangent.kind = TangentKind::ExplicitPontryagin;
    const GradedElement total = embed(total_pontryagin(m1), ring, 0) * embed(total_pontryagin(m2), ring, offset);
    for (int i = 1; i <= dim / 4; ++i) tangent.pontryagin.push_back(total.homogeneous_part(4 * i));
  }

  Exponents pairing = m1.pairing_monomial();
  pairing.insert(pairing.end(), m2.pairing_monomial().begin(), m2.pairing_monomial().end());

  ManifoldMetadata meta;
  meta.spin = m1.metadata().spin && m2.metadata().spin;
  if (m1.metadata().curvature_certificate && m2.metadata().curvature_certificate)
    meta.curvature_certificate = "product metric";
  return ManifoldModel(m1.name() + " x " + m2.name(), dim, std::move(ring), std::move(tangent),
                       std::move(pairing), std::move(meta));
}

GradedElement total_pontryagin(const ManifoldModel& m) {
  const RingPtr& ring = m.ring();
  GradedElement total = ring->one();
  if (m.tangent().kind == TangentKind::ComplexStableRoots) {
    for (const auto& x : m.tangent().roots) total *= ring->one() + x * x;
  } else {
    for (const auto& p : m.tangent().pontryagin) total += p;
  }
  return total;
}

std::vector<GradedElement> pontryagin_classes(const ManifoldModel& m) {
  if (m.tangent().kind == TangentKind::ExplicitPontryagin) return m.tangent().pontryagin;
  const GradedElement total = total_pontryagin(m);
  std::vector<GradedElement> out;
  for (int i = 1; i <= m.real_dimension() / 4; ++i) out.push_back(total.homogeneous_part(4 * i));
  return out;
}

Rational pair(const ManifoldModel& m, const GradedElement& x) {
  if (x.ring() != m.ring()) throw std::invalid_argument("class does not belong to the manifold's ring");
  return x.coefficient(m.pairing_monomial());
}

Rational pontryagin_number(const ManifoldModel& m, const Partition& index) {
  if (m.real_dimension() % 4 != 0 || index.weight() * 4 != m.real_dimension())
    throw std::invalid_argument("partition " + index.key() + " does not match dimension " +
                                std::to_string(m.real_dimension()));
  const auto classes = pontryagin_classes(m);
  GradedElement monomial = m.ring()->one();
  for (int part : index.parts()) monomial *= classes.at(static_cast<std::size_t>(part - 1));
  return pair(m, monomial);
}

GradedElement first_chern_class(const ManifoldModel& m) {
  if (m.tangent().kind != TangentKind::ComplexStableRoots)
    throw std::invalid_argument(m.name() + " carries no stable complex structure");
  GradedElement c1 = m.ring()->zero();
  for (const auto& x : m.tangent().roots) c1 += x;
  return c1;
}

bool is_spin(const ManifoldModel& m) {
  if (m.tangent().kind != TangentKind::ComplexStableRoots) return m.metadata().spin;
  // w_2 is the mod-2 reduction of c_1; on these spaces H^2 is torsion-free on the generators.
  const GradedElement c1 = first_chern_class(m);
  for (const auto& [mono, coef] : c1.terms()) {
    if (!is_integer(coef)) return false;
    if (mpz_class(coef.get_num() % 2) != 0) return false;
  }
  return true;
}

}  // namespace cobord
