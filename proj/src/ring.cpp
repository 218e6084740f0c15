#include "cobord/ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cobord {

RingSpec::RingSpec(std::vector<Generator> generators, int truncation, std::vector<RewriteRule> rules)
    : generators_(std::move(generators)), truncation_(truncation), rules_(std::move(rules)) {}

std::shared_ptr<const RingSpec> RingSpec::create(std::vector<Generator> generators,
                                                 int truncation_dimension,
                                                 std::vector<RewriteRule> rules) {
  for (const auto& g : generators) {
    if (g.degree <= 0 || g.degree % 2 != 0)
      throw std::invalid_argument("generator '" + g.name + "' must have even positive degree");
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i].name == generators[j].name)
        throw std::invalid_argument("duplicate generator name '" + generators[i].name + "'");
  if (truncation_dimension < 0 || truncation_dimension % 2 != 0)
    throw std::invalid_argument("truncation dimension must be even and nonnegative");

  std::shared_ptr<RingSpec> ring(new RingSpec(std::move(generators), truncation_dimension, {}));
  std::vector<bool> seen(ring->arity(), false);
  for (auto& rule : rules) {
    if (rule.generator >= ring->arity() || rule.power < 1)
      throw std::invalid_argument("rewrite rule has no valid head");
    if (seen[rule.generator])
      throw std::invalid_argument("two rewrite rules for generator '" +
                                  ring->generators_[rule.generator].name + "'");
    seen[rule.generator] = true;
    Exponents head(ring->arity(), 0);
    head[rule.generator] = rule.power;
    const int head_degree = ring->degree(head);
    for (auto it = rule.replacement.begin(); it != rule.replacement.end();) {
      if (it->first.size() != ring->arity())
        throw std::invalid_argument("rewrite rule monomial has wrong arity");
      if (ring->degree(it->first) != head_degree)
        throw std::invalid_argument("rewrite rule for '" + ring->generators_[rule.generator].name +
                                    "' is not degree-homogeneous");
      if (!(it->first < head))
        throw std::invalid_argument("rewrite rule for '" + ring->generators_[rule.generator].name +
                                    "' does not strictly decrease the monomial order");
      if (it->second == 0)
        it = rule.replacement.erase(it);
      else
        ++it;
    }
  }
  ring->rules_ = std::move(rules);
  return ring;
}

int RingSpec::degree(const Exponents& monomial) const {
  int d = 0;
  for (std::size_t i = 0; i < monomial.size(); ++i) d += monomial[i] * generators_[i].degree;
  return d;
}

std::size_t RingSpec::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  throw std::invalid_argument("no generator named '" + name + "'");
}

const RewriteRule* RingSpec::applicable_rule(const Exponents& monomial) const {
  for (const auto& rule : rules_)
    if (monomial[rule.generator] >= rule.power) return &rule;
  return nullptr;
}

bool RingSpec::is_normal(const Exponents& monomial) const {
  return degree(monomial) <= truncation_ && applicable_rule(monomial) == nullptr;
}

Terms RingSpec::normalize(Terms terms) const {
  // Always expand the lex-greatest pending monomial: replacements are strictly
  // smaller, so each monomial is visited once with its accumulated coefficient.
  std::map<Exponents, Rational, std::greater<>> pending;
  for (auto& [mono, coef] : terms) {
    coef.canonicalize();
    if (coef == 0 || degree(mono) > truncation_) continue;
    pending[mono] += coef;
  }
  Terms result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    if (node.mapped() == 0) continue;
    const Exponents& mono = node.key();
    const RewriteRule* rule = applicable_rule(mono);
    if (rule == nullptr) {
      result.emplace_hint(result.begin(), mono, std::move(node.mapped()));
      continue;
    }
    for (const auto& [rmono, rcoef] : rule->replacement) {
      Exponents next = mono;
      next[rule->generator] -= rule->power;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += rmono[i];
      pending[std::move(next)] += rcoef * node.mapped();
    }
  }
  return result;
}

GradedElement RingSpec::zero() const { return GradedElement(shared_from_this(), {}); }

GradedElement RingSpec::one() const { return constant(1); }

GradedElement RingSpec::constant(const Rational& value) const {
  Terms t;
  if (value != 0) t.emplace(Exponents(arity(), 0), value);
  return GradedElement(shared_from_this(), std::move(t));
}

GradedElement RingSpec::generator(std::size_t index) const {
  if (index >= arity()) throw std::out_of_range("generator index out of range");
  Exponents e(arity(), 0);
  e[index] = 1;
  return monomial(e);
}

GradedElement RingSpec::generator(const std::string& name) const { return generator(index_of(name)); }

GradedElement RingSpec::monomial(const Exponents& exponents, const Rational& coefficient) const {
  if (exponents.size() != arity()) throw std::invalid_argument("monomial has wrong arity");
  Terms t;
  t.emplace(exponents, coefficient);
  return GradedElement(shared_from_this(), std::move(t));
}

std::vector<Exponents> RingSpec::normal_monomials() const {
  std::vector<Exponents> out;
  Exponents current(arity(), 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t index, int budget) {
    if (index == arity()) {
      if (applicable_rule(current) == nullptr) out.push_back(current);
      return;
    }
    for (int e = 0; e * generators_[index].degree <= budget; ++e) {
      current[index] = e;
      walk(index + 1, budget - e * generators_[index].degree);
    }
    current[index] = 0;
  };
  walk(0, truncation_);
  std::sort(out.begin(), out.end());
  return out;
}

std::string RingSpec::format(const Exponents& monomial) const {
  std::string s;
  for (std::size_t i = 0; i < monomial.size(); ++i) {
    if (monomial[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += generators_[i].name;
    if (monomial[i] > 1) s += "^" + std::to_string(monomial[i]);
  }
  return s.empty() ? "1" : s;
}

GradedElement::GradedElement(RingPtr ring, Terms terms)
    : ring_(std::move(ring)), terms_(ring_->normalize(std::move(terms))) {}

void GradedElement::require_same_ring(const GradedElement& other) const {
  if (ring_ != other.ring_) throw std::invalid_argument("graded elements belong to different rings");
}

Rational GradedElement::coefficient(const Exponents& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

GradedElement GradedElement::homogeneous_part(int degree) const {
  GradedElement out(ring_, {});
  for (const auto& [mono, coef] : terms_)
    if (ring_->degree(mono) == degree) out.terms_.emplace_hint(out.terms_.end(), mono, coef);
  return out;
}

std::vector<int> GradedElement::degrees() const {
  std::vector<int> out;
  for (const auto& [mono, coef] : terms_) out.push_back(ring_->degree(mono));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GradedElement& GradedElement::operator+=(const GradedElement& other) {
  require_same_ring(other);
  for (const auto& [mono, coef] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(mono, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& other) { return *this += -other; }

GradedElement& GradedElement::operator*=(const GradedElement& other) { return *this = *this * other; }

GradedElement& GradedElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coef] : terms_) coef *= scalar;
  return *this;
}

GradedElement GradedElement::operator-() const {
  GradedElement out = *this;
  for (auto& [mono, coef] : out.terms_) coef = -coef;
  return out;
}

GradedElement operator*(const GradedElement& x, const GradedElement& y) {
  x.require_same_ring(y);
  const RingSpec& ring = *x.ring_;
  Terms product;
  Exponents mono(ring.arity());
  for (const auto& [mx, cx] : x.terms_) {
    const int dx = ring.degree(mx);
    for (const auto& [my, cy] : y.terms_) {
      if (dx + ring.degree(my) > ring.truncation_dimension()) continue;
      for (std::size_t i = 0; i < mono.size(); ++i) mono[i] = mx[i] + my[i];
      product[mono] += cx * cy;
    }
  }
  return GradedElement(x.ring_, std::move(product));
}

bool operator==(const GradedElement& x, const GradedElement& y) {
  return x.ring_ == y.ring_ && x.terms_ == y.terms_;
}

std::string GradedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, coef] = *it;
    Rational mag = abs(coef);
    if (first)
      os << (coef < 0 ? "-" : "");
    else
      os << (coef < 0 ? " - " : " + ");
    first = false;
    const bool unit_monomial = std::all_of(mono.begin(), mono.end(), [](int e) { return e == 0; });
    if (unit_monomial) {
      os << cobord::to_string(mag);
    } else {
      if (mag != 1) os << cobord::to_string(mag) << "*";
      os << ring_->format(mono);
    }
  }
  return os.str();
}

GradedElement normalize(const GradedElement& e) {
  // Elements are normalized on construction; re-normalizing is the identity.
  return GradedElement(e.ring(), e.terms());
}

GradedElement ring_mul(const GradedElement& x, const GradedElement& y) { return x * y; }

GradedElement ring_pow(const GradedElement& x, unsigned n) {
  GradedElement result = x.ring()->one();
  GradedElement base = x;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

GradedElement evaluate_polynomial(const std::vector<Rational>& coefficients, const GradedElement& x) {
  GradedElement acc = x.ring()->zero();
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc *= x;
    acc += x.ring()->constant(*it);
  }
  return acc;
}

}  // namespace cobord
