#include <doctest.h>

#include <random>

#include "cobord/manifold.hpp"
#include "cobord/matrix.hpp"
#include "cobord/polynomial.hpp"
#include "cobord/qseries.hpp"
#include "cobord/ring.hpp"

using namespace cobord;

namespace {

GradedElement random_element(const RingPtr& ring, std::mt19937& rng, int max_exponent = 5) {
  std::uniform_int_distribution<int> exp_dist(0, max_exponent);
  std::uniform_int_distribution<int> coeff_dist(-6, 6);
  Terms terms;
  for (int t = 0; t < 4; ++t) {
    Exponents e(ring->arity());
    for (auto& x : e) x = exp_dist(rng);
    terms[e] += rational(coeff_dist(rng), 1 + (t % 3));
  }
  return GradedElement(ring, terms);
}

std::vector<RingPtr> sample_rings() {
  return {build_cp(3).ring(), build_hp(3).ring(), build_x12(3).ring(), build_y16(-2).ring(),
          build_z20(1).ring(), product(build_x12(2), build_cp(2)).ring()};
}

}  // namespace

TEST_CASE("normalize in the twelve-dimensional bundle ring") {
  const long c = 5;
  const RingPtr ring = build_x12(c).ring();
  const auto a = ring->index_of("a");
  const auto b = ring->index_of("b");
  auto mono = [&](int i, int j) {
    Exponents e(2);
    e[a] = i;
    e[b] = j;
    return e;
  };
  auto raw = [&](int i, int j) { return GradedElement(ring, Terms{{mono(i, j), 1}}); };

  CHECK(raw(4, 0) == ring->monomial(mono(3, 1), -c));
  CHECK(raw(5, 0) == ring->monomial(mono(3, 2), c * c));
  CHECK(raw(6, 0) == ring->monomial(mono(3, 3), -c * c * c));
  CHECK(raw(3, 4).is_zero());
  CHECK(raw(7, 0).is_zero());
  CHECK(ring_mul(raw(3, 0), raw(1, 0)) == ring->monomial(mono(3, 1), -c));
}

TEST_CASE("ring_mul and ring_pow in the CP^3 ring") {
  const RingPtr ring = build_cp(3).ring();
  const GradedElement one = ring->one();
  const GradedElement b = ring->generator("b");
  const Rational c = 7;
  CHECK(ring_mul(one + c * b, one - c * b) == one - c * c * ring_mul(b, b));
  CHECK(ring_mul(ring_pow(b, 2), ring_pow(b, 2)).is_zero());
  CHECK(ring_pow(one + b, 3) == one + 3 * b + 3 * ring_pow(b, 2) + ring_pow(b, 3));
  CHECK(ring_pow(b, 0) == one);
  CHECK(ring_pow(ring->zero(), 0) == one);
}

TEST_CASE("(1+a)^4 rewrites its top power") {
  const long c = 3;
  const RingPtr ring = build_x12(c).ring();
  const GradedElement one = ring->one();
  const GradedElement a = ring->generator("a");
  const GradedElement b = ring->generator("b");
  const GradedElement expected = one + 4 * a + 6 * ring_pow(a, 2) + 4 * ring_pow(a, 3) +
                                 Rational(-c) * ring_mul(ring_pow(a, 3), b);
  CHECK(ring_pow(one + a, 4) == expected);
}

TEST_CASE("mixing rings is rejected") {
  const GradedElement x = build_cp(2).ring()->generator("b");
  const GradedElement y = build_cp(3).ring()->generator("b");
  CHECK_THROWS_AS(x + y, std::invalid_argument);
  CHECK_THROWS_AS(ring_mul(x, y), std::invalid_argument);
}

TEST_CASE("malformed ring specifications fail at construction") {
  CHECK_THROWS(RingSpec::create({{"x", 3}}, 6));
  CHECK_THROWS(RingSpec::create({{"x", 2}, {"x", 2}}, 6));
  // x^2 -> y with deg y = 4
  CHECK_NOTHROW(RingSpec::create({{"x", 2}, {"y", 4}}, 8, {{0, 2, Terms{{Exponents{0, 1}, 1}}}}));
  // degree mismatch
  CHECK_THROWS(RingSpec::create({{"x", 2}, {"y", 2}}, 8, {{0, 2, Terms{{Exponents{0, 1}, 1}}}}));
  // replacement not smaller than the head
  CHECK_THROWS(RingSpec::create({{"x", 2}, {"y", 2}}, 8, {{1, 2, Terms{{Exponents{1, 1}, 1}}}}));
}

TEST_CASE("normalize is idempotent and degree preserving") {
  std::mt19937 rng(20261019);
  for (const auto& ring : sample_rings()) {
    for (int trial = 0; trial < 25; ++trial) {
      const GradedElement e = random_element(ring, rng);
      CHECK(normalize(e) == e);
      CHECK(GradedElement(ring, ring->normalize(e.terms())).terms() == e.terms());
      for (const auto& [mono, coeff] : e.terms()) {
        CHECK(ring->is_normal(mono));
        CHECK(ring->degree(mono) <= ring->truncation_dimension());
      }
    }
  }
}

TEST_CASE("ring_mul is associative and commutative") {
  std::mt19937 rng(7);
  for (const auto& ring : sample_rings()) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto x = random_element(ring, rng, 3);
      const auto y = random_element(ring, rng, 3);
      const auto z = random_element(ring, rng, 3);
      CHECK(ring_mul(x, y) == ring_mul(y, x));
      CHECK(ring_mul(ring_mul(x, y), z) == ring_mul(x, ring_mul(y, z)));
      CHECK(ring_mul(x, y + z) == ring_mul(x, y) + ring_mul(x, z));
    }
  }
}

TEST_CASE("rewriting the top power commutes with multiplication") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const LineBundleSum bundle{3, {d(rng), d(rng), d(rng), d(rng)}};
    const ManifoldModel m = build_proj_bundle(bundle);
    const RingPtr ring = m.ring();
    const auto ai = ring->index_of("a");
    const int r = static_cast<int>(bundle.degrees.size());
    for (int extra = 0; extra < 3; ++extra) {
      const auto x = random_element(ring, rng, 2);
      Exponents top(ring->arity(), 0);
      top[ai] = r;
      // Rewrite first: normalized a^r, then multiply.
      const GradedElement rewritten = ring->monomial(top);
      const GradedElement first = ring_mul(ring_mul(rewritten, ring->generator("a")), x);
      // Multiply first on raw exponents, then normalize.
      Terms raw;
      for (const auto& [mono, coeff] : x.terms()) {
        Exponents e = mono;
        e[ai] += r + 1;
        raw[e] += coeff;
      }
      CHECK(first == GradedElement(ring, raw));
    }
  }
}

TEST_CASE("series_mul on scalar and ring coefficients") {
  const PowerSeries s(std::vector<Rational>{1, -1, 0});
  const PowerSeries t(std::vector<Rational>{1, 1, 1});
  CHECK(series_mul(s, t, 2) == PowerSeries(std::vector<Rational>{1, 0, 0}));

  const RingPtr ring = build_cp(4).ring();
  const GradedElement x = ring->generator("b");
  const QSeries<GradedElement> u(std::vector<GradedElement>{ring->one(), x, ring->zero()});
  const auto sq = series_mul(u, u, 2);
  CHECK(sq[0] == ring->one());
  CHECK(sq[1] == 2 * x);
  CHECK(sq[2] == ring_mul(x, x));

  const PowerSeries long_a(std::vector<Rational>{1, 1, 1, 1});
  const auto truncated = series_mul(long_a, long_a, 2);
  CHECK(truncated.order() == 2);
  CHECK(truncated == PowerSeries(std::vector<Rational>{1, 2, 3}));

  const auto mixed = series_mul(u, PowerSeries(std::vector<Rational>{2, 0, 0}), 2);
  CHECK(mixed[1] == 2 * x);
}

TEST_CASE("series inverse and power") {
  const PowerSeries one_minus_q(std::vector<Rational>{1, -1, 0, 0, 0});
  const PowerSeries geometric = inverse(one_minus_q);
  CHECK(geometric == PowerSeries(std::vector<Rational>{1, 1, 1, 1, 1}));
  CHECK(series_pow(geometric, 2) == PowerSeries(std::vector<Rational>{1, 2, 3, 4, 5}));
  CHECK_THROWS(inverse(PowerSeries(std::vector<Rational>{0, 1})));
}

TEST_CASE("rank and solve") {
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  CHECK(rank(RationalMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
  const auto x = solve(RationalMatrix::from_rows({{3}}), {1});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1, 3));
  CHECK_FALSE(solve(RationalMatrix::from_rows({{1, 2}, {2, 4}}), {1, 1}).has_value());
  CHECK_THROWS_AS(solve(RationalMatrix::from_rows({{1, 2}}), {1, 2}), std::invalid_argument);
}

TEST_CASE("solve reproduces the right-hand side") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 2 + trial % 4, cols = 1 + trial % 5;
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(d(rng), static_cast<long>(1 + (r + c) % 3));
    RationalVector x0(cols);
    for (auto& v : x0) v = d(rng);
    const RationalVector rhs = m * x0;
    const auto x = solve(m, rhs);
    REQUIRE(x.has_value());
    CHECK(m * *x == rhs);
    for (const auto& n : nullspace(m)) CHECK(m * n == RationalVector(rows, 0));
    CHECK(nullspace(m).size() + rank(m) == cols);
  }
}

TEST_CASE("polynomial interpolation") {
  const std::vector<Rational> xs{1, 2, 3, 4};
  std::vector<Rational> ys;
  for (const auto& x : xs) ys.push_back(2 * x * x * x - x + Rational(1, 2));
  const Polynomial p = interpolate(xs, ys);
  CHECK(p.degree() == 3);
  CHECK(p.coefficient(0) == Rational(1, 2));
  CHECK(p.coefficient(1) == -1);
  CHECK(p.coefficient(3) == 2);
  CHECK(p.to_string("c") == "2*c^3 - c + 1/2");
  CHECK(Polynomial().to_string("c") == "0");
}

TEST_CASE("rational formatting and parsing") {
  CHECK(to_string(rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(8)) == "8");
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("+12") == 12);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
