#include <doctest.h>

#include <random>
#include <set>

#include "cobord/cobordism.hpp"
#include "cobord/genera.hpp"
#include "cobord/manifold.hpp"
#include "oracle.hpp"

using namespace cobord;

TEST_CASE("complex projective spaces") {
  const ManifoldModel cp2 = build_cp(2);
  CHECK(cp2.real_dimension() == 4);
  const auto classes = pontryagin_classes(cp2);
  REQUIRE(classes.size() == 1);
  const GradedElement b = cp2.ring()->generator("b");
  CHECK(classes[0] == 3 * ring_mul(b, b));
  CHECK_FALSE(is_spin(cp2));
  CHECK(is_spin(build_cp(3)));
  const ManifoldModel cp3 = build_cp(3);
  CHECK(first_chern_class(cp3) == 4 * cp3.ring()->generator("b"));

  const GradedElement b3 = cp3.ring()->generator("b");
  CHECK(total_pontryagin(cp3) == cp3.ring()->one() + 4 * ring_mul(b3, b3));
  CHECK(pair(cp3, ring_pow(b3, 3)) == 1);
  CHECK(pair(cp3, ring_pow(b3, 2)) == 0);
}

TEST_CASE("quaternionic projective spaces") {
  const ManifoldModel hp2 = build_hp(2);
  CHECK(hp2.real_dimension() == 8);
  CHECK(is_spin(hp2));
  const GradedElement u = hp2.ring()->generator("u");
  const auto classes = pontryagin_classes(hp2);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == 2 * u);
  CHECK(classes[1] == 7 * ring_mul(u, u));
  CHECK(total_pontryagin(hp2) == hp2.ring()->one() + 2 * u + 7 * ring_mul(u, u));
  for (int n = 1; n <= 5; ++n) CHECK(pontryagin_numbers(build_hp(n)).values == oracle::hp_numbers(n));
}

TEST_CASE("bundle rings carry the Leray-Hirsch relation") {
  const long c = 4;
  const ManifoldModel x = build_x12(c);
  const RingPtr ring = x.ring();
  const GradedElement a = ring->generator("a");
  const GradedElement b = ring->generator("b");
  CHECK(ring_pow(a, 4) + c * ring_mul(ring_pow(a, 3), b) == ring->zero());
  CHECK(pair(x, ring_mul(ring_pow(a, 3), ring_pow(b, 3))) == 1);
  CHECK(pair(x, ring_pow(a, 6)) == Rational(-c * c * c));

  const ManifoldModel y = build_y16(2);
  const RingPtr base = build_cp(5).ring();
  const GradedElement cE = bundle_chern_class({5, {2, 4, -6, 0}}, base);
  const GradedElement bb = base->generator("b");
  CHECK(cE == base->one() - 7 * 4 * ring_pow(bb, 2) - 6 * 8 * ring_pow(bb, 3));
  CHECK(y.real_dimension() == 16);
}

TEST_CASE("bundle normal monomials form a free basis over the base") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int l = 1; l <= 4; ++l)
    for (int r = 1; r <= 4; ++r) {
      std::vector<long> degrees;
      for (int i = 0; i < r; ++i) degrees.push_back(d(rng));
      const ManifoldModel m = build_proj_bundle({l, degrees});
      CHECK(m.real_dimension() == 2 * l + 2 * (r - 1));
      const auto ai = m.ring()->index_of("a"), bi = m.ring()->index_of("b");
      std::set<std::pair<int, int>> seen;
      for (const auto& e : m.ring()->normal_monomials()) seen.insert({e[ai], e[bi]});
      std::set<std::pair<int, int>> expected;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j <= l; ++j) expected.insert({i, j});
      CHECK(seen == expected);
      Exponents top(2);
      top[ai] = r - 1;
      top[bi] = l;
      CHECK(m.pairing_monomial() == top);
    }
}

TEST_CASE("bundle Pontryagin numbers agree with the pushforward oracle") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 12; ++trial) {
    const int l = 1 + trial % 5;
    const int r = 1 + (trial * 7) % 4;
    if ((l + r - 1) % 2 != 0) continue;
    std::vector<long> degrees;
    for (int i = 0; i < r; ++i) degrees.push_back(d(rng));
    const ManifoldModel m = build_proj_bundle({l, degrees});
    CHECK(pontryagin_numbers(m).values == oracle::bundle_numbers(l, degrees));
  }
  for (long c = -3; c <= 3; ++c) {
    CHECK(pontryagin_numbers(build_x12(c)).values == oracle::x12_numbers(c));
    CHECK(oracle::keyed(oracle::x12_numbers(c)) == oracle::x12_closed_form(c));
  }
}

TEST_CASE("total Pontryagin class lives in degrees divisible by four") {
  for (long c = -3; c <= 3; ++c)
    for (const auto& m : {build_x12(c), build_y16(c), build_z20(c)})
      for (int deg : total_pontryagin(m).degrees()) CHECK(deg % 4 == 0);
}

TEST_CASE("spin criterion for even-rank bundles over odd projective spaces") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    const int l = 1 + 2 * (trial % 3);
    const int r = 2 + 2 * (trial % 2);
    std::vector<long> degrees;
    long sum = 0;
    for (int i = 0; i < r; ++i) {
      degrees.push_back(d(rng));
      sum += degrees.back();
    }
    CHECK(is_spin(build_proj_bundle({l, degrees})) == (sum % 2 == 0));
  }
  CHECK_FALSE(is_spin(build_x12(3)));
  CHECK(is_spin(build_x12(4)));
  for (long c = -3; c <= 3; ++c) CHECK(is_spin(build_y16(c)));
}

TEST_CASE("products") {
  const ManifoldModel cp2 = build_cp(2);
  const ManifoldModel sq = product(cp2, cp2);
  CHECK(sq.real_dimension() == 8);
  CHECK(signature(sq) == 1);

  const ManifoldModel xh = product(build_x12(2), build_hp(2));
  CHECK(xh.real_dimension() == 20);
  CHECK(is_spin(xh));
  CHECK(xh.metadata().curvature_certificate.has_value());

  const ManifoldModel x = build_x12(3);
  CHECK(pontryagin_numbers(product(x, build_point())).values == pontryagin_numbers(x).values);
  CHECK(product(x, build_point()).real_dimension() == 12);

  const std::vector<ManifoldModel> pieces{build_cp(2), build_cp(4), build_hp(2), build_x12(2), build_hp(3)};
  for (const auto& m1 : pieces)
    for (const auto& m2 : pieces) {
      if ((m1.real_dimension() + m2.real_dimension()) / 4 > 6) continue;
      const auto n12 = pontryagin_numbers(product(m1, m2)).values;
      CHECK(n12 == pontryagin_numbers(product(m2, m1)).values);
      CHECK(n12 == oracle::product_numbers(pontryagin_numbers(m1).values, m1.real_dimension() / 4,
                                           pontryagin_numbers(m2).values, m2.real_dimension() / 4));
    }
}

TEST_CASE("signature through the L-class top component") {
  for (const auto& m : {build_cp(2), build_cp(4), build_hp(2), build_x12(2), build_y16(1)}) {
    const auto& seq = l_sequence(m.real_dimension() / 4);
    const GradedElement top = evaluate_classes(m, seq.k_polys.back());
    CHECK(pair(m, top) == signature(m));
  }
}

TEST_CASE("Pontryagin numbers of constructed models are integers") {
  for (long c = -3; c <= 3; ++c)
    for (const auto& m : {build_x12(c), build_y16(c), build_z20(c), product(build_x12(c), build_hp(2))})
      for (const auto& [part, value] : pontryagin_numbers(m).values) CHECK(is_integer(value));
}
