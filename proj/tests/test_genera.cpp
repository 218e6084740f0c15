#include <doctest.h>

#include "cobord/cobordism.hpp"
#include "cobord/genera.hpp"
#include "cobord/manifold.hpp"

using namespace cobord;

namespace {

PontryaginPolynomial poly(std::initializer_list<std::pair<const char*, Rational>> terms) {
  PontryaginPolynomial out;
  for (const auto& [key, value] : terms) out[Partition::from_key(key)] = value;
  return out;
}

std::vector<ManifoldModel> kind_one_models() {
  return {build_cp(2),          build_cp(4),          build_cp(6),         build_x12(1),
          build_x12(2),         build_x12(-3),        build_y16(1),        build_y16(-2),
          build_z20(2),         product(build_cp(2), build_cp(2)),       product(build_x12(2), build_cp(2)),
          build_proj_bundle({2, {1, -2, 3}})};
}

}  // namespace

TEST_CASE("L polynomials") {
  const auto seq = universal_k_polynomials(l_series(4), 3);
  REQUIRE(seq.k_polys.size() == 4);
  CHECK(seq.k_polys[0] == poly({{"1", 1}}));
  CHECK(seq.k_polys[1] == poly({{"p1", Rational(1, 3)}}));
  CHECK(seq.k_polys[2] == poly({{"p2", Rational(7, 45)}, {"p1^2", Rational(-1, 45)}}));
  CHECK(seq.k_polys[3] ==
        poly({{"p3", Rational(62, 945)}, {"p1*p2", Rational(-13, 945)}, {"p1^3", Rational(2, 945)}}));
}

TEST_CASE("A-hat polynomials") {
  const auto seq = universal_k_polynomials(ahat_series(4), 3);
  CHECK(seq.k_polys[1] == poly({{"p1", Rational(-1, 24)}}));
  CHECK(seq.k_polys[2] == poly({{"p1^2", Rational(7, 5760)}, {"p2", rational(-4, 5760)}}));
  CHECK(seq.k_polys[3] == poly({{"p1^3", Rational(-31, 967680)},
                                {"p1*p2", Rational(11, 241920)},
                                {"p3", Rational(-1, 60480)}}));
}

TEST_CASE("multiplicative sequences are stable in the number of variables") {
  for (int j = 1; j <= 5; ++j) {
    const auto base = universal_k_polynomials(l_series(j), j, j);
    const auto more = universal_k_polynomials(l_series(j), j, j + 1);
    CHECK(base.k_polys == more.k_polys);
    const auto abase = universal_k_polynomials(ahat_series(j), j, j);
    const auto amore = universal_k_polynomials(ahat_series(j), j, j + 1);
    CHECK(abase.k_polys == amore.k_polys);
  }
}

TEST_CASE("K polynomials are homogeneous") {
  const auto seq = universal_k_polynomials(ahat_series(6), 6);
  for (std::size_t j = 0; j < seq.k_polys.size(); ++j)
    for (const auto& [part, coeff] : seq.k_polys[j]) CHECK(part.weight() == static_cast<int>(j));
}

TEST_CASE("invalid multiplicative sequence requests") {
  CHECK_THROWS_AS(universal_k_polynomials(l_series(2), 3), std::invalid_argument);
  CHECK_THROWS_AS(universal_k_polynomials(l_series(3), 3, 2), std::invalid_argument);
  CharacteristicSeries bad{"bad", {2, 1, 1}};
  CHECK_THROWS_AS(universal_k_polynomials(bad, 2), std::invalid_argument);
}

TEST_CASE("genus values on projective spaces") {
  CHECK(signature(build_cp(2)) == 1);
  CHECK(signature(build_cp(4)) == 1);
  CHECK(signature(build_cp(6)) == 1);
  CHECK(ahat(build_cp(2)) == Rational(-1, 8));
  CHECK(signature(build_hp(2)) == 1);
  CHECK(ahat(build_hp(2)) == 0);
  CHECK(signature(build_hp(3)) == 0);
  CHECK(signature(build_hp(4)) == 1);
  for (long c = -3; c <= 3; ++c) CHECK(signature(build_x12(c)) == 0);
}

TEST_CASE("dimensions not divisible by four are flagged") {
  const GenusValue v = evaluate_genus(build_cp(3), l_sequence(1));
  CHECK(v.flagged);
  CHECK(v.value == 0);
  CHECK_THROWS_AS(elliptic_q_coefficients(build_cp(3), 2), std::invalid_argument);
  CHECK_THROWS_AS(twisted_ahat_tangent(build_cp(1)), std::invalid_argument);
}

TEST_CASE("root and universal pipelines agree") {
  for (const auto& m : kind_one_models()) {
    CAPTURE(m.name());
    CHECK_NOTHROW(signature(m));
    CHECK_NOTHROW(ahat(m));
    CHECK_NOTHROW(twisted_ahat_tangent(m));
    const int order = 3;
    CHECK(elliptic_q_coefficients_roots(m, order) == elliptic_q_coefficients_universal(m, order));
  }
}

TEST_CASE("twisted A-hat genus") {
  // A-hat(CP^2) = 1 - p1/24 and ch(T_C) = 4 + p1: the top part pairs to 4*(-1/8) + 3.
  CHECK(twisted_ahat_tangent(build_cp(2)) == Rational(5, 2));
  CHECK(twisted_ahat_tangent(build_hp(2)) == -1);
  for (const auto& m : {build_cp(2), build_hp(2), build_x12(2), build_y16(1), build_hp(4)}) {
    const auto coeffs = elliptic_q_coefficients(m, 1);
    CHECK(coeffs[0] == ahat(m));
    CHECK(coeffs[1] == -twisted_ahat_tangent(m));
  }
}

TEST_CASE("elliptic genus examples") {
  for (long c = 1; c <= 3; ++c) CHECK(elliptic_q_coefficients(build_x12(2 * c), 3) == std::vector<Rational>(4, 0));
  CHECK(elliptic_q_coefficients(product(build_x12(2), build_hp(2)), 3) == std::vector<Rational>(4, 0));
  CHECK(elliptic_q_coefficients(build_cp(2), 0) == std::vector<Rational>{Rational(-1, 8)});
  CHECK(elliptic_q_coefficients(build_hp(2), 3) == std::vector<Rational>{0, 1, 0, 0});
}

TEST_CASE("genera are multiplicative") {
  const std::vector<ManifoldModel> pieces{build_cp(2), build_cp(4), build_hp(2)};
  for (const auto& a : pieces)
    for (const auto& b : pieces) {
      const ManifoldModel ab = product(a, b);
      CHECK(signature(ab) == signature(a) * signature(b));
      CHECK(ahat(ab) == ahat(a) * ahat(b));
      const auto fa = elliptic_q_coefficients(a, 3);
      const auto fb = elliptic_q_coefficients(b, 3);
      const auto fab = elliptic_q_coefficients(ab, 3);
      std::vector<Rational> expected(4, 0);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; i + j < 4; ++j) expected[i + j] += fa[i] * fb[j];
      CHECK(fab == expected);
    }
}

TEST_CASE("elliptic coefficients are integral on spin models") {
  std::vector<ManifoldModel> spin;
  for (long c = -2; c <= 2; ++c) {
    spin.push_back(build_x12(2 * c));
    spin.push_back(build_y16(c));
  }
  spin.push_back(build_z20(2));
  for (int n = 1; n <= 4; ++n) spin.push_back(build_hp(n));
  for (const auto& m : spin) {
    CAPTURE(m.name());
    REQUIRE(is_spin(m));
    for (const auto& v : elliptic_q_coefficients(m, 3)) CHECK(is_integer(v));
    CHECK(is_integer(twisted_ahat_tangent(m)));
  }
}

TEST_CASE("A-hat vanishes on the spin families") {
  for (long c = 1; c <= 3; ++c) {
    CHECK(ahat(build_x12(2 * c)) == 0);
    CHECK(ahat(build_y16(c)) == 0);
  }
  CHECK(ahat(build_z20(2)) == 0);
}

TEST_CASE("monomial to elementary transition") {
  const auto& table = monomial_to_elementary(2);
  // m_{1,1} = e_2 and m_{2} = e_1^2 - 2 e_2
  CHECK(table.at(Partition({1, 1})) == poly({{"p2", 1}}));
  CHECK(table.at(Partition({2})) == poly({{"p1^2", 1}, {"p2", -2}}));
}
