#include <doctest.h>

#include "oracles.hpp"
#include "padicvoa/character.hpp"
#include "padicvoa/combinatorics.hpp"
#include "padicvoa/kummer.hpp"

using namespace padicvoa;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

const HeisenbergState vac = HeisenbergState::vacuum();

}  // namespace

TEST_CASE("characters of simple states") {
  const QSeries z = character(vac, 5);
  CHECK(z.offset() == q(-1, 24));
  const auto counts = oracle::partition_counts(5);
  for (int n = 0; n <= 5; ++n) CHECK(z[n] == Rational(counts[n]));

  const QSeries z2 = character(h_monomial({1, 1}), 4);
  const std::vector<long> expected{0, 2, 8, 18, 40};
  for (int n = 0; n <= 4; ++n) {
    CHECK(z2[n] == Rational(expected[n]));
    CHECK(z2[n] == Rational(Integer(2 * n * counts[n])));
  }
  const QSeries z1 = character(h_monomial({1}), 8);
  for (int n = 0; n <= 8; ++n) CHECK(z1[n].is_zero());
  CHECK_THROWS(character(vac, -1));
}

TEST_CASE("eta series") {
  const QSeries eta = eta_series(30);
  CHECK(eta.offset() == q(1, 24));
  const auto euler = oracle::euler_product(30);
  for (int n = 0; n <= 30; ++n) CHECK(eta[n] == Rational(euler[n]));
  const std::vector<long> head{1, -1, -1, 0, 0, 1};
  for (int n = 0; n <= 5; ++n) CHECK(eta[n] == Rational(head[n]));
  const QSeries one = eta * eta.inverse();
  CHECK(one.offset() == Rational(0));
  CHECK(one == QSeries::one(30));
  CHECK((eta * character(h_monomial({2}), 5)).offset() == Rational(0));
}

TEST_CASE("normalized characters") {
  CHECK(normalized_character(vac, 20) == QSeries::one(20));
  CHECK(normalized_character(v_state(1), 20) == eisenstein_G(2, 20));
  const HeisenbergState a = h_monomial({2, 1});
  const HeisenbergState b = h_monomial({1, 1}) + vac * q(1, 3);
  const Rational alpha = q(-3, 7), beta = q(5, 2);
  CHECK(normalized_character(alpha * a + beta * b, 10) ==
        alpha * normalized_character(a, 10) + beta * normalized_character(b, 10));
}

TEST_CASE("trace paths agree") {
  const HeisenbergState v = h_monomial({3, 1}, q(1, 2)) + h_monomial({2, 2}) + h_monomial({1, 1}, q(-4, 3));
  for (int n = 0; n <= 7; ++n) {
    const auto m = zero_mode_matrix(v, n);
    Rational tr;
    for (std::size_t i = 0; i < m.size(); ++i) tr += m[i][i];
    CHECK(tr == graded_trace(v, n));
  }
  // Weight >= 1 homogeneous states have zero trace on the vacuum line.
  for (const auto& s : basis_states_up_to(5)) {
    if (s.weight() >= 1) CHECK(graded_trace(s, 0).is_zero());
  }
}

TEST_CASE("eisenstein series") {
  const QSeries g2 = eisenstein_G(2, 4);
  const std::vector<Rational> expected{q(-1, 24), 1, 3, 4, 7};
  CHECK(g2.coeffs() == expected);
  CHECK(eisenstein_G(4, 3)[0] == q(1, 240));
  for (int k = 2; k <= 12; k += 2) {
    const QSeries g = eisenstein_G(k, 12);
    CHECK(g[0] == -oracle::bernoulli(k) / Rational(2 * k));
    for (int n = 1; n <= 12; ++n) CHECK(g[n] == Rational(oracle::divisor_sum(n, k - 1)));
  }
  CHECK(eisenstein_G(4, 6)[6] == Rational(252));
  CHECK_THROWS(eisenstein_G(3, 4));
  CHECK_THROWS(eisenstein_G(0, 4));
}

TEST_CASE("p-stabilized G2") {
  const QSeries g5 = eisenstein_G2_star(5, 10);
  CHECK(g5[0] == Rational(1));
  CHECK(g5[5] == Rational(1));
  CHECK(eisenstein_G2_star(3, 4)[4] == Rational(7));
  for (long p : {3L, 5L, 7L, 11L}) {
    const QSeries g = eisenstein_G2_star(p, 15);
    CHECK(g[0] == q(p * p - 1, 24));
    CHECK(g[1] == Rational(1));
    for (int n = 1; n <= 15; ++n) CHECK(g[n] == Rational(oracle::divisor_sum_prime_to(n, p)));
  }
  CHECK_THROWS(eisenstein_G2_star(2, 4));
  CHECK_THROWS(eisenstein_G2_star(9, 4));
}

TEST_CASE("q-series distances and arithmetic") {
  const QSeries a = eisenstein_G(2, 6);
  CHECK(qseries_padic_distance(a, a, 5).is_neg_infinity());
  QSeries b = a;
  b[1] += Rational(25);
  CHECK(qseries_padic_distance(a, b, 5) == NormExponent(-2));
  CHECK_THROWS_AS(qseries_padic_distance(a, character(vac, 6), 5), std::invalid_argument);
  CHECK_THROWS_AS(a + character(vac, 6), std::invalid_argument);
  CHECK((a + eisenstein_G(4, 3)).order() == 3);
  CHECK(sup_norm_exponent(a, 2) == NormExponent(3));
  CHECK(a.truncated(2).order() == 2);
}
