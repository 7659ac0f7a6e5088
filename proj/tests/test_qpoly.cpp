#include <doctest.h>

#include "rigcon/error.hpp"
#include "rigcon/qpoly.hpp"

using namespace rigcon;

namespace {

QPolynomial poly(std::initializer_list<long> coeffs, int min_deg = 0) {
  std::vector<mpz_class> c;
  for (long x : coeffs) c.emplace_back(x);
  return QPolynomial::from_coeffs(min_deg, c);
}

QPolynomial q_factorial(int n) {
  QPolynomial p(1L);
  for (int i = 1; i <= n; ++i) p *= QPolynomial::q_integer(i);
  return p;
}

}  // namespace

TEST_CASE("arithmetic and rendering") {
  QPolynomial a = poly({1, 1});
  CHECK((a * a) == poly({1, 2, 1}));
  CHECK((a - a).is_zero());
  CHECK(poly({0, 1, 1}).to_string() == "q + q^2");
  CHECK(poly({1, 0, 0, -1}).to_string() == "1 - q^3");
  CHECK(poly({0, 3}).to_string() == "3*q");
  CHECK(QPolynomial().to_string() == "0");
  CHECK(poly({0, 0, 1}).min_degree() == 2);
  CHECK(poly({1, 2, 3}).reflected(5) == poly({3, 2, 1}, 3));
  CHECK(poly({1, 1}).substitute_power(3) == poly({1, 0, 0, 1}));
  CHECK(poly({1, 1}).pow(3) == poly({1, 3, 3, 1}));
  CHECK(poly({1, 2, 3}).at_one() == 6);
  CHECK(poly({1, 2, 3}).evaluate(2) == 17);
}

TEST_CASE("exact division by 1 - q^m") {
  QPolynomial p = poly({1, 0, 0, 0, -1});  // 1 - q^4
  CHECK(p.divide_by_one_minus_q_power(2) == poly({1, 0, 1}));
  CHECK(p.divide_by_one_minus_q_power(1) == poly({1, 1, 1, 1}));
  CHECK_THROWS_AS(p.divide_by_one_minus_q_power(3), Error);
  CHECK_THROWS_AS(poly({1, 1}).divide_by_one_minus_q_power(1), Error);
}

TEST_CASE("gaussian binomials") {
  CHECK(gauss_binomial(2, 1) == poly({1, 1}));
  CHECK(gauss_binomial(7, 0) == QPolynomial(1L));
  CHECK(gauss_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
  CHECK(gauss_binomial(3, 4).is_zero());
  CHECK(gauss_binomial(3, -1).is_zero());
  CHECK(gauss_binomial(-1, 0).is_zero());
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      REQUIRE(gauss_binomial(n, k) * q_factorial(k) * q_factorial(n - k) == q_factorial(n));
      REQUIRE(gauss_binomial(n, k).at_one() == binomial(n, k));
    }
  }
  for (int n = 0; n <= 14; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto r = is_symmetric_unimodal(gauss_binomial(n, k));
      REQUIRE(r.symmetric);
      REQUIRE(r.unimodal);
      REQUIRE(r.twice_center == k * (n - k));
    }
  }
}

TEST_CASE("generalized gaussian") {
  CHECK(generalized_gaussian(2, Partition{1}) == poly({1, 1}));
  CHECK(generalized_gaussian(3, Partition{2, 1}) == poly({1, 2, 2, 2, 1}, 1));
  CHECK(generalized_gaussian(1, Partition{1, 1}).is_zero());
  for (int N = 1; N <= 8; ++N) {
    for (int k = 0; k <= 8; ++k) {
      REQUIRE(generalized_gaussian(N, Partition{k}) == gauss_binomial(N + k - 1, k));
    }
  }
}

TEST_CASE("symmetry and unimodality report") {
  auto r = is_symmetric_unimodal(poly({1, 2, 1}));
  CHECK(r.symmetric);
  CHECK(r.unimodal);
  CHECK(r.center() == 1.0);
  r = is_symmetric_unimodal(poly({1, 0, 1}));
  CHECK(r.symmetric);
  CHECK_FALSE(r.unimodal);
  r = is_symmetric_unimodal(poly({1, 2}, 3));
  CHECK_FALSE(r.symmetric);
  CHECK(r.twice_center == 7);
  CHECK_THROWS_AS(is_symmetric_unimodal(QPolynomial()), Error);
}

TEST_CASE("rational generating function fitting") {
  std::vector<mpz_class> values;
  for (int N = 0; N < 12; ++N) values.push_back(binomial(N + 2, 2));
  auto gf = fit_rational_gf(values, 3);
  REQUIRE(gf.numerator.size() == 1);
  CHECK(gf.numerator[0] == QPolynomial(1L));
  CHECK(gf.denominator_exponents == std::vector<int>{0, 0, 0});
  auto back = gf.expand(12);
  for (int N = 0; N < 12; ++N) CHECK(back[static_cast<std::size_t>(N)].at_one() == values[static_cast<std::size_t>(N)]);

  CHECK_THROWS_AS(fit_rational_gf(values, 2), Error);
  CHECK_THROWS_AS(fit_rational_gf(values, 3, 11), Error);  // no room left to verify
  CHECK_NOTHROW(fit_rational_gf(values, 3, 0));

  // q^N [N+1]_q = coefficients of 1/((1 - q t)(1 - q^2 t))
  std::vector<QPolynomial> qvalues;
  for (int N = 0; N < 8; ++N) qvalues.push_back(QPolynomial::q_integer(N + 1).shifted(N));
  auto qgf = fit_rational_gf_q(qvalues, {1, 2});
  REQUIRE(qgf.numerator.size() == 1);
  CHECK(qgf.numerator[0] == QPolynomial(1L));

  std::vector<QPolynomial> ones(8, QPolynomial(1L));
  try {
    fit_rational_gf_q(ones, {});
    FAIL("expected FitFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FitFailure);
  }
  CHECK(fit_rational_gf_q(ones, {0}).numerator.size() == 1);
}
