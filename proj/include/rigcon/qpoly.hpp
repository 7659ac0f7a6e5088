#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rigcon/partition.hpp"

namespace rigcon {

/// Laurent polynomial in q with big-integer coefficients.
///
/// Coefficients are kept as a dense run from min_degree() to degree() with
/// both ends nonzero; the zero polynomial has an empty run. Exponents may be
/// negative so that q^{n} p(q^{-1}) style reflections stay closed.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(long constant);  // NOLINT: implicit from integers is intended
  QPolynomial(const mpz_class& constant);

  static QPolynomial monomial(const mpz_class& coeff, int exponent);
  static QPolynomial from_coeffs(int min_deg, std::vector<mpz_class> coeffs);
  /// [n]_q = 1 + q + ... + q^{n-1}; zero for n <= 0.
  static QPolynomial q_integer(int n);

  bool is_zero() const noexcept { return c_.empty(); }
  int min_degree() const noexcept { return lo_; }
  int degree() const noexcept { return lo_ + static_cast<int>(c_.size()) - 1; }
  /// Dense coefficients from min_degree() to degree().
  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  mpz_class coeff(int exponent) const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);
  QPolynomial& operator*=(const mpz_class& scalar);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(QPolynomial a, const mpz_class& s) { return a *= s; }
  QPolynomial operator-() const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// q^k * p
  QPolynomial shifted(int k) const;
  /// p(q^k), k >= 1
  QPolynomial substitute_power(int k) const;
  /// q^n * p(q^{-1})
  QPolynomial reflected(int n) const;
  /// p / (1 - q^m), exact; throws NonIntegral if (1 - q^m) does not divide p.
  QPolynomial divide_by_one_minus_q_power(int m) const;
  QPolynomial pow(int e) const;

  mpz_class at_one() const;
  mpz_class evaluate(const mpz_class& x) const;

  /// Sparse ascending rendering, e.g. "q + q^2", "1 - q^3", "0".
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();

  int lo_ = 0;
  std::vector<mpz_class> c_;
};

mpz_class binomial(long n, long k);

/// e with a == q^e * b, if there is one; both nonzero.
std::optional<int> q_power_ratio(const QPolynomial& a, const QPolynomial& b);

/// Gaussian binomial [n choose k]_q; zero if k < 0, k > n or n < 0. Cached.
QPolynomial gauss_binomial(int n, int k);

/// s_lambda(1, q, ..., q^{N-1}) by the hook-content formula.
QPolynomial generalized_gaussian(int N, const Partition& p);

struct SymmetryReport {
  bool symmetric = false;
  bool unimodal = false;
  int twice_center = 0;  // min_degree + degree
  double center() const { return twice_center / 2.0; }
};

/// Throws ZeroPolynomial on the zero polynomial.
SymmetryReport is_symmetric_unimodal(const QPolynomial& p);

/// Coefficient sequence weakly rises then weakly falls.
bool is_unimodal(const std::vector<mpz_class>& seq);

/// numerator(t) / prod_{s in denominator_exponents} (1 - q^s t).
/// Coefficients of t are q-polynomials; in the integer mode they are constants.
struct RationalGF {
  std::vector<QPolynomial> numerator;
  std::vector<int> denominator_exponents;

  /// Power-series coefficients of t^0 .. t^{terms-1}.
  std::vector<QPolynomial> expand(int terms) const;
  /// Numerator coefficients evaluated at q = 1, for the integer mode.
  std::vector<mpz_class> numerator_at_one() const;
};

/// Multiplies the series by (1 - t)^power and checks that it terminates.
///
/// With expected_degree, every coefficient past it inside the window must be
/// zero and the window must contain at least one such coefficient. Without it,
/// the window must end in at least two zero coefficients.
RationalGF fit_rational_gf(const std::vector<mpz_class>& values, int denominator_power,
                           std::optional<int> expected_degree = std::nullopt);

RationalGF fit_rational_gf_q(const std::vector<QPolynomial>& values,
                             const std::vector<int>& denominator_exponents,
                             std::optional<int> expected_degree = std::nullopt);

}  // namespace rigcon
