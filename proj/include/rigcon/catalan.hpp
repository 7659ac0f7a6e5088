#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "rigcon/qpoly.hpp"
#include "rigcon/rigged.hpp"

namespace rigcon {

/// prod [a]_q! over num divided by prod [b]_q! over den, exact.
/// Throws NonIntegral if the quotient is not a polynomial.
QPolynomial q_factorial_ratio(const std::vector<int>& num, const std::vector<int>& den);

/// (q;q)_{nm} / prod_{i<=n, j<=m} (1 - q^{i+j-1})
QPolynomial catalan_poly(int n, int m);

/// q^{m binom(n,2)} C(n,m|q) == K_{(n^m),(1^{nm})}(q)
bool catalan_kostka_identity(int n, int m);

struct NarayanaTable {
  int n = 0;
  int m = 0;
  std::map<int, QPolynomial> by_k;  // k = 0 .. (n-1)(m-1)

  QPolynomial total() const;
  /// N(n,m;k|1) for k = 0 .. (n-1)(m-1)
  std::vector<mpz_class> at_one() const;
};

/// From lattice words with m letters each used n times: q^maj grouped by des.
NarayanaTable narayana_maj(int n, int m);

/// Alternating sum over a of q-binomials times q-plane-partition products.
/// Throws RangeError unless 0 <= k <= (n-1)(m-1).
QPolynomial narayana_bosonic(int n, int m, int k);
NarayanaTable narayana_bosonic_table(int n, int m);

/// q^{k(k+1)} (1-q)/(1-q^n) [n k]_q [n k+1]_q
QPolynomial narayana_two_rows(int n, int k);

struct NarayanaGroup {
  std::vector<Configuration> configs;  // sorted
  std::vector<QPolynomial> terms;      // q^charge times binomials, per config
  QPolynomial total;
};

/// Admissible configurations of type ((n^m), (1^{nm})) grouped by
/// l = (m-1) n - length(nu^(1)). Each group total is q^{m binom(n,2)} N(n,m;l|q).
std::map<int, NarayanaGroup> narayana_fermionic(int n, int m);

/// Number of plane partitions of shape (n^m) with parts <= k.
mpz_class macmahon_ehrhart(int n, int m, int k);

/// sum_k i(M_nm;k) z^k (1-z)^{nm+1} == sum_j N(n,m;j) z^j for k < window.
bool hvector_identity(int n, int m, int window);

/// C(n,m|1+t) as a polynomial in t.
QPolynomial schroeder_poly(int n, int m);

/// Lattice-path ascent counts by the alternating sum. Throws RangeError
/// unless 0 <= k <= (d-1)(n-1).
mpz_class sulanke_mn(int d, int n, int k);

/// sum_{k<=r} [nm+r-k choose r-k]_q N(n,m;k|q) against the three product forms.
bool narayana_summation_identity(int n, int m, int r);

/// N(n,m;k|q) = q^{nm(n-1)(m-1)/2} N(n,m;(n-1)(m-1)-k|q^{-1}) = N(m,n;k|q)
bool narayana_symmetry(int n, int m);

}  // namespace rigcon
