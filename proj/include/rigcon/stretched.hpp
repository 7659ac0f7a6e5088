#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rigcon/partition.hpp"
#include "rigcon/qpoly.hpp"

namespace rigcon {

struct StretchSeries {
  Partition lambda;
  RectangleSequence rects;
  bool generic_q = false;
  std::vector<mpz_class> values;     // K_{N lambda, N R}(1), N = 0..n_max
  std::vector<QPolynomial> q_values;  // filled in generic-q mode
  std::optional<RationalGF> fitted;
};

/// K_{N lambda, N R} for N = 0..n_max. Rectangle widths scale with N.
StretchSeries stretched_values(const Partition& lambda, const RectangleSequence& rects, int n_max,
                               bool generic_q = false);

/// lambda = (n^k, 1^{kd}), R = n + d columns of height k.
struct StretchFamily {
  int k;
  int d;
  int n;
};
std::pair<Partition, RectangleSequence> family_shape(const StretchFamily& f);
std::optional<StretchFamily> detect_family(const Partition& lambda, const RectangleSequence& rects);
/// k^2 (d(n-1) - 1) + 2 + (k-1) [n = 2][d = 1]
int family_denominator_power(const StretchFamily& f);
/// (k-1)(k(n-2) + 2([n = 2] - 1)), the numerator degree for d = 1.
std::optional<int> family_numerator_degree(const StretchFamily& f);

/// Fits the integer series to P(t)/(1-t)^power. Without a power the family
/// formulas are used; throws FitFailure if neither applies.
RationalGF fit_stretched(StretchSeries& series, std::optional<int> denominator_power = std::nullopt);

/// Closed forms for K_N = K_{N(n,1),N(1^{n+1})}(1) and the doubled-shape
/// K2_N = K_{N(n,n,1,1),N(1,1)^{n+1}}(1), n in {3,4,5}; UnsupportedN otherwise.
struct OkounkovForms {
  int n;
  std::function<mpz_class(long)> K;
  std::function<mpz_class(long)> K2;
};
OkounkovForms okounkov_closed_forms(int n);

/// Both closed forms against the fermionic values for N = 0..n_max.
bool okounkov_validate(int n, int n_max);

struct ThresholdReport {
  int n = 0;
  int power = 0;
  long threshold = 0;         // smallest N >= 1 with K2_N > K_N^power
  bool fails_below = false;   // the inequality fails for every 1 <= N < threshold
  long window = 0;
  bool holds_on_window = false;  // holds for threshold <= N <= threshold + window
  bool certified = false;     // no real root of K2 - K^power beyond the threshold (Sturm count)
};
ThresholdReport okounkov_threshold(int n, int power, long window = 200);

/// The reference factorizations of K2 - K^2 (n = 3) and 51891840 (K2 - K^3)
/// (n = 5), checked at N = 1..40; UnsupportedN otherwise.
bool okounkov_certificate(int n);

/// The constant c with left = c * right for N = 1..40 if there is one; 1 when
/// the reference factorization holds as written.
std::optional<mpq_class> certificate_scale(int n);

/// Compares the series of K_{N(n,1^d),N(1^{n+d})}(q) with
/// C_{d,n-1}(q^{binom(n,2)} t, q) / (q^{binom(n,2)} t; q)_{d(n-1)+1} for N <= n_max.
bool gt_generating_function_check(int n, int d, int n_max, bool with_q);

struct ScanRow {
  int N;
  mpz_class single;   // K_{N lambda, N R}(1)
  mpz_class doubled;  // K_{2N lambda, 2N R}(1)
  bool cube_exceeded;
};
struct ScanReport {
  StretchFamily family;
  bool hypothesis;  // n > 1 + (k^2 + 2)/(k^2 d)
  std::vector<ScanRow> rows;
  std::optional<int> first_N;
  std::string note;
};
/// Direct evaluation for N = 1..n_max; window evidence only. k = 1 is the
/// closed-form family and throws UnsupportedN.
ScanReport general_counterexample_scan(int n, int k, int d, int n_max);

/// K_{(N|lambda|, lambda), (|lambda|^{N+1})}(q) equals s_lambda(1, q, ..., q^{N-1})
/// up to a power of q.
bool gaussian_kostka_identity(const Partition& lambda, int N);

}  // namespace rigcon
