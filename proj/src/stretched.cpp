#include "rigcon/stretched.hpp"

#include <algorithm>

#include "rigcon/catalan.hpp"
#include "rigcon/error.hpp"
#include "rigcon/kostka.hpp"

namespace rigcon {

StretchSeries stretched_values(const Partition& lambda, const RectangleSequence& rects, int n_max, bool generic_q) {
  if (lambda.size() != rects.size()) {
    throw Error(ErrorKind::SizeMismatch, "|lambda| = " + std::to_string(lambda.size()) +
                                             " but |R| = " + std::to_string(rects.size()));
  }
  StretchSeries s{lambda, rects, generic_q, {}, {}, std::nullopt};
  for (int N = 0; N <= n_max; ++N) {
    Partition l = lambda.scaled(N);
    RectangleSequence r = rects.scaled(N);
    if (generic_q) {
      QPolynomial k = parabolic_kostka(l, r, false).polynomial;
      s.values.push_back(k.at_one());
      s.q_values.push_back(std::move(k));
    } else {
      s.values.push_back(parabolic_kostka_at_one(l, r));
    }
  }
  return s;
}

std::pair<Partition, RectangleSequence> family_shape(const StretchFamily& f) {
  if (f.k < 1 || f.d < 0 || f.n < 1) throw Error(ErrorKind::RangeError, "family needs k >= 1, d >= 0, n >= 1");
  std::vector<int> parts(static_cast<std::size_t>(f.k), f.n);
  parts.insert(parts.end(), static_cast<std::size_t>(f.k * f.d), 1);
  std::vector<Rect> rects(static_cast<std::size_t>(f.n + f.d), Rect{1, f.k});
  return {Partition(std::move(parts)), RectangleSequence(std::move(rects))};
}

std::optional<StretchFamily> detect_family(const Partition& lambda, const RectangleSequence& rects) {
  if (rects.empty() || lambda.largest() < 2) return std::nullopt;
  int k = rects.rects().front().height;
  for (const Rect& r : rects.rects()) {
    if (r.width != 1 || r.height != k) return std::nullopt;
  }
  int n = lambda.largest();
  if (lambda.multiplicity(n) != k) return std::nullopt;
  int ones = lambda.multiplicity(1);
  if (lambda.length() != k + ones || ones % k != 0) return std::nullopt;
  int d = ones / k;
  if (d < 1 || static_cast<int>(rects.count()) != n + d) return std::nullopt;
  return StretchFamily{k, d, n};
}

int family_denominator_power(const StretchFamily& f) {
  return f.k * f.k * (f.d * (f.n - 1) - 1) + 2 + ((f.n == 2 && f.d == 1) ? f.k - 1 : 0);
}

std::optional<int> family_numerator_degree(const StretchFamily& f) {
  if (f.d != 1) return std::nullopt;
  return (f.k - 1) * (f.k * (f.n - 2) + 2 * ((f.n == 2 ? 1 : 0) - 1));
}

RationalGF fit_stretched(StretchSeries& series, std::optional<int> denominator_power) {
  std::optional<int> degree;
  if (!denominator_power) {
    auto fam = detect_family(series.lambda, series.rects);
    if (!fam) {
      throw Error(ErrorKind::FitFailure, "no default denominator for (" + series.lambda.to_string() + "; " +
                                             series.rects.to_string() + "); pass a power");
    }
    denominator_power = family_denominator_power(*fam);
    degree = family_numerator_degree(*fam);
  }
  series.fitted = fit_rational_gf(series.values, *denominator_power, degree);
  return *series.fitted;
}

namespace {

mpz_class binom_sum(long N, long top_shift, const std::vector<std::pair<long, long>>& terms) {
  // sum of c * binom(N + s, top_shift) over (c, s)
  mpz_class total = 0;
  for (const auto& [c, s] : terms) total += c * binomial(N + s, top_shift);
  return total;
}

}  // namespace

OkounkovForms okounkov_closed_forms(int n) {
  switch (n) {
    case 3:
      return {3, [](long N) { return binomial(N + 2, 2); }, [](long N) { return binomial(N + 5, 5); }};
    case 4:
      return {4, [](long N) { return binomial(N + 3, 3); },
              [](long N) { return binom_sum(N, 9, {{1, 9}, {1, 7}}); }};
    case 5:
      return {5, [](long N) { return binomial(N + 4, 4); },
              [](long N) { return binom_sum(N, 13, {{1, 13}, {1, 12}, {6, 11}, {1, 10}, {1, 9}}); }};
    default:
      throw Error(ErrorKind::UnsupportedN, "closed forms exist for n = 3, 4, 5 only, got " + std::to_string(n));
  }
}

bool okounkov_validate(int n, int n_max) {
  OkounkovForms f = okounkov_closed_forms(n);
  Partition single{n, 1};
  Partition doubled{n, n, 1, 1};
  RectangleSequence rows(std::vector<Rect>(static_cast<std::size_t>(n + 1), Rect{1, 1}));
  RectangleSequence columns(std::vector<Rect>(static_cast<std::size_t>(n + 1), Rect{1, 2}));
  for (int N = 0; N <= n_max; ++N) {
    if (parabolic_kostka_at_one(single.scaled(N), rows.scaled(N)) != f.K(N)) return false;
    if (parabolic_kostka_at_one(doubled.scaled(N), columns.scaled(N)) != f.K2(N)) return false;
  }
  return true;
}

namespace {

using QVec = std::vector<mpq_class>;  // coefficients, index = power of N

void trim(QVec& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpq_class eval(const QVec& p, const mpq_class& x) {
  mpq_class r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

// Interpolates the polynomial of degree <= deg through f(0..deg).
QVec interpolate(const std::function<mpz_class(long)>& f, int deg) {
  std::vector<mpz_class> diffs;
  for (int i = 0; i <= deg; ++i) diffs.push_back(f(i));
  // forward differences at 0 give the coefficients in the basis binom(N, i)
  std::vector<mpz_class> newton;
  for (int i = 0; i <= deg; ++i) {
    newton.push_back(diffs[0]);
    for (std::size_t j = 0; j + 1 < diffs.size(); ++j) diffs[j] = diffs[j + 1] - diffs[j];
    diffs.pop_back();
  }
  QVec out(static_cast<std::size_t>(deg + 1), mpq_class(0));
  QVec basis{mpq_class(1)};  // binom(N, i) expanded
  for (int i = 0; i <= deg; ++i) {
    for (std::size_t c = 0; c < basis.size(); ++c) out[c] += newton[static_cast<std::size_t>(i)] * basis[c];
    // basis *= (N - i) / (i + 1)
    QVec next(basis.size() + 1, mpq_class(0));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      next[c + 1] += basis[c];
      next[c] -= basis[c] * i;
    }
    for (auto& x : next) x /= (i + 1);
    basis = std::move(next);
  }
  trim(out);
  return out;
}

QVec derivative(const QVec& p) {
  QVec out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  trim(out);
  return out;
}

QVec remainder(QVec a, const QVec& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign(const mpq_class& x) { return sgn(x); }

// Distinct real roots of p in (a, infinity), p(a) != 0.
int roots_beyond(const QVec& p, const mpq_class& a) {
  std::vector<QVec> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    QVec r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& x : r) x = -x;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  auto variations = [&](const std::function<int(const QVec&)>& sg) {
    int count = 0;
    int last = 0;
    for (const auto& q : chain) {
      if (q.empty()) continue;
      int s = sg(q);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  int at_a = variations([&](const QVec& q) { return sign(eval(q, a)); });
  int at_inf = variations([](const QVec& q) { return sign(q.back()); });
  return at_a - at_inf;
}

}  // namespace

ThresholdReport okounkov_threshold(int n, int power, long window) {
  if (power < 1) throw Error(ErrorKind::RangeError, "power must be positive");
  OkounkovForms f = okounkov_closed_forms(n);
  auto diff = [&](long N) -> mpz_class {
    mpz_class k = f.K(N);
    mpz_class kp;
    mpz_pow_ui(kp.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(power));
    return f.K2(N) - kp;
  };
  ThresholdReport r;
  r.n = n;
  r.power = power;
  r.window = window;
  // K2 has degree 4n-7, K^power degree power (n-1); the difference is
  // eventually positive only if 4n-7 > power (n-1)
  int deg = std::max(4 * n - 7, power * (n - 1));
  QVec poly = interpolate(diff, deg);
  if (poly.empty() || sgn(poly.back()) <= 0) {
    throw Error(ErrorKind::RangeError, "K2 - K^" + std::to_string(power) + " is not eventually positive for n = " +
                                           std::to_string(n));
  }
  long N = 1;
  while (diff(N) <= 0) ++N;
  r.threshold = N;
  r.fails_below = true;  // by construction of the search
  r.holds_on_window = true;
  for (long M = N; M <= N + window; ++M) {
    if (diff(M) <= 0) {
      r.holds_on_window = false;
      break;
    }
  }
  // check the interpolant reproduces the closed forms beyond its nodes
  bool exact = true;
  for (long M : {static_cast<long>(deg) + 1, static_cast<long>(deg) + 7, N}) {
    if (eval(poly, mpq_class(M)) != mpq_class(diff(M))) exact = false;
  }
  r.certified = exact && roots_beyond(poly, mpq_class(N)) == 0;
  return r;
}

namespace {

// Both sides of the reference factorization at N.
std::pair<mpz_class, mpz_class> certificate_sides(const OkounkovForms& f, long N) {
  mpz_class k = f.K(N);
  if (f.n == 3) {
    return {20 * (f.K2(N) - k * k), (N * N - 18 * N - 43) * binomial(N + 2, 3)};
  }
  mpz_class x = N;
  mpz_class octic = -78631416 - 172503780 * x - 174033932 * x * x - 101206400 * x * x * x -
                    35852065 * x * x * x * x - 7638110 * x * x * x * x * x - 899548 * x * x * x * x * x * x -
                    44990 * x * x * x * x * x * x * x + x * x * x * x * x * x * x * x;
  return {mpz_class(51891840) * (f.K2(N) - k * k * k), binomial(N + 4, 5) * octic};
}

OkounkovForms certificate_forms(int n) {
  if (n != 3 && n != 5) throw Error(ErrorKind::UnsupportedN, "factorization certificates exist for n = 3, 5 only");
  return okounkov_closed_forms(n);
}

}  // namespace

bool okounkov_certificate(int n) {
  OkounkovForms f = certificate_forms(n);
  for (long N = 1; N <= 40; ++N) {
    auto [left, right] = certificate_sides(f, N);
    if (left != right) return false;
  }
  return true;
}

std::optional<mpq_class> certificate_scale(int n) {
  OkounkovForms f = certificate_forms(n);
  std::optional<mpq_class> scale;
  for (long N = 1; N <= 40; ++N) {
    auto [left, right] = certificate_sides(f, N);
    if (right == 0) {
      if (left != 0) return std::nullopt;
      continue;
    }
    mpq_class c(left, right);
    c.canonicalize();
    if (scale && *scale != c) return std::nullopt;
    scale = c;
  }
  return scale;
}

bool gt_generating_function_check(int n, int d, int n_max, bool with_q) {
  if (n < 2 || d < 1) throw Error(ErrorKind::RangeError, "need n >= 2 and d >= 1");
  std::vector<int> parts{n};
  parts.insert(parts.end(), static_cast<std::size_t>(d), 1);
  Partition lambda(std::move(parts));
  RectangleSequence mu(std::vector<Rect>(static_cast<std::size_t>(n + d), Rect{1, 1}));
  NarayanaTable t = narayana_maj(d, n - 1);
  int shift = n * (n - 1) / 2;
  int M = d * (n - 1) + 1;
  for (int N = 0; N <= n_max; ++N) {
    // coefficient of t^N: q^{shift N} sum_k N(d,n-1;k|q) [M + N - k - 1 choose N - k]_q
    QPolynomial rhs;
    for (const auto& [k, p] : t.by_k) {
      if (k > N) break;
      rhs += p * gauss_binomial(M + N - k - 1, N - k);
    }
    rhs = rhs.shifted(shift * N);
    if (with_q) {
      if (parabolic_kostka(lambda.scaled(N), mu.scaled(N), false).polynomial != rhs) return false;
    } else if (parabolic_kostka_at_one(lambda.scaled(N), mu.scaled(N)) != rhs.at_one()) {
      return false;
    }
  }
  return true;
}

ScanReport general_counterexample_scan(int n, int k, int d, int n_max) {
  if (k == 1) {
    throw Error(ErrorKind::UnsupportedN,
                "k = 1 is the (n,1) family; its thresholds come from the closed forms (okounkov)");
  }
  ScanReport rep;
  rep.family = {k, d, n};
  rep.hypothesis = static_cast<long>(n - 1) * k * k * d > static_cast<long>(k) * k + 2;
  auto [lambda, rects] = family_shape(rep.family);
  StretchSeries s = stretched_values(lambda, rects, 2 * n_max);
  for (int N = 1; N <= n_max; ++N) {
    const mpz_class& a = s.values[static_cast<std::size_t>(N)];
    const mpz_class& b = s.values[static_cast<std::size_t>(2 * N)];
    bool exceeded = b > a * a * a;
    rep.rows.push_back({N, a, b, exceeded});
    if (exceeded && !rep.first_N) rep.first_N = N;
  }
  rep.note = "window evidence for N <= " + std::to_string(n_max) + " only; not a proof for larger N";
  return rep;
}

bool gaussian_kostka_identity(const Partition& lambda, int N) {
  int size = lambda.size();
  std::vector<int> parts{N * size};
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  Partition big(std::move(parts));
  Partition mu(std::vector<int>(static_cast<std::size_t>(N + 1), size));
  QPolynomial k = kostka_foulkes(big, mu, false).polynomial;
  QPolynomial g = generalized_gaussian(N, lambda);
  if (k.is_zero() || g.is_zero()) return k.is_zero() && g.is_zero();
  return k == g.shifted(k.min_degree() - g.min_degree());
}

}  // namespace rigcon
