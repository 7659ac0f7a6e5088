#include "rigcon/qpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "rigcon/error.hpp"

namespace rigcon {

QPolynomial::QPolynomial(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

QPolynomial::QPolynomial(const mpz_class& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPolynomial QPolynomial::monomial(const mpz_class& coeff, int exponent) {
  QPolynomial p(coeff);
  if (!p.is_zero()) p.lo_ = exponent;
  return p;
}

QPolynomial QPolynomial::from_coeffs(int min_deg, std::vector<mpz_class> coeffs) {
  QPolynomial p;
  p.lo_ = min_deg;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

QPolynomial QPolynomial::q_integer(int n) {
  if (n <= 0) return {};
  return from_coeffs(0, std::vector<mpz_class>(static_cast<std::size_t>(n), mpz_class(1)));
}

void QPolynomial::trim() {
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_.erase(c_.begin() + static_cast<long>(last), c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(first));
    lo_ += static_cast<int>(first);
  }
}

mpz_class QPolynomial::coeff(int exponent) const {
  if (is_zero() || exponent < lo_ || exponent > degree()) return 0;
  return c_[static_cast<std::size_t>(exponent - lo_)];
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  int lo = std::min(lo_, other.lo_);
  int hi = std::max(degree(), other.degree());
  if (lo < lo_ || hi > degree()) {
    std::vector<mpz_class> grown(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) grown[i + static_cast<std::size_t>(lo_ - lo)].swap(c_[i]);
    c_.swap(grown);
    lo_ = lo;
  }
  for (std::size_t i = 0; i < other.c_.size(); ++i) {
    c_[i + static_cast<std::size_t>(other.lo_ - lo_)] += other.c_[i];
  }
  trim();
  return *this;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) { return *this += -other; }

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    mpz_srcptr ai = a.c_[i].get_mpz_t();
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, b.c_[j].get_mpz_t());
    }
  }
  return QPolynomial::from_coeffs(a.lo_ + b.lo_, std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) { return *this = *this * other; }

QPolynomial& QPolynomial::operator*=(const mpz_class& scalar) {
  for (auto& c : c_) c *= scalar;
  trim();
  return *this;
}

QPolynomial QPolynomial::shifted(int k) const {
  QPolynomial p = *this;
  if (!p.is_zero()) p.lo_ += k;
  return p;
}

QPolynomial QPolynomial::substitute_power(int k) const {
  if (k < 1) throw Error(ErrorKind::RangeError, "substitute_power needs k >= 1");
  if (is_zero()) return {};
  std::vector<mpz_class> out(static_cast<std::size_t>((degree() - lo_) * k + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * static_cast<std::size_t>(k)] = c_[i];
  return from_coeffs(lo_ * k, std::move(out));
}

QPolynomial QPolynomial::reflected(int n) const {
  if (is_zero()) return {};
  std::vector<mpz_class> out(c_.rbegin(), c_.rend());
  return from_coeffs(n - degree(), std::move(out));
}

QPolynomial QPolynomial::divide_by_one_minus_q_power(int m) const {
  if (m < 1) throw Error(ErrorKind::RangeError, "divide_by_one_minus_q_power needs m >= 1");
  if (is_zero()) return {};
  // p = (1 - q^m) r  =>  r_e = p_e + r_{e-m}
  std::size_t len = c_.size();
  if (len <= static_cast<std::size_t>(m)) {
    throw Error(ErrorKind::NonIntegral, "1 - q^" + std::to_string(m) + " does not divide " + to_string());
  }
  std::size_t rlen = len - static_cast<std::size_t>(m);
  std::vector<mpz_class> r(rlen);
  for (std::size_t e = 0; e < rlen; ++e) {
    r[e] = c_[e];
    if (e >= static_cast<std::size_t>(m)) r[e] += r[e - static_cast<std::size_t>(m)];
  }
  // the top m coefficients of p must equal -r_{e-m}
  for (std::size_t e = rlen; e < len; ++e) {
    mpz_class expect = 0;
    if (e >= static_cast<std::size_t>(m)) expect = -r[e - static_cast<std::size_t>(m)];
    if (c_[e] != expect) {
      throw Error(ErrorKind::NonIntegral,
                  "1 - q^" + std::to_string(m) + " does not divide " + to_string());
    }
  }
  return from_coeffs(lo_, std::move(r));
}

QPolynomial QPolynomial::pow(int e) const {
  if (e < 0) throw Error(ErrorKind::RangeError, "negative power");
  QPolynomial result(1L);
  QPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

mpz_class QPolynomial::at_one() const {
  mpz_class s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

mpz_class QPolynomial::evaluate(const mpz_class& x) const {
  if (is_zero()) return 0;
  if (lo_ < 0 && x == 0) throw Error(ErrorKind::RangeError, "negative exponent at q = 0");
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  if (lo_ >= 0) {
    mpz_class xp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(lo_));
    return acc * xp;
  }
  mpz_class xp;
  mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-lo_));
  if (acc % xp != 0) throw Error(ErrorKind::NonIntegral, "Laurent value is not an integer");
  return acc / xp;
}

std::string QPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    int e = lo_ + static_cast<int>(i);
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1);
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (!unit) out += mag.get_str() + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::optional<int> q_power_ratio(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  int e = a.min_degree() - b.min_degree();
  if (a.coeffs() != b.coeffs()) return std::nullopt;
  return e;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

std::mutex g_binom_mutex;
std::map<std::pair<int, int>, QPolynomial> g_binom_cache;

QPolynomial compute_gauss_binomial(int n, int k) {
  // multiply (1 - q^{n-i}) then divide by (1 - q^{i+1}), i = 0..k-1; every
  // partial quotient is itself a Gaussian binomial, so division stays exact
  QPolynomial p(1L);
  for (int i = 0; i < k; ++i) {
    QPolynomial factor = QPolynomial(1L) - QPolynomial::monomial(1, n - i);
    p = (p * factor).divide_by_one_minus_q_power(i + 1);
  }
  return p;
}

}  // namespace

QPolynomial gauss_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  k = std::min(k, n - k);
  if (k == 0) return QPolynomial(1L);
  if (k == 1) return QPolynomial::q_integer(n);
  {
    std::lock_guard<std::mutex> lock(g_binom_mutex);
    auto it = g_binom_cache.find({n, k});
    if (it != g_binom_cache.end()) return it->second;
  }
  QPolynomial p = compute_gauss_binomial(n, k);
  std::lock_guard<std::mutex> lock(g_binom_mutex);
  if (g_binom_cache.size() > 200000) g_binom_cache.clear();
  g_binom_cache.emplace(std::make_pair(n, k), p);
  return p;
}

QPolynomial generalized_gaussian(int N, const Partition& p) {
  if (p.length() > N) return {};
  QPolynomial num(1L);
  std::vector<int> hooks;
  for (int i = 1; i <= p.length(); ++i) {
    for (int j = 1; j <= p.part(i); ++j) {
      int content = j - i;
      num *= QPolynomial(1L) - QPolynomial::monomial(1, N + content);
      hooks.push_back((p.part(i) - j) + (p.column(j) - i) + 1);
    }
  }
  for (int h : hooks) num = num.divide_by_one_minus_q_power(h);
  return num.shifted(static_cast<int>(p.n_stat()));
}

bool is_unimodal(const std::vector<mpz_class>& seq) {
  std::size_t i = 0;
  while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
  while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
  return i + 1 >= seq.size();
}

SymmetryReport is_symmetric_unimodal(const QPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "symmetry of the zero polynomial");
  SymmetryReport r;
  const auto& c = p.coeffs();
  r.symmetric = std::equal(c.begin(), c.end(), c.rbegin());
  r.unimodal = is_unimodal(c);
  r.twice_center = p.min_degree() + p.degree();
  return r;
}

std::vector<QPolynomial> RationalGF::expand(int terms) const {
  std::vector<QPolynomial> series(static_cast<std::size_t>(std::max(terms, 0)));
  for (std::size_t i = 0; i < series.size() && i < numerator.size(); ++i) series[i] = numerator[i];
  // divide by each (1 - q^s t): a_i += q^s a_{i-1}
  for (int s : denominator_exponents) {
    for (std::size_t i = 1; i < series.size(); ++i) series[i] += series[i - 1].shifted(s);
  }
  return series;
}

std::vector<mpz_class> RationalGF::numerator_at_one() const {
  std::vector<mpz_class> out;
  for (const auto& c : numerator) out.push_back(c.at_one());
  return out;
}

namespace {

RationalGF finish_fit(std::vector<QPolynomial> product, std::vector<int> exponents,
                      std::optional<int> expected_degree) {
  int window = static_cast<int>(product.size());
  int last = -1;
  for (int i = 0; i < window; ++i) {
    if (!product[static_cast<std::size_t>(i)].is_zero()) last = i;
  }
  if (expected_degree) {
    if (*expected_degree + 1 >= window) {
      throw Error(ErrorKind::FitFailure, "window of " + std::to_string(window) +
                                             " values leaves no check beyond degree " +
                                             std::to_string(*expected_degree));
    }
    if (last > *expected_degree) {
      throw Error(ErrorKind::FitFailure, "numerator has a nonzero coefficient at t^" +
                                             std::to_string(last) + " beyond expected degree " +
                                             std::to_string(*expected_degree));
    }
  } else if (window - 1 - last < 2) {
    throw Error(ErrorKind::FitFailure,
                "numerator does not terminate inside a window of " + std::to_string(window));
  }
  product.resize(static_cast<std::size_t>(last + 1));
  return RationalGF{std::move(product), std::move(exponents)};
}

}  // namespace

RationalGF fit_rational_gf(const std::vector<mpz_class>& values, int denominator_power,
                           std::optional<int> expected_degree) {
  if (denominator_power < 0) throw Error(ErrorKind::RangeError, "negative denominator power");
  std::vector<mpz_class> prod = values;
  for (int r = 0; r < denominator_power; ++r) {
    for (std::size_t i = prod.size(); i-- > 1;) prod[i] -= prod[i - 1];
  }
  std::vector<QPolynomial> as_poly(prod.begin(), prod.end());
  return finish_fit(std::move(as_poly), std::vector<int>(static_cast<std::size_t>(denominator_power), 0),
                    expected_degree);
}

RationalGF fit_rational_gf_q(const std::vector<QPolynomial>& values,
                             const std::vector<int>& denominator_exponents,
                             std::optional<int> expected_degree) {
  std::vector<QPolynomial> prod = values;
  for (int s : denominator_exponents) {
    for (std::size_t i = prod.size(); i-- > 1;) prod[i] -= prod[i - 1].shifted(s);
  }
  return finish_fit(std::move(prod), denominator_exponents, expected_degree);
}

}  // namespace rigcon
