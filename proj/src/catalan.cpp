#include "rigcon/catalan.hpp"

#include <algorithm>
#include <numeric>

#include "rigcon/error.hpp"
#include "rigcon/kostka.hpp"
#include "rigcon/tableaux.hpp"

namespace rigcon {

namespace {

// net[i] = exponent of (1 - q^i)
QPolynomial cyclotomic_product(std::map<int, long> net) {
  QPolynomial out(1);
  for (const auto& [i, e] : net) {
    for (long t = 0; t < e; ++t) out *= QPolynomial(1) - QPolynomial::monomial(1, i);
  }
  for (const auto& [i, e] : net) {
    for (long t = 0; t > e; --t) out = out.divide_by_one_minus_q_power(i);
  }
  return out;
}

void check_dims(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorKind::RangeError, "n and m must be positive");
}

Partition rectangle(int rows, int width) {
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), width));
}

// prod_{a=0}^{count-1} [a]! [x+y+a]! / ([x+a]! [y+a]!)
QPolynomial box_product(int x, int y, int count) {
  std::vector<int> num;
  std::vector<int> den;
  for (int a = 0; a < count; ++a) {
    num.push_back(a);
    num.push_back(x + y + a);
    den.push_back(x + a);
    den.push_back(y + a);
  }
  return q_factorial_ratio(num, den);
}

}  // namespace

QPolynomial q_factorial_ratio(const std::vector<int>& num, const std::vector<int>& den) {
  std::map<int, long> net;
  long ones = 0;  // power of 1/(1-q) from [a]! = prod (1-q^i) / (1-q)^a
  for (int a : num) {
    for (int i = 1; i <= a; ++i) ++net[i];
    ones -= a;
  }
  for (int b : den) {
    for (int i = 1; i <= b; ++i) --net[i];
    ones += b;
  }
  net[1] += ones;
  return cyclotomic_product(std::move(net));
}

QPolynomial catalan_poly(int n, int m) {
  check_dims(n, m);
  std::map<int, long> net;
  for (int i = 1; i <= n * m; ++i) ++net[i];
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) --net[i + j - 1];
  }
  return cyclotomic_product(std::move(net));
}

bool catalan_kostka_identity(int n, int m) {
  check_dims(n, m);
  QPolynomial k = kostka_foulkes(rectangle(m, n), rectangle(n * m, 1), false).polynomial;
  return k == catalan_poly(n, m).shifted(m * n * (n - 1) / 2);
}

QPolynomial NarayanaTable::total() const {
  QPolynomial out;
  for (const auto& [k, p] : by_k) out += p;
  return out;
}

std::vector<mpz_class> NarayanaTable::at_one() const {
  std::vector<mpz_class> out(static_cast<std::size_t>((n - 1) * (m - 1) + 1));
  for (const auto& [k, p] : by_k) out[static_cast<std::size_t>(k)] = p.at_one();
  return out;
}

NarayanaTable narayana_maj(int n, int m) {
  check_dims(n, m);
  NarayanaTable t{n, m, {}};
  for (int k = 0; k <= (n - 1) * (m - 1); ++k) t.by_k[k] = QPolynomial();
  for (const auto& w : lattice_words(rectangle(m, n))) t.by_k[w.des] += QPolynomial::monomial(1, w.maj);
  return t;
}

QPolynomial narayana_bosonic(int n, int m, int k) {
  check_dims(n, m);
  if (k < 0 || k > (n - 1) * (m - 1)) {
    throw Error(ErrorKind::RangeError, "k = " + std::to_string(k) + " outside 0.." +
                                           std::to_string((n - 1) * (m - 1)));
  }
  QPolynomial out;
  for (int a = 0; a <= k; ++a) {
    int r = k - a;
    QPolynomial term = gauss_binomial(n * m + 1, r).shifted(r * (r - 1) / 2) * box_product(m, a, n);
    if (r % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

NarayanaTable narayana_bosonic_table(int n, int m) {
  NarayanaTable t{n, m, {}};
  for (int k = 0; k <= (n - 1) * (m - 1); ++k) t.by_k[k] = narayana_bosonic(n, m, k);
  return t;
}

QPolynomial narayana_two_rows(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw Error(ErrorKind::RangeError, "need 0 <= k <= n-1");
  QPolynomial p = (QPolynomial(1) - QPolynomial::monomial(1, 1)) * gauss_binomial(n, k) * gauss_binomial(n, k + 1);
  return p.divide_by_one_minus_q_power(n).shifted(k * (k + 1));
}

std::map<int, NarayanaGroup> narayana_fermionic(int n, int m) {
  check_dims(n, m);
  std::map<int, NarayanaGroup> out;
  for (const auto& cfg : enumerate_admissible(rectangle(m, n), RectangleSequence::unit_rows(rectangle(n * m, 1)))) {
    int l = (m - 1) * n - cfg.level(1).length();
    auto& g = out[l];
    QPolynomial term = cfg.weight();
    g.total += term;
    g.terms.push_back(std::move(term));
    g.configs.push_back(cfg);
  }
  return out;
}

mpz_class macmahon_ehrhart(int n, int m, int k) {
  if (n < 0 || m < 0 || k < 0) throw Error(ErrorKind::RangeError, "arguments must be nonnegative");
  mpq_class v = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) v *= mpq_class(k + i + j - 1, i + j - 1);
  }
  v.canonicalize();
  return v.get_num();
}

bool hvector_identity(int n, int m, int window) {
  std::vector<mpz_class> h = narayana_maj(n, m).at_one();
  // coefficients of (sum_j h_j z^j) / (1-z)^{nm+1}
  int power = n * m + 1;
  for (int k = 0; k < window; ++k) {
    mpz_class series = 0;
    for (int j = 0; j <= k && j < static_cast<int>(h.size()); ++j) {
      series += h[static_cast<std::size_t>(j)] * binomial(k - j + power - 1, power - 1);
    }
    if (series != macmahon_ehrhart(n, m, k)) return false;
  }
  return true;
}

QPolynomial schroeder_poly(int n, int m) {
  QPolynomial c = catalan_poly(n, m);
  std::vector<mpz_class> out(static_cast<std::size_t>(c.degree() + 1));
  for (int i = c.min_degree(); i <= c.degree(); ++i) {
    mpz_class ci = c.coeff(i);
    if (ci == 0) continue;
    for (int t = 0; t <= i; ++t) out[static_cast<std::size_t>(t)] += ci * binomial(i, t);
  }
  return QPolynomial::from_coeffs(0, std::move(out));
}

mpz_class sulanke_mn(int d, int n, int k) {
  if (d < 1 || n < 1 || k < 0 || k > (d - 1) * (n - 1)) {
    throw Error(ErrorKind::RangeError, "need 0 <= k <= (d-1)(n-1)");
  }
  mpz_class total = 0;
  for (int j = 0; j <= k; ++j) {
    mpz_class term = binomial(static_cast<long>(d) * n + 1, k - j) * macmahon_ehrhart(n, d, j);
    if ((k - j) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

bool narayana_summation_identity(int n, int m, int r) {
  NarayanaTable t = narayana_maj(n, m);
  QPolynomial left;
  for (int k = 0; k <= r; ++k) {
    auto it = t.by_k.find(k);
    if (it == t.by_k.end()) continue;
    left += gauss_binomial(n * m + r - k, r - k) * it->second;
  }
  return left == box_product(n, r, m) && left == box_product(m, r, n) && left == box_product(n, m, r);
}

bool narayana_symmetry(int n, int m) {
  NarayanaTable t = narayana_maj(n, m);
  NarayanaTable u = narayana_maj(m, n);
  int top = (n - 1) * (m - 1);
  for (int k = 0; k <= top; ++k) {
    const QPolynomial& p = t.by_k.at(k);
    // nm(n-1)(m-1) is even; the reflection exponent does not depend on k
    int e = n * m * top / 2;
    if (p != t.by_k.at(top - k).reflected(e)) return false;
    if (p != u.by_k.at(k)) return false;
  }
  return true;
}

}  // namespace rigcon
