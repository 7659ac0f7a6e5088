#include "rigcon/internal.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "rigcon/error.hpp"
#include "rigcon/kostka.hpp"

namespace rigcon {

namespace {

// Characters by rim-hook removal on beta-sets: removing a hook of length h
// moves one bead b to b - h, with sign (-1)^{beads strictly between}.
class MurnaghanNakayama {
 public:
  long value(const Partition& lambda, const Partition& rho) {
    rho_ = rho.parts();
    memo_.clear();
    return eval(lambda.parts(), 0);
  }

 private:
  long eval(const std::vector<int>& lambda, std::size_t i) {
    if (i == rho_.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, i);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int len = static_cast<int>(lambda.size());
    std::vector<int> beads(lambda.size());
    for (int j = 0; j < len; ++j) beads[static_cast<std::size_t>(j)] = lambda[static_cast<std::size_t>(j)] + len - 1 - j;
    std::set<int> occupied(beads.begin(), beads.end());
    int h = rho_[i];
    long total = 0;
    for (int b : beads) {
      int target = b - h;
      if (target < 0 || occupied.count(target)) continue;
      int between = 0;
      for (int c : beads) {
        if (c > target && c < b) ++between;
      }
      std::vector<int> moved = beads;
      std::replace(moved.begin(), moved.end(), b, target);
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> smaller;
      int m = static_cast<int>(moved.size());
      for (int j = 0; j < m; ++j) {
        int part = moved[static_cast<std::size_t>(j)] - (m - 1 - j);
        if (part > 0) smaller.push_back(part);
      }
      long sub = eval(smaller, i + 1);
      total += (between % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<int> rho_;
  std::map<std::pair<std::vector<int>, std::size_t>, long> memo_;
};

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

void require_same_size(const Partition& alpha, const Partition& beta) {
  if (alpha.size() != beta.size()) {
    throw Error(ErrorKind::SizeMismatch, "|alpha| = " + std::to_string(alpha.size()) + " but |beta| = " +
                                             std::to_string(beta.size()));
  }
}

std::vector<mpz_class> times_hook_polynomial(std::vector<mpz_class> series, const Partition& alpha) {
  Partition ac = alpha.conjugate();
  for (int i = 1; i <= alpha.length(); ++i) {
    for (int j = 1; j <= alpha.part(i); ++j) {
      auto h = static_cast<std::size_t>(alpha.part(i) - j + ac.part(j) - i + 1);
      // multiply by 1 - q^h in place, high degrees first
      for (std::size_t d = series.size(); d-- > h;) series[d] -= series[d - h];
    }
  }
  return series;
}

}  // namespace

std::size_t CharacterTable::index(const Partition& p) const {
  auto it = std::find(partitions.begin(), partitions.end(), p);
  if (it == partitions.end()) {
    throw Error(ErrorKind::SizeMismatch, "(" + p.to_string() + ") is not a partition of " + std::to_string(n));
  }
  return static_cast<std::size_t>(it - partitions.begin());
}

mpz_class z_factor(const Partition& rho) {
  mpz_class z = 1;
  for (int i = 1; i <= rho.largest(); ++i) {
    int m = rho.multiplicity(i);
    for (int t = 0; t < m; ++t) z *= i;
    z *= factorial(m);
  }
  return z;
}

std::shared_ptr<const CharacterTable> character_table(int n, int cap) {
  if (n < 0) throw Error(ErrorKind::RangeError, "n must be nonnegative");
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded, "character table of S_" + std::to_string(n) + " exceeds cap " +
                                            std::to_string(cap));
  }
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  auto table = std::make_shared<CharacterTable>();
  table->n = n;
  table->partitions = partitions_of(n);
  mpz_class nfact = factorial(n);
  MurnaghanNakayama mn;
  for (const Partition& lambda : table->partitions) {
    std::vector<long> row;
    for (const Partition& rho : table->partitions) row.push_back(mn.value(lambda, rho));
    table->chi.push_back(std::move(row));
  }
  for (const Partition& rho : table->partitions) table->class_sizes.push_back(nfact / z_factor(rho));
  cache.emplace(n, table);
  return table;
}

std::map<Partition, mpz_class> kronecker_coefficients(const Partition& alpha, const Partition& beta) {
  require_same_size(alpha, beta);
  auto t = character_table(alpha.size());
  std::size_t a = t->index(alpha);
  std::size_t b = t->index(beta);
  mpz_class nfact = factorial(t->n);
  std::map<Partition, mpz_class> out;
  for (std::size_t c = 0; c < t->partitions.size(); ++c) {
    mpz_class sum = 0;
    for (std::size_t rho = 0; rho < t->partitions.size(); ++rho) {
      sum += t->class_sizes[rho] * t->chi[a][rho] * t->chi[b][rho] * t->chi[c][rho];
    }
    if (!mpz_divisible_p(sum.get_mpz_t(), nfact.get_mpz_t())) {
      throw Error(ErrorKind::NonIntegral, "class sum for g is not divisible by n!");
    }
    mpz_class g = sum / nfact;
    if (g < 0) throw Error(ErrorKind::NonIntegral, "negative Kronecker coefficient");
    if (g != 0) out.emplace(t->partitions[c], g);
  }
  return out;
}

QPolynomial principal_specialization_character(const Partition& alpha, const Partition& beta, int N) {
  require_same_size(alpha, beta);
  if (N < 2) throw Error(ErrorKind::RangeError, "N must be at least 2");
  auto t = character_table(alpha.size());
  std::size_t a = t->index(alpha);
  std::size_t b = t->index(beta);
  QPolynomial base = QPolynomial::q_integer(N - 1);
  QPolynomial sum;
  for (std::size_t rho = 0; rho < t->partitions.size(); ++rho) {
    long weight = t->chi[a][rho] * t->chi[b][rho];
    if (weight == 0) continue;
    // p_i(q, ..., q^{N-1}) = q^i [N-1]_{q^i}
    QPolynomial term = 1;
    for (int part : t->partitions[rho].parts()) term *= base.substitute_power(part).shifted(part);
    sum += term * mpz_class(t->class_sizes[rho] * weight);
  }
  mpz_class nfact = factorial(t->n);
  std::vector<mpz_class> coeffs = sum.coeffs();
  for (mpz_class& c : coeffs) {
    if (!mpz_divisible_p(c.get_mpz_t(), nfact.get_mpz_t())) {
      throw Error(ErrorKind::NonIntegral, "specialized class sum is not divisible by n!");
    }
    c /= nfact;
  }
  return QPolynomial::from_coeffs(sum.min_degree(), std::move(coeffs));
}

Partition bracket_partition(const Partition& alpha, const Partition& beta, int N) {
  int r = alpha.length();
  int s = beta.length();
  if (r + s >= N) {
    throw Error(ErrorKind::TooSmallN, "need l(alpha) + l(beta) < N, got " + std::to_string(r) + " + " +
                                          std::to_string(s) + " >= " + std::to_string(N));
  }
  int b1 = beta.part(1);
  std::vector<int> parts;
  for (int i = 1; i <= r; ++i) parts.push_back(alpha.part(i) + b1);
  for (int i = 0; i < N - r - s; ++i) parts.push_back(b1);
  for (int i = s; i >= 2; --i) parts.push_back(b1 - beta.part(i));
  return Partition(std::move(parts));
}

InternalResult internal_fermionic(const Partition& alpha, const Partition& beta, int N) {
  require_same_size(alpha, beta);
  InternalResult result;
  result.lambda = bracket_partition(alpha, beta, N);
  int r = alpha.length();
  int b1 = beta.part(1);
  Partition mu(std::vector<int>(static_cast<std::size_t>(N), b1));
  auto type = ConfigurationType::make(result.lambda, RectangleSequence::unit_rows(mu));
  for_each_admissible(type, [&](const Configuration& cfg) {
    InternalContribution c{cfg, cfg.charge(), {}, {}};
    QPolynomial term = QPolynomial::monomial(1, static_cast<int>(c.charge));
    int top = std::max(type->levels(), r);
    for (int k = 1; k <= top; ++k) {
      std::vector<int> columns;
      for (int p : cfg.level(k).parts()) {
        if (columns.empty() || columns.back() != p) columns.push_back(p);
      }
      bool augmented = k >= 2 && k <= r;
      if (augmented && std::find(columns.begin(), columns.end(), b1) == columns.end()) columns.push_back(b1);
      std::sort(columns.begin(), columns.end());
      for (int j : columns) {
        long aug = (augmented && j == b1) ? static_cast<long>(N) * (k - 1) : 0;
        int m = cfg.multiplicity(k, j);
        long p = cfg.vacancy(k, j);
        c.factors.push_back({k, j, p, m, aug});
        term *= gauss_binomial(static_cast<int>(p + m + aug), static_cast<int>(p));
      }
    }
    c.term = term;
    result.polynomial += term;
    result.contributions.push_back(std::move(c));
  });
  std::sort(result.contributions.begin(), result.contributions.end(),
            [](const InternalContribution& x, const InternalContribution& y) { return x.config < y.config; });
  return result;
}

bool symmetry_center_identity(const Partition& alpha, const Partition& beta, int N) {
  InternalResult res = internal_fermionic(alpha, beta, N);
  long target = static_cast<long>(N) * alpha.size();
  for (const auto& c : res.contributions) {
    long lhs = 2 * c.charge;
    for (const auto& f : c.factors) lhs += f.vacancy * (f.multiplicity + f.augment);
    if (lhs != target) return false;
  }
  return true;
}

std::pair<Partition, RectangleSequence> dual_form_type(const Partition& alpha, const Partition& beta, int r,
                                                       int k, int N) {
  require_same_size(alpha, beta);
  if (alpha.part(1) > r || beta.part(1) > k || alpha.part(1) + beta.part(1) > N * r) {
    throw Error(ErrorKind::InvalidInput, "dual form needs alpha_1 <= r, beta_1 <= k and alpha_1 + beta_1 <= N r");
  }
  Partition bc = beta.conjugate();
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) parts.push_back(r * N - bc.part(i));
  Partition ac = alpha.conjugate();
  for (int p : ac.parts()) parts.push_back(p);
  std::vector<Rect> rects(static_cast<std::size_t>(N), Rect{r, k});
  return {Partition(std::move(parts)), RectangleSequence(std::move(rects))};
}

bool verify_dual_form(const Partition& alpha, const Partition& beta, int r, int k, int N) {
  auto [lambda, rects] = dual_form_type(alpha, beta, r, k, N);
  QPolynomial kostka = parabolic_kostka(lambda, rects, false).polynomial;
  QPolynomial character = principal_specialization_character(alpha, beta, N);
  if (kostka.is_zero() || character.is_zero()) return kostka.is_zero() && character.is_zero();
  return q_power_ratio(kostka, character).has_value();
}

StableLimit stable_limit(const Partition& alpha, const Partition& beta, int depth, int n_max) {
  if (depth < 1) throw Error(ErrorKind::RangeError, "depth must be positive");
  struct Seen {
    int N;
    int min_degree;
    std::vector<mpz_class> prefix;
  };
  std::vector<Seen> seen;
  for (int N = alpha.length() + beta.length() + 1; N <= n_max; ++N) {
    QPolynomial p = internal_fermionic(alpha, beta, N).polynomial;
    if (p.is_zero()) continue;
    std::vector<mpz_class> prefix;
    for (int i = 0; i < depth; ++i) prefix.push_back(p.coeff(p.min_degree() + i));
    seen.push_back({N, p.min_degree(), std::move(prefix)});
    std::size_t n = seen.size();
    if (n >= 3) {
      const Seen& a = seen[n - 3];
      const Seen& b = seen[n - 2];
      const Seen& c = seen[n - 1];
      if (a.min_degree == b.min_degree && b.min_degree == c.min_degree && a.prefix == b.prefix &&
          b.prefix == c.prefix) {
        return {a.N, a.min_degree, a.prefix, times_hook_polynomial(a.prefix, alpha)};
      }
    }
  }
  throw Error(ErrorKind::NoStabilization, "leading " + std::to_string(depth) + " coefficients did not settle by N = " +
                                              std::to_string(n_max));
}

std::map<Partition, QPolynomial> liskova(const Partition& alpha, const Partition& beta) {
  auto g = kronecker_coefficients(alpha, beta);
  std::map<Partition, QPolynomial> out;
  for (const Partition& mu : partitions_of(alpha.size())) {
    QPolynomial total;
    for (const auto& [gamma, coeff] : g) total += kostka_foulkes(gamma, mu, false).polynomial * coeff;
    if (total.is_zero()) continue;
    for (const auto& c : total.coeffs()) {
      if (c < 0) throw std::logic_error("negative coefficient in L^(" + mu.to_string() + ")");
    }
    out.emplace(mu, std::move(total));
  }
  return out;
}

}  // namespace rigcon
