#include "rigcon/rigged.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "rigcon/error.hpp"

namespace rigcon {

namespace {

long binom2(long x) { return x * (x - 1) / 2; }

long floor_div2(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
long floor_div(long x, long d) { return x >= 0 ? x / d : -((-x + d - 1) / d); }

const Partition& empty_partition() {
  static const Partition empty;
  return empty;
}

}  // namespace

ConfigurationType::ConfigurationType(Partition lambda, RectangleSequence rects)
    : lambda_(std::move(lambda)), rects_(std::move(rects)) {
  if (lambda_.size() != rects_.size()) {
    throw Error(ErrorKind::SizeMismatch, "|lambda| = " + std::to_string(lambda_.size()) +
                                             " but |R| = " + std::to_string(rects_.size()));
  }
  int top = std::max(lambda_.length(), rects_.max_height());
  for (int k = 1; k <= top; ++k) {
    long s = 0;
    for (int j = k + 1; j <= lambda_.length(); ++j) s += lambda_.part(j);
    for (const Rect& r : rects_.rects()) s -= static_cast<long>(r.width) * std::max(r.height - k, 0);
    if (s < 0) {
      throw Error(ErrorKind::NegativeLevel, "level " + std::to_string(k) + " of type (" +
                                                lambda_.to_string() + "; " + rects_.to_string() +
                                                ") would have size " + std::to_string(s));
    }
    sizes_.push_back(static_cast<int>(s));
  }
  while (!sizes_.empty() && sizes_.back() == 0) sizes_.pop_back();
  int widest = rects_.max_width();
  for (int s : sizes_) widest = std::max(widest, s);
  column_bound_ = widest + 1;
}

int ConfigurationType::source(int k, int j) const noexcept {
  int total = 0;
  for (const Rect& r : rects_.rects()) {
    if (r.height == k) total += std::min(r.width, j);
  }
  return total;
}

int ConfigurationType::overlap(int k, int j) const noexcept {
  int total = 0;
  for (const Rect& r : rects_.rects()) {
    if (r.height >= k && r.width >= j) ++total;
  }
  return total;
}

std::vector<int> level_sizes(const Partition& lambda, const RectangleSequence& rects) {
  return ConfigurationType(lambda, rects).sizes();
}

Configuration::Configuration(TypePtr type, std::vector<Partition> levels)
    : type_(std::move(type)), levels_(std::move(levels)) {
  while (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
  int top = std::max(type_->levels(), static_cast<int>(levels_.size()));
  for (int k = 1; k <= top; ++k) {
    if (level(k).size() != type_->size_at(k)) {
      throw Error(ErrorKind::InvalidInput, "level " + std::to_string(k) + " has size " +
                                               std::to_string(level(k).size()) + ", type requires " +
                                               std::to_string(type_->size_at(k)));
    }
  }
  levels_.resize(static_cast<std::size_t>(type_->levels()));
}

const Partition& Configuration::level(int k) const noexcept {
  if (k < 1 || k > static_cast<int>(levels_.size())) return empty_partition();
  return levels_[static_cast<std::size_t>(k - 1)];
}

long Configuration::vacancy(int k, int j) const {
  return static_cast<long>(level(k - 1).column_sum(j)) - 2L * level(k).column_sum(j) +
         level(k + 1).column_sum(j) + type_->source(k, j);
}

long Configuration::charge() const {
  int top = std::max(type_->levels(), type_->rects().max_height()) + 1;
  long total = 0;
  for (int k = 1; k <= top; ++k) {
    for (int j = 1; j <= type_->column_bound(); ++j) {
      total += binom2(level(k - 1).column(j) - level(k).column(j) + type_->overlap(k, j));
    }
  }
  return total;
}

long Configuration::cocharge() const {
  long total = 0;
  for (int k = 1; k <= type_->levels() + 1; ++k) {
    for (int j = 1; j <= type_->column_bound(); ++j) {
      total += binom2(level(k - 1).column(j) - level(k).column(j));
    }
  }
  return total;
}

std::vector<Configuration::Factor> Configuration::factors() const {
  std::vector<Factor> out;
  // column sums of levels k-1, k, k+1, indexed 0..largest part of level k
  std::vector<long> below;
  std::vector<long> here;
  std::vector<long> above;
  auto sums = [](const Partition& nu, int upto, std::vector<long>& q) {
    q.assign(static_cast<std::size_t>(upto + 1), 0);
    for (int j = 1; j <= upto; ++j) q[static_cast<std::size_t>(j)] = q[static_cast<std::size_t>(j - 1)] + nu.column(j);
  };
  for (int k = 1; k <= type_->levels(); ++k) {
    const Partition& nu = level(k);
    if (nu.empty()) continue;
    int top = nu.largest();
    sums(level(k - 1), top, below);
    sums(nu, top, here);
    sums(level(k + 1), top, above);
    const auto& parts = nu.parts();
    // parts are decreasing; walk runs from the smallest part upwards
    std::size_t end = parts.size();
    while (end > 0) {
      int j = parts[end - 1];
      std::size_t start = end - 1;
      while (start > 0 && parts[start - 1] == j) --start;
      auto u = static_cast<std::size_t>(j);
      long p = below[u] - 2 * here[u] + above[u] + type_->source(k, j);
      out.push_back({k, j, p, static_cast<int>(end - start)});
      end = start;
    }
  }
  return out;
}

QPolynomial Configuration::weight() const {
  QPolynomial w = QPolynomial::monomial(1, static_cast<int>(charge()));
  for (const Factor& f : factors()) {
    w *= gauss_binomial(static_cast<int>(f.vacancy + f.multiplicity), f.multiplicity);
  }
  return w;
}

mpz_class Configuration::weight_at_one() const {
  mpz_class w = 1;
  mpz_class b;
  for (const Factor& f : factors()) {
    if (f.vacancy < 0) return 0;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(f.vacancy + f.multiplicity),
                 static_cast<unsigned long>(f.multiplicity));
    w *= b;
  }
  return w;
}

std::string Configuration::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    if (k) out += " | ";
    out += levels_[k].empty() ? "-" : levels_[k].to_string();
  }
  return out + "}";
}

bool is_admissible(const Configuration& cfg) {
  const ConfigurationType& t = cfg.type();
  for (int k = 1; k <= t.levels() + 1; ++k) {
    for (int j = 1; j <= t.column_bound(); ++j) {
      if (cfg.vacancy(k, j) < 0) return false;
    }
  }
  return true;
}

namespace {

// Depth-first generator. Level k is built column by column (alpha_1 >= alpha_2
// >= ...) while its prefix sums Q_j are held between a lower bound forced by
// P^(k-1) >= 0 and an upper bound that P^(k) >= 0 needs for any level k+1.
class Enumerator {
 public:
  Enumerator(const TypePtr& type, const std::function<void(const Configuration&)>& visit)
      : type_(type), visit_(visit), L_(type->levels()), J_(type->column_bound()) {
    q_.assign(static_cast<std::size_t>(L_ + 1), std::vector<long>(static_cast<std::size_t>(J_ + 1), 0));
    cols_.assign(static_cast<std::size_t>(L_ + 1), {});
    lower_.assign(static_cast<std::size_t>(L_ + 1), std::vector<long>(static_cast<std::size_t>(J_ + 2), 0));
    upper_.assign(static_cast<std::size_t>(L_ + 1), std::vector<long>(static_cast<std::size_t>(J_ + 2), 0));
    src_.assign(static_cast<std::size_t>(L_ + 2), std::vector<long>(static_cast<std::size_t>(J_ + 1), 0));
    for (int k = 1; k <= L_ + 1; ++k) {
      for (int j = 1; j <= J_; ++j) src_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = type_->source(k, j);
    }
    least_.assign(static_cast<std::size_t>(L_ + 1), std::vector<long>(static_cast<std::size_t>(J_ + 1), LONG_MIN));
    for (int k = 1; k <= L_; ++k) {
      for (int j = 1; j <= J_; ++j) least_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = least_value(k, j);
    }
  }

  void run() { level(1); }

 private:
  long size(int k) const { return type_->size_at(k); }

  void level(int k) {
    if (k > L_) {
      emit();
      return;
    }
    auto& lo = lower_[static_cast<std::size_t>(k)];
    auto& hi = upper_[static_cast<std::size_t>(k)];
    const auto& prev = q_[static_cast<std::size_t>(k - 1)];
    long s = size(k);
    for (int j = 1; j <= J_; ++j) {
      if (k >= 2) {
        const auto& prev2 = q_[static_cast<std::size_t>(k - 2)];
        lo[static_cast<std::size_t>(j)] = 2 * prev[static_cast<std::size_t>(j)] -
                                          prev2[static_cast<std::size_t>(j)] - src(k - 1, j);
      } else {
        lo[static_cast<std::size_t>(j)] = LONG_MIN / 4;
      }
      hi[static_cast<std::size_t>(j)] =
          floor_div2(prev[static_cast<std::size_t>(j)] + src(k, j) + size(k + 1));
    }
    // suffix minimum of the upper bounds: Q_j is nondecreasing in j
    hi[static_cast<std::size_t>(J_ + 1)] = LONG_MAX;
    for (int j = J_; j >= 1; --j) {
      hi[static_cast<std::size_t>(j)] = std::min(hi[static_cast<std::size_t>(j)], hi[static_cast<std::size_t>(j + 1)]);
    }
    long max_lo = LONG_MIN;
    for (int j = 1; j <= J_; ++j) max_lo = std::max(max_lo, lo[static_cast<std::size_t>(j)]);
    if (s < max_lo || s > hi[static_cast<std::size_t>(J_)]) return;
    cols_[static_cast<std::size_t>(k)].clear();
    column(k, 1, 0, s);
  }

  long src(int k, int j) const {
    return src_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
  }

  // P_j^(i) >= 0 gives Q_j^(i+1) >= 2 Q_j^(i) - Q_j^(i-1) - source(i, j), so
  // the slopes of the smallest continuation only drop by the source terms.
  // That continuation must fit under every later level size.
  bool future_fits(int k, int j, long value) const {
    if (value < least_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) return false;
    long before = q_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)];
    long cur = value;
    for (int i = k; i <= L_; ++i) {
      long next = 2 * cur - before - src(i, j);
      if (next > size(i + 1)) return false;
      before = cur;
      cur = next;
    }
    return true;
  }

  // The same inequality makes Q_j - S convex on [k, L+1] when S'' = -source,
  // so later Q_j^(i) lie under the chord from Q_j^(k) to Q_j^(L+1) = 0. Each
  // must still reach min(size(i), j), the least Q_j of a partition of that
  // size. Returns the least Q_j^(k) for which that holds.
  long least_value(int k, int j) const {
    std::vector<long> pot(static_cast<std::size_t>(L_ + 2), 0);
    for (int m = k + 1; m <= L_; ++m) {
      auto u = static_cast<std::size_t>(m);
      pot[u + 1] = 2 * pot[u] - pot[u - 1] - src(m, j);
    }
    long span = L_ + 1 - k;
    long end = -pot[static_cast<std::size_t>(L_ + 1)];
    long least = LONG_MIN;
    for (int i = k + 1; i <= L_; ++i) {
      long need = std::min<long>(size(i), j) - pot[static_cast<std::size_t>(i)];
      least = std::max(least, -floor_div((i - k) * end - need * span, L_ + 1 - i));
    }
    return least;
  }

  void column(int k, int j, long p, long cprev) {
    long s = size(k);
    auto& q = q_[static_cast<std::size_t>(k)];
    if (p == s) {
      for (int jj = j; jj <= J_; ++jj) {
        if (!future_fits(k, jj, s)) return;
        q[static_cast<std::size_t>(jj)] = s;
      }
      level(k + 1);
      return;
    }
    const auto& lo = lower_[static_cast<std::size_t>(k)];
    const auto& hi = upper_[static_cast<std::size_t>(k)];
    auto& cols = cols_[static_cast<std::size_t>(k)];
    for (long c = std::min(cprev, s - p); c >= 1; --c) {
      long np = p + c;
      if (np > hi[static_cast<std::size_t>(j)]) continue;
      // the largest prefix sums still reachable with columns of height <= c
      if (np < lo[static_cast<std::size_t>(j)]) break;
      bool feasible = true;
      for (int jj = j + 1; jj <= J_; ++jj) {
        long reach = np + c * (jj - j);
        if (reach >= s) break;
        if (reach < lo[static_cast<std::size_t>(jj)]) {
          feasible = false;
          break;
        }
      }
      if (!feasible) break;  // smaller c only reaches less
      if (!future_fits(k, j, np)) continue;
      q[static_cast<std::size_t>(j)] = np;
      cols.push_back(static_cast<int>(c));
      column(k, j + 1, np, c);
      cols.pop_back();
    }
  }

  void emit() {
    std::vector<Partition> levels;
    levels.reserve(static_cast<std::size_t>(L_));
    for (int k = 1; k <= L_; ++k) {
      const auto& cols = cols_[static_cast<std::size_t>(k)];
      int rows = cols.empty() ? 0 : cols.front();
      std::vector<int> parts(static_cast<std::size_t>(rows), 0);
      for (int c : cols) {
        for (int i = 0; i < c; ++i) ++parts[static_cast<std::size_t>(i)];
      }
      levels.emplace_back(std::move(parts));
    }
    Configuration cfg(type_, std::move(levels));
    for (int k = 1; k <= L_; ++k) {
      const auto& below = q_[static_cast<std::size_t>(k - 1)];
      const auto& here = q_[static_cast<std::size_t>(k)];
      for (int j = 1; j <= J_; ++j) {
        auto u = static_cast<std::size_t>(j);
        long above = k < L_ ? q_[static_cast<std::size_t>(k + 1)][u] : 0;
        if (below[u] - 2 * here[u] + above + src(k, j) < 0) {
          throw std::logic_error("enumerator produced a non-admissible configuration " + cfg.to_string());
        }
      }
    }
    counter_.tick("admissible configurations");
    visit_(cfg);
  }

  TypePtr type_;
  const std::function<void(const Configuration&)>& visit_;
  int L_;
  int J_;
  std::vector<std::vector<long>> q_;  // q_[k][j] = Q_j(nu^(k)), q_[0] = 0
  std::vector<std::vector<int>> cols_;
  std::vector<std::vector<long>> lower_;
  std::vector<std::vector<long>> upper_;
  CapCounter counter_;
  std::vector<std::vector<long>> src_;    // src_[k][j] = source(k, j)
  std::vector<std::vector<long>> least_;  // least_value(k, j)
};

}  // namespace

void for_each_admissible(const TypePtr& type, const std::function<void(const Configuration&)>& visit) {
  Enumerator(type, visit).run();
}

std::vector<Configuration> enumerate_admissible(const TypePtr& type) {
  std::vector<Configuration> out;
  for_each_admissible(type, [&](const Configuration& cfg) { out.push_back(cfg); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Configuration> enumerate_admissible(const Partition& lambda, const RectangleSequence& rects) {
  if (lambda.size() != rects.size()) {
    throw Error(ErrorKind::SizeMismatch, "|lambda| = " + std::to_string(lambda.size()) +
                                             " but |R| = " + std::to_string(rects.size()));
  }
  TypePtr type;
  try {
    type = ConfigurationType::make(lambda, rects);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NegativeLevel) return {};
    throw;
  }
  return enumerate_admissible(type);
}

long ConfigMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > rows() || j > cols()) return 0;
  return entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

bool ConfigMatrix::same_entries(const std::vector<std::vector<long>>& other) const {
  int r = std::max(rows(), static_cast<int>(other.size()));
  int c = cols();
  for (const auto& row : other) c = std::max(c, static_cast<int>(row.size()));
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= c; ++j) {
      long b = 0;
      if (i <= static_cast<int>(other.size()) && j <= static_cast<int>(other[static_cast<std::size_t>(i - 1)].size())) {
        b = other[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      }
      if (at(i, j) != b) return false;
    }
  }
  return true;
}

ConfigMatrix to_matrix(const Configuration& cfg) {
  const ConfigurationType& t = cfg.type();
  int rows = std::max({t.lambda().length(), t.levels() + 1, t.rects().max_height()});
  int cols = std::max(t.rects().max_width(), 1);
  for (const Partition& nu : cfg.levels()) cols = std::max(cols, nu.largest());
  ConfigMatrix m{cfg.type_ptr(), {}};
  m.entries.assign(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(cols), 0));
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      m.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          cfg.level(i - 1).column(j) - cfg.level(i).column(j) + t.overlap(i, j);
    }
  }
  return m;
}

namespace {

long column_target(const ConfigurationType& t, int j) {
  long total = 0;
  for (const Rect& r : t.rects().rects()) {
    if (r.width >= j) total += r.height;
  }
  return total;
}

// alpha_j^(k) read off the matrix
long matrix_column(const ConfigMatrix& m, int k, int j) {
  long total = 0;
  for (int i = k + 1; i <= m.rows(); ++i) total += m.at(i, j);
  for (const Rect& r : m.type->rects().rects()) {
    if (r.width >= j) total -= std::max(r.height - k, 0);
  }
  return total;
}

bool sums_hold(const ConfigMatrix& m, std::vector<std::string>& out) {
  const ConfigurationType& t = *m.type;
  bool ok = true;
  int cmax = std::max(m.cols(), t.rects().max_width());
  for (int j = 1; j <= cmax; ++j) {
    long s = 0;
    for (int i = 1; i <= m.rows(); ++i) s += m.at(i, j);
    if (s != column_target(t, j)) {
      out.push_back("(1)");
      ok = false;
      break;
    }
  }
  int rmax = std::max(m.rows(), t.lambda().length());
  for (int i = 1; i <= rmax; ++i) {
    long s = 0;
    for (int j = 1; j <= m.cols(); ++j) s += m.at(i, j);
    if (s != t.lambda().part(i)) {
      out.push_back("(2)");
      ok = false;
      break;
    }
  }
  return ok;
}

bool partition_condition_holds(const ConfigMatrix& m) {
  const ConfigurationType& t = *m.type;
  for (int k = 1; k <= m.rows(); ++k) {
    for (int j = 1; j <= m.cols(); ++j) {
      long lhs = 0;
      for (const Rect& r : t.rects().rects()) {
        if (r.width == j) lhs += std::min(r.height, k);
      }
      long rhs = 0;
      for (int i = 1; i <= k; ++i) rhs += m.at(i, j) - m.at(i, j + 1);
      if (lhs < rhs) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::string> matrix_violations(const ConfigMatrix& m) {
  std::vector<std::string> out;
  sums_hold(m, out);
  bool vacancy_ok = true;
  for (int i = 1; i <= m.rows() && vacancy_ok; ++i) {
    long prefix = 0;
    for (int k = 1; k <= m.cols(); ++k) {
      prefix += m.at(i, k) - m.at(i + 1, k);
      if (prefix < 0) {
        vacancy_ok = false;
        break;
      }
    }
  }
  if (!vacancy_ok) out.push_back("(3)");
  if (!partition_condition_holds(m)) out.push_back("(4)");
  return out;
}

Configuration from_matrix(const ConfigMatrix& m) {
  std::vector<std::string> bad;
  if (!sums_hold(m, bad)) {
    std::string which;
    for (const auto& b : bad) which += (which.empty() ? "" : ",") + b;
    throw Error(ErrorKind::InvalidMatrix, "condition " + which + " fails");
  }
  if (!partition_condition_holds(m)) {
    throw Error(ErrorKind::InvalidMatrix, "condition (4) fails: the levels are not partitions");
  }
  const ConfigurationType& t = *m.type;
  std::vector<Partition> levels;
  for (int k = 1; k <= t.levels(); ++k) {
    std::vector<int> cols;
    for (int j = 1; j <= m.cols(); ++j) {
      long a = matrix_column(m, k, j);
      if (a > 0) cols.push_back(static_cast<int>(a));
    }
    levels.push_back(Partition(cols).conjugate());
  }
  return Configuration(m.type, std::move(levels));
}

long matrix_charge(const ConfigMatrix& m) {
  long total = 0;
  for (const auto& row : m.entries) {
    for (long x : row) total += binom2(x);
  }
  return total;
}

ConfigMatrix duality_map(const ConfigMatrix& m) {
  const ConfigurationType& t = *m.type;
  std::vector<std::string> bad;
  if (!sums_hold(m, bad)) throw Error(ErrorKind::InvalidMatrix, "duality_map needs conditions (1),(2)");
  TypePtr dual = ConfigurationType::make(t.lambda().conjugate(), t.rects().transposed().dominant_rearrangement());
  int rows = std::max({m.cols(), t.lambda().largest(), t.rects().max_width()});
  int cols = std::max({m.rows(), t.lambda().length(), t.rects().max_height()});
  ConfigMatrix out{dual, {}};
  out.entries.assign(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(cols), 0));
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      long v = -m.at(j, i) + (t.lambda().part(j) >= i ? 1 : 0);
      for (const Rect& r : t.rects().rects()) {
        if (r.height >= j && r.width >= i) ++v;
      }
      out.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
    }
  }
  return out;
}

Configuration maximal_configuration(const Partition& lambda, const Partition& mu) {
  TypePtr type = ConfigurationType::make(lambda, RectangleSequence::unit_rows(mu));
  std::vector<Partition> levels;
  for (int k = 1; k <= type->levels(); ++k) {
    std::vector<int> tail(lambda.parts().begin() + std::min(k, lambda.length()), lambda.parts().end());
    levels.emplace_back(std::move(tail));
  }
  return Configuration(type, std::move(levels));
}

QPolynomial max_config_contribution(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw Error(ErrorKind::SizeMismatch, "|lambda| = " + std::to_string(lambda.size()) +
                                             " but |mu| = " + std::to_string(mu.size()));
  }
  long c = lambda.n_stat() + mu.n_stat();
  for (int j = 1; j <= mu.largest(); ++j) c -= static_cast<long>(mu.column(j)) * (lambda.column(j) - 1);
  QPolynomial out = QPolynomial::monomial(1, static_cast<int>(c));
  for (int j = 1; j <= lambda.part(2); ++j) {
    int m = lambda.column(j) - lambda.column(j + 1);
    int top = mu.column_sum(j) - lambda.column_sum(j) + m;
    out *= gauss_binomial(top, m);
  }
  return out;
}

}  // namespace rigcon
