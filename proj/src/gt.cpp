#include "rigcon/gt.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "rigcon/error.hpp"

namespace rigcon {

mpz_class count_gt_points(const Partition& lambda, const std::vector<int>& mu) {
  long total = std::accumulate(mu.begin(), mu.end(), 0L);
  if (total != lambda.size()) {
    throw Error(ErrorKind::SizeMismatch, "|lambda| = " + std::to_string(lambda.size()) +
                                             " but mu sums to " + std::to_string(total));
  }
  for (int m : mu) {
    if (m < 0) throw Error(ErrorKind::InvalidInput, "mu has a negative entry");
  }
  int n = static_cast<int>(mu.size());
  if (lambda.length() > n) return 0;
  if (n == 0) return 1;
  std::vector<long> prefix(static_cast<std::size_t>(n + 1), 0);
  for (int j = 1; j <= n; ++j) prefix[static_cast<std::size_t>(j)] = prefix[static_cast<std::size_t>(j - 1)] + mu[static_cast<std::size_t>(j - 1)];

  std::vector<int> top(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) top[static_cast<std::size_t>(i - 1)] = lambda.part(i);
  std::map<std::vector<int>, mpz_class> rows{{top, 1}};
  CapCounter counter;
  // go down from the row of length len to length len - 1
  for (int len = n; len > 1; --len) {
    std::map<std::vector<int>, mpz_class> next;
    long target = prefix[static_cast<std::size_t>(len - 1)];
    for (const auto& [row, count] : rows) {
      std::vector<int> below(static_cast<std::size_t>(len - 1));
      // suffix bounds: the remaining entries can add at most max_rest[i]
      std::vector<long> max_rest(static_cast<std::size_t>(len), 0);
      std::vector<long> min_rest(static_cast<std::size_t>(len), 0);
      for (int i = len - 2; i >= 0; --i) {
        auto u = static_cast<std::size_t>(i);
        max_rest[u] = max_rest[u + 1] + row[u];
        min_rest[u] = min_rest[u + 1] + row[u + 1];
      }
      std::function<void(int, long)> rec = [&](int i, long sum) {
        if (i == len - 1) {
          if (sum == target) {
            counter.tick("Gelfand-Tsetlin rows");
            next[below] += count;
          }
          return;
        }
        auto u = static_cast<std::size_t>(i);
        // row[i] >= x >= row[i+1]
        for (int x = row[u + 1]; x <= row[u]; ++x) {
          long s = sum + x;
          if (s + min_rest[u + 1] > target) break;
          if (s + max_rest[u + 1] < target) continue;
          below[u] = x;
          rec(i + 1, s);
        }
      };
      rec(0, 0);
    }
    rows = std::move(next);
  }
  mpz_class out = 0;
  for (const auto& [row, count] : rows) {
    if (row[0] == prefix[1]) out += count;
  }
  return out;
}

std::vector<mpz_class> stretched_gt_series(const Partition& lambda, const std::vector<int>& mu, int n_max) {
  std::vector<mpz_class> out;
  for (int N = 0; N <= n_max; ++N) {
    std::vector<int> scaled_mu = mu;
    for (int& m : scaled_mu) m *= N;
    out.push_back(count_gt_points(lambda.scaled(N), scaled_mu));
  }
  return out;
}

}  // namespace rigcon
