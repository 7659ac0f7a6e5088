#include <doctest.h>

#include <algorithm>
#include <functional>

#include "rigcon/error.hpp"
#include "rigcon/gt.hpp"
#include "rigcon/kostka.hpp"

using namespace rigcon;

namespace {
std::vector<mpz_class> v(std::initializer_list<long> xs) {
  std::vector<mpz_class> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}
}  // namespace

TEST_CASE("gt point counts") {
  CHECK(count_gt_points({2, 1}, {1, 1, 1}) == 2);
  CHECK(count_gt_points({3, 2, 2}, {3, 2, 2}) == 1);
  CHECK(count_gt_points({3, 1}, {1, 1, 1, 1}) == 3);
  CHECK(count_gt_points({1, 1, 1}, {3}) == 0);
  CHECK(count_gt_points({}, {}) == 1);
  CHECK_THROWS_AS(count_gt_points({2}, {1}), Error);
}

TEST_CASE("gt counts equal kostka numbers and ignore the order of mu") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        mpz_class k = kostka_foulkes(lam, mu, false).polynomial.at_one();
        CHECK(count_gt_points(lam, mu.parts()) == k);
        std::vector<int> perm = mu.parts();
        std::reverse(perm.begin(), perm.end());
        CHECK(count_gt_points(lam, perm) == k);
        perm.push_back(0);
        std::rotate(perm.begin(), perm.end() - 1, perm.end());
        CHECK(count_gt_points(lam, perm) == k);
      }
    }
  }
}

TEST_CASE("stretched gt series") {
  CHECK(stretched_gt_series({3, 1}, {1, 1, 1, 1}, 3) == v({1, 3, 6, 10}));
  CHECK(stretched_gt_series({2, 2}, {2, 2}, 4) == v({1, 1, 1, 1, 1}));
  CHECK(stretched_gt_series({2, 1}, {1, 1, 1}, 4) == v({1, 2, 3, 4, 5}));
}

namespace {

// All GT patterns as flat coordinate vectors (rows from the top down).
void gt_points(std::vector<std::vector<int>>& rows, const std::vector<long>& prefix, std::vector<std::vector<int>>& out) {
  const std::vector<int> row = rows.back();
  if (row.size() == 1) {
    std::vector<int> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    out.push_back(flat);
    return;
  }
  std::vector<int> below(row.size() - 1);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long sum) {
    if (i == below.size()) {
      if (sum == prefix[below.size()]) {
        rows.push_back(below);
        gt_points(rows, prefix, out);
        rows.pop_back();
      }
      return;
    }
    for (int x = row[i + 1]; x <= row[i]; ++x) {
      below[i] = x;
      rec(i + 1, sum + x);
    }
  };
  rec(0, 0);
}

// Dimension of the affine span of the points.
int affine_dimension(const std::vector<std::vector<int>>& pts) {
  std::vector<std::vector<mpq_class>> m;
  for (std::size_t p = 1; p < pts.size(); ++p) {
    std::vector<mpq_class> r;
    for (std::size_t c = 0; c < pts[p].size(); ++c) r.emplace_back(pts[p][c] - pts[0][c]);
    m.push_back(r);
  }
  int rank = 0;
  std::size_t cols = pts[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    auto r0 = static_cast<std::size_t>(rank);
    std::size_t piv = r0;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r0]);
    for (std::size_t r = r0 + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[r0][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[r0][k];
    }
    ++rank;
  }
  return rank;
}

int finite_difference_degree(std::vector<mpz_class> s) {
  int order = 0;
  while (std::any_of(s.begin(), s.end(), [](const mpz_class& x) { return x != 0; })) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = s[i + 1] - s[i];
    s.pop_back();
    ++order;
  }
  return order - 1;
}

}  // namespace

TEST_CASE("stretched gt series has degree equal to the polytope dimension") {
  struct Case {
    Partition lam;
    std::vector<int> mu;
  };
  for (const auto& c : {Case{{3, 1}, {1, 1, 1, 1}}, Case{{2, 1}, {1, 1, 1}}, Case{{3, 2, 1}, {1, 1, 1, 1, 1, 1}},
                        Case{{4, 2}, {2, 2, 1, 1}}, Case{{5, 3, 1}, {3, 2, 2, 1, 1}}}) {
    // points of 2 GT: a dilate whose lattice points span the affine hull
    std::vector<std::vector<int>> rows(1);
    for (std::size_t i = 0; i < c.mu.size(); ++i) rows[0].push_back(2 * c.lam.part(static_cast<int>(i) + 1));
    std::vector<long> prefix{0};
    for (int m : c.mu) prefix.push_back(prefix.back() + 2 * m);
    std::vector<std::vector<int>> pts;
    gt_points(rows, prefix, pts);
    int dim = affine_dimension(pts);
    auto s = stretched_gt_series(c.lam, c.mu, dim + 4);
    // the series has more terms than the degree needs, so vanishing differences are a real check
    CHECK(finite_difference_degree(s) == dim);
  }
}
