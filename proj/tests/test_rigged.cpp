#include <doctest.h>

#include <algorithm>
#include <map>

#include "rigcon/error.hpp"
#include "rigcon/rigged.hpp"

using namespace rigcon;

namespace {

const Partition kLambda55{4, 4, 3, 3, 2};
const RectangleSequence kRects55 = RectangleSequence::parse("2^3,2^2,2^2,1,1");

TypePtr type55() { return ConfigurationType::make(kLambda55, kRects55); }

// The six configurations of this type. The fifth and sixth have first level
// (2,1,1); with (3,1) instead they fail P_1^(2) >= 0.
std::vector<std::vector<Partition>> listed55() {
  return {
      {{3, 1}, {3, 3}, {3, 2}, {2}},
      {{3, 1}, {3, 2, 1}, {3, 2}, {2}},
      {{2, 2}, {2, 2, 2}, {3, 2}, {2}},
      {{4}, {3, 3}, {3, 2}, {2}},
      {{2, 1, 1}, {2, 2, 1, 1}, {2, 2, 1}, {2}},
      {{2, 1, 1}, {2, 2, 1, 1}, {3, 1, 1}, {2}},
  };
}

std::vector<std::vector<long>> sorted_rows(std::vector<std::vector<long>> rows, std::size_t width) {
  for (auto& r : rows) r.resize(width, 0);
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Brute-force admissible set: every tuple of partitions of the mandated
// sizes, filtered by the vacancy condition.
std::vector<Configuration> brute_force(const TypePtr& type) {
  std::vector<Configuration> out;
  std::vector<Partition> cur;
  std::function<void(int)> rec = [&](int k) {
    if (k > type->levels()) {
      Configuration cfg(type, cur);
      if (is_admissible(cfg)) out.push_back(cfg);
      return;
    }
    for (const auto& p : partitions_of(type->size_at(k))) {
      cur.push_back(p);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("level sizes") {
  CHECK(level_sizes(kLambda55, kRects55) == std::vector<int>{4, 6, 5, 2});
  CHECK(level_sizes(Partition{5}, RectangleSequence::parse("5")).empty());
  CHECK(level_sizes(Partition{3, 3}, RectangleSequence::parse("1,1,1,1,1,1")) == std::vector<int>{3});
  try {
    level_sizes(Partition{3, 1}, RectangleSequence::parse("1,1,1"));
    FAIL("expected SizeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeMismatch);
  }
  try {
    level_sizes(Partition{2}, RectangleSequence::parse("1^2"));
    FAIL("expected NegativeLevel");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeLevel);
  }
}

TEST_CASE("vacancy numbers of the second listed configuration") {
  Configuration cfg(type55(), listed55()[1]);
  CHECK(cfg.vacancy(1, 1) == 1);
  CHECK(cfg.vacancy(2, 2) == 1);
  CHECK(cfg.vacancy(2, 3) == 1);
  CHECK(cfg.vacancy(3, 2) == 1);
  // the essential vacancy numbers (m_j > 0) are exactly these four
  int nonzero = 0;
  for (const auto& f : cfg.factors()) {
    if (f.vacancy != 0) ++nonzero;
  }
  CHECK(nonzero == 4);
  CHECK(cfg.charge() == 8);
  CHECK(cfg.weight() == gauss_binomial(2, 1).pow(4).shifted(8));
}

TEST_CASE("admissibility") {
  for (const auto& levels : listed55()) CHECK(is_admissible(Configuration(type55(), levels)));
  Configuration bad(type55(), {{1, 1, 1, 1}, {3, 3}, {3, 2}, {2}});
  CHECK(bad.vacancy(1, 1) == -4);
  CHECK_FALSE(is_admissible(bad));
  CHECK_THROWS_AS(Configuration(type55(), {{3}, {3, 3}, {3, 2}, {2}}), Error);
}

TEST_CASE("enumeration reproduces the listed configurations") {
  auto all = enumerate_admissible(kLambda55, kRects55);
  REQUIRE(all.size() == 6);
  std::vector<Configuration> expected;
  for (const auto& levels : listed55()) expected.emplace_back(type55(), levels);
  std::sort(expected.begin(), expected.end());
  CHECK(all == expected);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("configuration counts for (n,n,n) and unit squares") {
  for (int n = 1; n <= 6; ++n) {
    auto type = ConfigurationType::make(Partition{n, n, n},
                                        RectangleSequence::unit_rows(Partition(std::vector<int>(3 * n, 1))));
    auto all = enumerate_admissible(type);
    CHECK(all == brute_force(type));
    mpz_class total = 0;
    for (const auto& cfg : all) total += cfg.weight_at_one();
    CHECK(total == syt_count(Partition{n, n, n}));
    if (n <= 4) CHECK(all.size() == std::vector<std::size_t>{1, 3, 6, 16}[static_cast<std::size_t>(n - 1)]);
    if (n == 6) CHECK(all.size() == 78);
  }
}

TEST_CASE("(n,n) with unit squares: one configuration per partition of n") {
  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate_admissible(Partition{n, n},
                                    RectangleSequence::unit_rows(Partition(std::vector<int>(2 * n, 1))));
    CHECK(all.size() == partitions_of(n).size());
  }
}

TEST_CASE("enumerator agrees with brute force") {
  std::vector<std::pair<Partition, RectangleSequence>> types = {
      {kLambda55, kRects55},
      {{3, 2, 1}, RectangleSequence::parse("1,1,1,1,1,1")},
      {{4, 2, 2}, RectangleSequence::parse("2^2,1,1,1,1")},
      {{3, 3, 2}, RectangleSequence::parse("2^2,2,1,1")},
      {{5, 3, 1}, RectangleSequence::parse("3,3,1,1,1")},
      {{4, 4}, RectangleSequence::parse("2^2,2^2")},
      {{3, 3, 3, 1}, RectangleSequence::parse("1^3,1^3,1^3,1")},
      {{2, 2, 2, 2}, RectangleSequence::parse("1^2,1^2,1^2,1^2")},
  };
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) types.push_back({lam, RectangleSequence::unit_rows(mu)});
    }
  }
  for (const auto& [lam, rects] : types) {
    TypePtr type;
    try {
      type = ConfigurationType::make(lam, rects);
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::NegativeLevel);
      CHECK(enumerate_admissible(lam, rects).empty());
      continue;
    }
    INFO(lam.to_string(), " ; ", rects.to_string());
    CHECK(enumerate_admissible(type) == brute_force(type));
  }
}

TEST_CASE("charge values") {
  CHECK(Configuration(type55(), listed55()[1]).charge() == 8);
  auto t = ConfigurationType::make(Partition{6, 6}, RectangleSequence::unit_rows(Partition(std::vector<int>(12, 1))));
  CHECK(Configuration(t, {{3, 2, 1}}).charge() == 44);
  auto trivial = ConfigurationType::make(Partition{4}, RectangleSequence::parse("4"));
  Configuration empty(trivial, {});
  CHECK(empty.charge() == 0);
  CHECK(empty.cocharge() == 0);
  // only the rectangle source term survives: P_j^(1) = min(4, j)
  CHECK(empty.vacancy(1, 1) == 1);
  CHECK(empty.vacancy(1, 7) == 4);
  CHECK(empty.vacancy(3, 5) == 0);
}

TEST_CASE("cocharge relation") {
  // The single admissible configuration of type ((2,1),(1^3)) has charge 1
  // and cocharge 1, so cocharge = n(mu) - charge fails (3 - 1 = 2). What
  // holds is cocharge = n(R) - charge - sum_{k,j} P_j^(k) m_j(nu^(k)).
  auto t = ConfigurationType::make(Partition{2, 1}, RectangleSequence::parse("1,1,1"));
  auto all = enumerate_admissible(t);
  REQUIRE(all.size() == 1);
  CHECK(all[0].charge() == 1);
  CHECK(all[0].cocharge() == 1);

  std::vector<std::pair<Partition, RectangleSequence>> types = {{kLambda55, kRects55}};
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) types.push_back({lam, RectangleSequence::unit_rows(mu)});
    }
  }
  types.push_back({{4, 2, 2}, RectangleSequence::parse("2^2,1,1,1,1")});
  types.push_back({{3, 3, 2}, RectangleSequence::parse("2^2,2,1,1")});
  for (const auto& [lam, rects] : types) {
    for (const auto& cfg : enumerate_admissible(lam, rects)) {
      long pm = 0;
      for (const auto& f : cfg.factors()) pm += f.vacancy * f.multiplicity;
      INFO(cfg.to_string());
      CHECK(cfg.cocharge() == rects.n_of_rectangles() - cfg.charge() - pm);
    }
  }
}

TEST_CASE("matrix encoding") {
  Configuration cfg(type55(), listed55()[1]);
  ConfigMatrix m = to_matrix(cfg);
  CHECK(m.same_entries({{3, 2, -1}, {2, 2, 0}, {2, 1, 0}, {1, 1, 1}, {1, 1, 0}}));
  // same rows as the reference matrix, in a different order
  std::vector<std::vector<long>> reference = {{2, 2, 0, 0, 0}, {3, 2, -1, 0, 0}, {1, 1, 1, 0, 0}, {2, 1, 0, 0, 0}, {1, 1, 0, 0, 0}};
  CHECK(sorted_rows(m.entries, 5) == sorted_rows(reference, 5));
  CHECK(matrix_charge(m) == 8);
  CHECK(matrix_violations(m).empty());

  // the reference row order fails the vacancy condition
  ConfigMatrix reference_m{m.type, reference};
  auto v = matrix_violations(reference_m);
  CHECK(std::find(v.begin(), v.end(), "(3)") != v.end());

  for (const auto& cfg2 : enumerate_admissible(type55())) {
    auto mm = to_matrix(cfg2);
    CHECK(from_matrix(mm) == cfg2);
    CHECK(matrix_charge(mm) == cfg2.charge());
    CHECK(matrix_violations(mm).empty());
  }

  ConfigMatrix broken = m;
  broken.entries[0][2] = -2;
  try {
    from_matrix(broken);
    FAIL("expected InvalidMatrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidMatrix);
    CHECK(std::string(e.what()).find("(2)") != std::string::npos);
  }
}

TEST_CASE("plane partition matrix") {
  auto t = ConfigurationType::make(Partition{6, 4, 2, 2, 1, 1}, RectangleSequence::parse("2,2,2,2,2,2,2,2"));
  // levels given by their column partitions (5,5),(4,2),(3,1),(2),(1)
  std::vector<Partition> levels;
  for (const Partition& cols : std::vector<Partition>{{5, 5}, {4, 2}, {3, 1}, {2}, {1}}) {
    levels.push_back(cols.conjugate());
  }
  Configuration cfg(t, levels);
  CHECK(is_admissible(cfg));
  auto m = to_matrix(cfg);
  CHECK(m.same_entries({{3, 3}, {1, 3}, {1, 1}, {1, 1}, {1, 0}, {1, 0}}));
  CHECK(from_matrix(m) == cfg);
}

TEST_CASE("matrix conditions characterize admissibility") {
  std::vector<std::pair<Partition, RectangleSequence>> types;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) types.push_back({lam, RectangleSequence::unit_rows(mu)});
    }
  }
  types.push_back({{4, 2, 2}, RectangleSequence::parse("2^2,1,1,1,1")});
  types.push_back({{3, 3, 2}, RectangleSequence::parse("2^2,2,1,1")});
  types.push_back({{4, 3, 2, 1}, RectangleSequence::parse("2^2,1^3,1,1,1")});
  for (const auto& [lam, rects] : types) {
    TypePtr type;
    try {
      type = ConfigurationType::make(lam, rects);
    } catch (const Error&) {
      continue;
    }
    std::vector<Partition> cur;
    std::function<void(int)> rec = [&](int k) {
      if (k > type->levels()) {
        Configuration cfg(type, cur);
        auto m = to_matrix(cfg);
        REQUIRE(from_matrix(m) == cfg);
        REQUIRE(matrix_charge(m) == cfg.charge());
        REQUIRE(is_admissible(cfg) == matrix_violations(m).empty());
        return;
      }
      for (const auto& p : partitions_of(type->size_at(k))) {
        cur.push_back(p);
        rec(k + 1);
        cur.pop_back();
      }
    };
    rec(1);
  }
}

TEST_CASE("duality map") {
  for (const auto& cfg : enumerate_admissible(type55())) {
    auto m = to_matrix(cfg);
    auto d = duality_map(m);
    CHECK(d.type->lambda() == kLambda55.conjugate());
    auto dual_cfg = from_matrix(d);
    CHECK(is_admissible(dual_cfg));
    CHECK(duality_map(d).same_entries(m.entries));
  }
  auto trivial = ConfigurationType::make(Partition{4}, RectangleSequence::parse("4"));
  auto d = duality_map(to_matrix(Configuration(trivial, {})));
  CHECK(d.type->lambda() == Partition{1, 1, 1, 1});
  CHECK(d.type->rects() == RectangleSequence::parse("1^4"));
  CHECK(is_admissible(from_matrix(d)));
}

TEST_CASE("duality map is a bijection of admissible sets") {
  std::vector<std::pair<Partition, RectangleSequence>> types;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) types.push_back({lam, RectangleSequence::unit_rows(mu)});
    }
  }
  types.push_back({kLambda55, kRects55});
  types.push_back({{4, 2, 2}, RectangleSequence::parse("2^2,1,1,1,1")});
  for (const auto& [lam, rects] : types) {
    auto src = enumerate_admissible(lam, rects);
    auto dst = enumerate_admissible(lam.conjugate(), rects.transposed().dominant_rearrangement());
    REQUIRE(src.size() == dst.size());
    std::vector<Configuration> image;
    for (const auto& cfg : src) image.push_back(from_matrix(duality_map(to_matrix(cfg))));
    std::sort(image.begin(), image.end());
    CHECK(image == dst);
  }
}

TEST_CASE("maximal configuration") {
  auto delta = maximal_configuration(Partition{6, 4, 2, 2, 1, 1}, Partition{2, 2, 2, 2, 2, 2, 2, 2});
  CHECK(delta.levels() ==
        std::vector<Partition>{{4, 2, 2, 1, 1}, {2, 2, 1, 1}, {2, 1, 1}, {1, 1}, {1}});
  CHECK(is_admissible(delta));
  auto same = maximal_configuration(Partition{3, 2, 1}, Partition{3, 2, 1});
  CHECK(same.charge() == 0);
  CHECK(maximal_configuration(Partition{4}, Partition{1, 1, 1, 1}).levels().empty());
  CHECK_THROWS_AS(maximal_configuration(Partition{3}, Partition{2}), Error);

  CHECK(max_config_contribution(Partition{3, 2, 1}, Partition{3, 2, 1}) == QPolynomial(1L));
  CHECK(max_config_contribution(Partition{2, 1}, Partition{1, 1, 1}) ==
        QPolynomial::q_integer(2).shifted(1));
  // charge of the maximal configuration matches the closed form exponent
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        if (!lam.dominates(mu)) continue;
        auto delta2 = maximal_configuration(lam, mu);
        auto contrib = max_config_contribution(lam, mu);
        INFO(lam.to_string(), " ; ", mu.to_string());
        REQUIRE(is_admissible(delta2));
        CHECK(contrib == delta2.weight());
      }
    }
  }
}
