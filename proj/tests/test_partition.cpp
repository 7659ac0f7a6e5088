#include <doctest.h>

#include "rigcon/error.hpp"
#include "rigcon/partition.hpp"

using namespace rigcon;

TEST_CASE("conjugate") {
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{5}.conjugate() == Partition{1, 1, 1, 1, 1});
  CHECK(Partition{4, 4, 3, 3, 2}.conjugate().conjugate() == Partition{4, 4, 3, 3, 2});
  CHECK(Partition{}.conjugate().empty());
  for (int n = 0; n <= 30; ++n) {
    for (const auto& p : partitions_of(n)) REQUIRE(p.conjugate().conjugate() == p);
  }
}

TEST_CASE("column sums") {
  CHECK(column_sum(Partition{3, 2, 1}, 2) == 5);
  CHECK(column_sum(Partition{}, 1) == 0);
  CHECK(column_sum(Partition{3, 1}, 3) == 4);
  CHECK(column_sum(Partition{3, 1}, 7) == 4);
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int j = 1; j <= p.largest() + 2; ++j) REQUIRE(p.column_sum(j) >= p.column_sum(j - 1));
      REQUIRE(p.column_sum(p.largest()) == p.size());
    }
  }
}

TEST_CASE("n statistic") {
  CHECK(n_stat(Partition{1, 1, 1, 1}) == 6);
  CHECK(n_stat(Partition{2, 1}) == 1);
  CHECK(n_stat(Partition{7}) == 0);
  for (int n = 0; n <= 20; ++n) {
    for (const auto& p : partitions_of(n)) {
      long alt = 0;
      for (int i = 1; i <= p.length(); ++i) alt += static_cast<long>(i - 1) * p.part(i);
      REQUIRE(p.n_stat() == alt);
    }
  }
}

TEST_CASE("standard tableaux count") {
  CHECK(syt_count(Partition{2, 2}) == 2);
  CHECK(syt_count(Partition{9}) == 1);
  CHECK(syt_count(Partition{6, 6}) == 132);
  CHECK(syt_count(Partition{4, 4, 4}) == 462);
}

TEST_CASE("partition counts") {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(p[n]));
  CHECK(partitions_of(6, 3, 2).size() == 1);  // (3,3)
  CHECK(partitions_of(6, -1, 2).size() == 4);
}

TEST_CASE("dominance") {
  CHECK(Partition{3, 1}.dominates(Partition{2, 2}));
  CHECK_FALSE(Partition{2, 2}.dominates(Partition{3, 1}));
  CHECK_FALSE(Partition{3, 3}.dominates(Partition{4, 1, 1}));
  CHECK_FALSE(Partition{4, 1, 1}.dominates(Partition{3, 3}));
  for (int n = 1; n <= 8; ++n) {
    auto ps = partitions_of(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        if (a != b) REQUIRE_FALSE((a.dominates(b) && b.dominates(a)));
      }
    }
  }
}

TEST_CASE("parsing and validation") {
  CHECK(Partition::parse("4,4,3,3,2") == Partition{4, 4, 3, 3, 2});
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("3,0,0") == Partition{3});
  CHECK_THROWS_AS(Partition::parse("1,2"), Error);
  CHECK_THROWS_AS(Partition::parse("1,x"), Error);
  try {
    Partition{1, 2};
    FAIL("expected NotAPartition");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPartition);
  }
}

TEST_CASE("interleave") {
  CHECK(interleave(Partition{3, 1}, Partition{2, 1}) == Partition{3, 2, 1, 1});
  CHECK(interleave(Partition{2, 1}, Partition{2, 1}) == Partition{2, 2, 1, 1});
  try {
    interleave(Partition{1, 1}, Partition{2});
    FAIL("expected NotAPartition");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPartition);
  }
}

TEST_CASE("rectangle sequences") {
  auto r = RectangleSequence::parse("2^3,2^2,2^2,1,1");
  CHECK(r.count() == 5);
  CHECK(r.size() == 16);
  CHECK(r.n_of_rectangles() == 19);
  CHECK(r.is_dominant());
  CHECK(r.dominant_rearrangement() == r);
  CHECK(r.to_string() == "2^3,2^2,2^2,1,1");
  CHECK(RectangleSequence::parse("3^2").n_of_rectangles() == 0);
  CHECK(RectangleSequence::parse("1,1").n_of_rectangles() == 1);
  CHECK(RectangleSequence::parse("1,2^2,2^3").dominant_rearrangement() ==
        RectangleSequence::parse("2^3,2^2,1"));
  CHECK(RectangleSequence::parse("1^5,3").dominant_rearrangement() == RectangleSequence::parse("3,1^5"));
  CHECK_THROWS_AS(RectangleSequence::parse("0^2"), Error);
  CHECK(RectangleSequence::unit_rows(Partition{2, 1}) == RectangleSequence::parse("2,1"));
}
