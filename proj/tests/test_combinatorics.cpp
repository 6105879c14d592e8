#include <doctest.h>

#include "fusionkit/combinatorics.hpp"
#include "fusionkit/orbit_rep.hpp"
#include "oracles.hpp"

using namespace fusionkit;

TEST_CASE("partition canonical form") {
  CHECK(Partition{3, 2, 1, 0, 0} == Partition{3, 2, 1});
  CHECK(Partition{0}.empty());
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition{3, 2, 1}.to_string() == "[3,2,1]");
  CHECK(Partition{}.to_string() == "[]");
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{5, 4, 1, 1}) == Partition{4, 2, 2, 2, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{3, 3, 2}) == Partition{3, 3, 2});
  for (const auto& p : oracle::all_partitions_in_box(6, 6)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("row and column strips") {
  const SkewShape s(Partition{4, 3, 1, 1}, Partition{3, 2, 1});
  CHECK(is_row_strip(s, 3));
  CHECK(is_column_strip(s, 3));
  CHECK_FALSE(is_row_strip(s, 2));
  const SkewShape empty(Partition{2, 1}, Partition{2, 1});
  CHECK(is_row_strip(empty, 0));
  CHECK(is_column_strip(empty, 0));
  const SkewShape two(Partition{5, 1}, Partition{3, 1});
  CHECK(is_row_strip(two, 2));
  CHECK_FALSE(is_column_strip(two, 2));
}

TEST_CASE("row strip enumeration matches a cell-level check") {
  for (const auto& lambda : oracle::all_partitions_in_box(3, 3))
    for (std::int64_t m = 0; m <= 4; ++m) {
      std::vector<Partition> found;
      for_each_row_strip(lambda, m, 6, 4, [&](const Partition& nu) { found.push_back(nu); });
      std::vector<Partition> expected;
      for (const auto& nu : oracle::all_partitions_in_box(4, 6))
        if (nu.boxes() == lambda.boxes() + m && oracle::row_strip(nu, lambda)) expected.push_back(nu);
      std::sort(found.begin(), found.end());
      std::sort(expected.begin(), expected.end());
      CHECK(found == expected);
    }
}

TEST_CASE("cylindric row strip") {
  const SkewShape s(Partition{4, 3, 2}, Partition{3, 2, 1});
  CHECK(is_cylindric_row_strip(s, 3, FusionContext(3, 3)));
  CHECK_FALSE(is_cylindric_row_strip(s, 3, FusionContext(3, 2)));
  CHECK(is_cylindric_row_strip(SkewShape(Partition{2, 1}, Partition{2, 1}), 0, FusionContext(3, 2)));
}

TEST_CASE("equivalence and column reduction") {
  CHECK(equivalent(Partition{5, 4, 4, 3}, Partition{2, 1, 1}, 4));
  CHECK(equivalent(Partition{2, 1}, Partition{2, 1}, 3));
  CHECK_FALSE(equivalent(Partition{3, 1}, Partition{3, 2}, 2));
  CHECK(reduce_full_columns(Partition{5, 4, 4, 3}, 4) == Partition{2, 1, 1});
  CHECK(reduce_full_columns(Partition{3, 3, 3}, 3) == Partition{});
  CHECK(reduce_full_columns(Partition{3, 3, 2}, 3) == Partition{1, 1});
  CHECK_THROWS(reduce_full_columns(Partition{1, 1, 1, 1}, 3));
  for (const auto& p : oracle::all_partitions_in_box(4, 4)) {
    const Partition r = reduce_full_columns(p, 4);
    CHECK(r.length() <= 3);
    CHECK(equivalent(p, r, 4));
    CHECK(reduce_full_columns(r, 4) == r);
  }
}

TEST_CASE("cylindric kostka numbers") {
  const SkewShape s(Partition{4, 2, 2, 1}, Partition{3, 2, 1});
  CHECK(count_cylindric_tableaux(s, Content{2, 1}, FusionContext(4, 3)) == 1);
  CHECK(count_cylindric_tableaux(s, Content{2, 1}, FusionContext(4, 4)) == 3);
  CHECK(count_cylindric_tableaux(SkewShape(Partition{3, 3, 2, 1}, Partition{3, 2, 1}), Content{2, 1},
                                 FusionContext(4, 3)) == 3);
  CHECK_THROWS_AS(count_cylindric_tableaux(s, Content{2}, FusionContext(4, 3)), std::invalid_argument);
}

TEST_CASE("cylindric kostka agrees with the filling oracle") {
  const std::vector<std::vector<std::int64_t>> contents{{1}, {2}, {1, 1}, {2, 1}, {1, 2}, {1, 1, 1}, {2, 0, 1}, {3, 1}};
  for (int k = 1; k <= 4; ++k) {
    const FusionContext ctx(3, k);
    for (const auto& inner : oracle::all_partitions_in_box(3, 3))
      for (const auto& content : contents) {
        std::int64_t total = 0;
        for (auto c : content) total += c;
        for (const auto& outer : oracle::all_partitions_in_box(3, 6)) {
          if (!outer.contains(inner) || outer.boxes() != inner.boxes() + total) continue;
          const SkewShape s(outer, inner);
          CHECK(count_cylindric_tableaux(s, Content(content), ctx) ==
                oracle::cylindric_kostka(outer, inner, content, 3, k));
        }
      }
  }
}

TEST_CASE("large level makes the cylindric condition vacuous") {
  for (const auto& inner : oracle::all_partitions_in_box(3, 2))
    for (const auto& outer : oracle::all_partitions_in_box(3, 4)) {
      if (!outer.contains(inner)) continue;
      const std::int64_t n = outer.boxes() - inner.boxes();
      if (n == 0 || n > 5) continue;
      const std::vector<std::int64_t> content{n - n / 2, n / 2};
      const FusionContext ctx(3, static_cast<int>(outer.boxes()) + 1);
      CHECK(count_cylindric_tableaux(SkewShape(outer, inner), Content(content), ctx) ==
            oracle::kostka(outer, inner, content));
    }
}

TEST_CASE("weight, partition and orbit correspondences") {
  CHECK(weight_to_partition(Weight{1, 1}) == Partition{2, 1});
  CHECK(weight_to_partition(Weight{0, 0, 0}) == Partition{});
  CHECK(partition_to_weight(Partition{3, 3, 2}, 4) == Weight{0, 1, 2});
  CHECK(weight_to_orbit(Weight{1, 1}, FusionContext(3, 3)) == OrbitRep(3, {2, 1, 0}));
  CHECK(weight_to_orbit(Weight{0, 0}, FusionContext(3, 3)) == OrbitRep(3, {0, 0, 0}));
  CHECK(orbit_to_partition(OrbitRep(4, {3, 3, 2})) == Partition{3, 3, 2});
  CHECK(orbit_to_partition(OrbitRep(4, {3, 1, 0})) == Partition{2, 1, 1});
  CHECK_THROWS_AS(weight_to_orbit(Weight{2, 2}, FusionContext(3, 3)), std::invalid_argument);
  CHECK(partition_to_weight(Partition{5, 4, 4, 3}, 4) == partition_to_weight(Partition{2, 1, 1}, 4));

  for (int N = 2; N <= 5; ++N)
    for (int k = 1; k <= 5; ++k) {
      const FusionContext ctx(N, k);
      const auto weights = level_weights(ctx);
      CHECK(static_cast<std::int64_t>(weights.size()) == oracle::binomial(N - 1 + k, N - 1));
      for (const auto& w : weights) {
        const OrbitRep o = weight_to_orbit(w, ctx);
        CHECK(partition_to_weight(orbit_to_partition(o), N) == w);
        CHECK(orbit_to_weight(o) == w);
        CHECK(partition_to_orbit(weight_to_partition(w), ctx) == o);
      }
    }
}
