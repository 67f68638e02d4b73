#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paretoenum/errors.hpp"
#include "paretoenum/point.hpp"
#include "test_support.hpp"

using namespace paretoenum;
using paretoenum::testing::all_points;
using paretoenum::testing::below_or_equal;

TEST_CASE("leq compares element-wise") {
  CHECK(leq({1, 2, 2}, {3, 3, 3}));
  CHECK_FALSE(leq({0, 3, 3}, {2, 1, 1}));
  CHECK_FALSE(leq({2, 1, 1}, {0, 3, 3}));
  CHECK(incomparable({0, 3, 3}, {2, 1, 1}));
  CHECK(leq({4, 0}, {4, 0}));
  CHECK_FALSE(strictly_less({4, 0}, {4, 0}));
  CHECK(strictly_less({4, 0}, {4, 1}));
}

TEST_CASE("leq rejects arity mismatch") {
  CHECK_THROWS_AS(leq({1, 2}, {1, 2, 3}), UsageError);
}

TEST_CASE("is_antichain") {
  CHECK(is_antichain({{0, 3, 3}, {3, 1, 3}, {3, 3, 1}}));
  CHECK(is_antichain({}));
  CHECK(is_antichain({{5, 5}}));
  CHECK_FALSE(is_antichain({{3, 0, 1}, {3, 0, 3}}));
}

TEST_CASE("maximal_elements drops points below another member") {
  const PointSet seven{{0, 3, 3}, {1, 1, 3}, {3, 0, 3}, {3, 1, 0},
                       {1, 3, 1}, {3, 0, 1}, {3, 3, 0}};
  const PointSet expected{{0, 3, 3}, {1, 1, 3}, {1, 3, 1}, {3, 0, 3}, {3, 3, 0}};
  CHECK(maximal_elements(seven) == expected);

  const PointSet antichain{{0, 3, 3}, {3, 1, 3}, {3, 3, 1}};
  CHECK(maximal_elements(antichain) == antichain);

  CHECK(maximal_elements({{0, 0}, {1, 1}, {2, 2}}) == PointSet{{2, 2}});
  CHECK(maximal_elements({}).empty());
}

TEST_CASE("minimal_elements is the dual") {
  CHECK(minimal_elements({{0, 0}, {1, 1}, {2, 2}}) == PointSet{{0, 0}});
  CHECK(minimal_elements({{2, 1, 1}, {1, 2, 2}, {3, 3, 3}}) == PointSet{{1, 2, 2}, {2, 1, 1}});
}

TEST_CASE("SearchSpace geometry") {
  const SearchSpace space{3, 0, 7};
  CHECK(space.arity() == 3);
  CHECK(space.domain_size(0) == 4);
  CHECK(space.domain_size(1) == 1);
  CHECK(space.grid_size() == 32);
  CHECK(space.top() == Point{3, 0, 7});
  CHECK(space.origin() == Point{0, 0, 0});
  CHECK(space.contains({3, 0, 7}));
  CHECK_FALSE(space.contains({3, 1, 7}));
  CHECK_FALSE(space.contains({3, 0}));
  CHECK_THROWS_AS(space.require_contains({4, 0, 0}), UsageError);
  CHECK_THROWS_AS(space.require_contains({0, 0}), UsageError);

  CHECK_THROWS_AS(SearchSpace(std::vector<Coord>{}), UsageError);
  const SearchSpace huge(std::vector<Coord>(8, 1'000'000));
  CHECK(huge.grid_size() == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("Point ordering is lexicographic") {
  CHECK(Point{0, 9} < Point{1, 0});
  CHECK(Point{1, 0} < Point{1, 1});
  CHECK(Point{1, 2, 2}.to_string() == "(1,2,2)");
  CHECK(to_string(PointSet{{1, 0}, {0, 1}}) == "{(0,1),(1,0)}");
}

TEST_CASE("leq is a partial order on small grids") {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (Coord n : {1, 2, 4}) {
      const auto pts = all_points(SearchSpace(std::vector<Coord>(k, n)));
      for (const auto& a : pts) {
        CHECK(leq(a, a));
        for (const auto& b : pts) {
          if (leq(a, b) && leq(b, a)) CHECK(a == b);
          if (!leq(a, b)) continue;
          for (const auto& c : pts) {
            if (leq(b, c) && !leq(a, c)) FAIL("transitivity fails at " << a << b << c);
          }
        }
      }
    }
  }
}

TEST_CASE("maximal_elements properties on random sets") {
  std::mt19937_64 rng(20240611);
  for (int round = 0; round < 500; ++round) {
    const SearchSpace space = paretoenum::testing::random_space(rng, 4, 5);
    const PointSet s = paretoenum::testing::random_set(rng, space, 25);
    const PointSet max = maximal_elements(s);

    PointSet brute;
    for (const auto& x : s) {
      bool greater_exists = false;
      for (const auto& y : s) {
        if (x != y && below_or_equal(x, y)) greater_exists = true;
      }
      if (!greater_exists) brute.insert(x);
    }
    REQUIRE(max == brute);
    CHECK(is_antichain(max));
    CHECK(maximal_elements(max) == max);
    for (const auto& x : s) {
      bool covered = false;
      for (const auto& y : max) covered = covered || below_or_equal(x, y);
      CHECK(covered);
    }
  }
}
