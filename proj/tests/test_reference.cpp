#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paretoenum/errors.hpp"
#include "paretoenum/reference.hpp"
#include "test_support.hpp"

using namespace paretoenum;
using paretoenum::testing::all_points;
using paretoenum::testing::below_or_equal;

namespace {

class TableOracle final : public FeasibilityOracle {
 public:
  TableOracle(std::size_t arity, PointSet feasible)
      : FeasibilityOracle(arity), feasible_(std::move(feasible)) {}

 protected:
  bool query(const Point& x) override { return feasible_.contains(x); }

 private:
  PointSet feasible_;
};

// Quadratic scan straight from the definitions.
std::pair<PointSet, PointSet> naive_fronts(const SearchSpace& space, FeasibilityOracle& f) {
  const auto pts = all_points(space);
  std::vector<char> value;
  for (const auto& x : pts) value.push_back(f.evaluate(x));
  PointSet front;
  PointSet co_front;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    bool smaller_feasible = false;
    bool greater_infeasible = false;
    for (std::size_t b = 0; b < pts.size(); ++b) {
      if (a == b) continue;
      if (below_or_equal(pts[b], pts[a]) && value[b]) smaller_feasible = true;
      if (below_or_equal(pts[a], pts[b]) && !value[b]) greater_infeasible = true;
    }
    if (value[a] && !smaller_feasible) front.insert(pts[a]);
    if (!value[a] && !greater_infeasible) co_front.insert(pts[a]);
  }
  return {front, co_front};
}

}  // namespace

TEST_CASE("brute force on the worked example") {
  CountingOracle f(std::make_unique<ConeUnionOracle>(3, PointSet{{2, 1, 1}, {1, 2, 2}}));
  const auto result = brute_force_fronts(SearchSpace{3, 3, 3}, f);
  CHECK(result.front == PointSet{{1, 2, 2}, {2, 1, 1}});
  CHECK(result.co_front == PointSet{{0, 3, 3}, {1, 1, 3}, {1, 3, 1}, {3, 0, 3}, {3, 3, 0}});
  CHECK(result.grid_size == 64);
  CHECK(f.stats().total_calls == 64);
}

TEST_CASE("brute force degenerate oracles") {
  ConeUnionOracle nowhere(2, {});
  auto none = brute_force_fronts(SearchSpace{2, 5}, nowhere);
  CHECK(none.front.empty());
  CHECK(none.co_front == PointSet{{2, 5}});

  WeightedThresholdOracle everywhere({1, 1}, 0);
  auto all = brute_force_fronts(SearchSpace{2, 5}, everywhere);
  CHECK(all.front == PointSet{{0, 0}});
  CHECK(all.co_front.empty());
}

TEST_CASE("brute force refuses oversized grids") {
  ConeUnionOracle f(2, {});
  CHECK_THROWS_AS(brute_force_fronts(SearchSpace{999, 1000}, f), GridTooLarge);
  CHECK_NOTHROW(brute_force_fronts(SearchSpace{999, 999}, f));
  try {
    brute_force_fronts(SearchSpace{10, 10}, f, 100);
    FAIL("expected GridTooLarge");
  } catch (const GridTooLarge& e) {
    CHECK(e.limit() == 100);
  }
}

TEST_CASE("brute force matches the quadratic definition, monotone or not") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 200; ++round) {
    const SearchSpace space = paretoenum::testing::random_space(rng, 3, 4);
    const PointSet s = paretoenum::testing::random_set(rng, space, 8);
    ConeUnionOracle cone(space.arity(), s);
    TableOracle table(space.arity(), s);
    for (FeasibilityOracle* f : {static_cast<FeasibilityOracle*>(&cone),
                                 static_cast<FeasibilityOracle*>(&table)}) {
      const auto result = brute_force_fronts(space, *f);
      const auto [front, co_front] = naive_fronts(space, *f);
      CHECK(result.front == front);
      CHECK(result.co_front == co_front);
    }
  }
}

TEST_CASE("brute force fronts cover the grid") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 100; ++round) {
    const SearchSpace space = paretoenum::testing::random_space(rng, 4, 4);
    ConeUnionOracle f(space.arity(), paretoenum::testing::random_set(rng, space, 6));
    const auto result = brute_force_fronts(space, f);
    CHECK(is_antichain(result.front));
    CHECK(is_antichain(result.co_front));
    for (const auto& x : all_points(space)) {
      bool covered = false;
      if (f.evaluate(x)) {
        for (const auto& p : result.front) covered = covered || below_or_equal(p, x);
      } else {
        for (const auto& c : result.co_front) covered = covered || below_or_equal(x, c);
      }
      CHECK(covered);
    }
  }
}

TEST_CASE("random monotone instances") {
  const SearchSpace space{5, 5, 5};
  auto empty = random_monotone_instance({space, 0, 42});
  CHECK(empty->generators().empty());
  CHECK(brute_force_fronts(space, *empty).front.empty());

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto single = random_monotone_instance({space, 1, seed});
    CHECK(brute_force_fronts(space, *single).front.size() == 1);
  }

  std::mt19937_64 rng(1);
  for (int round = 0; round < 200; ++round) {
    const SearchSpace s = paretoenum::testing::random_space(rng, 4, 8);
    const RandomInstanceSpec spec{s, static_cast<std::size_t>(rng() % 13), rng()};
    const PointSet gens = random_antichain(spec);
    CHECK(is_antichain(gens));
    CHECK(gens.size() <= spec.target_front_size);
    if (spec.target_front_size > 0) CHECK_FALSE(gens.empty());
    for (const auto& g : gens) CHECK(s.contains(g));
    CHECK(random_antichain(spec) == gens);
    auto oracle = random_monotone_instance(spec);
    if (s.grid_size() <= 20000) CHECK(brute_force_fronts(s, *oracle).front == gens);
  }
}

TEST_CASE("bound arithmetic") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(4) == 2);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(9) == 4);
  CHECK(ceil_log2(std::uint64_t{1} << 40) == 40);

  CHECK(bound_value(SearchSpace{3, 3, 3}, 2, 5) == 19);
  CHECK(bound_value(SearchSpace{3, 3, 3}, 0, 7) == 7);
  CHECK(bound_value(SearchSpace{1}, 1, 1) == 1 * (1 + 1) + 1);
  CHECK(bound_value(SearchSpace{0, 8}, 3, 2) == 3 * (0 + 4 + 1) + 2);
}

TEST_CASE("down-closure counting") {
  const SearchSpace space{3, 3, 3};
  CHECK(down_closure_size(space, {}) == 0);
  CHECK(down_closure_size(space, {{3, 3, 3}}) == 64);
  CHECK(down_closure_size(space, {{0, 3, 3}, {3, 1, 3}, {3, 3, 1}}) == 16 + 32 + 32 - 8 - 8 - 16 + 4);

  std::mt19937_64 rng(4);
  for (int round = 0; round < 100; ++round) {
    const SearchSpace s = paretoenum::testing::random_space(rng, 4, 4);
    const PointSet set = paretoenum::testing::random_set(rng, s, 6);
    std::uint64_t naive = 0;
    for (const auto& x : all_points(s)) {
      bool below = false;
      for (const auto& y : set) below = below || below_or_equal(x, y);
      naive += below;
    }
    CHECK(down_closure_size(s, set) == naive);
  }
}

TEST_CASE("trace redundancy checks") {
  const std::vector<TraceEntry> clean{{{3, 3}, true}, {{1, 3}, false}, {{2, 1}, true}};
  CHECK_FALSE(find_query_above_true(clean));
  CHECK_FALSE(find_query_below_false(clean));

  const std::vector<TraceEntry> above_true{{{1, 1}, true}, {{0, 0}, false}, {{1, 2}, true}};
  CHECK(find_query_above_true(above_true) == std::optional<std::size_t>(2));

  const std::vector<TraceEntry> below_false{{{2, 2}, false}, {{3, 0}, true}, {{2, 2}, false}};
  CHECK(find_query_below_false(below_false) == std::optional<std::size_t>(2));
}
