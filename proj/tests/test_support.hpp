// Helpers shared by the unit tests: random generators and grid enumeration
// that do not go through the code under test.

#ifndef PARETOENUM_TESTS_TEST_SUPPORT_HPP
#define PARETOENUM_TESTS_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "paretoenum/point.hpp"

namespace paretoenum::testing {

/// Every point of the grid, lexicographic order.
inline std::vector<Point> all_points(const SearchSpace& space) {
  std::vector<Point> out;
  Point x = space.origin();
  for (;;) {
    out.push_back(x);
    std::size_t i = space.arity();
    while (i > 0) {
      --i;
      if (x[i] < space.bound(i)) {
        ++x[i];
        break;
      }
      x[i] = 0;
      if (i == 0) return out;
    }
  }
}

/// Coordinate-wise comparison written out independently of leq().
inline bool below_or_equal(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a[i] <= b[i])) return false;
  }
  return true;
}

inline Point random_point(std::mt19937_64& rng, const SearchSpace& space) {
  Point x = space.origin();
  for (std::size_t i = 0; i < space.arity(); ++i) {
    x[i] = std::uniform_int_distribution<Coord>(0, space.bound(i))(rng);
  }
  return x;
}

inline PointSet random_set(std::mt19937_64& rng, const SearchSpace& space, std::size_t max_size) {
  PointSet s;
  const auto n = std::uniform_int_distribution<std::size_t>(0, max_size)(rng);
  for (std::size_t i = 0; i < n; ++i) s.insert(random_point(rng, space));
  return s;
}

/// 1..max_k dimensions, each bound in 0..max_bound.
inline SearchSpace random_space(std::mt19937_64& rng, std::size_t max_k, Coord max_bound) {
  const auto k = std::uniform_int_distribution<std::size_t>(1, max_k)(rng);
  std::vector<Coord> bounds(k);
  for (auto& b : bounds) b = std::uniform_int_distribution<Coord>(0, max_bound)(rng);
  return SearchSpace(std::move(bounds));
}

}  // namespace paretoenum::testing

#endif  // PARETOENUM_TESTS_TEST_SUPPORT_HPP
