#include "paretoenum/reference.hpp"

#include <random>
#include <vector>

#include "paretoenum/errors.hpp"

namespace paretoenum {

namespace {

// Row-major (last dimension fastest) indexing of a grid small enough to store.
class GridIndex {
 public:
  GridIndex(const SearchSpace& space, std::uint64_t limit) : space_(space) {
    size_ = space.grid_size();
    if (size_ > limit) throw GridTooLarge(limit);
    strides_.assign(space.arity(), 1);
    for (std::size_t i = space.arity(); i-- > 1;) {
      strides_[i - 1] = strides_[i] * space.domain_size(i);
    }
  }

  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t stride(std::size_t i) const noexcept { return strides_[i]; }

  Point point(std::uint64_t index) const {
    Point x = space_.origin();
    for (std::size_t i = 0; i < space_.arity(); ++i) {
      x[i] = index / strides_[i];
      index %= strides_[i];
    }
    return x;
  }

  std::uint64_t index(const Point& x) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < space_.arity(); ++i) idx += x[i] * strides_[i];
    return idx;
  }

 private:
  const SearchSpace& space_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> strides_;
};

}  // namespace

BruteForceResult brute_force_fronts(const SearchSpace& space, FeasibilityOracle& oracle,
                                    std::uint64_t limit) {
  if (oracle.arity() != space.arity()) {
    throw UsageError("oracle arity does not match search space arity");
  }
  const GridIndex grid(space, limit);
  const std::uint64_t n = grid.size();

  std::vector<char> feasible(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) feasible[idx] = oracle.evaluate(grid.point(idx));

  // feasible_below[x]: some x' strictly below x is feasible. Increasing index
  // order visits every x - e_i before x.
  std::vector<char> feasible_below(n, 0);
  // infeasible_above[x]: some x' strictly above x is infeasible.
  std::vector<char> infeasible_above(n, 0);
  std::vector<Point> points;
  points.reserve(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) points.push_back(grid.point(idx));

  for (std::uint64_t idx = 0; idx < n; ++idx) {
    const Point& x = points[idx];
    for (std::size_t i = 0; i < space.arity(); ++i) {
      if (x[i] == 0) continue;
      const std::uint64_t below = idx - grid.stride(i);
      if (feasible[below] || feasible_below[below]) {
        feasible_below[idx] = 1;
        break;
      }
    }
  }
  for (std::uint64_t idx = n; idx-- > 0;) {
    const Point& x = points[idx];
    for (std::size_t i = 0; i < space.arity(); ++i) {
      if (x[i] == space.bound(i)) continue;
      const std::uint64_t above = idx + grid.stride(i);
      if (!feasible[above] || infeasible_above[above]) {
        infeasible_above[idx] = 1;
        break;
      }
    }
  }

  BruteForceResult result;
  result.grid_size = n;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    if (feasible[idx] && !feasible_below[idx]) result.front.insert(points[idx]);
    if (!feasible[idx] && !infeasible_above[idx]) result.co_front.insert(points[idx]);
  }
  return result;
}

PointSet random_antichain(const RandomInstanceSpec& spec) {
  PointSet chosen;
  if (spec.target_front_size == 0) return chosen;
  std::mt19937_64 rng(spec.seed);
  const std::size_t attempts = 64 * spec.target_front_size;
  for (std::size_t a = 0; a < attempts && chosen.size() < spec.target_front_size; ++a) {
    Point x = spec.space.origin();
    for (std::size_t i = 0; i < x.arity(); ++i) x[i] = rng() % spec.space.domain_size(i);
    bool comparable = false;
    for (const auto& c : chosen) {
      if (!incomparable(c, x)) {
        comparable = true;
        break;
      }
    }
    if (!comparable) chosen.insert(std::move(x));
  }
  return chosen;
}

std::unique_ptr<ConeUnionOracle> random_monotone_instance(const RandomInstanceSpec& spec) {
  return std::make_unique<ConeUnionOracle>(spec.space.arity(), random_antichain(spec));
}

std::uint64_t ceil_log2(std::uint64_t d) noexcept {
  std::uint64_t bits = 0;
  while (bits < 64 && (std::uint64_t{1} << bits) < d) ++bits;
  return bits;
}

std::uint64_t bound_value(const SearchSpace& space, std::uint64_t p, std::uint64_t psi) {
  std::uint64_t per_point = 1;
  for (std::size_t i = 0; i < space.arity(); ++i) per_point += ceil_log2(space.domain_size(i));
  return p * per_point + psi;
}

std::uint64_t down_closure_size(const SearchSpace& space, const PointSet& s,
                                std::uint64_t limit) {
  const GridIndex grid(space, limit);
  const std::uint64_t n = grid.size();
  std::vector<char> below(n, 0);
  for (const auto& x : s) {
    space.require_contains(x);
    below[grid.index(x)] = 1;
  }
  // Propagate downwards: x is covered if x + e_i is, for some i.
  std::uint64_t count = 0;
  for (std::uint64_t idx = n; idx-- > 0;) {
    if (!below[idx]) {
      const Point x = grid.point(idx);
      for (std::size_t i = 0; i < space.arity(); ++i) {
        if (x[i] < space.bound(i) && below[idx + grid.stride(i)]) {
          below[idx] = 1;
          break;
        }
      }
    }
    count += below[idx];
  }
  return count;
}

std::optional<std::size_t> find_query_above_true(std::span<const TraceEntry> trace) {
  PointSet minimal_true;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& [y, answer] = trace[i];
    for (const auto& x : minimal_true) {
      if (leq(x, y)) return i;
    }
    if (answer) {
      minimal_true.insert(y);
      minimal_true = minimal_elements(minimal_true);
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> find_query_below_false(std::span<const TraceEntry> trace) {
  PointSet maximal_false;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& [y, answer] = trace[i];
    for (const auto& x : maximal_false) {
      if (leq(y, x)) return i;
    }
    if (!answer) {
      maximal_false.insert(y);
      maximal_false = maximal_elements(maximal_false);
    }
  }
  return std::nullopt;
}

}  // namespace paretoenum
