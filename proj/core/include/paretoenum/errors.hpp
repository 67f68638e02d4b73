/**
 * @file errors.hpp
 * @brief Exception types shared by the library and the command-line tool.
 */

#ifndef PARETOENUM_ERRORS_HPP
#define PARETOENUM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "paretoenum/point.hpp"

namespace paretoenum {

/// Caller broke a precondition: arity mismatch, point outside the grid, bad argument.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The oracle could not answer a query (child process died, garbled reply, ...).
class OracleFailure : public std::runtime_error {
 public:
  OracleFailure(const std::string& what, Point point)
      : std::runtime_error(what + " (query " + point.to_string() + ")"),
        point_(std::move(point)) {}

  const Point& point() const noexcept { return point_; }

 private:
  Point point_;
};

/**
 * @brief Two observed answers that contradict monotonicity.
 *
 * `feasible() <=_k infeasible()` holds, yet the oracle answered true on the
 * former and false on the latter.
 */
class NonMonotoneOracle : public std::runtime_error {
 public:
  NonMonotoneOracle(Point feasible, Point infeasible)
      : std::runtime_error("oracle is not monotone: f" + feasible.to_string() +
                           " = true but f" + infeasible.to_string() + " = false"),
        feasible_(std::move(feasible)),
        infeasible_(std::move(infeasible)) {}

  const Point& feasible() const noexcept { return feasible_; }
  const Point& infeasible() const noexcept { return infeasible_; }

 private:
  Point feasible_;
  Point infeasible_;
};

/// Exhaustive enumeration was asked for a grid above the configured limit.
class GridTooLarge : public std::length_error {
 public:
  explicit GridTooLarge(std::uint64_t limit)
      : std::length_error("grid has more than " + std::to_string(limit) +
                          " points; brute force refused"),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

}  // namespace paretoenum

#endif  // PARETOENUM_ERRORS_HPP
