/**
 * @file enumerator.hpp
 * @brief Pareto front enumeration with a minimal number of oracle calls.
 *
 * The enumerator keeps a frontier S: the maximal points of the region that
 * may still hold undiscovered Pareto points. Each iteration queries one
 * frontier point x. If f(x) is false, x is a co-Pareto point and leaves S.
 * If f(x) is true, a per-dimension binary search descends from x to a Pareto
 * point y, and every frontier point above y is split into the k points that
 * undercut y in one coordinate. The loop ends when S is empty.
 *
 * Results are produced incrementally: step() performs one iteration, and
 * enumerate() drives step() to completion while pushing events to a sink.
 */

#ifndef PARETOENUM_ENUMERATOR_HPP
#define PARETOENUM_ENUMERATOR_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "paretoenum/oracle.hpp"
#include "paretoenum/point.hpp"

namespace paretoenum {

/// Which frontier point the main loop probes next.
enum class SelectionStrategy {
  kLexicographicMax,  ///< default
  kLexicographicMin,
  kQueueOrder,  ///< first inserted, first probed
};

std::string_view to_string(SelectionStrategy s) noexcept;
/// Accepts "lexicographic-max", "lexicographic-min", "queue-order".
std::optional<SelectionStrategy> parse_strategy(std::string_view name) noexcept;

struct ParetoPointFound {
  Point point;
  friend bool operator==(const ParetoPointFound&, const ParetoPointFound&) = default;
};
struct CoParetoPointFound {
  Point point;
  friend bool operator==(const CoParetoPointFound&, const CoParetoPointFound&) = default;
};
struct Done {
  friend bool operator==(const Done&, const Done&) = default;
};

using EnumerationEvent = std::variant<ParetoPointFound, CoParetoPointFound, Done>;
using EventSink = std::function<void(const EnumerationEvent&)>;

struct EnumerationResult {
  PointSet front;     ///< p Pareto points
  PointSet co_front;  ///< psi(p) co-Pareto points
  OracleStats stats;  ///< queries issued by the enumerator
};

struct EnumeratorOptions {
  SelectionStrategy strategy = SelectionStrategy::kLexicographicMax;
  bool keep_trace = false;  ///< record every (point, answer) in stats.trace
  /// Drop new frontier points lying below a point already answered false.
  /// Off reproduces the plain update, which may re-probe such points and then
  /// reports non-maximal infeasible points in co_front.
  bool prune_known_infeasible = true;
};

/**
 * @brief Everything the main loop carries between iterations.
 *
 * Invariants between steps: the frontier is an anti-chain disjoint from
 * front, and no frontier member lies above a front member; front holds only
 * Pareto points; every Pareto point not yet found lies below some frontier
 * member. A frontier member may lie below a front member: (0,3) next to the
 * Pareto point (0,4) on bounds (6,5) with generators {(0,4),(1,0)}.
 */
class EnumeratorState {
 public:
  explicit EnumeratorState(SearchSpace space, EnumeratorOptions options = {});

  const SearchSpace& space() const noexcept { return space_; }
  SelectionStrategy strategy() const noexcept { return options_.strategy; }
  const PointSet& frontier() const noexcept { return frontier_; }
  const PointSet& front() const noexcept { return front_; }
  const PointSet& co_front() const noexcept { return co_front_; }
  const OracleStats& stats() const noexcept { return stats_; }
  bool done() const noexcept { return frontier_.empty(); }

  /// The frontier point the configured strategy probes next.
  std::optional<Point> select() const;

  EnumerationResult result() const { return {front_, co_front_, stats_}; }

 private:
  friend EnumerationEvent step_at(EnumeratorState&, FeasibilityOracle&, const Point&);

  void replace_frontier(PointSet next);

  SearchSpace space_;
  EnumeratorOptions options_;
  PointSet frontier_;
  PointSet front_;
  PointSet co_front_;
  OracleStats stats_;
  // Arrival number of each frontier point, for queue-order selection.
  std::map<Point, std::uint64_t> arrival_;
  std::uint64_t next_arrival_ = 0;
};

/**
 * @brief Descends from a feasible x to a Pareto point y <=_k x.
 *
 * Dimension by dimension, binary-searches [0, x_i + 1) for the least value
 * keeping x feasible, probing mid = min + (max - min - 1) / 2 so the
 * known-feasible top of the range is never queried. f(x) = true is assumed,
 * not checked. Uses at most sum_i ceil(log2(x_i + 1)) queries.
 */
Point search_pareto_point(Point x, FeasibilityOracle& oracle);

/**
 * @brief Frontier update after discovering the Pareto point x.
 *
 * Members not above x are kept; each member y with x <=_k y is replaced by
 * the points y with y_i := x_i - 1, for every i with x_i > 0. Returns the
 * maximal elements of the result.
 */
PointSet expand_frontier(const PointSet& frontier, const Point& x);

/// One main-loop iteration on the strategy's pick. Returns Done when the frontier is empty.
EnumerationEvent step(EnumeratorState& state, FeasibilityOracle& oracle);

/// One main-loop iteration probing the given frontier member x.
EnumerationEvent step_at(EnumeratorState& state, FeasibilityOracle& oracle, const Point& x);

/**
 * @brief Thrown by enumerate() when the oracle fails mid-run.
 *
 * Carries everything found before the failure. reason() tells a broken
 * oracle (OracleFailure) from a monotonicity violation (NonMonotoneOracle).
 */
class EnumerationAborted : public std::runtime_error {
 public:
  enum class Reason { kOracleFailure, kNonMonotone };

  EnumerationAborted(Reason reason, const std::string& what, EnumerationResult partial)
      : std::runtime_error(what), reason_(reason), partial_(std::move(partial)) {}

  Reason reason() const noexcept { return reason_; }
  const EnumerationResult& partial() const noexcept { return partial_; }

 private:
  Reason reason_;
  EnumerationResult partial_;
};

/**
 * @brief Enumerates the complete Pareto and co-Pareto fronts of `oracle`
 *        over `space`.
 *
 * Events are delivered to `sink` (if set) as they occur, ending with Done.
 */
EnumerationResult enumerate(const SearchSpace& space, FeasibilityOracle& oracle,
                            EnumeratorOptions options = {}, const EventSink& sink = {});

}  // namespace paretoenum

#endif  // PARETOENUM_ENUMERATOR_HPP
