/**
 * @file oracle.hpp
 * @brief The feasibility-oracle contract, built-in monotone oracle families
 *        and instrumentation wrappers.
 *
 * An oracle answers "is this grid point feasible?". Implementations must be
 * monotone (feasible points stay feasible when any coordinate grows) and
 * deterministic. Wrappers own their inner oracle and forward every query they
 * cannot answer themselves.
 */

#ifndef PARETOENUM_ORACLE_HPP
#define PARETOENUM_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "paretoenum/point.hpp"

namespace paretoenum {

class FeasibilityOracle {
 public:
  explicit FeasibilityOracle(std::size_t arity);
  virtual ~FeasibilityOracle() = default;

  FeasibilityOracle(const FeasibilityOracle&) = delete;
  FeasibilityOracle& operator=(const FeasibilityOracle&) = delete;

  std::size_t arity() const noexcept { return arity_; }

  /// Answers f(x). Throws UsageError if x has the wrong arity.
  bool evaluate(const Point& x);

 protected:
  virtual bool query(const Point& x) = 0;

 private:
  std::size_t arity_;
};

/// feasible(x) iff some generator g satisfies g <=_k x.
class ConeUnionOracle final : public FeasibilityOracle {
 public:
  ConeUnionOracle(std::size_t arity, PointSet generators);

  const PointSet& generators() const noexcept { return generators_; }

 protected:
  bool query(const Point& x) override;

 private:
  PointSet generators_;
};

/// feasible(x) iff sum_i weights_i * x_i >= threshold.
class WeightedThresholdOracle final : public FeasibilityOracle {
 public:
  WeightedThresholdOracle(std::vector<std::uint64_t> weights, std::int64_t threshold);

  const std::vector<std::uint64_t>& weights() const noexcept { return weights_; }
  std::int64_t threshold() const noexcept { return threshold_; }

 protected:
  bool query(const Point& x) override;

 private:
  std::vector<std::uint64_t> weights_;
  std::int64_t threshold_;
};

struct TraceEntry {
  Point point;
  bool answer;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// Call counts, optionally with the full ordered query trace.
struct OracleStats {
  std::uint64_t total_calls = 0;
  std::uint64_t true_calls = 0;
  std::uint64_t false_calls = 0;
  std::optional<std::vector<TraceEntry>> trace;

  void record(const Point& x, bool answer);
};

/// Counts (and optionally traces) every query forwarded to the inner oracle.
class CountingOracle final : public FeasibilityOracle {
 public:
  explicit CountingOracle(std::unique_ptr<FeasibilityOracle> inner, bool keep_trace = false);

  const OracleStats& stats() const noexcept { return stats_; }
  FeasibilityOracle& inner() noexcept { return *inner_; }

 protected:
  bool query(const Point& x) override;

 private:
  std::unique_ptr<FeasibilityOracle> inner_;
  OracleStats stats_;
};

/**
 * @brief Answers false without consulting the inner oracle for any query
 *        below a point already known to be infeasible.
 *
 * Only negative answers are cached; the enumerator never queries above a
 * known-feasible point. The cache holds the maximal known-infeasible points,
 * an anti-chain, and is looked up by linear scan.
 */
class NegativeCacheOracle final : public FeasibilityOracle {
 public:
  explicit NegativeCacheOracle(std::unique_ptr<FeasibilityOracle> inner);

  const PointSet& infeasible_frontier() const noexcept { return frontier_; }
  std::uint64_t hits() const noexcept { return hits_; }
  FeasibilityOracle& inner() noexcept { return *inner_; }

  /// Records that the inner oracle answered false on x.
  void insert(const Point& x);
  /// The cached verdict for x: false if x lies below a cached point, else nullopt.
  std::optional<bool> lookup(const Point& x) const;

 protected:
  bool query(const Point& x) override;

 private:
  std::unique_ptr<FeasibilityOracle> inner_;
  PointSet frontier_;
  std::uint64_t hits_ = 0;
};

struct MonotonicityViolation {
  Point feasible;    ///< answered true
  Point infeasible;  ///< answered false, yet feasible <=_k infeasible

  friend bool operator==(const MonotonicityViolation&, const MonotonicityViolation&) = default;
};

/**
 * @brief Remembers observed answers and reports contradictions with
 *        monotonicity.
 *
 * Keeps the maximal false points and the minimal true points seen so far;
 * memory grows with the query history, so use it for debugging and tests.
 */
class MonotonicityGuard {
 public:
  /// The contradiction `answer` at x would introduce, if any. Does not record.
  std::optional<MonotonicityViolation> check(const Point& x, bool answer) const;
  /// check() then record; throws NonMonotoneOracle on a violation.
  void observe(const Point& x, bool answer);

  const PointSet& maximal_false() const noexcept { return maximal_false_; }
  const PointSet& minimal_true() const noexcept { return minimal_true_; }

 private:
  PointSet maximal_false_;
  PointSet minimal_true_;
};

/// Runs every inner answer through a MonotonicityGuard.
class GuardedOracle final : public FeasibilityOracle {
 public:
  explicit GuardedOracle(std::unique_ptr<FeasibilityOracle> inner);

  const MonotonicityGuard& guard() const noexcept { return guard_; }
  FeasibilityOracle& inner() noexcept { return *inner_; }

 protected:
  bool query(const Point& x) override;

 private:
  std::unique_ptr<FeasibilityOracle> inner_;
  MonotonicityGuard guard_;
};

}  // namespace paretoenum

#endif  // PARETOENUM_ORACLE_HPP
