/**
 * @file reference.hpp
 * @brief Independent checks for the enumerator: exhaustive front computation,
 *        seeded random monotone instances, the oracle-call bound and
 *        trace/frontier invariant checks.
 */

#ifndef PARETOENUM_REFERENCE_HPP
#define PARETOENUM_REFERENCE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>

#include "paretoenum/oracle.hpp"
#include "paretoenum/point.hpp"

namespace paretoenum {

/// Largest grid brute_force_fronts() will scan.
inline constexpr std::uint64_t kBruteForceLimit = 1'000'000;

struct BruteForceResult {
  PointSet front;     ///< minimal feasible points
  PointSet co_front;  ///< maximal infeasible points
  std::uint64_t grid_size = 0;
};

/**
 * @brief Evaluates the oracle once on every grid point and reads both fronts
 *        off the definitions.
 *
 * A point is Pareto if feasible with no feasible point strictly below it, and
 * co-Pareto if infeasible with no infeasible point strictly above it. Both
 * conditions are computed exactly (not via immediate neighbours only), so the
 * result is definitional even for a non-monotone oracle. Throws GridTooLarge
 * above `limit` points.
 */
BruteForceResult brute_force_fronts(const SearchSpace& space, FeasibilityOracle& oracle,
                                    std::uint64_t limit = kBruteForceLimit);

struct RandomInstanceSpec {
  SearchSpace space;
  std::size_t target_front_size = 0;
  std::uint64_t seed = 0;
};

/**
 * @brief A seeded random anti-chain of at most `target_front_size` grid points.
 *
 * Points are drawn uniformly (std::mt19937_64, coordinate = draw mod D_i) and
 * kept when incomparable to every point kept so far; drawing stops at the
 * target or after 64 * target attempts. Non-empty whenever the target is.
 */
PointSet random_antichain(const RandomInstanceSpec& spec);

/// Cone-union oracle over random_antichain(spec); its Pareto front is exactly that set.
std::unique_ptr<ConeUnionOracle> random_monotone_instance(const RandomInstanceSpec& spec);

/// ceil(log2(d)) for d >= 1.
std::uint64_t ceil_log2(std::uint64_t d) noexcept;

/// p * (sum_i ceil(log2 D_i) + 1) + psi, with D_i = n_i + 1.
std::uint64_t bound_value(const SearchSpace& space, std::uint64_t p, std::uint64_t psi);

/// Number of grid points <=_k some member of `s`. Throws GridTooLarge above `limit`.
std::uint64_t down_closure_size(const SearchSpace& space, const PointSet& s,
                                std::uint64_t limit = kBruteForceLimit);

/// Index of the first query y issued after a true answer at some x <=_k y.
std::optional<std::size_t> find_query_above_true(std::span<const TraceEntry> trace);

/// Index of the first query y issued after a false answer at some x >=_k y.
std::optional<std::size_t> find_query_below_false(std::span<const TraceEntry> trace);

}  // namespace paretoenum

#endif  // PARETOENUM_REFERENCE_HPP
