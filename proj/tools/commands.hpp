/**
 * @file commands.hpp
 * @brief The `run` and `verify` subcommands, independent of argument parsing.
 *
 * `run` streams one JSON record per line as results appear:
 *
 *     {"event":"pareto","point":[1,2,2]}
 *     {"event":"co_pareto","point":[0,3,3]}
 *     {"event":"summary","p":2,"psi":5,"total_calls":18,...,"within_bound":true}
 *
 * `verify` compares the enumerator against exhaustive evaluation and prints a
 * plain-text report.
 */

#ifndef PARETOENUM_TOOLS_COMMANDS_HPP
#define PARETOENUM_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <optional>

#include "problem.hpp"

namespace paretoenum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitOracleFailure = 2;
inline constexpr int kExitNonMonotone = 3;
inline constexpr int kExitVerifyFailed = 4;

struct RunOptions {
  std::optional<SelectionStrategy> strategy;  ///< overrides the problem's strategy
  bool no_cache = false;
  bool check_monotone = false;
  bool trace = false;
};

/// Enumerates and streams records to `out`; diagnostics go to `err`. Returns the exit status.
int run_command(const Problem& problem, const RunOptions& options, std::ostream& out,
                std::ostream& err);

/// Enumerates, brute-forces and compares. Returns the exit status.
int verify_command(const Problem& problem, const RunOptions& options, std::ostream& out,
                   std::ostream& err);

}  // namespace paretoenum::cli

#endif  // PARETOENUM_TOOLS_COMMANDS_HPP
