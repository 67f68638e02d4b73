/**
 * @file problem.hpp
 * @brief Problem descriptions for the command-line tool: JSON problem files,
 *        inline flag syntax, random instances, and oracle construction.
 *
 * Problem file:
 *
 *     {
 *       "bounds": [3, 3, 3],
 *       "oracle": {"kind": "cone", "generators": [[2,1,1], [1,2,2]]},
 *       "strategy": "lexicographic-max",
 *       "cache": true
 *     }
 *
 * `oracle.kind` is one of "cone" (uses `generators`), "threshold" (uses
 * `weights` and `threshold`) or "external" (uses `command`, either a shell
 * command line string or an argv array).
 */

#ifndef PARETOENUM_TOOLS_PROBLEM_HPP
#define PARETOENUM_TOOLS_PROBLEM_HPP

#include <cstdint>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "paretoenum/enumerator.hpp"
#include "paretoenum/oracle.hpp"
#include "paretoenum/point.hpp"

namespace paretoenum::cli {

/// Malformed input; `field()` names the offending field or flag.
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class OracleKind { kCone, kThreshold, kExternal };

struct OracleSpec {
  OracleKind kind = OracleKind::kCone;
  PointSet generators;
  std::vector<std::uint64_t> weights;
  std::int64_t threshold = 0;
  std::vector<std::string> command;  ///< argv; a single entry when run through the shell
  bool use_shell = false;
};

struct Problem {
  SearchSpace space{0};
  OracleSpec oracle;
  SelectionStrategy strategy = SelectionStrategy::kLexicographicMax;
  bool cache = true;
};

Problem parse_problem(const nlohmann::json& doc);
/// Reads and parses a problem file; unreadable or invalid JSON is an InputError on "problem".
Problem load_problem(const std::filesystem::path& path);

/// "3,3,3" -> (3,3,3). `field` names the flag in error messages.
std::vector<std::uint64_t> parse_uint_list(std::string_view text, const std::string& field);
/// "2,1,1;1,2,2" -> {(2,1,1),(1,2,2)}; empty text -> {}.
PointSet parse_point_list(std::string_view text, std::size_t arity, const std::string& field);

/// Checks the oracle spec against the space (generator bounds, weight count, ...).
void validate(const Problem& problem);

struct RandomRequest {
  std::size_t k = 2;
  Coord n = 4;
  std::size_t front = 3;
  std::uint64_t seed = 0;
};

/// Parses tokens such as {"k=3", "n=5", "front=4", "seed=7"}.
RandomRequest parse_random_request(const std::vector<std::string>& tokens);
/// A cone-union problem over {0..n}^k with a seeded random front.
Problem random_problem(const RandomRequest& request);

/// The bare oracle described by the problem, without wrappers.
std::unique_ptr<FeasibilityOracle> make_base_oracle(const Problem& problem);

}  // namespace paretoenum::cli

#endif  // PARETOENUM_TOOLS_PROBLEM_HPP
