/**
 * @file external_oracle.hpp
 * @brief Feasibility oracle backed by a child process speaking a line protocol.
 *
 * For each query the parent writes the coordinates as base-10 integers
 * separated by single spaces and terminated by '\n' to the child's stdin. The
 * child answers with one line that is exactly "1" (feasible) or "0"
 * (infeasible). One child serves every query of a run; closing its stdin
 * signals the end. Any other reply, or the child exiting before replying,
 * raises OracleFailure.
 */

#ifndef PARETOENUM_EXTERNAL_ORACLE_HPP
#define PARETOENUM_EXTERNAL_ORACLE_HPP

#include <string>
#include <sys/types.h>
#include <vector>

#include "paretoenum/oracle.hpp"

namespace paretoenum {

class ExternalProcessOracle final : public FeasibilityOracle {
 public:
  /// Spawns argv[0] (looked up in PATH) with the remaining arguments.
  ExternalProcessOracle(std::size_t arity, std::vector<std::string> argv);
  ~ExternalProcessOracle() override;

  /// Runs `command_line` through /bin/sh -c.
  static std::unique_ptr<ExternalProcessOracle> from_shell(std::size_t arity,
                                                           const std::string& command_line);

  const std::vector<std::string>& command() const noexcept { return argv_; }

  /// The encoded request line for x, including the trailing line feed.
  static std::string encode_query(const Point& x);

 protected:
  bool query(const Point& x) override;

 private:
  void shutdown() noexcept;
  bool read_line(std::string& line);

  std::vector<std::string> argv_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string pending_;
};

}  // namespace paretoenum

#endif  // PARETOENUM_EXTERNAL_ORACLE_HPP
