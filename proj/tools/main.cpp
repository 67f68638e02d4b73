// pareto-enum: enumerate the Pareto front of a monotone feasibility oracle.
//
//   pareto-enum run    --problem example.json
//   pareto-enum run    --bounds 3,3,3 --oracle cone --generators "2,1,1;1,2,2"
//   pareto-enum verify --random k=3 n=5 front=4 seed=7

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "paretoenum/errors.hpp"

namespace {

using namespace paretoenum;
using namespace paretoenum::cli;

struct Args {
  std::string problem_path;
  std::string bounds;
  std::string oracle_kind;
  std::string generators;
  std::string weights;
  std::int64_t threshold = 0;
  std::string command;
  std::string strategy;
  std::vector<std::string> random;
  std::uint64_t seed = 0;
  bool no_cache = false;
  bool check_monotone = false;
  bool trace = false;
};

void add_common_options(CLI::App& app, Args& args) {
  app.add_option("--problem", args.problem_path, "JSON problem file");
  app.add_option("--bounds", args.bounds, "inclusive per-dimension maxima, e.g. 3,3,3");
  app.add_option("--oracle", args.oracle_kind, "inline oracle kind: cone, threshold, external");
  app.add_option("--generators", args.generators, "cone generators, e.g. \"2,1,1;1,2,2\"");
  app.add_option("--weights", args.weights, "threshold weights, e.g. 1,1,1");
  app.add_option("--threshold", args.threshold, "threshold value");
  app.add_option("--command", args.command, "external oracle shell command");
  app.add_option("--strategy", args.strategy,
                 "lexicographic-max (default), lexicographic-min or queue-order");
  app.add_flag("--no-cache", args.no_cache, "disable the negative-result cache");
  app.add_flag("--check-monotone", args.check_monotone, "fail on non-monotone oracle answers (disables the cache)");
  app.add_flag("--trace", args.trace, "include the per-call trace in the summary");
}

Problem inline_problem(const Args& args, const CLI::App& app) {
  if (args.bounds.empty()) throw InputError("--bounds", "required without --problem");
  auto bounds = parse_uint_list(args.bounds, "--bounds");
  if (bounds.empty()) throw InputError("--bounds", "must list at least one dimension");
  Problem problem;
  problem.space = SearchSpace(std::move(bounds));
  const std::size_t k = problem.space.arity();
  if (args.oracle_kind == "cone") {
    problem.oracle.kind = OracleKind::kCone;
    problem.oracle.generators = parse_point_list(args.generators, k, "--generators");
  } else if (args.oracle_kind == "threshold") {
    problem.oracle.kind = OracleKind::kThreshold;
    problem.oracle.weights = parse_uint_list(args.weights, "--weights");
    if (app.count("--threshold") == 0) throw InputError("--threshold", "required");
    problem.oracle.threshold = args.threshold;
  } else if (args.oracle_kind == "external") {
    problem.oracle.kind = OracleKind::kExternal;
    problem.oracle.command = {args.command};
    problem.oracle.use_shell = true;
  } else {
    throw InputError("--oracle", "expected cone, threshold or external");
  }
  return problem;
}

Problem resolve_problem(const Args& args, const CLI::App& app, bool allow_random) {
  if (!args.random.empty()) {
    if (!allow_random) throw InputError("--random", "only available in verify mode");
    RandomRequest request = parse_random_request(args.random);
    if (app.count("--seed")) request.seed = args.seed;
    return random_problem(request);
  }
  if (!args.problem_path.empty()) return load_problem(args.problem_path);
  return inline_problem(args, app);
}

RunOptions run_options(const Args& args) {
  RunOptions options;
  if (!args.strategy.empty()) {
    options.strategy = parse_strategy(args.strategy);
    if (!options.strategy) throw InputError("--strategy", "unknown strategy \"" + args.strategy + "\"");
  }
  options.no_cache = args.no_cache;
  options.check_monotone = args.check_monotone;
  options.trace = args.trace;
  return options;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate the Pareto front of a monotone feasibility oracle"};
  app.require_subcommand(1);

  Args run_args;
  CLI::App* run = app.add_subcommand("run", "stream Pareto and co-Pareto points as JSON lines");
  add_common_options(*run, run_args);

  Args verify_args;
  CLI::App* verify = app.add_subcommand("verify", "check the enumerator against brute force");
  add_common_options(*verify, verify_args);
  verify->add_option("--random", verify_args.random, "random instance: k=.. n=.. front=.. seed=..")
      ->expected(1, -1);
  verify->add_option("--seed", verify_args.seed, "seed for --random");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : kExitBadInput;
  }

  const bool is_run = run->parsed();
  const Args& args = is_run ? run_args : verify_args;
  CLI::App& sub = is_run ? *run : *verify;
  try {
    const Problem problem = resolve_problem(args, sub, !is_run);
    const RunOptions options = run_options(args);
    return is_run ? run_command(problem, options, std::cout, std::cerr)
                  : verify_command(problem, options, std::cout, std::cerr);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}
