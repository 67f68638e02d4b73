#include "commands.hpp"

#include <ostream>

#include "paretoenum/errors.hpp"
#include "paretoenum/reference.hpp"

namespace paretoenum::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json point_json(const Point& p) {
  ordered_json arr = ordered_json::array();
  for (Coord c : p) arr.push_back(c);
  return arr;
}

// base -> [guard] -> counter -> [negative cache]; the counter sees every call
// that actually reaches the problem's oracle. The guard disables the cache:
// cached answers are inferred from monotonicity and would hide violations.
struct OracleStack {
  std::unique_ptr<FeasibilityOracle> top;
  CountingOracle* counter = nullptr;
};

OracleStack build_stack(const Problem& problem, const RunOptions& options) {
  std::unique_ptr<FeasibilityOracle> oracle = make_base_oracle(problem);
  if (options.check_monotone) oracle = std::make_unique<GuardedOracle>(std::move(oracle));
  auto counter = std::make_unique<CountingOracle>(std::move(oracle));
  OracleStack stack;
  stack.counter = counter.get();
  stack.top = std::move(counter);
  if (problem.cache && !options.no_cache && !options.check_monotone) {
    stack.top = std::make_unique<NegativeCacheOracle>(std::move(stack.top));
  }
  return stack;
}

EnumeratorOptions enumerator_options(const Problem& problem, const RunOptions& options) {
  return {options.strategy.value_or(problem.strategy), options.trace};
}

int report_abort(const EnumerationAborted& e, std::ostream& err) {
  err << "error: " << e.what() << '\n'
      << "partial result: " << e.partial().front.size() << " Pareto point(s), "
      << e.partial().co_front.size() << " co-Pareto point(s)\n";
  return e.reason() == EnumerationAborted::Reason::kNonMonotone ? kExitNonMonotone
                                                                 : kExitOracleFailure;
}

}  // namespace

int run_command(const Problem& problem, const RunOptions& options, std::ostream& out,
                std::ostream& err) {
  try {
    validate(problem);
    OracleStack stack = build_stack(problem, options);
    auto sink = [&out](const EnumerationEvent& event) {
      ordered_json record;
      if (const auto* found = std::get_if<ParetoPointFound>(&event)) {
        record["event"] = "pareto";
        record["point"] = point_json(found->point);
      } else if (const auto* co = std::get_if<CoParetoPointFound>(&event)) {
        record["event"] = "co_pareto";
        record["point"] = point_json(co->point);
      } else {
        return;
      }
      out << record.dump() << '\n' << std::flush;
    };
    const EnumerationResult result =
        enumerate(problem.space, *stack.top, enumerator_options(problem, options), sink);

    const std::uint64_t p = result.front.size();
    const std::uint64_t psi = result.co_front.size();
    const std::uint64_t bound = bound_value(problem.space, p, psi);
    ordered_json summary;
    summary["event"] = "summary";
    summary["p"] = p;
    summary["psi"] = psi;
    summary["total_calls"] = result.stats.total_calls;
    summary["true_calls"] = result.stats.true_calls;
    summary["false_calls"] = result.stats.false_calls;
    summary["inner_calls"] = stack.counter->stats().total_calls;
    summary["bound"] = bound;
    summary["within_bound"] = result.stats.total_calls <= bound;
    if (result.stats.trace) {
      ordered_json trace = ordered_json::array();
      for (const auto& [point, answer] : *result.stats.trace) {
        trace.push_back({{"point", point_json(point)}, {"answer", answer}});
      }
      summary["trace"] = std::move(trace);
    }
    out << summary.dump() << '\n' << std::flush;
    return kExitOk;
  } catch (const EnumerationAborted& e) {
    return report_abort(e, err);
  } catch (const OracleFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitOracleFailure;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

int verify_command(const Problem& problem, const RunOptions& options, std::ostream& out,
                   std::ostream& err) {
  try {
    validate(problem);
    if (problem.space.grid_size() > kBruteForceLimit) {
      throw GridTooLarge(kBruteForceLimit);
    }
    OracleStack stack = build_stack(problem, options);
    const EnumerationResult result =
        enumerate(problem.space, *stack.top, enumerator_options(problem, options));

    auto reference_oracle = make_base_oracle(problem);
    const BruteForceResult expected = brute_force_fronts(problem.space, *reference_oracle);

    const std::uint64_t p = result.front.size();
    const std::uint64_t psi = result.co_front.size();
    const std::uint64_t bound = bound_value(problem.space, p, psi);
    const bool front_ok = result.front == expected.front;
    const bool co_front_ok = result.co_front == expected.co_front;
    const bool bound_ok = result.stats.total_calls <= bound;

    out << "grid: " << problem.space.top().to_string() << ", " << expected.grid_size
        << " points\n";
    out << "strategy: " << to_string(options.strategy.value_or(problem.strategy)) << '\n';
    out << "front: " << (front_ok ? "PASS" : "FAIL") << " (p=" << p << ")\n";
    if (!front_ok) {
      out << "  enumerated:  " << to_string(result.front) << '\n'
          << "  brute force: " << to_string(expected.front) << '\n';
    }
    out << "co_front: " << (co_front_ok ? "PASS" : "FAIL") << " (psi=" << psi << ")\n";
    if (!co_front_ok) {
      out << "  enumerated:  " << to_string(result.co_front) << '\n'
          << "  brute force: " << to_string(expected.co_front) << '\n';
    }
    out << "bound: " << (bound_ok ? "PASS" : "FAIL") << " (" << result.stats.total_calls
        << " <= " << bound << ")\n";
    const bool ok = front_ok && co_front_ok && bound_ok;
    out << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
  } catch (const EnumerationAborted& e) {
    return report_abort(e, err);
  } catch (const GridTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const OracleFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitOracleFailure;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

}  // namespace paretoenum::cli
