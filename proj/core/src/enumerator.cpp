#include "paretoenum/enumerator.hpp"

#include <algorithm>

#include "paretoenum/errors.hpp"

namespace paretoenum {

namespace {

// Non-owning view that records every answer in the enumerator's stats.
class RecordingOracle final : public FeasibilityOracle {
 public:
  RecordingOracle(FeasibilityOracle& inner, OracleStats& stats)
      : FeasibilityOracle(inner.arity()), inner_(inner), stats_(stats) {}

 protected:
  bool query(const Point& x) override {
    const bool answer = inner_.evaluate(x);
    stats_.record(x, answer);
    return answer;
  }

 private:
  FeasibilityOracle& inner_;
  OracleStats& stats_;
};

}  // namespace

std::string_view to_string(SelectionStrategy s) noexcept {
  switch (s) {
    case SelectionStrategy::kLexicographicMax:
      return "lexicographic-max";
    case SelectionStrategy::kLexicographicMin:
      return "lexicographic-min";
    case SelectionStrategy::kQueueOrder:
      return "queue-order";
  }
  return "unknown";
}

std::optional<SelectionStrategy> parse_strategy(std::string_view name) noexcept {
  for (auto s : {SelectionStrategy::kLexicographicMax, SelectionStrategy::kLexicographicMin,
                 SelectionStrategy::kQueueOrder}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

EnumeratorState::EnumeratorState(SearchSpace space, EnumeratorOptions options)
    : space_(std::move(space)), options_(options) {
  if (options_.keep_trace) stats_.trace.emplace();
  replace_frontier(PointSet{space_.top()});
}

std::optional<Point> EnumeratorState::select() const {
  if (frontier_.empty()) return std::nullopt;
  switch (options_.strategy) {
    case SelectionStrategy::kLexicographicMax:
      return *frontier_.rbegin();
    case SelectionStrategy::kLexicographicMin:
      return *frontier_.begin();
    case SelectionStrategy::kQueueOrder: {
      auto oldest = std::min_element(arrival_.begin(), arrival_.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });
      return oldest->first;
    }
  }
  return std::nullopt;
}

void EnumeratorState::replace_frontier(PointSet next) {
  std::map<Point, std::uint64_t> arrival;
  // New points arrive in canonical order, after every surviving point.
  for (const auto& p : next) {
    auto it = arrival_.find(p);
    arrival.emplace(p, it != arrival_.end() ? it->second : next_arrival_++);
  }
  arrival_ = std::move(arrival);
  frontier_ = std::move(next);
}

Point search_pareto_point(Point x, FeasibilityOracle& oracle) {
  for (std::size_t i = 0; i < x.arity(); ++i) {
    Coord max = x[i] + 1;
    Coord min = 0;
    while (max - min > 1) {
      const Coord mid = min + (max - min - 1) / 2;
      x[i] = mid;
      if (oracle.evaluate(x)) {
        max = mid + 1;
      } else {
        min = mid + 1;
      }
    }
    x[i] = min;
  }
  return x;
}

PointSet expand_frontier(const PointSet& frontier, const Point& x) {
  PointSet next;
  for (const auto& y : frontier) {
    if (!leq(x, y)) {
      next.insert(y);
      continue;
    }
    for (std::size_t i = 0; i < x.arity(); ++i) {
      if (x[i] > 0) {
        Point lowered = y;
        lowered[i] = x[i] - 1;
        next.insert(std::move(lowered));
      }
    }
  }
  return maximal_elements(next);
}

EnumerationEvent step_at(EnumeratorState& state, FeasibilityOracle& oracle, const Point& x) {
  if (!state.frontier_.contains(x)) {
    throw UsageError("point " + x.to_string() + " is not on the frontier");
  }
  if (oracle.arity() != state.space_.arity()) {
    throw UsageError("oracle arity " + std::to_string(oracle.arity()) +
                     " does not match search space arity " +
                     std::to_string(state.space_.arity()));
  }
  RecordingOracle recorder(oracle, state.stats_);
  if (!recorder.evaluate(x)) {
    PointSet next = state.frontier_;
    next.erase(x);
    state.replace_frontier(std::move(next));
    state.co_front_.insert(x);
    return CoParetoPointFound{x};
  }
  Point found = search_pareto_point(x, recorder);
  state.front_.insert(found);
  PointSet next = expand_frontier(state.frontier_, found);
  if (state.options_.prune_known_infeasible) {
    std::erase_if(next, [&](const Point& y) {
      return std::any_of(state.co_front_.begin(), state.co_front_.end(),
                         [&](const Point& z) { return leq(y, z); });
    });
  }
  state.replace_frontier(std::move(next));
  return ParetoPointFound{std::move(found)};
}

EnumerationEvent step(EnumeratorState& state, FeasibilityOracle& oracle) {
  const auto x = state.select();
  if (!x) return Done{};
  return step_at(state, oracle, *x);
}

EnumerationResult enumerate(const SearchSpace& space, FeasibilityOracle& oracle,
                            EnumeratorOptions options, const EventSink& sink) {
  if (oracle.arity() != space.arity()) {
    throw UsageError("oracle arity " + std::to_string(oracle.arity()) +
                     " does not match search space arity " + std::to_string(space.arity()));
  }
  EnumeratorState state(space, options);
  try {
    for (;;) {
      EnumerationEvent event = step(state, oracle);
      if (sink) sink(event);
      if (std::holds_alternative<Done>(event)) break;
    }
  } catch (const NonMonotoneOracle& e) {
    throw EnumerationAborted(EnumerationAborted::Reason::kNonMonotone, e.what(), state.result());
  } catch (const OracleFailure& e) {
    throw EnumerationAborted(EnumerationAborted::Reason::kOracleFailure, e.what(),
                             state.result());
  }
  return state.result();
}

}  // namespace paretoenum
