#include "paretoenum/oracle.hpp"

#include <limits>
#include <string>

#include "paretoenum/errors.hpp"

namespace paretoenum {

namespace {

std::size_t inner_arity(const std::unique_ptr<FeasibilityOracle>& inner) {
  if (!inner) throw UsageError("oracle wrapper needs an inner oracle");
  return inner->arity();
}

}  // namespace

FeasibilityOracle::FeasibilityOracle(std::size_t arity) : arity_(arity) {
  if (arity_ == 0) throw UsageError("oracle arity must be at least 1");
}

bool FeasibilityOracle::evaluate(const Point& x) {
  if (x.arity() != arity_) {
    throw UsageError("query " + x.to_string() + " has arity " + std::to_string(x.arity()) +
                     ", oracle expects " + std::to_string(arity_));
  }
  return query(x);
}

ConeUnionOracle::ConeUnionOracle(std::size_t arity, PointSet generators)
    : FeasibilityOracle(arity), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.arity() != arity) {
      throw UsageError("generator " + g.to_string() + " does not have arity " +
                       std::to_string(arity));
    }
  }
}

bool ConeUnionOracle::query(const Point& x) {
  for (const auto& g : generators_) {
    if (leq(g, x)) return true;
  }
  return false;
}

WeightedThresholdOracle::WeightedThresholdOracle(std::vector<std::uint64_t> weights,
                                                 std::int64_t threshold)
    : FeasibilityOracle(weights.size()), weights_(std::move(weights)), threshold_(threshold) {}

bool WeightedThresholdOracle::query(const Point& x) {
  if (threshold_ <= 0) return true;
  // Counts down what is still missing; each product is only formed once it
  // is known to be smaller than `remaining`, so nothing overflows.
  auto remaining = static_cast<std::uint64_t>(threshold_);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const std::uint64_t w = weights_[i];
    const std::uint64_t c = x[i];
    if (w == 0 || c == 0) continue;
    const std::uint64_t needed = remaining / c + (remaining % c != 0);
    if (w >= needed) return true;
    remaining -= w * c;
  }
  return false;
}

void OracleStats::record(const Point& x, bool answer) {
  ++total_calls;
  if (answer) {
    ++true_calls;
  } else {
    ++false_calls;
  }
  if (trace) trace->push_back({x, answer});
}

CountingOracle::CountingOracle(std::unique_ptr<FeasibilityOracle> inner, bool keep_trace)
    : FeasibilityOracle(inner_arity(inner)), inner_(std::move(inner)) {
  if (keep_trace) stats_.trace.emplace();
}

bool CountingOracle::query(const Point& x) {
  const bool answer = inner_->evaluate(x);
  stats_.record(x, answer);
  return answer;
}

NegativeCacheOracle::NegativeCacheOracle(std::unique_ptr<FeasibilityOracle> inner)
    : FeasibilityOracle(inner_arity(inner)), inner_(std::move(inner)) {}

// Same result as maximal_elements(frontier_ + {x}), in one pass.
void NegativeCacheOracle::insert(const Point& x) {
  if (lookup(x)) return;
  std::erase_if(frontier_, [&](const Point& c) { return leq(c, x); });
  frontier_.insert(x);
}

std::optional<bool> NegativeCacheOracle::lookup(const Point& x) const {
  for (const auto& c : frontier_) {
    if (leq(x, c)) return false;
  }
  return std::nullopt;
}

bool NegativeCacheOracle::query(const Point& x) {
  if (auto cached = lookup(x)) {
    ++hits_;
    return *cached;
  }
  const bool answer = inner_->evaluate(x);
  if (!answer) insert(x);
  return answer;
}

std::optional<MonotonicityViolation> MonotonicityGuard::check(const Point& x,
                                                              bool answer) const {
  if (answer) {
    for (const auto& y : maximal_false_) {
      if (leq(x, y)) return MonotonicityViolation{x, y};
    }
  } else {
    for (const auto& y : minimal_true_) {
      if (leq(y, x)) return MonotonicityViolation{y, x};
    }
  }
  return std::nullopt;
}

void MonotonicityGuard::observe(const Point& x, bool answer) {
  if (auto violation = check(x, answer)) {
    throw NonMonotoneOracle(violation->feasible, violation->infeasible);
  }
  PointSet& side = answer ? minimal_true_ : maximal_false_;
  PointSet grown = side;
  grown.insert(x);
  side = answer ? minimal_elements(grown) : maximal_elements(grown);
}

GuardedOracle::GuardedOracle(std::unique_ptr<FeasibilityOracle> inner)
    : FeasibilityOracle(inner_arity(inner)), inner_(std::move(inner)) {}

bool GuardedOracle::query(const Point& x) {
  const bool answer = inner_->evaluate(x);
  guard_.observe(x, answer);
  return answer;
}

}  // namespace paretoenum
