#include "paretoenum/point.hpp"

#include <limits>
#include <ostream>
#include <sstream>

#include "paretoenum/errors.hpp"

namespace paretoenum {

std::string Point::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << p.to_string();
}

std::string to_string(const PointSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : s) {
    if (!first) out += ',';
    out += p.to_string();
    first = false;
  }
  return out + "}";
}

SearchSpace::SearchSpace(std::vector<Coord> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) {
    throw UsageError("search space needs at least one dimension");
  }
  for (Coord b : bounds_) {
    if (b == std::numeric_limits<Coord>::max()) {
      throw UsageError("dimension bound must be below 2^64-1");
    }
  }
}

std::uint64_t SearchSpace::grid_size() const noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const std::uint64_t d = domain_size(i);
    if (total > kMax / d) return kMax;
    total *= d;
  }
  return total;
}

bool SearchSpace::contains(const Point& x) const noexcept {
  if (x.arity() != arity()) return false;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (x[i] > bounds_[i]) return false;
  }
  return true;
}

void SearchSpace::require_contains(const Point& x) const {
  if (x.arity() != arity()) {
    throw UsageError("point " + x.to_string() + " has arity " +
                     std::to_string(x.arity()) + ", search space has arity " +
                     std::to_string(arity()));
  }
  if (!contains(x)) {
    throw UsageError("point " + x.to_string() + " lies outside the search space " +
                     top().to_string());
  }
}

bool leq(const Point& a, const Point& b) {
  if (a.arity() != b.arity()) {
    throw UsageError("cannot compare " + a.to_string() + " with " + b.to_string() +
                     ": arity mismatch");
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool strictly_less(const Point& a, const Point& b) { return a != b && leq(a, b); }

bool incomparable(const Point& a, const Point& b) { return !leq(a, b) && !leq(b, a); }

bool is_antichain(const PointSet& s) {
  for (auto it = s.begin(); it != s.end(); ++it) {
    for (auto jt = std::next(it); jt != s.end(); ++jt) {
      if (!incomparable(*it, *jt)) return false;
    }
  }
  return true;
}

PointSet maximal_elements(const PointSet& s) {
  PointSet kept;
  for (const auto& x : s) {
    bool found = false;
    for (const auto& y : s) {
      if (leq(x, y) && x != y) {
        found = true;
        break;
      }
    }
    if (!found) kept.insert(kept.end(), x);
  }
  return kept;
}

PointSet minimal_elements(const PointSet& s) {
  PointSet kept;
  for (const auto& x : s) {
    bool found = false;
    for (const auto& y : s) {
      if (leq(y, x) && x != y) {
        found = true;
        break;
      }
    }
    if (!found) kept.insert(kept.end(), x);
  }
  return kept;
}

}  // namespace paretoenum
