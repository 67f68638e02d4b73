/**
 * @file point.hpp
 * @brief Grid geometry: points, per-dimension search spaces, the
 *        component-wise dominance order and anti-chain operations.
 *
 * Smaller coordinates are better: a point dominates every point that is
 * component-wise greater or equal to it.
 */

#ifndef PARETOENUM_POINT_HPP
#define PARETOENUM_POINT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace paretoenum {

using Coord = std::uint64_t;

/// A grid point, one coordinate per objective. Ordered lexicographically.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<Coord> coords) : coords_(coords) {}
  explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  /// The point (value, ..., value) of the given arity.
  static Point filled(std::size_t arity, Coord value) {
    return Point(std::vector<Coord>(arity, value));
  }

  std::size_t arity() const noexcept { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }

  std::span<const Coord> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  /// "(1,2,2)"
  std::string to_string() const;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Coord> coords_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

/// Finite point set in canonical (lexicographic) order.
using PointSet = std::set<Point>;

std::string to_string(const PointSet& s);

/**
 * @brief The grid {0..n_1} x ... x {0..n_k}.
 *
 * Bounds are inclusive maxima, so dimension i holds n_i + 1 values.
 */
class SearchSpace {
 public:
  /// Throws UsageError when `bounds` is empty.
  explicit SearchSpace(std::vector<Coord> bounds);
  SearchSpace(std::initializer_list<Coord> bounds)
      : SearchSpace(std::vector<Coord>(bounds)) {}

  std::size_t arity() const noexcept { return bounds_.size(); }
  std::span<const Coord> bounds() const noexcept { return bounds_; }
  Coord bound(std::size_t i) const { return bounds_[i]; }
  /// Number of values in dimension i, i.e. n_i + 1.
  std::uint64_t domain_size(std::size_t i) const { return bounds_[i] + 1; }

  /// Total number of grid points, saturating at UINT64_MAX.
  std::uint64_t grid_size() const noexcept;

  /// (n_1, ..., n_k), the greatest point of the grid.
  Point top() const { return Point(bounds_); }
  Point origin() const { return Point::filled(arity(), 0); }

  bool contains(const Point& x) const noexcept;
  /// Throws UsageError naming the point unless contains(x).
  void require_contains(const Point& x) const;

  friend bool operator==(const SearchSpace&, const SearchSpace&) = default;

 private:
  std::vector<Coord> bounds_;
};

/// a <=_k b: a_i <= b_i for every i. Throws UsageError on arity mismatch.
bool leq(const Point& a, const Point& b);

/// a <=_k b and a != b.
bool strictly_less(const Point& a, const Point& b);

/// Neither a <=_k b nor b <=_k a.
bool incomparable(const Point& a, const Point& b);

/// True iff no two distinct members are comparable.
bool is_antichain(const PointSet& s);

/**
 * @brief The <=_k-maximal members of `s`.
 *
 * Keeps x iff no other member y satisfies x <=_k y. Quadratic pairwise scan;
 * frontier sizes stay small relative to the oracle cost.
 */
PointSet maximal_elements(const PointSet& s);

/// The <=_k-minimal members of `s` (dual of maximal_elements).
PointSet minimal_elements(const PointSet& s);

}  // namespace paretoenum

#endif  // PARETOENUM_POINT_HPP
