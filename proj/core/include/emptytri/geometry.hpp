#pragma once

// Exact integer planar predicates.
//
// Coordinates are 64-bit integers bounded by kCoordinateBound. Every
// predicate below is a polynomial of degree at most 4 in the coordinates and
// is evaluated in 128-bit arithmetic; with |x|,|y| <= 2^28 the largest
// intermediate is below 2^120, so no sign is ever wrong.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace emptytri {

using Coord = std::int64_t;
using Wide = __int128;

inline constexpr Coord kCoordinateBound = Coord{1} << 28;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

/// True iff |x| <= kCoordinateBound and |y| <= kCoordinateBound.
constexpr bool within_bound(const Point& p) noexcept {
  return p.x <= kCoordinateBound && p.x >= -kCoordinateBound &&
         p.y <= kCoordinateBound && p.y >= -kCoordinateBound;
}

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

/// Sign of det(q - p, r - p).
constexpr Orientation orient(const Point& p, const Point& q, const Point& r) noexcept {
  const Wide det = Wide{q.x - p.x} * Wide{r.y - p.y} - Wide{q.y - p.y} * Wide{r.x - p.x};
  return det > 0 ? Orientation::CounterClockwise
                 : (det < 0 ? Orientation::Clockwise : Orientation::Collinear);
}

constexpr int orient_sign(const Point& p, const Point& q, const Point& r) noexcept {
  return static_cast<int>(orient(p, q, r));
}

enum class Containment { Inside, Outside };

/// Strict interior test. Throws GeometryError if abc is degenerate or if p
/// lies on the boundary of abc (which general position rules out).
Containment point_in_triangle(const Point& a, const Point& b, const Point& c, const Point& p);

/// Whether angle(b, x, a) + angle(a, x, c) exceeds 180 degrees.
///
/// Requires b and c strictly on opposite sides of line (x, a). Decided by the
/// sign of sin of the angle sum: with u = a - x, v = b - x, w = c - x the sum
/// exceeds pi iff |v x u| (u . w) + (v . u) |u x w| < 0. Throws GeometryError
/// when the precondition fails or the expression vanishes (b, x, c collinear).
bool angle_sum_exceeds_pi(const Point& x, const Point& a, const Point& b, const Point& c);

struct ValidationReport {
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;
  std::vector<std::array<std::size_t, 3>> collinear;
  std::vector<std::size_t> out_of_bound;

  bool valid() const noexcept {
    return duplicates.empty() && collinear.empty() && out_of_bound.empty();
  }
  /// One-line human-readable summary of the first violation, or "valid".
  std::string describe(std::span<const Point> points) const;
};

/// O(n^3) scan for duplicates, collinear triples and out-of-bound points.
/// Collinear triples made only of duplicated points are not reported twice;
/// a triple containing a duplicate pair is skipped.
ValidationReport validate_general_position(std::span<const Point> points);

/// Immutable point set in general position. Construction validates; there is
/// no way to obtain an unvalidated PointSet.
class PointSet {
 public:
  PointSet() = default;
  /// Throws GeometryError carrying ValidationReport::describe on failure.
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const noexcept { return points_[i]; }
  std::span<const Point> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  /// The set with point `index` removed; indices above it shift down by one.
  PointSet without(std::size_t index) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  struct Trusted {};
  PointSet(std::vector<Point> points, Trusted) : points_(std::move(points)) {}

  std::vector<Point> points_;
};

}  // namespace emptytri
