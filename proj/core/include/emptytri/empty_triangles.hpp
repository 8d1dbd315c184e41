#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "emptytri/geometry.hpp"

namespace emptytri {

using Index = std::uint32_t;

/// Index triple into a PointSet, always stored with i < j < k.
struct Triangle {
  Index i = 0;
  Index j = 0;
  Index k = 0;

  static constexpr Triangle of(Index a, Index b, Index c) noexcept {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return Triangle{a, b, c};
  }

  constexpr bool has(Index v) const noexcept { return i == v || j == v || k == v; }
  constexpr std::array<Index, 3> vertices() const noexcept { return {i, j, k}; }

  friend constexpr auto operator<=>(const Triangle&, const Triangle&) = default;
};

std::string to_string(const Triangle& t);

/// Canonical (sorted, duplicate-free) set of empty triangles of one point set.
class EmptyTriangleSet {
 public:
  EmptyTriangleSet() = default;
  /// Sorts and deduplicates.
  explicit EmptyTriangleSet(std::vector<Triangle> triangles);

  std::size_t size() const noexcept { return triangles_.size(); }
  bool empty() const noexcept { return triangles_.empty(); }
  bool contains(const Triangle& t) const noexcept {
    return std::binary_search(triangles_.begin(), triangles_.end(), t);
  }
  std::span<const Triangle> triangles() const noexcept { return triangles_; }
  auto begin() const noexcept { return triangles_.begin(); }
  auto end() const noexcept { return triangles_.end(); }

  friend bool operator==(const EmptyTriangleSet&, const EmptyTriangleSet&) = default;

 private:
  std::vector<Triangle> triangles_;
};

/// Reference enumerator: every triple against every other point, O(n^4).
EmptyTriangleSet enumerate_empty_brute(const PointSet& points);

/// Angular-sweep enumerator, O(n^2 log n + T) for T empty triangles.
///
/// Each empty triangle is charged to its lowest vertex p (least (y, x)). The
/// points above p, sorted counterclockwise around p, form a star-shaped
/// polygon with kernel p; triangle p q_a q_b is empty exactly when q_a and
/// q_b see each other inside that polygon. The visibility graph is built by
/// chaining edges through per-vertex queues in time linear in its size.
EmptyTriangleSet enumerate_empty_fast(const PointSet& points);

/// Indices of the points strictly inside t, ascending.
std::vector<Index> interior_points(const PointSet& points, const Triangle& t);

/// Number of empty triangles having `apex` as a vertex.
std::size_t count_incident(const EmptyTriangleSet& set, Index apex);

enum class Enumerator { Fast, Brute };

/// Empty-triangle counts around one apex x.
struct CountsReport {
  std::uint64_t n_delta_p = 0;          ///< empty triangles of P
  std::uint64_t n_delta_p_minus_x = 0;  ///< empty triangles of P \ {x}
  std::uint64_t v = 0;                  ///< empty triangles of P with x as a vertex
  std::uint64_t u = 0;                  ///< empty triangles of P avoiding x
  std::uint64_t i = 0;                  ///< triangles of P \ {x} containing only x
  std::uint64_t delta = 0;              ///< |n_delta_p - n_delta_p_minus_x|

  friend bool operator==(const CountsReport&, const CountsReport&) = default;
};

/// Throws InputError for n < 4 or apex out of range, InvariantError if any
/// of the identities N(P) = v + u, N(P \ x) = u + i, delta = |v - i| <= v + i
/// fails or an empty triangle avoiding x is not empty in P \ {x}.
CountsReport counts_report(const PointSet& points, Index apex,
                           Enumerator enumerator = Enumerator::Fast);

/// Triangles of P \ {apex} that contain apex and no other point, expressed
/// in indices of P. These are the I_P(x) triangles.
std::vector<Triangle> interior_triangles(const PointSet& points, Index apex,
                                         Enumerator enumerator = Enumerator::Fast);

}  // namespace emptytri
