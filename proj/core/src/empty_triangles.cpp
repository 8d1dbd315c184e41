#include "emptytri/empty_triangles.hpp"

#include <cstdlib>
#include <deque>

#include "emptytri/errors.hpp"

namespace emptytri {

std::string to_string(const Triangle& t) {
  return std::to_string(t.i) + " " + std::to_string(t.j) + " " + std::to_string(t.k);
}

EmptyTriangleSet::EmptyTriangleSet(std::vector<Triangle> triangles)
    : triangles_(std::move(triangles)) {
  std::sort(triangles_.begin(), triangles_.end());
  triangles_.erase(std::unique(triangles_.begin(), triangles_.end()), triangles_.end());
}

EmptyTriangleSet enumerate_empty_brute(const PointSet& points) {
  const auto n = static_cast<Index>(points.size());
  std::vector<Triangle> out;
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      for (Index c = b + 1; c < n; ++c) {
        bool empty = true;
        for (Index d = 0; d < n && empty; ++d) {
          if (d == a || d == b || d == c) continue;
          empty = point_in_triangle(points[a], points[b], points[c], points[d]) ==
                  Containment::Outside;
        }
        if (empty) out.push_back(Triangle{a, b, c});
      }
    }
  }
  return EmptyTriangleSet(std::move(out));
}

namespace {

// Visibility graph of the star-shaped polygon (apex, ring[0], ..., ring[m-1])
// where ring is sorted counterclockwise around apex. Each visible pair (a, b)
// with a < b in ring order is reported once through `emit`.
class StarVisibility {
 public:
  StarVisibility(const PointSet& points, std::span<const Index> ring)
      : points_(points), ring_(ring), queues_(ring.size()) {}

  template <typename Emit>
  void run(Emit&& emit) {
    for (std::size_t a = 0; a + 1 < ring_.size(); ++a) proceed(a, a + 1, emit);
  }

 private:
  // Edge (a, b) is visible. Every queued edge (k, a) turning left at a into b
  // extends to a visible edge (k, b); the first right turn ends the chain.
  template <typename Emit>
  void proceed(std::size_t a, std::size_t b, Emit& emit) {
    auto& incoming = queues_[a];
    while (!incoming.empty() &&
           orient(pt(incoming.front()), pt(a), pt(b)) == Orientation::CounterClockwise) {
      proceed(incoming.front(), b, emit);
      incoming.pop_front();
    }
    emit(ring_[a], ring_[b]);
    queues_[b].push_back(a);
  }

  const Point& pt(std::size_t ring_index) const { return points_[ring_[ring_index]]; }

  const PointSet& points_;
  std::span<const Index> ring_;
  std::vector<std::deque<std::size_t>> queues_;
};

bool lower(const Point& a, const Point& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

}  // namespace

EmptyTriangleSet enumerate_empty_fast(const PointSet& points) {
  const auto n = static_cast<Index>(points.size());
  std::vector<Triangle> out;
  std::vector<Index> ring;
  ring.reserve(n);
  for (Index p = 0; p < n; ++p) {
    const Point& apex = points[p];
    ring.clear();
    for (Index q = 0; q < n; ++q) {
      if (q != p && lower(apex, points[q])) ring.push_back(q);
    }
    // All of ring lies in the half-open upper half-plane around apex, so the
    // orientation test is a strict weak order on it.
    std::sort(ring.begin(), ring.end(), [&](Index a, Index b) {
      return orient(apex, points[a], points[b]) == Orientation::CounterClockwise;
    });
    StarVisibility(points, ring).run(
        [&](Index a, Index b) { out.push_back(Triangle::of(p, a, b)); });
  }
  return EmptyTriangleSet(std::move(out));
}

std::vector<Index> interior_points(const PointSet& points, const Triangle& t) {
  std::vector<Index> inside;
  const auto n = static_cast<Index>(points.size());
  for (Index d = 0; d < n; ++d) {
    if (t.has(d)) continue;
    if (point_in_triangle(points[t.i], points[t.j], points[t.k], points[d]) ==
        Containment::Inside) {
      inside.push_back(d);
    }
  }
  return inside;
}

std::size_t count_incident(const EmptyTriangleSet& set, Index apex) {
  return static_cast<std::size_t>(
      std::count_if(set.begin(), set.end(), [apex](const Triangle& t) { return t.has(apex); }));
}

namespace {

EmptyTriangleSet enumerate(const PointSet& points, Enumerator enumerator) {
  return enumerator == Enumerator::Fast ? enumerate_empty_fast(points)
                                        : enumerate_empty_brute(points);
}

Index lift(Index v, Index removed) { return v >= removed ? v + 1 : v; }

Triangle lift(const Triangle& t, Index removed) {
  return Triangle{lift(t.i, removed), lift(t.j, removed), lift(t.k, removed)};
}

void check_apex(const PointSet& points, Index apex, std::size_t min_points) {
  if (points.size() < min_points) {
    throw InputError("need at least " + std::to_string(min_points) + " points, got " +
                     std::to_string(points.size()));
  }
  if (apex >= points.size()) {
    throw InputError("apex " + std::to_string(apex) + " out of range for " +
                     std::to_string(points.size()) + " points");
  }
}

// Triangles of P \ {apex} (in P indices) whose interior holds exactly {apex}.
std::vector<Triangle> containing_only_apex(const PointSet& points, Index apex,
                                           const EmptyTriangleSet& reduced) {
  std::vector<Triangle> result;
  for (const auto& t : reduced) {
    const Triangle lifted = lift(t, apex);
    const auto inside = interior_points(points, lifted);
    if (inside.size() == 1 && inside.front() == apex) result.push_back(lifted);
  }
  return result;
}

}  // namespace

std::vector<Triangle> interior_triangles(const PointSet& points, Index apex,
                                         Enumerator enumerator) {
  check_apex(points, apex, 4);
  return containing_only_apex(points, apex, enumerate(points.without(apex), enumerator));
}

CountsReport counts_report(const PointSet& points, Index apex, Enumerator enumerator) {
  check_apex(points, apex, 4);
  const EmptyTriangleSet full = enumerate(points, enumerator);
  const EmptyTriangleSet reduced = enumerate(points.without(apex), enumerator);

  CountsReport r;
  r.n_delta_p = full.size();
  r.n_delta_p_minus_x = reduced.size();
  for (const auto& t : full) {
    if (t.has(apex)) {
      ++r.v;
      continue;
    }
    ++r.u;
    const auto down = [apex](Index v) { return v > apex ? v - 1 : v; };
    if (!reduced.contains(Triangle{down(t.i), down(t.j), down(t.k)})) {
      throw InvariantError("empty triangle " + to_string(t) + " avoiding apex is not empty in P\\{x}");
    }
  }
  r.i = containing_only_apex(points, apex, reduced).size();
  r.delta = r.n_delta_p > r.n_delta_p_minus_x ? r.n_delta_p - r.n_delta_p_minus_x
                                              : r.n_delta_p_minus_x - r.n_delta_p;

  if (r.n_delta_p != r.v + r.u) throw InvariantError("N(P) != V + U");
  if (r.n_delta_p_minus_x != r.u + r.i) throw InvariantError("N(P\\x) != U + I");
  const std::uint64_t gap = r.v > r.i ? r.v - r.i : r.i - r.v;
  if (r.delta != gap) throw InvariantError("delta != |V - I|");
  if (r.delta > r.v + r.i) throw InvariantError("delta > V + I");
  return r;
}

}  // namespace emptytri
