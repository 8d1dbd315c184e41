#include "emptytri/incidence_graph.hpp"

#include <algorithm>

#include "emptytri/errors.hpp"

namespace emptytri {

namespace {

// The two vertices of t other than apex.
std::array<Index, 2> others(const Triangle& t, Index apex) {
  std::array<Index, 2> out{};
  std::size_t n = 0;
  for (Index v : t.vertices()) {
    if (v != apex) out[n++] = v;
  }
  return out;
}

}  // namespace

bool edge_predicate(const PointSet& points, Index apex, const Triangle& t1, const Triangle& t2) {
  if (t1 == t2) throw InputError("edge_predicate: identical triangles " + to_string(t1));
  if (!t1.has(apex) || !t2.has(apex)) {
    throw InputError("edge_predicate: triangle not incident on apex " + std::to_string(apex));
  }
  const auto [p1, q1] = others(t1, apex);
  const auto [p2, q2] = others(t2, apex);

  Index shared = 0, b = 0, c = 0;
  if (p1 == p2) {
    shared = p1, b = q1, c = q2;
  } else if (p1 == q2) {
    shared = p1, b = q1, c = p2;
  } else if (q1 == p2) {
    shared = q1, b = p1, c = q2;
  } else if (q1 == q2) {
    shared = q1, b = p1, c = p2;
  } else {
    return false;  // only x in common: no shared edge
  }

  const Point& x = points[apex];
  const Point& a = points[shared];
  if (orient_sign(x, a, points[b]) * orient_sign(x, a, points[c]) >= 0) {
    return false;  // same side of (x, a): interiors overlap
  }
  return angle_sum_exceeds_pi(x, a, points[b], points[c]);
}

IncidenceGraph build_incidence_graph(const PointSet& points, Index apex,
                                     Enumerator enumerator) {
  if (points.size() < 3) throw InputError("need at least 3 points");
  if (apex >= points.size()) {
    throw InputError("apex " + std::to_string(apex) + " out of range for " +
                     std::to_string(points.size()) + " points");
  }
  return build_incidence_graph(points, apex,
                               enumerator == Enumerator::Fast ? enumerate_empty_fast(points)
                                                              : enumerate_empty_brute(points));
}

IncidenceGraph build_incidence_graph(const PointSet& points, Index apex,
                                     const EmptyTriangleSet& empty) {
  if (apex >= points.size()) {
    throw InputError("apex " + std::to_string(apex) + " out of range for " +
                     std::to_string(points.size()) + " points");
  }
  IncidenceGraph result;
  result.apex = apex;
  for (const auto& t : empty) {
    if (t.has(apex)) result.labels.push_back(t);
  }
  result.graph = Graph(result.labels.size());

  // Adjacent vertices share an edge through x, so bucket by the other
  // endpoint of that edge and only test pairs within a bucket.
  std::vector<std::vector<Vertex>> through(points.size());
  for (Vertex v = 0; v < result.labels.size(); ++v) {
    for (Index w : others(result.labels[v], apex)) through[w].push_back(v);
  }
  for (const auto& bucket : through) {
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      for (std::size_t j = i + 1; j < bucket.size(); ++j) {
        if (edge_predicate(points, apex, result.labels[bucket[i]], result.labels[bucket[j]])) {
          result.graph.add_edge(bucket[i], bucket[j]);
        }
      }
    }
  }
  return result;
}

}  // namespace emptytri
