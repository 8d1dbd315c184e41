#pragma once

#include <vector>

#include "emptytri/empty_triangles.hpp"
#include "emptytri/geometry.hpp"
#include "emptytri/graph.hpp"

namespace emptytri {

/// G_P(x): one vertex per empty triangle of P incident on the apex x.
/// Vertex v carries labels[v]; labels are in lexicographic order.
struct IncidenceGraph {
  Graph graph;
  std::vector<Triangle> labels;
  Index apex = 0;
};

/// Whether T1 and T2 are adjacent in G_P(x).
///
/// Two distinct triangles through x sharing an edge share exactly one other
/// vertex a, and the shared edge is (x, a). They are adjacent iff their
/// third vertices lie strictly on opposite sides of line (x, a) and the two
/// angles at x sum to more than 180 degrees. Throws InputError if T1 == T2
/// or either triangle misses x; emptiness is the caller's responsibility.
bool edge_predicate(const PointSet& points, Index apex, const Triangle& t1, const Triangle& t2);

/// Builds G_P(x) from the empty triangles of P. Throws InputError for
/// n < 3 or apex out of range.
IncidenceGraph build_incidence_graph(const PointSet& points, Index apex,
                                     Enumerator enumerator = Enumerator::Fast);

/// Same, reusing an already enumerated empty-triangle set of `points`.
IncidenceGraph build_incidence_graph(const PointSet& points, Index apex,
                                     const EmptyTriangleSet& empty);

}  // namespace emptytri
