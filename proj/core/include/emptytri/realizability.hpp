#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "emptytri/empty_triangles.hpp"
#include "emptytri/geometry.hpp"
#include "emptytri/graph.hpp"

namespace emptytri {

inline constexpr std::size_t kMaxIsomorphismVertices = 16;

/// A bijection m with H.has_edge(m[a], m[b]) iff G.has_edge(a, b), or none.
/// Backtracking with degree and neighbourhood-degree refinement. Throws
/// ResourceError if either graph has more than kMaxIsomorphismVertices.
std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g, const Graph& h);

/// The 9-vertex Paley graph, built as the Behrend graph with p = 3 and
/// residues {1, 2}.
Graph paley9();

/// Maximum number of triangles a graph with m edges can contain: the
/// clique-plus-pendant extremal graphs (Kruskal-Katona for triangles).
std::uint64_t max_triangles_with_edges(std::uint64_t m);

enum class Feasibility { InfeasibleByCounting, NotRefuted };

struct FeasibilityVerdict {
  Feasibility status = Feasibility::NotRefuted;
  std::uint64_t v = 0;  // target vertices: empty triangles at x
  std::uint64_t t = 0;  // target triangles: interior triangles at x
  std::string rule;     // "edge-supply", "3t>2v", "3t=2v" or empty
  std::string detail;
};

/// Largest vertex count at which the shared-edge counting rule is applied.
inline constexpr std::uint64_t kSharedEdgeRuleMaxVertices = 9;

/// Necessary counting conditions for a target to be some G_P(x).
///
/// Every edge of a triangle containing only x spans an empty triangle at x,
/// and distinct edges span distinct ones, so those t triangles use at most v
/// distinct edges; t above the triangle capacity of v edges refutes the
/// target for every v. The shared-edge rule (no edge in three interior
/// triangles, hence 3t <= 2v; equality forces a triangle with all three
/// edges shared, which cannot occur) is proved for the Paley graph (v = 9,
/// t = 6) and is applied only up to v = kSharedEdgeRuleMaxVertices: realized
/// graphs with 3t = 2v exist already at v = 21, t = 14.
FeasibilityVerdict counting_feasibility(const Graph& target);

struct RealizationTask {
  Graph target;
  std::int64_t grid_bound = 16;     // coordinates in [-grid_bound, grid_bound]
  std::uint32_t point_budget = 10;  // point sets of 3..point_budget points
  std::uint64_t trial_budget = 100'000;
  std::uint64_t seed = 1;
  unsigned workers = 0;             // 0: hardware concurrency
};

struct Realization {
  PointSet points;
  Index apex = 0;
  std::uint64_t trial = 0;  // trial index that produced it
  std::vector<Vertex> isomorphism;
};

/// Seeded random search for P and x with G_P(x) isomorphic to the target.
/// Trial k draws its own generator from (seed, k); the witness of the
/// lowest successful trial is returned regardless of scheduling, after
/// rebuilding G_P(x) with the brute enumerator and re-checking the
/// isomorphism. None means the budget ran out, not that no realization
/// exists.
std::optional<Realization> search_realization(const RealizationTask& task);

}  // namespace emptytri
