#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace emptytri {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // first < second

/// Undirected simple graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}
  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// endpoints out of range.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Returns false if the edge already exists. Throws on self-loop/range.
  bool add_edge(Vertex a, Vertex b);
  bool has_edge(Vertex a, Vertex b) const noexcept;
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }
  std::size_t degree(Vertex v) const noexcept { return adjacency_[v].size(); }

  /// All edges as (low, high), lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

constexpr Edge make_edge(Vertex a, Vertex b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Vertex triples (a < b < c) forming 3-cycles, lexicographic.
std::vector<std::array<Vertex, 3>> list_triangles(const Graph& g);

/// Number of 3-cycles, O(E * max degree).
std::uint64_t count_triangles(const Graph& g);

/// Number of 3-cycles through each edge; edges in no triangle are included
/// with multiplicity 0.
std::map<Edge, std::uint32_t> edge_triangle_multiplicity(const Graph& g);

/// A K4 minus an edge: two triangles sharing `shared`, with the two
/// remaining vertices as apexes.
struct Kite {
  Edge shared;
  Vertex apex1;
  Vertex apex2;
  friend bool operator==(const Kite&, const Kite&) = default;
};

/// Every kite, one record per (shared edge, apex pair). Empty iff every edge
/// lies in at most one triangle.
std::vector<Kite> find_kites(const Graph& g);

struct BipartiteWitness {
  std::vector<Vertex> left;   // r vertices
  std::vector<Vertex> right;  // s vertices
};

inline constexpr std::uint64_t kDefaultBipartiteBudget = 50'000'000;

/// Exhaustive search for K_{r,s} as a (not necessarily induced) subgraph.
/// Requires 1 <= r <= s (std::invalid_argument otherwise). Throws
/// ResourceError when more than `budget` search nodes would be expanded.
std::optional<BipartiteWitness> contains_complete_bipartite(
    const Graph& g, std::size_t r, std::size_t s,
    std::uint64_t budget = kDefaultBipartiteBudget);

}  // namespace emptytri
