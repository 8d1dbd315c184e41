#include "emptytri/graph.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "emptytri/errors.hpp"

namespace emptytri {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count) {
  for (const auto& [a, b] : edges) {
    if (!add_edge(a, b)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
    }
  }
}

bool Graph::add_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("self-loop at " + std::to_string(a));
  if (a >= adjacency_.size() || b >= adjacency_.size()) {
    throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) + "-" +
                                std::to_string(b));
  }
  auto& na = adjacency_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it != na.end() && *it == b) return false;
  na.insert(it, b);
  auto& nb = adjacency_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  ++edge_count_;
  return true;
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return false;
  const auto& na = adjacency_[a];
  return std::binary_search(na.begin(), na.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex a = 0; a < adjacency_.size(); ++a) {
    for (Vertex b : adjacency_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

// Calls f(c) for each common neighbour c > b of the edge (a, b), a < b.
template <typename F>
void for_each_closing_vertex(const Graph& g, Vertex a, Vertex b, F&& f) {
  const auto na = g.neighbors(a);
  const auto nb = g.neighbors(b);
  auto ia = std::upper_bound(na.begin(), na.end(), b);
  auto ib = std::upper_bound(nb.begin(), nb.end(), b);
  while (ia != na.end() && ib != nb.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      f(*ia);
      ++ia;
      ++ib;
    }
  }
}

}  // namespace

std::vector<std::array<Vertex, 3>> list_triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (const auto& [a, b] : g.edges()) {
    for_each_closing_vertex(g, a, b, [&](Vertex c) { out.push_back({a, b, c}); });
  }
  return out;
}

std::uint64_t count_triangles(const Graph& g) {
  std::uint64_t total = 0;
  for (const auto& [a, b] : g.edges()) {
    for_each_closing_vertex(g, a, b, [&](Vertex) { ++total; });
  }
  return total;
}

std::map<Edge, std::uint32_t> edge_triangle_multiplicity(const Graph& g) {
  std::map<Edge, std::uint32_t> mult;
  for (const auto& e : g.edges()) mult.emplace(e, 0);
  for (const auto& [a, b, c] : list_triangles(g)) {
    ++mult[{a, b}];
    ++mult[{a, c}];
    ++mult[{b, c}];
  }
  return mult;
}

std::vector<Kite> find_kites(const Graph& g) {
  std::vector<Kite> kites;
  std::vector<Vertex> apexes;
  for (const auto& [a, b] : g.edges()) {
    apexes.clear();
    const auto na = g.neighbors(a);
    const auto nb = g.neighbors(b);
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                          std::back_inserter(apexes));
    for (std::size_t i = 0; i < apexes.size(); ++i) {
      for (std::size_t j = i + 1; j < apexes.size(); ++j) {
        kites.push_back(Kite{{a, b}, apexes[i], apexes[j]});
      }
    }
  }
  return kites;
}

namespace {

class BipartiteSearch {
 public:
  BipartiteSearch(const Graph& g, std::size_t r, std::size_t s, std::uint64_t budget)
      : g_(g), r_(r), s_(s), budget_(budget) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) >= s) candidates_.push_back(v);
    }
  }

  std::optional<BipartiteWitness> run() {
    std::vector<Vertex> common;
    for (std::size_t idx = 0; idx < candidates_.size(); ++idx) {
      const Vertex v = candidates_[idx];
      const auto nv = g_.neighbors(v);
      common.assign(nv.begin(), nv.end());
      left_.assign(1, v);
      if (extend(idx + 1, common)) return witness_;
    }
    return std::nullopt;
  }

 private:
  bool extend(std::size_t next, const std::vector<Vertex>& common) {
    if (++nodes_ > budget_) {
      throw ResourceError("K_{" + std::to_string(r_) + "," + std::to_string(s_) +
                          "} search exceeded budget of " + std::to_string(budget_) + " nodes");
    }
    if (common.size() < s_) return false;
    if (left_.size() == r_) {
      witness_ = BipartiteWitness{left_, {common.begin(), common.begin() + s_}};
      return true;
    }
    std::vector<Vertex> narrowed;
    for (std::size_t idx = next; idx < candidates_.size(); ++idx) {
      const Vertex v = candidates_[idx];
      // v must be adjacent to every right vertex, so it cannot itself be one.
      const auto nv = g_.neighbors(v);
      narrowed.clear();
      std::set_intersection(common.begin(), common.end(), nv.begin(), nv.end(),
                            std::back_inserter(narrowed));
      left_.push_back(v);
      if (extend(idx + 1, narrowed)) return true;
      left_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t r_;
  std::size_t s_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> candidates_;
  std::vector<Vertex> left_;
  BipartiteWitness witness_;
};

}  // namespace

std::optional<BipartiteWitness> contains_complete_bipartite(const Graph& g, std::size_t r,
                                                            std::size_t s,
                                                            std::uint64_t budget) {
  if (r == 0 || r > s) {
    throw std::invalid_argument("contains_complete_bipartite requires 1 <= r <= s");
  }
  if (r + s > g.vertex_count()) return std::nullopt;
  return BipartiteSearch(g, r, s, budget).run();
}

}  // namespace emptytri
