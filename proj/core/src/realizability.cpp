#include "emptytri/realizability.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "emptytri/errors.hpp"
#include "emptytri/extremal.hpp"
#include "emptytri/incidence_graph.hpp"

namespace emptytri {

namespace {

// Colour = (degree, sorted neighbour degrees); equal colours are necessary
// for any isomorphism to map one vertex onto the other.
std::vector<std::vector<std::size_t>> vertex_colours(const Graph& g) {
  std::vector<std::vector<std::size_t>> colours(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto& c = colours[v];
    c.push_back(g.degree(v));
    for (Vertex w : g.neighbors(v)) c.push_back(g.degree(w));
    std::sort(c.begin() + 1, c.end());
  }
  return colours;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& g, const Graph& h)
      : g_(g), h_(h), gc_(vertex_colours(g)), hc_(vertex_colours(h)),
        map_(g.vertex_count(), kUnmapped), used_(h.vertex_count(), false) {
    // Map high-degree vertices first, then keep each next vertex adjacent to
    // the mapped part when possible so adjacency checks prune early.
    std::vector<bool> placed(g.vertex_count(), false);
    for (std::size_t step = 0; step < g.vertex_count(); ++step) {
      Vertex best = kUnmapped;
      std::size_t best_links = 0;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (placed[v]) continue;
        std::size_t links = 0;
        for (Vertex w : g.neighbors(v)) links += placed[w];
        if (best == kUnmapped || links > best_links ||
            (links == best_links && g.degree(v) > g.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Vertex kUnmapped = std::numeric_limits<Vertex>::max();

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex cand = 0; cand < h_.vertex_count(); ++cand) {
      if (used_[cand] || hc_[cand] != gc_[v]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const Vertex u = order_[d];
        consistent = g_.has_edge(u, v) == h_.has_edge(map_[u], cand);
      }
      if (!consistent) continue;
      map_[v] = cand;
      used_[cand] = true;
      if (extend(depth + 1)) return true;
      used_[cand] = false;
      map_[v] = kUnmapped;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::vector<std::size_t>> gc_, hc_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v = 0;
  do {
    v = rng();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

// Random point set in general position for one trial, or none if sampling
// kept producing degenerate points.
std::optional<PointSet> sample_points(std::mt19937_64& rng, std::uint32_t n, std::int64_t grid) {
  std::vector<Point> pts;
  for (int attempts = 0; pts.size() < n; ++attempts) {
    if (attempts > 64 * static_cast<int>(n)) return std::nullopt;
    const Point p{draw(rng, -grid, grid), draw(rng, -grid, grid)};
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      ok = pts[i] != p;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
        ok = orient(pts[i], pts[j], p) != Orientation::Collinear;
      }
    }
    if (ok) pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

struct TrialHit {
  PointSet points;
  Index apex;
};

std::optional<TrialHit> run_trial(const RealizationTask& task, std::uint64_t trial,
                                  std::size_t target_edges) {
  std::mt19937_64 rng(splitmix64(task.seed ^ splitmix64(trial)));
  const auto n = static_cast<std::uint32_t>(draw(rng, 3, task.point_budget));
  auto points = sample_points(rng, n, task.grid_bound);
  if (!points) return std::nullopt;
  const auto empty = enumerate_empty_fast(*points);
  for (Index x = 0; x < points->size(); ++x) {
    if (count_incident(empty, x) != task.target.vertex_count()) continue;
    const auto gp = build_incidence_graph(*points, x, empty);
    if (gp.graph.edge_count() != target_edges) continue;
    if (is_isomorphic(gp.graph, task.target)) return TrialHit{std::move(*points), x};
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() > kMaxIsomorphismVertices || h.vertex_count() > kMaxIsomorphismVertices) {
    throw ResourceError("isomorphism test supports at most " +
                        std::to_string(kMaxIsomorphismVertices) + " vertices");
  }
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
    return std::nullopt;
  }
  auto gc = vertex_colours(g), hc = vertex_colours(h);
  std::sort(gc.begin(), gc.end());
  std::sort(hc.begin(), hc.end());
  if (gc != hc) return std::nullopt;
  return IsomorphismSearch(g, h).run();
}

Graph paley9() { return build_behrend_graph(BehrendSpec(3, {1, 2})); }

std::uint64_t max_triangles_with_edges(std::uint64_t m) {
  std::uint64_t k = 0;
  while ((k + 1) * k / 2 <= m) ++k;  // largest k with C(k, 2) <= m
  const std::uint64_t r = m - k * (k - 1) / 2;
  return k * (k - 1) * (k - 2) / 6 + r * (r - 1) / 2 * (r >= 2);
}

FeasibilityVerdict counting_feasibility(const Graph& target) {
  FeasibilityVerdict verdict;
  verdict.v = target.vertex_count();
  verdict.t = count_triangles(target);
  const auto v = verdict.v, t = verdict.t;

  const auto capacity = max_triangles_with_edges(v);
  if (t > capacity) {
    verdict.status = Feasibility::InfeasibleByCounting;
    verdict.rule = "edge-supply";
    verdict.detail = "edge supply: t=" + std::to_string(t) + " exceeds " +
                     std::to_string(capacity) + ", the most triangles on v=" +
                     std::to_string(v) + " edges";
    return verdict;
  }

  const std::string trace = "3t=" + std::to_string(3 * t) + " vs 2v=" + std::to_string(2 * v);
  if (v > kSharedEdgeRuleMaxVertices) {
    verdict.detail = "not refuted (" + trace + "; shared-edge rule not applied above v=" +
                     std::to_string(kSharedEdgeRuleMaxVertices) + ")";
    return verdict;
  }
  const std::string scope =
      v == 9 && t == 6 ? "" : "; shared-edge rule extrapolated beyond v=9, t=6";
  if (3 * t > 2 * v) {
    verdict.status = Feasibility::InfeasibleByCounting;
    verdict.rule = "3t>2v";
    verdict.detail = "3t>2v: some edge would lie in three interior triangles (" + trace + scope + ")";
  } else if (3 * t == 2 * v && t > 0) {
    verdict.status = Feasibility::InfeasibleByCounting;
    verdict.rule = "3t=2v";
    verdict.detail = "3t=2v: every edge shared by exactly two interior triangles (" + trace +
                     scope + ")";
  } else {
    verdict.detail = "not refuted (" + trace + ")";
  }
  return verdict;
}

std::optional<Realization> search_realization(const RealizationTask& task) {
  if (task.grid_bound < 1 || task.grid_bound > kCoordinateBound) {
    throw InputError("grid bound out of range");
  }
  if (task.point_budget < 3) throw InputError("point budget must be at least 3");
  if (task.trial_budget == 0) throw InputError("trial budget must be positive");
  if (task.target.vertex_count() > kMaxIsomorphismVertices) {
    throw ResourceError("realization targets are limited to " +
                        std::to_string(kMaxIsomorphismVertices) + " vertices");
  }

  const unsigned workers =
      std::max(1u, task.workers ? task.workers : std::thread::hardware_concurrency());
  const std::size_t target_edges = task.target.edge_count();
  std::atomic<std::uint64_t> best_trial{std::numeric_limits<std::uint64_t>::max()};
  std::optional<TrialHit> best_hit;
  std::mutex hit_mutex;

  const auto work = [&](unsigned w) {
    for (std::uint64_t trial = w; trial < task.trial_budget; trial += workers) {
      if (trial > best_trial.load(std::memory_order_relaxed)) return;
      if (auto hit = run_trial(task, trial, target_edges)) {
        std::lock_guard lock(hit_mutex);
        if (trial < best_trial.load()) {
          best_trial.store(trial);
          best_hit = std::move(hit);
        }
        return;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  if (!best_hit) return std::nullopt;

  const auto rebuilt = build_incidence_graph(best_hit->points, best_hit->apex, Enumerator::Brute);
  auto iso = is_isomorphic(rebuilt.graph, task.target);
  if (!iso) throw InvariantError("realization witness failed re-verification");
  return Realization{std::move(best_hit->points), best_hit->apex, best_trial.load(),
                     std::move(*iso)};
}

}  // namespace emptytri
