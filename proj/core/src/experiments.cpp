#include "emptytri/experiments.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "emptytri/errors.hpp"
#include "emptytri/extremal.hpp"
#include "emptytri/incidence_graph.hpp"
#include "emptytri/io.hpp"
#include "emptytri/realizability.hpp"

namespace emptytri {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

ChainClosedForms chain_closed_forms(std::uint64_t L) {
  return ChainClosedForms{3 * binomial(L, 2) + 3 * L * L, L * L * L,
                          3 * binomial(L, 3) + 6 * L * binomial(L, 2), binomial(3 * L, 3)};
}

double loglog_slope(std::span<const ScalingRow> rows) {
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    if (r.delta == 0 || r.v == 0) continue;
    xs.push_back(std::log(static_cast<double>(r.v)));
    ys.push_back(std::log(static_cast<double>(r.delta)));
  }
  if (xs.size() < 2) return 0.0;
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxy += (xs[k] - mx) * (ys[k] - my);
    sxx += (xs[k] - mx) * (xs[k] - mx);
  }
  return sxy / sxx;
}

ScalingReport run_scaling(std::uint32_t L_min, std::uint32_t L_max, std::uint32_t brute_up_to) {
  if (L_min < 1 || L_max < L_min || L_max > 40) {
    throw InputError("scaling range must satisfy 1 <= L_min <= L_max <= 40");
  }
  ScalingReport report;
  for (std::uint32_t L = L_min; L <= L_max; ++L) {
    const auto instance = gen_lower_bound(L);
    const auto counts = counts_report(instance.points, instance.apex,
                                      L <= brute_up_to ? Enumerator::Brute : Enumerator::Fast);
    ScalingRow row;
    row.L = L;
    row.n = static_cast<std::uint32_t>(instance.points.size());
    row.v = counts.v;
    row.i = counts.i;
    row.u = counts.u;
    row.delta = counts.delta;
    row.n_delta_p_minus_x = counts.n_delta_p_minus_x;
    row.closed = chain_closed_forms(L);
    row.ratio = static_cast<double>(row.delta) / std::pow(static_cast<double>(row.v), 1.5);

    const auto fail = [L](const std::string& what) {
      throw InvariantError("L=" + std::to_string(L) + ": " + what);
    };
    if (row.closed.v != binomial(3 * L, 2)) fail("3C(L,2)+3L^2 != C(3L,2)");
    if (row.v != row.closed.v) fail("V differs from closed form");
    if (row.i != row.closed.i) fail("I differs from L^3");
    if (row.u != row.closed.u) fail("U differs from closed form");
    if (row.n_delta_p_minus_x != row.closed.n_minus_x) fail("N(P\\x) differs from C(3L,3)");
    if (row.delta != (row.v > row.i ? row.v - row.i : row.i - row.v)) fail("delta != |V - I|");
    report.rows.push_back(row);
  }
  report.fit_from = L_min + (L_max - L_min) / 2;
  report.fit_to = L_max;
  const auto first = report.rows.begin() + (report.fit_from - L_min);
  report.slope = loglog_slope(std::span<const ScalingRow>(&*first, report.rows.end() - first));
  return report;
}

std::vector<GeneratedInstance> random_corpus(const SweepOptions& options) {
  if (options.n_min < 4 || options.n_max < options.n_min) {
    throw InputError("sweep needs 4 <= n_min <= n_max");
  }
  std::vector<GeneratedInstance> corpus;
  const std::uint32_t width = options.n_max - options.n_min + 1;
  for (std::uint32_t k = 0; k < options.num_sets; ++k) {
    corpus.push_back(gen_random(options.n_min + k % width, options.seed * 1'000'003ULL + k));
  }
  return corpus;
}

std::vector<GeneratedInstance> family_corpus(bool quick) {
  std::vector<GeneratedInstance> corpus;
  corpus.push_back(gen_figure2());
  for (std::uint32_t L = 1; L <= (quick ? 3u : 8u); ++L) corpus.push_back(gen_lower_bound(L));
  for (std::uint32_t r = 1; r <= (quick ? 2u : 4u); ++r) {
    for (std::uint32_t s = r; s <= (quick ? 2u : 4u); ++s) corpus.push_back(gen_bipartite(r, s));
  }
  for (std::uint32_t n = 4; n <= (quick ? 6u : 12u); ++n) corpus.push_back(gen_convex(n));
  return corpus;
}

namespace {

std::string describe(const GeneratedInstance& instance) {
  std::string s(family_name(instance.family));
  for (const auto& [k, v] : instance.parameters) s += " " + k + "=" + std::to_string(v);
  return s;
}

class Sweeper {
 public:
  explicit Sweeper(bool inject_fault) : inject_fault_(inject_fault) {}

  // Returns false once a violation is recorded.
  bool check(const GeneratedInstance& instance, Index apex, const EmptyTriangleSet& empty) {
    ++report_.apex_checks;
    instance_ = &instance;
    apex_ = apex;
    try {
      check_apex(instance.points, apex, empty);
    } catch (const std::exception& e) {
      fail("exception", e.what());
    }
    return report_.violations.empty();
  }

  SweepReport& report() { return report_; }

 private:
  void check_apex(const PointSet& points, Index apex, const EmptyTriangleSet& empty) {
    const auto counts = counts_report(points, apex);
    const auto gp = build_incidence_graph(points, apex, empty);
    const auto& g = gp.graph;

    if (g.vertex_count() != counts.v) return fail("vertex-count", "|V(G)| != V_P(x)");
    std::uint64_t graph_triangles = count_triangles(g);
    if (inject_fault_) {
      inject_fault_ = false;
      ++graph_triangles;
    }
    if (graph_triangles != counts.i) {
      return fail("triangles-equal-interior",
                  "N_K3(G)=" + std::to_string(graph_triangles) + " but I=" + std::to_string(counts.i));
    }
    if (const auto kites = find_kites(g); !kites.empty()) {
      const auto& k = kites.front();
      return fail("kite-free", "kite on edge " + std::to_string(k.shared.first) + "-" +
                                   std::to_string(k.shared.second));
    }
    for (const auto& [a, b] : g.edges()) {
      const auto& ta = gp.labels[a];
      const auto& tb = gp.labels[b];
      std::size_t common = 0;
      for (Index w : ta.vertices()) common += tb.has(w);
      if (common != 2 || !ta.has(apex) || !tb.has(apex)) {
        return fail("shared-edge-through-apex", to_string(ta) + " / " + to_string(tb));
      }
    }
    for (const auto& [a, b, c] : list_triangles(g)) {
      std::set<Index> outer;
      for (Vertex w : {a, b, c}) {
        for (Index p : gp.labels[w].vertices()) {
          if (p != apex) outer.insert(p);
        }
      }
      const std::vector<Index> hull(outer.begin(), outer.end());
      if (hull.size() != 3 ||
          interior_points(points, Triangle::of(hull[0], hull[1], hull[2])) !=
              std::vector<Index>{apex}) {
        return fail("graph-triangle-reassembly", "labels of graph triangle do not tile a "
                                                 "triangle containing only the apex");
      }
    }
    if (counts.v <= kMaxExhaustiveVertices && counts.i > kite_free_max(counts.v)) {
      return fail("kite-free-maximum", "I exceeds the kite-free maximum for V");
    }
    if (const auto verdict = counting_feasibility(g);
        verdict.status == Feasibility::InfeasibleByCounting) {
      return fail("counting-verdict-on-realized-graph", verdict.detail);
    }
    record_shared_edges(interior_triangles(points, apex));
  }

  void record_shared_edges(const std::vector<Triangle>& interior) {
    std::map<std::pair<Index, Index>, std::uint64_t> mult;
    for (const auto& t : interior) {
      ++mult[{t.i, t.j}];
      ++mult[{t.i, t.k}];
      ++mult[{t.j, t.k}];
    }
    std::uint64_t top = 0;
    for (const auto& [e, m] : mult) top = std::max(top, m);
    auto& stats = report_.shared_edges;
    stats.max_edge_multiplicity = std::max(stats.max_edge_multiplicity, top);
    if (top >= 3) {
      ++stats.apexes_with_edge_in_three;
      if (!stats.first_edge_in_three) {
        stats.first_edge_in_three = make_violation("edge-in-three-interior-triangles", "");
      }
    }
    const bool all_shared = std::any_of(interior.begin(), interior.end(), [&](const Triangle& t) {
      return mult[{t.i, t.j}] >= 2 && mult[{t.i, t.k}] >= 2 && mult[{t.j, t.k}] >= 2;
    });
    if (all_shared) {
      ++stats.apexes_with_all_edges_shared;
      if (!stats.first_all_edges_shared) {
        stats.first_all_edges_shared = make_violation("interior-triangle-all-edges-shared", "");
      }
    }
  }

  std::uint64_t kite_free_max(std::uint64_t v) {
    auto it = h_cache_.find(v);
    if (it == h_cache_.end()) {
      it = h_cache_.emplace(v, max_triangles_kite_free(static_cast<std::uint32_t>(v)).h).first;
    }
    return it->second;
  }

  Violation make_violation(const std::string& check, const std::string& message) const {
    return Violation{check, describe(*instance_), apex_, message,
                     points_to_string(instance_->points.points(), instance_header(*instance_))};
  }

  void fail(const std::string& check, const std::string& message) {
    report_.violations.push_back(make_violation(check, message));
  }

  bool inject_fault_;
  SweepReport report_;
  std::map<std::uint64_t, std::uint64_t> h_cache_;
  const GeneratedInstance* instance_ = nullptr;
  Index apex_ = 0;
};

}  // namespace

SweepReport run_property_sweep(std::span<const GeneratedInstance> corpus, bool inject_fault) {
  Sweeper sweeper(inject_fault);
  for (const auto& instance : corpus) {
    ++sweeper.report().instances;
    const auto empty = enumerate_empty_fast(instance.points);
    for (Index x = 0; x < instance.points.size(); ++x) {
      if (!sweeper.check(instance, x, empty)) return sweeper.report();
    }
  }
  return sweeper.report();
}

SweepReport run_property_sweep(const SweepOptions& options) {
  auto corpus = random_corpus(options);
  if (options.include_families) {
    auto families = family_corpus(options.quick);
    corpus.insert(corpus.end(), std::make_move_iterator(families.begin()),
                  std::make_move_iterator(families.end()));
  }
  return run_property_sweep(corpus, options.inject_fault);
}

DensityReport random_density(std::span<const GeneratedInstance> instances) {
  DensityReport report;
  for (const auto& instance : instances) {
    if (instance.family != Family::Random) {
      throw InputError("density check needs random-family instances, got " +
                       std::string(family_name(instance.family)));
    }
    const auto n = static_cast<double>(instance.points.size());
    report.n = static_cast<std::uint32_t>(instance.points.size());
    report.ratios.push_back(static_cast<double>(enumerate_empty_fast(instance.points).size()) /
                            (n * n));
  }
  if (report.ratios.empty()) return report;
  const double k = static_cast<double>(report.ratios.size());
  report.mean = std::accumulate(report.ratios.begin(), report.ratios.end(), 0.0) / k;
  if (report.ratios.size() > 1) {
    double ss = 0.0;
    for (double r : report.ratios) ss += (r - report.mean) * (r - report.mean);
    report.stddev = std::sqrt(ss / (k - 1.0));
  }
  return report;
}

DensityReport run_random_density(std::uint32_t n, std::uint32_t trials, std::uint64_t seed) {
  if (n < 50) throw InputError("density experiment needs n >= 50");
  std::vector<GeneratedInstance> instances;
  for (std::uint32_t t = 0; t < trials; ++t) instances.push_back(gen_random(n, seed + t));
  return random_density(instances);
}

}  // namespace emptytri
