#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emptytri/empty_triangles.hpp"
#include "emptytri/generators.hpp"

namespace emptytri {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Closed-form counts of the three-chain construction with L points per chain.
struct ChainClosedForms {
  std::uint64_t v;          // 3 C(L,2) + 3 L^2, equivalently C(3L,2)
  std::uint64_t i;          // L^3
  std::uint64_t u;          // 3 C(L,3) + 6 L C(L,2)
  std::uint64_t n_minus_x;  // C(3L,3)
};
ChainClosedForms chain_closed_forms(std::uint64_t L);

struct ScalingRow {
  std::uint32_t L = 0;
  std::uint32_t n = 0;
  std::uint64_t v = 0, i = 0, u = 0, delta = 0, n_delta_p_minus_x = 0;
  ChainClosedForms closed{};
  double ratio = 0.0;  // delta / v^(3/2)
};

struct ScalingReport {
  std::vector<ScalingRow> rows;
  std::uint32_t fit_from = 0;  // slope fitted over L in [fit_from, fit_to]
  std::uint32_t fit_to = 0;
  double slope = 0.0;          // least squares of log(delta) on log(v)
};

/// Least-squares slope of log(delta) against log(v) over rows with
/// delta > 0.
double loglog_slope(std::span<const ScalingRow> rows);

/// One row per L in [L_min, L_max] from gen_lower_bound + counts_report,
/// using the brute enumerator for L <= brute_up_to and the fast one above.
/// Every closed form is checked (InvariantError naming the L on mismatch).
/// The slope is fitted over the upper half, L >= L_min + (L_max - L_min) / 2.
ScalingReport run_scaling(std::uint32_t L_min, std::uint32_t L_max, std::uint32_t brute_up_to = 0);

/// Counterexample from a property sweep; `points` is point-file text.
struct Violation {
  std::string check;
  std::string instance;
  Index apex = 0;
  std::string message;
  std::string points;
};

/// Local structure of the triangles containing only x. Recorded, not
/// asserted: an edge shared by three or more of them, or a triangle whose
/// three edges are each shared, occurs in ordinary point sets.
struct SharedEdgeStats {
  std::uint64_t apexes_with_edge_in_three = 0;
  std::uint64_t apexes_with_all_edges_shared = 0;
  std::uint64_t max_edge_multiplicity = 0;
  std::optional<Violation> first_edge_in_three;
  std::optional<Violation> first_all_edges_shared;
};

struct SweepOptions {
  std::uint32_t num_sets = 200;
  std::uint32_t n_min = 4;
  std::uint32_t n_max = 15;
  std::uint64_t seed = 42;
  bool include_families = true;
  bool quick = false;         // fewer family instances
  bool inject_fault = false;  // test hook: corrupt one interior-count comparison
};

struct SweepReport {
  std::uint64_t instances = 0;
  std::uint64_t apex_checks = 0;
  std::vector<Violation> violations;  // sweep stops at the first
  SharedEdgeStats shared_edges;
  bool ok() const noexcept { return violations.empty(); }
};

/// The seeded random sets of a sweep: set k has n_min + k mod (n_max - n_min + 1)
/// points and a seed derived from (seed, k).
std::vector<GeneratedInstance> random_corpus(const SweepOptions& options);

/// Figure-2 witness, lower-bound L = 1..8, bipartite 1 <= r <= s <= 4 and
/// convex n = 4..12 (a reduced list when quick).
std::vector<GeneratedInstance> family_corpus(bool quick = false);

/// For every instance and apex: the count identities, triangles of G_P(x)
/// equal to the interior-triangle count, kite-freeness, vertex count, the
/// shared edge of every adjacency passes through x, every triangle of
/// G_P(x) reassembles into a triangle containing only x, the interior count
/// bounded by the exhaustive kite-free maximum where available, and a
/// counting verdict that never refutes a realized graph.
SweepReport run_property_sweep(const SweepOptions& options);
SweepReport run_property_sweep(std::span<const GeneratedInstance> corpus,
                               bool inject_fault = false);

struct DensityReport {
  std::uint32_t n = 0;
  std::vector<double> ratios;  // N_delta / n^2 per trial
  double mean = 0.0;
  double stddev = 0.0;         // sample standard deviation
};

/// Trials use gen_random(n, seed + trial). Throws InputError for n < 50.
DensityReport run_random_density(std::uint32_t n, std::uint32_t trials, std::uint64_t seed);
/// Throws InputError unless every instance is from the random family.
DensityReport random_density(std::span<const GeneratedInstance> instances);

}  // namespace emptytri
