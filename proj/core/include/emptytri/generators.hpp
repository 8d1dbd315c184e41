#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emptytri/empty_triangles.hpp"
#include "emptytri/geometry.hpp"

namespace emptytri {

enum class Family { LowerBound, Bipartite, Random, Convex, Figure2 };

std::string_view family_name(Family f);
/// Inverse of family_name; throws InputError for unknown names.
Family parse_family(std::string_view name);

struct GeneratedInstance {
  PointSet points;
  Index apex = 0;
  std::optional<Index> apex2;  // x' for the bipartite family
  Family family = Family::Random;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
};

/// Default side length of the random-point grid.
inline constexpr std::int64_t kRandomGrid = std::int64_t{1} << 16;

/// Three convex chains of L points on short arcs (half-width 10 degrees) of a
/// circle, centred 120 degrees apart, with the apex at the centre. n = 3L + 1.
/// Point indices: apex 0, then chain A, B, C in angular order.
///
/// Validated after rounding: every one-per-chain triple contains the apex,
/// no other triple does, the 3L chain points are in convex position, and the
/// apex sees every pair of chain points through an empty triangle. The
/// radius is escalated until validation passes; GeometryError otherwise.
GeneratedInstance gen_lower_bound(std::uint32_t L);

/// x = index 0, x' = index 1, then a_1..a_r above and b_1..b_s below the
/// line xx'. Validated: every xx'a_i and xx'b_j is empty and each such pair
/// is adjacent in G_P(x).
GeneratedInstance gen_bipartite(std::uint32_t r, std::uint32_t s);

/// n points uniform on the [0, grid) x [0, grid) lattice, rejecting any
/// sample that duplicates a point or is collinear with two earlier points.
/// Deterministic in (n, seed, grid) on every platform.
GeneratedInstance gen_random(std::uint32_t n, std::uint64_t seed,
                             std::int64_t grid = kRandomGrid);

/// n points in strictly convex position on a rounded circle; apex 0.
GeneratedInstance gen_convex(std::uint32_t n);

/// x = (1,1) inside a = (0,0), b = (4,0), c = (0,4); apex 0.
GeneratedInstance gen_figure2();

/// Indices of the three chains of a gen_lower_bound(L) instance.
std::vector<std::vector<Index>> lower_bound_chains(std::uint32_t L);

}  // namespace emptytri
