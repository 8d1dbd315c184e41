#include "emptytri/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "emptytri/errors.hpp"
#include "emptytri/incidence_graph.hpp"

namespace emptytri {

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

Point on_circle(double radius, double angle_rad) {
  return Point{static_cast<Coord>(std::llround(radius * std::cos(angle_rad))),
               static_cast<Coord>(std::llround(radius * std::sin(angle_rad)))};
}

// Number of vertices of the strict convex hull (Andrew's monotone chain).
std::size_t hull_size(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  if (pts.size() < 3) return pts.size();
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) != Orientation::CounterClockwise) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && orient(hull[k - 2], hull[k - 1], pts[i]) != Orientation::CounterClockwise)
      --k;
    hull[k++] = pts[i];
  }
  return k - 1;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection keeps the draw unbiased and independent of the standard
  // library's distribution implementation.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v = 0;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

// Why a lower-bound candidate was rejected, or empty if it passed.
std::string check_lower_bound(const PointSet& points, std::uint32_t L) {
  const auto chains = lower_bound_chains(L);
  std::vector<int> chain_of(points.size(), -1);
  for (int c = 0; c < 3; ++c) {
    for (Index v : chains[c]) chain_of[v] = c;
  }
  std::vector<Point> ring(points.begin() + 1, points.end());
  if (hull_size(ring) != ring.size()) return "chain points not in convex position";

  const Point& x = points[0];
  const auto n = static_cast<Index>(points.size());
  for (Index p = 1; p < n; ++p) {
    for (Index q = p + 1; q < n; ++q) {
      for (Index w = 1; w < n; ++w) {
        if (w == p || w == q) continue;
        if (point_in_triangle(x, points[p], points[q], points[w]) == Containment::Inside) {
          return "triangle x," + std::to_string(p) + "," + std::to_string(q) + " not empty";
        }
      }
      for (Index w = q + 1; w < n; ++w) {
        const bool one_per_chain = chain_of[p] != chain_of[q] && chain_of[q] != chain_of[w] &&
                                   chain_of[p] != chain_of[w];
        const bool holds_x =
            point_in_triangle(points[p], points[q], points[w], x) == Containment::Inside;
        if (holds_x != one_per_chain) {
          return "triple " + std::to_string(p) + "," + std::to_string(q) + "," +
                 std::to_string(w) + (holds_x ? " contains" : " misses") + " the apex";
        }
      }
    }
  }
  return {};
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::LowerBound: return "lower-bound";
    case Family::Bipartite: return "bipartite";
    case Family::Random: return "random";
    case Family::Convex: return "convex";
    case Family::Figure2: return "figure2";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::LowerBound, Family::Bipartite, Family::Random, Family::Convex,
                   Family::Figure2}) {
    if (family_name(f) == name) return f;
  }
  throw InputError("unknown family '" + std::string(name) + "'");
}

std::vector<std::vector<Index>> lower_bound_chains(std::uint32_t L) {
  std::vector<std::vector<Index>> chains(3);
  for (std::uint32_t c = 0; c < 3; ++c) {
    for (std::uint32_t k = 0; k < L; ++k) chains[c].push_back(1 + c * L + k);
  }
  return chains;
}

GeneratedInstance gen_lower_bound(std::uint32_t L) {
  if (L < 1) throw InputError("lower-bound family needs L >= 1");
  constexpr double kHalfWidth = 10.0;
  constexpr std::array<double, 3> kCentres{90.0, 210.0, 330.0};
  constexpr std::array<Point, 5> kApexNudges{Point{0, 0}, Point{1, 0}, Point{0, 1},
                                             Point{-1, 0}, Point{0, -1}};

  std::string last_failure = "no radius tried";
  for (double radius = 1 << 12; radius < static_cast<double>(kCoordinateBound); radius *= 2) {
    std::vector<Point> chain_points;
    for (double centre : kCentres) {
      for (std::uint32_t k = 0; k < L; ++k) {
        const double offset = L == 1 ? 0.0 : -kHalfWidth + 2.0 * kHalfWidth * k / (L - 1);
        chain_points.push_back(on_circle(radius, (centre + offset) * kDegree));
      }
    }
    for (const auto& nudge : kApexNudges) {
      std::vector<Point> pts{nudge};
      pts.insert(pts.end(), chain_points.begin(), chain_points.end());
      const auto report = validate_general_position(pts);
      if (!report.valid()) {
        last_failure = report.describe(pts);
        continue;
      }
      PointSet points(std::move(pts));
      last_failure = check_lower_bound(points, L);
      if (last_failure.empty()) {
        return GeneratedInstance{std::move(points), 0, std::nullopt, Family::LowerBound,
                                 {{"L", L}}};
      }
    }
  }
  throw GeometryError("lower-bound L=" + std::to_string(L) + ": " + last_failure);
}

GeneratedInstance gen_bipartite(std::uint32_t r, std::uint32_t s) {
  if (r < 1 || s < 1) throw InputError("bipartite family needs r, s >= 1");
  std::string last_failure = "no radius tried";
  for (double radius = 1 << 10; radius < static_cast<double>(kCoordinateBound); radius *= 2) {
    std::vector<Point> pts{{0, 0}, {static_cast<Coord>(radius / 4), 0}};
    // Both chains open away from x'; the b chain is offset so no a_i, b_j
    // pair is mirror-symmetric about the line xx'.
    for (std::uint32_t i = 0; i < r; ++i) {
      const double deg = r == 1 ? 135.0 : 120.0 + 30.0 * i / (r - 1);
      pts.push_back(on_circle(radius, deg * kDegree));
    }
    for (std::uint32_t j = 0; j < s; ++j) {
      const double deg = s == 1 ? 137.0 : 121.0 + 28.0 * j / (s - 1);
      pts.push_back(on_circle(radius, -deg * kDegree));
    }
    const auto report = validate_general_position(pts);
    if (!report.valid()) {
      last_failure = report.describe(pts);
      continue;
    }
    PointSet points(std::move(pts));
    last_failure.clear();
    const auto apex_edge = [](Index v) { return Triangle::of(0, 1, v); };
    for (Index v = 2; v < points.size() && last_failure.empty(); ++v) {
      if (!interior_points(points, apex_edge(v)).empty()) {
        last_failure = "triangle x,x'," + std::to_string(v) + " not empty";
      }
    }
    for (Index a = 2; a < 2 + r && last_failure.empty(); ++a) {
      for (Index b = 2 + r; b < 2 + r + s && last_failure.empty(); ++b) {
        if (!edge_predicate(points, 0, apex_edge(a), apex_edge(b))) {
          last_failure = "pair " + std::to_string(a) + "," + std::to_string(b) + " not adjacent";
        }
      }
    }
    if (last_failure.empty()) {
      return GeneratedInstance{std::move(points), 0, Index{1}, Family::Bipartite,
                               {{"r", r}, {"s", s}}};
    }
  }
  throw GeometryError("bipartite r=" + std::to_string(r) + " s=" + std::to_string(s) + ": " +
                      last_failure);
}

GeneratedInstance gen_random(std::uint32_t n, std::uint64_t seed, std::int64_t grid) {
  if (n < 3) throw InputError("random family needs n >= 3");
  if (grid < 2 || grid > 2 * kCoordinateBound) throw InputError("grid size out of range");
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      const Point p{static_cast<Coord>(uniform_below(rng, static_cast<std::uint64_t>(grid))),
                    static_cast<Coord>(uniform_below(rng, static_cast<std::uint64_t>(grid)))};
      placed = true;
      for (std::size_t i = 0; i < pts.size() && placed; ++i) {
        if (pts[i] == p) placed = false;
        for (std::size_t j = i + 1; j < pts.size() && placed; ++j) {
          if (orient(pts[i], pts[j], p) == Orientation::Collinear) placed = false;
        }
      }
      if (placed) pts.push_back(p);
    }
    if (!placed) {
      throw GeometryError("random n=" + std::to_string(n) + ": more than 1000 rejections for point " +
                          std::to_string(pts.size()));
    }
  }
  return GeneratedInstance{PointSet(std::move(pts)), 0, std::nullopt, Family::Random,
                           {{"n", n}, {"seed", static_cast<std::int64_t>(seed)}, {"grid", grid}}};
}

GeneratedInstance gen_convex(std::uint32_t n) {
  if (n < 3) throw InputError("convex family needs n >= 3");
  for (double radius = std::max(64.0, 8.0 * n); radius < static_cast<double>(kCoordinateBound);
       radius *= 2) {
    std::vector<Point> pts;
    for (std::uint32_t k = 0; k < n; ++k) {
      pts.push_back(on_circle(radius, 0.1 + 2.0 * std::numbers::pi * k / n));
    }
    if (!validate_general_position(pts).valid() || hull_size(pts) != n) continue;
    return GeneratedInstance{PointSet(std::move(pts)), 0, std::nullopt, Family::Convex,
                             {{"n", n}}};
  }
  throw GeometryError("convex n=" + std::to_string(n) + ": no radius gave convex position");
}

GeneratedInstance gen_figure2() {
  return GeneratedInstance{PointSet({{1, 1}, {0, 0}, {4, 0}, {0, 4}}), 0, std::nullopt,
                           Family::Figure2, {}};
}

}  // namespace emptytri
