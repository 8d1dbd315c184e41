#include <gtest/gtest.h>

#include <random>

#include "emptytri/empty_triangles.hpp"
#include "emptytri/errors.hpp"
#include "emptytri/generators.hpp"

using namespace emptytri;

namespace {

const PointSet& figure2() {
  static const PointSet p({{1, 1}, {0, 0}, {4, 0}, {0, 4}});
  return p;
}

// Independent oracle: a triple is empty iff no other point has the same
// strict orientation against all three directed edges.
std::uint64_t count_empty_by_orientation(const PointSet& p) {
  std::uint64_t count = 0;
  const auto n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const int s = orient_sign(p[i], p[j], p[k]);
        bool empty = true;
        for (std::size_t q = 0; q < n && empty; ++q) {
          if (q == i || q == j || q == k) continue;
          empty = !(orient_sign(p[i], p[j], p[q]) == s && orient_sign(p[j], p[k], p[q]) == s &&
                    orient_sign(p[k], p[i], p[q]) == s);
        }
        count += empty;
      }
  return count;
}

}  // namespace

TEST(Triangle, CanonicalOrder) {
  const auto t = Triangle::of(5, 1, 3);
  EXPECT_EQ(t.i, 1u);
  EXPECT_EQ(t.j, 3u);
  EXPECT_EQ(t.k, 5u);
  EXPECT_TRUE(t.has(3));
  EXPECT_FALSE(t.has(2));
  EXPECT_EQ(to_string(t), "1 3 5");
}

TEST(Enumerate, FigureTwoHasThreeEmptyTriangles) {
  const auto brute = enumerate_empty_brute(figure2());
  const auto fast = enumerate_empty_fast(figure2());
  const EmptyTriangleSet expected({Triangle::of(0, 1, 2), Triangle::of(0, 1, 3), Triangle::of(0, 2, 3)});
  EXPECT_EQ(brute, expected);
  EXPECT_EQ(fast, expected);
}

TEST(Enumerate, SmallSets) {
  EXPECT_EQ(enumerate_empty_fast(PointSet(std::vector<Point>{})).size(), 0u);
  EXPECT_EQ(enumerate_empty_fast(PointSet({{0, 0}, {1, 2}})).size(), 0u);
  EXPECT_EQ(enumerate_empty_fast(PointSet({{0, 0}, {1, 2}, {3, 1}})).size(), 1u);
  EXPECT_EQ(enumerate_empty_brute(PointSet({{0, 0}, {1, 2}, {3, 1}})).size(), 1u);
}

TEST(Enumerate, ConvexPositionGivesAllTriples) {
  for (std::uint32_t n = 4; n <= 20; ++n) {
    const auto inst = gen_convex(n);
    const std::size_t all = std::size_t{n} * (n - 1) * (n - 2) / 6;
    EXPECT_EQ(enumerate_empty_fast(inst.points).size(), all) << n;
  }
}

TEST(Enumerate, FastMatchesBruteOnRandomSets) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::uint32_t n = 3 + static_cast<std::uint32_t>(seed % 30);
    const auto inst = gen_random(n, 1000 + seed, seed % 2 ? 64 : kRandomGrid);
    ASSERT_EQ(enumerate_empty_fast(inst.points), enumerate_empty_brute(inst.points))
        << "n=" << n << " seed=" << 1000 + seed;
  }
}

TEST(Enumerate, BruteMatchesOrientationOracleCount) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = gen_random(4 + static_cast<std::uint32_t>(seed % 12), 77 + seed, 100);
    EXPECT_EQ(enumerate_empty_brute(inst.points).size(), count_empty_by_orientation(inst.points));
  }
}

TEST(Enumerate, InvariantUnderRelabelingAndTranslation) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = gen_random(12, seed, 1000);
    std::vector<Point> pts(inst.points.begin(), inst.points.end());
    std::vector<Index> perm(pts.size());
    for (Index i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Point> moved(pts.size());
    for (Index i = 0; i < pts.size(); ++i) moved[perm[i]] = {pts[i].x * 3 - 17, pts[i].y * 3 + 5};
    const auto a = enumerate_empty_fast(inst.points);
    const auto b = enumerate_empty_fast(PointSet(moved));
    ASSERT_EQ(a.size(), b.size());
    for (const auto& t : a) EXPECT_TRUE(b.contains(Triangle::of(perm[t.i], perm[t.j], perm[t.k])));
  }
}

TEST(InteriorPoints, FigureTwo) {
  EXPECT_EQ(interior_points(figure2(), Triangle::of(1, 2, 3)), std::vector<Index>{0});
  EXPECT_TRUE(interior_points(figure2(), Triangle::of(0, 1, 2)).empty());
}

TEST(Counts, FigureTwo) {
  const auto r = counts_report(figure2(), 0, Enumerator::Brute);
  EXPECT_EQ(r.n_delta_p, 3u);
  EXPECT_EQ(r.n_delta_p_minus_x, 1u);
  EXPECT_EQ(r.v, 3u);
  EXPECT_EQ(r.u, 0u);
  EXPECT_EQ(r.i, 1u);
  EXPECT_EQ(r.delta, 2u);
  EXPECT_EQ(counts_report(figure2(), 0, Enumerator::Fast), r);
}

TEST(Counts, HullVertexOfFigureTwo) {
  // Removing a hull vertex leaves three points and one empty triangle.
  const auto r = counts_report(figure2(), 1);
  EXPECT_EQ(r.v, 2u);
  EXPECT_EQ(r.u, 1u);
  EXPECT_EQ(r.i, 0u);
  EXPECT_EQ(r.n_delta_p_minus_x, 1u);
}

TEST(Counts, RejectsBadInput) {
  EXPECT_THROW(counts_report(PointSet({{0, 0}, {1, 2}, {3, 1}}), 0), InputError);
  EXPECT_THROW(counts_report(figure2(), 4), InputError);
}

TEST(Counts, IdentitiesAgainstDirectRemoval) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = gen_random(4 + static_cast<std::uint32_t>(seed % 12), 500 + seed, 200);
    const auto& p = inst.points;
    const auto all = enumerate_empty_brute(p).size();
    for (Index x = 0; x < p.size(); ++x) {
      const auto r = counts_report(p, x);
      EXPECT_EQ(r.n_delta_p, all);
      EXPECT_EQ(r.n_delta_p_minus_x, enumerate_empty_brute(p.without(x)).size());
      EXPECT_EQ(r.v + r.u, r.n_delta_p);
      EXPECT_EQ(r.u + r.i, r.n_delta_p_minus_x);
      EXPECT_EQ(r.delta, r.v > r.i ? r.v - r.i : r.i - r.v);
      EXPECT_LE(r.delta, r.v + r.i);
      EXPECT_EQ(interior_triangles(p, x).size(), r.i);
    }
  }
}

TEST(InteriorTriangles, ContainOnlyTheApex) {
  const auto inst = gen_random(14, 2024, 500);
  for (Index x = 0; x < inst.points.size(); ++x) {
    for (const auto& t : interior_triangles(inst.points, x, Enumerator::Brute)) {
      EXPECT_FALSE(t.has(x));
      EXPECT_EQ(interior_points(inst.points, t), std::vector<Index>{x});
    }
  }
}
