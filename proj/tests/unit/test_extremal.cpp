#include <gtest/gtest.h>

#include <bit>

#include "emptytri/errors.hpp"
#include "emptytri/extremal.hpp"

using namespace emptytri;

namespace {

// Maximum triangle count over every labeled graph on n vertices whose
// edges each lie in at most one triangle. Adjacency as bitmasks.
std::uint64_t h_by_all_graphs(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::uint64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (mask >> e & 1) {
        adj[pairs[e].first] |= 1u << pairs[e].second;
        adj[pairs[e].second] |= 1u << pairs[e].first;
      }
    }
    std::uint64_t triangles = 0;
    bool kite_free = true;
    for (std::size_t e = 0; e < pairs.size() && kite_free; ++e) {
      if (!(mask >> e & 1)) continue;
      const int common = std::popcount(adj[pairs[e].first] & adj[pairs[e].second]);
      kite_free = common <= 1;
      triangles += common;
    }
    if (kite_free) best = std::max(best, triangles / 3);
  }
  return best;
}

bool ap_free_by_triples(std::uint64_t p, const std::vector<std::uint64_t>& s) {
  for (auto a : s)
    for (auto b : s)
      for (auto c : s)
        if (a != b && b != c && a != c && (a + c) % p == (2 * b) % p) return false;
  return true;
}

}  // namespace

TEST(Primes, Small) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(3));
  EXPECT_FALSE(is_prime(9));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
}

TEST(ApFree, Examples) {
  EXPECT_TRUE(verify_ap_free(3, {1, 2}));
  EXPECT_TRUE(verify_ap_free(7, {0, 1, 3}));
  EXPECT_FALSE(verify_ap_free(7, {0, 1, 2}));
  EXPECT_FALSE(verify_ap_free(7, {0, 3, 6}));
  EXPECT_TRUE(verify_ap_free(5, {}));
}

TEST(ApFree, MatchesTripleOracleOnAllSubsets) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
    for (std::uint64_t mask = 0; mask < (1u << p); ++mask) {
      std::vector<std::uint64_t> s;
      for (std::uint64_t z = 0; z < p; ++z)
        if (mask >> z & 1) s.push_back(z);
      EXPECT_EQ(verify_ap_free(p, s), ap_free_by_triples(p, s)) << "p=" << p << " mask=" << mask;
    }
  }
}

TEST(Behrend, SpecValidation) {
  EXPECT_THROW(BehrendSpec(9, {1}), InputError);
  EXPECT_THROW(BehrendSpec(2, {1}), InputError);
  EXPECT_THROW(BehrendSpec(7, {0, 1, 2}), InputError);
  EXPECT_THROW(BehrendSpec(7, {1, 1}), InputError);
  EXPECT_THROW(BehrendSpec(7, {7}), InputError);
}

TEST(Behrend, GreedySets) {
  EXPECT_EQ(greedy_ap_free(3).residues(), (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(greedy_ap_free(7).residues(), (std::vector<std::uint64_t>{0, 1, 3}));
  for (std::uint64_t p : {5u, 11u, 13u, 31u, 101u}) {
    EXPECT_TRUE(ap_free_by_triples(p, greedy_ap_free(p).residues()));
  }
}

TEST(Behrend, PThreeCounts) {
  const auto g = build_behrend_graph(BehrendSpec(3, {1, 2}));
  EXPECT_EQ(g.vertex_count(), 9u);
  EXPECT_EQ(g.edge_count(), 18u);
  EXPECT_EQ(count_triangles(g), 6u);
  const auto report = verify_unique_triangle(g);
  EXPECT_TRUE(report.unique);
  EXPECT_TRUE(report.kite_free);
}

TEST(Behrend, CountsScaleWithSetSize) {
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    const auto spec = greedy_ap_free(p);
    const auto k = spec.residues().size();
    const auto g = build_behrend_graph(spec);
    EXPECT_EQ(g.vertex_count(), 3 * p);
    EXPECT_EQ(g.edge_count(), 3 * p * k);
    EXPECT_EQ(count_triangles(g), p * k);
    EXPECT_TRUE(verify_unique_triangle(g).unique);
    EXPECT_TRUE(find_kites(g).empty());
  }
}

TEST(Behrend, NonApFreeSetWouldBreakUniqueness) {
  // Built by hand since BehrendSpec refuses {0, 1, 2}: the 3-AP closes an
  // extra triangle.
  const std::uint64_t p = 5;
  Graph g(3 * p);
  for (std::uint64_t z = 0; z < p; ++z)
    for (std::uint64_t a : {0u, 1u, 2u}) {
      const Vertex x = z, y = p + (z + a) % p, w = 2 * p + (z + 2 * a) % p;
      g.add_edge(x, y);
      g.add_edge(y, w);
      g.add_edge(x, w);
    }
  EXPECT_GT(count_triangles(g), p * 3);
  EXPECT_FALSE(verify_unique_triangle(g).unique);
}

TEST(KiteFree, SmallCases) {
  EXPECT_EQ(max_triangles_kite_free(2).h, 0u);
  EXPECT_EQ(max_triangles_kite_free(3).h, 1u);
  EXPECT_EQ(max_triangles_kite_free(4).h, 1u);
  const auto r5 = max_triangles_kite_free(5);
  EXPECT_EQ(r5.h, 2u);
  EXPECT_EQ(r5.witness.vertex_count(), 5u);
  EXPECT_EQ(r5.witness.edge_count(), 6u);  // bowtie
  EXPECT_EQ(count_triangles(r5.witness), 2u);
  EXPECT_TRUE(find_kites(r5.witness).empty());
}

TEST(KiteFree, DegenerateSizes) {
  EXPECT_EQ(max_triangles_kite_free(0).h, 0u);
  EXPECT_EQ(max_triangles_kite_free(1).h, 0u);
  EXPECT_THROW(max_triangles_kite_free(kMaxExhaustiveVertices + 1), ResourceError);
}

TEST(KiteFree, MatchesAllGraphsOracle) {
  for (std::uint32_t n = 0; n <= 7; ++n) {
    EXPECT_EQ(max_triangles_kite_free(n).h, h_by_all_graphs(n)) << n;
  }
}

TEST(KiteFree, KnownValuesAndWitnesses) {
  const std::vector<std::uint64_t> expected{0, 0, 0, 1, 1, 2, 2, 3, 4, 6, 6, 7, 9};
  for (std::uint32_t n = 0; n < expected.size(); ++n) {
    const auto r = max_triangles_kite_free(n);
    EXPECT_EQ(r.h, expected[n]) << n;
    EXPECT_EQ(count_triangles(r.witness), r.h);
    EXPECT_TRUE(find_kites(r.witness).empty());
  }
}

TEST(KiteFree, Monotone) {
  std::uint64_t prev = 0;
  for (std::uint32_t n = 0; n <= 12; ++n) {
    const auto h = max_triangles_kite_free(n).h;
    EXPECT_GE(h, prev);
    EXPECT_LE(h, n * (n > 0 ? n - 1 : 0) / 6);  // edge-disjoint triangles
    prev = h;
  }
}

TEST(KiteFree, Deterministic) {
  EXPECT_EQ(max_triangles_kite_free(9).witness, max_triangles_kite_free(9).witness);
}
