#include <gtest/gtest.h>

#include <cmath>

#include "emptytri/errors.hpp"
#include "emptytri/experiments.hpp"

using namespace emptytri;

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(3, 4), 0u);
  EXPECT_EQ(binomial(120, 3), 280840u);
}

TEST(ClosedForms, AgreeWithEachOther) {
  for (std::uint64_t L = 1; L <= 40; ++L) {
    const auto f = chain_closed_forms(L);
    EXPECT_EQ(f.v, binomial(3 * L, 2));
    EXPECT_EQ(f.v, 3 * binomial(L, 2) + 3 * L * L);
    EXPECT_EQ(f.i, L * L * L);
    EXPECT_EQ(f.n_minus_x, binomial(3 * L, 3));
    EXPECT_EQ(f.u + f.i, f.n_minus_x);
  }
}

TEST(ClosedForms, SmallL) {
  const auto f2 = chain_closed_forms(2);
  EXPECT_EQ(f2.v, 15u);
  EXPECT_EQ(f2.u, 12u);
  EXPECT_EQ(f2.i, 8u);
  const auto f3 = chain_closed_forms(3);
  EXPECT_EQ(f3.v, 36u);
  EXPECT_EQ(f3.u, 57u);
  EXPECT_EQ(f3.i, 27u);
}

TEST(Slope, ExactPowerLaw) {
  std::vector<ScalingRow> rows;
  for (std::uint64_t k = 1; k <= 5; ++k) {
    ScalingRow r;
    r.v = std::uint64_t{1} << (2 * k);
    r.delta = std::uint64_t{1} << (3 * k);
    rows.push_back(r);
  }
  EXPECT_NEAR(loglog_slope(rows), 1.5, 1e-12);
}

TEST(Scaling, SmallRangeChecksEveryRow) {
  const auto report = run_scaling(1, 10, 6);
  ASSERT_EQ(report.rows.size(), 10u);
  for (const auto& r : report.rows) {
    EXPECT_EQ(r.n, 3 * r.L + 1);
    EXPECT_EQ(r.v, r.closed.v);
    EXPECT_EQ(r.i, r.closed.i);
    EXPECT_EQ(r.u, r.closed.u);
    EXPECT_EQ(r.n_delta_p_minus_x, r.closed.n_minus_x);
    EXPECT_EQ(r.delta, r.v > r.i ? r.v - r.i : r.i - r.v);
  }
  EXPECT_EQ(report.fit_from, 5u);
  EXPECT_EQ(report.fit_to, 10u);
}

TEST(Scaling, RejectsBadRange) {
  EXPECT_THROW(run_scaling(0, 3), InputError);
  EXPECT_THROW(run_scaling(5, 3), InputError);
  EXPECT_THROW(run_scaling(1, 41), InputError);
}

TEST(Corpus, RandomCorpusDeterministicAndSized) {
  SweepOptions opt;
  opt.num_sets = 30;
  const auto a = random_corpus(opt), b = random_corpus(opt);
  ASSERT_EQ(a.size(), 30u);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].points, b[k].points);
    EXPECT_GE(a[k].points.size(), opt.n_min);
    EXPECT_LE(a[k].points.size(), opt.n_max);
  }
}

TEST(Corpus, FamilyCorpusQuickIsSmaller) {
  EXPECT_LT(family_corpus(true).size(), family_corpus(false).size());
}

TEST(Sweep, QuickCorpusPasses) {
  SweepOptions opt;
  opt.num_sets = 40;
  opt.quick = true;
  const auto report = run_property_sweep(opt);
  EXPECT_TRUE(report.ok()) << report.violations.front().check << ": "
                           << report.violations.front().message;
  EXPECT_GT(report.apex_checks, report.instances);
}

TEST(Sweep, InjectedFaultIsReported) {
  SweepOptions opt;
  opt.num_sets = 5;
  opt.quick = true;
  opt.inject_fault = true;
  const auto report = run_property_sweep(opt);
  ASSERT_FALSE(report.ok());
  EXPECT_FALSE(report.violations.front().points.empty());
}

TEST(Sweep, SharedEdgeStatisticsRecorded) {
  // The three-chain family with L = 3 puts every cross-chain edge in three
  // interior triangles.
  const std::vector<GeneratedInstance> corpus{gen_lower_bound(3)};
  const auto report = run_property_sweep(corpus);
  EXPECT_TRUE(report.ok());
  EXPECT_GE(report.shared_edges.max_edge_multiplicity, 3u);
  EXPECT_GE(report.shared_edges.apexes_with_edge_in_three, 1u);
}

TEST(Density, SmallRun) {
  const auto r = run_random_density(50, 3, 1);
  ASSERT_EQ(r.ratios.size(), 3u);
  for (double q : r.ratios) {
    EXPECT_GT(q, 0.5);
    EXPECT_LT(q, 3.0);
  }
  EXPECT_THROW(run_random_density(10, 3, 1), InputError);
}

TEST(Density, RejectsNonRandomInstances) {
  const std::vector<GeneratedInstance> corpus{gen_convex(60)};
  EXPECT_THROW(random_density(corpus), InputError);
}
