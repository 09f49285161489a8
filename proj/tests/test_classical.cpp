#include <gtest/gtest.h>

#include <cmath>

#include "qsc/classical.hpp"
#include "qsc/datasets.hpp"
#include "support.hpp"

using namespace qsc;

namespace {

PointSet line(std::initializer_list<double> xs) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back({x});
  return PointSet(std::move(pts));
}

}  // namespace

TEST(KMeans, SeparableLine) {
  const auto a = kmeans(line({0, 1, 10, 11}), 2);
  EXPECT_TRUE(qsc::testing::same_partition(a.labels, {0, 0, 1, 1}));
  std::vector<double> c{a.centroids[0][0], a.centroids[1][0]};
  std::sort(c.begin(), c.end());
  EXPECT_DOUBLE_EQ(c[0], 0.5);
  EXPECT_DOUBLE_EQ(c[1], 10.5);
  EXPECT_DOUBLE_EQ(a.objective, 1.0);
  EXPECT_TRUE(a.converged);
}

TEST(KMeans, KEqualsNAndKEqualsOne) {
  const auto ps = line({0, 3, 4, 9});
  EXPECT_DOUBLE_EQ(kmeans(ps, 4).objective, 0.0);
  const auto one = kmeans(ps, 1);
  EXPECT_DOUBLE_EQ(one.centroids[0][0], 4.0);
  EXPECT_THROW(kmeans(ps, 0), InvalidArgument);
  EXPECT_THROW(kmeans(ps, 5), InvalidArgument);
}

TEST(KMeans, ObjectiveNonIncreasingAndEveryClusterUsed) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto lp = make_blobs(seed, {{0, 0}, {3, 0}, {0, 3}, {3, 3}}, 6, 1.2);
    KMeansOptions opt;
    opt.seed = seed;
    const auto a = kmeans(lp.points, 4, opt);
    for (std::size_t i = 1; i < a.objective_history.size(); ++i)
      EXPECT_LE(a.objective_history[i], a.objective_history[i - 1] + 1e-12);
    std::vector<bool> used(4, false);
    for (auto l : a.labels) used[l] = true;
    for (bool u : used) EXPECT_TRUE(u);
    EXPECT_NEAR(a.objective, detail::kmeans_objective(lp.points, a.labels, a.centroids), 1e-12);
  }
}

TEST(KMeans, EmptyClusterIsReseeded) {
  // Both initial centroids sit left of every point, so the second cluster starts empty.
  KMeansOptions opt;
  opt.initial_centroids = std::vector<Point>{{-10.0}, {-20.0}};
  const auto a = kmeans(line({0, 1, 10, 11}), 2, opt);
  EXPECT_GE(a.reseeds, 1u);
  EXPECT_TRUE(qsc::testing::same_partition(a.labels, {0, 0, 1, 1}));
}

TEST(KMeans, DeterministicForSeed) {
  const auto lp = make_blobs(5, {{0, 0}, {2, 2}, {4, 0}}, 7, 0.9);
  KMeansOptions opt;
  opt.seed = 42;
  EXPECT_EQ(kmeans(lp.points, 3, opt).labels, kmeans(lp.points, 3, opt).labels);
}

TEST(Eigengap, Examples) {
  EXPECT_EQ(eigengap_select({0, 0.01, 0.02, 5, 5.1}, 10), 3u);
  EXPECT_EQ(eigengap_select({2, 2, 2, 2}, 10), 1u);
  EXPECT_EQ(eigengap_select({0, 0, 3}, 10), 2u);
  // k_max caps the search (inclusive).
  EXPECT_EQ(eigengap_select({0, 0.01, 0.02, 5, 5.1}, 2), 1u);
  EXPECT_EQ(eigengap_select({0, 0.01, 0.02, 5, 5.1}, 3), 3u);
}

TEST(Spectral, DisjointCliquesSplitPerfectly) {
  DenseMatrix w(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (i != j && (i < 3) == (j < 3)) w(i, j) = 1.0;
  const auto g = SimilarityGraph::from_weights(w);
  for (auto v : {SpectralVariant::unnormalized, SpectralVariant::normalized, SpectralVariant::row_normalized})
    EXPECT_TRUE(qsc::testing::same_partition(spectral_cluster(g, 2, v).labels, {0, 0, 0, 1, 1, 1}));
}

TEST(Spectral, TwoBlobsGiveAdjustedRandOne) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const double spacing = 6.0;
    const auto lp = make_blobs(seed, {{0, 0}, {spacing, 0}}, 10, 0.5);
    const auto g = build_full_graph(lp.points, spacing / 3.0, GaussianNorm::squared);
    const auto a = spectral_cluster(g, 2, SpectralVariant::normalized);
    EXPECT_DOUBLE_EQ(adjusted_rand_index(a.labels, lp.labels), 1.0) << "seed " << seed;
  }
}

TEST(Spectral, RecoversComponentsOnRandomGraphs) {
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    const std::size_t k = 2 + static_cast<std::size_t>(t % 3);
    const auto cg = qsc::testing::random_component_graph(rng, k);
    const auto a = spectral_cluster(cg.graph, k, SpectralVariant::unnormalized);
    EXPECT_TRUE(qsc::testing::same_partition(a.labels, cg.component)) << "trial " << t;
  }
}

TEST(Spectral, RejectsKBelowTwo) {
  DenseMatrix w{{0.0, 1.0}, {1.0, 0.0}};
  EXPECT_THROW(spectral_cluster(SimilarityGraph::from_weights(w), 1, SpectralVariant::normalized), InvalidArgument);
}

TEST(Indicator, VectorAndPadding) {
  const IndicatorVector y({1, 3}, 4, "a");
  const auto v = y.vector();
  EXPECT_TRUE(v.is_normalized());
  EXPECT_NEAR(std::real(v[1]), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(v[0], cplx(0.0));
  EXPECT_EQ(y.vector(8).dim(), 8u);
  EXPECT_THROW(IndicatorVector({}, 4), InvalidArgument);
  EXPECT_THROW(IndicatorVector({4}, 4), InvalidArgument);
  EXPECT_EQ(indicators_from_labels({0, 1, 0, 1, 1}, 2)[1].members(), (std::set<std::size_t>{1, 3, 4}));
}

TEST(ProjectorTarget, Examples) {
  Rng rng(32);
  const auto y = random_unit_vector(rng, 4);
  const auto full = projector_target(DenseMatrix::diagonal({1.0, 2.0, 3.0, 4.0}), y);
  EXPECT_LE(max_abs_diff(full.target, y), 1e-12);
  EXPECT_NEAR(full.norm, 1.0, 1e-12);
  EXPECT_THROW(projector_target(DenseMatrix::diagonal({0.0, 1.0}), ComplexVector{1.0, 0.0}), DegenerateError);
}

TEST(ProjectorTarget, MatchesBruteForceAndIsIdempotent) {
  Rng rng(33);
  const auto h = random_psd(rng, 16, 6);
  const auto y = random_unit_vector(rng, 16);
  const auto eig = hermitian_eig(h);
  ComplexVector brute(16);
  for (std::size_t j = 10; j < 16; ++j) {
    const auto v = eig.vectors.column(j);
    brute += v.dot(y) * v;
  }
  const auto t = projector_target(h, y);
  EXPECT_EQ(t.rank, 6u);
  EXPECT_NEAR(t.norm, brute.norm(), 1e-10);
  EXPECT_LE(max_abs_diff(t.target, brute.normalized()), 1e-10);
  const auto p = range_projector(h);
  EXPECT_LE(max_abs_diff(p * (p * y), p * y), 1e-12);
}

TEST(TraceObjective, Examples) {
  Rng rng(34);
  const auto v = random_orthonormal(rng, 8, 3);
  EXPECT_NEAR(trace_objective(v, v), 3.0, 1e-12);
  const auto basis = random_orthonormal(rng, 8, 8);
  DenseMatrix vv(8, 3), yy(8, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    vv.set_column(j, basis.column(j));
    yy.set_column(j, basis.column(j + 3));
  }
  EXPECT_NEAR(trace_objective(yy, vv), 0.0, 1e-12);
}

TEST(TraceObjective, FrobeniusIdentity) {
  Rng rng(35);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 6 + static_cast<std::size_t>(t % 8), k = 1 + static_cast<std::size_t>(t % 4);
    const auto v = random_orthonormal(rng, n, k, t % 2 == 1);
    const auto y = random_orthonormal(rng, n, k, t % 2 == 1);
    const double lhs = std::pow((v * v.adjoint() - y * y.adjoint()).frobenius_norm(), 2);
    EXPECT_NEAR(lhs, 2.0 * static_cast<double>(k) - 2.0 * trace_objective(y, v), 1e-10);
  }
}

TEST(TraceObjective, IndicatorOverload) {
  const std::vector<IndicatorVector> ys{{{0, 1}, 4}, {{2, 3}, 4}};
  DenseMatrix v(4, 2);
  v.set_column(0, ys[0].vector());
  v.set_column(1, ys[1].vector());
  EXPECT_NEAR(trace_objective(ys, v), 2.0, 1e-12);
}

TEST(RandIndex, Examples) {
  EXPECT_DOUBLE_EQ(rand_index({0, 0, 1, 1}, {1, 1, 0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(adjusted_rand_index({0, 0, 1, 1}, {1, 1, 0, 0}), 1.0);
  EXPECT_LT(adjusted_rand_index({0, 0, 1, 1}, {0, 1, 0, 1}), 0.0 + 1e-12);
}
