#include <gtest/gtest.h>

#include <cmath>

#include "qsc/graph.hpp"
#include "support.hpp"

using namespace qsc;

namespace {

PointSet line(std::initializer_list<double> xs) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back({x});
  return PointSet(std::move(pts));
}

bool has_edge(const SimilarityGraph& g, std::size_t i, std::size_t j) { return std::real(g.weights(i, j)) > 0.0; }

void expect_valid(const SimilarityGraph& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(g.weights(i, i), cplx(0.0));
    for (std::size_t j = 0; j < g.size(); ++j) {
      EXPECT_GE(std::real(g.weights(i, j)), 0.0);
      EXPECT_LE(std::abs(g.weights(i, j) - g.weights(j, i)), 1e-12);
    }
  }
}

}  // namespace

TEST(PointSet, Validation) {
  EXPECT_THROW(PointSet(std::vector<Point>{{1.0}}), InvalidArgument);
  EXPECT_THROW(PointSet(std::vector<Point>{{1.0}, {1.0, 2.0}}), InvalidArgument);
  EXPECT_THROW(PointSet(std::vector<Point>{{}, {}}), InvalidArgument);
}

TEST(Gaussian, Examples) {
  EXPECT_DOUBLE_EQ(gaussian_similarity({1.0, 2.0}, {1.0, 2.0}, 0.7), 1.0);
  const double sigma = 1.5;
  EXPECT_NEAR(gaussian_similarity({0.0}, {2 * sigma * sigma}, sigma), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(gaussian_similarity({0.0}, {std::sqrt(2 * sigma * sigma)}, sigma, GaussianNorm::squared), std::exp(-1.0),
              1e-15);
  EXPECT_THROW(gaussian_similarity({0.0}, {1.0}, 0.0), InvalidArgument);
}

TEST(EpsilonGraph, Examples) {
  const auto g = build_epsilon_graph(line({0, 1, 10}), 2.0);
  EXPECT_TRUE(has_edge(g, 0, 1));
  EXPECT_FALSE(has_edge(g, 0, 2));
  EXPECT_FALSE(has_edge(g, 1, 2));

  const auto full = build_epsilon_graph(line({0, 1, 10}), 100.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(has_edge(full, i, j), i != j);

  const auto none = build_epsilon_graph(line({0, 1, 10}), 0.5);
  EXPECT_EQ(none.weights.max_abs(), 0.0);
  EXPECT_THROW(build_epsilon_graph(line({0, 1}), 0.0), InvalidArgument);
}

TEST(EpsilonGraph, VerbatimGreaterIsComplement) {
  const auto ps = line({0, 1, 10, 12});
  const auto a = build_epsilon_graph(ps, 2.0);
  const auto b = build_epsilon_graph(ps, 2.0, EpsilonSense::verbatim_greater);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      EXPECT_NE(has_edge(a, i, j), has_edge(b, i, j));
    }
}

TEST(KnnGraph, Examples) {
  const auto g = build_knn_graph(line({0, 1, 10, 11}), 1);
  EXPECT_TRUE(has_edge(g, 0, 1));
  EXPECT_TRUE(has_edge(g, 2, 3));
  EXPECT_FALSE(has_edge(g, 1, 2));

  const auto ps = line({0, 1, 2});
  const auto tie = build_knn_graph(ps, 1);
  EXPECT_TRUE(has_edge(tie, 0, 1));
  EXPECT_FALSE(has_edge(tie, 1, 2));
  EXPECT_EQ(nearest_neighbours(ps, 1)[1].front(), 0u);

  const auto complete = build_knn_graph(line({0, 1, 3, 7}), 3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(has_edge(complete, i, j), i != j);

  EXPECT_THROW(build_knn_graph(ps, 0), InvalidArgument);
  EXPECT_THROW(build_knn_graph(ps, 3), InvalidArgument);
}

TEST(FullGraph, Examples) {
  const auto same = build_full_graph(PointSet({{1.0, 1.0}, {1.0, 1.0}}), 1.0);
  EXPECT_DOUBLE_EQ(std::real(same.weights(0, 1)), 1.0);
  const auto eq = build_full_graph(line({0, 1, 2}), 0.8);
  EXPECT_DOUBLE_EQ(std::real(eq.weights(0, 1)), std::real(eq.weights(1, 2)));
  expect_valid(eq);
  EXPECT_THROW(build_full_graph(line({0, 1}), -1.0), InvalidArgument);
}

TEST(Degree, Examples) {
  const auto g = SimilarityGraph::from_weights(DenseMatrix{{0.0, 1.0}, {1.0, 0.0}});
  EXPECT_LE(max_abs_diff(degree_matrix(g), DenseMatrix::identity(2)), 0.0);
  EXPECT_EQ(degree_matrix(SimilarityGraph::from_weights(DenseMatrix(3, 3))).max_abs(), 0.0);
  DenseMatrix k3(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) k3(i, j) = 1.0;
  EXPECT_LE(max_abs_diff(degree_matrix(SimilarityGraph::from_weights(k3)), DenseMatrix::diagonal({2.0, 2.0, 2.0})), 0.0);
}

TEST(Laplacian, Examples) {
  const auto g = SimilarityGraph::from_weights(DenseMatrix{{0.0, 1.0}, {1.0, 0.0}});
  EXPECT_LE(max_abs_diff(laplacian(g), DenseMatrix{{1.0, -1.0}, {-1.0, 1.0}}), 0.0);
  const auto eig = hermitian_eig(laplacian(g));
  EXPECT_NEAR(eig.values[0], 0.0, 1e-14);
  EXPECT_NEAR(eig.values[1], 2.0, 1e-14);

  DenseMatrix w(4, 4);
  w(0, 1) = w(1, 0) = w(2, 3) = w(3, 2) = 1.0;
  const auto two = hermitian_eig(laplacian(SimilarityGraph::from_weights(w)));
  EXPECT_NEAR(two.values[0], 0.0, 1e-12);
  EXPECT_NEAR(two.values[1], 0.0, 1e-12);
  EXPECT_GT(two.values[2], 1e-3);
}

TEST(NormalizedLaplacian, Examples) {
  const auto edge = SimilarityGraph::from_weights(DenseMatrix{{0.0, 1.0}, {1.0, 0.0}});
  EXPECT_LE(max_abs_diff(normalized_laplacian(edge), DenseMatrix{{1.0, -1.0}, {-1.0, 1.0}}), 1e-15);

  // 4-cycle is 2-regular.
  DenseMatrix w(4, 4);
  for (std::size_t i = 0; i < 4; ++i) w(i, (i + 1) % 4) = w((i + 1) % 4, i) = 1.0;
  const auto cyc = SimilarityGraph::from_weights(w);
  EXPECT_LE(max_abs_diff(normalized_laplacian(cyc), 0.5 * laplacian(cyc)), 1e-15);

  DenseMatrix iso(3, 3);
  iso(0, 1) = iso(1, 0) = 1.0;
  const auto g = SimilarityGraph::from_weights(iso);
  EXPECT_THROW(normalized_laplacian(g), InvalidArgument);
  const auto red = normalized_laplacian_drop_isolated(g);
  EXPECT_EQ(red.kept, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(red.matrix.rows(), 2u);
}

TEST(NormalizedLaplacian, NullVectorIsSqrtDegree) {
  Rng rng(21);
  const auto cg = qsc::testing::random_component_graph(rng, 1);
  const auto l = normalized_laplacian(cg.graph);
  const auto d = degrees(cg.graph);
  ComplexVector v(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) v[i] = std::sqrt(d[i]);
  EXPECT_LE((l * v).norm(), 1e-12 * v.norm());
  EXPECT_NEAR(hermitian_eig(l).values[0], 0.0, 1e-10);
}

TEST(Laplacian, RowSumsZeroAndPsdOnRandomGraphs) {
  Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    const auto cg = qsc::testing::random_component_graph(rng, 1 + t % 4);
    expect_valid(cg.graph);
    const auto l = laplacian(cg.graph);
    for (std::size_t i = 0; i < l.rows(); ++i) {
      cplx s{0.0, 0.0};
      for (std::size_t j = 0; j < l.cols(); ++j) s += l(i, j);
      EXPECT_LE(std::abs(s), 1e-12);
    }
    EXPECT_GE(hermitian_eig(l).values.front(), -1e-10);
    EXPECT_GE(hermitian_eig(normalized_laplacian(cg.graph)).values.front(), -1e-10);
  }
}

TEST(Components, ZeroMultiplicityEqualsComponentCount) {
  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = 1 + static_cast<std::size_t>(t % 4);
    const auto cg = qsc::testing::random_component_graph(rng, k);
    EXPECT_EQ(component_count(cg.graph), k);
    EXPECT_TRUE(qsc::testing::same_partition(connected_components(cg.graph), cg.component));
    const auto eig = hermitian_eig(laplacian(cg.graph));
    std::size_t zeros = 0;
    for (double v : eig.values) zeros += std::abs(v) <= 1e-9;
    EXPECT_EQ(zeros, k);
  }
}

TEST(SimilarityGraph, FromWeightsValidates) {
  EXPECT_THROW(SimilarityGraph::from_weights(DenseMatrix{{1.0, 0.0}, {0.0, 0.0}}), InvalidArgument);
  EXPECT_THROW(SimilarityGraph::from_weights(DenseMatrix{{0.0, 1.0}, {0.5, 0.0}}), InvalidArgument);
  EXPECT_THROW(SimilarityGraph::from_weights(DenseMatrix{{0.0, -1.0}, {-1.0, 0.0}}), InvalidArgument);
}
