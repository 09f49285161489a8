#pragma once

// Similarity graphs over point sets and their Laplacians.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <vector>

#include "qsc/numerics.hpp"

namespace qsc {

using Point = std::vector<double>;

class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw InvalidArgument("PointSet: need at least two points");
    dim_ = points_.front().size();
    if (dim_ == 0) throw InvalidArgument("PointSet: points must have dimension >= 1");
    for (const auto& p : points_)
      if (p.size() != dim_) throw InvalidArgument("PointSet: points have inconsistent dimension");
  }

  std::size_t count() const noexcept { return points_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }

 private:
  std::vector<Point> points_;
  std::size_t dim_ = 0;
};

inline double euclidean_distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw InvalidArgument("euclidean_distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

enum class GraphKind { epsilon, knn, full };

/// Kernel exponent form. `unsquared` is exp(-||d|| / 2 sigma^2); `squared` is the usual RBF.
enum class GaussianNorm { unsquared, squared };

/// Which side of the epsilon threshold counts as an edge.
enum class EpsilonSense { within, verbatim_greater };

struct GraphParams {
  double epsilon = 0.0;
  std::size_t k = 0;
  double sigma = 0.0;
  GaussianNorm norm = GaussianNorm::unsquared;
  EpsilonSense sense = EpsilonSense::within;
};

struct SimilarityGraph {
  DenseMatrix weights;  // N x N, real, symmetric, zero diagonal
  GraphKind kind = GraphKind::full;
  GraphParams params;

  std::size_t size() const noexcept { return weights.rows(); }

  static SimilarityGraph from_weights(DenseMatrix w, GraphKind kind = GraphKind::full) {
    if (!w.is_square()) throw InvalidArgument("SimilarityGraph: weights must be square");
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (std::abs(w(i, i)) != 0.0) throw InvalidArgument("SimilarityGraph: self loops are not allowed");
      for (std::size_t j = 0; j < w.cols(); ++j) {
        if (std::imag(w(i, j)) != 0.0 || std::real(w(i, j)) < 0.0)
          throw InvalidArgument("SimilarityGraph: weights must be real and nonnegative");
        if (std::abs(w(i, j) - w(j, i)) > 1e-12) throw InvalidArgument("SimilarityGraph: weights must be symmetric");
      }
    }
    return SimilarityGraph{std::move(w), kind, {}};
  }
};

inline double gaussian_similarity(const Point& xi, const Point& xj, double sigma,
                                  GaussianNorm norm = GaussianNorm::unsquared) {
  if (!(sigma > 0.0)) throw InvalidArgument("gaussian_similarity: sigma must be positive");
  const double d = euclidean_distance(xi, xj);
  const double num = norm == GaussianNorm::squared ? d * d : d;
  return std::exp(-num / (2.0 * sigma * sigma));
}

inline SimilarityGraph build_epsilon_graph(const PointSet& ps, double eps,
                                           EpsilonSense sense = EpsilonSense::within) {
  if (!(eps > 0.0)) throw InvalidArgument("build_epsilon_graph: epsilon must be positive");
  const std::size_t n = ps.count();
  DenseMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = euclidean_distance(ps[i], ps[j]);
      const bool edge = sense == EpsilonSense::within ? d <= eps : d > eps;
      if (edge) w(i, j) = w(j, i) = 1.0;
    }
  GraphParams p;
  p.epsilon = eps;
  p.sense = sense;
  return {std::move(w), GraphKind::epsilon, p};
}

/// k nearest neighbours of each point, self excluded, distance ties to the lower index.
inline std::vector<std::vector<std::size_t>> nearest_neighbours(const PointSet& ps, std::size_t k) {
  const std::size_t n = ps.count();
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(j);
    std::vector<double> dist(n);
    for (auto j : others) dist[j] = euclidean_distance(ps[i], ps[j]);
    std::stable_sort(others.begin(), others.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
    others.resize(k);
    out[i] = std::move(others);
  }
  return out;
}

/// Mutual k-NN graph: (i, j) is an edge iff each is among the other's k nearest.
inline SimilarityGraph build_knn_graph(const PointSet& ps, std::size_t k) {
  const std::size_t n = ps.count();
  if (k < 1 || k >= n) throw InvalidArgument("build_knn_graph: k must satisfy 1 <= k < N");
  const auto nn = nearest_neighbours(ps, k);
  auto contains = [&](std::size_t i, std::size_t j) {
    return std::find(nn[i].begin(), nn[i].end(), j) != nn[i].end();
  };
  DenseMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (contains(i, j) && contains(j, i)) w(i, j) = w(j, i) = 1.0;
  GraphParams p;
  p.k = k;
  return {std::move(w), GraphKind::knn, p};
}

inline SimilarityGraph build_full_graph(const PointSet& ps, double sigma,
                                        GaussianNorm norm = GaussianNorm::unsquared) {
  if (!(sigma > 0.0)) throw InvalidArgument("build_full_graph: sigma must be positive");
  const std::size_t n = ps.count();
  DenseMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) w(i, j) = w(j, i) = gaussian_similarity(ps[i], ps[j], sigma, norm);
  GraphParams p;
  p.sigma = sigma;
  p.norm = norm;
  return {std::move(w), GraphKind::full, p};
}

inline std::vector<double> degrees(const SimilarityGraph& g) {
  const std::size_t n = g.size();
  std::vector<double> d(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i] += std::real(g.weights(i, j));
  return d;
}

inline DenseMatrix degree_matrix(const SimilarityGraph& g) { return DenseMatrix::diagonal(degrees(g)); }

/// L = D - W
inline DenseMatrix laplacian(const SimilarityGraph& g) {
  DenseMatrix l = degree_matrix(g);
  l -= g.weights;
  return l;
}

/// I - D^{-1/2} W D^{-1/2}. Throws on isolated vertices.
inline DenseMatrix normalized_laplacian(const SimilarityGraph& g) {
  const auto d = degrees(g);
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!(d[i] > 0.0))
      throw InvalidArgument("normalized_laplacian: vertex " + std::to_string(i) + " is isolated");
  DenseMatrix l = DenseMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.weights(i, j) != cplx{0.0, 0.0}) l(i, j) -= g.weights(i, j) / std::sqrt(d[i] * d[j]);
  return l;
}

struct ReducedLaplacian {
  DenseMatrix matrix;
  std::vector<std::size_t> kept;  // original vertex index of each row
};

/// Normalized Laplacian of the subgraph induced by the non-isolated vertices.
inline ReducedLaplacian normalized_laplacian_drop_isolated(const SimilarityGraph& g) {
  const auto d = degrees(g);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0.0) kept.push_back(i);
  if (kept.empty()) throw DegenerateError("normalized_laplacian: every vertex is isolated");
  DenseMatrix w(kept.size(), kept.size());
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = 0; b < kept.size(); ++b) w(a, b) = g.weights(kept[a], kept[b]);
  SimilarityGraph sub{std::move(w), g.kind, g.params};
  return {normalized_laplacian(sub), std::move(kept)};
}

/// Component id per vertex (breadth-first search over positive weights), ids in order of first vertex.
inline std::vector<std::size_t> connected_components(const SimilarityGraph& g) {
  const std::size_t n = g.size();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != unset) continue;
    std::queue<std::size_t> frontier;
    frontier.push(s);
    comp[s] = next;
    while (!frontier.empty()) {
      const auto u = frontier.front();
      frontier.pop();
      for (std::size_t v = 0; v < n; ++v)
        if (comp[v] == unset && std::real(g.weights(u, v)) > 0.0) {
          comp[v] = next;
          frontier.push(v);
        }
    }
    ++next;
  }
  return comp;
}

inline std::size_t component_count(const SimilarityGraph& g) {
  const auto c = connected_components(g);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

}  // namespace qsc
