#pragma once

// Classical reference pipeline: Lloyd's k-means, Laplacian-eigenvector spectral
// clustering, eigengap selection, cluster indicator vectors and the trace objective.
// The quantum path is checked against these routines.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsc/graph.hpp"
#include "qsc/numerics.hpp"
#include "qsc/random.hpp"

namespace qsc {

struct ClusterAssignment {
  std::vector<std::size_t> labels;  // one per point, values in [0, k)
  std::size_t k = 0;
  std::vector<Point> centroids;
  double objective = 0.0;                 // sum of squared distances to assigned centroid
  std::vector<double> objective_history;  // after every completed iteration
  std::size_t iterations = 0;
  std::size_t reseeds = 0;  // empty clusters refilled with the farthest point
  bool converged = false;
};

struct KMeansOptions {
  std::size_t max_iter = 300;
  std::uint64_t seed = 0;
  std::optional<std::vector<Point>> initial_centroids;
};

namespace detail {

inline double squared_distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

inline std::size_t nearest_centroid(const Point& p, const std::vector<Point>& centroids) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    const double d = squared_distance(p, centroids[c]);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

// Seeded farthest-point initialisation: a random first centroid, then repeatedly the point
// farthest from all chosen centroids (lowest index on ties).
inline std::vector<Point> farthest_point_init(const PointSet& ps, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, ps.count() - 1);
  std::vector<std::size_t> chosen{pick(rng)};
  std::vector<double> min_d(ps.count(), std::numeric_limits<double>::infinity());
  while (chosen.size() < k) {
    const Point& last = ps[chosen.back()];
    for (std::size_t i = 0; i < ps.count(); ++i) min_d[i] = std::min(min_d[i], squared_distance(ps[i], last));
    std::size_t best = 0;
    double best_d = -1.0;
    for (std::size_t i = 0; i < ps.count(); ++i)
      if (min_d[i] > best_d) {
        best_d = min_d[i];
        best = i;
      }
    chosen.push_back(best);
  }
  std::vector<Point> out;
  for (auto i : chosen) out.push_back(ps[i]);
  return out;
}

inline double kmeans_objective(const PointSet& ps, const std::vector<std::size_t>& labels,
                               const std::vector<Point>& centroids) {
  double s = 0.0;
  for (std::size_t i = 0; i < ps.count(); ++i) s += squared_distance(ps[i], centroids[labels[i]]);
  return s;
}

inline std::vector<Point> cluster_means(const PointSet& ps, const std::vector<std::size_t>& labels, std::size_t k,
                                        const std::vector<Point>& previous) {
  std::vector<Point> sums(k, Point(ps.dim(), 0.0));
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < ps.count(); ++i) {
    for (std::size_t d = 0; d < ps.dim(); ++d) sums[labels[i]][d] += ps[i][d];
    ++counts[labels[i]];
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (counts[c] == 0) {
      sums[c] = previous[c];
      continue;
    }
    for (auto& x : sums[c]) x /= static_cast<double>(counts[c]);
  }
  return sums;
}

}  // namespace detail

/// Lloyd's algorithm. Stops when an assignment pass changes no label or after max_iter passes.
inline ClusterAssignment kmeans(const PointSet& ps, std::size_t k, const KMeansOptions& opt = {}) {
  const std::size_t n = ps.count();
  if (k < 1 || k > n) throw InvalidArgument("kmeans: k must satisfy 1 <= k <= N");

  std::vector<Point> centroids;
  if (opt.initial_centroids) {
    centroids = *opt.initial_centroids;
    if (centroids.size() != k) throw InvalidArgument("kmeans: expected k initial centroids");
    for (const auto& c : centroids)
      if (c.size() != ps.dim()) throw InvalidArgument("kmeans: initial centroid has wrong dimension");
  } else {
    centroids = detail::farthest_point_init(ps, k, opt.seed);
  }

  ClusterAssignment out;
  out.k = k;
  out.labels.assign(n, 0);

  for (std::size_t iter = 0; iter < std::max<std::size_t>(opt.max_iter, 1); ++iter) {
    bool changed = iter == 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = detail::nearest_centroid(ps[i], centroids);
      if (c != out.labels[i]) changed = true;
      out.labels[i] = c;
    }

    // Refill empty clusters with the point farthest from its centroid (taken from a
    // cluster that keeps at least one other member).
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<std::size_t> counts(k, 0);
      for (auto l : out.labels) ++counts[l];
      if (counts[c] != 0) continue;
      std::size_t far = n;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (counts[out.labels[i]] < 2) continue;
        const double d = detail::squared_distance(ps[i], centroids[out.labels[i]]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      if (far == n) throw DegenerateError("kmeans: cannot refill an empty cluster");
      out.labels[far] = c;
      centroids[c] = ps[far];
      ++out.reseeds;
      changed = true;
    }

    centroids = detail::cluster_means(ps, out.labels, k, centroids);
    out.objective_history.push_back(detail::kmeans_objective(ps, out.labels, centroids));
    out.iterations = iter + 1;
    if (!changed) {
      out.converged = true;
      break;
    }
  }
  out.centroids = centroids;
  out.objective = detail::kmeans_objective(ps, out.labels, centroids);
  return out;
}

/// Cluster count maximising the gap |lambda_k - lambda_{k+1}| (1-indexed) over 1 <= k <= min(k_max, len - 1).
/// Ties go to the smallest k.
inline std::size_t eigengap_select(const std::vector<double>& ascending, std::size_t k_max) {
  if (ascending.size() < 2) throw InvalidArgument("eigengap_select: need at least two eigenvalues");
  const std::size_t upper = std::min(std::max<std::size_t>(k_max, 1), ascending.size() - 1);
  std::size_t best_k = 1;
  double best_gap = -1.0;
  for (std::size_t k = 1; k <= upper; ++k) {
    const double gap = std::abs(ascending[k - 1] - ascending[k]);
    if (gap > best_gap) {
      best_gap = gap;
      best_k = k;
    }
  }
  return best_k;
}

enum class SpectralVariant { unnormalized, normalized, row_normalized };

/// Rows of the k eigenvectors with smallest eigenvalues, one point per graph vertex.
inline PointSet spectral_embedding(const SimilarityGraph& g, std::size_t k, SpectralVariant variant) {
  const DenseMatrix l = variant == SpectralVariant::unnormalized ? laplacian(g) : normalized_laplacian(g);
  const auto eig = hermitian_eig(l);
  std::vector<Point> rows(g.size(), Point(k, 0.0));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t c = 0; c < k; ++c) rows[i][c] = std::real(eig.vectors(i, c));
    if (variant == SpectralVariant::row_normalized) {
      double nrm = 0.0;
      for (double x : rows[i]) nrm += x * x;
      nrm = std::sqrt(nrm);
      if (nrm > 0.0)
        for (double& x : rows[i]) x /= nrm;
    }
  }
  return PointSet(std::move(rows));
}

inline ClusterAssignment spectral_cluster(const SimilarityGraph& g, std::size_t k,
                                          SpectralVariant variant = SpectralVariant::unnormalized,
                                          const KMeansOptions& opt = {}) {
  if (k < 2) throw InvalidArgument("spectral_cluster: k must be at least 2");
  if (k > g.size()) throw InvalidArgument("spectral_cluster: k exceeds vertex count");
  return kmeans(spectral_embedding(g, k, variant), k, opt);
}

/// Unit vector with entries 1/sqrt(|members|) on members, 0 elsewhere.
class IndicatorVector {
 public:
  IndicatorVector(std::set<std::size_t> members, std::size_t dim, std::string id = {})
      : members_(std::move(members)), dim_(dim), id_(std::move(id)) {
    if (members_.empty()) throw InvalidArgument("IndicatorVector: empty member set");
    if (*members_.rbegin() >= dim_) throw InvalidArgument("IndicatorVector: member index out of range");
  }

  const std::set<std::size_t>& members() const noexcept { return members_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& id() const noexcept { return id_; }
  bool contains(std::size_t i) const { return members_.count(i) != 0; }

  ComplexVector vector() const { return vector(dim_); }

  /// Zero-padded to `padded_dim` >= dim.
  ComplexVector vector(std::size_t padded_dim) const {
    if (padded_dim < dim_) throw InvalidArgument("IndicatorVector: padded dimension too small");
    ComplexVector v(padded_dim);
    const double w = 1.0 / std::sqrt(static_cast<double>(members_.size()));
    for (auto i : members_) v[i] = w;
    return v;
  }

 private:
  std::set<std::size_t> members_;
  std::size_t dim_;
  std::string id_;
};

/// One indicator per cluster of an assignment.
inline std::vector<IndicatorVector> indicators_from_labels(const std::vector<std::size_t>& labels, std::size_t k) {
  std::vector<std::set<std::size_t>> sets(k);
  for (std::size_t i = 0; i < labels.size(); ++i) sets.at(labels[i]).insert(i);
  std::vector<IndicatorVector> out;
  for (std::size_t c = 0; c < k; ++c)
    if (!sets[c].empty()) out.emplace_back(sets[c], labels.size(), "cluster" + std::to_string(c));
  return out;
}

struct ProjectedTarget {
  ComplexVector target;  // normalized V V^dagger y
  double norm = 0.0;     // || V V^dagger y || before normalization
  std::size_t rank = 0;  // number of eigenvalues counted as nonzero
};

/// Projector onto the eigenvectors of H whose eigenvalues exceed zero_tol in magnitude.
inline DenseMatrix range_projector(const DenseMatrix& h, std::optional<double> zero_tol = std::nullopt,
                                   std::size_t* rank = nullptr) {
  const double zt = zero_tol.value_or(default_zero_tol(h));
  const auto eig = hermitian_eig(h);
  const std::size_t n = h.rows();
  DenseMatrix p(n, n);
  std::size_t r = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(eig.values[j]) <= zt) continue;
    ++r;
    const ComplexVector v = eig.vectors.column(j);
    p += outer(v, v);
  }
  if (rank) *rank = r;
  return p;
}

/// V V^dagger |y> over the nonzero-eigenvalue eigenvectors of H, normalized.
inline ProjectedTarget projector_target(const DenseMatrix& h, const ComplexVector& y,
                                        std::optional<double> zero_tol = std::nullopt) {
  if (y.dim() != h.rows()) throw InvalidArgument("projector_target: dimension mismatch");
  ProjectedTarget out;
  const DenseMatrix p = range_projector(h, zero_tol, &out.rank);
  const ComplexVector projected = p * y;
  out.norm = projected.norm();
  if (out.norm <= 1e-12 * std::max(1.0, y.norm()))
    throw DegenerateError("projector_target: input lies in the null space of H");
  out.target = projected.normalized();
  return out;
}

/// trace(Y^dagger V V^dagger Y) for column frames Y and V.
inline double trace_objective(const DenseMatrix& y, const DenseMatrix& v) {
  if (y.rows() != v.rows()) throw InvalidArgument("trace_objective: dimension mismatch");
  const DenseMatrix overlap = v.adjoint() * y;  // k_v x k_y
  double s = 0.0;
  for (const auto& z : overlap.data()) s += std::norm(z);
  return s;
}

inline double trace_objective(const std::vector<IndicatorVector>& ys, const DenseMatrix& v) {
  std::vector<ComplexVector> cols;
  for (const auto& y : ys) cols.push_back(y.vector());
  return trace_objective(DenseMatrix::from_columns(cols), v);
}

/// Pair-counting agreement between two labelings (fraction of pairs treated alike).
inline double rand_index(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size() || a.size() < 2) throw InvalidArgument("rand_index: labelings must match in length (>= 2)");
  std::size_t agree = 0, total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      agree += ((a[i] == a[j]) == (b[i] == b[j])) ? 1 : 0;
      ++total;
    }
  return static_cast<double>(agree) / static_cast<double>(total);
}

inline double adjusted_rand_index(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size() || a.empty()) throw InvalidArgument("adjusted_rand_index: labelings must match in length");
  std::map<std::pair<std::size_t, std::size_t>, double> table;
  std::map<std::size_t, double> ra, rb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    table[{a[i], b[i]}] += 1.0;
    ra[a[i]] += 1.0;
    rb[b[i]] += 1.0;
  }
  auto c2 = [](double x) { return x * (x - 1.0) / 2.0; };
  double idx = 0.0, sa = 0.0, sb = 0.0;
  for (const auto& [key, cnt] : table) idx += c2(cnt);
  for (const auto& [key, cnt] : ra) sa += c2(cnt);
  for (const auto& [key, cnt] : rb) sb += c2(cnt);
  const double total = c2(static_cast<double>(a.size()));
  const double expected = sa * sb / total;
  const double max_idx = 0.5 * (sa + sb);
  if (max_idx == expected) return 1.0;
  return (idx - expected) / (max_idx - expected);
}

}  // namespace qsc
