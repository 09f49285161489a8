#pragma once

// Seeded synthetic inputs.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "qsc/classical.hpp"
#include "qsc/graph.hpp"
#include "qsc/random.hpp"

namespace qsc {

struct LabeledPoints {
  PointSet points;
  std::vector<std::size_t> labels;
};

/// Isotropic Gaussian blobs, `per_cluster` points around each center, points grouped by cluster.
inline LabeledPoints make_blobs(std::uint64_t seed, const std::vector<Point>& centers, std::size_t per_cluster,
                                double stddev) {
  if (centers.empty() || per_cluster == 0) throw InvalidArgument("make_blobs: need centers and points per cluster");
  if (stddev < 0.0) throw InvalidArgument("make_blobs: negative stddev");
  Rng rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Point> pts;
  std::vector<std::size_t> labels;
  for (std::size_t c = 0; c < centers.size(); ++c)
    for (std::size_t i = 0; i < per_cluster; ++i) {
      Point p = centers[c];
      for (auto& x : p) x += stddev * g(rng);
      pts.push_back(std::move(p));
      labels.push_back(c);
    }
  return {PointSet(std::move(pts)), std::move(labels)};
}

/// Two interleaved half circles with Gaussian jitter; label 0 for the upper moon.
inline LabeledPoints make_moons(std::uint64_t seed, std::size_t per_moon, double noise) {
  if (per_moon < 2) throw InvalidArgument("make_moons: need at least two points per moon");
  Rng rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Point> pts;
  std::vector<std::size_t> labels;
  for (std::size_t moon = 0; moon < 2; ++moon)
    for (std::size_t i = 0; i < per_moon; ++i) {
      const double t = std::numbers::pi * static_cast<double>(i) / static_cast<double>(per_moon - 1);
      Point p = moon == 0 ? Point{std::cos(t), std::sin(t)} : Point{1.0 - std::cos(t), 0.5 - std::sin(t)};
      for (auto& x : p) x += noise * g(rng);
      pts.push_back(std::move(p));
      labels.push_back(moon);
    }
  return {PointSet(std::move(pts)), std::move(labels)};
}

/// Random unit input whose projection onto range(H) has norm at least `min_overlap` (rejection sampled).
inline ComplexVector random_input_with_overlap(Rng& rng, const DenseMatrix& h, double min_overlap,
                                               bool complex_entries = true, std::size_t max_tries = 10000) {
  const DenseMatrix p = range_projector(h);
  for (std::size_t t = 0; t < max_tries; ++t) {
    ComplexVector y = random_unit_vector(rng, h.rows(), complex_entries);
    if ((p * y).norm() >= min_overlap) return y;
  }
  throw DegenerateError("random_input_with_overlap: no sample met the overlap bound");
}

/// Indicator with half of its members drawn from each of two groups.
inline IndicatorVector mixed_indicator(Rng& rng, const std::vector<std::size_t>& group_a,
                                       const std::vector<std::size_t>& group_b, std::size_t size, std::size_t dim,
                                       std::string id) {
  if (size < 2 || size / 2 > group_a.size() || size - size / 2 > group_b.size())
    throw InvalidArgument("mixed_indicator: groups too small");
  auto a = group_a;
  auto b = group_b;
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  std::set<std::size_t> members(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(size / 2));
  members.insert(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(size - size / 2));
  return {std::move(members), dim, std::move(id)};
}

}  // namespace qsc
