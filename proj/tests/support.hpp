#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qsc/graph.hpp"
#include "qsc/random.hpp"

namespace qsc::testing {

struct ComponentGraph {
  SimilarityGraph graph;
  std::vector<std::size_t> component;  // ground-truth component per vertex
  std::size_t count = 0;
};

/// Random weighted graph made of `components` connected pieces of 3..7 vertices each,
/// with vertices shuffled so components are not contiguous.
inline ComponentGraph random_component_graph(Rng& rng, std::size_t components) {
  std::uniform_int_distribution<std::size_t> size_dist(3, 7);
  std::uniform_real_distribution<double> weight(0.2, 1.0);
  std::bernoulli_distribution extra(0.4);
  std::vector<std::size_t> sizes(components);
  for (auto& s : sizes) s = size_dist(rng);
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);

  DenseMatrix w(n, n);
  std::vector<std::size_t> comp(n);
  std::size_t offset = 0;
  for (std::size_t c = 0; c < components; ++c) {
    for (std::size_t a = 0; a < sizes[c]; ++a) {
      comp[perm[offset + a]] = c;
      for (std::size_t b = a + 1; b < sizes[c]; ++b) {
        if (b == a + 1 || extra(rng)) {
          const double x = weight(rng);
          w(perm[offset + a], perm[offset + b]) = x;
          w(perm[offset + b], perm[offset + a]) = x;
        }
      }
    }
    offset += sizes[c];
  }
  return {SimilarityGraph::from_weights(std::move(w)), std::move(comp), components};
}

/// Same partition up to relabelling.
inline bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

}  // namespace qsc::testing
