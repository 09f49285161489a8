#pragma once

// Seeded random instances: unit vectors, Hermitian and PSD matrices, orthonormal frames.
// Everything draws from std::mt19937_64 so a seed reproduces the same instance per build.

#include <cstdint>
#include <random>

#include "qsc/numerics.hpp"

namespace qsc {

using Rng = std::mt19937_64;

inline ComplexVector random_real_vector(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector v(dim);
  for (auto& z : v) z = g(rng);
  return v;
}

inline ComplexVector random_complex_vector(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector v(dim);
  for (auto& z : v) z = cplx{g(rng), g(rng)};
  return v;
}

inline ComplexVector random_unit_vector(Rng& rng, std::size_t dim, bool complex_entries = true) {
  return (complex_entries ? random_complex_vector(rng, dim) : random_real_vector(rng, dim)).normalized();
}

inline DenseMatrix random_hermitian(Rng& rng, std::size_t dim, bool complex_entries = true) {
  std::normal_distribution<double> g(0.0, 1.0);
  DenseMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    a(i, i) = g(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      const cplx z = complex_entries ? cplx{g(rng), g(rng)} : cplx{g(rng), 0.0};
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }
  return a;
}

/// Gram-Schmidt on Gaussian columns; returns a dim x cols matrix with orthonormal columns.
inline DenseMatrix random_orthonormal(Rng& rng, std::size_t dim, std::size_t cols, bool complex_entries = false) {
  if (cols > dim) throw InvalidArgument("random_orthonormal: more columns than dimension");
  std::vector<ComplexVector> basis;
  while (basis.size() < cols) {
    ComplexVector v = complex_entries ? random_complex_vector(rng, dim) : random_real_vector(rng, dim);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) v -= b.dot(v) * b;
    if (v.norm() < 1e-8) continue;
    basis.push_back(v.normalized());
  }
  return DenseMatrix::from_columns(basis);
}

/// A A^T with A a dim x rank Gaussian matrix: real symmetric PSD of rank `rank` almost surely.
inline DenseMatrix random_psd(Rng& rng, std::size_t dim, std::size_t rank) {
  std::normal_distribution<double> g(0.0, 1.0);
  DenseMatrix a(dim, rank);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < rank; ++j) a(i, j) = g(rng);
  return a * a.transpose();
}

}  // namespace qsc
