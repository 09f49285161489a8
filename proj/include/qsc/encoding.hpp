#pragma once

// Data-matrix encodings for phase estimation: Gram matrices, the Householder-sum
// decomposition of X X^T, the linearized surrogate I - iH/k, and the unitary
// evolution backends whose controlled powers drive the phase register.

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "qsc/graph.hpp"
#include "qsc/numerics.hpp"
#include "qsc/register.hpp"

namespace qsc {

/// X X^T over the data rows, optionally mean-centred first.
inline DenseMatrix gram_matrix(const PointSet& x, bool centered = false) {
  std::vector<Point> rows = x.points();
  if (centered) {
    Point mean(x.dim(), 0.0);
    for (const auto& r : rows)
      for (std::size_t d = 0; d < x.dim(); ++d) mean[d] += r[d];
    for (auto& m : mean) m /= static_cast<double>(rows.size());
    for (auto& r : rows)
      for (std::size_t d = 0; d < x.dim(); ++d) r[d] -= mean[d];
  }
  const std::size_t n = rows.size();
  DenseMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t d = 0; d < x.dim(); ++d) s += rows[i][d] * rows[j][d];
      g(i, j) = g(j, i) = s;
    }
  return g;
}

/// H = sum_j c_j |x_j><x_j| = -1/2 sum_j c_j [(I - 2|x_j><x_j|) - I] over data vectors x_j.
///
/// Terms are the rows x_j of the input, so the sum is X^T X; decompose transpose_rows(X)
/// for the point Gram matrix X X^T. Unit-norm rows give c_j = 1.
struct HouseholderSum {
  std::vector<ComplexVector> reflectors;  // unit vectors x_j / ||x_j||
  std::vector<double> coefficients;       // c_j = ||x_j||^2
  std::size_t dim = 0;
  std::vector<std::size_t> dropped;  // indices of zero input vectors

  std::size_t terms() const noexcept { return reflectors.size(); }

  DenseMatrix reflection(std::size_t j) const { return proj_reflection(reflectors.at(j)); }

  /// sum_j c_j |x_j><x_j|
  DenseMatrix reconstruct() const {
    DenseMatrix h(dim, dim);
    for (std::size_t j = 0; j < terms(); ++j) h += coefficients[j] * outer(reflectors[j], reflectors[j]);
    return h;
  }

  /// -1/2 sum_j c_j [(I - 2|x_j><x_j|) - I], built from the reflection matrices themselves.
  DenseMatrix reconstruct_from_reflections() const {
    DenseMatrix h(dim, dim);
    const DenseMatrix eye = DenseMatrix::identity(dim);
    for (std::size_t j = 0; j < terms(); ++j) h += (-0.5 * coefficients[j]) * (reflection(j) - eye);
    return h;
  }
};

enum class DecomposeMode {
  general,  // any nonzero vectors, coefficients carry the squared norms
  strict,   // vectors must already be unit norm (all coefficients 1)
};

/// One Householder term per data vector (one per row of `vectors`). Zero vectors are dropped
/// and listed in `dropped`.
inline HouseholderSum householder_decompose(const std::vector<Point>& vectors,
                                            DecomposeMode mode = DecomposeMode::general) {
  if (vectors.empty()) throw DegenerateError("householder_decompose: no data vectors");
  HouseholderSum out;
  out.dim = vectors.front().size();
  if (out.dim == 0) throw InvalidArgument("householder_decompose: vectors must have dimension >= 1");
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != out.dim) throw InvalidArgument("householder_decompose: inconsistent vector dimension");
    const ComplexVector v = ComplexVector::from_real(vectors[j]);
    const double nrm2 = v.norm_squared();
    if (nrm2 == 0.0) {
      out.dropped.push_back(j);
      continue;
    }
    if (mode == DecomposeMode::strict && std::abs(nrm2 - 1.0) > 1e-12)
      throw InvalidArgument("householder_decompose: strict mode requires unit-norm vectors");
    out.reflectors.push_back(v.normalized());
    out.coefficients.push_back(nrm2);
  }
  if (out.reflectors.empty()) throw DegenerateError("householder_decompose: every data vector is zero");
  return out;
}

inline HouseholderSum householder_decompose(const PointSet& x, DecomposeMode mode = DecomposeMode::general) {
  return householder_decompose(x.points(), mode);
}

/// Columns of a row-major data set, i.e. the feature vectors of length N.
inline std::vector<Point> transpose_rows(const std::vector<Point>& rows) {
  if (rows.empty()) return {};
  std::vector<Point> cols(rows.front().size(), Point(rows.size(), 0.0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t d = 0; d < rows[i].size(); ++d) cols[d][i] = rows[i][d];
  return cols;
}

struct Linearized {
  DenseMatrix htilde;  // I - i H / k
  double k = 0.0;      // 10 * ||H||_1
};

/// H~ = I - iH/k with k = 10 ||H||_1, so every |lambda/k| <= 0.1.
inline Linearized linearize(const DenseMatrix& h) {
  if (!h.is_square()) throw InvalidArgument("linearize: matrix must be square");
  const double k = 10.0 * matrix_1norm(h);
  if (k == 0.0) throw DegenerateError("linearize: H is zero, scale k would be 0");
  DenseMatrix ht = DenseMatrix::identity(h.rows());
  ht -= cplx{0.0, 1.0 / k} * h;
  return {std::move(ht), k};
}

enum class EvolutionBackend { exact_exponential, linearized };

/// A unitary U = V diag(exp(2 pi i phase_j)) V^dagger kept in eigen form so that
/// arbitrary powers are exact.
class EvolutionOperator {
 public:
  EvolutionOperator(DenseMatrix eigenvectors, std::vector<double> phases, std::vector<double> source_eigenvalues,
                    double scale, double time, EvolutionBackend backend, double zero_tol = 0.0)
      : vectors_(std::move(eigenvectors)),
        phases_(std::move(phases)),
        eigenvalues_(std::move(source_eigenvalues)),
        scale_(scale),
        time_(time),
        backend_(backend),
        zero_tol_(zero_tol) {
    unitary_ = power(1);
  }

  const DenseMatrix& unitary() const noexcept { return unitary_; }
  const DenseMatrix& eigenvectors() const noexcept { return vectors_; }
  /// Eigenphases in turns (U v_j = exp(2 pi i phase_j) v_j), paired with eigenvalues().
  const std::vector<double>& phases() const noexcept { return phases_; }
  /// Eigenvalues of the source H, ascending.
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  double scale() const noexcept { return scale_; }
  double time() const noexcept { return time_; }
  EvolutionBackend backend() const noexcept { return backend_; }
  /// Eigenvalues with magnitude at or below this were treated as zero (phase exactly 0).
  double zero_tol() const noexcept { return zero_tol_; }
  std::size_t dim() const noexcept { return vectors_.rows(); }

  /// U^p computed from the eigenphases (p * phase reduced mod 1 before exponentiating).
  DenseMatrix power(std::uint64_t p) const {
    const std::size_t n = dim();
    std::vector<cplx> diag(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double turns = std::fmod(static_cast<double>(p) * phases_[j], 1.0);
      diag[j] = std::polar(1.0, 2.0 * std::numbers::pi * turns);
    }
    DenseMatrix scaled = vectors_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= diag[j];
    return scaled * vectors_.adjoint();
  }

 private:
  DenseMatrix vectors_;
  std::vector<double> phases_;
  std::vector<double> eigenvalues_;
  double scale_;
  double time_;
  EvolutionBackend backend_;
  double zero_tol_;
  DenseMatrix unitary_;
};

struct EvolutionOptions {
  EvolutionBackend backend = EvolutionBackend::exact_exponential;
  std::optional<double> zero_tol;  // default 1e-8 * ||H||_1
  std::optional<double> time;      // exact backend: fixed t instead of the automatic choice
};

/// Builds the controlled-power source for an m-qubit phase register.
///
/// exact_exponential: U = exp(2 pi i t H). H must be positive semidefinite. Without a fixed time,
///   t = 2 / (2^m lambda_min) where lambda_min is the smallest nonzero eigenvalue, which places the
///   smallest nonzero phase two bins away from zero; every nonzero phase must also stay at least
///   two bins below 1 (the zero bin seen from the other side), otherwise ResolutionError.
/// linearized: eigenvalues of I - iH/k normalised to unit modulus, phases -arctan(lambda/k) / 2 pi.
inline EvolutionOperator make_evolution(const DenseMatrix& h, unsigned m, const EvolutionOptions& opt = {}) {
  if (m < 1) throw InvalidArgument("make_evolution: phase register needs at least one qubit");
  const auto eig = hermitian_eig(h);
  const double zt = opt.zero_tol.value_or(default_zero_tol(h));
  const std::size_t n = h.rows();
  std::vector<double> phases(n, 0.0);

  if (opt.backend == EvolutionBackend::linearized) {
    const double k = 10.0 * matrix_1norm(h);
    if (k == 0.0) throw DegenerateError("make_evolution: H is zero, linearization scale would be 0");
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(eig.values[j]) <= zt) continue;
      // arg(1 - i lambda/k) in turns.
      phases[j] = -std::atan(eig.values[j] / k) / (2.0 * std::numbers::pi);
    }
    return EvolutionOperator(eig.vectors, std::move(phases), eig.values, k, 1.0, opt.backend, zt);
  }

  const double bins = std::ldexp(1.0, static_cast<int>(m));
  double lambda_min = 0.0, lambda_max = 0.0;
  for (double lam : eig.values) {
    if (std::abs(lam) <= zt) continue;
    if (lam < 0.0)
      throw InvalidArgument("make_evolution: exact backend needs positive semidefinite H (eigenvalue " +
                            std::to_string(lam) + ")");
    if (lambda_min == 0.0 || lam < lambda_min) lambda_min = lam;
    lambda_max = std::max(lambda_max, lam);
  }

  double t = 1.0;
  if (opt.time) {
    t = *opt.time;
    if (!(t > 0.0)) throw InvalidArgument("make_evolution: time must be positive");
    if (t * lambda_max >= 1.0)
      throw ResolutionError("make_evolution: eigenphase t*lambda >= 1 for lambda = " + std::to_string(lambda_max),
                            lambda_max);
  } else if (lambda_max > 0.0) {
    t = 2.0 / (bins * lambda_min);
    if (t * lambda_max > 1.0 - 2.0 / bins)
      throw ResolutionError("make_evolution: eigenvalue " + std::to_string(lambda_min) +
                                " cannot be separated from zero at m = " + std::to_string(m) +
                                " while keeping lambda_max = " + std::to_string(lambda_max) + " below one turn",
                            lambda_min);
  }
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(eig.values[j]) > zt) phases[j] = t * eig.values[j];
  return EvolutionOperator(eig.vectors, std::move(phases), eig.values, 1.0 / t, t, opt.backend, zt);
}

/// Applies U^{2^j} to the system register on every branch where phase qubit `control_qubit` is 1.
inline RegisterState controlled_power_apply(const EvolutionOperator& u, unsigned j, const RegisterState& state,
                                            unsigned control_qubit) {
  if (u.dim() != state.system_dim()) throw InvalidArgument("controlled_power_apply: operator and system register differ in size");
  if (control_qubit >= state.m()) throw InvalidArgument("controlled_power_apply: control must be a phase qubit");
  if (j >= 64) throw InvalidArgument("controlled_power_apply: power exponent too large");
  const DenseMatrix up = u.power(std::uint64_t{1} << j);
  RegisterState out = state;
  const std::size_t sys = state.system_dim();
  std::vector<cplx> buf(sys);
  for (std::size_t k = 0; k < state.phase_dim(); ++k) {
    if (((k >> control_qubit) & 1U) == 0) continue;
    auto block = out.block(k);
    for (std::size_t r = 0; r < sys; ++r) {
      cplx s{0.0, 0.0};
      for (std::size_t c = 0; c < sys; ++c) s += up(r, c) * block[c];
      buf[r] = s;
    }
    std::copy(buf.begin(), buf.end(), block.begin());
  }
  return out;
}

/// 2^m * L * N, or 2^m * L * ceil(log2 N) when H is a sum of O(log N)-gate unitaries.
inline std::uint64_t gate_count_estimate(std::uint64_t terms, std::uint64_t dim, unsigned m, bool simple_unitaries = false) {
  const std::uint64_t per_term = simple_unitaries ? (dim <= 1 ? 0 : std::bit_width(dim - 1)) : dim;
  return (std::uint64_t{1} << m) * terms * per_term;
}

/// Zero-pads a square matrix to the next power-of-two dimension.
inline DenseMatrix pad_to_power_of_two(const DenseMatrix& h) {
  if (!h.is_square()) throw InvalidArgument("pad_to_power_of_two: matrix must be square");
  const std::size_t target = std::bit_ceil(h.rows());
  if (target == h.rows()) return h;
  DenseMatrix out(target, target);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

}  // namespace qsc
