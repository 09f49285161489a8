#pragma once

// Extracting clustering information from the amplified system register.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "qsc/classical.hpp"
#include "qsc/encoding.hpp"
#include "qsc/numerics.hpp"
#include "qsc/qpea.hpp"

namespace qsc {

enum class SimilarityMethod { householder, direct };

inline std::string to_string(SimilarityMethod m) { return m == SimilarityMethod::householder ? "householder" : "direct"; }

struct SimilarityReport {
  std::string y_id;
  double similarity = 0.0;
  SimilarityMethod method = SimilarityMethod::householder;
  std::size_t rank = 0;  // 1-based position after sorting
};

enum class ReadoutReflection {
  to_basis,  // reflection that maps |y> to |0>
  verbatim,  // I - 2|y><y|
};

inline DenseMatrix readout_reflection(const ComplexVector& y, ReadoutReflection kind = ReadoutReflection::to_basis) {
  return kind == ReadoutReflection::to_basis ? householder_to_basis(y).reflection : proj_reflection(y);
}

/// P(|0>) after reflecting the system state; equals |<y|psi>|^2 for the to_basis reflection.
inline double householder_similarity(const ComplexVector& psi, const ComplexVector& y,
                                     ReadoutReflection kind = ReadoutReflection::to_basis) {
  if (psi.dim() != y.dim()) throw InvalidArgument("householder_similarity: dimension mismatch");
  const ComplexVector out = readout_reflection(y, kind) * psi;
  return std::clamp(std::norm(out[0]) / psi.norm_squared(), 0.0, 1.0);
}

/// Mixed-state form: <0| R rho R^dagger |0>.
inline double householder_similarity(const DenseMatrix& rho, const ComplexVector& y,
                                     ReadoutReflection kind = ReadoutReflection::to_basis) {
  if (rho.rows() != y.dim() || !rho.is_square()) throw InvalidArgument("householder_similarity: dimension mismatch");
  const DenseMatrix r = readout_reflection(y, kind);
  // Row 0 of R is all that is needed: <0|R rho R^dagger|0> = r0 rho r0^dagger.
  ComplexVector r0(y.dim());
  for (std::size_t j = 0; j < y.dim(); ++j) r0[j] = std::conj(r(0, j));
  const double p = std::real(r0.dot(rho * r0)) / std::real(rho.trace());
  return std::clamp(p, 0.0, 1.0);
}

/// <y| V V^dagger |y> over the nonzero-eigenvalue eigenvectors of H (0 when y is in the null space).
inline double direct_similarity(const DenseMatrix& h, const ComplexVector& y, std::optional<double> zero_tol = std::nullopt) {
  const DenseMatrix p = range_projector(h, zero_tol);
  return std::clamp(expectation(p, y) / y.norm_squared(), 0.0, 1.0);
}

/// exp(iY), Y = sum_i sigma_x on qubit i: the n-fold tensor power of cos(1) I + i sin(1) sigma_x.
inline DenseMatrix e_iY_operator(unsigned n) {
  const cplx c = std::cos(1.0);
  const cplx is = cplx{0.0, std::sin(1.0)};
  const DenseMatrix one{{c, is}, {is, c}};
  DenseMatrix out = DenseMatrix::identity(1);
  for (unsigned q = 0; q < n; ++q) out = kron(out, one);
  return out;
}

struct IndexDistribution {
  std::vector<double> probabilities;
  std::size_t argmax = 0;
};

/// Uniform superposition -> e^{iY} -> pipeline -> e^{iY} -> computational-basis distribution.
/// `pipeline` maps the prepared system vector to the system density matrix it produces.
template <typename Pipeline>
IndexDistribution e_iY_readout(unsigned n, Pipeline&& pipeline) {
  const std::size_t dim = std::size_t{1} << n;
  ComplexVector plus(dim);
  for (auto& z : plus) z = 1.0 / std::sqrt(static_cast<double>(dim));
  const DenseMatrix e = e_iY_operator(n);
  const ComplexVector prepared = e * plus;
  const DenseMatrix rho = pipeline(prepared);
  const DenseMatrix out = e * rho * e.adjoint();
  IndexDistribution dist;
  const double tr = std::real(out.trace());
  for (std::size_t i = 0; i < dim; ++i) dist.probabilities.push_back(std::max(0.0, std::real(out(i, i))) / tr);
  dist.argmax = static_cast<std::size_t>(
      std::max_element(dist.probabilities.begin(), dist.probabilities.end()) - dist.probabilities.begin());
  return dist;
}

enum class ReadoutPoint {
  stop,  // state where the phase-qubit stopping rule fired (or max_iter)
  peak,  // state with the highest recorded fidelity
};

struct PipelineOptions {
  AmplifyOptions amplify;
  ReadoutPoint readout = ReadoutPoint::stop;
  ReadoutReflection reflection = ReadoutReflection::to_basis;
};

/// Amplified pipeline with the configured estimator; returns the system density matrix.
inline DenseMatrix amplified_system_density(const PeaConfig& cfg, const EvolutionOperator& u, const ComplexVector& y,
                                            const PipelineOptions& opt = {}) {
  if (opt.readout == ReadoutPoint::stop) return reduced_system_density(amplify(cfg, u, y, opt.amplify).final_state);
  AmplifyOptions full = opt.amplify;
  full.halt_on_stop = false;
  return reduced_system_density(amplify(cfg, u, y, full).peak_state);
}

inline IndexDistribution e_iY_readout(const PeaConfig& cfg, const EvolutionOperator& u, unsigned n,
                                      const PipelineOptions& opt = {}) {
  if (u.dim() != (std::size_t{1} << n)) throw InvalidArgument("e_iY_readout: operator size does not match n");
  return e_iY_readout(n, [&](const ComplexVector& y) { return amplified_system_density(cfg, u, y, opt); });
}

struct RankedCandidates {
  std::vector<SimilarityReport> quantum;  // householder readout of the amplified state, sorted descending
  std::vector<SimilarityReport> direct;   // classical oracle, sorted descending
  std::vector<double> errors;             // |quantum - direct| per candidate, input order
};

namespace detail {
inline void sort_and_rank(std::vector<SimilarityReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const SimilarityReport& a, const SimilarityReport& b) { return a.similarity > b.similarity; });
  for (std::size_t i = 0; i < reports.size(); ++i) reports[i].rank = i + 1;
}
}  // namespace detail

/// Runs the amplified pipeline once per candidate indicator and ranks by measured similarity.
/// H is zero-padded to a power-of-two dimension; candidates in the null space score 0.
inline RankedCandidates rank_indicators(const DenseMatrix& h, const std::vector<IndicatorVector>& candidates,
                                        const PeaConfig& cfg, const PipelineOptions& opt = {}) {
  if (candidates.empty()) throw InvalidArgument("rank_indicators: no candidates");
  const DenseMatrix padded = pad_to_power_of_two(h);
  const EvolutionOperator u = make_evolution(padded, cfg.m);
  RankedCandidates out;
  for (const auto& cand : candidates) {
    if (cand.dim() != h.rows()) throw InvalidArgument("rank_indicators: candidate dimension does not match H");
    const ComplexVector y = cand.vector(padded.rows());
    const double direct = direct_similarity(padded, y, u.zero_tol());
    double measured = 0.0;
    try {
      const DenseMatrix rho = amplified_system_density(cfg, u, y, opt);
      measured = householder_similarity(rho, y, opt.reflection);
    } catch (const DegenerateError&) {
      measured = 0.0;
    }
    out.quantum.push_back({cand.id(), measured, SimilarityMethod::householder, 0});
    out.direct.push_back({cand.id(), direct, SimilarityMethod::direct, 0});
    out.errors.push_back(std::abs(measured - direct));
  }
  detail::sort_and_rank(out.quantum);
  detail::sort_and_rank(out.direct);
  return out;
}

}  // namespace qsc
