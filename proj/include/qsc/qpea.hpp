#pragma once

// Phase estimation (QFT-based and biased) over a dense statevector, and the
// amplitude amplification loop that strips zero-eigenvalue components from the
// system register.
//
// The estimator A maps |0>|0> to the phase-estimation output for input |y>:
//   qft mode:    A = (F^dagger (x) I) . Ladder . (H^m (x) I) . (I (x) U_in)
//   biased mode: A = U_f1 . Ladder . U_f1 . (I (x) U_in),  U_f1 = (I - 2|f1><f1|) (x) I
// where Ladder applies U^{2^q} to the system on branches with phase qubit q set,
// and U_in maps |0> to |y>. One amplification step is
//   Q = A . U_s . A' . U_f2,   A' = A (as printed) or A^dagger (standard Grover form).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsc/classical.hpp"
#include "qsc/encoding.hpp"
#include "qsc/numerics.hpp"
#include "qsc/register.hpp"

namespace qsc {

enum class PeaMode { qft, biased };

/// Second estimator application inside Q.
enum class GroverVariant {
  verbatim,         // Q = A U_s A U_f2
  standard_grover,  // Q = A U_s A^dagger U_f2
};

inline std::string to_string(PeaMode mode) { return mode == PeaMode::qft ? "qft" : "biased"; }
inline std::string to_string(GroverVariant v) { return v == GroverVariant::verbatim ? "verbatim" : "standard_grover"; }

struct PeaConfig {
  unsigned m = 6;       // phase qubits
  double kappa = 1.0;   // bias coefficient, biased mode only
  PeaMode mode = PeaMode::biased;
  GroverVariant variant = GroverVariant::verbatim;

  void validate() const {
    if (m < 1) throw InvalidArgument("PeaConfig: m must be at least 1");
    if (m > 20) throw InvalidArgument("PeaConfig: m is too large for a dense phase register");
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw InvalidArgument("PeaConfig: kappa must be finite and >= 0");
  }
};

/// f1 = [kappa, 1, ..., 1] / mu over the 2^m phase indices, mu = sqrt(kappa^2 + 2^m - 1).
inline ComplexVector bias_vector(unsigned m, double kappa) {
  if (m < 1) throw InvalidArgument("bias_vector: m must be at least 1");
  if (!(kappa >= 0.0)) throw InvalidArgument("bias_vector: kappa must be >= 0");
  const std::size_t dim = std::size_t{1} << m;
  const double mu = std::sqrt(kappa * kappa + static_cast<double>(dim - 1));
  ComplexVector f(dim);
  f[0] = kappa / mu;
  for (std::size_t i = 1; i < dim; ++i) f[i] = 1.0 / mu;
  return f;
}

/// f2 = [0, 1, ..., 1] / sqrt(2^m - 1).
inline ComplexVector marking_vector(unsigned m) { return bias_vector(m, 0.0); }

/// kappa/mu, the weight of f1 on the zero phase index.
inline double bias_amplitude(unsigned m, double kappa) { return std::real(bias_vector(m, kappa)[0]); }

/// (I - 2|f1><f1|) (x) I_{2^n}
inline DenseMatrix u_f1(unsigned m, double kappa, unsigned n = 0) {
  return kron(proj_reflection(bias_vector(m, kappa)), DenseMatrix::identity(std::size_t{1} << n));
}

/// (I - 2|f2><f2|) (x) I_{2^n}
inline DenseMatrix u_f2(unsigned m, unsigned n = 0) {
  return kron(proj_reflection(marking_vector(m)), DenseMatrix::identity(std::size_t{1} << n));
}

/// I - 2|0...0><0...0| over all m + n qubits.
inline DenseMatrix u_s(unsigned m, unsigned n) {
  DenseMatrix r = DenseMatrix::identity(std::size_t{1} << (m + n));
  r(0, 0) = -1.0;
  return r;
}

/// F|j> = 2^{-m/2} sum_k exp(2 pi i jk / 2^m) |k>
inline DenseMatrix qft_matrix(unsigned m) {
  const std::size_t dim = std::size_t{1} << m;
  DenseMatrix f(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) {
      const double turns = static_cast<double>((j * k) % dim) / static_cast<double>(dim);
      f(k, j) = std::polar(norm, 2.0 * std::numbers::pi * turns);
    }
  return f;
}

/// H^{(x) m}
inline DenseMatrix hadamard_wall(unsigned m) {
  const std::size_t dim = std::size_t{1} << m;
  DenseMatrix h(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) h(j, k) = (std::popcount(j & k) % 2 ? -norm : norm);
  return h;
}

/// Unitary mapping |0> to |y>: a Householder reflection times the phase of <0|y>.
inline DenseMatrix input_preparation(const ComplexVector& y) {
  const auto br = householder_to_basis(y);
  return br.phase * br.reflection;
}

// ---- statevector kernels on the phase register ----

/// Applies P (x) I_system.
inline void apply_phase_matrix(RegisterState& s, const DenseMatrix& p) {
  if (p.rows() != s.phase_dim() || p.cols() != s.phase_dim()) throw InvalidArgument("apply_phase_matrix: shape mismatch");
  const std::size_t pd = s.phase_dim(), sd = s.system_dim();
  auto& a = s.amplitudes();
  std::vector<cplx> col(pd);
  for (std::size_t c = 0; c < sd; ++c) {
    for (std::size_t k = 0; k < pd; ++k) col[k] = a[k * sd + c];
    for (std::size_t r = 0; r < pd; ++r) {
      cplx acc{0.0, 0.0};
      for (std::size_t k = 0; k < pd; ++k) acc += p(r, k) * col[k];
      a[r * sd + c] = acc;
    }
  }
}

/// Applies I_phase (x) S.
inline void apply_system_matrix(RegisterState& s, const DenseMatrix& sys) {
  if (sys.rows() != s.system_dim() || sys.cols() != s.system_dim()) throw InvalidArgument("apply_system_matrix: shape mismatch");
  std::vector<cplx> buf(s.system_dim());
  for (std::size_t k = 0; k < s.phase_dim(); ++k) {
    auto block = s.block(k);
    for (std::size_t r = 0; r < buf.size(); ++r) {
      cplx acc{0.0, 0.0};
      for (std::size_t c = 0; c < buf.size(); ++c) acc += sys(r, c) * block[c];
      buf[r] = acc;
    }
    std::copy(buf.begin(), buf.end(), block.begin());
  }
}

/// Applies (I - 2|f><f|) (x) I_system.
inline void reflect_phase(RegisterState& s, const ComplexVector& f) {
  if (f.dim() != s.phase_dim()) throw InvalidArgument("reflect_phase: vector must span the phase register");
  const std::size_t pd = s.phase_dim(), sd = s.system_dim();
  auto& a = s.amplitudes();
  for (std::size_t c = 0; c < sd; ++c) {
    cplx overlap{0.0, 0.0};
    for (std::size_t k = 0; k < pd; ++k) overlap += std::conj(f[k]) * a[k * sd + c];
    if (overlap == cplx{0.0, 0.0}) continue;
    for (std::size_t k = 0; k < pd; ++k) a[k * sd + c] -= 2.0 * f[k] * overlap;
  }
}

/// Applies I - 2|0...0><0...0|.
inline void reflect_zero(RegisterState& s) { s.amplitudes()[0] = -s.amplitudes()[0]; }

// ---- the estimator ----

/// Phase estimation circuit A for a fixed configuration, evolution operator and input |y>.
/// Controlled powers and register operators are precomputed once.
class PhaseEstimator {
 public:
  PhaseEstimator(PeaConfig cfg, const EvolutionOperator& u, const ComplexVector& y) : cfg_(cfg) {
    cfg_.validate();
    if (!is_power_of_two(u.dim())) throw InvalidArgument("PhaseEstimator: system dimension must be a power of two");
    if (y.dim() != u.dim()) throw InvalidArgument("PhaseEstimator: input dimension does not match the operator");
    if (!y.is_normalized(1e-10)) throw InvalidArgument("PhaseEstimator: input must be a unit vector");
    n_ = log2_exact(u.dim());
    for (unsigned q = 0; q < cfg_.m; ++q) {
      powers_.push_back(u.power(std::uint64_t{1} << q));
      powers_adj_.push_back(powers_.back().adjoint());
    }
    input_ = input_preparation(y);
    input_adj_ = input_.adjoint();
    if (cfg_.mode == PeaMode::qft) {
      pre_ = hadamard_wall(cfg_.m);
      post_ = qft_matrix(cfg_.m).adjoint();
      post_adj_ = qft_matrix(cfg_.m);
    } else {
      f1_ = bias_vector(cfg_.m, cfg_.kappa);
    }
  }

  const PeaConfig& config() const noexcept { return cfg_; }
  unsigned m() const noexcept { return cfg_.m; }
  unsigned n() const noexcept { return n_; }

  /// A |0>|0>
  RegisterState prepare() const {
    RegisterState s = RegisterState::zero(cfg_.m, n_);
    apply(s);
    return s;
  }

  void apply(RegisterState& s) const {
    check(s);
    apply_system_matrix(s, input_);
    if (cfg_.mode == PeaMode::qft) {
      apply_phase_matrix(s, pre_);
      ladder(s, powers_);
      apply_phase_matrix(s, post_);
    } else {
      reflect_phase(s, f1_);
      ladder(s, powers_);
      reflect_phase(s, f1_);
    }
  }

  void apply_adjoint(RegisterState& s) const {
    check(s);
    if (cfg_.mode == PeaMode::qft) {
      apply_phase_matrix(s, post_adj_);
      ladder(s, powers_adj_);
      apply_phase_matrix(s, pre_);
    } else {
      reflect_phase(s, f1_);
      ladder(s, powers_adj_);
      reflect_phase(s, f1_);
    }
    apply_system_matrix(s, input_adj_);
  }

  /// One amplification step Q = A U_s A' U_f2.
  void amplification_step(RegisterState& s, const ComplexVector& f2) const {
    reflect_phase(s, f2);
    if (cfg_.variant == GroverVariant::standard_grover)
      apply_adjoint(s);
    else
      apply(s);
    reflect_zero(s);
    apply(s);
  }

 private:
  void check(const RegisterState& s) const {
    if (s.m() != cfg_.m || s.n() != n_) throw InvalidArgument("PhaseEstimator: register shape mismatch");
  }

  // Ladder of controlled U^{2^q}; the branch for phase index k receives U^k overall.
  void ladder(RegisterState& s, const std::vector<DenseMatrix>& powers) const {
    const std::size_t sd = s.system_dim();
    std::vector<cplx> buf(sd);
    for (unsigned q = 0; q < cfg_.m; ++q) {
      const DenseMatrix& up = powers[q];
      for (std::size_t k = 0; k < s.phase_dim(); ++k) {
        if (((k >> q) & 1U) == 0) continue;
        auto block = s.block(k);
        for (std::size_t r = 0; r < sd; ++r) {
          cplx acc{0.0, 0.0};
          for (std::size_t c = 0; c < sd; ++c) acc += up(r, c) * block[c];
          buf[r] = acc;
        }
        std::copy(buf.begin(), buf.end(), block.begin());
      }
    }
  }

  PeaConfig cfg_;
  unsigned n_ = 0;
  std::vector<DenseMatrix> powers_, powers_adj_;
  DenseMatrix input_, input_adj_;
  DenseMatrix pre_, post_, post_adj_;
  ComplexVector f1_;
};

/// Runs the estimator on |0>|0> with input |y> prepared on the system register.
inline RegisterState bpea_run(const PeaConfig& cfg, const EvolutionOperator& u, const ComplexVector& y) {
  return PhaseEstimator(cfg, u, y).prepare();
}

// ---- measurements ----

/// 1 - P(phase register = |0...0>)
inline double success_probability(const RegisterState& s) {
  double p0 = 0.0;
  for (const auto& z : s.block(0)) p0 += std::norm(z);
  return std::clamp(1.0 - p0 / s.amplitudes().norm_squared(), 0.0, 1.0);
}

/// Weight of the phase register along f2: || (<f2| (x) I) psi ||^2.
inline double f2_probability(const RegisterState& s) {
  const ComplexVector f2 = marking_vector(s.m());
  double p = 0.0;
  for (std::size_t c = 0; c < s.system_dim(); ++c) {
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < s.phase_dim(); ++k) acc += std::conj(f2[k]) * s.block(k)[c];
    p += std::norm(acc);
  }
  return p;
}

/// Computational-basis marginal (P0, P1) of one qubit.
/// Qubits 0..m-1 are phase qubits (bit q of the phase index); m..m+n-1 are system qubits.
inline std::pair<double, double> qubit_marginal(const RegisterState& s, unsigned qubit) {
  if (qubit >= s.m() + s.n()) throw InvalidArgument("qubit_marginal: qubit index out of range");
  const std::size_t sd = s.system_dim();
  double p1 = 0.0, total = 0.0;
  for (std::size_t idx = 0; idx < s.dim(); ++idx) {
    const double w = std::norm(s.amplitudes()[idx]);
    total += w;
    const bool set = qubit < s.m() ? ((idx / sd) >> qubit) & 1U : ((idx % sd) >> (qubit - s.m())) & 1U;
    if (set) p1 += w;
  }
  p1 /= total;
  return {1.0 - p1, p1};
}

/// rho_sys = Tr_phase |psi><psi|
inline DenseMatrix reduced_system_density(const RegisterState& s) {
  const std::size_t sd = s.system_dim();
  DenseMatrix rho(sd, sd);
  for (std::size_t k = 0; k < s.phase_dim(); ++k) {
    const auto b = s.block(k);
    for (std::size_t i = 0; i < sd; ++i) {
      if (b[i] == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < sd; ++j) rho(i, j) += b[i] * std::conj(b[j]);
    }
  }
  return rho;
}

/// <t| rho_sys |t> for a unit system vector t.
inline double system_fidelity(const RegisterState& s, const ComplexVector& target) {
  if (target.dim() != s.system_dim()) throw InvalidArgument("system_fidelity: dimension mismatch");
  double f = 0.0;
  for (std::size_t k = 0; k < s.phase_dim(); ++k) {
    const auto b = s.block(k);
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < b.size(); ++i) acc += std::conj(target[i]) * b[i];
    f += std::norm(acc);
  }
  return std::clamp(f, 0.0, 1.0);
}

/// Bias at which kappa/mu matches the mean amplitude and amplification stalls: sqrt(2^m).
inline double stagnation_check(unsigned m, double /*p0*/ = 0.0) {
  return std::sqrt(std::ldexp(1.0, static_cast<int>(m)));
}

// ---- amplification ----

struct TrajectoryPoint {
  std::size_t iteration = 0;
  double success_probability = 0.0;  // 1 - P(phase = 0)
  double f2_probability = 0.0;       // weight along the marking vector
  double fidelity = 0.0;             // <target| rho_sys |target>
  std::vector<double> phase_p0;      // P(phase qubit q = 0) for every phase qubit
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  std::optional<std::size_t> stop_iteration;  // first iteration meeting the stopping rule
  std::size_t peak_iteration = 0;             // argmax fidelity
  double peak_fidelity = 0.0;
  std::size_t first_peak_iteration = 0;       // first local maximum of fidelity

  /// Fills peak fields from `points`.
  void summarize() {
    peak_iteration = 0;
    peak_fidelity = points.empty() ? 0.0 : points.front().fidelity;
    for (const auto& p : points)
      if (p.fidelity > peak_fidelity) {
        peak_fidelity = p.fidelity;
        peak_iteration = p.iteration;
      }
    first_peak_iteration = points.empty() ? 0 : points.back().iteration;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
      if (points[i + 1].fidelity < points[i].fidelity) {
        first_peak_iteration = points[i].iteration;
        break;
      }
  }
};

struct AmplifyOptions {
  std::size_t max_iter = 30;
  double stop_tol = 0.05;     // |P0 - 1/2| on the designated phase qubit
  unsigned stop_qubit = 0;
  bool halt_on_stop = true;   // false keeps iterating to max_iter (full trajectories)
  std::optional<double> zero_tol;
};

struct AmplifyResult {
  RegisterState final_state;
  RegisterState peak_state;  // state at trajectory.peak_iteration
  Trajectory trajectory;
  ProjectedTarget target;    // normalized V V^dagger y and its norm
};

/// Normalized V V^dagger y over the eigenvectors of U with nonzero source eigenvalue.
inline ProjectedTarget evolution_target(const EvolutionOperator& u, const ComplexVector& y, double zero_tol) {
  ProjectedTarget out;
  ComplexVector acc(u.dim());
  for (std::size_t j = 0; j < u.dim(); ++j) {
    if (std::abs(u.eigenvalues()[j]) <= zero_tol) continue;
    ++out.rank;
    const ComplexVector v = u.eigenvectors().column(j);
    acc += v.dot(y) * v;
  }
  out.norm = acc.norm();
  if (out.norm <= 1e-12) throw DegenerateError("amplify: input lies in the null space of H");
  out.target = acc.normalized();
  return out;
}

/// Amplitude amplification from A|0>|0>, recording one trajectory point per iteration
/// (iteration 0 is the state before any Q).
inline AmplifyResult amplify(const PeaConfig& cfg, const EvolutionOperator& u, const ComplexVector& y,
                             const AmplifyOptions& opt = {}) {
  if (opt.stop_qubit >= cfg.m) throw InvalidArgument("amplify: stop qubit must be a phase qubit");
  const double zt = opt.zero_tol.value_or(u.zero_tol());
  ProjectedTarget target = evolution_target(u, y, zt);

  const PhaseEstimator est(cfg, u, y);
  const ComplexVector f2 = marking_vector(cfg.m);
  RegisterState state = est.prepare();
  RegisterState peak = state;
  Trajectory traj;
  double best = -1.0;

  for (std::size_t it = 0;; ++it) {
    TrajectoryPoint pt;
    pt.iteration = it;
    pt.success_probability = success_probability(state);
    pt.f2_probability = f2_probability(state);
    pt.fidelity = system_fidelity(state, target.target);
    for (unsigned q = 0; q < cfg.m; ++q) pt.phase_p0.push_back(qubit_marginal(state, q).first);
    if (pt.fidelity > best) {
      best = pt.fidelity;
      peak = state;
    }
    const bool stop = std::abs(pt.phase_p0[opt.stop_qubit] - 0.5) <= opt.stop_tol;
    traj.points.push_back(std::move(pt));
    if (stop && !traj.stop_iteration) {
      traj.stop_iteration = it;
      if (opt.halt_on_stop) break;
    }
    if (it >= opt.max_iter) break;
    est.amplification_step(state, f2);
  }
  traj.summarize();
  return {std::move(state), std::move(peak), std::move(traj), std::move(target)};
}

/// Dense matrix of a statevector map, built column by column from basis states.
inline DenseMatrix dense_operator(unsigned m, unsigned n, const std::function<void(RegisterState&)>& op) {
  const std::size_t dim = std::size_t{1} << (m + n);
  DenseMatrix out(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    RegisterState s(m, n);
    s.amplitudes()[j] = 1.0;
    op(s);
    out.set_column(j, s.amplitudes());
  }
  return out;
}

}  // namespace qsc
