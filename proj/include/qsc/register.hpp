#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qsc/numerics.hpp"

namespace qsc {

/// Pure state over an m-qubit phase register and an n-qubit system register.
///
/// Basis index = phase_index * 2^n + system_index (phase register most significant).
/// Phase qubit q is bit q of phase_index; it controls U^{2^q} during phase estimation.
class RegisterState {
 public:
  RegisterState(unsigned m, unsigned n) : m_(m), n_(n), amps_(std::size_t{1} << (m + n)) {
    if (m + n >= 40) throw InvalidArgument("RegisterState: register too large for a dense statevector");
  }

  RegisterState(unsigned m, unsigned n, ComplexVector amplitudes) : m_(m), n_(n), amps_(std::move(amplitudes)) {
    if (amps_.dim() != (std::size_t{1} << (m + n))) throw InvalidArgument("RegisterState: amplitude count must be 2^(m+n)");
  }

  /// |0>_phase (x) |system>
  static RegisterState with_system(unsigned m, const ComplexVector& system) {
    if (!is_power_of_two(system.dim())) throw InvalidArgument("RegisterState: system dimension must be a power of two");
    RegisterState s(m, log2_exact(system.dim()));
    for (std::size_t i = 0; i < system.dim(); ++i) s.amps_[i] = system[i];
    return s;
  }

  /// |0...0>
  static RegisterState zero(unsigned m, unsigned n) {
    RegisterState s(m, n);
    s.amps_[0] = 1.0;
    return s;
  }

  unsigned m() const noexcept { return m_; }
  unsigned n() const noexcept { return n_; }
  std::size_t phase_dim() const noexcept { return std::size_t{1} << m_; }
  std::size_t system_dim() const noexcept { return std::size_t{1} << n_; }
  std::size_t dim() const noexcept { return amps_.dim(); }

  const ComplexVector& amplitudes() const noexcept { return amps_; }
  ComplexVector& amplitudes() noexcept { return amps_; }

  /// System amplitudes on the branch where the phase register holds `phase_index`.
  std::span<cplx> block(std::size_t phase_index) { return amps_.span().subspan(phase_index * system_dim(), system_dim()); }
  std::span<const cplx> block(std::size_t phase_index) const {
    return amps_.span().subspan(phase_index * system_dim(), system_dim());
  }

  double norm() const noexcept { return amps_.norm(); }

 private:
  unsigned m_;
  unsigned n_;
  ComplexVector amps_;
};

}  // namespace qsc
