#pragma once

// Dense complex linear algebra used by every other module: vectors, matrices,
// a cyclic Jacobi Hermitian eigensolver, and the reflection/tensor helpers
// the phase-estimation operators are built from.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsc/errors.hpp"

namespace qsc {

using cplx = std::complex<double>;

namespace tol {
inline constexpr double kOperator = 1e-10;  // operator identities (unitarity, involution)
inline constexpr double kVector = 1e-12;    // vector norms
}  // namespace tol

class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim) : data_(dim, cplx{0.0, 0.0}) {}
  ComplexVector(std::initializer_list<cplx> init) : data_(init) {}
  explicit ComplexVector(std::vector<cplx> data) : data_(std::move(data)) {}

  static ComplexVector from_real(std::span<const double> values) {
    ComplexVector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i];
    return v;
  }

  static ComplexVector basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw InvalidArgument("basis index out of range");
    ComplexVector v(dim);
    v[index] = 1.0;
    return v;
  }

  std::size_t dim() const noexcept { return data_.size(); }
  std::size_t size() const noexcept { return data_.size(); }

  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }

  std::span<cplx> span() noexcept { return data_; }
  std::span<const cplx> span() const noexcept { return data_; }
  const std::vector<cplx>& data() const noexcept { return data_; }

  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  double norm_squared() const noexcept {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return s;
  }
  double norm() const noexcept { return std::sqrt(norm_squared()); }

  bool is_normalized(double tolerance = tol::kVector) const noexcept {
    return std::abs(norm() - 1.0) <= tolerance;
  }

  ComplexVector normalized() const {
    const double n = norm();
    if (n == 0.0) throw DegenerateError("cannot normalize the zero vector");
    ComplexVector out(*this);
    for (auto& z : out.data_) z /= n;
    return out;
  }

  /// <this|other>, conjugate-linear in the first argument.
  cplx dot(const ComplexVector& other) const {
    if (dim() != other.dim()) throw InvalidArgument("dot: dimension mismatch");
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < data_.size(); ++i) s += std::conj(data_[i]) * other.data_[i];
    return s;
  }

  ComplexVector& operator+=(const ComplexVector& o) {
    if (dim() != o.dim()) throw InvalidArgument("vector add: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  ComplexVector& operator-=(const ComplexVector& o) {
    if (dim() != o.dim()) throw InvalidArgument("vector sub: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  ComplexVector& operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend ComplexVector operator+(ComplexVector a, const ComplexVector& b) { return a += b; }
  friend ComplexVector operator-(ComplexVector a, const ComplexVector& b) { return a -= b; }
  friend ComplexVector operator*(cplx s, ComplexVector v) { return v *= s; }
  friend ComplexVector operator*(ComplexVector v, cplx s) { return v *= s; }

 private:
  std::vector<cplx> data_;
};

inline double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Row-major dense complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}
  DenseMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InvalidArgument("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static DenseMatrix diagonal(std::span<const double> d) {
    DenseMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static DenseMatrix diagonal(std::initializer_list<double> d) {
    return diagonal(std::span<const double>(d.begin(), d.size()));
  }

  static DenseMatrix from_columns(const std::vector<ComplexVector>& cols) {
    if (cols.empty()) throw InvalidArgument("from_columns: no columns");
    DenseMatrix m(cols.front().dim(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const cplx> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<cplx>& data() const noexcept { return data_; }

  ComplexVector column(std::size_t j) const {
    ComplexVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_column(std::size_t j, const ComplexVector& v) {
    if (v.dim() != rows_) throw InvalidArgument("set_column: dimension mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  DenseMatrix adjoint() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  DenseMatrix transpose() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  cplx trace() const {
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  double max_abs() const noexcept {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  double frobenius_norm() const noexcept {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    check_same_shape(o, "matrix add");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    check_same_shape(o, "matrix sub");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  DenseMatrix& operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(cplx s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator*(DenseMatrix a, cplx s) { return a *= s; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matmul: inner dimension mismatch");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend ComplexVector operator*(const DenseMatrix& a, const ComplexVector& v) {
    if (a.cols_ != v.dim()) throw InvalidArgument("matvec: dimension mismatch");
    ComplexVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      cplx s{0.0, 0.0};
      for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  bool is_hermitian(double tolerance = tol::kVector) const noexcept {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tolerance) return false;
    return true;
  }

  bool is_unitary(double tolerance = tol::kOperator) const {
    if (!is_square()) return false;
    return max_abs_diff_to_identity(adjoint() * (*this)) <= tolerance;
  }

  static double max_abs_diff_to_identity(const DenseMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        worst = std::max(worst, std::abs(m(i, j) - (i == j ? cplx{1.0} : cplx{0.0})));
    return worst;
  }

 private:
  void check_same_shape(const DenseMatrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument(std::string(what) + ": shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

/// Induced 1-norm: largest absolute column sum.
inline double matrix_1norm(const DenseMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

inline ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < b.dim(); ++k) out[i * b.dim() + k] = a[i] * b[k];
  return out;
}

/// |u><v|
inline DenseMatrix outer(const ComplexVector& u, const ComplexVector& v) {
  DenseMatrix out(u.dim(), v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) out(i, j) = u[i] * std::conj(v[j]);
  return out;
}

/// Householder reflection I - 2|u><u| for a unit vector u.
inline DenseMatrix proj_reflection(const ComplexVector& u) {
  if (!u.is_normalized()) throw InvalidArgument("proj_reflection: vector is not normalized");
  DenseMatrix r = DenseMatrix::identity(u.dim());
  r -= 2.0 * outer(u, u);
  return r;
}

/// Householder reflection R (Hermitian, involutory) with R|0> = e^{-i phi}|y>, phi = arg <0|y>.
///
/// u = (|0> - e^{-i phi}|y>) / norm; R = I when |y> is already |0> up to phase.
/// e^{i phi} R maps |0> to |y> exactly; R maps |y> to e^{i phi}|0>.
struct BasisReflection {
  DenseMatrix reflection;
  cplx phase{1.0, 0.0};  // e^{i phi}
};

inline BasisReflection householder_to_basis(const ComplexVector& y) {
  if (!y.is_normalized(1e-10)) throw InvalidArgument("householder_to_basis: vector is not normalized");
  const double mag0 = std::abs(y[0]);
  const cplx phase = mag0 > 0.0 ? y[0] / mag0 : cplx{1.0, 0.0};
  ComplexVector u = ComplexVector::basis(y.dim(), 0);
  u -= std::conj(phase) * y;
  const double un = u.norm();
  if (un < 1e-15) return {DenseMatrix::identity(y.dim()), phase};
  u *= 1.0 / un;
  return {proj_reflection(u), phase};
}

/// |<a|b>|^2 for unit vectors of equal dimension.
inline double fidelity(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("fidelity: dimension mismatch");
  if (!a.is_normalized(1e-10) || !b.is_normalized(1e-10)) throw InvalidArgument("fidelity: inputs must be normalized");
  return std::clamp(std::norm(a.dot(b)), 0.0, 1.0);
}

/// <v|A|v> for Hermitian A, real part.
inline double expectation(const DenseMatrix& a, const ComplexVector& v) {
  return std::real(v.dot(a * v));
}

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column i pairs with values[i]

  DenseMatrix reconstruct() const {
    DenseMatrix scaled = vectors;
    for (std::size_t i = 0; i < scaled.rows(); ++i)
      for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= values[j];
    return scaled * vectors.adjoint();
  }
};

struct EigOptions {
  double tolerance = 1e-12;       // relative off-diagonal Frobenius target
  int max_sweeps = 100;
  double hermitian_tolerance = 1e-12;  // relative to max |A_ij|
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// Each rotation first removes the phase of A(p,q) with a diagonal unitary and then
/// applies the classical real rotation; sweeps continue until the off-diagonal
/// Frobenius mass falls below tolerance * ||A||_F.
inline EigenDecomposition hermitian_eig(const DenseMatrix& input, const EigOptions& opt = {}) {
  if (!input.is_square() || input.rows() == 0) throw InvalidArgument("hermitian_eig: matrix must be square and non-empty");
  const std::size_t n = input.rows();
  const double scale = std::max(1.0, input.max_abs());
  if (!input.is_hermitian(opt.hermitian_tolerance * scale)) throw InvalidArgument("hermitian_eig: matrix is not Hermitian");

  DenseMatrix a = input;
  // Symmetrize so rounding in the input does not leak into the rotations.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = std::real(a(i, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  DenseMatrix v = DenseMatrix::identity(n);

  const double total = a.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  bool converged = n == 1 || total == 0.0;
  for (int sweep = 0; sweep < opt.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const cplx phase = apq / mag;  // e^{i alpha}
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // G = diag(1, e^{-i alpha}) * [[c, s], [-s, c]] on the (p, q) plane.
        const cplx gpp = c;
        const cplx gpq = s;
        const cplx gqp = -s * std::conj(phase);
        const cplx gqq = c * std::conj(phase);
        // A <- A G
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        // A <- G^dagger A
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = std::real(a(p, p));
        a(q, q) = std::real(a(q, q));
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
    converged = off_norm() <= opt.tolerance * total;
  }
  if (!converged) throw ConvergenceError("hermitian_eig: Jacobi sweeps did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return std::real(a(i, i)) < std::real(a(j, j)); });

  EigenDecomposition out{std::vector<double>(n), DenseMatrix(n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = std::real(a(order[c], order[c]));
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

inline double eigen_residual(const DenseMatrix& a, const EigenDecomposition& eig) {
  double worst = 0.0;
  for (std::size_t j = 0; j < eig.values.size(); ++j) {
    const ComplexVector col = eig.vectors.column(j);
    ComplexVector r = a * col;
    r -= eig.values[j] * col;
    worst = std::max(worst, r.norm());
  }
  return worst;
}

/// Default "zero eigenvalue" threshold: 1e-8 * ||H||_1.
inline double default_zero_tol(const DenseMatrix& h) { return 1e-8 * matrix_1norm(h); }

/// Exact integer power of two test.
constexpr bool is_power_of_two(std::size_t x) noexcept { return x != 0 && (x & (x - 1)) == 0; }

constexpr unsigned log2_exact(std::size_t x) noexcept {
  unsigned r = 0;
  while ((std::size_t{1} << r) < x) ++r;
  return r;
}

}  // namespace qsc
