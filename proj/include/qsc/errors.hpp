#pragma once

#include <stdexcept>
#include <string>

namespace qsc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (shape mismatch, non-Hermitian input, out-of-range parameter).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Iterative routine hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The requested quantity vanishes (zero projection, zero matrix, empty dataset).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Nonzero eigenvalues cannot be separated from the zero phase bin at the configured register width.
class ResolutionError : public Error {
 public:
  explicit ResolutionError(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// Malformed input file. Carries the 1-based line number when one applies (0 otherwise).
class IngestError : public Error {
 public:
  IngestError(const std::string& what, std::size_t line)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qsc
