#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace jcsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is non-finite or outside its documented range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The argument lies outside the domain of the mathematical function
/// (e.g. W_k(0) for k != 0, or a series evaluated outside its radius).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iteration or quadrature did not reach its tolerance.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double error_estimate = 0.0,
                   std::complex<double> last_iterate = {})
      : Error(what), error_estimate_(error_estimate), last_iterate_(last_iterate) {}

  double error_estimate() const noexcept { return error_estimate_; }
  std::complex<double> last_iterate() const noexcept { return last_iterate_; }

 private:
  double error_estimate_;
  std::complex<double> last_iterate_;
};

/// A root finder converged, but not on the requested branch.
class WrongBranch : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// A trajectory was queried at a tau it does not cover.
class InterpolationGap : public Error {
 public:
  InterpolationGap(const std::string& what, double tau) : Error(what), tau_(tau) {}
  double tau() const noexcept { return tau_; }

 private:
  double tau_;
};

}  // namespace jcsum
