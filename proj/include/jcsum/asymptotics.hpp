#pragma once

// Closed-form collapse and revival laws from the leading saddle-point
// expansion. All times are lambda*t.

#include <array>

namespace jcsum {

/// full keeps the (t - t_n)^2 correction inside the revival cosine;
/// simplified drops it.
enum class RevivalMode { full, simplified };

/// Gaussian-envelope form of one revival:
///   -prefactor exp(-(t - t_n)^2 / 2 width^2) cos(c0 + c1 t + c2 t^2)
struct EnvelopeDescriptor {
  double center_time = 0.0;
  double width = 0.0;
  double prefactor = 0.0;
  std::array<double, 3> phase_coefficients{};  ///< c0, c1, c2

  double operator()(double t) const;
};

/// -e^{-t^2/2} cos(2 |alpha| t)
double collapse_resonant(double alpha, double t);
/// -e^{-t^2 / 2(1+nu)} cos(2 |alpha| t (1+nu)^{1/2})
double collapse_detuned(double alpha, double nu, double t);

/// n-th revival around t_n = 2 pi n |alpha|.
double revival_resonant(double alpha, int n, double t, RevivalMode mode = RevivalMode::full);

/// n-th detuned revival around t_n = 2 pi n |alpha| (1+nu)^{1/2}, including
/// the phase 2 pi n mu (reduced mod 2 pi). Identical to revival_resonant at
/// nu = 0 for the same mode.
double revival_detuned(double alpha, double nu, int n, double t, RevivalMode mode = RevivalMode::simplified);

EnvelopeDescriptor revival_envelope(double alpha, double nu, int n, RevivalMode mode = RevivalMode::full);

}  // namespace jcsum
