#pragma once

#include <string_view>

namespace jcsum {

/// Reporting convention for time values.
///   lambda_t      raw coupling time lambda*t
///   t_over_alpha  lambda*t / |alpha|
///   t_over_T      lambda*t / T with T = 2 pi |alpha| (1 + nu)^{1/2}
enum class TimeUnit { lambda_t, t_over_alpha, t_over_T };

TimeUnit parse_time_unit(std::string_view name);
std::string_view to_string(TimeUnit unit);

/// Coherent-field Jaynes-Cummings parameters.
///
/// mu is the absolute detuning Delta^2 / (4 lambda^2); nu = mu / |alpha|^2 is
/// the detuning relative to the mean photon number. Build through the factory
/// functions so the two stay consistent.
struct ModelParams {
  double alpha = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  TimeUnit time_unit = TimeUnit::lambda_t;

  static ModelParams from_nu(double alpha, double nu, TimeUnit unit = TimeUnit::lambda_t);
  static ModelParams from_mu(double alpha, double mu, TimeUnit unit = TimeUnit::lambda_t);

  bool resonant() const noexcept { return mu == 0.0; }

  /// Revival period T = 2 pi |alpha| (1 + nu)^{1/2} in lambda*t units.
  double revival_period() const noexcept;

  /// Converts a time in `unit` to lambda*t and back.
  double to_lambda_t(double value, TimeUnit unit) const;
  double from_lambda_t(double lambda_t, TimeUnit unit) const;

  /// tau = t^2 / |alpha|^2 for t in lambda*t units.
  double tau(double lambda_t) const noexcept { return lambda_t * lambda_t / (alpha * alpha); }
};

}  // namespace jcsum
