#include "jcsum/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jcsum/error.hpp"

namespace jcsum {

TimeUnit parse_time_unit(std::string_view name) {
  if (name == "lambda-t") return TimeUnit::lambda_t;
  if (name == "t-over-alpha") return TimeUnit::t_over_alpha;
  if (name == "t-over-T") return TimeUnit::t_over_T;
  throw InvalidParameter("unknown time unit '" + std::string(name) +
                         "' (expected lambda-t, t-over-alpha or t-over-T)");
}

std::string_view to_string(TimeUnit unit) {
  switch (unit) {
    case TimeUnit::lambda_t: return "lambda-t";
    case TimeUnit::t_over_alpha: return "t-over-alpha";
    case TimeUnit::t_over_T: return "t-over-T";
  }
  return "lambda-t";
}

namespace {

void check_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw InvalidParameter("alpha must be finite and non-negative");
}

}  // namespace

ModelParams ModelParams::from_nu(double alpha, double nu, TimeUnit unit) {
  check_alpha(alpha);
  if (!std::isfinite(nu) || nu < 0.0) throw InvalidParameter("nu must be finite and non-negative");
  if (alpha == 0.0 && nu != 0.0)
    throw InvalidParameter("nu > 0 needs alpha > 0 (mu = nu |alpha|^2)");
  return ModelParams{alpha, nu * alpha * alpha, nu, unit};
}

ModelParams ModelParams::from_mu(double alpha, double mu, TimeUnit unit) {
  check_alpha(alpha);
  if (!std::isfinite(mu) || mu < 0.0) throw InvalidParameter("mu must be finite and non-negative");
  if (alpha == 0.0 && mu != 0.0)
    throw InvalidParameter("mu > 0 needs alpha > 0 to define nu = mu / |alpha|^2");
  const double nu = alpha > 0.0 ? mu / (alpha * alpha) : 0.0;
  return ModelParams{alpha, mu, nu, unit};
}

double ModelParams::revival_period() const noexcept {
  return 2.0 * std::numbers::pi * alpha * std::sqrt(1.0 + nu);
}

double ModelParams::to_lambda_t(double value, TimeUnit unit) const {
  switch (unit) {
    case TimeUnit::lambda_t: return value;
    case TimeUnit::t_over_alpha:
      if (alpha <= 0.0) throw InvalidParameter("t-over-alpha needs alpha > 0");
      return value * alpha;
    case TimeUnit::t_over_T:
      if (alpha <= 0.0) throw InvalidParameter("t-over-T needs alpha > 0");
      return value * revival_period();
  }
  return value;
}

double ModelParams::from_lambda_t(double lambda_t, TimeUnit unit) const {
  switch (unit) {
    case TimeUnit::lambda_t: return lambda_t;
    case TimeUnit::t_over_alpha:
      if (alpha <= 0.0) throw InvalidParameter("t-over-alpha needs alpha > 0");
      return lambda_t / alpha;
    case TimeUnit::t_over_T:
      if (alpha <= 0.0) throw InvalidParameter("t-over-T needs alpha > 0");
      return lambda_t / revival_period();
  }
  return lambda_t;
}

}  // namespace jcsum
