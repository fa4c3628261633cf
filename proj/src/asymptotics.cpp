#include "jcsum/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jcsum/error.hpp"

namespace jcsum {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha(double alpha, const char* who) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) throw InvalidParameter(std::string(who) + ": alpha must be > 0");
}

void check_nu(double nu, const char* who) {
  if (!std::isfinite(nu) || nu < 0.0) throw InvalidParameter(std::string(who) + ": nu must be >= 0");
}

void check_time(double t, const char* who) {
  if (!std::isfinite(t) || t < 0.0) throw InvalidParameter(std::string(who) + ": t must be finite and >= 0");
}

void check_n(int n, const char* who) {
  if (n < 1) throw InvalidParameter(std::string(who) + ": revival index must be >= 1");
}

struct Revival {
  double tn;
  double inv_width2;  // 1 / width^2
  double prefactor;
  double phase0;      // 2 pi n mu mod 2 pi, minus pi/4
  double quad;        // coefficient of t^2
  double corr;        // coefficient of -(t - t_n)^2 in full mode
};

Revival revival_terms(double alpha, double nu, int n) {
  const double q = 1.0 + nu;
  const double pn2 = kPi * kPi * n * n;
  const double mu = nu * alpha * alpha;
  Revival r{};
  r.tn = 2.0 * kPi * n * alpha * std::sqrt(q);
  r.inv_width2 = q / (pn2 + q * q);
  r.prefactor = std::pow(1.0 + pn2 / (q * q), -0.25);
  r.phase0 = 2.0 * kPi * std::fmod(n * mu, 1.0) - 0.25 * kPi;
  r.quad = 1.0 / (2.0 * kPi * n);
  r.corr = q * q / (2.0 * kPi * n * (pn2 + q * q));
  return r;
}

double revival_value(const Revival& r, double t, RevivalMode mode) {
  const double d2 = (t - r.tn) * (t - r.tn);
  double phase = r.phase0 + r.quad * t * t;
  if (mode == RevivalMode::full) phase -= r.corr * d2;
  return -r.prefactor * std::exp(-0.5 * r.inv_width2 * d2) * std::cos(phase);
}

}  // namespace

double EnvelopeDescriptor::operator()(double t) const {
  const double d = t - center_time;
  const auto& c = phase_coefficients;
  return -prefactor * std::exp(-0.5 * d * d / (width * width)) * std::cos(c[0] + t * (c[1] + t * c[2]));
}

double collapse_resonant(double alpha, double t) { return collapse_detuned(alpha, 0.0, t); }

double collapse_detuned(double alpha, double nu, double t) {
  check_alpha(alpha, "collapse");
  check_nu(nu, "collapse");
  check_time(t, "collapse");
  const double q = 1.0 + nu;
  return -std::exp(-0.5 * t * t / q) * std::cos(2.0 * alpha * t * std::sqrt(q));
}

double revival_resonant(double alpha, int n, double t, RevivalMode mode) {
  return revival_detuned(alpha, 0.0, n, t, mode);
}

double revival_detuned(double alpha, double nu, int n, double t, RevivalMode mode) {
  check_alpha(alpha, "revival");
  check_nu(nu, "revival");
  check_n(n, "revival");
  check_time(t, "revival");
  return revival_value(revival_terms(alpha, nu, n), t, mode);
}

EnvelopeDescriptor revival_envelope(double alpha, double nu, int n, RevivalMode mode) {
  check_alpha(alpha, "revival_envelope");
  check_nu(nu, "revival_envelope");
  check_n(n, "revival_envelope");
  const Revival r = revival_terms(alpha, nu, n);
  EnvelopeDescriptor e;
  e.center_time = r.tn;
  e.width = 1.0 / std::sqrt(r.inv_width2);
  e.prefactor = r.prefactor;
  const double corr = mode == RevivalMode::full ? r.corr : 0.0;
  e.phase_coefficients = {r.phase0 - corr * r.tn * r.tn, 2.0 * corr * r.tn, r.quad - corr};
  return e;
}

}  // namespace jcsum
