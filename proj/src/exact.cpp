#include "jcsum/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jcsum/error.hpp"

namespace jcsum {

PhotonDistribution::PhotonDistribution(std::vector<double> weights) : weights_(std::move(weights)) {
  for (std::size_t n = 0; n < weights_.size(); ++n) mean_ += static_cast<double>(n) * weights_[n];
}

PhotonDistribution PhotonDistribution::from_weights(std::vector<double> weights) {
  if (weights.empty()) throw InvalidParameter("photon distribution needs at least one weight");
  double mass = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0)
      throw InvalidParameter("photon weights must be finite and non-negative");
    mass += w;
  }
  if (std::abs(mass - 1.0) > 1e-14 * static_cast<double>(weights.size()) + 1e-14)
    throw InvalidParameter("photon weights must sum to one");
  return PhotonDistribution(std::move(weights));
}

double PhotonDistribution::total_mass() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

PhotonDistribution make_poisson(double alpha, double tail_tolerance) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw InvalidParameter("make_poisson: alpha must be finite and non-negative");
  if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0))
    throw InvalidParameter("make_poisson: tail_tolerance must lie in (0, 1)");
  const double a2 = alpha * alpha;
  if (a2 == 0.0) return PhotonDistribution(std::vector<double>{1.0});

  // Start at the mode in log space, then recurse outward in linear space so
  // neither e^{-|alpha|^2} nor |alpha|^{2n} is ever formed on its own.
  const auto mode = static_cast<std::size_t>(std::floor(a2));
  const double md = static_cast<double>(mode);
  const double log_mode = md * std::log(a2) - a2 - std::lgamma(md + 1.0);

  const double spread = std::sqrt(a2);
  const auto upper = static_cast<std::size_t>(a2 + 40.0 * spread + 60.0);
  std::vector<double> w(upper + 1, 0.0);
  w[mode] = std::exp(log_mode);
  for (std::size_t n = mode; n > 0; --n) w[n - 1] = w[n] * static_cast<double>(n) / a2;
  for (std::size_t n = mode; n < upper; ++n) w[n + 1] = w[n] * a2 / static_cast<double>(n + 1);

  // Suffix sums from the far tail give the omitted mass without cancellation.
  std::size_t n_max = upper;
  double tail = 0.0;
  for (std::size_t n = upper; n > mode; --n) {
    if (tail + w[n] >= tail_tolerance) break;
    tail += w[n];
    n_max = n - 1;
  }
  w.resize(n_max + 1);
  // Renormalize so the truncated distribution has unit mass.
  double mass = 0.0;
  for (std::size_t n = n_max + 1; n-- > 0;) mass += w[n];
  for (double& x : w) x /= mass;
  return PhotonDistribution(std::move(w));
}

namespace {

void check_time(double t) {
  if (!std::isfinite(t) || t < 0.0) throw InvalidParameter("time must be finite and non-negative");
}

}  // namespace

double inversion_exact(const PhotonDistribution& dist, const ModelParams& params, double t) {
  check_time(t);
  const double mu = params.mu;
  const auto w = dist.weights();
  double sum = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n) {
    const double nd = static_cast<double>(n);
    const double shifted = mu + nd;
    if (shifted == 0.0) {
      sum += w[n];
      continue;
    }
    sum += w[n] * (mu + nd * std::cos(2.0 * std::sqrt(shifted) * t)) / shifted;
  }
  // rounding can carry a unit-mass sum one ulp past 1
  return -std::clamp(sum, -1.0, 1.0);
}

double inversion_exact_resonant(const PhotonDistribution& dist, double t) {
  check_time(t);
  const auto w = dist.weights();
  double sum = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n)
    sum += w[n] * std::cos(2.0 * std::sqrt(static_cast<double>(n)) * t);
  return -std::clamp(sum, -1.0, 1.0);
}

double inversion_dynamic_part(const PhotonDistribution& dist, const ModelParams& params, double t) {
  check_time(t);
  const double mu = params.mu;
  const auto w = dist.weights();
  double sum = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n) {
    const double nd = static_cast<double>(n);
    const double shifted = mu + nd;
    if (shifted == 0.0) {
      sum += w[n];
      continue;
    }
    sum += w[n] * nd * std::cos(2.0 * std::sqrt(shifted) * t) / shifted;
  }
  return -sum;
}

double static_part(const PhotonDistribution& dist, double mu) {
  if (!std::isfinite(mu) || mu < 0.0) throw InvalidParameter("static_part: mu must be non-negative");
  if (mu == 0.0) return 0.0;
  const auto w = dist.weights();
  double sum = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n) sum += w[n] * mu / (mu + static_cast<double>(n));
  return -sum;
}

StaticPart static_part(double alpha, double mu) {
  if (!std::isfinite(alpha) || alpha <= 0.0) throw InvalidParameter("static_part: alpha must be positive");
  const auto dist = make_poisson(alpha, 1e-16);
  return StaticPart{static_part(dist, mu), -mu / (alpha * alpha)};
}

}  // namespace jcsum
