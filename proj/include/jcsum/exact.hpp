#pragma once

// Direct truncated summation of the Jaynes-Cummings sum. These routines are
// the ground truth every other evaluation route is checked against.

#include <cstddef>
#include <span>
#include <vector>

#include "jcsum/params.hpp"

namespace jcsum {

/// Photon-number distribution W_n, n = 0..truncation_index().
class PhotonDistribution {
 public:
  /// Validates and wraps caller-supplied weights (non-negative, finite, total
  /// mass within 1e-14 of one).
  static PhotonDistribution from_weights(std::vector<double> weights);

  std::span<const double> weights() const noexcept { return weights_; }
  double weight(std::size_t n) const noexcept { return n < weights_.size() ? weights_[n] : 0.0; }
  double mean() const noexcept { return mean_; }
  std::size_t truncation_index() const noexcept { return weights_.size() - 1; }
  double total_mass() const noexcept;

 private:
  friend PhotonDistribution make_poisson(double alpha, double tail_tolerance);
  explicit PhotonDistribution(std::vector<double> weights);

  std::vector<double> weights_;
  double mean_ = 0.0;
};

inline constexpr double kDefaultTailTolerance = 1e-14;

/// Poisson weights |alpha|^{2n} e^{-|alpha|^2} / n! truncated at the smallest
/// N_max whose omitted tail mass is below tail_tolerance, then renormalized.
PhotonDistribution make_poisson(double alpha, double tail_tolerance = kDefaultTailTolerance);

/// -sum_n W_n (mu + n cos(2 sqrt(mu+n) t)) / (mu + n), t in lambda*t units.
/// The n = 0 term at mu = 0 is -W_0.
double inversion_exact(const PhotonDistribution& dist, const ModelParams& params, double t);

/// -sum_n W_n cos(2 sqrt(n) t).
double inversion_exact_resonant(const PhotonDistribution& dist, double t);

/// Time-dependent remainder of the split: -sum_n W_n n cos(2 sqrt(mu+n) t)/(mu+n),
/// with the n = 0 term taken as -W_0 when mu = 0.
double inversion_dynamic_part(const PhotonDistribution& dist, const ModelParams& params, double t);

struct StaticPart {
  double value = 0.0;       ///< direct summation
  double asymptotic = 0.0;  ///< large-|alpha| estimate -nu
};

/// Time-independent piece -e^{-|alpha|^2} sum_n (|alpha|^{2n}/n!) mu/(mu+n).
/// Exactly zero at mu = 0.
StaticPart static_part(double alpha, double mu);

/// Same sum over an arbitrary distribution.
double static_part(const PhotonDistribution& dist, double mu);

}  // namespace jcsum
