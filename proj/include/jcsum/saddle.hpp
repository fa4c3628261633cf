#pragma once

// Saddle-point trajectories F(tau) of the contour integral and the
// superposition of their contributions
//
//   <sigma_3> ~ -sum |f|^{-1/2} e^{|alpha|^2 Re phi} cos(|alpha|^2 Im phi - arg(f) / 2)
//
// with phi = -tau/(2F) + 2 F nu + e^{2F} - 1 and f = 1 + F + 4 F^3 nu / tau.
// F solves tau/4 + F^2 (nu + e^{2F}) = 0, i.e. F = W(+-i tau^{1/2}/2, nu).

#include <complex>
#include <span>
#include <vector>

#include "jcsum/lambert.hpp"
#include "jcsum/params.hpp"

namespace jcsum {

/// phi(F) = -tau/(2F) + e^{2F} - 1. Throws DomainError at F = 0.
cplx phi_resonant(cplx F, double tau);
/// phi_nu(F) = -tau/(2F) + 2 F nu + e^{2F} - 1. Throws DomainError at F = 0.
cplx phi_detuned(cplx F, double tau, double nu);
/// f_nu = 1 + F + 4 F^3 nu / tau (1 + F at nu = 0, for any tau).
cplx curvature_factor(cplx F, double tau, double nu);

/// tau/4 + F^2 (nu + e^{2F}).
cplx saddle_residual(cplx F, double tau, double nu);

struct SaddleSample {
  double tau = 0.0;
  cplx F;
  cplx phi;
  cplx f;
};

/// Saddle point of one branch sampled on an increasing tau grid.
///
/// Branch identity is continuation ancestry: trajectory n (the revival
/// index of `branch`) is the curve through F = i pi n at
/// tau = 4 pi^2 n^2 (1 + nu); the principal one starts at F = 0, tau = 0.
/// Mirrored branches are complex conjugates of each other.
class SaddleTrajectory {
 public:
  BranchIndex branch() const noexcept { return branch_; }
  double nu() const noexcept { return nu_; }
  std::span<const SaddleSample> samples() const noexcept { return samples_; }
  double tau_min() const;
  double tau_max() const;
  bool covers(double tau) const noexcept;

  /// Saddle at a tau between samples, continued from the nearest sample.
  /// Throws InterpolationGap outside [tau_min, tau_max].
  SaddleSample at(double tau) const;

 private:
  friend SaddleTrajectory trace_trajectory(BranchIndex, double, std::span<const double>);
  SaddleTrajectory(BranchIndex b, double nu, std::vector<SaddleSample> s)
      : branch_(b), nu_(nu), samples_(std::move(s)) {}

  BranchIndex branch_;
  double nu_;
  std::vector<SaddleSample> samples_;
};

/// Continues the branch's saddle point over tau_grid (strictly increasing,
/// positive) in steps of at most min(1e-2, 0.05 tau^{1/2}) in tau^{1/2}.
/// Throws NumericalFailure naming the tau where the corrector left the
/// predicted neighbourhood and step halving could not recover.
SaddleTrajectory trace_trajectory(BranchIndex branch, double nu, std::span<const double> tau_grid);

enum class SuperpositionPolicy {
  sum,  ///< every branch above the cutoff
  max,  ///< only the branch with the largest |f|^{-1/2} e^{|alpha|^2 Re phi}
};

struct SaddleOptions {
  SuperpositionPolicy policy = SuperpositionPolicy::sum;
  double cutoff = 30.0;  ///< drop branches with |alpha|^2 Re phi < -cutoff
};

struct BranchContribution {
  BranchIndex branch;
  double value = 0.0;  ///< 0 when not included
  cplx F;
  cplx phi;
  cplx f;
  bool included = false;
};

struct SaddleResult {
  double total = 0.0;
  std::vector<BranchContribution> branches;
};

/// Saddle-point inversion at lambda*t = t. A branch and its mirror give the
/// same real term, so branches are deduplicated by |revival index|. At t = 0
/// the principal branch gives -1 and the others vanish.
SaddleResult inversion_saddle(const ModelParams& params, double t, std::span<const BranchIndex> branches,
                              const SaddleOptions& opts = {});

/// Same, reading the saddles from precomputed trajectories.
SaddleResult inversion_saddle(const ModelParams& params, double t, std::span<const SaddleTrajectory> trajectories,
                              const SaddleOptions& opts = {});

/// Evaluates on a whole time grid (increasing, >= 0), tracing each branch once.
std::vector<SaddleResult> inversion_saddle_grid(const ModelParams& params, std::span<const double> t_grid,
                                                std::span<const BranchIndex> branches,
                                                const SaddleOptions& opts = {});

/// Revival indices 0..N with N two past the last revival before t_max.
std::vector<BranchIndex> default_branches(const ModelParams& params, double t_max);

/// t_n = 2 pi n |alpha| (1 + nu)^{1/2}, n = 1..n_max, in lambda*t.
std::vector<double> revival_times(double alpha, double nu, int n_max);

/// Where Re phi of trajectories n and n+1 cross (resonant).
struct CrossingTime {
  int n = 0;
  double formula = 0.0;  ///< 4 pi |alpha| n (n+1) / (2n+1), lambda*t
  double refined = 0.0;  ///< bisection on Re phi_n = Re phi_{n+1}, lambda*t
  double formula_scaled = 0.0;  ///< same, in t/|alpha|
  double refined_scaled = 0.0;
};

std::vector<CrossingTime> crossing_times(double alpha, int n_max);

}  // namespace jcsum
