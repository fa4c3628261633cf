#include "jcsum/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "jcsum/error.hpp"

namespace jcsum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 2.220446049250313e-16;
constexpr double kMaxSigmaStep = 1e-2;
constexpr double kRelSigmaStep = 0.05;
constexpr double kSeedSigma = 0.1;
constexpr int kSeedTerms = 40;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

cplx residual_derivative(cplx F, double nu) {
  const cplx e = std::exp(2.0 * F);
  return 2.0 * F * (nu + e) + 2.0 * F * F * e;
}

// Newton on tau/4 + F^2 (nu + e^{2F}); false when it does not settle.
bool correct(cplx& F, double tau, double nu) {
  for (int it = 0; it < 40; ++it) {
    const cplx d = saddle_residual(F, tau, nu) / residual_derivative(F, nu);
    if (!finite(d)) return false;
    F -= d;
    if (std::abs(d) <= 4.0 * kEps * std::max(1.0, std::abs(F))) return true;
  }
  return false;
}

std::string tau_text(double tau) { return std::to_string(tau); }

// Marches F from sigma to target in sqrt(tau). The corrector must land close
// to the Euler predictor, otherwise the step is halved.
void march(cplx& F, double& sigma, double target, double nu) {
  while (sigma != target) {
    const double dir = target > sigma ? 1.0 : -1.0;
    double h = std::min({kMaxSigmaStep, kRelSigmaStep * sigma, std::abs(target - sigma)});
    for (;;) {
      const double next = std::abs(target - sigma) <= h ? target : sigma + dir * h;
      const double ds = next - sigma;
      const cplx dF = -(0.5 * sigma) / residual_derivative(F, nu) * ds;
      const cplx predicted = F + dF;
      cplx corrected = predicted;
      const bool ok = correct(corrected, next * next, nu) &&
                      std::abs(corrected - predicted) <= std::max(0.25 * std::abs(dF), 1e-9 * std::max(1.0, std::abs(F)));
      if (ok) {
        F = corrected;
        sigma = next;
        break;
      }
      h *= 0.5;
      if (h < 1e-12 * std::max(1.0, sigma)) {
        throw NumericalFailure("trace_trajectory: branch jump near tau = " + tau_text(next * next),
                               std::abs(corrected - predicted), F);
      }
    }
  }
}

SaddleSample make_sample(double tau, cplx F, double nu) {
  return {tau, F, phi_detuned(F, tau, nu), curvature_factor(F, tau, nu)};
}

void check_grid(std::span<const double> tau_grid) {
  if (tau_grid.empty()) throw InvalidParameter("trace_trajectory: empty tau grid");
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    if (!std::isfinite(tau_grid[i]) || !(tau_grid[i] > 0.0)) {
      throw InvalidParameter("trace_trajectory: tau grid must be positive and finite");
    }
    if (i > 0 && !(tau_grid[i] > tau_grid[i - 1])) {
      throw InvalidParameter("trace_trajectory: tau grid must be strictly increasing");
    }
  }
}

// Saddle of trajectory n >= 0 (the F copy) at every grid point.
std::vector<cplx> trace_positive(int n, double nu, std::span<const double> tau_grid) {
  std::vector<cplx> out(tau_grid.size());
  if (n == 0) {
    double sigma = std::min(kSeedSigma, std::sqrt(tau_grid.front()));
    cplx F = generalized_series(sigma * sigma, nu, kSeedTerms);
    if (!correct(F, sigma * sigma, nu)) {
      throw NumericalFailure("trace_trajectory: principal seed did not converge", 0.0, F);
    }
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
      march(F, sigma, std::sqrt(tau_grid[i]), nu);
      out[i] = F;
    }
    return out;
  }
  const double anchor = 2.0 * kPi * n * std::sqrt(1.0 + nu);
  const auto split = std::lower_bound(tau_grid.begin(), tau_grid.end(), anchor * anchor) - tau_grid.begin();
  cplx F(0.0, kPi * n);
  double sigma = anchor;
  for (std::ptrdiff_t i = split - 1; i >= 0; --i) {
    march(F, sigma, std::sqrt(tau_grid[i]), nu);
    out[i] = F;
  }
  F = cplx(0.0, kPi * n);
  sigma = anchor;
  for (std::size_t i = split; i < tau_grid.size(); ++i) {
    march(F, sigma, std::sqrt(tau_grid[i]), nu);
    out[i] = F;
  }
  return out;
}

double log_weight(const BranchContribution& c, double a2) {
  return a2 * c.phi.real() - 0.5 * std::log(std::abs(c.f));
}

SaddleResult assemble(std::vector<BranchContribution> parts, double a2, const SaddleOptions& opts) {
  SaddleResult res;
  if (opts.policy == SuperpositionPolicy::max) {
    std::size_t best = parts.size();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (best == parts.size() || log_weight(parts[i], a2) > log_weight(parts[best], a2)) best = i;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i != best) {
        parts[i].included = false;
        parts[i].value = 0.0;
      }
    }
  }
  for (const auto& p : parts) res.total += p.value;
  res.branches = std::move(parts);
  return res;
}

BranchContribution contribution(BranchIndex b, cplx F, cplx phi, cplx f, double a2, const SaddleOptions& opts) {
  BranchContribution c{b, 0.0, F, phi, f, false};
  if (a2 * phi.real() < -opts.cutoff) return c;
  c.included = true;
  c.value = -std::pow(std::abs(f), -0.5) * std::exp(a2 * phi.real()) * std::cos(a2 * phi.imag() - 0.5 * std::arg(f));
  return c;
}

BranchContribution at_zero_time(BranchIndex b) {
  BranchContribution c{b, 0.0, cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0), false};
  if (b.revival_index() == 0) {
    c.included = true;
    c.value = -1.0;
  }
  return c;
}

// One representative per |revival index|, in increasing order.
std::vector<BranchIndex> canonical(std::span<const BranchIndex> branches) {
  std::vector<int> ns;
  for (const auto& b : branches) ns.push_back(std::abs(b.revival_index()));
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::vector<BranchIndex> out;
  for (int n : ns) out.push_back(BranchIndex::for_revival(n));
  return out;
}

void check_params(const ModelParams& p, const char* who) {
  if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) throw InvalidParameter(std::string(who) + ": alpha must be > 0");
  if (!(p.nu >= 0.0) || !std::isfinite(p.nu)) throw InvalidParameter(std::string(who) + ": nu must be >= 0");
}

}  // namespace

cplx phi_resonant(cplx F, double tau) { return phi_detuned(F, tau, 0.0); }

cplx phi_detuned(cplx F, double tau, double nu) {
  if (F == cplx(0.0, 0.0)) throw DomainError("phi: F = 0");
  return -tau / (2.0 * F) + 2.0 * F * nu + std::exp(2.0 * F) - 1.0;
}

cplx curvature_factor(cplx F, double tau, double nu) {
  if (nu == 0.0) return 1.0 + F;
  if (!(tau > 0.0)) throw DomainError("curvature_factor: tau must be > 0 when nu > 0");
  return 1.0 + F + 4.0 * F * F * F * nu / tau;
}

cplx saddle_residual(cplx F, double tau, double nu) {
  return 0.25 * tau + F * F * (nu + std::exp(2.0 * F));
}

double SaddleTrajectory::tau_min() const { return samples_.front().tau; }
double SaddleTrajectory::tau_max() const { return samples_.back().tau; }

bool SaddleTrajectory::covers(double tau) const noexcept {
  return !samples_.empty() && tau >= samples_.front().tau && tau <= samples_.back().tau;
}

SaddleSample SaddleTrajectory::at(double tau) const {
  if (!covers(tau)) {
    throw InterpolationGap("SaddleTrajectory: tau " + tau_text(tau) + " outside the sampled range", tau);
  }
  auto it = std::lower_bound(samples_.begin(), samples_.end(), tau,
                             [](const SaddleSample& s, double x) { return s.tau < x; });
  if (it->tau == tau) return *it;
  auto nearest = (it == samples_.begin() || std::abs(it->tau - tau) < std::abs(std::prev(it)->tau - tau))
                     ? it
                     : std::prev(it);
  // the saddle equation is real, so mirrored samples march as they are
  cplx F = nearest->F;
  double sigma = std::sqrt(nearest->tau);
  march(F, sigma, std::sqrt(tau), nu_);
  return make_sample(tau, F, nu_);
}

SaddleTrajectory trace_trajectory(BranchIndex branch, double nu, std::span<const double> tau_grid) {
  if (!std::isfinite(nu) || nu < 0.0) throw InvalidParameter("trace_trajectory: nu must be >= 0");
  check_grid(tau_grid);
  const int n = branch.revival_index();
  std::vector<cplx> F = trace_positive(std::abs(n), nu, tau_grid);
  const bool mirror = n < 0 || (n == 0 && branch.conjugate_copy);
  std::vector<SaddleSample> samples;
  samples.reserve(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) {
    samples.push_back(make_sample(tau_grid[i], mirror ? std::conj(F[i]) : F[i], nu));
  }
  return SaddleTrajectory(branch, nu, std::move(samples));
}

SaddleResult inversion_saddle(const ModelParams& params, double t, std::span<const BranchIndex> branches,
                              const SaddleOptions& opts) {
  check_params(params, "inversion_saddle");
  if (!std::isfinite(t) || t < 0.0) throw InvalidParameter("inversion_saddle: t must be finite and >= 0");
  const auto set = canonical(branches);
  if (t == 0.0) {
    std::vector<BranchContribution> parts;
    for (const auto& b : set) parts.push_back(at_zero_time(b));
    return assemble(std::move(parts), params.alpha * params.alpha, opts);
  }
  std::vector<SaddleTrajectory> trajs;
  const double tau = params.tau(t);
  for (const auto& b : set) trajs.push_back(trace_trajectory(b, params.nu, std::span<const double>(&tau, 1)));
  return inversion_saddle(params, t, trajs, opts);
}

SaddleResult inversion_saddle(const ModelParams& params, double t, std::span<const SaddleTrajectory> trajectories,
                              const SaddleOptions& opts) {
  check_params(params, "inversion_saddle");
  if (!std::isfinite(t) || t < 0.0) throw InvalidParameter("inversion_saddle: t must be finite and >= 0");
  const double a2 = params.alpha * params.alpha;
  std::vector<BranchContribution> parts;
  std::vector<int> seen;
  for (const auto& tr : trajectories) {
    const int n = std::abs(tr.branch().revival_index());
    if (std::find(seen.begin(), seen.end(), n) != seen.end()) continue;
    seen.push_back(n);
    if (tr.nu() != params.nu) throw InvalidParameter("inversion_saddle: trajectory traced at a different nu");
    if (t == 0.0) {
      parts.push_back(at_zero_time(tr.branch()));
      continue;
    }
    const SaddleSample s = tr.at(params.tau(t));
    parts.push_back(contribution(tr.branch(), s.F, s.phi, s.f, a2, opts));
  }
  return assemble(std::move(parts), a2, opts);
}

std::vector<SaddleResult> inversion_saddle_grid(const ModelParams& params, std::span<const double> t_grid,
                                                std::span<const BranchIndex> branches,
                                                const SaddleOptions& opts) {
  check_params(params, "inversion_saddle_grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!std::isfinite(t_grid[i]) || t_grid[i] < 0.0 || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
      throw InvalidParameter("inversion_saddle_grid: time grid must be increasing and >= 0");
    }
  }
  const auto set = canonical(branches);
  const double a2 = params.alpha * params.alpha;
  std::vector<double> taus;
  for (double t : t_grid) {
    if (t > 0.0) taus.push_back(params.tau(t));
  }
  const std::size_t offset = t_grid.size() - taus.size();
  std::vector<SaddleTrajectory> trajs;
  if (!taus.empty()) {
    for (const auto& b : set) trajs.push_back(trace_trajectory(b, params.nu, taus));
  }
  std::vector<SaddleResult> out;
  out.reserve(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    std::vector<BranchContribution> parts;
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i < offset) {
        parts.push_back(at_zero_time(set[j]));
      } else {
        const SaddleSample& s = trajs[j].samples()[i - offset];
        parts.push_back(contribution(set[j], s.F, s.phi, s.f, a2, opts));
      }
    }
    out.push_back(assemble(std::move(parts), a2, opts));
  }
  return out;
}

std::vector<BranchIndex> default_branches(const ModelParams& params, double t_max) {
  check_params(params, "default_branches");
  const int last = static_cast<int>(std::floor(std::max(t_max, 0.0) / params.revival_period())) + 2;
  std::vector<BranchIndex> out;
  for (int n = 0; n <= last; ++n) out.push_back(BranchIndex::for_revival(n));
  return out;
}

std::vector<double> revival_times(double alpha, double nu, int n_max) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidParameter("revival_times: alpha must be > 0");
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw InvalidParameter("revival_times: nu must be >= 0");
  std::vector<double> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(2.0 * kPi * n * alpha * std::sqrt(1.0 + nu));
  return out;
}

std::vector<CrossingTime> crossing_times(double alpha, int n_max) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidParameter("crossing_times: alpha must be > 0");
  std::vector<CrossingTime> out;
  for (int n = 1; n <= n_max; ++n) {
    CrossingTime c;
    c.n = n;
    c.formula_scaled = 4.0 * kPi * n * (n + 1.0) / (2.0 * n + 1.0);
    c.formula = alpha * c.formula_scaled;

    // Re phi_n - Re phi_{n+1} changes sign between the two revivals.
    double lo = 2.0 * kPi * n;
    double hi = 2.0 * kPi * (n + 1);
    const double grid[2] = {lo * lo, hi * hi};
    const auto a = trace_trajectory(BranchIndex::for_revival(n), 0.0, grid);
    const auto b = trace_trajectory(BranchIndex::for_revival(n + 1), 0.0, grid);
    auto diff = [&](double sigma) {
      const double tau = sigma * sigma;
      return a.at(tau).phi.real() - b.at(tau).phi.real();
    };
    double flo = diff(lo);
    for (int it = 0; it < 100 && hi - lo > 1e-13 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = diff(mid);
      if ((fm > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    c.refined_scaled = 0.5 * (lo + hi);
    c.refined = alpha * c.refined_scaled;
    out.push_back(c);
  }
  return out;
}

}  // namespace jcsum
