#include "jcsum/lambert.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jcsum/error.hpp"

namespace jcsum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr double kEps = 2.220446049250313e-16;
constexpr int kMaxIterations = 100;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double residual_scale(cplx u) { return std::max(1.0, std::abs(u)); }

// Initial guesses: branch-point expansion near -1/e, a [2/2] Pade
// approximant of W_0 near the origin, otherwise the logarithmic asymptote.
cplx lambert_guess(int k, cplx u) {
  const cplx near_bp = u + 1.0 / kE;
  if (std::abs(near_bp) < 0.3) {
    const bool plus = k == 0;
    const bool minus = (k == -1 && u.imag() >= 0.0) || (k == 1 && u.imag() < 0.0);
    if (plus || minus) {
      cplx p = std::sqrt(2.0 * (kE * u + 1.0));
      if (minus) p = -p;
      return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    }
  }
  // A real start on the cut left of -1/e would keep Halley on the real axis.
  const bool on_cut = u.imag() == 0.0 && u.real() < -1.0 / kE;
  if (k == 0 && std::abs(u) < 1.5 && !on_cut) {
    return u * (1.0 + 4.0 / 3.0 * u) / (1.0 + 7.0 / 3.0 * u + 5.0 / 6.0 * u * u);
  }
  const cplx l1 = std::log(u) + cplx(0.0, 2.0 * kPi * k);
  const cplx l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

int BranchIndex::revival_index() const noexcept {
  if (k == 0) return 0;
  if (k > 0) return conjugate_copy ? 2 * k - 1 : 2 * k;
  return conjugate_copy ? 2 * k : 2 * k + 1;
}

BranchIndex BranchIndex::for_revival(int n) noexcept {
  if (n == 0) return {0, false};
  if (n > 0) return (n % 2 == 0) ? BranchIndex{n / 2, false} : BranchIndex{(n + 1) / 2, true};
  const int m = -n;
  return (m % 2 == 0) ? BranchIndex{-m / 2, true} : BranchIndex{-(m + 1) / 2, false};
}

cplx lambert_w(int k, cplx u) {
  if (!finite(u)) throw DomainError("lambert_w: argument must be finite");
  if (u == cplx(0.0, 0.0)) {
    if (k == 0) return {0.0, 0.0};
    throw DomainError("lambert_w: W_k(0) is undefined for k != 0");
  }
  // Points on the real axis are taken from above.
  if (u.imag() == 0.0) u = cplx(u.real(), 0.0);

  const double tol = 1e-12 * residual_scale(u);
  cplx w = lambert_guess(k, u);
  for (int it = 0; it < kMaxIterations; ++it) {
    const cplx ew = std::exp(w);
    const cplx f = w * ew - u;
    if (std::abs(f) <= 0.25 * kEps * residual_scale(u)) return w;
    const cplx wp1 = w + 1.0;
    if (std::abs(wp1) < 1e-300) break;
    const cplx step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    if (!finite(step)) break;
    w -= step;
    if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(w))) break;
  }
  const double res = std::abs(w * std::exp(w) - u);
  if (!(res <= tol))
    throw NumericalFailure("lambert_w: no convergence on branch " + std::to_string(k), res, w);
  return w;
}

double lambert_series_coefficient(int n) {
  if (n < 1) throw DomainError("lambert_series_coefficient: n must be >= 1");
  // (-n)^{n-1} / n! in log space.
  const double nd = n;
  const double mag = std::exp((nd - 1.0) * std::log(nd) - std::lgamma(nd + 1.0));
  return (n % 2 == 1) ? mag : -mag;
}

cplx lambert_series(cplx u, int n_terms) {
  if (!(std::abs(u) < 1.0 / kE)) throw DomainError("lambert_series: |u| must be below 1/e");
  if (n_terms < 1) throw DomainError("lambert_series: n_terms must be >= 1");
  // Horner in u.
  cplx acc = 0.0;
  for (int n = n_terms; n >= 1; --n) acc = (acc + lambert_series_coefficient(n)) * u;
  return acc;
}

cplx generalized_lambert_map(cplx w, double nu) {
  const cplx ew = std::exp(w);
  if (nu == 0.0) return w * ew;
  return w * ew * std::sqrt(1.0 + nu / (ew * ew));
}

namespace {

cplx generalized_derivative(cplx w, double nu) {
  const cplx ew = std::exp(w);
  if (nu == 0.0) return ew * (1.0 + w);
  const cplx x = nu / (ew * ew);
  const cplx r = std::sqrt(1.0 + x);
  return ew * (1.0 + x + w) / r;
}

cplx generalized_nu_derivative(cplx w, double nu) {
  const cplx ew = std::exp(w);
  const cplx r = std::sqrt(1.0 + nu / (ew * ew));
  return w / (ew * 2.0 * r);
}

struct NewtonOutcome {
  cplx w;
  bool converged = false;
};

NewtonOutcome newton_generalized(cplx w, cplx u, double nu, double max_jump) {
  const cplx start = w;
  const double floor = 0.25 * kEps * residual_scale(u);
  for (int it = 0; it < kMaxIterations; ++it) {
    const cplx f = generalized_lambert_map(w, nu) - u;
    if (!finite(f)) return {w, false};
    if (std::abs(f) <= floor) return {w, true};
    const cplx step = f / generalized_derivative(w, nu);
    if (!finite(step)) return {w, false};
    w -= step;
    if (std::abs(w - start) > max_jump) return {w, false};
    if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(w))) {
      const double res = std::abs(generalized_lambert_map(w, nu) - u);
      return {w, res <= 1e-12 * residual_scale(u)};
    }
  }
  const double res = std::abs(generalized_lambert_map(w, nu) - u);
  return {w, res <= 1e-12 * residual_scale(u)};
}

// Within reach of a cut Im w = pi (m + 1/2), Re w < (1/2) ln nu.
bool near_cut(cplx w, double nu) {
  if (!(nu > 0.0)) return false;
  const double m = std::round(w.imag() / kPi - 0.5);
  const double gap = std::abs(w.imag() - kPi * (m + 0.5));
  return gap < 0.1 && w.real() < 0.5 * std::log(nu) + 0.1;
}

bool in_branch_strip(int k, cplx w) {
  // Loose strip: branch k of the resonant function lives in
  // ((2k-2) pi, (2k+1) pi) for k > 0, mirrored for k < 0, (-pi, pi) for k = 0.
  // The detuned cuts move by less than pi/2.
  const double y = w.imag();
  const double slack = 0.5 * kPi;
  if (k == 0) return std::abs(y) < kPi + slack;
  if (k > 0) return y > (2.0 * k - 2.0) * kPi - slack && y < (2.0 * k + 1.0) * kPi + slack;
  return y < -(2.0 * (-k) - 2.0) * kPi + slack && y > -(2.0 * (-k) + 1.0) * kPi - slack;
}

}  // namespace

cplx generalized_lambert(const GeneralizedLambertQuery& q, std::optional<cplx> seed) {
  if (!std::isfinite(q.nu) || q.nu < 0.0) throw InvalidParameter("generalized_lambert: nu must be >= 0");
  if (!finite(q.u)) throw DomainError("generalized_lambert: u must be finite");
  const int k = q.branch.k;

  if (seed) {
    const auto out = newton_generalized(*seed, q.u, q.nu, 1e3);
    if (!out.converged)
      throw NumericalFailure("generalized_lambert: Newton did not converge from seed",
                             std::abs(generalized_lambert_map(out.w, q.nu) - q.u), out.w);
    if (!in_branch_strip(k, out.w))
      throw WrongBranch("generalized_lambert: seed converged outside branch " + std::to_string(k), 0.0,
                        out.w);
    return out.w;
  }

  cplx w = lambert_w(k, q.u);
  if (q.nu == 0.0) return w;

  // Continuation in nu from the resonant branch value.
  double nu_now = 0.0;
  double step = q.nu / 16.0;
  const double min_step = q.nu * 1e-9;
  while (nu_now < q.nu) {
    const double nu_next = std::min(q.nu, nu_now + step);
    const cplx pred = w - generalized_nu_derivative(w, nu_now) / generalized_derivative(w, nu_now) *
                              (nu_next - nu_now);
    const cplx guess = finite(pred) ? pred : w;
    const auto out = newton_generalized(guess, q.u, nu_next, 0.5 * (1.0 + std::abs(w - guess)) + 0.25);
    if (out.converged && std::abs(out.w - w) < 0.5 + 4.0 * std::abs(guess - w)) {
      w = out.w;
      nu_now = nu_next;
      step = std::min(step * 1.5, q.nu / 4.0);
      continue;
    }
    step *= 0.5;
    if (step < min_step && near_cut(w, nu_now))
      throw DomainError("generalized_lambert: branch " + std::to_string(k) +
                        " runs into a square-root cut at nu = " + std::to_string(nu_now) +
                        "; u is outside its image for this nu");
    if (step < min_step)
      throw NumericalFailure("generalized_lambert: continuation in nu stalled at nu = " +
                                 std::to_string(nu_now),
                             std::abs(generalized_lambert_map(w, nu_now) - q.u), w);
  }
  const double res = std::abs(generalized_lambert_map(w, q.nu) - q.u);
  if (!(res <= 1e-12 * residual_scale(q.u)))
    throw NumericalFailure("generalized_lambert: residual above tolerance", res, w);
  return w;
}

std::vector<double> generalized_series_coefficients(double nu, int n_terms) {
  if (!std::isfinite(nu) || nu < 0.0) throw InvalidParameter("generalized_series: nu must be >= 0");
  if (n_terms < 1) throw DomainError("generalized_series: n_terms must be >= 1");
  // Taylor coefficients of g(w) = nu + e^{2w} at 0.
  std::vector<double> g(n_terms);
  double pow2 = 1.0;
  for (int j = 1; j < n_terms; ++j) {
    pow2 *= 2.0 / j;
    g[j] = pow2;
  }
  g[0] = 1.0 + nu;

  std::vector<double> c(n_terms);
  std::vector<double> h(n_terms);
  for (int n = 1; n <= n_terms; ++n) {
    // h = g^p with p = -n/2 (J.C.P. Miller recurrence), up to order n-1.
    const double p = -0.5 * n;
    h[0] = std::pow(g[0], p);
    for (int m = 1; m < n; ++m) {
      double s = 0.0;
      for (int j = 1; j <= m; ++j) s += ((p + 1.0) * j - m) * g[j] * h[m - j];
      h[m] = s / (m * g[0]);
    }
    c[n - 1] = h[n - 1] / n;
  }
  return c;
}

cplx generalized_series(double tau, double nu, int n_terms) {
  if (!std::isfinite(tau) || tau < 0.0) throw InvalidParameter("generalized_series: tau must be >= 0");
  const auto c = generalized_series_coefficients(nu, n_terms);
  const cplx x(0.0, 0.5 * std::sqrt(tau));
  cplx sum = 0.0;
  cplx xn = 1.0;
  std::vector<double> mags(n_terms);
  for (int n = 1; n <= n_terms; ++n) {
    xn *= x;
    const cplx term = c[n - 1] * xn;
    mags[n - 1] = std::abs(term);
    sum += term;
  }
  if (n_terms >= 8 && tau > 0.0) {
    // Term-ratio monitor over the second half of the series.
    const int a = n_terms / 2;
    const int b = n_terms - 1;
    const double ma = std::max(mags[a - 1], mags[a]);
    const double mb = std::max(mags[b - 1], mags[b]);
    if (mb > 0.0 && ma > 0.0 && mb >= ma && mb > 1e-300)
      throw DomainError("generalized_series: terms are not decreasing (tau outside the disc of convergence)");
  }
  return sum;
}

double critical_detuning() noexcept { return 1.0 / (2.0 * kE * kE * kE); }

namespace {

cplx eq34(cplx w, double nu) { return nu + std::exp(2.0 * w) * (1.0 + w); }
cplx eq34_derivative(cplx w) { return std::exp(2.0 * w) * (3.0 + 2.0 * w); }

cplx newton_eq34(cplx w, double nu) {
  for (int it = 0; it < kMaxIterations; ++it) {
    const cplx step = eq34(w, nu) / eq34_derivative(w);
    if (!finite(step)) break;
    w -= step;
    if (std::abs(step) <= 4.0 * kEps * std::abs(w)) break;
  }
  return w;
}

}  // namespace

BranchPointW0 branch_point_w0(double nu, int n_terms) {
  if (!std::isfinite(nu) || nu < 0.0) throw InvalidParameter("branch_point_w0: nu must be >= 0");
  if (n_terms < 1) throw DomainError("branch_point_w0: n_terms must be >= 1");
  BranchPointW0 out;
  out.beyond_critical = nu > critical_detuning();
  if (nu == 0.0) {
    out.w0 = -1.0;
    out.from_series = true;
    return out;
  }

  // Closed form of the same root: w0 = -1 + W_0(-2 e^2 nu) / 2.
  const cplx direct = newton_eq34(-1.0 + 0.5 * lambert_w(0, cplx(-2.0 * kE * kE * nu, 0.0)), nu);

  const double x = 2.0 * kE * kE * nu;
  const double ratio = kE * x;  // geometric rate of the series terms
  if (ratio < 0.95) {
    double sum = 0.0;
    const double logx = std::log(x);
    for (int n = 1; n <= n_terms; ++n) {
      const double nd = n;
      const double term = std::exp((nd - 1.0) * std::log(nd) - std::lgamma(nd + 1.0) + nd * logx);
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    out.w0 = -1.0 - 0.5 * sum;
    out.from_series = true;
    if (std::abs(out.w0 - direct) > 1e-9)
      throw NumericalFailure("branch_point_w0: series and root-finding disagree", std::abs(out.w0 - direct),
                             out.w0);
  } else {
    out.w0 = direct;
  }
  out.residual = std::abs(eq34(out.w0, nu));
  if (!(out.residual < 1e-10))
    throw NumericalFailure("branch_point_w0: residual above tolerance", out.residual, out.w0);
  return out;
}

std::vector<cplx> branch_points_generalized(double nu, int n_first, int n_last) {
  if (!std::isfinite(nu) || nu <= 0.0)
    throw DomainError("branch_points_generalized: nu must be > 0 (the points recede to Re w -> -inf)");
  std::vector<cplx> pts;
  for (int n = n_first; n <= n_last; ++n) pts.emplace_back(0.5 * std::log(nu), kPi * (n + 0.5));
  return pts;
}

}  // namespace jcsum
