#pragma once

// Multi-branch complex Lambert W and its detuned generalization
//   u = w (nu + e^{2w})^{1/2}
// whose solutions carry the saddle points of the contour integral.

#include <complex>
#include <optional>
#include <vector>

namespace jcsum {

using cplx = std::complex<double>;

/// Branch label of a saddle trajectory.
///
/// `k` is the standard Lambert branch (k = 0 principal). `conjugate_copy`
/// selects the copy of the w-plane that is the image of the negative imaginary
/// u-axis (trajectory F*) rather than the positive one (trajectory F).
///
/// Trajectories are also addressed by their signed revival index n: the one
/// that passes w = i pi n when tau = 4 pi^2 n^2 (1 + nu).
struct BranchIndex {
  int k = 0;
  bool conjugate_copy = false;

  /// +1 for the F copy, -1 for the conjugate copy.
  double u_sign() const noexcept { return conjugate_copy ? -1.0 : 1.0; }

  /// The mirrored trajectory: W_k(conj u) = conj W_{-k}(u).
  BranchIndex mirrored() const noexcept { return {-k, !conjugate_copy}; }

  /// Signed revival index of the trajectory on this branch (0 for both copies
  /// of the principal branch).
  int revival_index() const noexcept;

  /// Branch carrying the trajectory through i pi n (n = 0 gives the F copy of
  /// the principal branch).
  static BranchIndex for_revival(int n) noexcept;

  friend bool operator==(const BranchIndex&, const BranchIndex&) = default;
};

/// W_k(u): the branch-k solution of w e^w = u, refined by Halley iteration to
/// |w e^w - u| <= 1e-12 max(1, |u|). Values on cuts are continuous from above.
cplx lambert_w(int k, cplx u);

/// c_n = (-n)^{n-1} / n!, the Lagrange reversion coefficients of W_0.
double lambert_series_coefficient(int n);

/// Partial sum sum_{n=1}^{n_terms} c_n u^n; requires |u| < 1/e.
cplx lambert_series(cplx u, int n_terms);

/// Right-hand side of the generalized equation with the square root taken as
///   (nu + e^{2w})^{1/2} = e^w (1 + nu e^{-2w})^{1/2}
/// (principal inner root). This reduces to w e^w at nu = 0; its cuts are the
/// horizontal rays Im w = pi (m + 1/2), Re w < (1/2) ln nu.
cplx generalized_lambert_map(cplx w, double nu);

struct GeneralizedLambertQuery {
  cplx u;
  double nu = 0.0;
  BranchIndex branch;
};

/// Solves u = w (nu + e^{2w})^{1/2} on branch q.branch.k. Without a seed the
/// solution is continued in nu from the resonant W_k(u); with a seed Newton's
/// method starts there and the result must stay in the seed's branch strip.
cplx generalized_lambert(const GeneralizedLambertQuery& q, std::optional<cplx> seed = std::nullopt);

/// Coefficients c_1..c_{n_terms} of F_nu = sum c_n(nu) (i tau^{1/2} / 2)^n,
/// c_n(nu) = (1/n!) d^{n-1}/dw^{n-1} (nu + e^{2w})^{-n/2} at w = 0.
std::vector<double> generalized_series_coefficients(double nu, int n_terms);

/// Principal-branch saddle F_nu(tau) from the Lagrange series. Throws
/// DomainError when the terms stop decreasing (tau outside the disc of
/// convergence).
cplx generalized_series(double tau, double nu, int n_terms);

/// nu_0 = 1 / (2 e^3): beyond it the branch point w0 leaves the real axis.
double critical_detuning() noexcept;

struct BranchPointW0 {
  cplx w0;
  bool from_series = false;  ///< false when the series radius was exceeded
  bool beyond_critical = false;
  double residual = 0.0;     ///< |nu + e^{2 w0} (1 + w0)|
};

/// Solution of nu + e^{2w}(1 + w) = 0 near w = -1, from
///   w0 = -1 - (1/2) sum n^{n-1}/n! (2 e^2 nu)^n,
/// cross-checked against Newton's method on the same equation.
BranchPointW0 branch_point_w0(double nu, int n_terms = 400);

/// Square-root branch points (1/2) ln nu + i pi (n + 1/2), n = n_first..n_last.
std::vector<cplx> branch_points_generalized(double nu, int n_first, int n_last);

}  // namespace jcsum
