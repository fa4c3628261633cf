#pragma once

// Quadrature of the Hankel-contour representation of the inversion:
//
//   <sigma_3(t)> = -(1 / 2 sqrt(pi) i) \oint s^{-1/2} exp(|alpha|^2 Phi(s / t^2, nu)) ds
//   Phi(z, nu)   = tau z - nu / z + e^{-1/z} - 1,   tau = t^2 / |alpha|^2
//
// along a path that starts at -infinity below the cut (-inf, 0], circles the
// origin counterclockwise and returns above the cut. At nu = 0 this is exact;
// for nu > 0 it equals -sum_n W_n cos(2 sqrt(n + mu) t).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "jcsum/params.hpp"

namespace jcsum {

using cplx = std::complex<double>;

/// Phi(z, nu) and its first two z-derivatives. The principal branch is used
/// throughout (|arg z| < pi); z = 0 is rejected.
struct PhaseFunction {
  double tau = 0.0;
  double nu = 0.0;

  cplx value(cplx z) const;
  cplx first_derivative(cplx z) const;
  cplx second_derivative(cplx z) const;
};

struct PathNode {
  cplx point;   ///< s on the contour
  cplx weight;  ///< quadrature weight including ds/dparameter
};

/// One piece of the lower half of a Hankel contour. s-pieces are
/// parametrized directly in s; w-pieces in the inverted variable w = -t^2/s,
/// in which the loop around the origin is laid out.
struct PathSegment {
  enum class Kind { s_line, s_arc, w_line, w_arc };
  Kind kind = Kind::s_line;
  cplx from;              ///< line start (s or w); for arcs (radius, 0)
  cplx to;                ///< line end; for arcs (theta_from, theta_to)
  double t2 = 0.0;        ///< t^2 for w-pieces
  std::vector<double> breaks;  ///< panel boundaries in [0, 1]

  cplx point(double p) const;       ///< s(p)
  cplx derivative(double p) const;  ///< ds/dp
};

/// Quadrature nodes on a conjugation-symmetric Hankel contour.
///
/// The lower half is stored as segments; the upper half is its mirror image,
/// traversed in reverse, so every node s has the partner conj(s) with weight
/// -conj(weight).
class HankelPath {
 public:
  HankelPath(std::vector<PathSegment> lower_half, double radius, double arm_length, double arm_angle);

  std::span<const PathNode> nodes() const noexcept { return nodes_; }
  std::span<const PathSegment> segments() const noexcept { return segments_; }
  double radius() const noexcept { return radius_; }
  double arm_length() const noexcept { return arm_length_; }
  /// Angle delta between the rays and the negative real axis.
  double arm_angle() const noexcept { return arm_angle_; }
  std::size_t panel_count() const noexcept;

  /// Same contour with every panel split in two (twice the nodes).
  HankelPath refined() const;

  /// Throws InvalidParameter when a node touches the cut or the origin, or
  /// when the node set is not closed under conjugation.
  void validate() const;

 private:
  void build_nodes();

  std::vector<PathSegment> segments_;
  std::vector<PathNode> nodes_;
  double radius_;
  double arm_length_;
  double arm_angle_;
};

inline constexpr int kGaussOrder = 16;
inline constexpr double kDefaultArmAngle = 0.2;

/// Rays at angle delta from the negative real axis joined by the arc |s| = radius,
/// with panels adapted to exp(s - radius^2 / s). radius = x/2 keeps the cosine
/// integrand of cos_via_hankel free of cancellation.
HankelPath build_loop_path(double radius);

/// Shape knobs for build_default_path. eps_scale < 1 shrinks the inner arc in
/// w (so enlarges the loop radius in s).
struct PathOptions {
  double arm_angle = kDefaultArmAngle;
  double eps_scale = 1.0;
};

/// Conjugation-symmetric contour adapted to the coherent-state integrand at
/// (alpha, tau). The rays toward -infinity are kept in the s-plane; the loop
/// around the origin runs, in w = -t^2/s, along an arc of radius eps, the
/// imaginary axis and a rectangle through Re w = -X, Im w = +-Y, where
/// |alpha|^2 Re Phi stays below about one. tau = 0 gives the plain loop of
/// radius 5. A detuning nu only affects where panels are placed.
///
/// The node count grows like t^2: the integrand turns through a phase of
/// about t^2 / eps along the imaginary w-axis.
HankelPath build_default_path(double alpha, double tau, double nu = 0.0, const PathOptions& shape = {});

struct QuadratureOptions {
  double tolerance = 1e-10;          ///< absolute, on the returned value
  int max_refinements = 4;           ///< panel doublings before giving up
  double max_imag_residual = 1e-8;
};

struct ContourResult {
  double value = 0.0;
  double imag_residual = 0.0;   ///< |Im| of the assembled integral
  double error_estimate = 0.0;  ///< panel-doubling difference (floored at roundoff)
  std::size_t nodes = 0;        ///< nodes in the final evaluation
};

/// (1 / 2 sqrt(pi) i) \oint s^{-1/2} exp(s - x^2 / 4s) ds, which equals cos x.
ContourResult cos_via_hankel(double x, const HankelPath& path, const QuadratureOptions& opts = {});

/// Exact resonant inversion from the contour integral; t in lambda*t units.
/// t = 0 returns -1 without quadrature.
ContourResult inversion_contour_resonant(double alpha, double t, const HankelPath& path,
                                         const QuadratureOptions& opts = {});
ContourResult inversion_contour_resonant(double alpha, double t, const QuadratureOptions& opts = {});

/// Detuned integral with phase Phi(z, nu). Reduces to the resonant integral at
/// nu = 0; for nu > 0 it omits the static part and the factor n/(mu+n).
ContourResult inversion_contour_detuned(const ModelParams& params, double t, const HankelPath& path,
                                        const QuadratureOptions& opts = {});
ContourResult inversion_contour_detuned(const ModelParams& params, double t,
                                        const QuadratureOptions& opts = {});

}  // namespace jcsum
