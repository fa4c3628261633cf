#include "jcsum/hankel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "jcsum/error.hpp"

namespace jcsum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 2.220446049250313e-16;
constexpr double kArmDecay = 42.0;  // e^{-42} ~ 6e-19 at the far end of a ray
constexpr double kNegligibleLog = -50.0;
constexpr double kZeroTimeRadius = 5.0;  // cos(x) on this loop is clean up to x ~ 14
constexpr double kMaxLogVariation = 8.0;
constexpr int kMaxBisection = 40;

struct GaussRule {
  std::array<double, kGaussOrder> x{};
  std::array<double, kGaussOrder> w{};
};

// Newton iteration on P_n with the Chebyshev-like initial guesses.
GaussRule make_gauss_rule() {
  GaussRule rule;
  constexpr int n = kGaussOrder;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.x[i] = -x;
    rule.x[n - 1 - i] = x;
    rule.w[i] = w;
    rule.w[n - 1 - i] = w;
  }
  return rule;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_rule();
  return rule;
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool is_w_kind(PathSegment::Kind k) {
  return k == PathSegment::Kind::w_line || k == PathSegment::Kind::w_arc;
}

// Point in the segment's own variable (s or w).
cplx native_point(const PathSegment& seg, double p) {
  switch (seg.kind) {
    case PathSegment::Kind::s_line:
    case PathSegment::Kind::w_line:
      return seg.from + p * (seg.to - seg.from);
    case PathSegment::Kind::s_arc:
    case PathSegment::Kind::w_arc: {
      const double theta = seg.to.real() + p * (seg.to.imag() - seg.to.real());
      return std::polar(seg.from.real(), theta);
    }
  }
  return {};
}

// log of s^{-1/2} exp(s - mu t^2/s + a2 (e^{-t^2/s} - 1) - q/s) and its
// derivative along a segment; used only to place panels.
struct PanelIntegrand {
  double a2 = 0.0;
  double t2 = 0.0;
  double mu = 0.0;
  double q = 0.0;

  // Re log f with e^{x + iy} replaced by e^x: an upper bound that does not
  // oscillate, so sparse samples cannot miss a revival peak.
  double envelope_at(const PathSegment& seg, double p) const {
    const cplx z = native_point(seg, p);
    const cplx s = is_w_kind(seg.kind) ? -t2 / z : z;
    const cplx w = t2 > 0.0 ? -t2 / s : cplx(0.0, 0.0);
    return s.real() - 0.5 * std::log(std::abs(s)) + a2 * (std::exp(w.real()) - 1.0) + mu * w.real() -
           (q / s).real();
  }

  // d(log f)/dp
  cplx slope_at(const PathSegment& seg, double p) const {
    const cplx z = native_point(seg, p);
    cplx dz;
    if (seg.kind == PathSegment::Kind::s_line || seg.kind == PathSegment::Kind::w_line) {
      dz = seg.to - seg.from;
    } else {
      dz = cplx(0.0, seg.to.imag() - seg.to.real()) * z;
    }
    if (is_w_kind(seg.kind)) {
      const cplx s = -t2 / z;
      const cplx ds_dw = t2 / (z * z);
      return ((1.0 - 0.5 / s + q / (s * s)) * ds_dw + a2 * std::exp(z) + mu) * dz;
    }
    cplx d = 1.0 - 0.5 / z + q / (z * z);
    if (t2 > 0.0) d += (a2 * std::exp(-t2 / z) + mu) * t2 / (z * z);
    return d * dz;
  }
};

bool panel_ok(const PathSegment& seg, const PanelIntegrand& f, double a, double b) {
  constexpr int samples = 9;
  const double h = (b - a) / (samples - 1);
  double length = 0.0;
  double dist = std::abs(native_point(seg, a));
  cplx prev = native_point(seg, a);
  for (int i = 1; i < samples; ++i) {
    const cplx z = native_point(seg, a + h * i);
    length += std::abs(z - prev);
    dist = std::min(dist, std::abs(z));
    prev = z;
  }
  if (length > 0.5 * dist) return false;

  double max_re = -INFINITY;
  double max_slope = 0.0;
  double max_re_slope = 0.0;
  for (int i = 0; i < samples; ++i) {
    max_re = std::max(max_re, f.envelope_at(seg, a + h * i));
    const cplx d = f.slope_at(seg, a + h * i);
    max_slope = std::max(max_slope, std::abs(d));
    max_re_slope = std::max(max_re_slope, std::abs(d.real()));
  }
  if (max_re + max_re_slope * h < kNegligibleLog) return true;
  return max_slope * (b - a) <= kMaxLogVariation;
}

void bisect(const PathSegment& seg, const PanelIntegrand& f, double a, double b, int depth,
            std::vector<double>& breaks) {
  if (depth >= kMaxBisection || panel_ok(seg, f, a, b)) {
    breaks.push_back(b);
    return;
  }
  const double m = 0.5 * (a + b);
  bisect(seg, f, a, m, depth + 1, breaks);
  bisect(seg, f, m, b, depth + 1, breaks);
}

void place_panels(PathSegment& seg, const PanelIntegrand& f) {
  seg.breaks.assign(1, 0.0);
  constexpr int initial = 4;
  for (int i = 0; i < initial; ++i) {
    bisect(seg, f, double(i) / initial, double(i + 1) / initial, 0, seg.breaks);
  }
  seg.breaks.back() = 1.0;
}

// Largest |alpha|^2 Re Phi on the small loop: the ray w = r e^{-i delta},
// 0 < r <= eps, and the arc |w| = eps between -delta and -pi/2.
double loop_exponent(double a2, double tau, double eps, double delta) {
  auto e = [&](cplx w) { return a2 * (-tau / w + std::exp(w) - 1.0).real(); };
  double worst = -INFINITY;
  constexpr int m = 48;
  for (int i = 1; i <= m; ++i) {
    worst = std::max(worst, e(std::polar(eps * i / m, -delta)));
    const double theta = -delta - (0.5 * kPi - delta) * i / m;
    worst = std::max(worst, e(std::polar(eps, theta)));
  }
  return worst;
}

}  // namespace

cplx PhaseFunction::value(cplx z) const {
  if (z == cplx(0.0, 0.0)) throw DomainError("PhaseFunction: z = 0 is an essential singularity");
  return tau * z - nu / z + std::exp(-1.0 / z) - 1.0;
}

cplx PhaseFunction::first_derivative(cplx z) const {
  if (z == cplx(0.0, 0.0)) throw DomainError("PhaseFunction: z = 0 is an essential singularity");
  const cplx iz = 1.0 / z;
  return tau + nu * iz * iz + std::exp(-iz) * iz * iz;
}

cplx PhaseFunction::second_derivative(cplx z) const {
  if (z == cplx(0.0, 0.0)) throw DomainError("PhaseFunction: z = 0 is an essential singularity");
  const cplx iz = 1.0 / z;
  const cplx iz3 = iz * iz * iz;
  return -2.0 * nu * iz3 + std::exp(-iz) * (iz * iz3 - 2.0 * iz3);
}

cplx PathSegment::point(double p) const {
  const cplx z = native_point(*this, p);
  return is_w_kind(kind) ? -t2 / z : z;
}

cplx PathSegment::derivative(double p) const {
  const cplx z = native_point(*this, p);
  cplx dz;
  switch (kind) {
    case Kind::s_line:
    case Kind::w_line:
      dz = to - from;
      break;
    case Kind::s_arc:
    case Kind::w_arc:
      dz = cplx(0.0, to.imag() - to.real()) * z;
      break;
  }
  return is_w_kind(kind) ? t2 / (z * z) * dz : dz;
}

HankelPath::HankelPath(std::vector<PathSegment> lower_half, double radius, double arm_length, double arm_angle)
    : segments_(std::move(lower_half)), radius_(radius), arm_length_(arm_length), arm_angle_(arm_angle) {
  if (segments_.empty()) throw InvalidParameter("HankelPath: no segments");
  for (const auto& seg : segments_) {
    if (seg.breaks.size() < 2 || seg.breaks.front() != 0.0 || seg.breaks.back() != 1.0 ||
        !std::is_sorted(seg.breaks.begin(), seg.breaks.end())) {
      throw InvalidParameter("HankelPath: panel breaks must increase from 0 to 1");
    }
    if (is_w_kind(seg.kind) && !(seg.t2 > 0.0)) throw InvalidParameter("HankelPath: w-segment needs t^2 > 0");
  }
  build_nodes();
}

std::size_t HankelPath::panel_count() const noexcept {
  std::size_t n = 0;
  for (const auto& seg : segments_) n += seg.breaks.size() - 1;
  return 2 * n;
}

void HankelPath::build_nodes() {
  const GaussRule& g = gauss_rule();
  std::vector<PathNode> lower;
  lower.reserve(panel_count() / 2 * kGaussOrder);
  for (const auto& seg : segments_) {
    for (std::size_t i = 0; i + 1 < seg.breaks.size(); ++i) {
      const double a = seg.breaks[i];
      const double h = 0.5 * (seg.breaks[i + 1] - a);
      for (int j = 0; j < kGaussOrder; ++j) {
        const double p = a + h * (1.0 + g.x[j]);
        lower.push_back({seg.point(p), h * g.w[j] * seg.derivative(p)});
      }
    }
  }
  nodes_ = lower;
  for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
    nodes_.push_back({std::conj(it->point), -std::conj(it->weight)});
  }
}

HankelPath HankelPath::refined() const {
  std::vector<PathSegment> finer = segments_;
  for (auto& seg : finer) {
    std::vector<double> b;
    b.reserve(2 * seg.breaks.size());
    for (std::size_t i = 0; i + 1 < seg.breaks.size(); ++i) {
      b.push_back(seg.breaks[i]);
      b.push_back(0.5 * (seg.breaks[i] + seg.breaks[i + 1]));
    }
    b.push_back(1.0);
    seg.breaks = std::move(b);
  }
  return HankelPath(std::move(finer), radius_, arm_length_, arm_angle_);
}

void HankelPath::validate() const {
  const std::size_t n = nodes_.size();
  if (n == 0 || n % 2 != 0) throw InvalidParameter("HankelPath: node count must be positive and even");
  for (std::size_t i = 0; i < n; ++i) {
    const cplx s = nodes_[i].point;
    if (!finite(s) || !finite(nodes_[i].weight)) throw InvalidParameter("HankelPath: non-finite node");
    if (s == cplx(0.0, 0.0)) throw InvalidParameter("HankelPath: node at the origin");
    if (s.imag() == 0.0 && s.real() < 0.0) throw InvalidParameter("HankelPath: node on the branch cut");
    const PathNode& m = nodes_[n - 1 - i];
    const double scale = std::max(std::abs(s), 1.0);
    if (std::abs(m.point - std::conj(s)) > 1e-12 * scale ||
        std::abs(m.weight + std::conj(nodes_[i].weight)) > 1e-12 * std::max(std::abs(m.weight), 1e-300)) {
      throw InvalidParameter("HankelPath: nodes are not conjugation symmetric");
    }
  }
  if (!(radius_ > 0.0)) throw InvalidParameter("HankelPath: radius must be positive");
}

HankelPath build_loop_path(double radius) {
  if (!std::isfinite(radius) || !(radius > 0.0)) throw InvalidParameter("build_loop_path: radius must be > 0");
  const double delta = kDefaultArmAngle;
  const double arm = kArmDecay / std::cos(delta);
  const cplx ray = std::polar(1.0, -(kPi - delta));
  PanelIntegrand f{0.0, 0.0, 0.0, radius * radius};
  std::vector<PathSegment> segs{
      {PathSegment::Kind::s_line, (radius + arm) * ray, radius * ray, 0.0, {}},
      {PathSegment::Kind::s_arc, cplx(radius, 0.0), cplx(-(kPi - delta), 0.0), 0.0, {}}};
  for (auto& seg : segs) place_panels(seg, f);
  return HankelPath(std::move(segs), radius, arm, delta);
}

HankelPath build_default_path(double alpha, double tau, double nu, const PathOptions& shape) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) throw InvalidParameter("build_default_path: alpha must be > 0");
  if (!std::isfinite(tau) || tau < 0.0) throw InvalidParameter("build_default_path: tau must be >= 0");
  if (!std::isfinite(nu) || nu < 0.0) throw InvalidParameter("build_default_path: nu must be >= 0");
  if (!(shape.arm_angle > 0.0 && shape.arm_angle < 0.5 * kPi)) {
    throw InvalidParameter("build_default_path: arm angle must lie in (0, pi/2)");
  }
  if (!(shape.eps_scale > 0.0 && shape.eps_scale <= 1.0)) {
    throw InvalidParameter("build_default_path: eps scale must lie in (0, 1]");
  }

  const double delta = shape.arm_angle;
  const double arm = kArmDecay / std::cos(delta);
  const cplx ray = std::polar(1.0, -(kPi - delta));
  const double a2 = alpha * alpha;
  const double t2 = a2 * tau;
  if (!(t2 > 0.0)) return build_loop_path(kZeroTimeRadius);

  double eps = kPi;
  while (loop_exponent(a2, tau, eps, delta) > 1.0) {
    eps *= 0.8;
    if (eps < 1e-12) throw NumericalFailure("build_default_path: no admissible inner radius", eps);
  }
  eps *= shape.eps_scale;
  const double y = [&] {
    const double need = std::max({kPi, 0.75 * tau, t2 / 16.0, 2.0 * eps});
    const double m = std::ceil((need / kPi - 1.0) / 2.0);
    return (2.0 * m + 1.0) * kPi;
  }();
  const double x = std::max({40.0, 2.0 * tau, t2 / 8.0});
  const double rho = t2 / eps;
  std::vector<PathSegment> segs;

  PanelIntegrand f{a2, t2, a2 * nu, 0.0};
  segs.push_back({PathSegment::Kind::s_line, (rho + arm) * ray, rho * ray, 0.0, {}});
  segs.push_back({PathSegment::Kind::w_arc, cplx(eps, 0.0), cplx(-delta, -0.5 * kPi), t2, {}});
  segs.push_back({PathSegment::Kind::w_line, cplx(0.0, -eps), cplx(0.0, -y), t2, {}});
  segs.push_back({PathSegment::Kind::w_line, cplx(0.0, -y), cplx(-x, -y), t2, {}});
  segs.push_back({PathSegment::Kind::w_line, cplx(-x, -y), cplx(-x, 0.0), t2, {}});
  for (auto& s : segs) place_panels(s, f);
  return HankelPath(std::move(segs), rho, arm, delta);
}

namespace {

using LogIntegrand = std::function<cplx(cplx)>;

struct RawSum {
  cplx sum;
  double magnitude;
};

RawSum sum_nodes(const HankelPath& path, const LogIntegrand& log_f) {
  cplx acc(0.0, 0.0);
  double mag = 0.0;
  for (const auto& nd : path.nodes()) {
    const cplx lf = log_f(nd.point);
    if (lf.real() < -745.0) continue;
    const cplx term = std::exp(lf) * nd.weight;
    acc += term;
    mag += std::abs(term);
  }
  return {acc, mag};
}

// (1 / 2 i) \oint exp(log_f) ds / sqrt(pi), with panel doubling until two
// successive results agree within opts.tolerance.
ContourResult integrate(const HankelPath& path, const LogIntegrand& log_f, double sign,
                        const QuadratureOptions& opts, const char* who) {
  const double scale = sign / (2.0 * std::sqrt(kPi));
  const cplx to_value(0.0, -scale);  // sign / (2 sqrt(pi) i)
  RawSum coarse = sum_nodes(path, log_f);
  HankelPath current = path;
  double err = INFINITY;
  RawSum fine = coarse;
  for (int r = 0; r <= opts.max_refinements; ++r) {
    current = current.refined();
    fine = sum_nodes(current, log_f);
    const double floor = 64.0 * kEps * fine.magnitude * scale;
    err = std::max(std::abs((fine.sum - coarse.sum) * to_value), floor);
    if (err <= opts.tolerance) break;
    coarse = fine;
  }
  const cplx v = fine.sum * to_value;
  ContourResult res{v.real(), std::abs(v.imag()), err, current.nodes().size()};
  if (!(err <= opts.tolerance)) {
    throw NumericalFailure(std::string(who) + ": quadrature did not reach tolerance", err, v);
  }
  if (res.imag_residual > opts.max_imag_residual) {
    throw NumericalFailure(std::string(who) + ": imaginary residual too large", res.imag_residual, v);
  }
  return res;
}

ContourResult contour_inversion(double alpha, double nu, double t, const HankelPath& path,
                                const QuadratureOptions& opts, const char* who) {
  if (!std::isfinite(t) || t < 0.0) throw InvalidParameter(std::string(who) + ": t must be finite and >= 0");
  if (t == 0.0) return {-1.0, 0.0, 0.0, 0};
  const double a2 = alpha * alpha;
  const double t2 = t * t;
  const PhaseFunction phi{t2 / a2, nu};
  return integrate(
      path, [&](cplx s) { return a2 * phi.value(s / t2) - 0.5 * std::log(s); }, -1.0, opts, who);
}

}  // namespace

ContourResult cos_via_hankel(double x, const HankelPath& path, const QuadratureOptions& opts) {
  if (!std::isfinite(x)) throw InvalidParameter("cos_via_hankel: x must be finite");
  const double q = 0.25 * x * x;
  return integrate(
      path, [&](cplx s) { return s - q / s - 0.5 * std::log(s); }, 1.0, opts, "cos_via_hankel");
}

ContourResult inversion_contour_resonant(double alpha, double t, const HankelPath& path,
                                         const QuadratureOptions& opts) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) throw InvalidParameter("inversion_contour_resonant: alpha must be > 0");
  return contour_inversion(alpha, 0.0, t, path, opts, "inversion_contour_resonant");
}

ContourResult inversion_contour_resonant(double alpha, double t, const QuadratureOptions& opts) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) throw InvalidParameter("inversion_contour_resonant: alpha must be > 0");
  if (!std::isfinite(t) || t < 0.0) throw InvalidParameter("inversion_contour_resonant: t must be finite and >= 0");
  if (t == 0.0) return {-1.0, 0.0, 0.0, 0};
  return inversion_contour_resonant(alpha, t, build_default_path(alpha, t * t / (alpha * alpha)), opts);
}

ContourResult inversion_contour_detuned(const ModelParams& params, double t, const HankelPath& path,
                                        const QuadratureOptions& opts) {
  if (!(params.alpha > 0.0)) throw InvalidParameter("inversion_contour_detuned: alpha must be > 0");
  return contour_inversion(params.alpha, params.nu, t, path, opts, "inversion_contour_detuned");
}

ContourResult inversion_contour_detuned(const ModelParams& params, double t, const QuadratureOptions& opts) {
  if (!(params.alpha > 0.0)) throw InvalidParameter("inversion_contour_detuned: alpha must be > 0");
  if (!std::isfinite(t) || t < 0.0) throw InvalidParameter("inversion_contour_detuned: t must be finite and >= 0");
  if (t == 0.0) return {-1.0, 0.0, 0.0, 0};
  return inversion_contour_detuned(params, t, build_default_path(params.alpha, params.tau(t), params.nu), opts);
}

}  // namespace jcsum
