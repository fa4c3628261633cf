#include "jcsum/app/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "jcsum/app/commands.hpp"
#include "jcsum/asymptotics.hpp"
#include "jcsum/envelope.hpp"
#include "jcsum/error.hpp"
#include "jcsum/exact.hpp"
#include "jcsum/hankel.hpp"
#include "jcsum/lambert.hpp"
#include "jcsum/saddle.hpp"

namespace jcsum::app {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string fix(double x, int digits = 5) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  v.back() = b;
  return v;
}

// Accumulates the sub-checks of one criterion.
class Checks {
 public:
  explicit Checks(double scale) : scale_(scale) {}

  // measured < limit (scaled)
  void below(const std::string& what, double measured, double limit) {
    const bool ok = measured < limit * scale_;
    pass_ = pass_ && ok;
    add(what + " = " + sci(measured) + " (limit " + sci(limit) + ")" + (ok ? "" : " !"));
  }
  void holds(const std::string& what, bool ok) {
    pass_ = pass_ && ok;
    add(what + (ok ? "" : " !"));
  }
  void note(const std::string& text) { add(text); }
  void runtime(double seconds, double limit) {
    const bool ok = seconds < limit;
    pass_ = pass_ && ok;
    add("runtime " + fix(seconds, 2) + " s (limit " + fix(limit, 0) + " s)" + (ok ? "" : " !"));
  }

  bool pass() const { return pass_; }
  const std::string& detail() const { return detail_; }

 private:
  void add(const std::string& s) { detail_ += (detail_.empty() ? "" : "; ") + s; }

  double scale_;
  bool pass_ = true;
  std::string detail_;
};

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void c1_initial(Checks& c, std::ostream&) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (double alpha : {1.0, 5.0, 10.0}) {
    for (double nu : {0.0, 0.2}) {
      const ModelParams p = ModelParams::from_nu(alpha, nu);
      const PhotonDistribution dist = make_poisson(alpha);
      const double ex = inversion_exact(dist, p, 0.0);
      const double co = p.resonant() ? inversion_contour_resonant(alpha, 0.0).value
                                     : inversion_contour_detuned(p, 0.0).value;
      const BranchIndex b0{0, false};
      const double sa = inversion_saddle(p, 0.0, std::span<const BranchIndex>(&b0, 1)).total;
      worst = std::max({worst, std::abs(ex + 1.0), std::abs(co + 1.0), std::abs(sa + 1.0)});
    }
  }
  c.below("max |value + 1| over exact/contour/saddle", worst, 1e-8);
  c.runtime(elapsed(t0), 1.0);
}

void c2_oracle(Checks& c, std::ostream&) {
  const auto t0 = Clock::now();
  const double alpha = 5.0;
  const PhotonDistribution dist = make_poisson(alpha);
  double worst = 0.0, at = 0.0;
  for (double t : linspace(0.01, 45.0, 500)) {
    const double d = std::abs(inversion_contour_resonant(alpha, t).value - inversion_exact_resonant(dist, t));
    if (d > worst) {
      worst = d;
      at = t;
    }
  }
  c.below("max |contour - exact| (at t = " + fix(at, 3) + ")", worst, 1e-6);
  c.note("runtime " + fix(elapsed(t0), 2) + " s (target 30 s)");
}

void c3_lambert(Checks& c, std::ostream&) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  const auto axis = linspace(-9.5, 9.5, 10);
  for (int k = -5; k <= 5; ++k) {
    for (double x : axis) {
      for (double y : axis) {
        const cplx u(x, y);
        const cplx w = lambert_w(k, u);
        worst = std::max(worst, std::abs(w * std::exp(w) - u) / std::max(1.0, std::abs(u)));
      }
    }
  }
  c.below("max scaled residual over 11 x 100 points", worst, 1e-12);
  const cplx bp(-std::exp(-1.0), 0.0);
  const double e0 = std::abs(lambert_w(0, bp) + 1.0);
  const double em1 = std::abs(lambert_w(-1, bp) + 1.0);
  c.below("|W_0(-1/e) + 1|", e0, 1e-6);
  c.below("|W_-1(-1/e) + 1|", em1, 1e-6);
  c.runtime(elapsed(t0), 5.0);
}

void c4_series(Checks& c, std::ostream&) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> radius(0.0, 1.0), angle(-kPi, kPi);
  double worst = 0.0, at = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double r = 0.3 * std::sqrt(radius(rng));
    const cplx u = std::polar(r, angle(rng));
    const double d = std::abs(lambert_series(u, 40) - lambert_w(0, u));
    if (d > worst) {
      worst = d;
      at = std::abs(u);
    }
  }
  c.below("max |series_40 - W_0| (at |u| = " + fix(at, 4) + ")", worst, 1e-10);
  c.runtime(elapsed(t0), 1.0);
}

void c5_saddle(Checks& c, std::ostream&) {
  const auto t0 = Clock::now();
  std::vector<double> taus;
  for (int i = 1; i <= 2500; ++i) taus.push_back(250.0 * i / 2500);
  double res = 0.0, re_phi = -INFINITY;
  for (double nu : {0.0, 0.2}) {
    for (int k = -3; k <= 3; ++k) {
      for (bool conj : {false, true}) {
        const SaddleTrajectory tr = trace_trajectory(BranchIndex{k, conj}, nu, taus);
        for (const auto& s : tr.samples()) {
          res = std::max(res, std::abs(saddle_residual(s.F, s.tau, nu)) / std::max(1.0, 0.25 * s.tau));
          re_phi = std::max(re_phi, s.phi.real());
        }
      }
    }
  }
  c.below("max scaled saddle residual", res, 1e-10);
  c.holds("max Re phi = " + sci(re_phi) + " (limit 1.000e-12)", re_phi <= 1e-12);
  c.runtime(elapsed(t0), 10.0);
}

void c6_collapse(Checks& c, std::ostream&) {
  const auto t0 = Clock::now();
  const double alpha = 5.0;
  const PhotonDistribution dist = make_poisson(alpha);
  double worst = 0.0, at = 0.0;
  for (double t : linspace(0.0, 1.5, 1501)) {
    const double d = std::abs(collapse_resonant(alpha, t) - inversion_exact_resonant(dist, t));
    if (d > worst) {
      worst = d;
      at = t;
    }
  }
  c.below("max |collapse - exact| on [0, 1.5] (at t = " + fix(at, 3) + ")", worst, 0.02);
  c.runtime(elapsed(t0), 1.0);
}

void c7_revival(Checks& c, std::ostream&) {
  const double alpha = 5.0;
  const PhotonDistribution dist = make_poisson(alpha);
  const auto xs = linspace(3.5, 9.5, 6001);
  std::vector<double> ts, v;
  for (double x : xs) {
    ts.push_back(alpha * x);
    v.push_back(inversion_exact_resonant(dist, alpha * x));
  }
  const auto env = sliding_max_abs(ts, v, rabi_period(alpha, 0.0));
  const std::size_t i = argmax(env);
  const double expected = std::pow(1.0 + kPi * kPi, -0.25);
  c.below("|peak t/|alpha| - 2 pi| (peak at " + fix(xs[i]) + ")", std::abs(xs[i] - 2.0 * kPi), 0.4);
  c.below("relative peak error (peak " + fix(env[i]) + " vs " + fix(expected) + ")",
          std::abs(env[i] - expected) / expected, 0.15);
}

void c8_two_revivals(Checks& c, std::ostream& info) {
  const double alpha = 5.0;
  const ModelParams p = ModelParams::from_nu(alpha, 0.0);
  const PhotonDistribution dist = make_poisson(alpha);
  const auto xs = linspace(12.0, 22.0, 4001);
  std::vector<double> ts, ex;
  for (double x : xs) {
    ts.push_back(alpha * x);
    ex.push_back(inversion_exact_resonant(dist, alpha * x));
  }
  const double window = rabi_period(alpha, 0.0);
  const auto env_ex = sliding_max_abs(ts, ex, window);

  auto saddle_env = [&](const std::vector<BranchIndex>& bs) {
    const auto res = inversion_saddle_grid(p, ts, bs);
    std::vector<double> v;
    for (const auto& r : res) v.push_back(r.total);
    return sliding_max_abs(ts, v, window);
  };
  auto discrepancy = [&](const std::vector<double>& env) {
    double d = 0.0;
    for (std::size_t i = 0; i < env.size(); ++i) d = std::max(d, std::abs(env[i] - env_ex[i]));
    return d;
  };
  auto min_between_revivals = [&](const std::vector<double>& env) {
    std::size_t best = env.size();
    for (std::size_t i = 0; i < env.size(); ++i) {
      if (xs[i] < 4.0 * kPi || xs[i] > 6.0 * kPi) continue;
      if (best == env.size() || env[i] < env[best]) best = i;
    }
    return xs[best];
  };

  const auto env23 = saddle_env({BranchIndex::for_revival(2), BranchIndex::for_revival(3)});
  const double target = 24.0 * kPi / 5.0;
  c.below("envelope discrepancy, branches {2,3}", discrepancy(env23), 0.05);
  const double m_ex = min_between_revivals(env_ex);
  const double m_sa = min_between_revivals(env23);
  c.below("|exact envelope minimum - 15.08| (at " + fix(m_ex, 3) + ")", std::abs(m_ex - target), 0.5);
  c.below("|saddle envelope minimum - 15.08| (at " + fix(m_sa, 3) + ")", std::abs(m_sa - target), 0.5);
  const double all = discrepancy(saddle_env(default_branches(p, ts.back())));
  info << "[INFO] 8 envelope discrepancy with all branches 0..5: " << sci(all) << '\n';
}

void c9_reduction(Checks& c, std::ostream&) {
  const double alpha = 5.0;
  const ModelParams p0 = ModelParams::from_nu(alpha, 0.0);
  double contour = 0.0;
  for (double t : linspace(0.01, 45.0, 100)) {
    contour = std::max(contour, std::abs(inversion_contour_detuned(p0, t).value -
                                         inversion_contour_resonant(alpha, t).value));
  }
  c.below("max |contour_detuned(nu=0) - contour_resonant|", contour, 1e-10);
  double closed = 0.0;
  for (double t : linspace(0.0, 60.0, 301)) {
    closed = std::max(closed, std::abs(collapse_detuned(alpha, 0.0, t) - collapse_resonant(alpha, t)));
    for (int n = 1; n <= 3; ++n) {
      for (RevivalMode m : {RevivalMode::full, RevivalMode::simplified}) {
        closed = std::max(closed, std::abs(revival_detuned(alpha, 0.0, n, t, m) - revival_resonant(alpha, n, t, m)));
      }
    }
  }
  c.below("max closed-form reduction error", closed, 1e-14);
}

void c10_detuned_revival(Checks& c, std::ostream&) {
  const double alpha = 5.0, nu = 0.2;
  const ModelParams p = ModelParams::from_nu(alpha, nu);
  const PhotonDistribution dist = make_poisson(alpha);
  const double period = p.revival_period();
  const double st = static_part(alpha, p.mu).value;
  const auto xs = linspace(0.6, 1.4, 4001);
  std::vector<double> ts, ex, ap;
  for (double x : xs) {
    const double t = period * x;
    ts.push_back(t);
    ex.push_back(inversion_exact(dist, p, t));
    ap.push_back(revival_detuned(alpha, nu, 1, t) + st);
  }
  const double window = rabi_period(alpha, nu);
  const auto env_ex = sliding_max_abs(ts, ex, window, st);
  const auto env_ap = sliding_max_abs(ts, ap, window, st);
  double d = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) d = std::max(d, std::abs(env_ex[i] - env_ap[i]));
  c.below("envelope discrepancy about the static level", d, 0.07);
  const double pk_ex = xs[argmax(env_ex)];
  const double pk_ap = xs[argmax(env_ap)];
  c.below("|exact peak t/T - 1| (at " + fix(pk_ex, 4) + ")", std::abs(pk_ex - 1.0), 0.02);
  c.below("|approximate peak t/T - 1| (at " + fix(pk_ap, 4) + ")", std::abs(pk_ap - 1.0), 0.02);
  c.below("relative static-part deviation from -0.2 (static " + fix(st) + ")", std::abs(st + 0.2) / 0.2, 0.15);
}

void c11_generalized(Checks& c, std::ostream&) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_int_distribution<int> branch(-3, 3), flag(0, 1);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double nu = i % 2 == 0 ? 0.05 : 0.2;
    const cplx u(coord(rng), coord(rng));
    const BranchIndex b{branch(rng), flag(rng) == 1};
    const cplx w = generalized_lambert({u, nu, b});
    worst = std::max(worst, std::abs(generalized_lambert_map(w, nu) - u) / std::max(1.0, std::abs(u)));
  }
  c.below("max scaled residual over 200 queries", worst, 1e-12);
  double bp = 0.0;
  for (double nu : {0.001, 0.01, 0.02}) bp = std::max(bp, branch_point_w0(nu).residual);
  c.below("max branch-point residual", bp, 1e-12);
  const double nu0 = critical_detuning();
  c.below("|nu_0 - 0.024894| (nu_0 = " + fix(nu0, 6) + ")", std::abs(nu0 - 0.024894), 5e-7);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void c12_determinism(Checks& c, std::ostream&) {
  namespace fs = std::filesystem;
  std::random_device rd;
  const fs::path dir = fs::temp_directory_path() / ("jcsum-selftest-" + std::to_string(rd()));
  fs::create_directories(dir);
  RunConfig cfg;
  cfg.alpha = 5.0;
  cfg.methods = {Method::exact, Method::contour, Method::saddle, Method::collapse, Method::revival};
  cfg.t_start = 0.0;
  cfg.t_stop = 40.0;
  cfg.t_count = 201;
  cfg.per_branch = true;
  std::ostringstream sink;
  std::string a, b;
  try {
    cfg.out = (dir / "first.csv").string();
    cmd_inversion(cfg, sink);
    cfg.out = (dir / "second.csv").string();
    cmd_inversion(cfg, sink);
    a = slurp(dir / "first.csv");
    b = slurp(dir / "second.csv");
  } catch (...) {
    fs::remove_all(dir);
    throw;
  }
  fs::remove_all(dir);
  c.holds("two cmd_inversion runs byte-identical (" + std::to_string(a.size()) + " bytes)", !a.empty() && a == b);
}

struct Criterion {
  int id;
  const char* name;
  void (*run)(Checks&, std::ostream&);
};

constexpr Criterion kCriteria[] = {
    {1, "initial condition", c1_initial},
    {2, "contour versus exact sum", c2_oracle},
    {3, "Lambert W conformance", c3_lambert},
    {4, "series versus iterative W_0", c4_series},
    {5, "saddle trajectory residuals", c5_saddle},
    {6, "collapse law versus exact sum", c6_collapse},
    {7, "first revival centering", c7_revival},
    {8, "second and third revival, branches {2,3}", c8_two_revivals},
    {9, "detuned forms at nu = 0", c9_reduction},
    {10, "detuned first revival", c10_detuned_revival},
    {11, "generalized Lambert equation", c11_generalized},
    {12, "determinism", c12_determinism},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& info) {
  std::vector<CriterionResult> out;
  for (const auto& cr : kCriteria) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), cr.id) == opts.only.end()) continue;
    Checks checks(opts.tolerance_scale);
    const auto t0 = Clock::now();
    CriterionResult r{cr.id, cr.name, false, "", 0.0};
    try {
      cr.run(checks, info);
      r.pass = checks.pass();
      r.detail = checks.detail();
    } catch (const std::exception& e) {
      r.detail = checks.detail() + (checks.detail().empty() ? "" : "; ") + "error: " + e.what();
    }
    r.seconds = elapsed(t0);
    out.push_back(std::move(r));
  }
  return out;
}

int cmd_selftest(const AcceptanceOptions& opts, std::ostream& out) {
  const auto results = run_acceptance(opts, out);
  int failed = 0;
  for (const auto& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail << '\n';
    failed += r.pass ? 0 : 1;
  }
  out << results.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace jcsum::app
