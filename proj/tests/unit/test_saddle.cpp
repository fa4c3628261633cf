#include <cmath>
#include <numbers>
#include <vector>

#include "jcsum/asymptotics.hpp"
#include "jcsum/error.hpp"
#include "jcsum/exact.hpp"
#include "jcsum/saddle.hpp"
#include "near.hpp"

using namespace jcsum;
using std::numbers::pi;

namespace {
const cplx I{0.0, 1.0};

std::vector<double> sigma_grid(double lo, double hi, double step) {
  std::vector<double> tau;
  for (double s = lo; s <= hi + 1e-12; s += step) tau.push_back(s * s);
  return tau;
}
}  // namespace

TEST_SUITE("saddle") {

TEST_CASE("phase and curvature by substitution") {
  for (int n = 1; n <= 3; ++n) {
    double tau = 4.0 * pi * pi * n * n;
    cplx phi = phi_resonant(I * pi * double(n), tau);
    CHECK_NEAR(phi, cplx(0.0, 2.0 * pi * n), 1e-12);
    CHECK_NEAR(std::abs(curvature_factor(I * pi * double(n), tau, 0.0)), std::sqrt(1.0 + pi * pi * n * n), 1e-12);
  }
  const double e2 = std::exp(2.0);
  CHECK_NEAR(phi_resonant(1.0, 2.0), cplx(e2 - 2.0), 1e-14);
  CHECK_NEAR(phi_detuned(1.0, 2.0, 1.0), cplx(e2), 1e-14);
  CHECK(phi_detuned(cplx(0.3, 0.8), 1.7, 0.0) == phi_resonant(cplx(0.3, 0.8), 1.7));
  CHECK(curvature_factor(0.0, 1.0, 0.0) == cplx(1.0));
  CHECK_THROWS_AS(phi_resonant(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(phi_detuned(0.0, 1.0, 0.2), DomainError);

  // F = i pi at the detuned first revival: phi = 2 pi (1 + 2 nu) i
  for (double nu : {0.2, 0.5}) {
    double tau = 4.0 * pi * pi * (1.0 + nu);
    CHECK_NEAR(phi_detuned(I * pi, tau, nu), cplx(0.0, 2.0 * pi * (1.0 + 2.0 * nu)), 1e-12);
    cplx f = curvature_factor(I * pi, tau, nu);
    CHECK_NEAR(std::abs(f), std::sqrt(1.0 + pi * pi / ((1.0 + nu) * (1.0 + nu))), 1e-12);
  }
}

TEST_CASE("principal branch near tau = 0") {
  auto tau = sigma_grid(0.001, 0.1, 0.001);
  auto tr = trace_trajectory(BranchIndex{0, false}, 0.0, tau);
  double c_max = 0.0;
  for (const auto& s : tr.samples()) {
    cplx approx = I * std::sqrt(s.tau) / 2.0 + s.tau / 4.0;
    c_max = std::max(c_max, std::abs(s.F - approx) / std::pow(s.tau, 1.5));
    CHECK_NEAR(s.phi, cplx(-s.tau / 2.0, 2.0 * std::sqrt(s.tau)), 2.0 * std::pow(s.tau, 1.5));
  }
  CHECK(c_max < 1.0);
}

TEST_CASE("revival anchors") {
  for (int n = 1; n <= 3; ++n) {
    double tau_n = 4.0 * pi * pi * n * n;
    auto tr = trace_trajectory(BranchIndex::for_revival(n), 0.0, std::vector<double>{0.5 * tau_n, tau_n, 2.0 * tau_n});
    auto s = tr.samples()[1];
    CHECK_NEAR(s.F, I * pi * double(n), 1e-10);
    CHECK_NEAR(s.phi.real(), 0.0, 1e-10);
  }
  const double nu = 0.2;
  double tau_1 = 4.0 * pi * pi * (1.0 + nu);
  auto tr = trace_trajectory(BranchIndex::for_revival(1), nu, std::vector<double>{tau_1});
  CHECK_NEAR(tr.samples()[0].F, I * pi, 1e-10);
  CHECK_NEAR(tr.samples()[0].phi.real(), 0.0, 1e-10);
}

TEST_CASE("trajectory residuals, sign of Re phi, continuity") {
  auto tau = sigma_grid(0.2, 15.0, 0.01);
  for (double nu : {0.0, 0.2}) {
    for (int n = -3; n <= 3; ++n) {
      CAPTURE(nu);
      CAPTURE(n);
      auto tr = trace_trajectory(BranchIndex::for_revival(n), nu, tau);
      auto s = tr.samples();
      REQUIRE(s.size() == tau.size());
      double max_res = 0.0, max_re = -1e300, max_jump = 0.0;
      for (std::size_t j = 0; j < s.size(); ++j) {
        max_res = std::max(max_res, std::abs(saddle_residual(s[j].F, s[j].tau, nu)) / std::max(1.0, s[j].tau));
        max_re = std::max(max_re, s[j].phi.real());
        if (j > 0) {
          double ds = std::sqrt(s[j].tau) - std::sqrt(s[j - 1].tau);
          max_jump = std::max(max_jump, std::abs(s[j].F - s[j - 1].F) / ds);
        }
      }
      CHECK(max_res <= 1e-10);
      CHECK(max_re <= 1e-12);
      CHECK(max_jump <= 10.0);
    }
  }
}

TEST_CASE("conjugate copies") {
  auto tau = sigma_grid(0.5, 8.0, 0.5);
  auto a = trace_trajectory(BranchIndex::for_revival(2), 0.2, tau);
  auto b = trace_trajectory(BranchIndex::for_revival(-2), 0.2, tau);
  for (std::size_t j = 0; j < tau.size(); ++j) CHECK_NEAR(b.samples()[j].F, std::conj(a.samples()[j].F), 1e-12);
}

TEST_CASE("interpolation between samples") {
  auto tau = sigma_grid(1.0, 10.0, 0.5);
  auto tr = trace_trajectory(BranchIndex::for_revival(1), 0.0, tau);
  auto s = tr.at(30.0);
  CHECK(std::abs(saddle_residual(s.F, 30.0, 0.0)) < 1e-10);
  auto direct = trace_trajectory(BranchIndex::for_revival(1), 0.0, std::vector<double>{30.0});
  CHECK_NEAR(s.F, direct.samples()[0].F, 1e-10);
  CHECK_THROWS_AS(tr.at(0.5), InterpolationGap);
  CHECK_THROWS_AS(tr.at(101.0), InterpolationGap);
  CHECK_THROWS_AS(trace_trajectory(BranchIndex{}, 0.0, std::vector<double>{2.0, 1.0}), InvalidParameter);
}

TEST_CASE("assembled inversion") {
  auto p = ModelParams::from_nu(5.0, 0.0);
  const BranchIndex b0[] = {BranchIndex{}};
  auto r0 = inversion_saddle(p, 0.0, b0);
  CHECK(r0.total == -1.0);

  SUBCASE("principal branch tracks the exact sum during the collapse") {
    auto d = make_poisson(5.0);
    double worst = 0.0;
    for (int i = 1; i <= 200; ++i) {
      double t = 0.01 * i;
      worst = std::max(worst, std::abs(inversion_saddle(p, t, b0).total - inversion_exact_resonant(d, t)));
    }
    CHECK(worst < 1e-3);
  }

  SUBCASE("first revival centre") {
    const BranchIndex b1[] = {BranchIndex::for_revival(1)};
    double t1 = 2.0 * pi * 5.0;
    auto r = inversion_saddle(p, t1, b1);
    const auto& c = r.branches.at(0);
    double envelope = std::exp(25.0 * c.phi.real()) / std::sqrt(std::abs(c.f));
    CHECK_NEAR(envelope, std::pow(1.0 + pi * pi, -0.25), 1e-6);
  }

  SUBCASE("quadratic phase near revivals") {
    for (int n = 1; n <= 2; ++n) {
      double tn = 2.0 * pi * n * 5.0;
      double width = revival_envelope(5.0, 0.0, n).width;
      const BranchIndex bn[] = {BranchIndex::for_revival(n)};
      for (double dt : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        double t = tn + dt * width;
        double im = inversion_saddle(p, t, bn).branches.at(0).phi.imag();
        double quad = t * t / (2.0 * pi * n * 25.0);
        CHECK(std::abs(im / quad - 1.0) < 0.02);
      }
    }
  }

  SUBCASE("policies and deduplication") {
    const BranchIndex pair[] = {BranchIndex::for_revival(2), BranchIndex::for_revival(-2)};
    const BranchIndex one[] = {BranchIndex::for_revival(2)};
    double t = 60.0;
    CHECK(inversion_saddle(p, t, pair).total == inversion_saddle(p, t, one).total);

    const BranchIndex two[] = {BranchIndex::for_revival(2), BranchIndex::for_revival(3)};
    double tc = 15.08 * 5.0;
    auto sum = inversion_saddle(p, tc, two);
    auto max = inversion_saddle(p, tc, two, {SuperpositionPolicy::max});
    int included = 0;
    for (const auto& c : max.branches) included += c.included ? 1 : 0;
    CHECK(included == 1);
    CHECK(sum.branches.size() == 2);
    CHECK_NEAR(sum.total, sum.branches[0].value + sum.branches[1].value, 1e-15);
  }
}

TEST_CASE("revival and crossing times") {
  auto t = revival_times(5.0, 0.0, 2);
  REQUIRE(t.size() == 2);
  CHECK_NEAR(t[0], 31.4159, 1e-4);
  CHECK_NEAR(revival_times(5.0, 0.2, 1).at(0), 10.0 * pi * std::sqrt(1.2), 1e-12);
  CHECK_NEAR(revival_times(5.0, 0.2, 1).at(0), 34.414, 1e-3);

  auto c = crossing_times(5.0, 3);
  REQUIRE(c.size() == 3);
  CHECK_NEAR(c[0].formula, 8.0 * pi * 5.0 / 3.0, 1e-12);
  CHECK_NEAR(c[1].formula_scaled, 24.0 * pi / 5.0, 1e-12);
  CHECK_NEAR(c[1].formula_scaled, 15.08, 0.005);
  CHECK(std::abs(c[0].refined / c[0].formula - 1.0) < 0.02);
  CHECK_NEAR(c[0].refined_scaled, 8.30896, 1e-4);
  CHECK_NEAR(c[1].refined_scaled, 14.99784, 1e-4);
}

TEST_CASE("default branch set") {
  auto p = ModelParams::from_nu(5.0, 0.0);
  auto b = default_branches(p, 200.0);
  REQUIRE(!b.empty());
  CHECK(b.front().revival_index() == 0);
  CHECK(b.back().revival_index() == static_cast<int>(200.0 / p.revival_period()) + 2);
}

}  // TEST_SUITE
