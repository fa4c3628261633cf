#include <cmath>
#include <numbers>
#include <vector>

#include "jcsum/asymptotics.hpp"
#include "jcsum/envelope.hpp"
#include "jcsum/error.hpp"
#include "jcsum/exact.hpp"
#include "jcsum/saddle.hpp"
#include "near.hpp"

using namespace jcsum;
using std::numbers::pi;

TEST_SUITE("asymptotics") {

TEST_CASE("collapse law") {
  CHECK(collapse_resonant(5.0, 0.0) == -1.0);
  CHECK(collapse_detuned(5.0, 0.2, 0.0) == -1.0);
  CHECK_NEAR(collapse_resonant(5.0, 1.0), -std::exp(-0.5) * std::cos(10.0), 1e-15);
  CHECK_NEAR(collapse_resonant(5.0, 1.0), 0.5089, 1e-4);
  for (double t : {0.1, 0.9, 2.3, 7.0}) CHECK(collapse_detuned(5.0, 0.0, t) == collapse_resonant(5.0, t));
  CHECK_THROWS_AS(collapse_resonant(0.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(collapse_resonant(5.0, -1.0), InvalidParameter);
}

TEST_CASE("collapse carrier frequency") {
  // zero crossings of cos(2 |alpha| t) are pi / (2 |alpha|) apart
  double a = 5.0;
  for (int k = 0; k < 3; ++k) {
    double t = (0.5 + k) * pi / (2.0 * a);
    CHECK_NEAR(collapse_resonant(a, t), 0.0, 1e-14);
  }
}

TEST_CASE("revival values") {
  const double a = 5.0;
  for (int n = 1; n <= 3; ++n) {
    double tn = 2.0 * pi * n * a;
    double expect = -std::pow(1.0 + pi * pi * n * n, -0.25) * std::cos(2.0 * pi * n * a * a - pi / 4.0);
    CHECK_NEAR(revival_resonant(a, n, tn), expect, 1e-12);
    CHECK_NEAR(revival_resonant(a, n, tn, RevivalMode::simplified), expect, 1e-12);
  }
  auto e1 = revival_envelope(a, 0.0, 1);
  CHECK_NEAR(e1.prefactor, std::pow(1.0 + pi * pi, -0.25), 1e-15);
  CHECK_NEAR(e1.prefactor, 0.55074, 1e-5);
  CHECK(e1.width > 0.0);
  CHECK(e1.prefactor <= 1.0);
  CHECK_THROWS_AS(revival_resonant(a, 0, 1.0), InvalidParameter);
}

TEST_CASE("descriptor reproduces the closed form") {
  for (auto mode : {RevivalMode::full, RevivalMode::simplified}) {
    for (double nu : {0.0, 0.2}) {
      for (int n = 1; n <= 3; ++n) {
        auto e = revival_envelope(5.0, nu, n, mode);
        for (double dt : {-7.0, -2.0, 0.0, 1.5, 6.0}) {
          double t = e.center_time + dt;
          CHECK_NEAR(e(t), revival_detuned(5.0, nu, n, t, mode), 1e-9);
        }
      }
    }
  }
}

TEST_CASE("detuned reduction and peak") {
  for (double t : {20.0, 31.4, 44.0}) {
    for (auto mode : {RevivalMode::full, RevivalMode::simplified}) {
      CHECK(revival_detuned(5.0, 0.0, 1, t, mode) == revival_resonant(5.0, 1, t, mode));
    }
  }
  auto e = revival_envelope(5.0, 0.2, 1, RevivalMode::simplified);
  CHECK_NEAR(e.center_time, 10.0 * pi * std::sqrt(1.2), 1e-12);
  CHECK_NEAR(e.prefactor, std::pow(1.0 + pi * pi / 1.44, -0.25), 1e-15);
}

TEST_CASE("envelope symmetry and bound") {
  for (double nu : {0.0, 0.2}) {
    for (int n = 1; n <= 2; ++n) {
      auto e = revival_envelope(5.0, nu, n);
      auto gauss = [&](double t) {
        double d = t - e.center_time;
        return e.prefactor * std::exp(-0.5 * d * d / (e.width * e.width));
      };
      for (double dt : {0.3, 1.0, 2.5}) {
        CHECK_NEAR(gauss(e.center_time - dt), gauss(e.center_time + dt), 1e-15);
      }
      for (int i = 0; i < 400; ++i) {
        double t = e.center_time - 10.0 + 0.05 * i;
        CHECK(std::abs(revival_detuned(5.0, nu, n, t, RevivalMode::full)) <= e.prefactor + 1e-15);
      }
    }
  }
}

TEST_CASE("simplified revival against the single-branch saddle") {
  auto p = ModelParams::from_nu(5.0, 0.0);
  for (int n = 1; n <= 2; ++n) {
    auto e = revival_envelope(5.0, 0.0, n, RevivalMode::simplified);
    const BranchIndex b[] = {BranchIndex::for_revival(n)};
    double worst = 0.0;
    for (int i = -50; i <= 50; ++i) {
      double t = e.center_time + e.width * i / 50.0;
      const auto c = inversion_saddle(p, t, b).branches.at(0);
      double env_saddle = std::exp(25.0 * c.phi.real()) / std::sqrt(std::abs(c.f));
      double d = t - e.center_time;
      double env_closed = e.prefactor * std::exp(-0.5 * d * d / (e.width * e.width));
      worst = std::max(worst, std::abs(env_saddle - env_closed));
    }
    CAPTURE(n);
    CHECK(worst < 1e-2);
  }
}

TEST_CASE("sliding envelope") {
  std::vector<double> t, x;
  for (int i = 0; i < 100; ++i) {
    t.push_back(0.1 * i);
    x.push_back(i == 40 ? -3.0 : 0.5);
  }
  auto env = sliding_max_abs(t, x, 1.0);
  CHECK(env[40] == 3.0);
  CHECK(env[37] == 3.0);
  CHECK(env[43] == 3.0);
  CHECK(env[20] == 0.5);
  CHECK(env[60] == 0.5);
  CHECK(argmax(env) >= 35);
  CHECK(argmax(env) <= 36);
  auto shifted = sliding_max_abs(t, x, 1.0, 0.5);
  CHECK(shifted[20] == 0.0);
  CHECK_NEAR(rabi_period(5.0, 0.0), pi / 5.0, 1e-15);
}

}  // TEST_SUITE
