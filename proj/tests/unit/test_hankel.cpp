#include <cmath>
#include <numbers>

#include "jcsum/error.hpp"
#include "jcsum/exact.hpp"
#include "jcsum/hankel.hpp"
#include "near.hpp"

using namespace jcsum;
using std::numbers::pi;

TEST_SUITE("hankel") {

TEST_CASE("default paths are valid") {
  for (double alpha : {1.0, 5.0, 10.0}) {
    for (double tau : {0.0, 0.01, 1.0, 4.0 * pi * pi, 150.0}) {
      for (double nu : {0.0, 0.2}) {
        auto path = build_default_path(alpha, tau, nu);
        CHECK_NOTHROW(path.validate());
        CHECK(path.panel_count() > 0);
        CHECK(path.nodes().size() == path.panel_count() * kGaussOrder);
      }
    }
  }
  CHECK_THROWS_AS(build_default_path(0.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(build_default_path(5.0, -1.0), InvalidParameter);
}

TEST_CASE("path is conjugation symmetric") {
  auto path = build_default_path(5.0, 4.0 * pi * pi);
  auto nodes = path.nodes();
  const std::size_t n = nodes.size();
  REQUIRE(n % 2 == 0);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const auto& lo = nodes[j];
    const auto& hi = nodes[n - 1 - j];
    CHECK_NEAR(hi.point, std::conj(lo.point), 1e-12 * std::abs(lo.point));
    CHECK_NEAR(hi.weight, -std::conj(lo.weight), 1e-12 * std::abs(lo.weight));
  }
}

TEST_CASE("cosine self-test") {
  for (double tau : {0.0, 0.01, 1.0, 4.0 * pi * pi, 50.0}) {
    auto path = build_default_path(5.0, tau);
    for (double x : {0.0, 0.5, 1.0, pi, 10.0}) {
      CAPTURE(tau);
      CAPTURE(x);
      auto r = cos_via_hankel(x, path);
      CHECK_NEAR(r.value, std::cos(x), 1e-10);
      CHECK(r.imag_residual < 1e-8);
    }
  }
  CHECK_NEAR(cos_via_hankel(1.0, build_loop_path(1.0)).value, 0.5403023058681398, 1e-10);
  CHECK_NEAR(cos_via_hankel(40.0, build_loop_path(20.0)).value, std::cos(40.0), 1e-10);
}

TEST_CASE("resonant integral against the exact sum") {
  auto d = make_poisson(5.0);
  CHECK(inversion_contour_resonant(5.0, 0.0).value == -1.0);
  for (double t : {0.5, 1.0, 5.0, 10.0, 31.4, 60.0}) {
    CAPTURE(t);
    auto r = inversion_contour_resonant(5.0, t);
    CHECK_NEAR(r.value, inversion_exact_resonant(d, t), 1e-8);
    CHECK(r.imag_residual < 1e-8);
  }
  // tau = 0.01
  CHECK_NEAR(inversion_contour_resonant(5.0, 0.5).value, inversion_exact_resonant(d, 0.5), 1e-8);
  // first revival centre in lambda*t
  double t1 = 2.0 * pi * 25.0;
  CHECK_NEAR(inversion_contour_resonant(5.0, t1).value, -0.25623012935895015, 1e-6);
}

TEST_CASE("path independence") {
  const PathOptions other{0.35, 0.6};
  for (double t : {1.0, 10.0, 31.4}) {
    double tau = t * t / 25.0;
    auto a = inversion_contour_resonant(5.0, t, build_default_path(5.0, tau));
    auto b = inversion_contour_resonant(5.0, t, build_default_path(5.0, tau, 0.0, other));
    CHECK_NEAR(a.value, b.value, 1e-8);
  }
}

TEST_CASE("refinement stays within the error estimate") {
  for (double t : {3.0, 31.4}) {
    auto path = build_default_path(5.0, t * t / 25.0);
    auto coarse = inversion_contour_resonant(5.0, t, path);
    auto fine = inversion_contour_resonant(5.0, t, path.refined());
    CHECK(std::abs(coarse.value - fine.value) <= coarse.error_estimate);
    CHECK(path.refined().panel_count() == 2 * path.panel_count());
  }
}

TEST_CASE("detuned integral") {
  auto d = make_poisson(5.0);
  SUBCASE("resonant reduction") {
    auto p = ModelParams::from_nu(5.0, 0.0);
    for (double t : {0.7, 12.0, 33.0}) {
      CHECK_NEAR(inversion_contour_detuned(p, t).value, inversion_contour_resonant(5.0, t).value, 1e-10);
    }
  }
  SUBCASE("equals the shifted cosine sum") {
    // -sum W_n cos(2 t sqrt(n + mu)), multiprecision
    auto p = ModelParams::from_nu(5.0, 0.2);
    CHECK_NEAR(inversion_contour_detuned(p, 0.1).value, -0.45912387390451823, 1e-8);
    CHECK_NEAR(inversion_contour_detuned(p, 10.0).value, -6.9103705136566545e-13, 1e-8);
    CHECK_NEAR(inversion_contour_detuned(p, 37.0).value, 0.38197315345708528, 1e-8);
    CHECK(std::abs(inversion_contour_detuned(p, 0.1).value) <= 1.05);
  }
}

TEST_CASE("phase function derivatives") {
  const double h = 1e-5;
  for (double nu : {0.0, 0.2}) {
    PhaseFunction phi{2.5, nu};
    for (cplx z : {cplx(0.7, 0.3), cplx(-0.4, 1.1), cplx(2.0, -0.5)}) {
      cplx d1 = (phi.value(z + h) - phi.value(z - h)) / (2.0 * h);
      cplx d2 = (phi.first_derivative(z + h) - phi.first_derivative(z - h)) / (2.0 * h);
      CHECK_NEAR(phi.first_derivative(z), d1, 1e-8);
      CHECK_NEAR(phi.second_derivative(z), d2, 1e-8);
    }
  }
  PhaseFunction phi{2.0, 1.0};
  cplx z{1.0, 0.0};
  CHECK_NEAR(phi.value(z), cplx(2.0 - 1.0 + std::exp(-1.0) - 1.0), 1e-15);
}

}  // TEST_SUITE
