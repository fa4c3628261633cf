#include <cmath>
#include <numbers>

#include "jcsum/error.hpp"
#include "jcsum/lambert.hpp"
#include "near.hpp"

using namespace jcsum;
using std::numbers::pi;

namespace {
const cplx I{0.0, 1.0};

double residual(cplx w, cplx u) { return std::abs(w * std::exp(w) - u) / std::max(1.0, std::abs(u)); }
}  // namespace

TEST_SUITE("lambert") {

TEST_CASE("elementary values") {
  CHECK(lambert_w(0, 0.0) == cplx{});
  CHECK_NEAR(lambert_w(0, std::numbers::e), cplx(1.0), 1e-15);
  CHECK_NEAR(lambert_w(0, -1.0 / std::numbers::e), cplx(-1.0), 1e-6);
  CHECK_NEAR(lambert_w(-1, -1.0 / std::numbers::e), cplx(-1.0), 1e-6);
  CHECK(residual(lambert_w(0, I * pi / 2.0), I * pi / 2.0) <= 1e-12);
  CHECK_THROWS_AS(lambert_w(1, 0.0), DomainError);
}

TEST_CASE("multiprecision reference values") {
  struct Row { int k; cplx u, w; };
  const Row rows[] = {
      {0, {0.5, 0}, {0.35173371124919583, 0}},
      {0, {1, 2}, {0.8237712167092305, 0.53292898679544161}},
      {0, {-0.2, 0}, {-0.25917110181907376, 0}},
      {-1, {-0.2, 0}, {-2.5426413577735263, 0}},
      {1, {0, 3}, {-0.72730975090267003, 6.1657685947216418}},
      {-2, {-4, 1}, {-0.66826904915269117, -8.0157834965976656}},
      {3, {10, -10}, {-0.15327858859686141, 16.48406310664637}},
      {0, {100, 0}, {3.3856301402900502, 0}},
      {-1, {0, -0.5}, {-2.5499506806020235, -5.873600583976438}},
      {2, {0.3, 0}, {-3.6258769211141375, 10.667938477037948}},
  };
  for (const auto& r : rows) {
    CAPTURE(r.k);
    CAPTURE(r.u);
    CHECK_NEAR(lambert_w(r.k, r.u), r.w, 1e-13 * std::max(1.0, std::abs(r.w)));
  }
}

TEST_CASE("residual and conjugation symmetry on a grid") {
  for (int k = -3; k <= 3; ++k) {
    for (double re = -6.0; re <= 6.0; re += 0.75) {
      for (double im = -6.25; im <= 6.25; im += 0.5) {
        cplx u{re, im};
        if (k != 0 && std::abs(u) < 1e-12) continue;
        cplx w = lambert_w(k, u);
        CHECK(residual(w, u) <= 1e-12);
        CHECK_NEAR(lambert_w(-k, std::conj(u)), std::conj(w), 1e-10 * std::max(1.0, std::abs(w)));
      }
    }
  }
}

TEST_CASE("series coefficients and agreement") {
  CHECK(lambert_series_coefficient(1) == 1.0);
  CHECK(lambert_series_coefficient(2) == -1.0);
  CHECK(lambert_series_coefficient(3) == doctest::Approx(1.5));
  CHECK_NEAR(lambert_series(0.1, 30), lambert_w(0, 0.1), 1e-12);
  CHECK_NEAR(lambert_series(0.05 * I, 30), lambert_w(0, 0.05 * I), 1e-12);
  CHECK_THROWS_AS(lambert_series(0.4, 10), DomainError);

  // inside |u| < 1/e - 1e-3 the 200-term sum converges well enough
  for (double r : {0.05, 0.15, 0.2}) {
    for (int j = 0; j < 12; ++j) {
      cplx u = std::polar(r, 2.0 * pi * j / 12.0);
      CHECK_NEAR(lambert_series(u, 200), lambert_w(0, u), 1e-10);
    }
  }
}

TEST_CASE("generalized equation") {
  auto g = [](cplx w, double nu) { return w * std::sqrt(nu + std::exp(2.0 * w)); };

  SUBCASE("resonant reduction") {
    for (double re = -3.0; re <= 3.0; re += 1.0) {
      for (double im = -3.0; im <= 3.0; im += 1.0) {
        cplx u{re, im};
        if (std::abs(u) < 1e-12) continue;
        for (int k = -1; k <= 1; ++k) {
          cplx w = generalized_lambert({u, 0.0, {k, false}});
          CHECK_NEAR(w, lambert_w(k, u), 1e-10 * std::max(1.0, std::abs(w)));
        }
      }
    }
  }

  SUBCASE("revival points") {
    for (double nu : {0.0, 0.2, 1.0}) {
      for (int n = 1; n <= 3; ++n) {
        // e^{i pi n} = (-1)^n under the e^w (1 + nu e^{-2w})^{1/2} root; the
        // copy sign of the revival branch carries it
        auto b = BranchIndex::for_revival(n);
        cplx u = b.u_sign() * I * pi * double(n) * std::sqrt(1.0 + nu);
        cplx w = generalized_lambert({u, nu, b});
        CHECK_NEAR(-w * w * (nu + std::exp(2.0 * w)), cplx(pi * pi * n * n * (1.0 + nu)), 1e-9);
        CHECK_NEAR(w, I * pi * double(n), 1e-10);
      }
    }
  }

  SUBCASE("multiprecision roots") {
    struct Row { cplx u; double nu; int k; cplx w; };
    const Row rows[] = {
        {{0, 1}, 0.2, 0, {0.35539775585922212, 0.58755899754430408}},
        {{2, -1}, 0.05, 0, {0.88875439099563313, -0.22135195457936973}},
        {{0, 10}, 0.2, 1, {0.40967395221111373, 6.3532391803925293}},
    };
    for (const auto& r : rows) {
      cplx w = generalized_lambert({r.u, r.nu, {r.k, false}});
      CHECK_NEAR(w, r.w, 1e-12);
      CHECK(std::abs(generalized_lambert_map(w, r.nu) - r.u) <= 1e-12 * std::max(1.0, std::abs(r.u)));
    }
  }

  SUBCASE("small argument residual") {
    cplx u = 0.3 * I;
    cplx w = generalized_lambert({u, 0.2, {0, false}});
    CHECK(std::abs(g(w, 0.2) - u) < 1e-12);
  }

  SUBCASE("seed in the wrong strip") {
    cplx u{0.0, 10.0};
    CHECK_THROWS_AS(generalized_lambert({u, 0.2, {0, false}}, cplx{0.4, 6.35}), WrongBranch);
  }
}

TEST_CASE("generalized series") {
  for (double nu : {0.0, 0.2, 1.0}) {
    auto c = generalized_series_coefficients(nu, 2);
    CHECK_NEAR(c[0], 1.0 / std::sqrt(1.0 + nu), 1e-15);
    CHECK_NEAR(c[1], -1.0 / ((1.0 + nu) * (1.0 + nu)), 1e-15);
  }
  // resonant: F(tau) = W_0(i tau^{1/2} / 2)
  for (double tau : {1e-4, 1e-2, 0.1}) {
    cplx u = I * std::sqrt(tau) / 2.0;
    CHECK_NEAR(generalized_series(tau, 0.0, 40), lambert_w(0, u), 1e-12);
  }
  // detuned: solves tau/4 + F^2 (nu + e^{2F}) = 0
  for (double tau : {1e-4, 1e-2, 0.1}) {
    cplx F = generalized_series(tau, 0.2, 40);
    CHECK(std::abs(tau / 4.0 + F * F * (0.2 + std::exp(2.0 * F))) < 1e-12);
  }
  CHECK_THROWS_AS(generalized_series(50.0, 0.0, 40), DomainError);
}

TEST_CASE("branch points") {
  CHECK_NEAR(critical_detuning(), 0.024893534183931971, 1e-17);

  auto b0 = branch_point_w0(0.0);
  CHECK_NEAR(b0.w0, cplx(-1.0), 1e-15);
  for (double nu = 0.0; nu <= 0.02; nu += 0.0025) {
    auto b = branch_point_w0(nu);
    CHECK(b.residual < 1e-12);
    CHECK_FALSE(b.beyond_critical);
  }
  auto bc = branch_point_w0(0.03);
  CHECK(bc.beyond_critical);

  auto p1 = branch_points_generalized(1.0, 0, 0);
  REQUIRE(p1.size() == 1);
  CHECK_NEAR(p1[0], I * pi / 2.0, 1e-15);
  auto p2 = branch_points_generalized(0.2, 0, 0);
  CHECK_NEAR(p2[0], cplx(0.5 * std::log(0.2), pi / 2.0), 1e-15);
  CHECK_NEAR(p2[0].real(), -0.8047, 1e-4);
  auto p3 = branch_points_generalized(std::exp(2.0), -1, -1);
  CHECK_NEAR(p3[0], cplx(1.0, -pi / 2.0), 1e-15);
  CHECK_THROWS_AS(branch_points_generalized(0.0, 0, 1), DomainError);
}

TEST_CASE("branch labels") {
  for (int n = -4; n <= 4; ++n) {
    auto b = BranchIndex::for_revival(n);
    CHECK(b.revival_index() == n);
    if (n != 0) CHECK(b.mirrored().revival_index() == -n);
  }
}

}  // TEST_SUITE
