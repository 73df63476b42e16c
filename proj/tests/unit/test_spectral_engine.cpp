#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "../oracles.hpp"
#include "sphsum/maximal.hpp"
#include "sphsum/test_functions.hpp"
#include "sphsum/zonal_function.hpp"

using namespace sphsum;
using oracle::pi;

TEST_CASE("projection of constants") {
  const SphereContext s2(2, 20);
  const Profile one{[](double) { return 1.0; }, {}};
  const auto rule = sphere_rule(s2, 24);
  // f = 1 = 4 pi Z_0, so Y_0(f, e) = 4 pi Z_0(1) = 1.
  CHECK(project(one, s2, 0, rule, 0) == doctest::Approx(1.0).epsilon(1e-14));
  for (Degree k = 1; k <= 20; ++k) CHECK(std::abs(project(one, s2, k, rule, 0)) < 1e-13);
  CHECK_THROWS_AS(project(one, s2, 20, sphere_rule(s2, 4), 0), QuadratureUnderresolved);
}

TEST_CASE("analysis-synthesis round trip") {
  const SphereContext s2(2, 40);
  const Profile p3{[](double g) { return oracle::legendre(3, std::cos(g)); }, {}};
  const auto f = analyze(p3, s2, 10, sphere_rule(s2, 20), 3);
  // P_3 = 4 pi / 7 Z_3
  CHECK(f.coeffs()[3] == doctest::Approx(4 * pi / 7).epsilon(1e-12));
  for (Degree k = 0; k <= 10; ++k) {
    if (k != 3) CHECK(std::abs(f.coeffs()[static_cast<std::size_t>(k)]) < 1e-12);
  }
  const auto g = bandlimited_random(s2, 16, 7);
  const auto back = analyze(g.profile(), s2, 16, sphere_rule(s2, 32), 16);
  for (double a : uniform_angles(200)) CHECK(std::abs(back(a) - g(a)) < 1e-10);
}

TEST_CASE("synthesis against an independent Legendre summation") {
  const SphereContext s2(2, 60);
  const auto f = bandlimited_random(s2, 60, 3);
  const auto c = f.coeffs();
  const auto angles = uniform_angles(333);
  const auto values = synthesize(f, angles);
  for (std::size_t i = 0; i < angles.size(); ++i) {
    double s = 0.0;
    for (int k = 0; k <= 60; ++k) s += c[static_cast<std::size_t>(k)] * oracle::zonal_s2(k, std::cos(angles[i]));
    CHECK(std::abs(values[i] - s) < 1e-11);
  }
  CHECK(synthesize(ZonalFunction(s2, {}), std::vector<double>{}).empty());
  CHECK(ZonalFunction(s2, {0.0, 0.0})(1.0) == 0.0);
  CHECK_THROWS_AS(synthesize(f, std::vector<double>{-0.1}), std::invalid_argument);
  CHECK_THROWS_AS(ZonalFunction(s2, {std::nan("")}), std::invalid_argument);
  CHECK_THROWS_AS(ZonalFunction(SphereContext(2, 1), {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("summation multipliers") {
  const SphereContext s2(2, 10);
  const ZonalFunction ones(s2, {1.0, 1.0, 1.0});
  const auto r = apply_summation(ones, Riesz{1.0}, 2);
  CHECK(r.coeffs()[0] == 1.0);
  CHECK(r.coeffs()[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(r.coeffs()[2] == 0.0);
  const auto c = apply_summation(ZonalFunction(s2, {1.0, 1.0}), Cesaro{1.0}, 1);
  CHECK(c.coeffs()[1] == doctest::Approx(0.5).epsilon(1e-15));
  const auto f = bandlimited_random(s2, 6, 11);
  CHECK(apply_summation(f, Partial{}, 6) == f);
  CHECK(apply_summation(f, Partial{}, 9) == f);
  CHECK(apply_summation(f, Partial{}, 3).bandwidth() == 3);
  CHECK_THROWS_AS(apply_summation(f, Riesz{1.0}, 0), std::invalid_argument);
  for (Degree n : {1, 5, 10}) {
    for (const SummationMethod& m : {SummationMethod{Riesz{0.3}}, SummationMethod{Riesz{3.0}},
                                     SummationMethod{Cesaro{0.3}}, SummationMethod{Cesaro{2.0}}}) {
      const MultiplierFamily fam(s2, m, n);
      for (Degree k = 0; k <= n; ++k) {
        CHECK(fam[k] >= 0.0);
        CHECK(fam[k] <= 1.0);
        if (k > 0) CHECK(fam[k] <= fam[k - 1]);
      }
    }
  }
}

TEST_CASE("kernel and multiplier forms agree") {
  for (int n_dim : {2, 3}) {
    const SphereContext ctx(n_dim, 50);
    const auto f = bandlimited_random(ctx, 8, 5);
    for (Degree n : {3, 20, 50}) {
      for (double alpha : {0.0, 1.0}) {
        const auto mean = apply_summation(f, Riesz{alpha}, n);
        for (double x : {0.0, 0.7, 2.2}) {
          const double by_kernel = riesz_mean_by_quadrature(f.profile(), x, n, alpha, ctx, OffcenterNodes{64, 48});
          CHECK(std::abs(by_kernel - mean(x)) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("fractional powers") {
  const SphereContext s2(2, 10);
  const auto f = bandlimited_random(s2, 10, 2);
  CHECK(fractional_power(f, 0.0) == f);
  const auto back = fractional_power(fractional_power(f, 1.0), -1.0);
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) CHECK(std::abs(back.coeffs()[k] - f.coeffs()[k]) < 1e-12);
  const auto mode = fractional_power(ZonalFunction(s2, {0.0, 1.0}), 1.0);
  CHECK(mode.coeffs()[1] == 3.0);
}

TEST_CASE("norms") {
  const SphereContext s2(2, 30);
  const auto rule = sphere_rule(s2, 64);
  // unit L2 degree-1 mode: c_1 = sqrt(omega / d_1)
  const ZonalFunction mode(s2, {0.0, std::sqrt(4 * pi / 3)});
  CHECK(lp_norm(mode, 2.0, rule) == doctest::Approx(1.0).epsilon(1e-13));
  const LiouvilleOptions lambda{Spectrum::Eigenvalue, NormExponent::Full, 4096};
  CHECK(liouville_norm(mode, 1.0, 2.0, rule, lambda) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(liouville_norm(mode, 1.0, 2.0, rule) == doctest::Approx(3.0).epsilon(1e-13));
  const LiouvilleOptions half{Spectrum::Shifted, NormExponent::Half, 4096};
  CHECK(liouville_norm(mode, 2.0, 2.0, rule, half) == doctest::Approx(3.0).epsilon(1e-13));
  const ZonalFunction constant(s2, {2.0});
  CHECK(liouville_norm(constant, 0.5, 2.0, rule, lambda) == 0.0);
  CHECK(liouville_norm(constant, 0.0, 1.0, rule, lambda) == doctest::Approx(2.0).epsilon(1e-13));
  // Parseval
  const auto f = bandlimited_random(s2, 30, 9);
  CHECK(std::pow(liouville_norm(f, 0.0, 2.0, rule), 2) == doctest::Approx(f.l2_norm_squared()).epsilon(1e-10));
  // sup norm on the grid and L1 by an independent Simpson rule
  const double inf = lp_norm(f, std::numeric_limits<double>::infinity(), rule);
  double grid_max = 0.0;
  for (double g : uniform_angles(4096)) grid_max = std::max(grid_max, std::abs(f(g)));
  CHECK(inf == grid_max);
  const double l1 = lp_norm(f, 1.0, sphere_rule(s2, 4000));
  const double l1_oracle = 2 * pi * oracle::simpson([&](double g) { return std::abs(f(g)) * std::sin(g); }, 0.0, pi, 200000);
  CHECK(l1 == doctest::Approx(l1_oracle).epsilon(1e-5));
  CHECK_THROWS_AS(lp_norm(f, 3.0, rule), std::invalid_argument);
}

TEST_CASE("seeded ensembles") {
  std::mt19937_64 reference(42);
  SeededUniform u(42);
  for (int i = 0; i < 100; ++i) {
    const auto x = reference();
    const double expected = 2.0 * static_cast<double>(x >> 11) * 0x1.0p-53 - 1.0;
    const double got = u.next();
    CHECK(got == expected);
    CHECK(got >= -1.0);
    CHECK(got < 1.0);
  }
  const SphereContext s2(2, 16);
  CHECK(bandlimited_random(s2, 16, 5) == bandlimited_random(s2, 16, 5));
  CHECK_FALSE(bandlimited_random(s2, 16, 5) == bandlimited_random(s2, 16, 6));
  // each mode has L2 norm |u_k|
  SeededUniform again(5);
  const auto f = bandlimited_random(s2, 16, 5);
  for (Degree k = 0; k <= 16; ++k) {
    const double u_k = again.next();
    const double c = f.coeffs()[static_cast<std::size_t>(k)];
    CHECK(c * c * s2.harmonic_dimension(k) / s2.surface_area() == doctest::Approx(u_k * u_k).epsilon(1e-13));
  }
}

TEST_CASE("heat, regularity and cap test functions") {
  const SphereContext s2(2, 64);
  const auto h = heat_function(s2, 0.05, 64);
  CHECK(h.coeffs()[3] == doctest::Approx(std::exp(-0.05 * 12)).epsilon(1e-15));
  const auto r = regularity_function(s2, 1.5, 64);
  CHECK(r.coeffs()[2] == doctest::Approx(std::pow(7.0, -1.5)).epsilon(1e-15));
  const double r0 = 0.8;
  const auto cap = cap_coefficients(s2, r0, 64, 128);
  const double c0 = std::cos(r0);
  CHECK(cap.coeffs()[0] == doctest::Approx(4 * pi * (1 - c0) / 2).epsilon(1e-13));
  for (int k = 1; k <= 64; ++k) {
    const double y = 0.5 * (oracle::legendre(k - 1, c0) - oracle::legendre(k + 1, c0));
    CHECK(cap.coeffs()[static_cast<std::size_t>(k)] == doctest::Approx(4 * pi / (2 * k + 1) * y).epsilon(1e-10).scale(1e-3));
  }
  CHECK(cap_indicator(r0)(0.5) == 1.0);
  CHECK(cap_indicator(r0)(1.0) == 0.0);
}
