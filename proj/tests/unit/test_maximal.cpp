#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "../oracles.hpp"
#include "sphsum/maximal.hpp"
#include "sphsum/test_functions.hpp"

using namespace sphsum;
using oracle::pi;

TEST_CASE("grids") {
  CHECK(dyadic_degrees(16) == std::vector<Degree>{1, 2, 4, 8, 16});
  CHECK(dyadic_degrees(20) == std::vector<Degree>{1, 2, 4, 8, 16, 20});
  const auto radii = log_radii(64, pi / 512);
  CHECK(radii.size() == 64);
  CHECK(radii.front() == doctest::Approx(pi / 512));
  CHECK(radii.back() == doctest::Approx(pi));
  for (std::size_t i = 1; i < radii.size(); ++i) CHECK(radii[i] / radii[i - 1] == doctest::Approx(radii[1] / radii[0]));
  const auto angles = gauss_angles(64);
  for (std::size_t i = 0; i < angles.size(); ++i) {
    CHECK(angles[i] > 0.0);
    CHECK(angles[i] < pi);
    CHECK(angles[i] + angles[angles.size() - 1 - i] == doctest::Approx(pi).epsilon(1e-14));
  }
  const auto fine = refine_degrees({1, 2, 4, 8, 16});
  for (Degree d : {1, 2, 4, 8, 16}) CHECK(std::find(fine.begin(), fine.end(), d) != fine.end());
  CHECK(std::is_sorted(fine.begin(), fine.end()));
  CHECK(std::adjacent_find(fine.begin(), fine.end()) == fine.end());
  const auto fine_r = refine_radii(radii);
  CHECK(fine_r.size() == 2 * radii.size() - 1);
  for (std::size_t i = 0; i < radii.size(); ++i) CHECK(fine_r[2 * i] == radii[i]);
  MaximalConfig bad = default_maximal_config(8);
  bad.degree_grid = {4, 2};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = default_maximal_config(8);
  bad.radii_grid = {0.0, 1.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("Hardy-Littlewood maximal function") {
  const SphereContext s2(2, 0);
  MaximalConfig cfg = default_maximal_config(8);
  cfg.radii_grid = log_radii(12, 0.05);
  cfg.eval_grid = gauss_angles(8);
  const auto one = hl_maximal(Profile{[](double) { return 1.0; }, {}}, cfg, s2);
  for (double v : one.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  cfg.eval_grid = {0.0, pi};
  const auto cap = hl_maximal(cap_indicator(0.5), cfg, s2);
  CHECK(cap.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  // from the antipode the best cap is the whole sphere
  CHECK(cap.values[1] == doctest::Approx((1 - std::cos(0.5)) / 2).epsilon(1e-10));
  // positive homogeneity and |g|
  cfg.eval_grid = gauss_angles(6);
  const auto f = bandlimited_random(SphereContext(2, 6), 6, 4);
  const auto a = hl_maximal(f.profile(), cfg, s2);
  const Profile scaled{[&](double g) { return -3.0 * f(g); }, {}};
  const auto b = hl_maximal(scaled, cfg, s2);
  for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(b.values[i] == doctest::Approx(3.0 * a.values[i]).epsilon(1e-12));
}

TEST_CASE("batched cap averages agree with single cap averages") {
  const SphereContext s3(3, 8);
  const std::vector<ZonalFunction> gs{bandlimited_random(s3, 8, 1), heat_function(s3, 0.1, 8)};
  const std::vector<double> radii{0.1, 0.4, 1.0, pi};
  const std::vector<double> angles{0.3, 1.5, 2.9};
  const OffcenterNodes nodes{32, 32};
  const CapAverageTable table(gs, radii, angles, nodes);
  for (std::size_t m = 0; m < gs.size(); ++m) {
    const Profile abs_g{[&, m](double g) { return std::abs(gs[m](g)); }, {}};
    for (std::size_t a = 0; a < angles.size(); ++a) {
      for (std::size_t r = 0; r < radii.size(); ++r) {
        const double direct = cap_average(abs_g, angles[a], radii[r], s3, OffcenterNodes{200, 96});
        CHECK(table.at(m, a, r) == doctest::Approx(direct).epsilon(2e-3));
      }
    }
  }
  const auto sub = table.maximal(1, {0.4, pi});
  for (std::size_t a = 0; a < angles.size(); ++a) CHECK(sub.values[a] == std::max(table.at(1, a, 1), table.at(1, a, 3)));
  CHECK_THROWS_AS(table.maximal(0, {0.5}), std::invalid_argument);
}

TEST_CASE("Riesz maximal operator") {
  const SphereContext s2(2, 256);
  MaximalConfig cfg = default_maximal_config(256);
  cfg.eval_grid = gauss_angles(16);
  const ZonalFunction c(s2, {2.0});
  for (double v : maximal_riesz(c, 1.0, cfg).values) CHECK(v == doctest::Approx(2.0 / (4 * pi)).epsilon(1e-14));
  // single degree-3 mode: max_n (1 - 12/lambda_n) |Z_3| = (1 - 12/lambda_256) |Z_3|
  const ZonalFunction mode(s2, {0.0, 0.0, 0.0, 1.0});
  const auto m = maximal_riesz(mode, 1.0, cfg);
  const double w = 1.0 - 12.0 / (256.0 * 257.0);
  for (std::size_t i = 0; i < m.angles.size(); ++i) {
    CHECK(m.values[i] == doctest::Approx(w * std::abs(oracle::zonal_s2(3, std::cos(m.angles[i])))).epsilon(1e-12));
  }
  // A dyadic grid sees most of the supremum over every integer n; on the
  // cap indicator it reaches about 95% of it near the jump.
  const auto cap = cap_coefficients(s2, 0.6, 256, 320);
  const auto dyadic = maximal_riesz(cap, 1.0, cfg);
  MaximalConfig every = cfg;
  every.degree_grid.clear();
  for (Degree n = 1; n <= 256; ++n) every.degree_grid.push_back(n);
  const auto brute = maximal_riesz(cap, 1.0, every);
  for (std::size_t i = 0; i < brute.values.size(); ++i) {
    CHECK(dyadic.values[i] <= brute.values[i] + 1e-15);
    CHECK(dyadic.values[i] >= 0.9 * brute.values[i]);
  }
}

TEST_CASE("T_n series") {
  const auto zero = tn_series(2, 0.3, 0.0, 50);
  for (double v : zero.exact) CHECK(v == 0.0);
  for (int n_dim : {2, 3}) {
    const double alpha = 0.3;
    const double tau = 0.6;
    const auto s = tn_series(n_dim, alpha, tau, 500);
    REQUIRE(s.exact.size() == 500);
    double t = 0.0;
    double c = 0.0;
    for (int k = 1; k <= 500; ++k) {
      const double lk = k * (k + n_dim - 1.0);
      const double lk1 = (k + 1) * (k + n_dim + 0.0);
      t += (std::pow(lk, -tau / 2) - std::pow(lk1, -tau / 2)) * (1 + std::pow(k, 0.5 * (n_dim - 1) - alpha));
      c += std::pow(k, 0.5 * (n_dim - 1) - alpha - tau - 1);
      CHECK(s.exact[static_cast<std::size_t>(k - 1)] == doctest::Approx(t).epsilon(1e-12));
      CHECK(s.comparison[static_cast<std::size_t>(k - 1)] == doctest::Approx(c).epsilon(1e-12));
    }
  }
}

TEST_CASE("four-part split") {
  const SphereContext s2(2, 32);
  const OffcenterNodes nodes{48, 48};
  const auto f = bandlimited_random(s2, 6, 8);
  for (double x : {0.0, 1.2}) {
    const auto parts = four_part_split(f.profile(), x, 16, 1.0, s2, nodes);
    const double whole = riesz_mean_by_quadrature(f.profile(), x, 16, 1.0, s2, nodes);
    CHECK(parts.sum() == doctest::Approx(whole).epsilon(1e-10));
    const auto one = four_part_split(Profile{[](double) { return 1.0; }, {}}, x, 16, 1.0, s2, nodes);
    CHECK(one.sum() == doctest::Approx(1.0).epsilon(1e-10));
    const auto none = four_part_split(Profile{[](double) { return 0.0; }, {}}, x, 16, 1.0, s2, nodes);
    CHECK(none.near == 0.0);
    CHECK(none.inner == 0.0);
    CHECK(none.outer == 0.0);
    CHECK(none.antipodal == 0.0);
  }
  CHECK_THROWS_AS(four_part_split(f.profile(), 0.0, 1, 1.0, s2, nodes), std::invalid_argument);
}
