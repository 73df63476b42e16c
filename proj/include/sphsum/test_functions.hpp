// Zonal test functions spanning the smooth/rough range.
//
// Random ensembles use std::mt19937_64 seeded with (seed + member). Each raw
// 64-bit output x becomes u = 2 * (x >> 11) * 2^-53 - 1 in [-1, 1), so another
// implementation of MT19937-64 reproduces the same coefficients bit for bit.

#pragma once

#include <cstdint>
#include <random>

#include "sphsum/quadrature.hpp"
#include "sphsum/zonal_function.hpp"

namespace sphsum {

/// Uniform doubles in [-1, 1) from MT19937-64 as described above.
class SeededUniform {
 public:
  explicit SeededUniform(std::uint64_t seed);
  double next();

 private:
  std::mt19937_64 engine_;
};

/// c_k = u_k * sqrt(omega_N / d_k): every mode has L_2 norm |u_k|.
ZonalFunction bandlimited_random(const SphereContext& ctx, Degree bandwidth, std::uint64_t seed);

/// c_k = exp(-t lambda_k), k <= bandwidth.
ZonalFunction heat_function(const SphereContext& ctx, double t, Degree bandwidth);

/// c_k = mu_k^{-beta}, k <= bandwidth.
ZonalFunction regularity_function(const SphereContext& ctx, double beta, Degree bandwidth);

/// 1 on the polar cap gamma <= r0, 0 elsewhere; jump at r0.
Profile cap_indicator(double r0);

/// Coefficients of the cap indicator up to `bandwidth`, projected with a
/// split-domain rule of `nodes` points per panel.
ZonalFunction cap_coefficients(const SphereContext& ctx, double r0, Degree bandwidth, int nodes);

}  // namespace sphsum
