#include "sphsum/test_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphsum {

SeededUniform::SeededUniform(std::uint64_t seed) : engine_(seed) {}

double SeededUniform::next() {
  const std::uint64_t x = engine_();
  return 2.0 * static_cast<double>(x >> 11) * 0x1.0p-53 - 1.0;
}

ZonalFunction bandlimited_random(const SphereContext& ctx, Degree bandwidth, std::uint64_t seed) {
  if (bandwidth < 0) throw std::invalid_argument("bandlimited_random: negative bandwidth");
  SeededUniform rng(seed);
  const double omega = ctx.surface_area();
  std::vector<double> c(static_cast<std::size_t>(bandwidth) + 1);
  for (Degree k = 0; k <= bandwidth; ++k) {
    c[static_cast<std::size_t>(k)] =
        rng.next() * std::sqrt(omega / static_cast<double>(ctx.harmonic_dimension(k)));
  }
  return ZonalFunction(ctx, std::move(c));
}

ZonalFunction heat_function(const SphereContext& ctx, double t, Degree bandwidth) {
  if (!(t > 0.0)) throw std::invalid_argument("heat_function: t must be > 0");
  std::vector<double> c(static_cast<std::size_t>(bandwidth) + 1);
  for (Degree k = 0; k <= bandwidth; ++k) {
    c[static_cast<std::size_t>(k)] = std::exp(-t * ctx.eigenvalue(k));
  }
  return ZonalFunction(ctx, std::move(c));
}

ZonalFunction regularity_function(const SphereContext& ctx, double beta, Degree bandwidth) {
  std::vector<double> c(static_cast<std::size_t>(bandwidth) + 1);
  for (Degree k = 0; k <= bandwidth; ++k) {
    c[static_cast<std::size_t>(k)] = std::pow(ctx.shifted_eigenvalue(k), -beta);
  }
  return ZonalFunction(ctx, std::move(c));
}

Profile cap_indicator(double r0) {
  if (!(r0 > 0.0 && r0 < std::numbers::pi)) {
    throw std::invalid_argument("cap_indicator: radius must lie in (0, pi)");
  }
  return Profile{[r0](double gamma) { return gamma <= r0 ? 1.0 : 0.0; }, {r0}};
}

ZonalFunction cap_coefficients(const SphereContext& ctx, double r0, Degree bandwidth, int nodes) {
  return analyze(cap_indicator(r0), ctx, bandwidth, cached_legendre(nodes));
}

}  // namespace sphsum
