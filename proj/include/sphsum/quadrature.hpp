// One-dimensional quadrature for zonal integrals over S^N.
//
// Every integral of a zonal function reduces to
//   int_{S^N} F dsigma = omega_{N-1} int_0^pi F(gamma) sin^{N-1}(gamma) dgamma
//                      = omega_{N-1} int_{-1}^{1} F(arccos t) (1-t^2)^{(N-2)/2} dt.
// Smooth integrands go through the t form with a Gauss rule; piecewise
// smooth ones (cap indicators, domain splits) are integrated piece by piece
// in the angle variable so every jump sits on a panel edge.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sphsum/special_functions.hpp"

namespace sphsum {

/// Gauss rule on [-1,1] for the weight (1-t^2)^{lambda-1/2}. lambda = 1/2 is
/// Gauss-Legendre; lambda = 0 is Gauss-Chebyshev of the first kind.
struct QuadratureRule {
  std::vector<double> nodes;    // ascending, interior to (-1,1)
  std::vector<double> weights;  // positive
  double lambda = 0.5;

  std::size_t size() const { return nodes.size(); }
  bool is_legendre() const { return lambda == 0.5; }
};

/// Newton iteration on P_M; throws std::runtime_error if a node fails to
/// converge within 100 steps. Requires 1 <= m <= 100000.
QuadratureRule gauss_legendre(int m);

/// Gauss rule for (1-t^2)^{lambda-1/2}, lambda >= 0.
QuadratureRule gauss_gegenbauer(int m, double lambda);

/// Rule whose weight matches the S^N measure in t = cos(gamma), so
/// zonal_integral is exact for polynomial profiles of degree <= 2m-1.
QuadratureRule sphere_rule(const SphereContext& ctx, int m);

/// Process-wide cache of Legendre rules, keyed by node count.
const QuadratureRule& cached_legendre(int m);

/// A zonal function given by its polar-angle profile F(gamma), gamma in
/// [0, pi], together with the angles where it jumps.
struct Profile {
  std::function<double(double)> value;
  std::vector<double> breakpoints;

  double operator()(double gamma) const { return value(gamma); }
  bool smooth() const { return breakpoints.empty(); }
};

/// Polar angles and weights with int_{S^N} F dsigma = sum_i weights_i F(angles_i).
struct SphereNodes {
  std::vector<double> angles;
  std::vector<double> weights;

  std::size_t size() const { return angles.size(); }
  double integrate(const std::function<double(double)>& f) const;
};

/// Without breakpoints: the nodes of `rule` in t = cos(gamma) with the weight
/// mismatch against the S^N measure folded in. With breakpoints: a Legendre
/// rule of the same size on every panel between consecutive jumps.
SphereNodes sphere_nodes(const SphereContext& ctx, const QuadratureRule& rule,
                         std::span<const double> breakpoints = {});

/// int_{S^N} F dsigma. Smooth profiles use `rule` in t = cos(gamma) with the
/// weight mismatch (if any) applied explicitly; profiles with breakpoints are
/// split there and integrated panelwise with a Legendre rule of the same size.
double zonal_integral(const Profile& f, const SphereContext& ctx, const QuadratureRule& rule);
double zonal_integral(const std::function<double(double)>& f, const SphereContext& ctx,
                      const QuadratureRule& rule);

/// omega_{N-1} int_a^b F(gamma) sin^{N-1}(gamma) dgamma with a Legendre rule
/// mapped onto [a, b].
double angle_integral(const std::function<double(double)>& f, const SphereContext& ctx,
                      double a, double b, const QuadratureRule& legendre);

/// mes B(x, r) = omega_{N-1} int_0^r sin^{N-1}.
double cap_measure(const SphereContext& ctx, double r);

/// Resolution of the two-dimensional off-centre reduction.
struct OffcenterNodes {
  int radial = 32;     // Legendre nodes per radial panel
  int azimuthal = 32;  // Legendre nodes per azimuthal panel
};

/// int over { y : rho_lo <= gamma(x,y) <= rho_hi } of
///   kernel(gamma(x,y)) * F(gamma(e,y)) dsigma(y),
/// where e is the pole and x sits at polar angle x_angle. Polar coordinates
/// about x reduce this to a (rho, phi) product rule; the radial and azimuthal
/// ranges are split wherever the circle gamma(x,y) = rho crosses a jump of F.
double offcenter_integral(const std::function<double(double)>& kernel, const Profile& f,
                          double x_angle, const SphereContext& ctx, double rho_lo,
                          double rho_hi, OffcenterNodes nodes);

/// Nodes of the off-centre product rule for a smooth integrand over the
/// annulus rho_lo <= gamma(x,y) <= rho_hi: cos(gamma(e,y)) at every node and
/// its weight, so the integral of F is sum_i weights_i F(acos(cos_gamma_i)).
struct OffcenterPoints {
  std::vector<double> cos_gamma;
  std::vector<double> weights;
};

OffcenterPoints offcenter_points(double x_angle, const SphereContext& ctx, double rho_lo,
                                 double rho_hi, OffcenterNodes nodes);

/// Average of F over the cap B(x, r), x at polar angle x_angle. Throws
/// std::invalid_argument unless 0 < r <= pi.
double cap_average(const Profile& f, double x_angle, double r, const SphereContext& ctx,
                   OffcenterNodes nodes);

}  // namespace sphsum
