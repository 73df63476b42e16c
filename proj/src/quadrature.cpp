#include "sphsum/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sphsum {
namespace {

constexpr double kPi = std::numbers::pi;

// C_m^lambda(t) and C_{m-1}^lambda(t).
std::pair<double, double> gegenbauer_pair(int m, double lambda, double t) {
  double prev = 1.0;
  double cur = 2.0 * lambda * t;
  if (m == 1) return {cur, prev};
  for (int j = 2; j <= m; ++j) {
    const double next = (2.0 * t * (j + lambda - 1.0) * cur - (j + 2.0 * lambda - 2.0) * prev) / j;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

QuadratureRule chebyshev_rule(int m) {
  QuadratureRule rule;
  rule.lambda = 0.0;
  rule.nodes.resize(static_cast<std::size_t>(m));
  rule.weights.assign(static_cast<std::size_t>(m), kPi / m);
  for (int i = 0; i < m; ++i) {
    rule.nodes[static_cast<std::size_t>(m - 1 - i)] = std::cos((2.0 * i + 1.0) * kPi / (2.0 * m));
  }
  if (m % 2 == 1) rule.nodes[static_cast<std::size_t>(m / 2)] = 0.0;
  return rule;
}

// Total mass of (1-t^2)^{lambda-1/2} on [-1,1].
double gegenbauer_mass(double lambda) {
  return std::sqrt(kPi) * std::exp(std::lgamma(lambda + 0.5) - std::lgamma(lambda + 1.0));
}

std::vector<double> split_points(double lo, double hi, std::vector<double> cuts) {
  std::vector<double> pts{lo, hi};
  for (double c : cuts) {
    if (c > lo && c < hi) pts.push_back(c);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// omega_{N-2} int_0^pi F(gamma(phi)) sin^{N-2}(phi) dphi: the integral of F
// over the (N-1)-sphere of points at distance rho from x.
double shell_integral(const Profile& f, double x_angle, double rho, const SphereContext& ctx,
                      const QuadratureRule& legendre) {
  const double cx = std::cos(x_angle);
  const double sx = std::sin(x_angle);
  const double cr = std::cos(rho);
  const double sr = std::sin(rho);
  auto polar = [&](double cos_phi) {
    return std::acos(std::clamp(cx * cr + sx * sr * cos_phi, -1.0, 1.0));
  };
  const int n = ctx.dim_n();
  if (n == 1) return f(polar(1.0)) + f(polar(-1.0));
  const double spread = sx * sr;
  if (std::abs(spread) < 1e-300) return ctx.equator_area() * f(polar(0.0));

  std::vector<double> cuts;
  for (double b : f.breakpoints) {
    const double c = (std::cos(b) - cx * cr) / spread;
    if (c > -1.0 && c < 1.0) cuts.push_back(std::acos(c));
  }
  const auto pts = split_points(0.0, kPi, std::move(cuts));
  const double outer = sphere_measure(n - 2);
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < pts.size(); ++p) {
    const double half = 0.5 * (pts[p + 1] - pts[p]);
    const double mid = 0.5 * (pts[p + 1] + pts[p]);
    double panel = 0.0;
    for (std::size_t i = 0; i < legendre.size(); ++i) {
      const double phi = mid + half * legendre.nodes[i];
      double w = legendre.weights[i];
      if (n > 2) w *= std::pow(std::sin(phi), n - 2);
      panel += w * f(polar(std::cos(phi)));
    }
    total += half * panel;
  }
  return outer * total;
}

}  // namespace

QuadratureRule gauss_legendre(int m) { return gauss_gegenbauer(m, 0.5); }

QuadratureRule gauss_gegenbauer(int m, double lambda) {
  if (m < 1 || m > 100000) {
    throw std::invalid_argument("gauss rule: node count must be in [1, 100000], got " +
                                std::to_string(m));
  }
  if (!(lambda >= 0.0)) throw std::invalid_argument("gauss rule: lambda must be >= 0");
  if (lambda == 0.0) return chebyshev_rule(m);

  QuadratureRule rule;
  rule.lambda = lambda;
  const auto size = static_cast<std::size_t>(m);
  rule.nodes.resize(size);
  rule.weights.resize(size);
  const double a = lambda - 0.5;
  // Nodes are symmetric; solve for the positive half and mirror.
  for (int i = 1; i <= (m + 1) / 2; ++i) {
    double t = std::cos((i - 0.25 + 0.5 * a) * kPi / (m + a + 0.5));
    double deriv = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      const auto [c, c_prev] = gegenbauer_pair(m, lambda, t);
      // (1-t^2) C_m' = (m + 2 lambda - 1) C_{m-1} - m t C_m
      deriv = ((m + 2.0 * lambda - 1.0) * c_prev - m * t * c) / (1.0 - t * t);
      const double step = c / deriv;
      t -= step;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon()) {
        const auto [c2, c2_prev] = gegenbauer_pair(m, lambda, t);
        deriv = ((m + 2.0 * lambda - 1.0) * c2_prev - m * t * c2) / (1.0 - t * t);
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw std::runtime_error("gauss rule: Newton iteration did not converge for node " +
                               std::to_string(i) + " of " + std::to_string(m));
    }
    if (m % 2 == 1 && i == (m + 1) / 2) t = 0.0;
    const double w = 1.0 / ((1.0 - t * t) * deriv * deriv);
    rule.nodes[size - static_cast<std::size_t>(i)] = t;
    rule.nodes[static_cast<std::size_t>(i - 1)] = -t;
    rule.weights[size - static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(i - 1)] = w;
  }
  for (std::size_t i = 1; i < size; ++i) {
    if (!(rule.nodes[i] > rule.nodes[i - 1])) {
      throw std::runtime_error("gauss rule: Newton iteration produced coincident nodes");
    }
  }
  double sum = 0.0;
  for (double w : rule.weights) sum += w;
  const double scale = gegenbauer_mass(lambda) / sum;
  for (double& w : rule.weights) w *= scale;
  return rule;
}

QuadratureRule sphere_rule(const SphereContext& ctx, int m) {
  return gauss_gegenbauer(m, ctx.gegenbauer_index());
}

const QuadratureRule& cached_legendre(int m) {
  static std::mutex mutex;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, gauss_legendre(m)).first;
  return it->second;
}

double angle_integral(const std::function<double(double)>& f, const SphereContext& ctx, double a,
                      double b, const QuadratureRule& legendre) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const int n = ctx.dim_n();
  double sum = 0.0;
  for (std::size_t i = 0; i < legendre.size(); ++i) {
    const double g = mid + half * legendre.nodes[i];
    double w = legendre.weights[i];
    if (n > 1) w *= std::pow(std::sin(g), n - 1);
    sum += w * f(g);
  }
  return ctx.equator_area() * half * sum;
}

double SphereNodes::integrate(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) sum += weights[i] * f(angles[i]);
  return sum;
}

SphereNodes sphere_nodes(const SphereContext& ctx, const QuadratureRule& rule,
                         std::span<const double> breakpoints) {
  SphereNodes out;
  const int n = ctx.dim_n();
  const double outer = ctx.equator_area();
  if (!breakpoints.empty()) {
    const QuadratureRule& legendre =
        rule.is_legendre() ? rule : cached_legendre(static_cast<int>(rule.size()));
    const auto pts =
        split_points(0.0, kPi, std::vector<double>(breakpoints.begin(), breakpoints.end()));
    for (std::size_t p = 0; p + 1 < pts.size(); ++p) {
      const double half = 0.5 * (pts[p + 1] - pts[p]);
      const double mid = 0.5 * (pts[p + 1] + pts[p]);
      for (std::size_t i = 0; i < legendre.size(); ++i) {
        const double g = mid + half * legendre.nodes[i];
        double w = outer * half * legendre.weights[i];
        if (n > 1) w *= std::pow(std::sin(g), n - 1);
        out.angles.push_back(g);
        out.weights.push_back(w);
      }
    }
    return out;
  }
  const double mismatch = 0.5 * (n - 2) - (rule.lambda - 0.5);
  out.angles.reserve(rule.size());
  out.weights.reserve(rule.size());
  // Descending t gives ascending angles.
  for (std::size_t i = rule.size(); i-- > 0;) {
    const double t = rule.nodes[i];
    double w = outer * rule.weights[i];
    if (mismatch != 0.0) w *= std::pow(1.0 - t * t, mismatch);
    out.angles.push_back(std::acos(t));
    out.weights.push_back(w);
  }
  return out;
}

double zonal_integral(const Profile& f, const SphereContext& ctx, const QuadratureRule& rule) {
  return sphere_nodes(ctx, rule, f.breakpoints).integrate(f.value);
}

double zonal_integral(const std::function<double(double)>& f, const SphereContext& ctx,
                      const QuadratureRule& rule) {
  return zonal_integral(Profile{f, {}}, ctx, rule);
}

double cap_measure(const SphereContext& ctx, double r) {
  if (!(r >= 0.0 && r <= kPi)) throw std::invalid_argument("cap_measure: radius outside [0, pi]");
  switch (ctx.dim_n()) {
    case 1:
      return 2.0 * r;
    case 2:
      return 2.0 * kPi * (1.0 - std::cos(r));
    default:
      // sin^{N-1} is a trigonometric polynomial of low degree.
      return angle_integral([](double) { return 1.0; }, ctx, 0.0, r,
                            cached_legendre(ctx.dim_n() + 24));
  }
}

double offcenter_integral(const std::function<double(double)>& kernel, const Profile& f,
                          double x_angle, const SphereContext& ctx, double rho_lo,
                          double rho_hi, OffcenterNodes nodes) {
  if (!(0.0 <= rho_lo && rho_lo <= rho_hi && rho_hi <= kPi)) {
    throw std::invalid_argument("offcenter_integral: radial range outside [0, pi]");
  }
  const QuadratureRule& radial = cached_legendre(nodes.radial);
  const QuadratureRule& azimuthal = cached_legendre(nodes.azimuthal);

  // Shells about x cross a jump circle gamma(e,y) = b only for rho between
  // |x - b| and min(x + b, 2 pi - x - b).
  std::vector<double> cuts;
  for (double b : f.breakpoints) {
    cuts.push_back(std::abs(x_angle - b));
    cuts.push_back(std::min(x_angle + b, 2.0 * kPi - x_angle - b));
  }
  const auto pts = split_points(rho_lo, rho_hi, std::move(cuts));
  const int n = ctx.dim_n();
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < pts.size(); ++p) {
    const double half = 0.5 * (pts[p + 1] - pts[p]);
    const double mid = 0.5 * (pts[p + 1] + pts[p]);
    double panel = 0.0;
    for (std::size_t i = 0; i < radial.size(); ++i) {
      const double rho = mid + half * radial.nodes[i];
      double w = radial.weights[i];
      if (n > 1) w *= std::pow(std::sin(rho), n - 1);
      panel += w * kernel(rho) * shell_integral(f, x_angle, rho, ctx, azimuthal);
    }
    total += half * panel;
  }
  return total;
}

OffcenterPoints offcenter_points(double x_angle, const SphereContext& ctx, double rho_lo,
                                 double rho_hi, OffcenterNodes nodes) {
  if (!(0.0 <= rho_lo && rho_lo <= rho_hi && rho_hi <= kPi)) {
    throw std::invalid_argument("offcenter_points: radial range outside [0, pi]");
  }
  const QuadratureRule& radial = cached_legendre(nodes.radial);
  const QuadratureRule& azimuthal = cached_legendre(nodes.azimuthal);
  const int n = ctx.dim_n();
  const double cx = std::cos(x_angle);
  const double sx = std::sin(x_angle);
  const double half = 0.5 * (rho_hi - rho_lo);
  const double mid = 0.5 * (rho_hi + rho_lo);
  const double outer = n >= 2 ? sphere_measure(n - 2) : 1.0;

  // Azimuthal nodes on [0, pi] are shared by every shell.
  std::vector<double> cos_phi;
  std::vector<double> w_phi;
  if (n == 1) {
    cos_phi = {1.0, -1.0};
    w_phi = {1.0, 1.0};
  } else {
    for (std::size_t j = 0; j < azimuthal.size(); ++j) {
      const double phi = 0.5 * kPi * (azimuthal.nodes[j] + 1.0);
      cos_phi.push_back(std::cos(phi));
      double w = 0.5 * kPi * azimuthal.weights[j] * outer;
      if (n > 2) w *= std::pow(std::sin(phi), n - 2);
      w_phi.push_back(w);
    }
  }

  OffcenterPoints out;
  out.cos_gamma.reserve(radial.size() * cos_phi.size());
  out.weights.reserve(radial.size() * cos_phi.size());
  for (std::size_t i = 0; i < radial.size(); ++i) {
    const double rho = mid + half * radial.nodes[i];
    const double cr = std::cos(rho);
    const double sr = std::sin(rho);
    double w = half * radial.weights[i];
    if (n > 1) w *= std::pow(sr, n - 1);
    for (std::size_t j = 0; j < cos_phi.size(); ++j) {
      out.cos_gamma.push_back(std::clamp(cx * cr + sx * sr * cos_phi[j], -1.0, 1.0));
      out.weights.push_back(w * w_phi[j]);
    }
  }
  return out;
}

double cap_average(const Profile& f, double x_angle, double r, const SphereContext& ctx,
                   OffcenterNodes nodes) {
  if (!(r > 0.0 && r <= kPi)) {
    throw std::invalid_argument("cap_average: radius must lie in (0, pi]");
  }
  const double measure = cap_measure(ctx, r);
  if (x_angle == 0.0) {
    const auto pts = split_points(0.0, r, f.breakpoints);
    double total = 0.0;
    for (std::size_t p = 0; p + 1 < pts.size(); ++p) {
      total += angle_integral(f.value, ctx, pts[p], pts[p + 1], cached_legendre(nodes.radial));
    }
    return total / measure;
  }
  const auto one = [](double) { return 1.0; };
  return offcenter_integral(one, f, x_angle, ctx, 0.0, r, nodes) / measure;
}

}  // namespace sphsum
