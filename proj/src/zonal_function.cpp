#include "sphsum/zonal_function.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

namespace sphsum {

ZonalFunction::ZonalFunction(const SphereContext& ctx, std::vector<double> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
  if (static_cast<Degree>(coeffs_.size()) > ctx.max_degree() + 1) {
    throw std::invalid_argument(fmt::format("ZonalFunction: bandwidth {} exceeds max_degree {}",
                                            coeffs_.size() - 1, ctx.max_degree()));
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!std::isfinite(coeffs_[k])) {
      throw std::invalid_argument(fmt::format("ZonalFunction: coefficient {} is not finite", k));
    }
  }
  if (!coeffs_.empty()) basis_ = std::make_shared<const ZonalBasis>(ctx_, bandwidth());
}

double ZonalFunction::operator()(double gamma) const {
  if (coeffs_.empty()) return 0.0;
  return basis_->weighted_sum(coeffs_, std::cos(gamma));
}

Profile ZonalFunction::profile() const {
  return Profile{[f = *this](double gamma) { return f(gamma); }, {}};
}

double ZonalFunction::l2_norm_squared() const {
  const double omega = ctx_.surface_area();
  double sum = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    sum += coeffs_[k] * coeffs_[k] *
           static_cast<double>(ctx_.harmonic_dimension(static_cast<Degree>(k))) / omega;
  }
  return sum;
}

bool ZonalFunction::operator==(const ZonalFunction& other) const {
  return ctx_.dim_n() == other.ctx_.dim_n() && coeffs_ == other.coeffs_;
}

std::vector<double> synthesize(const ZonalFunction& f, std::span<const double> angles) {
  std::vector<double> out;
  out.reserve(angles.size());
  for (double g : angles) {
    if (!(g >= 0.0 && g <= std::numbers::pi)) {
      throw std::invalid_argument(fmt::format("synthesize: angle {} outside [0, pi]", g));
    }
    out.push_back(f(g));
  }
  return out;
}

namespace {

void check_resolution(const QuadratureRule& rule, Degree needed) {
  const auto capacity = 2 * static_cast<Degree>(rule.size()) - 1;
  if (needed > capacity) {
    throw QuadratureUnderresolved(fmt::format(
        "quadrature with {} nodes is exact to degree {}, {} requested", rule.size(), capacity,
        needed));
  }
}

}  // namespace

double project(const Profile& f, const SphereContext& ctx, Degree k, const QuadratureRule& rule,
               Degree profile_degree) {
  if (profile_degree >= 0) check_resolution(rule, k + profile_degree);
  const ZonalBasis basis(ctx, k);
  std::vector<double> z(static_cast<std::size_t>(k) + 1);
  const auto nodes = sphere_nodes(ctx, rule, f.breakpoints);
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    basis.evaluate(std::cos(nodes.angles[i]), z);
    sum += nodes.weights[i] * f(nodes.angles[i]) * z.back();
  }
  return sum;
}

ZonalFunction analyze(const Profile& f, const SphereContext& ctx, Degree max_k,
                      const QuadratureRule& rule, Degree profile_degree) {
  if (profile_degree >= 0) check_resolution(rule, max_k + profile_degree);
  const ZonalBasis basis(ctx, max_k);
  const auto size = static_cast<std::size_t>(max_k) + 1;
  std::vector<double> z(size);
  std::vector<double> projections(size, 0.0);
  const auto nodes = sphere_nodes(ctx, rule, f.breakpoints);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    basis.evaluate(std::cos(nodes.angles[i]), z);
    const double wf = nodes.weights[i] * f(nodes.angles[i]);
    for (std::size_t k = 0; k < size; ++k) projections[k] += wf * z[k];
  }
  const double omega = ctx.surface_area();
  for (std::size_t k = 0; k < size; ++k) {
    projections[k] *= omega / static_cast<double>(ctx.harmonic_dimension(static_cast<Degree>(k)));
  }
  return ZonalFunction(ctx, std::move(projections));
}

ZonalFunction apply_summation(const ZonalFunction& f, const SummationMethod& method, Degree n) {
  const MultiplierFamily m(f.context(), method, n);
  const auto c = f.coeffs();
  const Degree top = std::min(n, f.bandwidth());
  std::vector<double> g(static_cast<std::size_t>(top + 1));
  for (Degree k = 0; k <= top; ++k) g[static_cast<std::size_t>(k)] = m[k] * c[static_cast<std::size_t>(k)];
  return ZonalFunction(f.context(), std::move(g));
}

ZonalFunction fractional_power(const ZonalFunction& f, double s) {
  const auto c = f.coeffs();
  std::vector<double> g(c.begin(), c.end());
  for (std::size_t k = 0; k < g.size(); ++k) {
    g[k] *= std::pow(f.context().shifted_eigenvalue(static_cast<Degree>(k)), s);
  }
  return ZonalFunction(f.context(), std::move(g));
}

double lp_norm(const ZonalFunction& f, double p, const QuadratureRule& rule,
               std::size_t sup_grid) {
  if (p == std::numeric_limits<double>::infinity()) {
    if (sup_grid < 2) throw std::invalid_argument("lp_norm: sup grid needs >= 2 points");
    double best = 0.0;
    for (double g : uniform_angles(sup_grid)) best = std::max(best, std::abs(f(g)));
    return best;
  }
  if (p != 1.0 && p != 2.0) {
    throw std::invalid_argument(fmt::format("lp_norm: p = {} unsupported (1, 2, inf)", p));
  }
  const auto nodes = sphere_nodes(f.context(), rule);
  const double integral = nodes.integrate([&](double g) {
    const double v = std::abs(f(g));
    return p == 1.0 ? v : v * v;
  });
  return p == 1.0 ? integral : std::sqrt(integral);
}

double liouville_multiplier(const SphereContext& ctx, Degree k, double tau,
                            const LiouvilleOptions& options) {
  const double base =
      options.spectrum == Spectrum::Shifted ? ctx.shifted_eigenvalue(k) : ctx.eigenvalue(k);
  const double exponent = options.exponent == NormExponent::Half ? 0.5 * tau : tau;
  return std::pow(base, exponent);
}

double liouville_norm(const ZonalFunction& f, double tau, double p, const QuadratureRule& rule,
                      const LiouvilleOptions& options) {
  if (!(tau >= 0.0)) throw std::invalid_argument("liouville_norm: tau must be >= 0");
  const auto c = f.coeffs();
  std::vector<double> g(c.begin(), c.end());
  for (std::size_t k = 0; k < g.size(); ++k) {
    g[k] *= liouville_multiplier(f.context(), static_cast<Degree>(k), tau, options);
  }
  return lp_norm(ZonalFunction(f.context(), std::move(g)), p, rule, options.sup_grid);
}

}  // namespace sphsum
