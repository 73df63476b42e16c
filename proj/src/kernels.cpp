#include "sphsum/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace sphsum {
namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_degree(const SphereContext& ctx, Degree n) {
  if (n < 0 || n > ctx.max_degree()) {
    throw std::invalid_argument(
        fmt::format("kernel degree {} outside [0, {}]", n, ctx.max_degree()));
  }
}

std::vector<double> abel_weights(const SphereContext& ctx, double alpha, double tau, Degree n) {
  if (!(tau > 0.0)) throw std::invalid_argument("Abel-Riesz kernel needs tau > 0");
  if (n < 1) throw std::invalid_argument("Abel-Riesz kernel needs n >= 1");
  MultiplierFamily riesz(ctx, Riesz{alpha}, n);
  std::vector<double> w(riesz.values());
  w[0] = 0.0;
  for (Degree k = 1; k <= n; ++k) {
    w[static_cast<std::size_t>(k)] *= std::pow(ctx.eigenvalue(k), -tau);
  }
  return w;
}

}  // namespace

ZonalBasis::ZonalBasis(const SphereContext& ctx, Degree max_k) : ctx_(ctx), max_k_(max_k) {
  check_degree(ctx, max_k);
  const double omega = ctx.surface_area();
  scale_.resize(static_cast<std::size_t>(max_k) + 1);
  if (ctx.dim_n() == 1) {
    scale_[0] = 1.0 / omega;
    for (std::size_t k = 1; k < scale_.size(); ++k) scale_[k] = 2.0 / omega;
    return;
  }
  // C_k^{lambda}(1) = A_k^{2 lambda - 1}.
  const auto at_one = cesaro_sequence(max_k, 2.0 * ctx.gegenbauer_index() - 1.0);
  for (Degree k = 0; k <= max_k; ++k) {
    const auto i = static_cast<std::size_t>(k);
    scale_[i] = static_cast<double>(ctx.harmonic_dimension(k)) / (omega * at_one[i]);
  }
}

void ZonalBasis::evaluate(double cos_gamma, std::span<double> out) const {
  const double t = clamp_cosine(cos_gamma);
  if (out.size() != scale_.size()) {
    throw std::invalid_argument("ZonalBasis::evaluate: output size mismatch");
  }
  const double lambda = ctx_.gegenbauer_index();
  const bool circle = ctx_.dim_n() == 1;
  double prev = 1.0;
  double cur = circle ? t : 2.0 * lambda * t;
  out[0] = scale_[0];
  if (out.size() > 1) out[1] = scale_[1] * cur;
  for (std::size_t k = 2; k < out.size(); ++k) {
    const double kd = static_cast<double>(k);
    const double next = circle ? 2.0 * t * cur - prev
                               : (2.0 * t * (kd + lambda - 1.0) * cur -
                                  (kd + 2.0 * lambda - 2.0) * prev) / kd;
    prev = cur;
    cur = next;
    out[k] = scale_[k] * cur;
  }
}

std::vector<double> ZonalBasis::evaluate(double cos_gamma) const {
  std::vector<double> out(scale_.size());
  evaluate(cos_gamma, out);
  return out;
}

double ZonalBasis::weighted_sum(std::span<const double> weights, double cos_gamma) const {
  if (weights.size() > scale_.size()) {
    throw std::invalid_argument("ZonalBasis::weighted_sum: more weights than degrees");
  }
  if (weights.empty()) return 0.0;
  const double t = clamp_cosine(cos_gamma);
  const double lambda = ctx_.gegenbauer_index();
  const bool circle = ctx_.dim_n() == 1;
  double prev = 1.0;
  double cur = circle ? t : 2.0 * lambda * t;
  double sum = weights[0] * scale_[0];
  if (weights.size() > 1) sum += weights[1] * scale_[1] * cur;
  for (std::size_t k = 2; k < weights.size(); ++k) {
    const double kd = static_cast<double>(k);
    const double next = circle ? 2.0 * t * cur - prev
                               : (2.0 * t * (kd + lambda - 1.0) * cur -
                                  (kd + 2.0 * lambda - 2.0) * prev) / kd;
    prev = cur;
    cur = next;
    sum += weights[k] * scale_[k] * cur;
  }
  return sum;
}

double zonal_harmonic(const SphereContext& ctx, Degree k, double cos_gamma) {
  check_degree(ctx, k);
  const double t = clamp_cosine(cos_gamma);
  const double omega = ctx.surface_area();
  if (ctx.dim_n() == 1) {
    return k == 0 ? 1.0 / omega : 2.0 * std::cos(static_cast<double>(k) * std::acos(t)) / omega;
  }
  const double lambda = ctx.gegenbauer_index();
  return static_cast<double>(ctx.harmonic_dimension(k)) / omega * gegenbauer(k, lambda, t) /
         gegenbauer(k, lambda, 1.0);
}

void KernelSpec::validate() const {
  check_degree(ctx, degree);
  std::visit(Overloaded{[](Partial) {},
                        [&](Riesz r) {
                          sphsum::validate(SummationMethod{r});
                          if (degree < 1) throw std::invalid_argument("Riesz kernel needs n >= 1");
                        },
                        [](Cesaro c) { sphsum::validate(SummationMethod{c}); },
                        [&](AbelRiesz a) {
                          sphsum::validate(SummationMethod{Riesz{a.alpha}});
                          if (!(a.tau > 0.0)) {
                            throw std::invalid_argument("Abel-Riesz kernel needs tau > 0");
                          }
                          if (degree < 1) {
                            throw std::invalid_argument("Abel-Riesz kernel needs n >= 1");
                          }
                        }},
             method);
}

std::string describe(const KernelMethod& method) {
  return std::visit(
      Overloaded{[](Partial) { return std::string("partial"); },
                 [](Riesz r) { return fmt::format("riesz({:g})", r.alpha); },
                 [](Cesaro c) { return fmt::format("cesaro({:g})", c.alpha); },
                 [](AbelRiesz a) { return fmt::format("abel-riesz({:g},{:g})", a.alpha, a.tau); }},
      method);
}

std::vector<double> kernel_weights(const KernelSpec& spec) {
  spec.validate();
  return std::visit(
      Overloaded{
          [&](Partial p) { return MultiplierFamily(spec.ctx, p, spec.degree).values(); },
          [&](Riesz r) { return MultiplierFamily(spec.ctx, r, spec.degree).values(); },
          [&](Cesaro c) { return MultiplierFamily(spec.ctx, c, spec.degree).values(); },
          [&](AbelRiesz a) { return abel_weights(spec.ctx, a.alpha, a.tau, spec.degree); }},
      spec.method);
}

double kernel_value(const KernelSpec& spec, double cos_gamma) {
  const auto weights = kernel_weights(spec);
  return ZonalBasis(spec.ctx, spec.degree).weighted_sum(weights, cos_gamma);
}

double spectral_kernel(const SphereContext& ctx, Degree n, double cos_gamma) {
  return kernel_value(KernelSpec{ctx, Partial{}, n}, cos_gamma);
}

double riesz_kernel(const SphereContext& ctx, double alpha, Degree n, double cos_gamma) {
  return kernel_value(KernelSpec{ctx, Riesz{alpha}, n}, cos_gamma);
}

double cesaro_kernel(const SphereContext& ctx, double alpha, Degree n, double cos_gamma) {
  return kernel_value(KernelSpec{ctx, Cesaro{alpha}, n}, cos_gamma);
}

double abel_riesz_kernel(const SphereContext& ctx, double alpha, double tau, Degree n,
                         double cos_gamma) {
  return kernel_value(KernelSpec{ctx, AbelRiesz{alpha, tau}, n}, cos_gamma);
}

double abel_riesz_kernel_rearranged(const SphereContext& ctx, double alpha, double tau,
                                    Degree n, double cos_gamma) {
  KernelSpec{ctx, AbelRiesz{alpha, tau}, n}.validate();
  const MultiplierFamily riesz(ctx, Riesz{alpha}, n);
  const auto z = ZonalBasis(ctx, n).evaluate(cos_gamma);
  auto decay = [&](Degree k) { return std::pow(ctx.eigenvalue(k), -tau); };
  double partial = 0.0;
  double sum = 0.0;
  for (Degree k = 1; k <= n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    partial += riesz[k] * z[i];
    sum += (k < n ? decay(k) - decay(k + 1) : decay(n)) * partial;
  }
  return sum;
}

bool regime_contains(BoundRegime regime, Degree n, double gamma, double gamma0) {
  if (!(gamma >= 0.0 && gamma <= kPi)) return false;
  switch (regime) {
    case BoundRegime::Uniform:
      return true;
    case BoundRegime::Interior:
      return std::abs(0.5 * kPi - gamma) <
             static_cast<double>(n) / static_cast<double>(n + 1) * 0.5 * kPi;
    case BoundRegime::AwayFromPole:
      return gamma0 > 0.0 && gamma >= gamma0;
  }
  return false;
}

BoundRegime select_regime(Degree n, double gamma, double gamma0) {
  if (regime_contains(BoundRegime::Interior, n, gamma, gamma0)) return BoundRegime::Interior;
  if (gamma > gamma0 && regime_contains(BoundRegime::AwayFromPole, n, gamma, gamma0)) {
    return BoundRegime::AwayFromPole;
  }
  return BoundRegime::Uniform;
}

double lemma_sp_bound(const SphereContext& ctx, const EnvelopeParams& params, Degree n,
                      double gamma, BoundRegime regime) {
  if (n < 1) throw std::invalid_argument("lemma_sp_bound: n must be >= 1");
  if (!regime_contains(regime, n, gamma, params.gamma0)) {
    throw std::domain_error(fmt::format("lemma_sp_bound: gamma = {} outside regime {}", gamma,
                                        static_cast<int>(regime)));
  }
  const double dim = ctx.dim_n();
  const double nd = static_cast<double>(n);
  switch (regime) {
    case BoundRegime::Uniform:
      return params.constant * std::pow(nd, dim);
    case BoundRegime::AwayFromPole:
      return params.constant * std::pow(nd, dim - params.alpha);
    case BoundRegime::Interior: {
      const double s = std::sin(gamma);
      const double half = std::pow(std::sin(0.5 * gamma), 1.0 + params.alpha);
      const double first = std::pow(nd, 0.5 * (dim - 1)) / (std::pow(s, 0.5 * (dim - 1)) * half);
      const double second = std::pow(nd, 0.5 * (dim - 3)) / (std::pow(s, 0.5 * (dim + 1)) * half);
      const double third = 1.0 / (nd * std::pow(std::sin(0.5 * gamma), 1.0 + dim));
      return params.constant * (first + second + third);
    }
  }
  return 0.0;
}

KernelGrid evaluate_kernel_grid(const KernelSpec& spec, std::vector<double> angles) {
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!(angles[i] >= 0.0 && angles[i] <= kPi)) {
      throw std::invalid_argument(fmt::format("kernel grid angle {} outside [0, pi]", angles[i]));
    }
    if (i > 0 && !(angles[i] > angles[i - 1])) {
      throw std::invalid_argument("kernel grid angles must be strictly increasing");
    }
  }
  const auto weights = kernel_weights(spec);
  const ZonalBasis basis(spec.ctx, spec.degree);
  KernelGrid grid{spec, std::move(angles), {}, std::nullopt, std::nullopt};
  grid.values.reserve(grid.angles.size());
  for (double g : grid.angles) {
    const double v = basis.weighted_sum(weights, std::cos(g));
    if (!std::isfinite(v)) {
      throw std::runtime_error(fmt::format("non-finite kernel value at gamma = {}", g));
    }
    grid.values.push_back(v);
  }
  return grid;
}

void attach_envelope(KernelGrid& grid, const EnvelopeParams& params) {
  std::vector<double> bounds;
  std::vector<int> regimes;
  for (double g : grid.angles) {
    const auto regime = select_regime(grid.spec.degree, g, params.gamma0);
    // Degree 0 has no envelope; fall back to the constant mode.
    const Degree n = std::max<Degree>(grid.spec.degree, 1);
    bounds.push_back(lemma_sp_bound(grid.spec.ctx, params, n, g, regime));
    regimes.push_back(static_cast<int>(regime));
  }
  grid.bounds = std::move(bounds);
  grid.regimes = std::move(regimes);
}

std::vector<double> uniform_angles(std::size_t count) {
  if (count < 2) throw std::invalid_argument("uniform_angles: need at least two points");
  std::vector<double> a(count);
  for (std::size_t i = 0; i < count; ++i) {
    a[i] = kPi * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  a.back() = kPi;
  return a;
}

}  // namespace sphsum
