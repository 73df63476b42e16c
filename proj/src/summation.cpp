#include "sphsum/summation.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace sphsum {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_order(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument(fmt::format("summation order must be finite and >= 0, got {}", alpha));
  }
}

}  // namespace

std::string describe(const SummationMethod& method) {
  return std::visit(Overloaded{[](Partial) { return std::string("partial"); },
                               [](Riesz r) { return fmt::format("riesz({:g})", r.alpha); },
                               [](Cesaro c) { return fmt::format("cesaro({:g})", c.alpha); }},
                    method);
}

void validate(const SummationMethod& method) {
  std::visit(Overloaded{[](Partial) {}, [](Riesz r) { check_order(r.alpha); },
                        [](Cesaro c) { check_order(c.alpha); }},
             method);
}

double riesz_weight(const SphereContext& ctx, double alpha, Degree k, Degree n) {
  if (n < 1) throw std::invalid_argument("riesz_weight: n must be >= 1");
  if (k < 0 || k > n) return 0.0;
  // 1 - lambda_k / lambda_n = (lambda_n - lambda_k) / lambda_n, both exact.
  const double base = static_cast<double>(ctx.eigenvalue_exact(n) - ctx.eigenvalue_exact(k)) /
                      static_cast<double>(ctx.eigenvalue_exact(n));
  return std::pow(base, alpha);
}

MultiplierFamily::MultiplierFamily(const SphereContext& ctx, const SummationMethod& method,
                                   Degree n)
    : method_(method), n_(n) {
  validate(method);
  if (n < 0) throw std::invalid_argument("MultiplierFamily: degree must be >= 0");
  const auto size = static_cast<std::size_t>(n) + 1;
  values_.resize(size);
  std::visit(Overloaded{
                 [&](Partial) { values_.assign(size, 1.0); },
                 [&](Riesz r) {
                   if (n == 0) {
                     throw std::invalid_argument("Riesz multipliers need n >= 1 (lambda_0 = 0)");
                   }
                   for (Degree k = 0; k <= n; ++k) {
                     values_[static_cast<std::size_t>(k)] = riesz_weight(ctx, r.alpha, k, n);
                   }
                 },
                 [&](Cesaro c) {
                   const auto a = cesaro_sequence(n, c.alpha);
                   for (Degree k = 0; k <= n; ++k) {
                     values_[static_cast<std::size_t>(k)] =
                         a[static_cast<std::size_t>(n - k)] / a[static_cast<std::size_t>(n)];
                   }
                 },
             },
             method);
}

}  // namespace sphsum
