#include "sphsum/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sphsum {

SphereContext::SphereContext(int dim_n, Degree max_degree)
    : dim_n_(dim_n), max_degree_(max_degree) {
  if (dim_n < 1) {
    throw std::invalid_argument("SphereContext: dimension must be >= 1, got " +
                                std::to_string(dim_n));
  }
  if (max_degree < 0) {
    throw std::invalid_argument("SphereContext: max_degree must be >= 0");
  }
}

std::int64_t SphereContext::eigenvalue_exact(Degree k) const {
  if (k < 0) throw std::invalid_argument("eigenvalue: negative degree");
  return k * (k + dim_n_ - 1);
}

double SphereContext::eigenvalue(Degree k) const {
  return static_cast<double>(eigenvalue_exact(k));
}

double SphereContext::shifted_eigenvalue(Degree k) const {
  return static_cast<double>(eigenvalue_exact(k) + 1);
}

std::int64_t SphereContext::harmonic_dimension(Degree k) const {
  if (k < 0 || k > max_degree_) {
    throw std::out_of_range("harmonic_dimension: degree " + std::to_string(k) +
                            " outside [0, " + std::to_string(max_degree_) + "]");
  }
  if (k == 0) return 1;
  if (dim_n_ == 1) return 2;
  const auto n = static_cast<std::uint64_t>(dim_n_);
  const auto kk = static_cast<std::uint64_t>(k);
  // (2k+N-1) * binom(k+N-2, N-2) is divisible by N-1.
  const std::uint64_t b = binomial(kk + n - 2, n - 2);
  const std::uint64_t scale = 2 * kk + n - 1;
  if (b > std::numeric_limits<std::uint64_t>::max() / scale) {
    throw std::overflow_error("harmonic_dimension: overflow");
  }
  return static_cast<std::int64_t>(scale * b / (n - 1));
}

double SphereContext::surface_area() const { return sphere_measure(dim_n_); }

double SphereContext::equator_area() const { return sphere_measure(dim_n_ - 1); }

double sphere_measure(int dim) {
  if (dim < 0) throw std::invalid_argument("sphere_measure: negative dimension");
  const double half = 0.5 * (dim + 1);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n-k+i) / i stays integral at every step.
    const std::uint64_t factor = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("binomial: overflow");
    }
    result = result * factor / i;
  }
  return result;
}

double clamp_cosine(double t) {
  constexpr double slack = 1e-12;
  if (!(std::abs(t) <= 1.0 + slack)) {
    throw std::domain_error("cosine outside [-1,1]: " + std::to_string(t));
  }
  return std::clamp(t, -1.0, 1.0);
}

double gegenbauer(Degree k, double lambda, double t) {
  if (k < 0) throw std::invalid_argument("gegenbauer: negative degree");
  if (!(lambda > 0.0)) throw std::invalid_argument("gegenbauer: lambda must be > 0");
  t = clamp_cosine(t);
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = 2.0 * lambda * t;
  for (Degree j = 2; j <= k; ++j) {
    const double jd = static_cast<double>(j);
    const double next =
        (2.0 * t * (jd + lambda - 1.0) * cur - (jd + 2.0 * lambda - 2.0) * prev) / jd;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> gegenbauer_sequence(Degree max_k, double lambda, double t) {
  if (max_k < 0) throw std::invalid_argument("gegenbauer_sequence: negative degree");
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("gegenbauer_sequence: lambda must be > 0");
  }
  t = clamp_cosine(t);
  std::vector<double> c(static_cast<std::size_t>(max_k) + 1);
  c[0] = 1.0;
  if (max_k >= 1) c[1] = 2.0 * lambda * t;
  for (Degree j = 2; j <= max_k; ++j) {
    const double jd = static_cast<double>(j);
    const auto i = static_cast<std::size_t>(j);
    c[i] = (2.0 * t * (jd + lambda - 1.0) * c[i - 1] - (jd + 2.0 * lambda - 2.0) * c[i - 2]) /
           jd;
  }
  return c;
}

double cesaro_coefficient(Degree m, double alpha) {
  if (m < 0) throw std::invalid_argument("cesaro_coefficient: negative index");
  if (!(alpha >= 0.0)) throw std::invalid_argument("cesaro_coefficient: alpha must be >= 0");
  double a = 1.0;
  for (Degree j = 1; j <= m; ++j) {
    a *= (alpha + static_cast<double>(j)) / static_cast<double>(j);
  }
  return a;
}

std::vector<double> cesaro_sequence(Degree max_m, double alpha) {
  if (max_m < 0) throw std::invalid_argument("cesaro_sequence: negative index");
  if (!(alpha >= 0.0)) throw std::invalid_argument("cesaro_sequence: alpha must be >= 0");
  std::vector<double> a(static_cast<std::size_t>(max_m) + 1);
  a[0] = 1.0;
  for (Degree j = 1; j <= max_m; ++j) {
    const auto i = static_cast<std::size_t>(j);
    a[i] = a[i - 1] * (alpha + static_cast<double>(j)) / static_cast<double>(j);
  }
  return a;
}

}  // namespace sphsum
