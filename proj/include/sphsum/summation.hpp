// Summation methods for Fourier-Laplace series, realized as multiplier
// sequences m_0..m_n applied to the degree components.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sphsum/special_functions.hpp"

namespace sphsum {

struct Partial {};

/// Weights (1 - lambda_k / lambda_n)^alpha, with 0^0 = 1.
struct Riesz {
  double alpha = 0.0;
};

/// Weights A_{n-k}^alpha / A_n^alpha.
struct Cesaro {
  double alpha = 0.0;
};

using SummationMethod = std::variant<Partial, Riesz, Cesaro>;

std::string describe(const SummationMethod& method);

/// Throws std::invalid_argument for negative or non-finite orders.
void validate(const SummationMethod& method);

class MultiplierFamily {
 public:
  /// Throws std::invalid_argument for n < 0, n = 0 with Riesz, or an invalid
  /// order.
  MultiplierFamily(const SphereContext& ctx, const SummationMethod& method, Degree n);

  const SummationMethod& method() const { return method_; }
  Degree degree() const { return n_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](Degree k) const { return values_[static_cast<std::size_t>(k)]; }

 private:
  SummationMethod method_;
  Degree n_;
  std::vector<double> values_;
};

/// Riesz weight for one degree; exact integer arithmetic inside the base.
double riesz_weight(const SphereContext& ctx, double alpha, Degree k, Degree n);

}  // namespace sphsum
