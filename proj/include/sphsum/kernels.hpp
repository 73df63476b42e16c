// Summation kernels on S^N as functions of cos(gamma), gamma the geodesic
// distance between the two arguments.
//
//   Z_k(t)            = d_k / omega_N * C_k^{(N-1)/2}(t) / C_k^{(N-1)/2}(1)
//   spectral   Theta  = sum_{k<=n} Z_k
//   Riesz      Theta^a = sum_{k<=n} (1 - lambda_k/lambda_n)^a Z_k
//   Cesaro     Phi^a   = sum_{k<=n} A_{n-k}^a / A_n^a Z_k
//   Abel-Riesz Theta_tau^a = sum_{1<=k<=n} lambda_k^{-tau} (1 - lambda_k/lambda_n)^a Z_k
//
// On the circle (N = 1) the Gegenbauer family degenerates and Z_k is
// cos(k gamma) / pi for k >= 1, 1 / (2 pi) for k = 0.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sphsum/special_functions.hpp"
#include "sphsum/summation.hpp"

namespace sphsum {

/// Zonal harmonics Z_0..Z_K with cached normalizations.
class ZonalBasis {
 public:
  ZonalBasis(const SphereContext& ctx, Degree max_k);

  const SphereContext& context() const { return ctx_; }
  Degree max_degree() const { return max_k_; }

  /// Writes Z_0(t)..Z_K(t) into out (size K+1).
  void evaluate(double cos_gamma, std::span<double> out) const;
  std::vector<double> evaluate(double cos_gamma) const;

  /// sum_k weights[k] Z_k(t) over k < weights.size() <= K+1.
  double weighted_sum(std::span<const double> weights, double cos_gamma) const;

 private:
  SphereContext ctx_;
  Degree max_k_;
  std::vector<double> scale_;  // Z_k = scale_k * C_k(t)  (T_k(t) when N = 1)
};

double zonal_harmonic(const SphereContext& ctx, Degree k, double cos_gamma);

struct AbelRiesz {
  double alpha = 0.0;
  double tau = 1.0;
};

using KernelMethod = std::variant<Partial, Riesz, Cesaro, AbelRiesz>;

struct KernelSpec {
  SphereContext ctx;
  KernelMethod method;
  Degree degree;

  /// Throws std::invalid_argument when the spec is outside its domain.
  void validate() const;
};

std::string describe(const KernelMethod& method);

double spectral_kernel(const SphereContext& ctx, Degree n, double cos_gamma);
double riesz_kernel(const SphereContext& ctx, double alpha, Degree n, double cos_gamma);
double cesaro_kernel(const SphereContext& ctx, double alpha, Degree n, double cos_gamma);

/// Direct sum over k = 1..n.
double abel_riesz_kernel(const SphereContext& ctx, double alpha, double tau, Degree n,
                         double cos_gamma);

/// Summation by parts of the direct sum:
///   sum_{k=1}^{n-1} (lambda_k^{-tau} - lambda_{k+1}^{-tau}) S_k + lambda_n^{-tau} S_n,
/// where S_k = sum_{j=1}^{k} (1 - lambda_j/lambda_n)^alpha Z_j are the
/// order-n Riesz-weighted partial sums over degrees 1..k.
double abel_riesz_kernel_rearranged(const SphereContext& ctx, double alpha, double tau,
                                    Degree n, double cos_gamma);

/// Dispatches on spec.method.
double kernel_value(const KernelSpec& spec, double cos_gamma);

/// Degree weights of the kernel: sum_k weights[k] Z_k equals kernel_value.
std::vector<double> kernel_weights(const KernelSpec& spec);

// Envelopes for |Theta^alpha(n, gamma)|.
enum class BoundRegime {
  Interior = 1,      // |pi/2 - gamma| < n/(n+1) * pi/2
  Uniform = 2,       // all gamma in [0, pi]: C n^N
  AwayFromPole = 3,  // gamma in [gamma0, pi]: C n^{N - alpha}
};

bool regime_contains(BoundRegime regime, Degree n, double gamma, double gamma0);

/// Most specific regime containing gamma; points on a regime edge fall back
/// to Uniform.
BoundRegime select_regime(Degree n, double gamma, double gamma0);

struct EnvelopeParams {
  double alpha = 0.0;
  double constant = 1.0;
  double gamma0 = 0.5;
};

/// Envelope value; throws std::domain_error if gamma lies outside the
/// regime's validity set.
double lemma_sp_bound(const SphereContext& ctx, const EnvelopeParams& params, Degree n,
                      double gamma, BoundRegime regime);

struct KernelGrid {
  KernelSpec spec;
  std::vector<double> angles;
  std::vector<double> values;
  std::optional<std::vector<double>> bounds;
  std::optional<std::vector<int>> regimes;
};

/// Throws std::invalid_argument unless the angles are strictly increasing in
/// [0, pi]; throws std::runtime_error on a non-finite value.
KernelGrid evaluate_kernel_grid(const KernelSpec& spec, std::vector<double> angles);

/// Fills bounds/regimes using select_regime at every grid point.
void attach_envelope(KernelGrid& grid, const EnvelopeParams& params);

/// n equispaced angles on [0, pi], endpoints included (n >= 2).
std::vector<double> uniform_angles(std::size_t count);

}  // namespace sphsum
