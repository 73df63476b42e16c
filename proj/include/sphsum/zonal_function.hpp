// Zonal functions on S^N in coefficient space.
//
// A ZonalFunction is f(y) = sum_{k=0}^{K} c_k Z_k(e, y) for the north pole e,
// so its degree-k component is Y_k(f, y) = c_k Z_k(e, y) and
// Y_k(f, e) = c_k d_k / omega_N. Every summation method and fractional power
// of A = Laplace-Beltrami + 1 is a diagonal multiplier on (c_k).

#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "sphsum/kernels.hpp"
#include "sphsum/quadrature.hpp"
#include "sphsum/special_functions.hpp"
#include "sphsum/summation.hpp"

namespace sphsum {

/// Thrown when a quadrature rule cannot integrate the requested degree exactly.
class QuadratureUnderresolved : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZonalFunction {
 public:
  /// Throws std::invalid_argument on non-finite coefficients or a bandwidth
  /// beyond ctx.max_degree(). An empty coefficient list is the zero function.
  ZonalFunction(const SphereContext& ctx, std::vector<double> coeffs);

  const SphereContext& context() const { return ctx_; }
  std::span<const double> coeffs() const { return coeffs_; }
  /// Largest stored degree K, or -1 for the empty function.
  Degree bandwidth() const { return static_cast<Degree>(coeffs_.size()) - 1; }

  /// f at polar angle gamma.
  double operator()(double gamma) const;

  /// Profile view; copies the coefficients so the profile can outlive *this.
  Profile profile() const;

  /// sum_k c_k^2 d_k / omega_N, the squared L_2 norm by Parseval.
  double l2_norm_squared() const;

  bool operator==(const ZonalFunction& other) const;

 private:
  SphereContext ctx_;
  std::vector<double> coeffs_;
  std::shared_ptr<const ZonalBasis> basis_;
};

/// Values of f at every angle of the grid.
std::vector<double> synthesize(const ZonalFunction& f, std::span<const double> angles);

/// Y_k(f, e) = int_{S^N} F(y) Z_k(e, y) dsigma(y). When profile_degree >= 0 the
/// profile is treated as a polynomial of that degree in cos(gamma) and
/// QuadratureUnderresolved is thrown if k + profile_degree > 2M - 1.
double project(const Profile& f, const SphereContext& ctx, Degree k, const QuadratureRule& rule,
               Degree profile_degree = -1);

/// Coefficients c_0..c_K of a profile: c_k = omega_N / d_k * Y_k(f, e).
ZonalFunction analyze(const Profile& f, const SphereContext& ctx, Degree max_k,
                      const QuadratureRule& rule, Degree profile_degree = -1);

/// g_k = m_k c_k for k <= min(n, K), truncated above.
ZonalFunction apply_summation(const ZonalFunction& f, const SummationMethod& method, Degree n);

/// g_k = mu_k^s c_k with mu_k = lambda_k + 1.
ZonalFunction fractional_power(const ZonalFunction& f, double s);

enum class Spectrum {
  Eigenvalue,  // lambda_k: constants are annihilated, a seminorm
  Shifted,     // mu_k = lambda_k + 1
};

enum class NormExponent {
  Full,  // multiplier spectrum_k^tau
  Half,  // multiplier spectrum_k^{tau/2}
};

struct LiouvilleOptions {
  Spectrum spectrum = Spectrum::Shifted;
  NormExponent exponent = NormExponent::Full;
  std::size_t sup_grid = 4096;
};

/// p in {1, 2} integrates |f|^p with `rule`; p = infinity (pass
/// std::numeric_limits<double>::infinity()) is the maximum over
/// options.sup_grid equispaced angles. Throws std::invalid_argument otherwise.
double lp_norm(const ZonalFunction& f, double p, const QuadratureRule& rule,
               std::size_t sup_grid = 4096);

/// Multiplier applied by the Liouville norm at degree k.
double liouville_multiplier(const SphereContext& ctx, Degree k, double tau,
                            const LiouvilleOptions& options);

/// || sum_k s_k^tau Y_k(f, .) ||_{L_p}.
double liouville_norm(const ZonalFunction& f, double tau, double p, const QuadratureRule& rule,
                      const LiouvilleOptions& options = {});

}  // namespace sphsum
