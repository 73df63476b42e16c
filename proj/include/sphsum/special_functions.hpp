// Scalar primitives on the unit sphere S^N (the N-dimensional sphere in
// R^{N+1}): Laplace-Beltrami eigenvalues, harmonic-space dimensions, surface
// areas, Gegenbauer polynomials and Cesaro coefficients.

#pragma once

#include <cstdint>
#include <vector>

namespace sphsum {

using Degree = std::int64_t;

/// Geometric and spectral constants of S^N for degrees 0..max_degree.
class SphereContext {
 public:
  /// Throws std::invalid_argument if dim_n < 1 or max_degree < 0.
  SphereContext(int dim_n, Degree max_degree);

  int dim_n() const { return dim_n_; }
  Degree max_degree() const { return max_degree_; }

  /// Gegenbauer index (N-1)/2 of the zonal harmonics.
  double gegenbauer_index() const { return 0.5 * (dim_n_ - 1); }

  /// lambda_k = k(k+N-1), computed in integer arithmetic.
  std::int64_t eigenvalue_exact(Degree k) const;
  double eigenvalue(Degree k) const;

  /// mu_k = lambda_k + 1, the spectrum of A = Laplace-Beltrami + 1.
  double shifted_eigenvalue(Degree k) const;

  /// Dimension d_k of the degree-k spherical harmonics. Requires k <= max_degree.
  std::int64_t harmonic_dimension(Degree k) const;

  /// Total measure omega_N of S^N.
  double surface_area() const;

  /// Measure omega_{N-1} of the equatorial sphere (2 for N = 1).
  double equator_area() const;

 private:
  int dim_n_;
  Degree max_degree_;
};

/// Measure of the unit sphere S^dim; dim = 0 gives the two-point measure 2.
double sphere_measure(int dim);

/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Clamps cosines within 1e-12 of [-1,1]; throws std::domain_error otherwise.
double clamp_cosine(double t);

/// C_k^lambda(t) by the forward three-term recurrence.
double gegenbauer(Degree k, double lambda, double t);

/// C_0^lambda(t) .. C_K^lambda(t) in one recurrence sweep.
std::vector<double> gegenbauer_sequence(Degree max_k, double lambda, double t);

/// A_m^alpha = (alpha+1)...(alpha+m)/m!.
double cesaro_coefficient(Degree m, double alpha);

/// A_0^alpha .. A_M^alpha.
std::vector<double> cesaro_sequence(Degree max_m, double alpha);

}  // namespace sphsum
