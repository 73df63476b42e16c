// Finite-grid maximal operators on S^N.
//
// Both suprema (over cap radii for the Hardy-Littlewood function, over
// truncation degrees for the Riesz maximal operator) are maxima over
// configurable grids; stability under grid refinement is what the
// experiments check.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sphsum/quadrature.hpp"
#include "sphsum/zonal_function.hpp"

namespace sphsum {

struct MaximalConfig {
  std::vector<Degree> degree_grid;  // strictly increasing, >= 1
  std::vector<double> radii_grid;   // strictly increasing in (0, pi]
  std::vector<double> eval_grid;    // strictly increasing in [0, pi]
  OffcenterNodes cap_nodes{16, 16};

  /// Throws std::invalid_argument if a grid is empty, unsorted or out of range.
  void validate() const;
};

/// 1, 2, 4, ..., with n_max appended when it is not a power of two.
std::vector<Degree> dyadic_degrees(Degree n_max);

/// `count` log-spaced radii from r_min to pi.
std::vector<double> log_radii(std::size_t count, double r_min);

/// Gauss-Legendre nodes mapped to (0, pi); symmetric under gamma -> pi - gamma.
std::vector<double> gauss_angles(std::size_t count);

/// Grid with the midpoint of every consecutive pair inserted (rounded for
/// degrees, geometric for radii). The input grid is a subset of the result.
std::vector<Degree> refine_degrees(const std::vector<Degree>& grid);
std::vector<double> refine_radii(const std::vector<double>& grid);

/// Defaults: dyadic degrees to n_max, 64 log radii from pi/512, 64 Gauss angles.
MaximalConfig default_maximal_config(Degree n_max);

struct MaximalProfile {
  std::vector<double> angles;
  std::vector<double> values;
  std::vector<std::size_t> argmax;  // index into the grid that attained the max
};

/// g*(x) = max over radii of the average of |g| on B(x, r).
MaximalProfile hl_maximal(const Profile& g, const MaximalConfig& cfg, const SphereContext& ctx);

/// Averages of |g_m| over the caps B(x, r) for a batch of zonal functions,
/// every evaluation angle x and every radius r. Each cap is the union of the
/// annuli between consecutive radii, so the value at a radius does not
/// depend on which other radii are present, provided they are a superset
/// refinement of the same grid. Indexing: at(member, angle, radius).
class CapAverageTable {
 public:
  CapAverageTable(std::span<const ZonalFunction> gs, std::vector<double> radii,
                  std::vector<double> angles, OffcenterNodes nodes);

  const std::vector<double>& radii() const { return radii_; }
  const std::vector<double>& angles() const { return angles_; }
  std::size_t members() const { return members_; }
  double at(std::size_t member, std::size_t angle, std::size_t radius) const {
    return values_[(member * angles_.size() + angle) * radii_.size() + radius];
  }

  /// g_m^* on the table's angles, maximizing over `radii_subset` only; every
  /// radius of the subset must occur in the table (std::invalid_argument).
  MaximalProfile maximal(std::size_t member, const std::vector<double>& radii_subset) const;

 private:
  std::vector<double> radii_;
  std::vector<double> angles_;
  std::size_t members_;
  std::vector<double> values_;
};

/// E_*^alpha f(x) = max over the degree grid of |E_n^alpha f(x)|.
MaximalProfile maximal_riesz(const ZonalFunction& f, double alpha, const MaximalConfig& cfg);

struct TnSeries {
  std::vector<double> exact;       // T_1..T_n
  std::vector<double> comparison;  // S_1..S_n, S_n = sum k^{(N-1)/2 - alpha - tau - 1}
};

/// Partial sums of
///   T_n = sum_{k=1}^n (lambda_k^{-tau/2} - lambda_{k+1}^{-tau/2}) (1 + k^{(N-1)/2 - alpha})
/// and of the comparison series. tau = 0 makes every T_n vanish.
TnSeries tn_series(int dim_n, double alpha, double tau, Degree terms);

/// Integrals of Theta^alpha(x, y, n) g(y) over gamma(x,y) in
/// [0, 1/n), [1/n, pi/2], (pi/2, pi - 1/n], (pi - 1/n, pi].
struct FourPart {
  double near = 0.0;
  double inner = 0.0;
  double outer = 0.0;
  double antipodal = 0.0;

  double sum() const { return near + inner + outer + antipodal; }
};

/// Requires n >= 2; x sits at polar angle x_angle.
FourPart four_part_split(const Profile& g, double x_angle, Degree n, double alpha,
                         const SphereContext& ctx, OffcenterNodes nodes);

/// int_{S^N} Theta^alpha(x, y, n) g(y) dsigma(y) over the whole sphere.
double riesz_mean_by_quadrature(const Profile& g, double x_angle, Degree n, double alpha,
                                const SphereContext& ctx, OffcenterNodes nodes);

}  // namespace sphsum
