#include "sphsum/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace sphsum {
namespace {

constexpr double kPi = std::numbers::pi;

template <class T>
void require_increasing(const std::vector<T>& grid, const char* name) {
  if (grid.empty()) throw std::invalid_argument(fmt::format("{} grid is empty", name));
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument(fmt::format("{} grid must be strictly increasing", name));
    }
  }
}

// Riesz kernel of degree n as a function of the angle from its centre.
auto riesz_kernel_of_angle(const SphereContext& ctx, Degree n, double alpha) {
  auto basis = std::make_shared<const ZonalBasis>(ctx, n);
  auto weights = MultiplierFamily(ctx, Riesz{alpha}, n).values();
  return [basis, weights = std::move(weights)](double rho) {
    return basis->weighted_sum(weights, std::cos(rho));
  };
}

}  // namespace

void MaximalConfig::validate() const {
  require_increasing(degree_grid, "degree");
  require_increasing(radii_grid, "radii");
  require_increasing(eval_grid, "evaluation");
  if (degree_grid.front() < 1) throw std::invalid_argument("degree grid must start at >= 1");
  if (!(radii_grid.front() > 0.0 && radii_grid.back() <= kPi)) {
    throw std::invalid_argument("radii must lie in (0, pi]");
  }
  if (!(eval_grid.front() >= 0.0 && eval_grid.back() <= kPi)) {
    throw std::invalid_argument("evaluation angles must lie in [0, pi]");
  }
}

std::vector<Degree> dyadic_degrees(Degree n_max) {
  if (n_max < 1) throw std::invalid_argument("dyadic_degrees: n_max must be >= 1");
  std::vector<Degree> grid;
  for (Degree n = 1; n <= n_max; n *= 2) grid.push_back(n);
  if (grid.back() != n_max) grid.push_back(n_max);
  return grid;
}

std::vector<double> log_radii(std::size_t count, double r_min) {
  if (count < 2) throw std::invalid_argument("log_radii: need at least two radii");
  if (!(r_min > 0.0 && r_min < kPi)) throw std::invalid_argument("log_radii: r_min in (0, pi)");
  std::vector<double> r(count);
  const double step = std::log(kPi / r_min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) r[i] = r_min * std::exp(step * static_cast<double>(i));
  r.back() = kPi;
  return r;
}

std::vector<double> gauss_angles(std::size_t count) {
  const auto& rule = cached_legendre(static_cast<int>(count));
  std::vector<double> a(count);
  for (std::size_t i = 0; i < count; ++i) a[i] = 0.5 * kPi * (rule.nodes[i] + 1.0);
  return a;
}

std::vector<Degree> refine_degrees(const std::vector<Degree>& grid) {
  std::vector<Degree> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) {
      const Degree mid = (grid[i - 1] + grid[i]) / 2;
      if (mid > grid[i - 1] && mid < grid[i]) out.push_back(mid);
    }
    out.push_back(grid[i]);
  }
  return out;
}

std::vector<double> refine_radii(const std::vector<double>& grid) {
  std::vector<double> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) out.push_back(std::sqrt(grid[i - 1] * grid[i]));
    out.push_back(grid[i]);
  }
  return out;
}

MaximalConfig default_maximal_config(Degree n_max) {
  return MaximalConfig{dyadic_degrees(n_max), log_radii(64, kPi / 512.0), gauss_angles(64), {}};
}

MaximalProfile hl_maximal(const Profile& g, const MaximalConfig& cfg, const SphereContext& ctx) {
  cfg.validate();
  const Profile magnitude{[&g](double gamma) { return std::abs(g(gamma)); }, g.breakpoints};
  MaximalProfile out{cfg.eval_grid, {}, {}};
  for (double x : cfg.eval_grid) {
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t j = 0; j < cfg.radii_grid.size(); ++j) {
      const double avg = cap_average(magnitude, x, cfg.radii_grid[j], ctx, cfg.cap_nodes);
      if (avg > best) {
        best = avg;
        arg = j;
      }
    }
    out.values.push_back(best);
    out.argmax.push_back(arg);
  }
  return out;
}

CapAverageTable::CapAverageTable(std::span<const ZonalFunction> gs, std::vector<double> radii,
                                 std::vector<double> angles, OffcenterNodes nodes)
    : radii_(std::move(radii)), angles_(std::move(angles)), members_(gs.size()) {
  require_increasing(radii_, "radii");
  require_increasing(angles_, "evaluation");
  if (!(radii_.front() > 0.0 && radii_.back() <= kPi)) {
    throw std::invalid_argument("radii must lie in (0, pi]");
  }
  if (gs.empty()) throw std::invalid_argument("CapAverageTable: no functions");
  const SphereContext& ctx = gs.front().context();
  Degree top = 0;
  for (const auto& g : gs) {
    if (g.context().dim_n() != ctx.dim_n()) {
      throw std::invalid_argument("CapAverageTable: functions live on different spheres");
    }
    top = std::max(top, g.bandwidth());
  }
  // Coefficients padded to a common length, member-major.
  const auto width = static_cast<std::size_t>(top) + 1;
  std::vector<double> coeffs(members_ * width, 0.0);
  for (std::size_t m = 0; m < members_; ++m) {
    const auto c = gs[m].coeffs();
    std::copy(c.begin(), c.end(), coeffs.begin() + static_cast<std::ptrdiff_t>(m * width));
  }
  const ZonalBasis basis(SphereContext(ctx.dim_n(), top), top);
  std::vector<double> measures;
  for (double r : radii_) measures.push_back(cap_measure(ctx, r));

  values_.assign(members_ * angles_.size() * radii_.size(), 0.0);
  std::vector<double> z(width);
  std::vector<double> running(members_);
  for (std::size_t a = 0; a < angles_.size(); ++a) {
    std::fill(running.begin(), running.end(), 0.0);
    double lo = 0.0;
    for (std::size_t j = 0; j < radii_.size(); ++j) {
      const auto pts = offcenter_points(angles_[a], ctx, lo, radii_[j], nodes);
      for (std::size_t i = 0; i < pts.weights.size(); ++i) {
        basis.evaluate(pts.cos_gamma[i], z);
        for (std::size_t m = 0; m < members_; ++m) {
          const double* c = coeffs.data() + m * width;
          double v = 0.0;
          for (std::size_t k = 0; k < width; ++k) v += c[k] * z[k];
          running[m] += pts.weights[i] * std::abs(v);
        }
      }
      for (std::size_t m = 0; m < members_; ++m) {
        values_[(m * angles_.size() + a) * radii_.size() + j] = running[m] / measures[j];
      }
      lo = radii_[j];
    }
  }
}

MaximalProfile CapAverageTable::maximal(std::size_t member,
                                        const std::vector<double>& radii_subset) const {
  if (member >= members_) throw std::out_of_range("CapAverageTable: member out of range");
  std::vector<std::size_t> index;
  for (double r : radii_subset) {
    const auto it = std::find(radii_.begin(), radii_.end(), r);
    if (it == radii_.end()) {
      throw std::invalid_argument(fmt::format("CapAverageTable: radius {} not tabulated", r));
    }
    index.push_back(static_cast<std::size_t>(it - radii_.begin()));
  }
  MaximalProfile out{angles_, {}, {}};
  for (std::size_t a = 0; a < angles_.size(); ++a) {
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t j = 0; j < index.size(); ++j) {
      const double v = at(member, a, index[j]);
      if (v > best) {
        best = v;
        arg = j;
      }
    }
    out.values.push_back(best);
    out.argmax.push_back(arg);
  }
  return out;
}

MaximalProfile maximal_riesz(const ZonalFunction& f, double alpha, const MaximalConfig& cfg) {
  cfg.validate();
  const SphereContext& ctx = f.context();
  if (cfg.degree_grid.back() > ctx.max_degree()) {
    throw std::invalid_argument("maximal_riesz: degree grid exceeds max_degree");
  }
  const auto c = f.coeffs();
  const Degree top = std::min(f.bandwidth(), cfg.degree_grid.back());
  // Products m_k^{(n)} c_k for every grid degree.
  std::vector<std::vector<double>> weighted;
  for (Degree n : cfg.degree_grid) {
    const MultiplierFamily m(ctx, Riesz{alpha}, n);
    std::vector<double> w(static_cast<std::size_t>(std::min(n, top) + 1));
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = m[static_cast<Degree>(k)] * c[k];
    weighted.push_back(std::move(w));
  }
  MaximalProfile out{cfg.eval_grid, {}, {}};
  if (top < 0) {
    out.values.assign(cfg.eval_grid.size(), 0.0);
    out.argmax.assign(cfg.eval_grid.size(), 0);
    return out;
  }
  const ZonalBasis basis(ctx, top);
  std::vector<double> z(static_cast<std::size_t>(top) + 1);
  for (double x : cfg.eval_grid) {
    basis.evaluate(std::cos(x), z);
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t j = 0; j < weighted.size(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < weighted[j].size(); ++k) s += weighted[j][k] * z[k];
      if (std::abs(s) > best) {
        best = std::abs(s);
        arg = j;
      }
    }
    out.values.push_back(best);
    out.argmax.push_back(arg);
  }
  return out;
}

TnSeries tn_series(int dim_n, double alpha, double tau, Degree terms) {
  if (dim_n < 1) throw std::invalid_argument("tn_series: dimension must be >= 1");
  if (!(tau >= 0.0)) throw std::invalid_argument("tn_series: tau must be >= 0");
  if (terms < 1) throw std::invalid_argument("tn_series: need at least one term");
  const SphereContext ctx(dim_n, 0);
  const double growth = 0.5 * (dim_n - 1) - alpha;
  TnSeries out;
  out.exact.reserve(static_cast<std::size_t>(terms));
  out.comparison.reserve(static_cast<std::size_t>(terms));
  double t_sum = 0.0;
  double s_sum = 0.0;
  for (Degree k = 1; k <= terms; ++k) {
    const double kd = static_cast<double>(k);
    const double lam = ctx.eigenvalue(k);
    // lambda_k^{-tau/2} - lambda_{k+1}^{-tau/2} without cancellation.
    const double log_ratio = std::log1p(static_cast<double>(2 * k + dim_n) / lam);
    const double diff = -std::pow(lam, -0.5 * tau) * std::expm1(-0.5 * tau * log_ratio);
    t_sum += diff * (1.0 + std::pow(kd, growth));
    s_sum += std::pow(kd, growth - tau - 1.0);
    out.exact.push_back(t_sum);
    out.comparison.push_back(s_sum);
  }
  return out;
}

FourPart four_part_split(const Profile& g, double x_angle, Degree n, double alpha,
                         const SphereContext& ctx, OffcenterNodes nodes) {
  if (n < 2) throw std::invalid_argument("four_part_split: n must be >= 2");
  const auto kernel = riesz_kernel_of_angle(ctx, n, alpha);
  const double h = 1.0 / static_cast<double>(n);
  FourPart parts;
  parts.near = offcenter_integral(kernel, g, x_angle, ctx, 0.0, h, nodes);
  parts.inner = offcenter_integral(kernel, g, x_angle, ctx, h, 0.5 * kPi, nodes);
  parts.outer = offcenter_integral(kernel, g, x_angle, ctx, 0.5 * kPi, kPi - h, nodes);
  parts.antipodal = offcenter_integral(kernel, g, x_angle, ctx, kPi - h, kPi, nodes);
  return parts;
}

double riesz_mean_by_quadrature(const Profile& g, double x_angle, Degree n, double alpha,
                                const SphereContext& ctx, OffcenterNodes nodes) {
  return offcenter_integral(riesz_kernel_of_angle(ctx, n, alpha), g, x_angle, ctx, 0.0, kPi,
                            nodes);
}

}  // namespace sphsum
