#include "sphsum/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "sphsum/kernels.hpp"
#include "sphsum/maximal.hpp"
#include "sphsum/test_functions.hpp"
#include "sphsum/zonal_function.hpp"

namespace sphsum {
namespace {

constexpr double kPi = std::numbers::pi;

std::string r(double v) { return format_real(v); }

void add_criterion(ExperimentReport& report, std::string id, bool pass, double measured,
                   double threshold, std::string detail) {
  report.summary.push_back(
      CriterionResult{std::move(id), pass, measured, threshold, std::move(detail)});
}

SummationMethod summation_from(const ExperimentConfig& cfg) {
  if (cfg.method == "partial") return Partial{};
  if (cfg.method == "riesz") return Riesz{cfg.alpha};
  if (cfg.method == "cesaro") return Cesaro{cfg.alpha};
  throw std::invalid_argument("method '" + cfg.method + "' is not a summation method here");
}

KernelMethod kernel_method_from(const ExperimentConfig& cfg) {
  if (cfg.method == "abel") return AbelRiesz{cfg.alpha, cfg.tau};
  return std::visit([](const auto& m) -> KernelMethod { return m; }, summation_from(cfg));
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// ---------------------------------------------------------------- kernel-bounds

struct RegimeSup {
  double ratio = 0.0;
  double gamma = std::numeric_limits<double>::quiet_NaN();
  std::size_t points = 0;
};

}  // namespace

bool ExperimentReport::all_pass() const {
  return std::all_of(summary.begin(), summary.end(), [](const auto& c) { return c.pass; });
}

void ExperimentReport::add_row(std::string parameters, std::string metric, double value) {
  rows.push_back(ReportRow{to_string(experiment), std::move(parameters), std::move(metric), value});
}

CsvTable ExperimentReport::report_table() const {
  CsvTable t({"experiment", "parameters", "metric", "value"});
  for (const auto& row : rows) t.add_row({row.experiment, row.parameters, row.metric, r(row.value)});
  return t;
}

CsvTable ExperimentReport::summary_table() const {
  CsvTable t({"criterion_id", "status", "measured", "threshold", "detail"});
  for (const auto& c : summary) {
    t.add_row({c.id, c.pass ? "pass" : "fail", r(c.measured), r(c.threshold), c.detail});
  }
  return t;
}

void write_report(const ExperimentReport& report, const ExperimentConfig& cfg,
                  const std::filesystem::path& dir) {
  write_text(dir / "report.csv", report.report_table().str());
  write_text(dir / "summary.csv", report.summary_table().str());
  for (const auto& file : report.data) write_text(dir / file.name, file.table.str());
  write_text(dir / "config.txt", serialize(cfg));
}

ExperimentReport run_kernel_bounds(const ExperimentConfig& cfg) {
  if (cfg.n_max < 64) throw std::invalid_argument("kernel-bounds: n_max must be >= 64");
  ExperimentReport report;
  report.experiment = Experiment::KernelBounds;
  const int dim = cfg.dim_n;
  const SphereContext ctx(dim, cfg.n_max);

  std::vector<double> alphas = {0.0, 0.5 * (dim - 1), static_cast<double>(dim)};
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  std::vector<Degree> degrees = {1};
  for (Degree n = 64; n <= cfg.n_max; n *= 2) degrees.push_back(n);
  if (degrees.back() != cfg.n_max) degrees.push_back(cfg.n_max);

  CsvTable sups({"dim_n", "alpha", "n", "regime", "sup_ratio", "argmax_gamma", "points"});
  double worst_interior = 0.0;
  double worst_growth = 0.0;
  bool finite = true;
  std::string worst_label;

  for (double alpha : alphas) {
    const EnvelopeParams params{alpha, cfg.envelope_constant, cfg.gamma0};
    // sup ratios for n >= 64, per regime
    std::vector<std::array<RegimeSup, 3>> per_n;
    for (Degree n : degrees) {
      const auto count = static_cast<std::size_t>(std::max<Degree>(cfg.angle_count, 16 * n));
      KernelGrid grid = evaluate_kernel_grid(KernelSpec{ctx, Riesz{alpha}, n}, uniform_angles(count));
      std::array<RegimeSup, 3> best{};
      for (std::size_t i = 0; i < grid.angles.size(); ++i) {
        const double g = grid.angles[i];
        for (int reg = 1; reg <= 3; ++reg) {
          const auto regime = static_cast<BoundRegime>(reg);
          if (!regime_contains(regime, n, g, cfg.gamma0)) continue;
          const double ratio = std::abs(grid.values[i]) / lemma_sp_bound(ctx, params, n, g, regime);
          auto& slot = best[static_cast<std::size_t>(reg - 1)];
          ++slot.points;
          if (ratio > slot.ratio) {
            slot.ratio = ratio;
            slot.gamma = g;
          }
        }
      }
      const auto params_text = fmt::format("N={};alpha={};n={}", dim, r(alpha), n);
      for (int reg = 1; reg <= 3; ++reg) {
        const auto& s = best[static_cast<std::size_t>(reg - 1)];
        if (s.points == 0) continue;  // regime empty at this n: no row
        finite = finite && std::isfinite(s.ratio);
        sups.add_row({std::to_string(dim), r(alpha), std::to_string(n), std::to_string(reg),
                      r(s.ratio), r(s.gamma), std::to_string(s.points)});
        report.add_row(params_text, fmt::format("sup_ratio_regime{}", reg), s.ratio);
      }
      if (n == degrees.back()) {
        attach_envelope(grid, params);
        report.data.push_back(
            DataFile{fmt::format("kernel_grid_alpha{}_n{}.csv", r(alpha), n), kernel_grid_table(grid)});
      }
      if (n >= 64) per_n.push_back(best);
    }

    for (int reg = 1; reg <= 3; ++reg) {
      const auto idx = static_cast<std::size_t>(reg - 1);
      double lo = std::numeric_limits<double>::infinity();
      double hi = 0.0;
      for (const auto& b : per_n) {
        lo = std::min(lo, b[idx].ratio);
        hi = std::max(hi, b[idx].ratio);
      }
      const double variation = hi / lo;
      const double growth = hi / per_n.front()[idx].ratio;
      const auto params_text = fmt::format("N={};alpha={}", dim, r(alpha));
      report.add_row(params_text, fmt::format("variation_regime{}", reg), variation);
      report.add_row(params_text, fmt::format("growth_regime{}", reg), growth);
      if (reg == 1) {
        if (!(variation <= worst_interior)) worst_label = params_text;
        worst_interior = std::max(worst_interior, variation);
      } else {
        worst_growth = std::max(worst_growth, growth);
      }
    }
  }
  report.data.push_back(DataFile{"kernel_bounds.csv", std::move(sups)});

  const bool pass = finite && worst_interior < cfg.envelope_variation &&
                    worst_growth < cfg.envelope_variation;
  add_criterion(report, "C5", pass, worst_interior, cfg.envelope_variation,
                fmt::format("regime-1 max/min over n (worst at {}); regime-2/3 max growth over "
                            "smallest n = {}",
                            worst_label, r(worst_growth)));
  return report;
}

// ---------------------------------------------------------------- converge

namespace {

void converge_heat(const ExperimentConfig& cfg, ExperimentReport& report) {
  const SphereContext ctx(cfg.dim_n, cfg.reference_degree);
  const auto method = summation_from(cfg);
  const auto reference = heat_function(ctx, cfg.heat_t, cfg.reference_degree);
  const auto angles = uniform_angles(static_cast<std::size_t>(cfg.angle_count));
  const auto exact = synthesize(reference, angles);

  CsvTable per_angle({"n", "gamma", "error"});
  std::vector<double> errors;
  const auto degrees = dyadic_degrees(cfg.n_max);
  for (Degree n : degrees) {
    const auto values = synthesize(apply_summation(reference, method, n), angles);
    double worst = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
      const double e = std::abs(values[i] - exact[i]);
      worst = std::max(worst, e);
      per_angle.add_row({std::to_string(n), r(angles[i]), r(e)});
    }
    errors.push_back(worst);
    report.add_row(fmt::format("N={};method={};t={};n={}", cfg.dim_n, describe(method),
                               r(cfg.heat_t), n),
                   "max_error", worst);
  }
  report.data.push_back(DataFile{"converge_errors.csv", std::move(per_angle)});

  bool decreasing = true;
  for (std::size_t i = 1; i < errors.size(); ++i) decreasing = decreasing && errors[i] < errors[i - 1];

  // Band-limited reproduction: partial sums of degree n >= K applied to f
  // must return f. The coefficient path is checked at every n; the
  // quadrature path (project f, then truncate) at n = K and 2K, where its
  // own roundoff stays far below the tolerance.
  const Degree band = cfg.bandwidth;
  const auto f = bandlimited_random(SphereContext(cfg.dim_n, cfg.n_max), band, cfg.seed);
  const auto f_values = synthesize(f, angles);
  double reproduction = 0.0;
  for (Degree n : {band, 2 * band, cfg.n_max}) {
    if (n < band || n > cfg.n_max) continue;
    const auto params = fmt::format("N={};K={};n={};seed={}", cfg.dim_n, band, n, cfg.seed);
    const double err =
        max_abs_diff(synthesize(apply_summation(f, Partial{}, n), angles), f_values);
    report.add_row(params, "reproduction_error", err);
    reproduction = std::max(reproduction, err);
    if (n > 2 * band) continue;
    const SphereContext proj_ctx(cfg.dim_n, n);
    const auto rule = sphere_rule(proj_ctx, static_cast<int>(n + 16));
    const auto projected = analyze(f.profile(), proj_ctx, n, rule, band);
    const double q_err =
        max_abs_diff(synthesize(apply_summation(projected, Partial{}, n), angles), f_values);
    report.add_row(params, "reproduction_error_projected", q_err);
    reproduction = std::max(reproduction, q_err);
  }

  const double final_error = errors.back();
  const bool pass = decreasing && final_error < cfg.converge_target &&
                    reproduction <= cfg.tol_reproduction;
  add_criterion(report, "C7", pass, final_error, cfg.converge_target,
                fmt::format("strictly decreasing={}; reproduction error={} (tol {})",
                            decreasing ? "yes" : "no", r(reproduction), r(cfg.tol_reproduction)));
}

void converge_cap(const ExperimentConfig& cfg, ExperimentReport& report) {
  const SphereContext ctx(cfg.dim_n, cfg.n_max);
  const double r0 = cfg.cap_radius;
  const double delta = cfg.jump_exclusion;
  const auto coeffs = cap_coefficients(ctx, r0, cfg.n_max, static_cast<int>(cfg.n_max + 64));
  const auto angles = uniform_angles(static_cast<std::size_t>(cfg.angle_count));
  const auto indicator = cap_indicator(r0);

  auto split_errors = [&](const ZonalFunction& approx) {
    double near = 0.0;
    double away = 0.0;
    for (double g : angles) {
      const double e = std::abs(approx(g) - indicator(g));
      if (std::abs(g - r0) < delta) {
        near = std::max(near, e);
      } else {
        away = std::max(away, e);
      }
    }
    return std::pair{near, away};
  };

  const std::string riesz_name = describe(SummationMethod{Riesz{cfg.alpha}});
  CsvTable table({"n", "method", "near_jump_error", "away_error"});
  double partial_floor = std::numeric_limits<double>::infinity();
  double riesz_final = 0.0;
  for (Degree n : dyadic_degrees(cfg.n_max)) {
    const auto [p_near, p_away] = split_errors(apply_summation(coeffs, Partial{}, n));
    const auto [r_near, r_away] = split_errors(apply_summation(coeffs, Riesz{cfg.alpha}, n));
    partial_floor = std::min(partial_floor, p_near);
    riesz_final = r_away;
    table.add_row({std::to_string(n), "partial", r(p_near), r(p_away)});
    table.add_row({std::to_string(n), riesz_name, r(r_near), r(r_away)});
    const auto params = fmt::format("N={};r0={};n={}", cfg.dim_n, r(r0), n);
    report.add_row(params + ";method=partial", "near_jump_error", p_near);
    report.add_row(params + ";method=partial", "away_error", p_away);
    report.add_row(params + ";method=" + riesz_name, "near_jump_error", r_near);
    report.add_row(params + ";method=" + riesz_name, "away_error", r_away);
  }
  report.data.push_back(DataFile{"converge_cap.csv", std::move(table)});

  const double excluded =
      cap_measure(ctx, std::min(kPi, r0 + delta)) - cap_measure(ctx, std::max(0.0, r0 - delta));
  report.add_row(fmt::format("N={};r0={};delta={}", cfg.dim_n, r(r0), r(delta)),
                 "exceptional_set_measure", excluded);

  const bool pass = partial_floor > cfg.gibbs_floor && riesz_final < cfg.gibbs_target;
  add_criterion(report, "C8", pass, riesz_final, cfg.gibbs_target,
                fmt::format("Riesz alpha={} error outside |gamma-r0|<{} at n={}; partial-sum "
                            "near-jump error min over n = {} (floor {}); excluded measure {}",
                            r(cfg.alpha), r(delta), cfg.n_max, r(partial_floor),
                            r(cfg.gibbs_floor), r(excluded)));
}

void converge_generic(const ExperimentConfig& cfg, ExperimentReport& report) {
  const SphereContext ctx(cfg.dim_n, cfg.reference_degree);
  const auto f = cfg.test_function == TestFunctionKind::Regularity
                     ? regularity_function(ctx, cfg.regularity_beta, cfg.reference_degree)
                     : bandlimited_random(ctx, cfg.bandwidth, cfg.seed);
  const auto method = summation_from(cfg);
  const auto angles = uniform_angles(static_cast<std::size_t>(cfg.angle_count));
  const auto exact = synthesize(f, angles);
  for (Degree n : dyadic_degrees(cfg.n_max)) {
    const double err = max_abs_diff(synthesize(apply_summation(f, method, n), angles), exact);
    report.add_row(fmt::format("N={};f={};method={};n={}", cfg.dim_n, to_string(cfg.test_function),
                               describe(method), n),
                   "max_error", err);
  }
}

}  // namespace

ExperimentReport run_converge(const ExperimentConfig& cfg) {
  ExperimentReport report;
  report.experiment = Experiment::Converge;
  switch (cfg.test_function) {
    case TestFunctionKind::Heat: converge_heat(cfg, report); break;
    case TestFunctionKind::Cap: converge_cap(cfg, report); break;
    default: converge_generic(cfg, report); break;
  }
  return report;
}

// ---------------------------------------------------------------- maximal-ineq

namespace {

struct MemberResult {
  double l1_ratio = 0.0;
  double domination = 0.0;  // max_x E_* f(x) / (g*(x) + g*(pi - x))
  std::vector<double> e_star;
  std::vector<double> g_star;
};

struct EnsembleResult {
  double max_l1_ratio = 0.0;
  double max_domination = 0.0;
  std::vector<MemberResult> members;
};

// L_1 norm of a profile sampled on the Gauss angles of gauss_angles(m).
double l1_on_gauss_angles(const SphereContext& ctx, const std::vector<double>& values) {
  const auto& rule = cached_legendre(static_cast<int>(values.size()));
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double g = 0.5 * kPi * (rule.nodes[i] + 1.0);
    sum += rule.weights[i] * std::pow(std::sin(g), ctx.dim_n() - 1) * std::abs(values[i]);
  }
  return 0.5 * kPi * ctx.equator_area() * sum;
}

struct Ensemble {
  SphereContext ctx;
  std::vector<ZonalFunction> fs;
  std::vector<double> norms;  // ||f||_{L_1^tau}
};

Ensemble make_ensemble(const ExperimentConfig& cfg, Degree max_degree, double tau,
                       Degree bandwidth) {
  Ensemble e{SphereContext(cfg.dim_n, std::max(bandwidth, max_degree)), {}, {}};
  const LiouvilleOptions options{cfg.spectrum == "mu" ? Spectrum::Shifted : Spectrum::Eigenvalue,
                                 cfg.norm_exponent == "half" ? NormExponent::Half
                                                             : NormExponent::Full,
                                 4096};
  const auto rule = sphere_rule(e.ctx, static_cast<int>(4 * bandwidth + 64));
  for (std::int64_t i = 0; i < cfg.ensemble_size; ++i) {
    e.fs.push_back(bandlimited_random(e.ctx, bandwidth, cfg.seed + static_cast<std::uint64_t>(i)));
    e.norms.push_back(liouville_norm(e.fs.back(), tau, 1.0, rule, options));
  }
  return e;
}

// Hardy-Littlewood maximal functions of g = A^{tau/2} f for every member,
// tabulated on the finest radius grid that will be queried.
CapAverageTable g_star_table(const Ensemble& e, double tau, const MaximalConfig& grids,
                             std::int64_t cap_nodes) {
  std::vector<ZonalFunction> gs;
  for (const auto& f : e.fs) gs.push_back(fractional_power(f, 0.5 * tau));
  const Degree band = e.fs.front().bandwidth();
  const OffcenterNodes nodes{static_cast<int>(cap_nodes),
                             static_cast<int>(std::max<Degree>(cap_nodes, band + 16))};
  return CapAverageTable(gs, grids.radii_grid, grids.eval_grid, nodes);
}

EnsembleResult evaluate_ensemble(const Ensemble& e, double alpha, const MaximalConfig& grids,
                                 const CapAverageTable& table) {
  EnsembleResult out;
  for (std::size_t i = 0; i < e.fs.size(); ++i) {
    MemberResult m;
    m.e_star = maximal_riesz(e.fs[i], alpha, grids).values;
    m.l1_ratio = l1_on_gauss_angles(e.ctx, m.e_star) / e.norms[i];
    m.g_star = table.maximal(i, grids.radii_grid).values;
    const std::size_t count = m.g_star.size();
    for (std::size_t j = 0; j < count; ++j) {
      const double denom = m.g_star[j] + m.g_star[count - 1 - j];  // eval grid is symmetric
      m.domination = std::max(m.domination, m.e_star[j] / denom);
    }
    out.max_l1_ratio = std::max(out.max_l1_ratio, m.l1_ratio);
    out.max_domination = std::max(out.max_domination, m.domination);
    out.members.push_back(std::move(m));
  }
  return out;
}

double relative_change(double base, double refined) { return std::abs(refined - base) / base; }

}  // namespace

ExperimentReport run_maximal_ineq(const ExperimentConfig& cfg) {
  if (cfg.tau == 0.0 && cfg.spectrum != "mu") {
    throw std::invalid_argument("maximal-ineq: tau = 0 needs spectrum=mu");
  }
  ExperimentReport report;
  report.experiment = Experiment::MaximalIneq;

  MaximalConfig base{dyadic_degrees(cfg.n_max),
                     log_radii(static_cast<std::size_t>(cfg.radii_count), kPi / 512.0),
                     gauss_angles(static_cast<std::size_t>(cfg.eval_count)),
                     OffcenterNodes{static_cast<int>(cfg.cap_nodes), static_cast<int>(cfg.cap_nodes)}};
  MaximalConfig refined = base;
  refined.degree_grid = refine_degrees(base.degree_grid);
  refined.radii_grid = refine_radii(base.radii_grid);

  const Degree k_small = cfg.bandwidth;
  const Degree k_large = 2 * cfg.bandwidth;
  const Degree top = refined.degree_grid.back();
  EnsembleResult small, large, small_ref, large_ref;
  {
    const auto e = make_ensemble(cfg, top, cfg.tau, k_small);
    const auto table = g_star_table(e, cfg.tau, refined, cfg.cap_nodes);
    small = evaluate_ensemble(e, cfg.alpha, base, table);
    small_ref = evaluate_ensemble(e, cfg.alpha, refined, table);
  }
  {
    const auto e = make_ensemble(cfg, top, cfg.tau, k_large);
    const auto table = g_star_table(e, cfg.tau, refined, cfg.cap_nodes);
    large = evaluate_ensemble(e, cfg.alpha, base, table);
    large_ref = evaluate_ensemble(e, cfg.alpha, refined, table);
  }

  CsvTable members({"K", "grid", "member", "seed", "l1_ratio", "domination"});
  auto record = [&](Degree k, const char* grid, const EnsembleResult& e) {
    for (std::size_t i = 0; i < e.members.size(); ++i) {
      members.add_row({std::to_string(k), grid, std::to_string(i), std::to_string(cfg.seed + i),
                       r(e.members[i].l1_ratio), r(e.members[i].domination)});
    }
    const auto params = fmt::format("N={};alpha={};tau={};K={};grid={}", cfg.dim_n, r(cfg.alpha),
                                    r(cfg.tau), k, grid);
    report.add_row(params, "max_l1_ratio", e.max_l1_ratio);
    report.add_row(params, "domination_constant", e.max_domination);
  };
  record(k_small, "base", small);
  record(k_large, "base", large);
  record(k_small, "refined", small_ref);
  record(k_large, "refined", large_ref);

  CsvTable profile({"gamma", "e_star", "g_star", "g_star_reflected"});
  {
    const auto& m = large.members.front();
    for (std::size_t j = 0; j < base.eval_grid.size(); ++j) {
      profile.add_row({r(base.eval_grid[j]), r(m.e_star[j]), r(m.g_star[j]),
                       r(m.g_star[m.g_star.size() - 1 - j])});
    }
  }

  // Contrast run below the critical index: rows only.
  for (Degree k : {k_small, k_large}) {
    const auto e = make_ensemble(cfg, top, cfg.contrast_tau, k);
    const auto c = evaluate_ensemble(e, cfg.contrast_alpha, base,
                                     g_star_table(e, cfg.contrast_tau, base, cfg.cap_nodes));
    const auto params = fmt::format("N={};alpha={};tau={};K={};grid=base;contrast=1", cfg.dim_n,
                                    r(cfg.contrast_alpha), r(cfg.contrast_tau), k);
    report.add_row(params, "max_l1_ratio", c.max_l1_ratio);
    report.add_row(params, "domination_constant", c.max_domination);
  }
  report.data.push_back(DataFile{"maximal_ensemble.csv", std::move(members)});
  report.data.push_back(DataFile{"maximal_profile.csv", std::move(profile)});

  // Criterion 9: no blow-up with bandwidth, one constant for the ensemble.
  const double growth = large.max_l1_ratio / small.max_l1_ratio;
  const double fitted = std::max(small.max_domination, large.max_domination);
  const bool c9 = growth < cfg.ensemble_growth && std::isfinite(fitted) && fitted > 0.0;
  add_criterion(report, "C9", c9, growth, cfg.ensemble_growth,
                fmt::format("max L1 ratio K={}: {}, K={}: {}; fitted domination C = {} "
                            "(K={}: {}, K={}: {})",
                            k_small, r(small.max_l1_ratio), k_large, r(large.max_l1_ratio),
                            r(fitted), k_small, r(small.max_domination), k_large,
                            r(large.max_domination)));

  // Criterion 10: refinement never lowers a maximal value, moves ratios < 5%.
  bool monotone = true;
  auto check_monotone = [&](const EnsembleResult& a, const EnsembleResult& b) {
    for (std::size_t i = 0; i < a.members.size(); ++i) {
      for (std::size_t j = 0; j < a.members[i].e_star.size(); ++j) {
        monotone = monotone && b.members[i].e_star[j] >= a.members[i].e_star[j] &&
                   b.members[i].g_star[j] >= a.members[i].g_star[j];
      }
    }
  };
  check_monotone(small, small_ref);
  check_monotone(large, large_ref);
  const double change = std::max(
      {relative_change(small.max_l1_ratio, small_ref.max_l1_ratio),
       relative_change(large.max_l1_ratio, large_ref.max_l1_ratio),
       relative_change(large.max_l1_ratio / small.max_l1_ratio,
                       large_ref.max_l1_ratio / small_ref.max_l1_ratio),
       relative_change(fitted, std::max(small_ref.max_domination, large_ref.max_domination))});
  add_criterion(report, "C10", monotone && change < cfg.refinement_change, change,
                cfg.refinement_change,
                fmt::format("monotone under refinement={}; degrees {}->{}, radii {}->{}",
                            monotone ? "yes" : "no", base.degree_grid.size(),
                            refined.degree_grid.size(), base.radii_grid.size(),
                            refined.radii_grid.size()));
  return report;
}

// ---------------------------------------------------------------- tn-series

ExperimentReport run_tn_series(const ExperimentConfig& cfg) {
  ExperimentReport report;
  report.experiment = Experiment::TnSeries;
  const int dim = cfg.dim_n;
  const double half = 0.5 * (dim - 1);
  const auto series = tn_series(dim, cfg.alpha, cfg.tau, cfg.tn_terms);
  // Companion at the critical index alpha + tau = (N-1)/2.
  const double tau_c = std::max(0.0, half - cfg.alpha);
  const double alpha_c = half - tau_c;
  const auto critical = tn_series(dim, alpha_c, tau_c, cfg.tn_terms);

  CsvTable table({"n", "t_n", "s_n", "critical_t_n", "critical_s_n"});
  std::vector<Degree> marks;
  for (double e = 0.0; e <= std::log10(static_cast<double>(cfg.tn_terms)) + 1e-12; e += 0.125) {
    const auto n = static_cast<Degree>(std::llround(std::pow(10.0, e)));
    if (marks.empty() || n > marks.back()) marks.push_back(std::min(n, cfg.tn_terms));
  }
  if (marks.back() != cfg.tn_terms) marks.push_back(cfg.tn_terms);
  for (Degree n : marks) {
    const auto i = static_cast<std::size_t>(n - 1);
    table.add_row({std::to_string(n), r(series.exact[i]), r(series.comparison[i]),
                   r(critical.exact[i]), r(critical.comparison[i])});
    report.add_row(fmt::format("N={};alpha={};tau={};n={}", dim, r(cfg.alpha), r(cfg.tau), n),
                   "comparison_partial_sum", series.comparison[i]);
    report.add_row(fmt::format("N={};alpha={};tau={};n={}", dim, r(cfg.alpha), r(cfg.tau), n),
                   "t_partial_sum", series.exact[i]);
    report.add_row(fmt::format("N={};alpha={};tau={};n={}", dim, r(alpha_c), r(tau_c), n),
                   "critical_comparison_partial_sum", critical.comparison[i]);
  }
  report.data.push_back(DataFile{"tn_series.csv", std::move(table)});

  const auto n = static_cast<std::size_t>(cfg.cauchy_n);
  const double increment = std::abs(series.comparison[2 * n - 1] - series.comparison[n - 1]);
  const double t_increment = std::abs(series.exact[2 * n - 1] - series.exact[n - 1]);
  const double divergent = critical.comparison.back();
  const bool converged = increment < cfg.cauchy_target;
  const bool diverged = divergent > cfg.divergence_floor;
  const auto params = fmt::format("N={};alpha={};tau={};n={}", dim, r(cfg.alpha), r(cfg.tau), n);
  report.add_row(params, "cauchy_increment", increment);
  report.add_row(params, "t_cauchy_increment", t_increment);
  report.add_row(params, "verdict_converged", converged ? 1.0 : 0.0);
  report.add_row(fmt::format("N={};alpha={};tau={};n={}", dim, r(alpha_c), r(tau_c), cfg.tn_terms),
                 "verdict_diverged", diverged ? 1.0 : 0.0);
  add_criterion(report, "C6", converged && diverged, increment, cfg.cauchy_target,
                fmt::format("|S_2n - S_n| at n={} with alpha+tau-(N-1)/2={}; T-series increment "
                            "{}; critical comparison sum at n={} = {} (floor {})",
                            n, r(cfg.alpha + cfg.tau - half), r(t_increment), cfg.tn_terms,
                            r(divergent), r(cfg.divergence_floor)));
  return report;
}

// ---------------------------------------------------------------- abel-identity

ExperimentReport run_abel_identity(const ExperimentConfig& cfg) {
  if (cfg.n_max < 3) throw std::invalid_argument("abel-identity: n_max must be >= 3");
  ExperimentReport report;
  report.experiment = Experiment::AbelIdentity;
  const SphereContext ctx(cfg.dim_n, cfg.n_max);
  const std::vector<double> alphas = {0.0, 0.5, 1.0, 2.0};
  const std::vector<double> taus = {0.25, 0.75, 1.5};
  const auto angles = uniform_angles(static_cast<std::size_t>(cfg.angle_count));

  CsvTable table({"alpha", "tau", "n", "max_abs_discrepancy", "max_abs_kernel"});
  double kernel_worst = 0.0;
  for (double alpha : alphas) {
    for (double tau : taus) {
      double per_pair = 0.0;
      for (Degree n = 1; n <= cfg.n_max; ++n) {
        double worst = 0.0;
        double scale = 0.0;
        for (double g : angles) {
          const double t = std::cos(g);
          const double direct = abel_riesz_kernel(ctx, alpha, tau, n, t);
          const double rearranged = abel_riesz_kernel_rearranged(ctx, alpha, tau, n, t);
          worst = std::max(worst, std::abs(direct - rearranged));
          scale = std::max(scale, std::abs(direct));
        }
        table.add_row({r(alpha), r(tau), std::to_string(n), r(worst), r(scale)});
        per_pair = std::max(per_pair, worst);
      }
      report.add_row(fmt::format("N={};alpha={};tau={};n<={}", cfg.dim_n, r(alpha), r(tau),
                                 cfg.n_max),
                     "max_abs_discrepancy", per_pair);
      kernel_worst = std::max(kernel_worst, per_pair);
    }
  }
  report.data.push_back(DataFile{"abel_identity.csv", std::move(table)});

  // A^{-tau/2} E_n^alpha A^{tau/2} f = E_n^alpha f, coefficient by coefficient.
  const auto f = bandlimited_random(ctx, cfg.n_max, cfg.seed);
  double operator_worst = 0.0;
  for (double alpha : alphas) {
    for (double tau : taus) {
      for (Degree n = 1; n <= cfg.n_max; ++n) {
        const auto direct = apply_summation(f, Riesz{alpha}, n);
        const auto conj = fractional_power(
            apply_summation(fractional_power(f, 0.5 * tau), Riesz{alpha}, n), -0.5 * tau);
        const auto a = direct.coeffs();
        const auto b = conj.coeffs();
        for (std::size_t k = 0; k < a.size(); ++k) {
          operator_worst = std::max(operator_worst, std::abs(a[k] - b[k]));
        }
      }
    }
  }
  report.add_row(fmt::format("N={};n<={};seed={}", cfg.dim_n, cfg.n_max, cfg.seed),
                 "operator_identity_max_abs", operator_worst);

  const double worst = std::max(kernel_worst, operator_worst);
  add_criterion(report, "C1", worst < cfg.tol_identity, worst, cfg.tol_identity,
                fmt::format("kernel rearrangement {}; operator identity {}; grid n=1..{}, "
                            "{} angles, alpha in {{0,0.5,1,2}}, tau in {{0.25,0.75,1.5}}",
                            r(kernel_worst), r(operator_worst), cfg.n_max, angles.size()));
  return report;
}

// ---------------------------------------------------------------- dump-kernel

ExperimentReport run_dump_kernel(const ExperimentConfig& cfg) {
  ExperimentReport report;
  report.experiment = Experiment::DumpKernel;
  const KernelSpec spec{SphereContext(cfg.dim_n, cfg.n_max), kernel_method_from(cfg), cfg.n_max};
  spec.validate();
  const auto grid = evaluate_kernel_grid(spec, uniform_angles(static_cast<std::size_t>(cfg.angle_count)));
  report.add_row(fmt::format("N={};method={};n={}", cfg.dim_n, describe(spec.method), cfg.n_max),
                 "rows", static_cast<double>(grid.angles.size()));
  report.data.push_back(DataFile{"kernel.csv", kernel_grid_table(grid)});
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  switch (cfg.experiment) {
    case Experiment::KernelBounds: return run_kernel_bounds(cfg);
    case Experiment::Converge: return run_converge(cfg);
    case Experiment::MaximalIneq: return run_maximal_ineq(cfg);
    case Experiment::TnSeries: return run_tn_series(cfg);
    case Experiment::AbelIdentity: return run_abel_identity(cfg);
    case Experiment::DumpKernel: return run_dump_kernel(cfg);
  }
  throw std::logic_error("unhandled experiment");
}

}  // namespace sphsum
