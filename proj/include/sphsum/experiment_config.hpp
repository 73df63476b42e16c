// Experiment configuration as flat key=value text, one pair per line,
// '#' starting a comment. Command-line flags use the same names.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sphsum {

enum class Experiment { KernelBounds, Converge, MaximalIneq, TnSeries, AbelIdentity, DumpKernel };

enum class TestFunctionKind { BandlimitedRandom, Heat, Cap, Regularity };

std::string to_string(Experiment e);
std::string to_string(TestFunctionKind k);
Experiment parse_experiment(const std::string& name);

struct ExperimentConfig {
  Experiment experiment = Experiment::Converge;
  int dim_n = 2;
  double alpha = 0.6;
  double tau = 0.4;
  std::int64_t n_max = 512;
  std::string method = "riesz";  // partial | riesz | cesaro | abel (dump-kernel only)
  TestFunctionKind test_function = TestFunctionKind::Heat;
  std::uint64_t seed = 1;
  std::int64_t bandwidth = 16;
  double heat_t = 0.05;
  double cap_radius = 0.78539816339744828;
  double regularity_beta = 1.0;
  std::int64_t reference_degree = 2048;
  std::int64_t angle_count = 1024;
  std::int64_t radii_count = 64;
  std::int64_t eval_count = 64;
  std::int64_t cap_nodes = 16;
  std::int64_t ensemble_size = 50;
  std::string spectrum = "mu";          // mu | lambda
  std::string norm_exponent = "full";   // full | half
  double gamma0 = 0.5;
  double envelope_constant = 1.0;
  double jump_exclusion = 0.1;
  double contrast_alpha = 0.1;
  double contrast_tau = 0.2;
  std::int64_t tn_terms = 100000;
  std::int64_t cauchy_n = 64;

  // Acceptance thresholds.
  double tol_identity = 1e-12;
  double tol_reproduction = 1e-11;
  double converge_target = 1e-3;
  double gibbs_floor = 0.05;
  double gibbs_target = 0.01;
  double envelope_variation = 4.0;
  double cauchy_target = 0.01;
  double divergence_floor = 10.0;
  double ensemble_growth = 2.0;
  double refinement_change = 0.05;

  /// Sets one key from its text value; throws std::invalid_argument on an
  /// unknown key or malformed value.
  void set(const std::string& key, const std::string& value);

  /// Range checks shared by every experiment.
  void validate() const;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Every key in a fixed order.
const std::vector<std::string>& config_keys();

/// key=value lines for every key.
std::string serialize(const ExperimentConfig& cfg);

/// Applies key=value lines on top of `base`.
ExperimentConfig parse_config(const std::string& text, ExperimentConfig base = {});

/// Defaults tuned per experiment (e.g. tn-series uses alpha=0.3, tau=0.6).
ExperimentConfig default_config(Experiment e);

}  // namespace sphsum
