#include "sphsum/experiment_config.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "sphsum/csv.hpp"

namespace sphsum {
namespace {

struct Field {
  std::string name;
  std::function<std::string(const ExperimentConfig&)> get;
  std::function<void(ExperimentConfig&, const std::string&)> set;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T value{};
  in >> value;
  if (!in || !in.eof()) {
    throw std::invalid_argument(fmt::format("config key '{}': cannot parse '{}'", key, text));
  }
  return value;
}

template <>
double parse_number<double>(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument(fmt::format("config key '{}': cannot parse '{}'", key, text));
  }
  return value;
}

template <class T>
Field numeric(std::string name, T ExperimentConfig::*member) {
  return Field{
      name,
      [member](const ExperimentConfig& c) {
        if constexpr (std::is_floating_point_v<T>) {
          return format_real(c.*member);
        } else {
          return std::to_string(c.*member);
        }
      },
      [member, name](ExperimentConfig& c, const std::string& v) {
        c.*member = parse_number<T>(name, v);
      }};
}

Field text(std::string name, std::string ExperimentConfig::*member,
           std::vector<std::string> allowed) {
  return Field{name, [member](const ExperimentConfig& c) { return c.*member; },
               [member, name, allowed](ExperimentConfig& c, const std::string& v) {
                 if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
                   throw std::invalid_argument(
                       fmt::format("config key '{}': '{}' not one of {}", name, v,
                                   fmt::join(allowed, ", ")));
                 }
                 c.*member = v;
               }};
}

TestFunctionKind parse_test_function(const std::string& v) {
  if (v == "bandlimited-random") return TestFunctionKind::BandlimitedRandom;
  if (v == "heat") return TestFunctionKind::Heat;
  if (v == "cap") return TestFunctionKind::Cap;
  if (v == "regularity") return TestFunctionKind::Regularity;
  throw std::invalid_argument("unknown test_function '" + v + "'");
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      Field{"experiment", [](const ExperimentConfig& c) { return to_string(c.experiment); },
            [](ExperimentConfig& c, const std::string& v) { c.experiment = parse_experiment(v); }},
      numeric("dim_n", &ExperimentConfig::dim_n),
      numeric("alpha", &ExperimentConfig::alpha),
      numeric("tau", &ExperimentConfig::tau),
      numeric("n_max", &ExperimentConfig::n_max),
      text("method", &ExperimentConfig::method, {"partial", "riesz", "cesaro", "abel"}),
      Field{"test_function", [](const ExperimentConfig& c) { return to_string(c.test_function); },
            [](ExperimentConfig& c, const std::string& v) {
              c.test_function = parse_test_function(v);
            }},
      numeric("seed", &ExperimentConfig::seed),
      numeric("bandwidth", &ExperimentConfig::bandwidth),
      numeric("heat_t", &ExperimentConfig::heat_t),
      numeric("cap_radius", &ExperimentConfig::cap_radius),
      numeric("regularity_beta", &ExperimentConfig::regularity_beta),
      numeric("reference_degree", &ExperimentConfig::reference_degree),
      numeric("angle_count", &ExperimentConfig::angle_count),
      numeric("radii_count", &ExperimentConfig::radii_count),
      numeric("eval_count", &ExperimentConfig::eval_count),
      numeric("cap_nodes", &ExperimentConfig::cap_nodes),
      numeric("ensemble_size", &ExperimentConfig::ensemble_size),
      text("spectrum", &ExperimentConfig::spectrum, {"mu", "lambda"}),
      text("norm_exponent", &ExperimentConfig::norm_exponent, {"full", "half"}),
      numeric("gamma0", &ExperimentConfig::gamma0),
      numeric("envelope_constant", &ExperimentConfig::envelope_constant),
      numeric("jump_exclusion", &ExperimentConfig::jump_exclusion),
      numeric("contrast_alpha", &ExperimentConfig::contrast_alpha),
      numeric("contrast_tau", &ExperimentConfig::contrast_tau),
      numeric("tn_terms", &ExperimentConfig::tn_terms),
      numeric("cauchy_n", &ExperimentConfig::cauchy_n),
      numeric("tol_identity", &ExperimentConfig::tol_identity),
      numeric("tol_reproduction", &ExperimentConfig::tol_reproduction),
      numeric("converge_target", &ExperimentConfig::converge_target),
      numeric("gibbs_floor", &ExperimentConfig::gibbs_floor),
      numeric("gibbs_target", &ExperimentConfig::gibbs_target),
      numeric("envelope_variation", &ExperimentConfig::envelope_variation),
      numeric("cauchy_target", &ExperimentConfig::cauchy_target),
      numeric("divergence_floor", &ExperimentConfig::divergence_floor),
      numeric("ensemble_growth", &ExperimentConfig::ensemble_growth),
      numeric("refinement_change", &ExperimentConfig::refinement_change),
  };
  return table;
}

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::KernelBounds: return "kernel-bounds";
    case Experiment::Converge: return "converge";
    case Experiment::MaximalIneq: return "maximal-ineq";
    case Experiment::TnSeries: return "tn-series";
    case Experiment::AbelIdentity: return "abel-identity";
    case Experiment::DumpKernel: return "dump-kernel";
  }
  return "?";
}

std::string to_string(TestFunctionKind k) {
  switch (k) {
    case TestFunctionKind::BandlimitedRandom: return "bandlimited-random";
    case TestFunctionKind::Heat: return "heat";
    case TestFunctionKind::Cap: return "cap";
    case TestFunctionKind::Regularity: return "regularity";
  }
  return "?";
}

Experiment parse_experiment(const std::string& name) {
  for (auto e : {Experiment::KernelBounds, Experiment::Converge, Experiment::MaximalIneq,
                 Experiment::TnSeries, Experiment::AbelIdentity, Experiment::DumpKernel}) {
    if (to_string(e) == name) return e;
  }
  throw std::invalid_argument("unknown experiment '" + name + "'");
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  for (const auto& f : fields()) {
    if (f.name == key) {
      f.set(*this, trim(value));
      return;
    }
  }
  throw std::invalid_argument("unknown config key '" + key + "'");
}

void ExperimentConfig::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("invalid config: " + what);
  };
  require(dim_n >= 1, "dim_n must be >= 1");
  require(std::isfinite(alpha) && alpha >= 0.0, "alpha must be >= 0");
  require(std::isfinite(tau) && tau >= 0.0, "tau must be >= 0");
  // a degree-0 dump is the constant kernel; everything else needs a truncation
  require(n_max >= (experiment == Experiment::DumpKernel ? 0 : 1), "n_max must be >= 1");
  require(method == "partial" || method == "riesz" || method == "cesaro" || method == "abel",
          "method must be partial, riesz, cesaro or abel");
  require(spectrum == "mu" || spectrum == "lambda", "spectrum must be mu or lambda");
  require(norm_exponent == "full" || norm_exponent == "half", "norm_exponent must be full or half");
  require(bandwidth >= 0, "bandwidth must be >= 0");
  require(heat_t > 0.0, "heat_t must be > 0");
  require(cap_radius > 0.0 && cap_radius < 3.141592653589793, "cap_radius must lie in (0, pi)");
  require(reference_degree >= n_max || experiment != Experiment::Converge,
          "reference_degree must be >= n_max");
  require(angle_count >= 2, "angle_count must be >= 2");
  require(radii_count >= 2, "radii_count must be >= 2");
  require(eval_count >= 2, "eval_count must be >= 2");
  require(cap_nodes >= 2, "cap_nodes must be >= 2");
  require(ensemble_size >= 1, "ensemble_size must be >= 1");
  require(gamma0 > 0.0 && gamma0 <= 3.141592653589793, "gamma0 must lie in (0, pi]");
  require(envelope_constant > 0.0, "envelope_constant must be > 0");
  require(jump_exclusion >= 0.0, "jump_exclusion must be >= 0");
  require(tn_terms >= 2 * cauchy_n && cauchy_n >= 1, "tn_terms must be >= 2 * cauchy_n");
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& f : fields()) k.push_back(f.name);
    return k;
  }();
  return keys;
}

std::string serialize(const ExperimentConfig& cfg) {
  std::string out;
  for (const auto& f : fields()) out += f.name + "=" + f.get(cfg) + "\n";
  return out;
}

ExperimentConfig parse_config(const std::string& text, ExperimentConfig base) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(fmt::format("config line {}: expected key=value", line_no));
    }
    base.set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

ExperimentConfig default_config(Experiment e) {
  ExperimentConfig c;
  c.experiment = e;
  switch (e) {
    case Experiment::KernelBounds:
      c.alpha = 0.0;
      c.gamma0 = 0.5;
      break;
    case Experiment::Converge:
      c.alpha = 0.6;
      c.angle_count = 4096;
      break;
    case Experiment::MaximalIneq:
      c.alpha = 0.3;
      c.tau = 0.4;
      c.n_max = 256;
      c.test_function = TestFunctionKind::BandlimitedRandom;
      break;
    case Experiment::TnSeries:
      c.alpha = 0.3;
      c.tau = 0.6;
      break;
    case Experiment::AbelIdentity:
      c.n_max = 100;
      c.angle_count = 100;
      break;
    case Experiment::DumpKernel:
      c.n_max = 64;
      c.angle_count = 512;
      break;
  }
  return c;
}

}  // namespace sphsum
