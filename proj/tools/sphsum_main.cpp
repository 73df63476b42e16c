// sphsum <experiment> --config <path> [--key value ...] --out <dir>
//
// Values are layered: per-experiment defaults, then the config file, then
// flags. SPHSUM_OUT_DIR, when set, overrides --out. Exit status is 0 iff
// every criterion in the summary passes, 1 if one fails, 2 on usage or
// runtime errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "sphsum/experiments.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier-Laplace summability experiments on S^N"};
  std::string experiment_name;
  std::string config_path;
  std::string out_dir;
  app.add_option("experiment", experiment_name,
                 "kernel-bounds | converge | maximal-ineq | tn-series | abel-identity | "
                 "dump-kernel")
      ->required();
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--out", out_dir, "output directory");

  std::map<std::string, std::string> overrides;
  for (const auto& key : sphsum::config_keys()) {
    if (key == "experiment") continue;
    app.add_option("--" + key, overrides[key], "override config key " + key);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const auto experiment = sphsum::parse_experiment(experiment_name);
    auto cfg = sphsum::default_config(experiment);
    if (!config_path.empty()) cfg = sphsum::parse_config(read_file(config_path), cfg);
    cfg.experiment = experiment;
    for (const auto& key : sphsum::config_keys()) {
      if (key == "experiment") continue;
      if (app.count("--" + key) > 0) cfg.set(key, overrides[key]);
    }

    if (const char* env = std::getenv("SPHSUM_OUT_DIR"); env != nullptr && *env != '\0') {
      out_dir = env;
    }
    if (out_dir.empty()) throw std::invalid_argument("no output directory: pass --out or set SPHSUM_OUT_DIR");

    const auto report = sphsum::run_experiment(cfg);
    sphsum::write_report(report, cfg, out_dir);
    for (const auto& c : report.summary) {
      std::cout << fmt::format("{} {} measured={} threshold={}\n", c.id, c.pass ? "PASS" : "FAIL",
                               sphsum::format_real(c.measured), sphsum::format_real(c.threshold));
    }
    std::cout << fmt::format("wrote {} to {}\n", sphsum::to_string(experiment), out_dir);
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "sphsum: " << e.what() << '\n';
    return 2;
  }
}
