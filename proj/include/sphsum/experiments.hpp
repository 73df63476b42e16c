// Experiment runners behind the command-line tool. Each runner returns a
// report: long-format metric rows, one summary line per acceptance
// criterion it exercises, and any data tables to be written alongside.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sphsum/csv.hpp"
#include "sphsum/experiment_config.hpp"

namespace sphsum {

struct ReportRow {
  std::string experiment;
  std::string parameters;  // "key=value;key=value"
  std::string metric;
  double value = 0.0;
};

struct CriterionResult {
  std::string id;  // e.g. "C7"
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct DataFile {
  std::string name;  // file name inside the output directory
  CsvTable table;
};

struct ExperimentReport {
  Experiment experiment = Experiment::Converge;
  std::vector<ReportRow> rows;
  std::vector<CriterionResult> summary;
  std::vector<DataFile> data;

  bool all_pass() const;
  void add_row(std::string parameters, std::string metric, double value);

  CsvTable report_table() const;
  CsvTable summary_table() const;
};

/// Writes report.csv, summary.csv, every data file and config.txt into dir.
void write_report(const ExperimentReport& report, const ExperimentConfig& cfg,
                  const std::filesystem::path& dir);

ExperimentReport run_kernel_bounds(const ExperimentConfig& cfg);
ExperimentReport run_converge(const ExperimentConfig& cfg);
ExperimentReport run_maximal_ineq(const ExperimentConfig& cfg);
ExperimentReport run_tn_series(const ExperimentConfig& cfg);
ExperimentReport run_abel_identity(const ExperimentConfig& cfg);
ExperimentReport run_dump_kernel(const ExperimentConfig& cfg);

/// Validates cfg and dispatches on cfg.experiment.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

}  // namespace sphsum
