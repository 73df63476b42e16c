// RFC 4180 style CSV: mandatory header, '.' decimal separator, reals printed
// with 17 significant digits so doubles round-trip exactly.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sphsum/kernels.hpp"
#include "sphsum/maximal.hpp"
#include "sphsum/zonal_function.hpp"

namespace sphsum {

std::string format_real(double value);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  /// Throws std::invalid_argument if the row width differs from the header.
  void add_row(std::vector<std::string> row);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Parses RFC 4180 text (quoted fields, doubled quotes, CRLF or LF).
CsvTable parse_csv(const std::string& text);

/// Writes text to path, creating parent directories; throws
/// std::runtime_error naming the path on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

/// gamma,value[,bound,regime]
CsvTable kernel_grid_table(const KernelGrid& grid);

/// k,coeff
CsvTable zonal_function_table(const ZonalFunction& f);
ZonalFunction zonal_function_from_table(const CsvTable& table, const SphereContext& ctx);

/// gamma,value
CsvTable profile_table(const std::vector<double>& angles, const std::vector<double>& values);

/// gamma,maximal_value,argmax_index
CsvTable maximal_profile_table(const MaximalProfile& profile);

}  // namespace sphsum
