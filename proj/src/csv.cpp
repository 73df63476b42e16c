#include "sphsum/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace sphsum {
namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("not a number: " + s);
  return v;
}

}  // namespace

std::string format_real(double value) { return fmt::format("{:.17g}", value); }

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw std::invalid_argument("CSV header must not be empty");
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    throw std::invalid_argument(
        fmt::format("CSV row has {} fields, header has {}", row.size(), header_.size()));
  }
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out += ',';
      out += quote(fields[i]);
    }
    out += "\r\n";
  };
  emit(header_);
  for (const auto& row : rows_) emit(row);
  return out;
}

CsvTable parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      record.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (ch == '\r' || ch == '\n') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else {
      field += ch;
      any = true;
    }
  }
  if (quoted) throw std::invalid_argument("CSV: unterminated quoted field");
  if (any) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  if (records.empty()) throw std::invalid_argument("CSV: missing header");
  CsvTable table(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) table.add_row(std::move(records[r]));
  return table;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) {
    throw std::runtime_error(
        fmt::format("cannot create directory {}: {}", path.parent_path().string(), ec.message()));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

CsvTable kernel_grid_table(const KernelGrid& grid) {
  const bool with_bounds = grid.bounds.has_value() && grid.regimes.has_value();
  CsvTable table(with_bounds ? std::vector<std::string>{"gamma", "value", "bound", "regime"}
                             : std::vector<std::string>{"gamma", "value"});
  for (std::size_t i = 0; i < grid.angles.size(); ++i) {
    std::vector<std::string> row{format_real(grid.angles[i]), format_real(grid.values[i])};
    if (with_bounds) {
      row.push_back(format_real((*grid.bounds)[i]));
      row.push_back(std::to_string((*grid.regimes)[i]));
    }
    table.add_row(std::move(row));
  }
  return table;
}

CsvTable zonal_function_table(const ZonalFunction& f) {
  CsvTable table({"k", "coeff"});
  const auto c = f.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) table.add_row({std::to_string(k), format_real(c[k])});
  return table;
}

ZonalFunction zonal_function_from_table(const CsvTable& table, const SphereContext& ctx) {
  if (table.header() != std::vector<std::string>{"k", "coeff"}) {
    throw std::invalid_argument("zonal function CSV must have header k,coeff");
  }
  std::vector<double> c;
  for (const auto& row : table.rows()) {
    if (std::stoul(row[0]) != c.size()) {
      throw std::invalid_argument("zonal function CSV: degrees must be 0,1,2,... in order");
    }
    c.push_back(parse_real(row[1]));
  }
  return ZonalFunction(ctx, std::move(c));
}

CsvTable profile_table(const std::vector<double>& angles, const std::vector<double>& values) {
  if (angles.size() != values.size()) throw std::invalid_argument("profile size mismatch");
  CsvTable table({"gamma", "value"});
  for (std::size_t i = 0; i < angles.size(); ++i) {
    table.add_row({format_real(angles[i]), format_real(values[i])});
  }
  return table;
}

CsvTable maximal_profile_table(const MaximalProfile& profile) {
  CsvTable table({"gamma", "maximal_value", "argmax_index"});
  for (std::size_t i = 0; i < profile.angles.size(); ++i) {
    table.add_row({format_real(profile.angles[i]), format_real(profile.values[i]),
                   std::to_string(profile.argmax[i])});
  }
  return table;
}

}  // namespace sphsum
