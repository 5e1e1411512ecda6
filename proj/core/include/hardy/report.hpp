#pragma once
// Machine-readable experiment reports: fixed-schema CSV plus a JSON mirror.

#include <cstdint>
#include <string>
#include <vector>

namespace hardy {

struct CsvRow {
  std::string theorem_id;
  double p = 0, alpha = 0, beta = 0, gamma = 0;
  int n = 0, k = 0, m = 0;
  double R = 0, epsilon = 0;
  double constant = 0, ratio = 0, gap = 0, num_err = 0, den_err = 0;
  bool pass = false;

  bool operator==(const CsvRow&) const = default;
};

struct Report {
  std::string artifact_version = "1.0.0";
  std::string experiment;
  std::uint64_t seed = 0;
  std::string config_echo; // canonical one-line config text
  std::vector<CsvRow> rows;
  std::vector<std::string> notes;
  bool summary_pass = false;

  bool operator==(const Report&) const = default;
};

// Fixed 16-column CSV with a commented reproducibility header.
std::string emit_csv(const Report& r);
std::string emit_json(const Report& r);
Report parse_report_json(const std::string& text);

// shortest-exact double formatting used by every emitter ("%.17g")
std::string format_double(double v);

} // namespace hardy
