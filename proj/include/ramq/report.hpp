#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ramq/relation.hpp"

namespace ramq {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kReportCsvHeader = "# ramq-report-csv v1";

/// Rounds to 15 significant decimal digits; reports store only rounded values.
double round15(double x);

struct TermDiagnostics {
  double coefficient = 0.0;
  double coefficient_imag = 0.0;
  std::string kind;
  std::string f;
  double n = 0.0;
  int m = 0;
  double s = 0.0;
  double phase = 0.0;
  double value = 0.0;
  double error_estimate = 0.0;
  int core_levels = 0;
  int tail_cells = 0;
  bool converged = false;

  friend bool operator==(const TermDiagnostics&, const TermDiagnostics&) = default;
};

struct ReportEntry {
  std::string provenance;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double scaled_residual = 0.0;
  bool pass = false;
  std::string error;  // non-empty when the relation could not be evaluated
  std::vector<TermDiagnostics> terms;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct ReportConfig {
  double tol = 1e-8;
  double target_abs_tol = 1e-10;
  int max_core_levels = 10;
  int max_tail_cells = 4096;
  int acceleration_depth = 12;
  std::vector<double> n_values;
  int m_max = 0;
  int r_min = 0;
  int r_max = 0;
  int jobs = 1;

  friend bool operator==(const ReportConfig&, const ReportConfig&) = default;
};

struct Report {
  int schema_version = kReportSchemaVersion;
  std::string suite;
  ReportConfig config;
  std::vector<ReportEntry> entries;
  double wall_time = 0.0;  // seconds

  bool all_pass() const;
  std::size_t failures() const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Entry for a verified relation; pass iff residual <= tol.
ReportEntry make_entry(const VerifiedRelation& v, double tol);
/// Failed entry for a relation whose evaluation threw.
ReportEntry make_error_entry(const Relation& relation, const std::string& message);

std::string to_json(const Report& report);
Report report_from_json(const std::string& text);

/// One row per entry after the versioned header and a column line.
std::string to_csv(const Report& report);
std::string to_text(const Report& report);

/// "json", "csv" or "text"; anything else throws DomainError.
std::string format_report(const Report& report, const std::string& format);

struct TableRow {
  int r = 0;
  double n = 0.0;
  double cos_closed = 0.0;
  double bessel = 0.0;
  double x_sin_closed = 0.0;
  double cos_quad = 0.0;
  double x_sin_quad = 0.0;
  double cos_residual = 0.0;    // |cos_quad - cos_closed|
  double bessel_residual = 0.0; // |bessel - cos_closed|
  double x_sin_residual = 0.0;  // |x_sin_quad - x_sin_closed|
  bool pass = false;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

std::string format_table(const std::vector<TableRow>& rows, const std::string& format);

}  // namespace ramq
