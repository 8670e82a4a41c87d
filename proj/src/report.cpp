#include "ramq/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "ramq/errors.hpp"
#include "ramq/parse.hpp"

namespace ramq {

using nlohmann::json;

double round15(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json to_json_value(const TermDiagnostics& t) {
  return json{{"coefficient", t.coefficient},
              {"coefficient_imag", t.coefficient_imag},
              {"kind", t.kind},
              {"f", t.f},
              {"n", t.n},
              {"m", t.m},
              {"s", t.s},
              {"phase", t.phase},
              {"value", t.value},
              {"error_estimate", t.error_estimate},
              {"core_levels", t.core_levels},
              {"tail_cells", t.tail_cells},
              {"converged", t.converged}};
}

TermDiagnostics term_from_json(const json& j) {
  TermDiagnostics t;
  t.coefficient = j.at("coefficient").get<double>();
  t.coefficient_imag = j.at("coefficient_imag").get<double>();
  t.kind = j.at("kind").get<std::string>();
  t.f = j.at("f").get<std::string>();
  t.n = j.at("n").get<double>();
  t.m = j.at("m").get<int>();
  t.s = j.at("s").get<double>();
  t.phase = j.at("phase").get<double>();
  t.value = j.at("value").get<double>();
  t.error_estimate = j.at("error_estimate").get<double>();
  t.core_levels = j.at("core_levels").get<int>();
  t.tail_cells = j.at("tail_cells").get<int>();
  t.converged = j.at("converged").get<bool>();
  return t;
}

TermDiagnostics diagnostics(const Term& term, const QuadratureResult* q) {
  TermDiagnostics d;
  d.coefficient = round15(term.coefficient.real());
  d.coefficient_imag = round15(term.coefficient.imag());
  d.kind = to_string(term.spec.kind);
  d.f = format_rational(term.spec.f);
  d.n = round15(term.spec.n);
  d.m = term.spec.m;
  d.s = round15(term.spec.s);
  d.phase = round15(term.spec.phase);
  if (q != nullptr) {
    d.value = round15(q->value);
    d.error_estimate = round15(q->error_estimate);
    d.core_levels = q->core_subdivisions;
    d.tail_cells = q->tail_cells_used;
    d.converged = q->converged;
  }
  return d;
}

}  // namespace

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
}

ReportEntry make_entry(const VerifiedRelation& v, double tol) {
  ReportEntry e;
  e.provenance = v.relation.provenance;
  e.lhs = round15(v.lhs.real());
  e.rhs = round15(v.relation.rhs.real());
  e.residual = round15(v.residual);
  e.scaled_residual = round15(v.scaled_residual);
  e.pass = std::isfinite(v.residual) && v.residual <= tol;
  for (std::size_t k = 0; k < v.relation.terms.size(); ++k)
    e.terms.push_back(diagnostics(v.relation.terms[k], k < v.values.size() ? &v.values[k] : nullptr));
  return e;
}

ReportEntry make_error_entry(const Relation& relation, const std::string& message) {
  ReportEntry e;
  e.provenance = relation.provenance;
  e.rhs = round15(relation.rhs.real());
  e.residual = 0.0;
  e.pass = false;
  e.error = message;
  for (const auto& t : relation.terms) e.terms.push_back(diagnostics(t, nullptr));
  return e;
}

std::string to_json(const Report& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json terms = json::array();
    for (const auto& t : e.terms) terms.push_back(to_json_value(t));
    entries.push_back(json{{"provenance", e.provenance},
                           {"lhs", e.lhs},
                           {"rhs", e.rhs},
                           {"residual", e.residual},
                           {"scaled_residual", e.scaled_residual},
                           {"pass", e.pass},
                           {"error", e.error},
                           {"terms", terms}});
  }
  const auto& c = report.config;
  json doc{{"schema_version", report.schema_version},
           {"suite", report.suite},
           {"config",
            {{"tol", c.tol},
             {"target_abs_tol", c.target_abs_tol},
             {"max_core_levels", c.max_core_levels},
             {"max_tail_cells", c.max_tail_cells},
             {"acceleration_depth", c.acceleration_depth},
             {"n_values", c.n_values},
             {"m_max", c.m_max},
             {"r_min", c.r_min},
             {"r_max", c.r_max},
             {"jobs", c.jobs}}},
           {"wall_time", report.wall_time},
           {"passed", report.entries.size() - report.failures()},
           {"failed", report.failures()},
           {"entries", entries}};
  return doc.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("report: ") + ex.what());
  }
  try {
    Report r;
    r.schema_version = doc.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion) throw ParseError("report: unsupported schema_version");
    r.suite = doc.at("suite").get<std::string>();
    const auto& c = doc.at("config");
    r.config.tol = c.at("tol").get<double>();
    r.config.target_abs_tol = c.at("target_abs_tol").get<double>();
    r.config.max_core_levels = c.at("max_core_levels").get<int>();
    r.config.max_tail_cells = c.at("max_tail_cells").get<int>();
    r.config.acceleration_depth = c.at("acceleration_depth").get<int>();
    r.config.n_values = c.at("n_values").get<std::vector<double>>();
    r.config.m_max = c.at("m_max").get<int>();
    r.config.r_min = c.at("r_min").get<int>();
    r.config.r_max = c.at("r_max").get<int>();
    r.config.jobs = c.at("jobs").get<int>();
    r.wall_time = doc.at("wall_time").get<double>();
    for (const auto& j : doc.at("entries")) {
      ReportEntry e;
      e.provenance = j.at("provenance").get<std::string>();
      e.lhs = j.at("lhs").get<double>();
      e.rhs = j.at("rhs").get<double>();
      e.residual = j.at("residual").get<double>();
      e.scaled_residual = j.at("scaled_residual").get<double>();
      e.pass = j.at("pass").get<bool>();
      e.error = j.at("error").get<std::string>();
      for (const auto& t : j.at("terms")) e.terms.push_back(term_from_json(t));
      r.entries.push_back(std::move(e));
    }
    return r;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("report: ") + ex.what());
  }
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << kReportCsvHeader << "\n";
  out << "suite,provenance,lhs,rhs,residual,scaled_residual,pass,terms,error\n";
  for (const auto& e : report.entries) {
    out << csv_field(report.suite) << ',' << csv_field(e.provenance) << ',' << fmt(e.lhs) << ',' << fmt(e.rhs) << ','
        << fmt(e.residual) << ',' << fmt(e.scaled_residual) << ',' << (e.pass ? "pass" : "fail") << ','
        << e.terms.size() << ',' << csv_field(e.error) << "\n";
  }
  return out.str();
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  std::size_t width = 10;
  for (const auto& e : report.entries) width = std::max(width, e.provenance.size());
  char line[512];
  std::snprintf(line, sizeof line, "suite %s  tol %s  (%zu relations)\n", report.suite.c_str(),
                fmt(report.config.tol).c_str(), report.entries.size());
  out << line;
  for (const auto& e : report.entries) {
    if (!e.error.empty()) {
      std::snprintf(line, sizeof line, "  %-*s  FAIL  %s\n", static_cast<int>(width), e.provenance.c_str(),
                    e.error.c_str());
    } else {
      std::snprintf(line, sizeof line, "  %-*s  %s  lhs % .15e  rhs % .15e  residual %.3e\n", static_cast<int>(width),
                    e.provenance.c_str(), e.pass ? "pass" : "FAIL", e.lhs, e.rhs, e.residual);
    }
    out << line;
  }
  std::snprintf(line, sizeof line, "%zu passed, %zu failed, %.3f s\n", report.entries.size() - report.failures(),
                report.failures(), report.wall_time);
  out << line;
  return out.str();
}

std::string format_report(const Report& report, const std::string& format) {
  if (format == "json") return to_json(report);
  if (format == "csv") return to_csv(report);
  if (format == "text") return to_text(report);
  throw DomainError("unknown report format '" + format + "'");
}

std::string format_table(const std::vector<TableRow>& rows, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back(json{{"r", r.r},
                         {"n", r.n},
                         {"cos_closed", r.cos_closed},
                         {"bessel", r.bessel},
                         {"x_sin_closed", r.x_sin_closed},
                         {"cos_quad", r.cos_quad},
                         {"x_sin_quad", r.x_sin_quad},
                         {"cos_residual", r.cos_residual},
                         {"bessel_residual", r.bessel_residual},
                         {"x_sin_residual", r.x_sin_residual},
                         {"pass", r.pass}});
    return json{{"schema_version", kReportSchemaVersion}, {"rows", arr}}.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == "csv") {
    out << "# ramq-table-csv v1\n";
    out << "r,n,cos_closed,bessel,x_sin_closed,cos_quad,x_sin_quad,cos_residual,bessel_residual,x_sin_residual,pass\n";
    for (const auto& r : rows)
      out << r.r << ',' << fmt(r.n) << ',' << fmt(r.cos_closed) << ',' << fmt(r.bessel) << ',' << fmt(r.x_sin_closed)
          << ',' << fmt(r.cos_quad) << ',' << fmt(r.x_sin_quad) << ',' << fmt(r.cos_residual) << ','
          << fmt(r.bessel_residual) << ',' << fmt(r.x_sin_residual) << ',' << (r.pass ? "pass" : "fail") << "\n";
    return out.str();
  }
  if (format == "text") {
    char line[512];
    std::snprintf(line, sizeof line, "%3s %6s %22s %22s %22s %10s %10s %10s\n", "r", "n", "cos closed", "bessel",
                  "x sin closed", "cos res", "bessel res", "xsin res");
    out << line;
    for (const auto& r : rows) {
      std::snprintf(line, sizeof line, "%3d %6g %22.15e %22.15e %22.15e %10.2e %10.2e %10.2e%s\n", r.r, r.n,
                    r.cos_closed, r.bessel, r.x_sin_closed, r.cos_residual, r.bessel_residual, r.x_sin_residual,
                    r.pass ? "" : "  FAIL");
      out << line;
    }
    return out.str();
  }
  throw DomainError("unknown table format '" + format + "'");
}

}  // namespace ramq
