#include "ramq/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "ramq/closed_forms.hpp"
#include "ramq/errors.hpp"
#include "ramq/parse.hpp"

namespace ramq {

namespace {

void append(std::vector<Relation>& out, std::pair<Relation, Relation> pair) {
  out.push_back(std::move(pair.first));
  out.push_back(std::move(pair.second));
}

void theorem1(std::vector<Relation>& out, const SuiteOptions& o) {
  for (double n : o.n_values) {
    Relation base = cos_pow_closed(0, n, 0.0);
    char tag[48];
    std::snprintf(tag, sizeof tag, "cos-basic(n=%g)", n);
    base.provenance = tag;
    out.push_back(std::move(base));
    append(out, log_pair(n));
  }
}

void derivative(std::vector<Relation>& out, const SuiteOptions& o) {
  for (double n : o.n_values)
    for (int m = 1; m <= o.m_max; ++m) out.push_back(derivative_family(m, n));
}

void sin(std::vector<Relation>& out, const SuiteOptions& o) {
  for (double n : o.n_values) {
    for (auto& r : sin_family(n)) out.push_back(std::move(r));
    for (double s : {-1.5, -0.5, 0.0, 0.5}) out.push_back(shifted_sin_companion(s, n));
  }
}

void recurrence(std::vector<Relation>& out, const SuiteOptions& o, const std::vector<RationalFunction>& fs) {
  for (const auto& f : fs)
    for (double n : o.n_values)
      for (int m = 0; m <= o.m_max; ++m) append(out, recurrence_relations(f, n, m));
}

void general(std::vector<Relation>& out, const SuiteOptions& o) {
  const auto quartic = parse_rational("1/(x^4+1)");
  const auto squared = inverse_quadratic_power(1);
  const auto base = inverse_quadratic_power(0);
  for (double n : o.n_values) {
    for (double s : {-0.5, 0.0, 0.5, 1.0, 1.5, 1.8}) out.push_back(shifted_cos_identity(s, n));
    for (double s : {0.0, 0.5, 1.0}) append(out, phase_split(s, n));
    for (double s : {0.0, 0.5}) out.push_back(general_even(quartic, n, s));
    out.push_back(general_even(squared, n, 0.5));
    out.push_back(general_even(base, n, 0.5));
  }
}

void closed(std::vector<Relation>& out, const SuiteOptions& o) {
  for (int r = o.r_min; r <= o.r_max; ++r) {
    for (double n : o.n_values) {
      for (double s : {-0.5, 0.0, 0.5, 1.0}) out.push_back(cos_pow_closed(r, n, s));
      out.push_back(x_sin_pow_closed(r, n, 0.0));
      if (n > 0.0) {
        out.push_back(bessel_form(r, n));
        out.push_back(generalized_log(r, n));
        out.push_back(odd_closing(r, n));
      }
    }
  }
}

void validate(const SuiteOptions& o) {
  if (o.n_values.empty()) throw DomainError("suite: empty n list");
  for (double n : o.n_values)
    if (!(n >= 0.0) || !std::isfinite(n)) throw DomainError("suite: n values must be finite and >= 0");
  if (o.m_max < 0) throw DomainError("suite: m must be >= 0");
  if (o.r_min < 0 || o.r_max < o.r_min) throw DomainError("suite: bad r range");
  if (!(o.tol > 0.0)) throw DomainError("suite: tol must be positive");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem1",       "derivative-family", "sin-family",
                                              "recurrence-even", "recurrence-odd",    "general-even",
                                              "closed-forms",    "all"};
  return names;
}

std::vector<Relation> build_suite(const std::string& name, const SuiteOptions& options) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw DomainError("unknown suite '" + name + "'");
  validate(options);
  std::vector<Relation> out;
  const bool all = name == "all";
  if (all || name == "theorem1") theorem1(out, options);
  if (all || name == "derivative-family") derivative(out, options);
  if (all || name == "sin-family") sin(out, options);
  if (all || name == "recurrence-even")
    recurrence(out, options, {inverse_quadratic_power(0), parse_rational("1/(x^4+1)")});
  if (all || name == "recurrence-odd") recurrence(out, options, {x_over_quadratic_power(0)});
  if (all || name == "general-even") general(out, options);
  if (all || name == "closed-forms") closed(out, options);
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("RAMQ_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

Report run_relations(const std::string& suite, const std::vector<Relation>& relations, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int jobs = std::max(1, std::min<int>(options.jobs > 0 ? options.jobs : default_jobs(),
                                             static_cast<int>(std::max<std::size_t>(relations.size(), 1))));

  std::vector<ReportEntry> entries(relations.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < relations.size(); k = next++) {
      try {
        entries[k] = make_entry(verify(relations[k], options.quad), options.tol);
      } catch (const Error& ex) {
        entries[k] = make_error_entry(relations[k], ex.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Report report;
  report.suite = suite;
  report.entries = std::move(entries);
  report.config.tol = options.tol;
  report.config.target_abs_tol = options.quad.target_abs_tol;
  report.config.max_core_levels = options.quad.max_core_levels;
  report.config.max_tail_cells = options.quad.max_tail_cells;
  report.config.acceleration_depth = options.quad.acceleration_depth;
  report.config.n_values = options.n_values;
  report.config.m_max = options.m_max;
  report.config.r_min = options.r_min;
  report.config.r_max = options.r_max;
  report.config.jobs = jobs;
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  report.wall_time = round15(elapsed.count());
  return report;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
  return run_relations(name, build_suite(name, options), options);
}

std::vector<TableRow> make_table(const SuiteOptions& options) {
  validate(options);
  std::vector<TableRow> rows;
  for (int r = options.r_min; r <= options.r_max; ++r) {
    for (double n : options.n_values) {
      if (!(n > 0.0)) throw DomainError("table: n values must be > 0 for the Bessel column");
      TableRow row;
      row.r = r;
      row.n = n;
      row.cos_closed = closed_cos_pow(r, n, 0.0);
      row.bessel = bessel_k_half(r, n);
      row.x_sin_closed = closed_x_sin_pow(r, n, 0.0);
      row.cos_quad = integrate_spec(IntegralSpec{inverse_quadratic_power(r), TrigKind::Cos, n, 0, 0.0, 0.0},
                                    options.quad)
                         .value;
      row.x_sin_quad = integrate_spec(IntegralSpec{x_over_quadratic_power(r), TrigKind::Sin, n, 0, 0.0, 0.0},
                                      options.quad)
                           .value;
      row.cos_residual = std::abs(row.cos_quad - row.cos_closed);
      row.bessel_residual = std::abs(row.bessel - row.cos_closed);
      row.x_sin_residual = std::abs(row.x_sin_quad - row.x_sin_closed);
      row.pass = row.cos_residual <= options.tol && row.x_sin_residual <= options.tol &&
                 row.bessel_residual <= 1e-12 * std::max(1.0, std::abs(row.cos_closed));
      for (double* v : {&row.cos_closed, &row.bessel, &row.x_sin_closed, &row.cos_quad, &row.x_sin_quad,
                        &row.cos_residual, &row.bessel_residual, &row.x_sin_residual})
        *v = round15(*v);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace ramq
