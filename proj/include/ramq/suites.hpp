#pragma once

#include <string>
#include <vector>

#include "ramq/report.hpp"

namespace ramq {

struct SuiteOptions {
  std::vector<double> n_values{0.5, 1.0, 2.0};
  int m_max = 3;
  int r_min = 0;
  int r_max = 4;
  double tol = 1e-8;
  QuadratureConfig quad{};
  int jobs = 0;  // 0 selects default_jobs()
};

/// theorem1, derivative-family, sin-family, recurrence-even, recurrence-odd, general-even, closed-forms, all.
const std::vector<std::string>& suite_names();

/// The relations of a suite in report order. Throws DomainError for an unknown name or bad options.
std::vector<Relation> build_suite(const std::string& name, const SuiteOptions& options);

/// Verifies relations on up to `jobs` threads; entries keep the input order.
Report run_relations(const std::string& suite, const std::vector<Relation>& relations, const SuiteOptions& options);

Report run_suite(const std::string& name, const SuiteOptions& options);

/// RAMQ_JOBS when set to a positive integer, else the hardware thread count.
int default_jobs();

/// Closed forms and quadrature for r in [r_min, r_max] and every n (n > 0).
std::vector<TableRow> make_table(const SuiteOptions& options);

}  // namespace ramq
