#pragma once

#include <functional>
#include <span>

#include "ramq/integral_spec.hpp"

namespace ramq {

struct QuadratureConfig {
  double target_abs_tol = 1e-10;
  int max_core_levels = 10;
  int max_tail_cells = 4096;
  int acceleration_depth = 12;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int core_subdivisions = 0;  // tanh-sinh levels used on [0, X0]
  int tail_cells_used = 0;
  bool accelerated = false;
  bool converged = true;

  // Diagnostics.
  double core_value = 0.0;
  double tail_value = 0.0;
  double tail_start = 0.0;
};

/**
 * Numerical value of an IntegralSpec.
 *
 * [0, X0] is handled by a tanh-sinh rule whose level is doubled until two
 * levels agree; this absorbs the x^s log^m x behaviour at the origin. X0 is
 * the first zero of the trig factor at or beyond 1. For n > 0 the tail
 * [X0, inf) is cut at consecutive zeros of the trig factor, each half-period
 * cell is integrated by a fixed Gauss-Legendre rule, and the alternating
 * sequence of partial sums is accelerated by iterated Euler averaging. For
 * n = 0 the tail is mapped onto (0, 1/X0] by x = 1/t.
 *
 * Throws DomainError when the spec fails its convergence gate. When the
 * budgets run out the best value is returned with converged = false.
 */
QuadratureResult integrate_spec(const IntegralSpec& spec, const QuadratureConfig& cfg = {});

/// int_0^inf cos(nx - pi s/2) f(x) x^s dx.
QuadratureResult integrate_phase(const RationalFunction& f, double n, double s, const QuadratureConfig& cfg = {});

/// Left end X0 of the oscillatory tail (1 when n = 0).
double tail_start(const IntegralSpec& spec);

/**
 * Test oracle for the accelerated tail: the plain sum over `cells`
 * half-period cells starting at X0, plus the two-term integration-by-parts
 * estimate of what lies beyond. Returns 0 for cells = 0. Requires n > 0.
 */
double tail_brute_oracle(const IntegralSpec& spec, int cells);

/// Plain partial sums of the first `cells` tail cells (index 0 is the first cell).
std::vector<double> tail_partial_sums(const IntegralSpec& spec, int cells);

struct AcceleratedSum {
  double value;
  double delta;  // |depth d - depth d-1|
};

/// Iterated averaging of consecutive partial sums, depth = sums.size() - 1.
AcceleratedSum euler_average(std::span<const double> partial_sums);

struct TanhSinhResult {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  int levels = 0;
  bool converged = false;
};

/// tanh-sinh rule on [0, b]; fn may be singular at 0.
TanhSinhResult tanh_sinh(const std::function<double(double)>& fn, double b, double tol, int max_levels);

}  // namespace ramq
