#pragma once

#include <string>

#include "ramq/rational.hpp"

namespace ramq {

enum class TrigKind { Cos, Sin };

std::string to_string(TrigKind k);

/**
 * One member of the integral family
 *
 *   int_0^inf f(x) trig(n x - phase * pi/2) x^s log^m x dx.
 *
 * phase is measured in units of pi/2, so phase = s gives the
 * cos(nx - pi s/2) integrands. A nonzero phase is only allowed with m = 0.
 */
struct IntegralSpec {
  RationalFunction f;
  TrigKind kind = TrigKind::Cos;
  double n = 1.0;
  int m = 0;
  double s = 0.0;
  double phase = 0.0;

  friend bool operator==(const IntegralSpec&, const IntegralSpec&) = default;
};

/// True when the trig factor is identically zero (sin with n = 0, phase = 0).
bool trivially_zero(const IntegralSpec& spec);

/**
 * Convergence gate. With e = s + deg(num) - deg(den) the integral converges
 * at infinity for e < 0 when n > 0 and for e < -1 when n = 0; at the origin
 * it needs v + s (+1 for an unshifted sine) > -1, v the order of vanishing
 * of num at 0. Throws DomainError when the gate fails.
 */
void check_convergence(const IntegralSpec& spec);

std::string describe(const IntegralSpec& spec);

}  // namespace ramq
