#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramq/integral_spec.hpp"
#include "ramq/quadrature.hpp"

namespace ramq {

struct Term {
  Complex coefficient;
  IntegralSpec spec;

  friend bool operator==(const Term&, const Term&) = default;
};

/**
 * sum_k coefficient_k * integral(spec_k) = rhs.
 *
 * Builders return normalized relations: zero coefficients dropped, equal
 * specs merged, terms in canonical order and the leading term (highest log
 * power, cosine before sine) scaled to coefficient 1.
 */
struct Relation {
  std::vector<Term> terms;
  Complex rhs = 0.0;
  std::string provenance;

  Relation normalized() const;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// 1/(x^2+1)^(r+1) with the exact pole order r+1 at +-i.
RationalFunction inverse_quadratic_power(int r);
/// x/(x^2+1)^(r+1).
RationalFunction x_over_quadratic_power(int r);

/**
 * Closed-form value of a spec when one is known: cos(nx - pi s/2) x^s over
 * (x^2+1)^(r+1), and x sin(nx - pi s/2) x^s over the same, both with m = 0
 * and phase = s.
 */
std::optional<double> known_closed_form(const IntegralSpec& spec);

using KnownValue = std::function<std::optional<double>(const IntegralSpec&)>;

/// Moves every term with a known value to the right-hand side, then normalizes.
Relation fold_known(const Relation& relation, const KnownValue& known = known_closed_form);

/**
 * Same spec set, and coefficients and rhs equal to within rel_tol relative to
 * the larger magnitude (absolute below 1). Both sides are normalized first.
 */
bool structural_equal(const Relation& a, const Relation& b, double rel_tol = 1e-14);

/**
 * The two log relations for 1/(x^2+1), n > 0:
 *   int sin/(x^2+1) + (2/pi) int cos log/(x^2+1) = 0,
 *   int sin log/(x^2+1) + (1/pi) int cos log^2/(x^2+1) = pi^2 e^{-n} / 8.
 */
std::pair<Relation, Relation> log_pair(double n);

/**
 * Real and imaginary parts of
 *   S = +-sum_k C(m,k) (i pi)^(m-k) (I_k - i J_k) + (I_m + i J_m),
 * sign + for even f and - for odd f, where I_k, J_k are the cosine and sine
 * integrals of f log^k x and S = 2 pi i sum Res(e^{inz} f(z) log^m z) over
 * the upper half-plane. Requires n > 0; throws ParityError for f of mixed parity.
 */
std::pair<Relation, Relation> recurrence_relations(const RationalFunction& f, double n, int m);

/// 0 = sum_k C(m,k) (pi/2)^k (-1)^floor(k/2) {I_(m-k) | J_(m-k)} for f = 1/(x^2+1); m >= 1, n > 0.
Relation derivative_family(int m, double n);

/**
 * For f = x/(x^2+1), n > 0:
 *   J_0 = (pi/2) e^{-n},  J_1 - (pi/2) I_0 = 0,  J_2 - pi I_1 = pi^3 e^{-n}/8.
 */
std::vector<Relation> sin_family(double n);

/**
 * Real and imaginary parts of
 *   pi e^{-n} e^{i pi s/2} = int (e^{inx} + e^{-inx} e^{i pi s}) x^s/(x^2+1) dx
 * for s in (-1, 2); DomainError otherwise.
 */
std::pair<Relation, Relation> phase_split(double s, double n);

/// int cos(nx - pi s/2) x^s/(x^2+1) dx = (pi/2) e^{-n}; s in (-1, 2).
Relation shifted_cos_identity(double s, double n);

/// int x sin(nx - pi s/2) x^s/(x^2+1) dx = (pi/2) e^{-n}; s in (-2, 1).
Relation shifted_sin_companion(double s, double n);

/**
 * int cos(nx - pi s/2) f(x) x^s dx = (pi i / e^{i pi s/2}) sum Res(e^{inz} f(z) z^s)
 * over upper-half-plane poles, for even f with degree gap at least 2.
 * Throws ParityError or DegreeGapError.
 */
Relation general_even(const RationalFunction& f, double n, double s);

/// int sin/(x^2+1)^(r+1) + (2/pi) int cos log/(x^2+1)^(r+1) = generalized_log_rhs(r, n); n > 0.
Relation generalized_log(int r, double n);

/**
 * With g = 1/(x^2+1)^(r+1), n > 0:
 *   int x cos g - (2/pi) int x sin log g - (2/pi) int cos g + (2/pi) int x sin g
 *     = -odd_closing_tail_sum(r, n).
 */
Relation odd_closing(int r, double n);

/// int cos(nx - pi s/2) x^s/(x^2+1)^(r+1) dx = closed_cos_pow(r, n, s).
Relation cos_pow_closed(int r, double n, double s);

/// int x sin(nx - pi s/2) x^s/(x^2+1)^(r+1) dx = closed_x_sin_pow(r, n, s).
Relation x_sin_pow_closed(int r, double n, double s);

/// int cos(nx)/(x^2+1)^(r+1) dx = bessel_k_half(r, n); n > 0.
Relation bessel_form(int r, double n);

struct VerifiedRelation {
  Relation relation;
  std::vector<QuadratureResult> values;  // one per term
  Complex lhs = 0.0;
  double residual = 0.0;         // |lhs - rhs|
  double scaled_residual = 0.0;  // residual / (1 + |rhs| + sum |coeff * value|)
};

/// Integrates every term and forms the residual. Spec gate failures throw DomainError.
VerifiedRelation verify(const Relation& relation, const QuadratureConfig& cfg = {});

}  // namespace ramq
