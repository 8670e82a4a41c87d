#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramq/polynomial.hpp"

namespace ramq {

/// Denominator roots with |Im| below this are treated as real-axis poles.
inline constexpr double kRealAxisTolerance = 1e-9;

struct Pole {
  Complex location;
  int multiplicity = 1;
};

enum class Parity { Even, Odd, Neither };

std::string to_string(Parity p);

/**
 * f(z) = num(z) / den(z) with no poles on the real axis and
 * deg(den) - deg(num) >= 1. The full pole list of den is computed once at
 * construction; values are immutable afterwards.
 */
class RationalFunction {
 public:
  /// Poles located numerically with find_roots (clustered multiplicities).
  RationalFunction(Polynomial num, Polynomial den);

  /**
   * Denominator given as a product of integer powers of base polynomials.
   * Multiplicities come from the exponents, so repeated factors such as
   * (z^2+1)^3 have exact pole orders.
   */
  static RationalFunction from_factors(Polynomial num, Complex den_scale,
                                       std::span<const std::pair<Polynomial, int>> den_factors);

  /// Denominator lead * prod (z - p)^m given directly by its poles.
  static RationalFunction from_poles(Polynomial num, Complex lead, std::vector<Pole> poles);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  /// Every denominator root with multiplicity, sorted by (imag, real).
  std::span<const Pole> poles() const { return poles_; }

  Complex operator()(Complex z) const { return num_(z) / den_(z); }
  /// Evaluation on the real line; uses a real Horner path when possible.
  double eval_real(double x) const;
  bool has_real_coeffs() const { return real_; }

  /// Same function with num and den multiplied by c.
  RationalFunction scaled(Complex c) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RationalFunction(Polynomial num, Polynomial den, std::vector<Pole> poles);
  void validate();

  Polynomial num_;
  Polynomial den_;
  std::vector<Pole> poles_;
  bool real_ = false;
};

Parity classify_parity(const RationalFunction& f);
/// Poles with strictly positive imaginary part, sorted by (imag, real).
std::vector<Pole> upper_half_poles(const RationalFunction& f);
int degree_gap(const RationalFunction& f);

}  // namespace ramq
