#include "ramq/closed_forms.hpp"

#include <cmath>
#include <numbers>

#include "ramq/errors.hpp"

namespace ramq {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double binom_int(int a, int b) { return factorial(a) / (factorial(b) * factorial(a - b)); }

}  // namespace

double binom_general(double s, int j) {
  if (j < 0) return 0.0;
  double c = 1.0;
  for (int i = 0; i < j; ++i) c *= (s - i) / (i + 1);
  return c;
}

double pole_order_weight(int r, int k) { return binom_int(r + k, k) / std::ldexp(1.0, r + k); }

double power_over_factorial(double n, int p) {
  if (p < 0) return 0.0;
  return std::pow(n, p) / factorial(p);
}

double closed_cos_pow(int r, double n, double s) {
  if (r < 0) throw DomainError("closed_cos_pow: r must be nonnegative");
  if (!(s > -1.0 && s < 2.0 * (r + 1))) throw DomainError("closed_cos_pow: s outside (-1, 2(r+1))");
  double sum = 0.0;
  for (int k = 0; k <= r; ++k) {
    double inner = 0.0;
    for (int j = 0; j <= r - k; ++j)
      inner += (j % 2 == 0 ? 1.0 : -1.0) * binom_general(s, j) * power_over_factorial(n, r - k - j);
    sum += pole_order_weight(r, k) * inner;
  }
  return 0.5 * kPi * std::exp(-n) * sum;
}

double closed_x_sin_pow(int r, double n, double s) {
  if (r < 0) throw DomainError("closed_x_sin_pow: r must be nonnegative");
  if (!(s > -2.0 && s < 2.0 * r + 1.0)) throw DomainError("closed_x_sin_pow: s outside (-2, 2r+1)");
  if (n == 0.0 && s == 0.0) return 0.0;
  double sum = 0.0;
  for (int k = 0; k <= r; ++k) {
    double inner = 0.0;
    if (s == 0.0) {
      inner = power_over_factorial(n, r - k) - power_over_factorial(n, r - k - 1);
    } else {
      for (int j = 0; j <= r - k; ++j)
        inner += (j % 2 == 0 ? 1.0 : -1.0) * binom_general(s + 1.0, j) * power_over_factorial(n, r - k - j);
    }
    sum += pole_order_weight(r, k) * inner;
  }
  return 0.5 * kPi * std::exp(-n) * sum;
}

double bessel_k_half_order(int r, double n) {
  if (r < 0) throw DomainError("bessel_k_half_order: r must be nonnegative");
  if (!(n > 0.0)) throw DomainError("bessel_k_half_order: argument must be positive");
  // K_{r+1/2}(n) = sqrt(pi/(2n)) e^{-n} sum_k (r+k)! / (k! (r-k)! (2n)^k)
  double sum = 0.0;
  for (int k = 0; k <= r; ++k) sum += factorial(r + k) / (factorial(k) * factorial(r - k) * std::pow(2.0 * n, k));
  return std::sqrt(kPi / (2.0 * n)) * std::exp(-n) * sum;
}

double bessel_k_half(int r, double n) {
  return std::pow(0.5 * n, r + 0.5) * std::sqrt(kPi) / factorial(r) * bessel_k_half_order(r, n);
}

double generalized_log_rhs(int r, double n) {
  double sum = 0.0;
  for (int k = 0; k <= r; ++k) {
    double inner = 0.0;
    for (int j = 1; j <= r - k; ++j) inner += power_over_factorial(n, r - k - j) / j;
    sum += pole_order_weight(r, k) * inner;
  }
  return -std::exp(-n) * sum;
}

double odd_closing_tail_sum(int r, double n) {
  double sum = 0.0;
  for (int k = 0; k <= r; ++k) {
    double inner = 0.0;
    for (int j = 2; j <= r - k; ++j) inner += power_over_factorial(n, r - k - j) / (j * (j - 1.0));
    sum += pole_order_weight(r, k) * inner;
  }
  return std::exp(-n) * sum;
}

}  // namespace ramq
