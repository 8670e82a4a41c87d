#pragma once

namespace ramq {

/// Generalized binomial coefficient C(s, j) as the falling-factorial product.
double binom_general(double s, int j);

/// C(r + k, k) / 2^(r + k), the shared weight of the pole-order sums below.
double pole_order_weight(int r, int k);

/// n^p / p!, defined as 0 for p < 0.
double power_over_factorial(double n, int p);

/**
 * int_0^inf cos(nx - pi s/2) x^s / (x^2+1)^(r+1) dx in closed form:
 * (pi/2) e^{-n} sum_k w(r,k) sum_{j<=r-k} (-1)^j C(s,j) n^(r-k-j)/(r-k-j)!.
 * Requires -1 < s < 2(r+1); throws DomainError otherwise.
 */
double closed_cos_pow(int r, double n, double s);

/**
 * int_0^inf x sin(nx - pi s/2) x^s / (x^2+1)^(r+1) dx, the same sum with
 * C(s+1, j). At s = 0 the bracketed difference form is used. At n = 0 and
 * s = 0 the integrand vanishes identically and 0 is returned.
 * Requires -2 < s < 2r + 1.
 */
double closed_x_sin_pow(int r, double n, double s);

/// (n/2)^(r+1/2) sqrt(pi)/r! K_{r+1/2}(n) with K from its finite sum; n > 0.
double bessel_k_half(int r, double n);

/// K_{r+1/2}(n) for integer r >= 0 and n > 0.
double bessel_k_half_order(int r, double n);

/// -e^{-n} sum_k w(r,k) sum_{j=1}^{r-k} (1/j) n^(r-k-j)/(r-k-j)!.
double generalized_log_rhs(int r, double n);

/// e^{-n} sum_k w(r,k) sum_{j=2}^{r-k} n^(r-k-j)/(j(j-1)(r-k-j)!).
double odd_closing_tail_sum(int r, double n);

}  // namespace ramq
