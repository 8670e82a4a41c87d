#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ramq {

using Complex = std::complex<double>;

/**
 * Univariate polynomial with complex coefficients stored in ascending degree
 * order. Trailing zero coefficients are stripped on construction, so the
 * leading coefficient is nonzero unless the polynomial is identically zero.
 */
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial constant(Complex c);
  /// The monomial c * z^k.
  static Polynomial monomial(Complex c, int k);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// True when every coefficient has an exactly zero imaginary part.
  bool is_real() const;

  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex coeff(int k) const;
  Complex leading() const;
  /// Index of the lowest nonzero coefficient (the power of z dividing p).
  int low_order() const;
  double max_abs_coeff() const;

  Complex operator()(Complex z) const;
  double eval_real(double x) const;

  Polynomial derivative() const;
  /// p(z) / z^k, dropping the k lowest coefficients.
  Polynomial shifted_down(int k) const;
  /// p(-z).
  Polynomial reflected() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(Complex c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, Complex c) { return a *= c; }
  friend Polynomial operator*(Complex c, Polynomial a) { return a *= c; }
  Polynomial operator-() const { return *this * Complex(-1.0); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

Polynomial pow(const Polynomial& p, int k);

/// Horner evaluation of p at z.
Complex poly_eval(const Polynomial& p, Complex z);

/// A root together with its multiplicity.
struct Root {
  Complex value;
  int multiplicity = 1;
};

struct RootFinderOptions {
  /// Backward-error bound |p(r)| <= eps_root * sum_k |c_k| |r|^k required of
  /// every returned root.
  double eps_root = 1e-10;
  int max_iter = 500;
};

/// Cluster radius used to merge numerically split multiple roots.
double cluster_radius(const RootFinderOptions& options);

/**
 * All roots of a nonconstant polynomial, found by Aberth-Ehrlich simultaneous
 * iteration. Roots closer than cluster_radius() are merged into one entry at
 * the cluster centroid with the summed multiplicity. Multiplicities add up
 * to deg(p). Output is sorted by imaginary part, then real part.
 *
 * Throws DomainError for constant p and NonConvergence when a root fails the
 * backward-error test after max_iter sweeps.
 */
std::vector<Root> find_roots(const Polynomial& p, const RootFinderOptions& options = {});

/// Expanded lead * prod (z - r)^m.
Polynomial from_roots(std::span<const Root> roots, Complex lead = 1.0);

}  // namespace ramq
