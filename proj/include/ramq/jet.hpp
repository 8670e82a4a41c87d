#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "ramq/errors.hpp"
#include "ramq/polynomial.hpp"

namespace ramq {

inline constexpr double kJetDivisionEpsilon = 1e-12;
inline constexpr double kJetBranchEpsilon = 1e-9;

/**
 * Argument of w in the branch -pi/2 < arg <= 3pi/2. On the open upper
 * half-plane this coincides with the principal argument.
 */
template <typename Real>
Real arg_branch(const std::complex<Real>& w) {
  using std::numbers::pi_v;
  Real a = std::arg(w);
  if (a <= -pi_v<Real> / 2) a += 2 * pi_v<Real>;
  return a;
}

/**
 * Truncated Taylor expansion sum_j a_j (z - z0)^j, j = 0..K, of an analytic
 * function about the base point z0.
 *
 * Binary operations require equal base and order; nothing is truncated or
 * padded implicitly. The scalar is a template parameter so a wider real type
 * can be dropped in without touching callers of Jet.
 */
template <typename Real>
class BasicJet {
 public:
  using Scalar = std::complex<Real>;

  BasicJet(Scalar base, std::vector<Scalar> coeffs) : base_(base), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, Scalar(0));
  }

  static BasicJet constant(Scalar base, Scalar value, int order) {
    std::vector<Scalar> c(static_cast<std::size_t>(order) + 1, Scalar(0));
    c[0] = value;
    return BasicJet(base, std::move(c));
  }

  /// The identity function z = z0 + (z - z0).
  static BasicJet variable(Scalar base, int order) {
    std::vector<Scalar> c(static_cast<std::size_t>(order) + 1, Scalar(0));
    c[0] = base;
    if (order >= 1) c[1] = Scalar(1);
    return BasicJet(base, std::move(c));
  }

  Scalar base() const { return base_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
  Scalar& operator[](int j) { return coeffs_[static_cast<std::size_t>(j)]; }

  /// Explicit change of order: drops or zero-pads high coefficients.
  BasicJet with_order(int order) const {
    auto c = coeffs_;
    c.resize(static_cast<std::size_t>(order) + 1, Scalar(0));
    return BasicJet(base_, std::move(c));
  }

  BasicJet& operator+=(const BasicJet& o) {
    check_compatible(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }
  BasicJet& operator-=(const BasicJet& o) {
    check_compatible(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
  }
  BasicJet& operator*=(Scalar c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend BasicJet operator+(BasicJet a, const BasicJet& b) { return a += b; }
  friend BasicJet operator-(BasicJet a, const BasicJet& b) { return a -= b; }
  friend BasicJet operator*(BasicJet a, Scalar c) { return a *= c; }
  friend BasicJet operator*(Scalar c, BasicJet a) { return a *= c; }

  /// Truncated Cauchy product.
  friend BasicJet operator*(const BasicJet& a, const BasicJet& b) {
    a.check_compatible(b);
    const int k = a.order();
    std::vector<Scalar> c(static_cast<std::size_t>(k) + 1, Scalar(0));
    for (int i = 0; i <= k; ++i)
      for (int j = 0; i + j <= k; ++j) c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    return BasicJet(a.base_, std::move(c));
  }

  void check_compatible(const BasicJet& o) const {
    if (base_ != o.base_ || order() != o.order())
      throw BaseMismatch("jet: operands differ in base point or order");
  }

 private:
  Scalar base_;
  std::vector<Scalar> coeffs_;
};

using Jet = BasicJet<double>;

template <typename Real>
BasicJet<Real> jet_add(const BasicJet<Real>& a, const BasicJet<Real>& b) { return a + b; }

template <typename Real>
BasicJet<Real> jet_sub(const BasicJet<Real>& a, const BasicJet<Real>& b) { return a - b; }

template <typename Real>
BasicJet<Real> jet_scale(const BasicJet<Real>& a, std::complex<Real> c) { return a * c; }

template <typename Real>
BasicJet<Real> jet_mul(const BasicJet<Real>& a, const BasicJet<Real>& b) { return a * b; }

template <typename Real>
BasicJet<Real> jet_reciprocal(const BasicJet<Real>& a) {
  using Scalar = std::complex<Real>;
  if (std::abs(a[0]) < Real(kJetDivisionEpsilon)) throw DivisionByZeroJet("jet_reciprocal: vanishing constant term");
  const int k = a.order();
  std::vector<Scalar> b(static_cast<std::size_t>(k) + 1, Scalar(0));
  const Scalar inv = Scalar(1) / a[0];
  b[0] = inv;
  for (int j = 1; j <= k; ++j) {
    Scalar acc(0);
    for (int i = 1; i <= j; ++i) acc += a[i] * b[static_cast<std::size_t>(j - i)];
    b[static_cast<std::size_t>(j)] = -acc * inv;
  }
  return BasicJet<Real>(a.base(), std::move(b));
}

/// exp of a jet from (e^a)' = a' e^a.
template <typename Real>
BasicJet<Real> jet_exp(const BasicJet<Real>& a) {
  using Scalar = std::complex<Real>;
  const int k = a.order();
  std::vector<Scalar> b(static_cast<std::size_t>(k) + 1, Scalar(0));
  b[0] = std::exp(a[0]);
  for (int j = 1; j <= k; ++j) {
    Scalar acc(0);
    for (int i = 1; i <= j; ++i) acc += Real(i) * a[i] * b[static_cast<std::size_t>(j - i)];
    b[static_cast<std::size_t>(j)] = acc / Real(j);
  }
  return BasicJet<Real>(a.base(), std::move(b));
}

/// log of a jet from (log a)' = a'/a, leading value in the -pi/2 < arg <= 3pi/2 branch.
template <typename Real>
BasicJet<Real> jet_log(const BasicJet<Real>& a) {
  using Scalar = std::complex<Real>;
  using std::numbers::pi_v;
  if (std::abs(a[0]) < Real(kJetDivisionEpsilon)) throw DivisionByZeroJet("jet_log: vanishing constant term");
  const Real principal = std::arg(a[0]);
  if (std::abs(principal + pi_v<Real> / 2) < Real(kJetBranchEpsilon))
    throw BranchCut("jet_log: leading value on the branch cut");
  const int k = a.order();
  std::vector<Scalar> l(static_cast<std::size_t>(k) + 1, Scalar(0));
  l[0] = Scalar(std::log(std::abs(a[0])), arg_branch(a[0]));
  const Scalar inv = Scalar(1) / a[0];
  for (int j = 1; j <= k; ++j) {
    Scalar acc = a[j];
    for (int i = 1; i < j; ++i) acc -= Real(i) / Real(j) * l[static_cast<std::size_t>(i)] * a[j - i];
    l[static_cast<std::size_t>(j)] = acc * inv;
  }
  return BasicJet<Real>(a.base(), std::move(l));
}

/// a^s = exp(s log a) in the same branch as jet_log.
template <typename Real>
BasicJet<Real> jet_pow_complex(const BasicJet<Real>& a, std::complex<Real> s) {
  if (s == std::complex<Real>(0)) {
    if (std::abs(a[0]) < Real(kJetDivisionEpsilon)) throw DivisionByZeroJet("jet_pow_complex: vanishing constant term");
    return BasicJet<Real>::constant(a.base(), Real(1), a.order());
  }
  return jet_exp(jet_log(a) * s);
}

/// a^k by repeated multiplication; k >= 0.
template <typename Real>
BasicJet<Real> jet_pow_int(const BasicJet<Real>& a, int k) {
  auto out = BasicJet<Real>::constant(a.base(), Real(1), a.order());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

/// Taylor shift of p to base z0, truncated (or zero padded) at order K.
Jet jet_from_poly(const Polynomial& p, Complex z0, int order);

}  // namespace ramq
