#include "ramq/residue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ramq/errors.hpp"
#include "ramq/jet.hpp"

namespace ramq {

namespace {

constexpr Complex kI(0.0, 1.0);

}  // namespace

Complex residue_at(const RationalFunction& f, const Pole& pole, const WeightParams& w) {
  if (pole.location.imag() <= 0.0) throw DomainError("residue_at: pole must lie in the upper half-plane");
  const Complex z0 = pole.location;
  const int mult = pole.multiplicity;
  const int order = mult - 1 + kResidueGuardOrder;

  // den(z) / (z - z0)^mult, from the Taylor shift of den.
  const Jet den_shift = jet_from_poly(f.den(), z0, order + mult);
  const double den_scale = std::max(f.den().max_abs_coeff(), 1.0);
  std::vector<Complex> reduced(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) reduced[static_cast<std::size_t>(j)] = den_shift[j + mult];
  if (std::abs(reduced[0]) <= 1e-12 * den_scale)
    throw PoleOrderMismatch("residue_at: denominator vanishes beyond the stated pole order");

  const Jet z = Jet::variable(z0, order);
  Jet alpha = jet_from_poly(f.num(), z0, order) * jet_reciprocal(Jet(z0, std::move(reduced)));
  if (w.n != 0.0) alpha = alpha * jet_exp(z * (kI * w.n));
  if (w.s != Complex(0.0)) alpha = alpha * jet_pow_complex(z, w.s);
  if (w.m > 0) alpha = alpha * jet_pow_int(jet_log(z), w.m);
  return alpha[mult - 1];
}

Complex residue_sum(const RationalFunction& f, const WeightParams& w) {
  Complex total = 0.0;
  for (const auto& p : upper_half_poles(f)) total += residue_at(f, p, w);
  return 2.0 * std::numbers::pi * kI * total;
}

double default_oracle_radius(const RationalFunction& f, const Pole& pole) {
  double nearest = std::numeric_limits<double>::infinity();
  for (const auto& q : f.poles()) {
    const double d = std::abs(q.location - pole.location);
    if (d > 0.0) nearest = std::min(nearest, d);
  }
  return std::min(0.5 * nearest, 0.5 * pole.location.imag());
}

Complex contour_oracle(const RationalFunction& f, const Pole& pole, const WeightParams& w, double radius,
                       const ContourOracleOptions& options) {
  const Complex z0 = pole.location;
  for (const auto& q : f.poles()) {
    const double d = std::abs(q.location - z0);
    if (d > 0.0 && d < 2.0 * radius) throw RadiusTooLarge("contour_oracle: circle too close to another pole");
  }
  if (radius >= z0.imag()) throw RadiusTooLarge("contour_oracle: circle leaves the upper half-plane");

  auto integrand = [&](Complex z) {
    Complex v = f(z);
    if (w.n != 0.0) v *= std::exp(kI * w.n * z);
    const Complex lz = std::log(z);
    if (w.s != Complex(0.0)) v *= std::exp(w.s * lz);
    for (int k = 0; k < w.m; ++k) v *= lz;
    return v;
  };

  // (1/2 pi i) oint g dz = mean over theta of g(z0 + r e^{i theta}) r e^{i theta}.
  struct Sample {
    Complex mean;
    double mean_abs;
  };
  auto trapezoid = [&](int points) {
    Complex sum = 0.0;
    double sum_abs = 0.0;
    for (int k = 0; k < points; ++k) {
      const Complex e = std::polar(1.0, 2.0 * std::numbers::pi * k / points);
      const Complex term = integrand(z0 + radius * e) * (radius * e);
      sum += term;
      sum_abs += std::abs(term);
    }
    return Sample{sum / static_cast<double>(points), sum_abs / points};
  };

  int points = options.min_points;
  Sample prev = trapezoid(points);
  while (points < options.max_points) {
    points *= 2;
    const Sample cur = trapezoid(points);
    if (std::abs(cur.mean - prev.mean) <= options.rel_tol * std::max(std::abs(cur.mean), cur.mean_abs)) return cur.mean;
    prev = cur;
  }
  throw NonConvergence("contour_oracle: trapezoid rule did not settle");
}

}  // namespace ramq
