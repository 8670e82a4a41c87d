#include "ramq/rational.hpp"

#include <algorithm>
#include <cmath>

#include "ramq/errors.hpp"

namespace ramq {

namespace {

void sort_poles(std::vector<Pole>& poles) {
  std::sort(poles.begin(), poles.end(), [](const Pole& a, const Pole& b) {
    if (a.location.imag() != b.location.imag()) return a.location.imag() < b.location.imag();
    return a.location.real() < b.location.real();
  });
}

std::vector<Pole> poles_of(const Polynomial& den) {
  std::vector<Pole> out;
  if (den.degree() < 1) return out;
  for (const auto& r : find_roots(den)) out.push_back({r.value, r.multiplicity});
  return out;
}

// Merge poles that coincide to within the root-cluster radius.
std::vector<Pole> merge_poles(std::vector<Pole> poles) {
  const double rho = cluster_radius({});
  std::vector<Pole> out;
  for (const auto& p : poles) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const Pole& q) { return std::abs(q.location - p.location) <= rho; });
    if (it == out.end()) {
      out.push_back(p);
    } else {
      it->multiplicity += p.multiplicity;
    }
  }
  return out;
}

enum class PolyParity { Zero, Even, Odd, Neither };

PolyParity poly_parity(const Polynomial& p) {
  if (p.is_zero()) return PolyParity::Zero;
  bool has_even = false, has_odd = false;
  const auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == Complex(0.0)) continue;
    (k % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) return PolyParity::Neither;
  return has_even ? PolyParity::Even : PolyParity::Odd;
}

}  // namespace

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Neither: return "neither";
  }
  return "neither";
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function: zero denominator");
  poles_ = poles_of(den_);
  sort_poles(poles_);
  validate();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, std::vector<Pole> poles)
    : num_(std::move(num)), den_(std::move(den)), poles_(merge_poles(std::move(poles))) {
  if (den_.is_zero()) throw DomainError("rational function: zero denominator");
  sort_poles(poles_);
  int total = 0;
  for (const auto& p : poles_) total += p.multiplicity;
  if (total != den_.degree()) throw DomainError("rational function: pole multiplicities do not match deg(den)");
  validate();
}

RationalFunction RationalFunction::from_factors(Polynomial num, Complex den_scale,
                                                std::span<const std::pair<Polynomial, int>> den_factors) {
  Polynomial den = Polynomial::constant(den_scale);
  std::vector<Pole> poles;
  for (const auto& [base, power] : den_factors) {
    if (power < 0) throw DomainError("rational function: negative factor exponent");
    if (base.is_zero()) throw DomainError("rational function: zero denominator factor");
    den *= pow(base, power);
    if (base.degree() < 1 || power == 0) continue;
    for (const auto& r : find_roots(base)) poles.push_back({r.value, r.multiplicity * power});
  }
  return RationalFunction(std::move(num), std::move(den), std::move(poles));
}

RationalFunction RationalFunction::from_poles(Polynomial num, Complex lead, std::vector<Pole> poles) {
  std::vector<Root> roots;
  for (const auto& p : poles) roots.push_back({p.location, p.multiplicity});
  Polynomial den = from_roots(roots, lead);
  return RationalFunction(std::move(num), std::move(den), std::move(poles));
}

void RationalFunction::validate() {
  if (den_.degree() - num_.degree() < 1)
    throw DegreeGapError("rational function: deg(den) must exceed deg(num) by at least 1");
  for (const auto& p : poles_) {
    if (p.multiplicity < 1) throw DomainError("rational function: pole multiplicity must be positive");
    if (std::abs(p.location.imag()) < kRealAxisTolerance)
      throw RealAxisPole("rational function: pole on the real axis");
  }
  real_ = num_.is_real() && den_.is_real();
}

double RationalFunction::eval_real(double x) const {
  if (real_) return num_.eval_real(x) / den_.eval_real(x);
  return (*this)(Complex(x, 0.0)).real();
}

RationalFunction RationalFunction::scaled(Complex c) const {
  return RationalFunction(num_ * c, den_ * c, poles_);
}

Parity classify_parity(const RationalFunction& f) {
  // A common power of z in num and den carries no parity information.
  const int common = f.num().is_zero() ? 0 : std::min(f.num().low_order(), f.den().low_order());
  const auto pn = poly_parity(f.num().shifted_down(common));
  const auto pd = poly_parity(f.den().shifted_down(common));
  if (pn == PolyParity::Zero) return Parity::Even;
  if (pn == PolyParity::Neither || pd == PolyParity::Neither) return Parity::Neither;
  return pn == pd ? Parity::Even : Parity::Odd;
}

std::vector<Pole> upper_half_poles(const RationalFunction& f) {
  std::vector<Pole> out;
  for (const auto& p : f.poles()) {
    if (std::abs(p.location.imag()) < kRealAxisTolerance) throw RealAxisPole("upper_half_poles: pole on the real axis");
    if (p.location.imag() > 0.0) out.push_back(p);
  }
  return out;
}

int degree_gap(const RationalFunction& f) { return f.den().degree() - std::max(f.num().degree(), 0); }

}  // namespace ramq
