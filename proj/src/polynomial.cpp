#include "ramq/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "ramq/errors.hpp"

namespace ramq {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(Complex c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(Complex c, int k) {
  std::vector<Complex> v(static_cast<std::size_t>(k) + 1, Complex(0.0));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

bool Polynomial::is_real() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c.imag() == 0.0; });
}

Complex Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex Polynomial::leading() const { return is_zero() ? Complex(0.0) : coeffs_.back(); }

int Polynomial::low_order() const {
  for (int k = 0; k <= degree(); ++k)
    if (coeffs_[static_cast<std::size_t>(k)] != Complex(0.0)) return k;
  return 0;
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::operator()(Complex z) const { return poly_eval(*this, z); }

double Polynomial::eval_real(double x) const {
  double y = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) y = y * x + it->real();
  return y;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted_down(int k) const {
  if (k <= 0) return *this;
  if (k > degree()) return {};
  return Polynomial(std::vector<Complex>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial Polynomial::reflected() const {
  auto v = coeffs_;
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Complex(0.0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Complex> out(coeffs_.size() + other.coeffs_.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

Polynomial pow(const Polynomial& p, int k) {
  Polynomial out = Polynomial::constant(1.0);
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

Complex poly_eval(const Polynomial& p, Complex z) {
  const auto c = p.coeffs();
  Complex y = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) y = y * z + *it;
  return y;
}

namespace {

struct HornerResult {
  Complex value;
  Complex derivative;
  double magnitude;  // sum |c_k| |z|^k
};

HornerResult horner_with_derivative(std::span<const Complex> c, Complex z) {
  Complex p = 0.0, dp = 0.0;
  double mag = 0.0;
  const double az = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
    mag = mag * az + std::abs(*it);
  }
  return {p, dp, mag};
}

// Largest Fujiwara-type bound on root moduli, used for the initial circle.
double root_radius_bound(std::span<const Complex> c) {
  const int n = static_cast<int>(c.size()) - 1;
  const double lead = std::abs(c.back());
  double bound = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double ratio = std::abs(c[static_cast<std::size_t>(n - k)]) / lead;
    if (ratio > 0.0) bound = std::max(bound, std::pow(ratio, 1.0 / k));
  }
  return bound;
}

std::vector<Complex> aberth_iterate(const Polynomial& p, const RootFinderOptions& options) {
  const auto c = p.coeffs();
  const int n = p.degree();
  const double eps = std::numeric_limits<double>::epsilon();

  const Complex center = -c[static_cast<std::size_t>(n - 1)] / (static_cast<double>(n) * c.back());
  const double radius = std::max(root_radius_bound(c), 1e-3) ;

  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[static_cast<std::size_t>(k)] = center + radius * std::polar(1.0, angle);
  }

  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int iter = 0; iter < options.max_iter; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (done[k]) continue;
      const auto h = horner_with_derivative(c, z[k]);
      if (std::abs(h.value) <= 4.0 * eps * h.magnitude) {
        done[k] = true;
        continue;
      }
      all_done = false;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      Complex step;
      if (h.derivative == Complex(0.0)) {
        step = Complex(std::max(std::abs(z[k]), 1.0) * 1e-8, 0.0);
      } else {
        const Complex ratio = h.value / h.derivative;
        step = ratio / (1.0 - ratio * repulsion);
      }
      z[k] -= step;
      if (std::abs(step) <= 2.0 * eps * std::abs(z[k])) done[k] = true;
    }
    if (all_done) break;
  }

  for (const auto& r : z) {
    const auto h = horner_with_derivative(c, r);
    if (!(std::abs(h.value) <= options.eps_root * h.magnitude))
      throw NonConvergence("find_roots: Aberth iteration did not reach the residual bound");
  }
  return z;
}

// A k-fold root is a simple root of the (k-1)-th derivative; Newton there
// recovers the digits lost to the split.
Complex refine_multiple(const Polynomial& p, Complex start, int k) {
  Polynomial d = p;
  for (int j = 1; j < k; ++j) d = d.derivative();
  const Polynomial dd = d.derivative();
  Complex z = start;
  for (int iter = 0; iter < 8; ++iter) {
    const Complex slope = dd(z);
    if (slope == Complex(0.0)) break;
    const Complex step = d(z) / slope;
    z -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(z)) break;
  }
  const double drift = std::abs(z - start);
  return drift <= 1e-2 * std::max(1.0, std::abs(start)) && std::isfinite(drift) ? z : start;
}

}  // namespace

double cluster_radius(const RootFinderOptions& options) { return std::max(1e-7, 1e3 * options.eps_root); }

std::vector<Root> find_roots(const Polynomial& p, const RootFinderOptions& options) {
  if (p.degree() < 1) throw DomainError("find_roots: polynomial must be nonconstant");

  // Roots at the origin are split off exactly.
  const int zeros_at_origin = p.low_order();
  const Polynomial q = p.shifted_down(zeros_at_origin);

  std::vector<Complex> raw;
  if (q.degree() == 1) {
    raw.push_back(-q.coeff(0) / q.coeff(1));
  } else if (q.degree() == 2) {
    // Cancellation-free quadratic formula.
    const Complex a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
    Complex d = std::sqrt(b * b - 4.0 * a * c);
    if ((std::conj(b) * d).real() < 0.0) d = -d;
    const Complex h = -0.5 * (b + d);
    raw.push_back(h / a);
    raw.push_back(h == Complex(0.0) ? h / a : c / h);
  } else if (q.degree() > 1) {
    raw = aberth_iterate(q, options);
  }

  // Inclusion radius n |q(z)| / |q'(z)|: a disk that surely holds a root. For the
  // numerically split members of a multiple root it spans the whole split.
  const double rho = cluster_radius(options);
  const Polynomial dq = q.derivative();
  std::vector<double> reach(raw.size(), 0.0);
  if (q.degree() > 2) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const double cap = 1e-2 * std::max(1.0, std::abs(raw[i]));
      const double slope = std::abs(dq(raw[i]));
      const double r = slope > 0.0 ? q.degree() * std::abs(q(raw[i])) / slope : cap;
      reach[i] = std::min(r, cap);
    }
  }

  // Single-linkage clustering; centroid stands for the cluster.
  std::vector<int> parent(raw.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
    return i;
  };
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = i + 1; j < raw.size(); ++j)
      if (std::abs(raw[i] - raw[j]) <= std::max(rho, reach[i] + reach[j])) parent[static_cast<std::size_t>(find(static_cast<int>(j)))] = find(static_cast<int>(i));

  std::vector<Root> roots;
  std::vector<int> owner(raw.size(), -1);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const int rep = find(static_cast<int>(i));
    auto& slot = owner[static_cast<std::size_t>(rep)];
    if (slot < 0) {
      slot = static_cast<int>(roots.size());
      roots.push_back({0.0, 0});
    }
    auto& r = roots[static_cast<std::size_t>(slot)];
    r.value += raw[i];
    r.multiplicity += 1;
  }
  for (auto& r : roots) {
    r.value /= static_cast<double>(r.multiplicity);
    if (r.multiplicity > 1) r.value = refine_multiple(q, r.value, r.multiplicity);
  }
  if (zeros_at_origin > 0) roots.push_back({0.0, zeros_at_origin});

  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.value.imag() != b.value.imag()) return a.value.imag() < b.value.imag();
    return a.value.real() < b.value.real();
  });
  return roots;
}

Polynomial from_roots(std::span<const Root> roots, Complex lead) {
  Polynomial out = Polynomial::constant(lead);
  for (const auto& r : roots) out *= pow(Polynomial({-r.value, 1.0}), r.multiplicity);
  return out;
}

}  // namespace ramq
