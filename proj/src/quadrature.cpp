#include "ramq/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ramq/errors.hpp"

namespace ramq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kGaussPoints = 24;
constexpr int kInitialDirectCells = 32;
// tanh-sinh abscissae are cut where the distance to an endpoint reaches ~1e-275.
constexpr double kTanhSinhTMax = 6.0;

struct GaussRule {
  std::array<double, kGaussPoints> nodes{};
  std::array<double, kGaussPoints> weights{};
};

const GaussRule& gauss_legendre() {
  static const GaussRule rule = [] {
    GaussRule g;
    const int n = kGaussPoints;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      g.nodes[static_cast<std::size_t>(i)] = x;
      g.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return g;
  }();
  return rule;
}

// Amplitude f(x) x^s log^m x of the integrand, for x > 0. The zero of num
// at the origin is folded into the power so tiny x does not overflow.
struct Amplitude {
  const IntegralSpec& spec;
  Polynomial reduced_num;
  double power;

  explicit Amplitude(const IntegralSpec& sp)
      : spec(sp),
        reduced_num(sp.f.num().shifted_down(std::max(sp.f.num().low_order(), 0))),
        power(sp.s + std::max(sp.f.num().low_order(), 0)) {}

  double operator()(double x) const {
    double v = reduced_num.eval_real(x) / spec.f.den().eval_real(x);
    if (power != 0.0) v *= std::pow(x, power);
    if (spec.m > 0) v *= std::pow(std::log(x), spec.m);
    return v;
  }

  double derivative(double x) const {
    const auto& num = spec.f.num();
    const auto& den = spec.f.den();
    const double nv = num.eval_real(x), dv = den.eval_real(x);
    const double f = nv / dv;
    const double fp = (num.derivative().eval_real(x) * dv - nv * den.derivative().eval_real(x)) / (dv * dv);
    const double xs = std::pow(x, spec.s);
    const double lg = std::log(x);
    const double lm = spec.m > 0 ? std::pow(lg, spec.m) : 1.0;
    const double lm1 = spec.m > 0 ? spec.m * std::pow(lg, spec.m - 1) : 0.0;
    return fp * xs * lm + f * spec.s * xs / x * lm + f * xs * lm1 / x;
  }
};

double phase_radians(const IntegralSpec& spec) { return spec.phase * kPi / 2.0; }

double trig_factor(const IntegralSpec& spec, double x) {
  const double theta = spec.n * x - phase_radians(spec);
  return spec.kind == TrigKind::Cos ? std::cos(theta) : std::sin(theta);
}

// Zeros of trig(n x - phi) are x = (phi + (k + offset) pi) / n.
double zero_offset(const IntegralSpec& spec) { return spec.kind == TrigKind::Cos ? 0.5 : 0.0; }

long first_zero_index(const IntegralSpec& spec) {
  return static_cast<long>(std::ceil((spec.n * 1.0 - phase_radians(spec)) / kPi - zero_offset(spec)));
}

double zero_at(const IntegralSpec& spec, long index) {
  return (phase_radians(spec) + (static_cast<double>(index) + zero_offset(spec)) * kPi) / spec.n;
}

// Tail cells: cell k spans [zero(k0 + k), zero(k0 + k + 1)]. On it
// trig(n x - phi) = (-1)^K sigma sin(n u), u = x - zero(K), with
// sigma = -1 for cos and +1 for sin.
class TailCells {
 public:
  explicit TailCells(const IntegralSpec& spec)
      : spec_(spec), amp_(spec), k0_(first_zero_index(spec)), width_(kPi / spec.n) {}

  double start() const { return zero_at(spec_, k0_); }
  double edge(long cell) const { return zero_at(spec_, k0_ + cell); }

  double cell(long cell) const {
    const auto& g = gauss_legendre();
    const long index = k0_ + cell;
    const double x0 = zero_at(spec_, index);
    const double half = 0.5 * width_;
    double acc = 0.0;
    for (int i = 0; i < kGaussPoints; ++i) {
      const double u = half * (1.0 + g.nodes[static_cast<std::size_t>(i)]);
      acc += g.weights[static_cast<std::size_t>(i)] * std::sin(spec_.n * u) * amp_(x0 + u);
    }
    double sign = (index % 2 == 0) ? 1.0 : -1.0;
    if (spec_.kind == TrigKind::Cos) sign = -sign;
    return sign * half * acc;
  }

 private:
  const IntegralSpec& spec_;
  Amplitude amp_;
  long k0_;
  double width_;
};

}  // namespace

TanhSinhResult tanh_sinh(const std::function<double(double)>& fn, double b, double tol, int max_levels) {
  // x = b / (1 + e^{-2u}), u = (pi/2) sinh t; weight b (pi/2) cosh t / (2 cosh^2 u).
  auto sample = [&](double t, double& l1) {
    const double u = 0.5 * kPi * std::sinh(t);
    const double cu = std::cosh(u);
    const double w = b * 0.5 * kPi * std::cosh(t) / (2.0 * cu * cu);
    if (!(w > 0.0) || !std::isfinite(w)) return 0.0;
    double x;
    if (t <= 0.0) {
      x = b / (1.0 + std::exp(-2.0 * u));
    } else {
      x = b - b / (1.0 + std::exp(2.0 * u));
    }
    if (!(x > 0.0) || !(x < b)) return 0.0;
    const double v = w * fn(x);
    l1 += std::abs(v);
    return v;
  };

  TanhSinhResult out;
  double h = 1.0;
  double sum = 0.0;
  double l1 = 0.0;
  const int n0 = static_cast<int>(kTanhSinhTMax);
  for (int k = -n0; k <= n0; ++k) sum += sample(k * h, l1);
  double prev = h * sum;
  out.value = prev;
  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    const int kmax = static_cast<int>(kTanhSinhTMax / h);
    for (int k = -kmax + 1; k <= kmax; k += 2) sum += sample(k * h, l1);
    const double cur = h * sum;
    out.levels = level;
    out.value = cur;
    out.l1 = h * l1;
    out.error = std::abs(cur - prev);
    if (level >= 3 && out.error <= tol) {
      out.converged = true;
      break;
    }
    prev = cur;
  }
  out.error = std::max(out.error, 10.0 * kEps * out.l1);
  return out;
}

AcceleratedSum euler_average(std::span<const double> partial_sums) {
  std::vector<double> t(partial_sums.begin(), partial_sums.end());
  if (t.empty()) return {0.0, 0.0};
  double previous = t.front();
  for (std::size_t depth = 1; depth < partial_sums.size(); ++depth) {
    for (std::size_t j = 0; j + depth < partial_sums.size(); ++j) t[j] = 0.5 * (t[j] + t[j + 1]);
    if (depth + 1 < partial_sums.size()) previous = t.front();
  }
  if (partial_sums.size() == 1) return {t.front(), 0.0};
  return {t.front(), std::abs(t.front() - previous)};
}

double tail_start(const IntegralSpec& spec) {
  if (spec.n == 0.0) return 1.0;
  return zero_at(spec, first_zero_index(spec));
}

QuadratureResult integrate_spec(const IntegralSpec& spec, const QuadratureConfig& cfg) {
  check_convergence(spec);
  if (!(cfg.target_abs_tol > 0.0)) throw DomainError("quadrature: target_abs_tol must be positive");
  QuadratureResult out;
  if (trivially_zero(spec)) return out;

  const Amplitude amp(spec);
  const double x0 = tail_start(spec);
  out.tail_start = x0;

  const auto core = tanh_sinh([&](double x) { return trig_factor(spec, x) * amp(x); }, x0,
                              0.1 * cfg.target_abs_tol, cfg.max_core_levels);
  out.core_value = core.value;
  out.core_subdivisions = core.levels;
  out.converged = core.converged;

  if (spec.n == 0.0) {
    const double c = trig_factor(spec, 0.0);
    const auto tail = tanh_sinh(
        [&](double t) {
          // Near t = 0 the polynomial evaluations overflow; the integrand is negligible there.
          const double v = c * amp(1.0 / t) / (t * t);
          return std::isfinite(v) ? v : 0.0;
        },
        1.0 / x0,
                                0.1 * cfg.target_abs_tol, cfg.max_core_levels);
    out.tail_value = tail.value;
    out.value = core.value + tail.value;
    out.error_estimate = core.error + tail.error;
    out.converged = out.converged && tail.converged;
    return out;
  }

  const TailCells cells(spec);
  const int depth = std::max(cfg.acceleration_depth, 1);
  std::vector<double> partial{0.0};  // partial[k] = sum of the first k cells
  double l1 = 0.0;
  auto ensure = [&](int count) {
    while (static_cast<int>(partial.size()) <= count) {
      const double a = cells.cell(static_cast<long>(partial.size()) - 1);
      l1 += std::abs(a);
      partial.push_back(partial.back() + a);
    }
  };

  int direct = kInitialDirectCells;
  AcceleratedSum best{0.0, std::numeric_limits<double>::infinity()};
  bool accelerated = false;
  while (true) {
    if (direct + depth > cfg.max_tail_cells) break;
    ensure(direct + depth);
    const auto acc = euler_average(std::span<const double>(partial).subspan(static_cast<std::size_t>(direct),
                                                                           static_cast<std::size_t>(depth) + 1));
    if (acc.delta < best.delta) best = acc;
    out.tail_cells_used = direct + depth;
    if (acc.delta <= 0.1 * cfg.target_abs_tol) {
      best = acc;
      accelerated = true;
      break;
    }
    direct *= 2;
  }
  if (!std::isfinite(best.delta)) {
    // Budget smaller than one acceleration window: plain partial sum.
    ensure(std::max(cfg.max_tail_cells, 1));
    best = {partial.back(), std::abs(partial.back() - partial[partial.size() - 2])};
    out.tail_cells_used = static_cast<int>(partial.size()) - 1;
  }

  out.accelerated = accelerated;
  out.converged = out.converged && accelerated;
  out.tail_value = best.value;
  out.value = core.value + best.value;
  out.error_estimate = core.error + best.delta + 10.0 * kEps * l1;
  return out;
}

QuadratureResult integrate_phase(const RationalFunction& f, double n, double s, const QuadratureConfig& cfg) {
  return integrate_spec(IntegralSpec{f, TrigKind::Cos, n, 0, s, s}, cfg);
}

std::vector<double> tail_partial_sums(const IntegralSpec& spec, int cells) {
  if (!(spec.n > 0.0)) throw DomainError("tail_partial_sums: requires n > 0");
  const TailCells tail(spec);
  std::vector<double> sums;
  double acc = 0.0;
  for (int k = 0; k < cells; ++k) {
    acc += tail.cell(k);
    sums.push_back(acc);
  }
  return sums;
}

double tail_brute_oracle(const IntegralSpec& spec, int cells) {
  if (!(spec.n > 0.0)) throw DomainError("tail_brute_oracle: requires n > 0");
  if (cells <= 0) return 0.0;
  const TailCells tail(spec);
  double acc = 0.0;
  for (int k = 0; k < cells; ++k) acc += tail.cell(k);

  // int_X^inf g e^{i theta} dx ~ e^{i theta(X)} (i g(X)/n - g'(X)/n^2).
  const Amplitude amp(spec);
  const double x = tail.edge(cells);
  const double theta = spec.n * x - phase_radians(spec);
  const std::complex<double> rem =
      std::polar(1.0, theta) * std::complex<double>(-amp.derivative(x) / (spec.n * spec.n), amp(x) / spec.n);
  return acc + (spec.kind == TrigKind::Cos ? rem.real() : rem.imag());
}

}  // namespace ramq
