#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ramq/closed_forms.hpp"
#include "ramq/errors.hpp"
#include "ramq/parse.hpp"
#include "ramq/quadrature.hpp"
#include "ramq/relation.hpp"

using namespace ramq;

namespace {

constexpr double kPi = std::numbers::pi;

struct KnownCase {
  IntegralSpec spec;
  double exact;
};

std::vector<KnownCase> closed_form_corpus() {
  std::vector<KnownCase> out;
  for (double n : {0.5, 1.0, 2.0}) {
    out.push_back({IntegralSpec{inverse_quadratic_power(0), TrigKind::Cos, n, 0}, kPi / 2 * std::exp(-n)});
    out.push_back({IntegralSpec{x_over_quadratic_power(0), TrigKind::Sin, n, 0}, kPi / 2 * std::exp(-n)});
  }
  for (int r = 1; r <= 3; ++r) {
    out.push_back({IntegralSpec{inverse_quadratic_power(r), TrigKind::Cos, 1.0, 0}, closed_cos_pow(r, 1.0, 0.0)});
    out.push_back({IntegralSpec{x_over_quadratic_power(r), TrigKind::Sin, 1.0, 0}, closed_x_sin_pow(r, 1.0, 0.0)});
  }
  return out;
}

}  // namespace

TEST_CASE("basic values") {
  const auto f = parse_rational("1/(x^2+1)");
  const auto g = parse_rational("x/(x^2+1)");
  const auto a = integrate_spec({f, TrigKind::Cos, 1.0, 0});
  CHECK(std::abs(a.value - kPi / 2 / std::exp(1.0)) < 1e-12);
  CHECK(a.accelerated);
  CHECK(a.converged);
  CHECK(a.tail_cells_used > 0);
  const auto b = integrate_spec({g, TrigKind::Sin, 1.0, 0});
  CHECK(std::abs(b.value - kPi / 2 / std::exp(1.0)) < 1e-12);
  const auto c = integrate_spec({f, TrigKind::Cos, 0.0, 1});
  CHECK(std::abs(c.value) < 1e-12);
  CHECK(c.tail_cells_used == 0);
  const auto d = integrate_spec({f, TrigKind::Cos, 0.0, 0});
  CHECK(std::abs(d.value - kPi / 2) < 1e-12);
}

TEST_CASE("phase-shifted cosine") {
  const auto f = inverse_quadratic_power(0);
  CHECK(std::abs(integrate_phase(f, 1.0, 0.5).value - kPi / 2 * std::exp(-1.0)) < 1e-12);
  CHECK(std::abs(integrate_phase(f, 2.0, 0.0).value - kPi / 2 * std::exp(-2.0)) < 1e-12);
  CHECK(std::abs(integrate_phase(inverse_quadratic_power(1), 1.0, 1.0).value - closed_cos_pow(1, 1.0, 1.0)) < 1e-12);
  CHECK(std::abs(integrate_phase(f, 0.5, 1.8).value - kPi / 2 * std::exp(-0.5)) < 1e-10);
  CHECK(std::abs(integrate_phase(f, 1.0, -0.9).value - kPi / 2 * std::exp(-1.0)) < 1e-10);
}

TEST_CASE("tail starts on a zero of the trig factor at or beyond 1") {
  const auto f = inverse_quadratic_power(0);
  CHECK(tail_start({f, TrigKind::Cos, 1.0, 0}) == doctest::Approx(kPi / 2));
  CHECK(tail_start({f, TrigKind::Sin, 1.0, 0}) == doctest::Approx(kPi));
  CHECK(tail_start({f, TrigKind::Cos, 2.0, 0}) == doctest::Approx(3 * kPi / 4));
  CHECK(tail_start({f, TrigKind::Cos, 1.0, 0, 0.5, 0.5}) == doctest::Approx(kPi / 2 + kPi / 4));
  CHECK(tail_start({f, TrigKind::Cos, 0.0, 0}) == 1.0);
  for (double n : {0.3, 1.0, 2.0, 7.0})
    for (double phase : {-0.5, 0.0, 0.9}) {
      const IntegralSpec s{f, TrigKind::Cos, n, 0, phase, phase};
      const double x0 = tail_start(s);
      CHECK(x0 >= 1.0);
      CHECK(std::abs(std::cos(n * x0 - phase * kPi / 2)) < 1e-12);
    }
}

TEST_CASE("closed-form corpus: agreement and error honesty") {
  for (const auto& k : closed_form_corpus()) {
    const auto q = integrate_spec(k.spec);
    const double err = std::abs(q.value - k.exact);
    CAPTURE(describe(k.spec));
    CHECK(err <= std::max(1e-10, q.error_estimate));
    CHECK(err <= 10.0 * q.error_estimate);
    CHECK(q.error_estimate > 0.0);
  }
}

TEST_CASE("invariance under a common scale of num and den") {
  for (const char* text : {"1/(x^2+1)", "x/(x^2+1)^2", "1/(x^4+1)"}) {
    const auto f = parse_rational(text);
    for (double c : {2.0, 0.125, 1024.0}) {
      const auto g = f.scaled(c);
      for (int m = 0; m <= 2; ++m) {
        const auto a = integrate_spec({f, TrigKind::Cos, 1.0, m});
        const auto b = integrate_spec({g, TrigKind::Cos, 1.0, m});
        CHECK(std::abs(a.value - b.value) <= 1e-14 * std::max(1.0, std::abs(a.value)));
      }
    }
  }
}

TEST_CASE("accelerated tail agrees with brute-force cell sums") {
  const IntegralSpec spec{inverse_quadratic_power(0), TrigKind::Cos, 1.0, 2};
  const auto q = integrate_spec(spec);
  const double brute = tail_brute_oracle(spec, 10000);
  CHECK(std::abs(q.tail_value - brute) < 1e-7);
  CHECK(tail_brute_oracle(spec, 0) == 0.0);
  CHECK_THROWS_AS(tail_brute_oracle({spec.f, TrigKind::Cos, 0.0, 0}, 10), DomainError);
}

TEST_CASE("partial sums bracket the accelerated tail") {
  for (int m = 0; m <= 3; ++m) {
    const IntegralSpec spec{x_over_quadratic_power(0), TrigKind::Sin, 1.0, m};
    const auto q = integrate_spec(spec);
    const auto sums = tail_partial_sums(spec, 400);
    for (std::size_t k = 200; k + 1 < sums.size(); ++k) {
      const double lo = std::min(sums[k], sums[k + 1]);
      const double hi = std::max(sums[k], sums[k + 1]);
      CHECK(q.tail_value >= lo - 1e-12);
      CHECK(q.tail_value <= hi + 1e-12);
    }
  }
}

TEST_CASE("Euler averaging") {
  // Partial sums of 1 - 1/2 + 1/3 - ... converge to log 2.
  std::vector<double> sums;
  double acc = 0.0;
  for (int k = 1; k <= 40; ++k) {
    acc += (k % 2 == 1 ? 1.0 : -1.0) / k;
    sums.push_back(acc);
  }
  const auto r = euler_average(std::span<const double>(sums).subspan(27, 13));
  CHECK(std::abs(r.value - std::log(2.0)) < 1e-10);
  CHECK(r.delta < 1e-8);
  const std::vector<double> one{3.0};
  CHECK(euler_average(one).value == 3.0);
  CHECK(euler_average(one).delta == 0.0);
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  const auto a = tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 1.0, 1e-12, 10);
  CHECK(std::abs(a.value - 2.0) < 1e-11);
  CHECK(a.converged);
  const auto b = tanh_sinh([](double x) { return std::pow(std::log(x), 3); }, 1.0, 1e-12, 10);
  CHECK(std::abs(b.value + 6.0) < 1e-10);
  const auto c = tanh_sinh([](double x) { return std::pow(x, -0.9); }, 2.0, 1e-12, 10);
  CHECK(std::abs(c.value - 10.0 * std::pow(2.0, 0.1)) < 1e-9);
}

TEST_CASE("gate failures and budgets") {
  const auto f = inverse_quadratic_power(0);
  const auto g = x_over_quadratic_power(0);
  CHECK_THROWS_AS(integrate_spec({g, TrigKind::Cos, 0.0, 0}), DomainError);
  CHECK_THROWS_AS(integrate_spec({f, TrigKind::Cos, 1.0, 0, 2.0, 2.0}), DomainError);
  CHECK_THROWS_AS(integrate_spec({f, TrigKind::Cos, 1.0, 0, -1.0, -1.0}), DomainError);
  CHECK_THROWS_AS(integrate_spec({f, TrigKind::Cos, 1.0, 1, 0.5, 0.5}), DomainError);
  CHECK_THROWS_AS(integrate_spec({f, TrigKind::Cos, -1.0, 0}), DomainError);
  QuadratureConfig bad;
  bad.target_abs_tol = 0.0;
  CHECK_THROWS_AS(integrate_spec({f, TrigKind::Cos, 1.0, 0}, bad), DomainError);

  QuadratureConfig tight;
  tight.max_tail_cells = 20;
  const auto q = integrate_spec({g, TrigKind::Sin, 1.0, 3}, tight);
  CHECK_FALSE(q.accelerated);
  CHECK_FALSE(q.converged);
  CHECK(std::isfinite(q.value));

  const auto z = integrate_spec({f, TrigKind::Sin, 0.0, 2});
  CHECK(z.value == 0.0);
}

TEST_CASE("slowly decaying conditionally convergent tails") {
  // x^1.8/(x^2+1) decays like x^-0.2.
  const auto f = inverse_quadratic_power(0);
  for (double n : {0.5, 1.0, 2.0}) {
    const auto q = integrate_phase(f, n, 1.8);
    CHECK(std::abs(q.value - kPi / 2 * std::exp(-n)) < 1e-10);
    CHECK(q.accelerated);
  }
}
