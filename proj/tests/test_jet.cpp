#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "ramq/errors.hpp"
#include "ramq/jet.hpp"

using namespace ramq;

namespace {

const Complex I(0.0, 1.0);
constexpr double kPi = std::numbers::pi;

double max_diff(const Jet& a, const Jet& b) {
  double d = 0.0;
  for (int j = 0; j <= a.order(); ++j) d = std::max(d, std::abs(a[j] - b[j]));
  return d;
}

double max_abs(const Jet& a) {
  double d = 0.0;
  for (int j = 0; j <= a.order(); ++j) d = std::max(d, std::abs(a[j]));
  return d;
}

Jet random_jet(std::mt19937& rng, Complex base, int order) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), r(0.5, 2.0), arg(0.2, kPi - 0.2);
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  c[0] = std::polar(r(rng), arg(rng));
  for (std::size_t j = 1; j < c.size(); ++j) c[j] = Complex(u(rng), u(rng)) * 0.5;
  return Jet(base, c);
}

Complex random_upper(std::mt19937& rng) {
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.2, 2.0);
  return {re(rng), im(rng)};
}

// k-th Taylor coefficient of g at z0 by the trapezoid rule on a circle.
Complex cauchy_coefficient(const std::function<Complex(Complex)>& g, Complex z0, int k, double radius) {
  const int n = 256;
  Complex acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const Complex w = std::polar(radius, 2.0 * kPi * j / n);
    acc += g(z0 + w) * std::pow(w, -k);
  }
  return acc / static_cast<double>(n);
}

}  // namespace

TEST_CASE("linear arithmetic") {
  const Jet a(0.0, {1.0, 1.0});
  const Jet b(0.0, {1.0, -1.0});
  const Jet sum = jet_add(a, b);
  CHECK(sum[0] == Complex(2.0));
  CHECK(sum[1] == Complex(0.0));
  const Jet scaled = jet_scale(a, I);
  CHECK(scaled[0] == I);
  CHECK(scaled[1] == I);
  const Jet x = Jet::variable(0.0, 1);
  const Jet zero = jet_sub(x, x);
  CHECK(zero[0] == Complex(0.0));
  CHECK(zero[1] == Complex(0.0));
}

TEST_CASE("binary operations demand matching base and order") {
  CHECK_THROWS_AS(jet_add(Jet::variable(0.0, 2), Jet::variable(I, 2)), BaseMismatch);
  CHECK_THROWS_AS(jet_mul(Jet::variable(0.0, 2), Jet::variable(0.0, 3)), BaseMismatch);
  CHECK_NOTHROW(jet_mul(Jet::variable(0.0, 2), Jet::variable(0.0, 3).with_order(2)));
}

TEST_CASE("truncated Cauchy product") {
  const Jet a(0.0, {1.0, 1.0, 0.0});
  const Jet b(0.0, {1.0, -1.0, 0.0});
  const Jet p = jet_mul(a, b);
  CHECK(p[0] == Complex(1.0));
  CHECK(p[1] == Complex(0.0));
  CHECK(p[2] == Complex(-1.0));
  const Jet x = Jet::variable(0.0, 1);
  CHECK(jet_mul(x, x)[1] == Complex(0.0));

  const Jet e = jet_exp(Jet::variable(0.0, 6));
  const Jet e2 = jet_exp(Jet::variable(0.0, 6) * Complex(2.0));
  const Jet sq = jet_mul(e, e);
  for (int j = 0; j <= 6; ++j) CHECK(std::abs(sq[j] - e2[j]) < 1e-14);
}

TEST_CASE("reciprocal") {
  const Jet a(0.0, {2.0 * I, 1.0, 0.0});
  const Jet b = jet_reciprocal(a);
  const Complex a0 = 2.0 * I;
  CHECK(std::abs(b[0] - 1.0 / a0) < 1e-15);
  CHECK(std::abs(b[1] + 1.0 / (a0 * a0)) < 1e-15);
  CHECK(std::abs(b[2] - 1.0 / (a0 * a0 * a0)) < 1e-15);

  const Jet g = jet_reciprocal(Jet(0.0, {1.0, 1.0, 0.0, 0.0, 0.0}));
  for (int j = 0; j <= 4; ++j) CHECK(g[j] == Complex(j % 2 == 0 ? 1.0 : -1.0));

  CHECK_THROWS_AS(jet_reciprocal(Jet::variable(0.0, 3)), DivisionByZeroJet);
  CHECK_THROWS_AS(jet_reciprocal(Jet(0.0, {1e-13, 1.0})), DivisionByZeroJet);
}

TEST_CASE("exp") {
  const Jet e = jet_exp(Jet::variable(0.0, 3));
  CHECK(e[0] == Complex(1.0));
  CHECK(e[1] == Complex(1.0));
  CHECK(std::abs(e[2] - 0.5) < 1e-16);
  CHECK(std::abs(e[3] - 1.0 / 6.0) < 1e-16);

  // e^{inz} about z0 = i has leading value e^{-n}.
  const double n = 1.7;
  const Jet w = jet_exp(Jet::variable(I, 3) * (I * n));
  CHECK(std::abs(w[0] - std::exp(-n)) < 1e-15);
  CHECK(std::abs(w[1] - I * n * std::exp(-n)) < 1e-15);
}

TEST_CASE("log in the upper-half-plane branch") {
  const Jet l = jet_log(Jet::variable(I, 3));
  CHECK(std::abs(l[0] - I * (kPi / 2)) < 1e-15);
  CHECK(std::abs(l[1] + I) < 1e-15);
  const Jet q = jet_log(Jet::variable(std::polar(1.0, kPi / 4), 2));
  CHECK(std::abs(q[0] - I * (kPi / 4)) < 1e-15);

  CHECK_THROWS_AS(jet_log(Jet::variable(-I, 2)), BranchCut);
  CHECK_THROWS_AS(jet_log(Jet::variable(0.0, 2)), DivisionByZeroJet);
  // Third quadrant is shifted by 2 pi rather than rejected.
  const Jet t = jet_log(Jet::variable(Complex(-1.0, -0.5), 1));
  CHECK(t[0].imag() > kPi);
  CHECK(arg_branch(Complex(-1.0, -1.0)) == doctest::Approx(5.0 * kPi / 4.0));
}

TEST_CASE("log agrees with the principal branch on the upper half-plane") {
  std::mt19937 rng(3);
  for (int k = 0; k < 100; ++k) {
    const Complex z = random_upper(rng);
    const Jet l = jet_log(Jet::variable(z, 1));
    CHECK(std::abs(l[0] - std::log(z)) < 1e-15);
  }
}

TEST_CASE("complex powers") {
  const double s = 0.37;
  const Jet p = jet_pow_complex(Jet::variable(I, 3), Complex(s));
  CHECK(std::abs(p[0] - std::polar(1.0, kPi * s / 2)) < 1e-15);
  const Jet one = jet_pow_complex(Jet::variable(I, 3), Complex(1.0));
  CHECK(std::abs(one[0] - I) < 1e-15);
  CHECK(std::abs(one[1] - 1.0) < 1e-15);
  CHECK(std::abs(one[2]) < 1e-15);
  const Jet unit = jet_pow_complex(Jet::variable(2.0 * I, 3), Complex(0.0));
  CHECK(unit[0] == Complex(1.0));
  CHECK(unit[1] == Complex(0.0));
  const Jet cube = jet_pow_int(Jet::variable(I, 4), 3);
  CHECK(cube[3] == Complex(1.0));
  CHECK(cube[4] == Complex(0.0));
}

TEST_CASE("Taylor shift of polynomials") {
  const Jet a = jet_from_poly(Polynomial{1.0, 0.0, 1.0}, I, 2);
  CHECK(std::abs(a[0]) == 0.0);
  CHECK(a[1] == 2.0 * I);
  CHECK(a[2] == Complex(1.0));
  const Jet b = jet_from_poly(Polynomial{0.0, 1.0}, 0.0, 3);
  CHECK(b[0] == Complex(0.0));
  CHECK(b[1] == Complex(1.0));
  CHECK(b[2] == Complex(0.0));
  const Jet c = jet_from_poly(Polynomial{1.0, 0.0, 0.0, 0.0, 1.0}, std::polar(1.0, kPi / 4), 4);
  CHECK(std::abs(c[0]) < 1e-15);
  CHECK(std::abs(c[4] - 1.0) < 1e-15);
}

TEST_CASE("roundtrips on random jets") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int order = trial % 11;
    const Complex base = random_upper(rng);
    const Jet a = random_jet(rng, base, order);
    const double scale = std::max(1.0, max_abs(a));
    CHECK(max_diff(jet_reciprocal(jet_reciprocal(a)), a) <= 1e-12 * scale);
    CHECK(max_diff(jet_exp(jet_log(a)), a) <= 1e-12 * scale);
    CHECK(max_diff(jet_pow_complex(a, Complex(1.0)), a) <= 1e-12 * scale);
    const Jet one = jet_mul(a, jet_reciprocal(a));
    CHECK(std::abs(one[0] - 1.0) <= 1e-12);
    for (int j = 1; j <= order; ++j) CHECK(std::abs(one[j]) <= 1e-12 * scale);
  }
}

TEST_CASE("jet coefficients match the Cauchy-integral oracle") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex z0 = random_upper(rng) + Complex(0.0, 0.5);
    const double n = 0.5 + trial * 0.1;
    const Complex s(0.3 + 0.05 * trial, 0.0);
    auto g = [&](Complex z) {
      const Complex l = std::log(z);
      return std::exp(I * n * z) * std::exp(s * l) * l * l / (z + I);
    };
    const int order = 5;
    const Jet z = Jet::variable(z0, order);
    const Jet lz = jet_log(z);
    const Jet jet =
        jet_exp(z * (I * n)) * jet_pow_complex(z, s) * lz * lz * jet_reciprocal(z + Jet::constant(z0, I, order));
    const double radius = 0.25 * z0.imag();
    for (int k = 0; k <= order; ++k) {
      const Complex ref = cauchy_coefficient(g, z0, k, radius);
      CHECK(std::abs(jet[k] - ref) <= 1e-8 * std::max(std::abs(ref), 1e-3 * std::abs(jet[0])));
    }
  }
}
