#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ramq/closed_forms.hpp"
#include "ramq/errors.hpp"
#include "ramq/parse.hpp"
#include "ramq/residue.hpp"

using namespace ramq;

namespace {

const Complex I(0.0, 1.0);
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("simple pole of 1/(z^2+1)") {
  const auto f = parse_rational("1/(x^2+1)");
  const Pole p{I, 1};
  for (double n : {0.0, 0.5, 1.0, 2.0}) {
    CHECK(std::abs(residue_at(f, p, {n, 0.0, 0}) - std::exp(-n) / (2.0 * I)) < 1e-15);
    const Complex expected = std::exp(-n) * (-kPi * kPi / 4.0) / (2.0 * I);
    CHECK(std::abs(residue_at(f, p, {n, 0.0, 2}) - expected) < 1e-15);
    CHECK(std::abs(residue_sum(f, {n, 0.0, 2}) + std::exp(-n) * kPi * kPi * kPi / 4.0) < 1e-14);
    CHECK(std::abs(residue_sum(f, {n, 0.0, 0}) - kPi * std::exp(-n)) < 1e-15);
  }
}

TEST_CASE("z^s weight reproduces e^{i pi s/2}") {
  const auto f = parse_rational("1/(x^2+1)");
  for (double s : {-0.5, 0.3, 1.5}) {
    const Complex S = residue_sum(f, {1.0, s, 0});
    CHECK(std::abs(S - kPi * std::exp(-1.0) * std::polar(1.0, kPi * s / 2)) < 1e-14);
  }
}

TEST_CASE("odd example z/(z^2+1)") {
  const auto f = parse_rational("x/(x^2+1)");
  for (int m = 0; m <= 3; ++m) {
    const Complex expected = kPi * I / std::exp(1.0) * std::pow(I * kPi / 2.0, m);
    CHECK(std::abs(residue_sum(f, {1.0, 0.0, m}) - expected) < 1e-13);
  }
}

TEST_CASE("higher-order pole matches the double-sum coefficient formula") {
  for (int r = 0; r <= 4; ++r) {
    const auto f = parse_rational(("1/(x^2+1)^" + std::to_string(r + 1)).c_str());
    for (double s : {0.0, 0.5, 1.0}) {
      for (double n : {0.5, 1.0, 2.0}) {
        const Complex res = residue_at(f, Pole{I, r + 1}, {n, s, 0});
        // (pi i / e^{i pi s/2}) Res equals the real closed form.
        const Complex value = kPi * I * res / std::polar(1.0, kPi * s / 2);
        CHECK(std::abs(value - closed_cos_pow(r, n, s)) < 1e-13);
      }
    }
  }
}

TEST_CASE("residues agree with the contour oracle on the corpus") {
  for (const char* text : {"1/(x^2+1)", "x/(x^2+1)", "1/(x^4+1)", "1/(x^2+1)^3"}) {
    const auto f = parse_rational(text);
    for (int m = 0; m <= 3; ++m) {
      for (double s : {0.0, 0.3}) {
        for (const auto& p : upper_half_poles(f)) {
          const WeightParams w{1.0, s, m};
          const Complex res = residue_at(f, p, w);
          const Complex oracle = contour_oracle(f, p, w, default_oracle_radius(f, p));
          CAPTURE(text);
          CAPTURE(m);
          CHECK(std::abs(res - oracle) <= 1e-9 * (1.0 + std::abs(res)));
        }
      }
    }
  }
}

TEST_CASE("oracle radius and errors") {
  const auto f = parse_rational("1/(x^4+1)");
  const auto poles = upper_half_poles(f);
  const double r = default_oracle_radius(f, poles[0]);
  CHECK(r == doctest::Approx(std::min(0.5 * std::sqrt(2.0), 0.5 * std::sqrt(0.5))));
  CHECK_THROWS_AS(contour_oracle(f, poles[0], {1.0, 0.0, 0}, 0.8), RadiusTooLarge);

  const auto g = parse_rational("1/(x^2+1)^2");
  CHECK_THROWS_AS(residue_at(g, Pole{I, 1}, {1.0, 0.0, 0}), PoleOrderMismatch);
  CHECK_THROWS_AS(residue_at(g, Pole{-I, 2}, {1.0, 0.0, 0}), DomainError);
}

TEST_CASE("sum is linear in the numerator for a shared denominator") {
  const auto f1 = parse_rational("1/(x^4+1)");
  const auto f2 = parse_rational("x^2/(x^4+1)");
  const auto f12 = parse_rational("(x^2+1)/(x^4+1)");
  for (int m = 0; m <= 2; ++m) {
    const WeightParams w{1.3, 0.0, m};
    const Complex lhs = residue_sum(f12, w);
    const Complex rhs = residue_sum(f1, w) + residue_sum(f2, w);
    CHECK(std::abs(lhs - rhs) <= 1e-14 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("sum is real for real even f at s = 0, m = 0") {
  for (const char* text : {"1/(x^2+1)", "1/(x^4+1)", "(x^2+3)/((x^2+1)^2*(x^2+9))"}) {
    const Complex S = residue_sum(parse_rational(text), {1.0, 0.0, 0});
    CHECK(std::abs(S.imag()) <= 1e-14 * std::abs(S));
  }
}
