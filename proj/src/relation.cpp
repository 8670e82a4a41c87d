#include "ramq/relation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "ramq/closed_forms.hpp"
#include "ramq/errors.hpp"
#include "ramq/residue.hpp"

namespace ramq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);

const Polynomial& quadratic() {
  static const Polynomial q{1.0, 0.0, 1.0};
  return q;
}

std::string tag(const char* fmt, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a);
  return buf;
}

std::string tag(const char* fmt, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

std::string tag(const char* fmt, double a, double b, double c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

void require_positive_n(double n, const char* what) {
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError(std::string(what) + ": requires n > 0");
}

void require_nonnegative_n(double n, const char* what) {
  if (!(n >= 0.0) || !std::isfinite(n)) throw DomainError(std::string(what) + ": requires n >= 0");
}

// i^p exactly.
Complex i_power(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// sin(pi x) and cos(pi x), exact when 2x is an integer.
double sin_pi(double x) {
  const double r = std::fmod(x, 2.0);
  if (r == std::round(r)) return 0.0;
  if (2.0 * r == std::round(2.0 * r)) return (r == 0.5 || r == -1.5) ? 1.0 : -1.0;
  return std::sin(kPi * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

double real_power(double x, int p) {
  double v = 1.0;
  for (int i = 0; i < p; ++i) v *= x;
  return v;
}

double binom(int m, int k) {
  double c = 1.0;
  for (int i = 0; i < k; ++i) c = c * (m - i) / (i + 1);
  return c;
}

IntegralSpec spec(const RationalFunction& f, TrigKind kind, double n, int m, double s = 0.0, double phase = 0.0) {
  return IntegralSpec{f, kind, n, m, s, phase};
}

int compare_poly(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = a.degree(); k >= 0; --k) {
    const Complex x = a.coeff(k), y = b.coeff(k);
    if (x.real() != y.real()) return x.real() < y.real() ? -1 : 1;
    if (x.imag() != y.imag()) return x.imag() < y.imag() ? -1 : 1;
  }
  return 0;
}

// Canonical order: highest log power first, cosine before sine, then the
// remaining fields.
bool term_before(const Term& a, const Term& b) {
  const auto& x = a.spec;
  const auto& y = b.spec;
  if (x.m != y.m) return x.m > y.m;
  if (x.kind != y.kind) return x.kind == TrigKind::Cos;
  if (int c = compare_poly(x.f.den(), y.f.den()); c != 0) return c < 0;
  if (int c = compare_poly(x.f.num(), y.f.num()); c != 0) return c < 0;
  if (x.s != y.s) return x.s < y.s;
  if (x.phase != y.phase) return x.phase < y.phase;
  return x.n < y.n;
}

bool close(Complex a, Complex b, double rel_tol) {
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) <= rel_tol * scale;
}

}  // namespace

Relation Relation::normalized() const {
  Relation out;
  out.provenance = provenance;
  out.rhs = rhs;
  for (const auto& t : terms) {
    auto it = std::find_if(out.terms.begin(), out.terms.end(), [&](const Term& u) { return u.spec == t.spec; });
    if (it == out.terms.end()) {
      out.terms.push_back(t);
    } else {
      it->coefficient += t.coefficient;
    }
  }
  std::erase_if(out.terms, [](const Term& t) { return t.coefficient == Complex(0.0); });
  std::stable_sort(out.terms.begin(), out.terms.end(), term_before);
  if (!out.terms.empty()) {
    const Complex lead = out.terms.front().coefficient;
    for (auto& t : out.terms) t.coefficient /= lead;
    out.terms.front().coefficient = 1.0;
    out.rhs /= lead;
  }
  return out;
}

RationalFunction inverse_quadratic_power(int r) {
  if (r < 0) throw DomainError("inverse_quadratic_power: r must be nonnegative");
  const std::pair<Polynomial, int> factor{quadratic(), r + 1};
  return RationalFunction::from_factors(Polynomial{1.0}, 1.0, std::span(&factor, 1));
}

RationalFunction x_over_quadratic_power(int r) {
  if (r < 0) throw DomainError("x_over_quadratic_power: r must be nonnegative");
  const std::pair<Polynomial, int> factor{quadratic(), r + 1};
  return RationalFunction::from_factors(Polynomial{0.0, 1.0}, 1.0, std::span(&factor, 1));
}

std::optional<double> known_closed_form(const IntegralSpec& spec) {
  if (spec.m != 0 || spec.phase != spec.s) return std::nullopt;
  const int d = spec.f.den().degree();
  if (d < 2 || d % 2 != 0) return std::nullopt;
  const int r = d / 2 - 1;
  if (!(spec.f.den() == pow(quadratic(), r + 1))) return std::nullopt;
  try {
    if (spec.kind == TrigKind::Cos && spec.f.num() == Polynomial{1.0}) return closed_cos_pow(r, spec.n, spec.s);
    if (spec.kind == TrigKind::Sin && spec.f.num() == Polynomial{0.0, 1.0}) return closed_x_sin_pow(r, spec.n, spec.s);
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

Relation fold_known(const Relation& relation, const KnownValue& known) {
  Relation out;
  out.provenance = relation.provenance;
  out.rhs = relation.rhs;
  for (const auto& t : relation.terms) {
    if (auto v = known(t.spec)) {
      out.rhs -= t.coefficient * *v;
    } else {
      out.terms.push_back(t);
    }
  }
  return out.normalized();
}

bool structural_equal(const Relation& a, const Relation& b, double rel_tol) {
  const Relation x = a.normalized();
  const Relation y = b.normalized();
  if (x.terms.size() != y.terms.size()) return false;
  for (std::size_t k = 0; k < x.terms.size(); ++k) {
    if (!(x.terms[k].spec == y.terms[k].spec)) return false;
    if (!close(x.terms[k].coefficient, y.terms[k].coefficient, rel_tol)) return false;
  }
  return close(x.rhs, y.rhs, rel_tol);
}

std::pair<Relation, Relation> log_pair(double n) {
  require_positive_n(n, "log_pair");
  const auto f = inverse_quadratic_power(0);
  Relation first{{{1.0, spec(f, TrigKind::Sin, n, 0)}, {2.0 / kPi, spec(f, TrigKind::Cos, n, 1)}},
                 0.0,
                 tag("log-pair1(n=%g)", n)};
  Relation second{{{1.0, spec(f, TrigKind::Sin, n, 1)}, {1.0 / kPi, spec(f, TrigKind::Cos, n, 2)}},
                  kPi * kPi * std::exp(-n) / 8.0,
                  tag("log-pair2(n=%g)", n)};
  return {first.normalized(), second.normalized()};
}

std::pair<Relation, Relation> recurrence_relations(const RationalFunction& f, double n, int m) {
  require_positive_n(n, "recurrence_relations");
  if (m < 0) throw DomainError("recurrence_relations: m must be nonnegative");
  const Parity parity = classify_parity(f);
  if (parity == Parity::Neither) throw ParityError("recurrence_relations: f must be even or odd");
  const double sign = parity == Parity::Even ? 1.0 : -1.0;
  const Complex S = residue_sum(f, WeightParams{n, 0.0, m});

  // Complex coefficients of I_k and J_k on the right of S = ...
  std::vector<Complex> ci(static_cast<std::size_t>(m) + 1), cj(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    const Complex t = sign * binom(m, k) * real_power(kPi, m - k) * i_power(m - k);
    ci[static_cast<std::size_t>(k)] += t;
    cj[static_cast<std::size_t>(k)] += t * Complex(0.0, -1.0);
  }
  ci[static_cast<std::size_t>(m)] += 1.0;
  cj[static_cast<std::size_t>(m)] += kI;

  const char* name = parity == Parity::Even ? "recurrence-even" : "recurrence-odd";
  Relation re, im;
  for (int k = 0; k <= m; ++k) {
    const auto sk = static_cast<std::size_t>(k);
    re.terms.push_back({ci[sk].real(), spec(f, TrigKind::Cos, n, k)});
    re.terms.push_back({cj[sk].real(), spec(f, TrigKind::Sin, n, k)});
    im.terms.push_back({ci[sk].imag(), spec(f, TrigKind::Cos, n, k)});
    im.terms.push_back({cj[sk].imag(), spec(f, TrigKind::Sin, n, k)});
  }
  re.rhs = S.real();
  im.rhs = S.imag();
  re.provenance = std::string(name) + tag("(m=%g,n=%g).re", m, n);
  im.provenance = std::string(name) + tag("(m=%g,n=%g).im", m, n);
  return {re.normalized(), im.normalized()};
}

Relation derivative_family(int m, double n) {
  require_positive_n(n, "derivative_family");
  if (m < 1) throw DomainError("derivative_family: m must be at least 1");
  const auto f = inverse_quadratic_power(0);
  Relation rel;
  for (int k = 0; k <= m; ++k) {
    const double c = binom(m, k) * real_power(kPi / 2.0, k) * ((k / 2) % 2 == 0 ? 1.0 : -1.0);
    rel.terms.push_back({c, spec(f, k % 2 == 0 ? TrigKind::Cos : TrigKind::Sin, n, m - k)});
  }
  rel.provenance = tag("derivative-family(m=%g,n=%g)", m, n);
  return rel.normalized();
}

std::vector<Relation> sin_family(double n) {
  require_positive_n(n, "sin_family");
  const auto f = x_over_quadratic_power(0);
  const double e = std::exp(-n);
  std::vector<Relation> out;
  out.push_back(Relation{{{1.0, spec(f, TrigKind::Sin, n, 0)}}, kPi / 2.0 * e, tag("sin-basic(n=%g)", n)});
  out.push_back(Relation{{{1.0, spec(f, TrigKind::Sin, n, 1)}, {-kPi / 2.0, spec(f, TrigKind::Cos, n, 0)}},
                         0.0,
                         tag("sin-log1(n=%g)", n)});
  out.push_back(Relation{{{1.0, spec(f, TrigKind::Sin, n, 2)}, {-kPi, spec(f, TrigKind::Cos, n, 1)}},
                         kPi * kPi * kPi / 8.0 * e,
                         tag("sin-log2(n=%g)", n)});
  for (auto& r : out) r = r.normalized();
  return out;
}

std::pair<Relation, Relation> phase_split(double s, double n) {
  require_nonnegative_n(n, "phase_split");
  if (!(s > -1.0 && s < 2.0)) throw DomainError("phase_split: s outside (-1, 2)");
  const auto f = inverse_quadratic_power(0);
  const auto cos_spec = spec(f, TrigKind::Cos, n, 0, s);
  const auto sin_spec = spec(f, TrigKind::Sin, n, 0, s);
  const double e = std::exp(-n);
  const double sps = sin_pi(s);
  const double cps = cos_pi(s);
  Relation re{{{1.0 + cps, cos_spec}, {sps, sin_spec}}, kPi * e * cos_pi(s / 2.0),
              tag("phase-split.re(s=%g,n=%g)", s, n)};
  Relation im{{{sps, cos_spec}, {1.0 - cps, sin_spec}}, kPi * e * sin_pi(s / 2.0),
              tag("phase-split.im(s=%g,n=%g)", s, n)};
  return {re.normalized(), im.normalized()};
}

Relation shifted_cos_identity(double s, double n) {
  require_nonnegative_n(n, "shifted_cos_identity");
  if (!(s > -1.0 && s < 2.0)) throw DomainError("shifted_cos_identity: s outside (-1, 2)");
  const auto f = inverse_quadratic_power(0);
  return Relation{{{1.0, spec(f, TrigKind::Cos, n, 0, s, s)}}, kPi / 2.0 * std::exp(-n),
                  tag("shifted-cos(s=%g,n=%g)", s, n)};
}

Relation shifted_sin_companion(double s, double n) {
  require_nonnegative_n(n, "shifted_sin_companion");
  if (!(s > -2.0 && s < 1.0)) throw DomainError("shifted_sin_companion: s outside (-2, 1)");
  const auto f = x_over_quadratic_power(0);
  return Relation{{{1.0, spec(f, TrigKind::Sin, n, 0, s, s)}}, kPi / 2.0 * std::exp(-n),
                  tag("shifted-sin(s=%g,n=%g)", s, n)};
}

Relation general_even(const RationalFunction& f, double n, double s) {
  require_nonnegative_n(n, "general_even");
  if (classify_parity(f) != Parity::Even) throw ParityError("general_even: f must be even");
  if (degree_gap(f) < 2) throw DegreeGapError("general_even: degree gap must be at least 2");
  const Complex S = residue_sum(f, WeightParams{n, s, 0});
  const Complex unit = s == 0.0 ? Complex(1.0) : std::polar(1.0, kPi * s / 2.0);
  return Relation{{{1.0, spec(f, TrigKind::Cos, n, 0, s, s)}}, S / (2.0 * unit),
                  tag("general-even(s=%g,n=%g)", s, n)};
}

Relation generalized_log(int r, double n) {
  require_positive_n(n, "generalized_log");
  const auto g = inverse_quadratic_power(r);
  Relation rel{{{1.0, spec(g, TrigKind::Sin, n, 0)}, {2.0 / kPi, spec(g, TrigKind::Cos, n, 1)}},
               generalized_log_rhs(r, n),
               tag("generalized-log(r=%g,n=%g)", r, n)};
  return rel.normalized();
}

Relation odd_closing(int r, double n) {
  require_positive_n(n, "odd_closing");
  const auto g = inverse_quadratic_power(r);
  const auto xg = x_over_quadratic_power(r);
  Relation rel{{{1.0, spec(xg, TrigKind::Cos, n, 0)},
                {-2.0 / kPi, spec(xg, TrigKind::Sin, n, 1)},
                {-2.0 / kPi, spec(g, TrigKind::Cos, n, 0)},
                {2.0 / kPi, spec(xg, TrigKind::Sin, n, 0)}},
               -odd_closing_tail_sum(r, n),
               tag("odd-closing(r=%g,n=%g)", r, n)};
  return rel.normalized();
}

Relation cos_pow_closed(int r, double n, double s) {
  require_nonnegative_n(n, "cos_pow_closed");
  const double value = closed_cos_pow(r, n, s);
  return Relation{{{1.0, spec(inverse_quadratic_power(r), TrigKind::Cos, n, 0, s, s)}}, value,
                  tag("cos-pow(r=%g,s=%g,n=%g)", r, s, n)};
}

Relation x_sin_pow_closed(int r, double n, double s) {
  require_nonnegative_n(n, "x_sin_pow_closed");
  const double value = closed_x_sin_pow(r, n, s);
  return Relation{{{1.0, spec(x_over_quadratic_power(r), TrigKind::Sin, n, 0, s, s)}}, value,
                  tag("x-sin-pow(r=%g,s=%g,n=%g)", r, s, n)};
}

Relation bessel_form(int r, double n) {
  require_positive_n(n, "bessel_form");
  return Relation{{{1.0, spec(inverse_quadratic_power(r), TrigKind::Cos, n, 0)}}, bessel_k_half(r, n),
                  tag("bessel-form(r=%g,n=%g)", r, n)};
}

VerifiedRelation verify(const Relation& relation, const QuadratureConfig& cfg) {
  VerifiedRelation out;
  out.relation = relation;
  double magnitude = 0.0;
  for (const auto& t : relation.terms) {
    out.values.push_back(integrate_spec(t.spec, cfg));
    const Complex contribution = t.coefficient * out.values.back().value;
    out.lhs += contribution;
    magnitude += std::abs(contribution);
  }
  out.residual = std::abs(out.lhs - relation.rhs);
  out.scaled_residual = out.residual / (1.0 + std::abs(relation.rhs) + magnitude);
  return out;
}

}  // namespace ramq
