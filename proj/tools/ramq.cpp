// ramq: verify integral identities, evaluate single integrals and residues.
//
// Exit codes: 0 success / all relations pass, 1 a relation failed,
// 2 bad flags, parse or domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramq/errors.hpp"
#include "ramq/parse.hpp"
#include "ramq/quadrature.hpp"
#include "ramq/residue.hpp"
#include "ramq/suites.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string suite;
  std::string n_list = "0.5,1,2";
  std::string r_range = "0..4";
  int m = 3;
  double tol = 1e-8;
  std::string format = "text";
  std::string out;
  int jobs = 0;

  std::string f;
  std::string kind = "cos";
  double n = 1.0;
  double s = 0.0;
  double phase = 0.0;
  bool phase_set = false;
  double quad_tol = 1e-10;
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ramq::DomainError("bad number '" + item + "' in --n");
    }
    if (used != item.size()) throw ramq::DomainError("bad number '" + item + "' in --n");
    out.push_back(v);
  }
  if (out.empty()) throw ramq::DomainError("--n needs at least one value");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {0, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ramq::DomainError("bad range '" + text + "', expected a..b or b");
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ramq::DomainError("cannot open '" + path + "' for writing");
  file << text;
}

ramq::SuiteOptions suite_options(const Flags& fl) {
  ramq::SuiteOptions o;
  o.n_values = parse_list(fl.n_list);
  const auto [lo, hi] = parse_range(fl.r_range);
  o.r_min = lo;
  o.r_max = hi;
  o.m_max = fl.m;
  o.tol = fl.tol;
  o.jobs = fl.jobs;
  o.quad.target_abs_tol = fl.quad_tol;
  return o;
}

int cmd_verify(const Flags& fl) {
  const auto report = ramq::run_suite(fl.suite, suite_options(fl));
  emit(ramq::format_report(report, fl.format), fl.out);
  return report.all_pass() ? 0 : kExitFail;
}

int cmd_table(const Flags& fl) {
  const auto rows = ramq::make_table(suite_options(fl));
  emit(ramq::format_table(rows, fl.format), fl.out);
  for (const auto& r : rows)
    if (!r.pass) return kExitFail;
  return 0;
}

int cmd_integrate(const Flags& fl) {
  if (fl.kind != "cos" && fl.kind != "sin") throw ramq::DomainError("--kind must be cos or sin");
  ramq::IntegralSpec spec{ramq::parse_rational(fl.f), fl.kind == "cos" ? ramq::TrigKind::Cos : ramq::TrigKind::Sin,
                          fl.n, fl.m, fl.s, fl.phase_set ? fl.phase : 0.0};
  ramq::QuadratureConfig cfg;
  cfg.target_abs_tol = fl.quad_tol;
  const auto q = ramq::integrate_spec(spec, cfg);
  std::string text;
  if (fl.format == "json") {
    nlohmann::json j{{"spec", ramq::describe(spec)},
                     {"f", ramq::format_rational(spec.f)},
                     {"value", ramq::round15(q.value)},
                     {"error_estimate", ramq::round15(q.error_estimate)},
                     {"core_levels", q.core_subdivisions},
                     {"tail_cells", q.tail_cells_used},
                     {"accelerated", q.accelerated},
                     {"converged", q.converged}};
    text = j.dump(2) + "\n";
  } else {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "integral       %s\nf              %s\nvalue          %.15g\nerror_estimate %.3e\n"
                  "core_levels    %d\ntail_cells     %d\naccelerated    %s\nconverged      %s\n",
                  ramq::describe(spec).c_str(), ramq::format_rational(spec.f).c_str(), q.value, q.error_estimate,
                  q.core_subdivisions, q.tail_cells_used, q.accelerated ? "yes" : "no", q.converged ? "yes" : "no");
    text = buf;
  }
  emit(text, fl.out);
  return q.converged ? 0 : kExitFail;
}

int cmd_residue(const Flags& fl) {
  const auto f = ramq::parse_rational(fl.f);
  const ramq::WeightParams w{fl.n, fl.s, fl.m};
  if (w.m < 0 || !(w.n >= 0.0)) throw ramq::DomainError("residue needs n >= 0 and m >= 0");
  const auto poles = ramq::upper_half_poles(f);
  const auto S = ramq::residue_sum(f, w);
  std::string text;
  if (fl.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : poles) {
      const auto res = ramq::residue_at(f, p, w);
      arr.push_back({{"pole", {ramq::round15(p.location.real()), ramq::round15(p.location.imag())}},
                     {"multiplicity", p.multiplicity},
                     {"residue", {ramq::round15(res.real()), ramq::round15(res.imag())}}});
    }
    nlohmann::json j{{"f", ramq::format_rational(f)},
                     {"n", fl.n},
                     {"s", fl.s},
                     {"m", fl.m},
                     {"poles", arr},
                     {"S", {ramq::round15(S.real()), ramq::round15(S.imag())}}};
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream out;
    char buf[256];
    out << "f " << ramq::format_rational(f) << "\n";
    for (const auto& p : poles) {
      const auto res = ramq::residue_at(f, p, w);
      std::snprintf(buf, sizeof buf, "pole % .15g %+.15gi  mult %d  residue % .15g %+.15gi\n", p.location.real(),
                    p.location.imag(), p.multiplicity, res.real(), res.imag());
      out << buf;
    }
    std::snprintf(buf, sizeof buf, "S % .15g %+.15gi\n", S.real(), S.imag());
    out << buf;
    text = out.str();
  }
  emit(text, fl.out);
  return 0;
}

void add_format(CLI::App* cmd, Flags& fl) {
  cmd->add_option("--format", fl.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", fl.out, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ramq: oscillatory log-power integrals, residues and their identities"};
  app.require_subcommand(1);
  Flags fl;

  std::string suite_help = "Suite name:";
  for (const auto& s : ramq::suite_names()) suite_help += " " + s;

  auto* verify = app.add_subcommand("verify", "Verify every relation of a suite against quadrature");
  verify->add_option("suite", fl.suite, suite_help)->required()->check(CLI::IsMember(ramq::suite_names()));
  verify->add_option("--n", fl.n_list, "Comma-separated frequencies");
  verify->add_option("--m", fl.m, "Highest log power")->check(CLI::NonNegativeNumber);
  verify->add_option("--r", fl.r_range, "Pole-order range a..b");
  verify->add_option("--tol", fl.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--quad-tol", fl.quad_tol, "Quadrature target absolute tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", fl.jobs, "Worker threads (default RAMQ_JOBS or hardware)")->check(CLI::NonNegativeNumber);
  add_format(verify, fl);

  auto* integrate = app.add_subcommand("integrate", "Integrate f(x) trig(nx - phase pi/2) x^s log^m x over (0, inf)");
  integrate->add_option("--f", fl.f, "Rational function of x, e.g. \"1/(x^2+1)\"")->required();
  integrate->add_option("--kind", fl.kind, "cos or sin")->check(CLI::IsMember({"cos", "sin"}));
  integrate->add_option("--n", fl.n, "Frequency")->check(CLI::NonNegativeNumber);
  integrate->add_option("--m", fl.m, "Log power")->check(CLI::NonNegativeNumber);
  integrate->add_option("--s", fl.s, "Algebraic power");
  integrate->add_option("--phase", fl.phase, "Phase shift in units of pi/2")->each([&](const std::string&) {
    fl.phase_set = true;
  });
  integrate->add_option("--tol", fl.quad_tol, "Target absolute tolerance")->check(CLI::PositiveNumber);
  add_format(integrate, fl);

  auto* residue = app.add_subcommand("residue", "Residues of e^{inz} f(z) z^s log^m z in the upper half-plane");
  residue->add_option("--f", fl.f, "Rational function of x")->required();
  residue->add_option("--n", fl.n, "Frequency")->check(CLI::NonNegativeNumber);
  residue->add_option("--s", fl.s, "Algebraic power");
  residue->add_option("--m", fl.m, "Log power")->check(CLI::NonNegativeNumber);
  add_format(residue, fl);

  auto* table = app.add_subcommand("table", "Tabulate the pole-order closed forms against quadrature");
  table->add_option("--r", fl.r_range, "Pole-order range a..b");
  table->add_option("--n", fl.n_list, "Comma-separated frequencies");
  table->add_option("--tol", fl.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  add_format(table, fl);

  // integrate and residue default to m = 0; verify defaults to 3.
  for (auto* cmd : {integrate, residue})
    cmd->preparse_callback([&](std::size_t) { fl.m = 0; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(fl);
    if (*integrate) return cmd_integrate(fl);
    if (*residue) return cmd_residue(fl);
    if (*table) return cmd_table(fl);
  } catch (const ramq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
