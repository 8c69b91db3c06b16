// Command-line front end: vertices | analyze | norm | valueset | oracle.
//
// Exit codes: 0 success, 2 input error, 3 instability, 4 numerical failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ivhinf/error.hpp"
#include "ivhinf/io.hpp"
#include "ivhinf/theorem.hpp"

namespace {

using namespace ivhinf;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUnstable = 3;
constexpr int kExitNumeric = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::ParseError:
    case ErrorKind::DegreeOrder:
    case ErrorKind::DeltaRange:
    case ErrorKind::ZeroPolynomial:
      return kExitInput;
    case ErrorKind::UnstableClosedLoop:
    case ErrorKind::UnstableDenominator:
    case ErrorKind::UnstableFamily:
      return kExitUnstable;
    default:
      return kExitNumeric;
  }
}

struct Flags {
  std::string file;
  std::string output;
  std::string format = "text";
  int digits = 9;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<int> theta_points;
  std::optional<double> tol;
  bool skip_bisection = false;
  std::optional<double> delta;
  double theta = 0.0;
  std::optional<double> omega;
  std::string sweep;
  std::string num;
  std::string den;
  std::optional<int> grid_points;
};

bool machine(const Flags& f) { return f.format == "machine"; }

void apply_overrides(const Flags& flags, AnalysisOptions& opts) {
  if (flags.seed) opts.seed = *flags.seed;
  if (flags.samples) opts.oracle_samples = *flags.samples;
  if (flags.theta_points) opts.theta_points = *flags.theta_points;
  if (flags.tol) opts.hurwitz_tol = *flags.tol;
  if (flags.skip_bisection) opts.run_bisection = false;
}

RealPolynomial parse_coefficients(const std::string& text, const std::string& flag) {
  std::vector<double> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (item.empty() || used != item.size() || !std::isfinite(v)) {
      throw Error(ErrorKind::ParseError, flag + ": bad coefficient '" + item + "'");
    }
    c.push_back(v);
  }
  if (c.empty()) throw Error(ErrorKind::ParseError, flag + ": no coefficients");
  return RealPolynomial(std::move(c));
}

std::string poly_text(const RealPolynomial& p, int digits) {
  std::string out = "[";
  for (int i = 0; i <= p.degree(); ++i) {
    if (i > 0) out += ", ";
    out += format_number(p.coeff(i), digits);
  }
  return (p.is_zero() ? std::string("[0") : out) + "]";
}

int cmd_vertices(const Flags& flags) {
  const ProblemFile pf = load_problem(flags.file);
  const KharitonovSet gv = kharitonov_vertices(pf.problem.numerator);
  const KharitonovSet fv = kharitonov_vertices(pf.problem.denominator);
  auto labels = {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}};
  if (machine(flags)) {
    json doc;
    for (auto [i, j] : labels) {
      const std::string key = std::to_string(i) + std::to_string(j);
      doc["numerator"][key] = to_json(gv.at(i, j));
      doc["denominator"][key] = to_json(fv.at(i, j));
    }
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "numerator family (degree " << pf.problem.numerator.degree() << "):\n";
  for (auto [i, j] : labels) std::cout << "  g" << i << j << ": " << poly_text(gv.at(i, j), flags.digits) << "\n";
  std::cout << "denominator family (degree " << pf.problem.denominator.degree() << "):\n";
  for (auto [i, j] : labels) std::cout << "  f" << i << j << ": " << poly_text(fv.at(i, j), flags.digits) << "\n";
  return kExitOk;
}

int cmd_analyze(const Flags& flags) {
  ProblemFile pf = load_problem(flags.file);
  apply_overrides(flags, pf.problem.options);
  pf.problem.validate();
  const AnalysisReport report = analyze(pf.problem);
  const json doc = report_to_json(pf.problem, report);
  if (!flags.output.empty()) {
    std::ofstream out(flags.output);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + flags.output);
    out << doc.dump(2) << "\n";
  }
  if (machine(flags)) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << format_report_text(pf.problem, report, flags.digits);
  }
  return report.family_stable ? kExitOk : kExitUnstable;
}

int cmd_norm(const Flags& flags) {
  std::optional<RationalFunction> s;
  std::optional<double> omega_max;
  std::optional<int> grid_points = flags.grid_points;
  if (!flags.file.empty()) {
    if (!flags.num.empty() || !flags.den.empty()) {
      throw Error(ErrorKind::InvalidArgument, "give either a problem file or --num/--den, not both");
    }
    const ProblemFile pf = load_problem(flags.file);
    if (!pf.problem.numerator.is_point() || !pf.problem.denominator.is_point()) {
      throw Error(ErrorKind::InvalidArgument, "norm needs point intervals (a single plant)");
    }
    s = sensitivity(pf.problem.numerator.midpoint(), pf.problem.denominator.midpoint());
    omega_max = pf.omega_max;
    if (!grid_points) grid_points = pf.grid_points;
  } else {
    if (flags.num.empty() || flags.den.empty()) {
      throw Error(ErrorKind::InvalidArgument, "norm needs a problem file or both --num and --den");
    }
    s.emplace(parse_coefficients(flags.num, "--num"), parse_coefficients(flags.den, "--den"));
  }
  const NormResult exact = hinf_norm_exact(*s);
  const double wmax = omega_max.value_or(10.0 * cauchy_bound(s->den()));
  const int points = grid_points.value_or(1000000);
  const double grid = hinf_norm_grid(*s, wmax, points);
  if (machine(flags)) {
    json doc = to_json(exact);
    doc["grid"] = {{"value", grid}, {"omega_max", wmax}, {"points", points}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "norm: " << format_number(exact.value, flags.digits) << "\n";
  std::cout << "attained at: "
            << (exact.at_infinity ? std::string("infinity") : "omega = " + format_number(exact.attained_at, flags.digits))
            << "\n";
  std::cout << "grid check: " << format_number(grid, flags.digits) << " (" << points << " points up to omega "
            << format_number(wmax, flags.digits) << ")\n";
  return kExitOk;
}

int cmd_valueset(const Flags& flags) {
  const ProblemFile pf = load_problem(flags.file);
  if (!flags.delta) throw Error(ErrorKind::InvalidArgument, "--delta is required");
  const double delta = *flags.delta;
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorKind::DeltaRange, "--delta must lie in (0, 1)");
  const bool sweep = !flags.sweep.empty();
  if (sweep == flags.omega.has_value()) {
    throw Error(ErrorKind::InvalidArgument, "give exactly one of --omega or --sweep MAX:POINTS");
  }
  std::vector<double> omegas;
  if (sweep) {
    const auto colon = flags.sweep.find(':');
    double wmax = 0.0;
    int points = 0;
    try {
      if (colon == std::string::npos) throw std::invalid_argument("colon");
      std::size_t used = 0;
      wmax = std::stod(flags.sweep.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("max");
      const std::string tail = flags.sweep.substr(colon + 1);
      points = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument("points");
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "--sweep expects MAX:POINTS, got '" + flags.sweep + "'");
    }
    if (!(wmax > 0.0) || points < 2) throw Error(ErrorKind::InvalidArgument, "--sweep needs MAX > 0 and POINTS >= 2");
    omegas = sweep_frequencies(wmax, points);
  } else {
    omegas.push_back(*flags.omega);
  }

  std::cout << "omega,vertex_index,re,im,provenance" << (sweep ? ",margin" : "") << "\n";
  for (double omega : omegas) {
    const ValueSetPolygon poly = octagon(pf.problem.numerator, pf.problem.denominator, delta, flags.theta, omega);
    const std::string margin = sweep ? "," + format_number(origin_excluded(poly).margin, flags.digits) : "";
    for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
      const auto& v = poly.vertices[k];
      std::cout << format_number(omega, flags.digits) << "," << k << "," << format_number(v.point.real(), flags.digits)
                << "," << format_number(v.point.imag(), flags.digits) << ",J" << v.source.label() << margin << "\n";
    }
  }
  return kExitOk;
}

int cmd_oracle(const Flags& flags) {
  ProblemFile pf = load_problem(flags.file);
  apply_overrides(flags, pf.problem.options);
  pf.problem.validate();
  const auto& opts = pf.problem.options;
  if (!closed_loop_family_stable(pf.problem)) {
    std::cout << "closed-loop family stable: no\n";
    return kExitUnstable;
  }
  const VertexMaximum twelve = max_sensitivity_twelve(pf.problem);
  const OracleResult r = monte_carlo_oracle(pf.problem, opts.oracle_samples, opts.seed);
  if (machine(flags)) {
    json doc = {{"oracle_max", r.max_norm},
                {"oracle_min", r.min_norm},
                {"argmax_origin", r.argmax_origin},
                {"argmax_numerator", to_json(r.argmax_numerator)},
                {"argmax_denominator", to_json(r.argmax_denominator)},
                {"twelve_vertex_max", twelve.worst_norm},
                {"delta", r.max_norm - twelve.worst_norm},
                {"evaluated", r.evaluated},
                {"skipped", r.skipped},
                {"injected", r.injected},
                {"samples", opts.oracle_samples},
                {"seed", opts.seed}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  const int d = flags.digits;
  std::cout << "oracle max: " << format_number(r.max_norm, d) << " from " << r.argmax_origin << "\n";
  std::cout << "argmax numerator: " << poly_text(r.argmax_numerator, d) << "\n";
  std::cout << "argmax denominator: " << poly_text(r.argmax_denominator, d) << "\n";
  std::cout << "twelve-vertex max: " << format_number(twelve.worst_norm, d) << " (tuple " << twelve.argmax.label()
            << ")\n";
  std::cout << "delta oracle - twelve: " << format_number(r.max_norm - twelve.worst_norm, d) << "\n";
  std::cout << "samples " << opts.oracle_samples << ", seed " << opts.seed << ", evaluated " << r.evaluated
            << ", skipped " << r.skipped << ", injected " << r.injected << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Worst-case sensitivity peaks of interval feedback systems"};
  app.require_subcommand(1);
  Flags flags;

  auto common = [&](CLI::App* sub, bool needs_file) {
    auto* opt = sub->add_option("file", flags.file, "Problem file");
    if (needs_file) opt->required();
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--digits", flags.digits, "Significant digits in printed numbers")->check(CLI::Range(1, 17));
  };

  auto* vertices = app.add_subcommand("vertices", "Print the Kharitonov vertices of both families");
  common(vertices, true);

  auto* analyze_cmd = app.add_subcommand("analyze", "Worst-case sensitivity norm over the family");
  common(analyze_cmd, true);
  analyze_cmd->add_option("--output", flags.output, "Write the machine-readable report here");
  analyze_cmd->add_option("--seed", flags.seed, "Oracle random seed");
  analyze_cmd->add_option("--samples", flags.samples, "Oracle sample count")->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--theta-points", flags.theta_points, "Theta grid size")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--tol", flags.tol, "Hurwitz tolerance for root-based tests")->check(CLI::NonNegativeNumber);
  analyze_cmd->add_flag("--skip-bisection", flags.skip_bisection, "Skip the theta-grid bisection cross-check");

  auto* norm = app.add_subcommand("norm", "H-infinity norm of one sensitivity or rational function");
  common(norm, false);
  norm->add_option("--num", flags.num, "Numerator coefficients, ascending, comma separated");
  norm->add_option("--den", flags.den, "Denominator coefficients, ascending, comma separated");
  norm->add_option("--grid-points", flags.grid_points, "Grid size of the cross-check")->check(CLI::Range(2, 100000000));

  auto* valueset = app.add_subcommand("valueset", "CSV of value-set polygon vertices");
  common(valueset, true);
  valueset->add_option("--delta", flags.delta, "Perturbation radius in (0, 1)")->required();
  valueset->add_option("--theta", flags.theta, "Perturbation angle in radians");
  valueset->add_option("--omega", flags.omega, "Single frequency");
  valueset->add_option("--sweep", flags.sweep, "Frequency sweep MAX:POINTS");

  auto* oracle = app.add_subcommand("oracle", "Monte-Carlo search against the twelve-vertex value");
  common(oracle, true);
  oracle->add_option("--seed", flags.seed, "Random seed");
  oracle->add_option("--samples", flags.samples, "Sample count")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (app.got_subcommand(vertices)) return cmd_vertices(flags);
    if (app.got_subcommand(analyze_cmd)) return cmd_analyze(flags);
    if (app.got_subcommand(norm)) return cmd_norm(flags);
    if (app.got_subcommand(valueset)) return cmd_valueset(flags);
    if (app.got_subcommand(oracle)) return cmd_oracle(flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitInput;
}
