#include "ivhinf/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ivhinf/error.hpp"

namespace ivhinf {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, path + ": " + what);
}

double number_at(const json& v, const std::string& path) {
  if (!v.is_number()) field_error(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) field_error(path, "number is not finite");
  return d;
}

IntervalPolynomial parse_family(const json& doc, const std::string& key) {
  if (!doc.contains(key)) field_error(key, "missing");
  const json& arr = doc.at(key);
  if (!arr.is_array() || arr.empty()) field_error(key, "expected a non-empty array of [lower, upper] pairs");
  std::vector<double> lo;
  std::vector<double> hi;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = key + "[" + std::to_string(i) + "]";
    const json& pair = arr[i];
    if (pair.is_number()) {
      // A bare number is a point interval.
      lo.push_back(number_at(pair, path));
      hi.push_back(lo.back());
      continue;
    }
    if (!pair.is_array() || pair.size() != 2) field_error(path, "expected [lower, upper]");
    lo.push_back(number_at(pair[0], path + "[0]"));
    hi.push_back(number_at(pair[1], path + "[1]"));
    if (lo.back() > hi.back()) {
      field_error(path, "lower bound " + format_number(lo.back()) + " exceeds upper bound " +
                            format_number(hi.back()));
    }
  }
  return {std::move(lo), std::move(hi)};
}

json family_json(const IntervalPolynomial& k) {
  json arr = json::array();
  for (int i = 0; i <= k.degree(); ++i) arr.push_back({k.lower(i), k.upper(i)});
  return arr;
}

json vertex_max_json(const VertexMaximum& v) {
  json per = json::array();
  for (const auto& t : v.per_tuple) {
    json entry = to_json(t.norm);
    entry["tuple"] = t.tuple.label();
    per.push_back(std::move(entry));
  }
  return {{"worst_norm", v.worst_norm}, {"argmax", v.argmax.label()}, {"per_tuple", std::move(per)}};
}

NormResult norm_from_json(const json& j) {
  NormResult n;
  n.value = j.at("value").get<double>();
  n.at_infinity = j.at("at_infinity").get<bool>();
  n.attained_at = n.at_infinity ? std::numeric_limits<double>::infinity() : j.at("attained_at").get<double>();
  n.limit = j.at("limit").get<double>();
  for (const auto& c : j.at("candidates")) n.candidates.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
  return n;
}

VertexMaximum vertex_max_from_json(const json& j) {
  VertexMaximum v;
  v.worst_norm = j.at("worst_norm").get<double>();
  v.argmax = VertexTuple::parse(j.at("argmax").get<std::string>());
  for (const auto& e : j.at("per_tuple")) {
    v.per_tuple.push_back({VertexTuple::parse(e.at("tuple").get<std::string>()), norm_from_json(e)});
  }
  return v;
}

RealPolynomial poly_from_json(const json& j) { return RealPolynomial(j.get<std::vector<double>>()); }

std::string poly_text(const RealPolynomial& p, int digits) {
  std::string out = "[";
  for (int i = 0; i <= p.degree(); ++i) {
    if (i > 0) out += ", ";
    out += format_number(p.coeff(i), digits);
  }
  return out + "]";
}

std::string omega_text(const NormResult& n, int digits) {
  return n.at_infinity ? std::string("inf") : format_number(n.attained_at, digits);
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) field_error("<root>", "expected an object");

  ProblemFile out;
  out.problem.denominator = parse_family(doc, "denominator");
  out.problem.numerator = parse_family(doc, "numerator");

  if (doc.contains("options")) {
    const json& o = doc.at("options");
    if (!o.is_object()) field_error("options", "expected an object");
    auto& opts = out.problem.options;
    auto integer = [&](const char* key, auto& dst) {
      if (!o.contains(key)) return;
      const json& v = o.at(key);
      if (!v.is_number_integer()) field_error(std::string("options.") + key, "expected an integer");
      if (v.is_number_unsigned()) {
        dst = static_cast<std::remove_reference_t<decltype(dst)>>(v.get<std::uint64_t>());
      } else {
        const auto s = v.get<std::int64_t>();
        if (s < 0) field_error(std::string("options.") + key, "must be non-negative");
        dst = static_cast<std::remove_reference_t<decltype(dst)>>(s);
      }
    };
    auto real = [&](const char* key) -> std::optional<double> {
      if (!o.contains(key)) return std::nullopt;
      return number_at(o.at(key), std::string("options.") + key);
    };
    for (const auto& [key, value] : o.items()) {
      static const char* known[] = {"hurwitz_tol", "theta_points", "oracle_samples", "seed",
                                    "bisection_tol", "omega_max", "grid_points"};
      if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
        field_error("options." + key, "unknown option");
      }
    }
    if (auto v = real("hurwitz_tol")) opts.hurwitz_tol = *v;
    if (auto v = real("bisection_tol")) opts.bisection_tol = *v;
    integer("theta_points", opts.theta_points);
    integer("oracle_samples", opts.oracle_samples);
    integer("seed", opts.seed);
    out.omega_max = real("omega_max");
    if (o.contains("grid_points")) {
      int points = 0;
      integer("grid_points", points);
      out.grid_points = points;
    }
  }

  try {
    out.problem.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return out;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string format_number(double value, int digits) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
  return {buf, res.ptr};
}

json to_json(const RealPolynomial& p) { return json(std::vector<double>(p.coeffs().begin(), p.coeffs().end())); }

json to_json(const NormResult& n) {
  json cands = json::array();
  for (const auto& c : n.candidates) cands.push_back({c.omega, c.magnitude});
  return {{"value", n.value},
          {"attained_at", n.at_infinity ? json(nullptr) : json(n.attained_at)},
          {"at_infinity", n.at_infinity},
          {"limit", n.limit},
          {"candidates", std::move(cands)}};
}

json report_to_json(const AnalysisProblem& prob, const AnalysisReport& report) {
  const auto& o = report.options;
  json doc = {
      {"problem", {{"numerator", family_json(prob.numerator)}, {"denominator", family_json(prob.denominator)}}},
      {"options",
       {{"hurwitz_tol", o.hurwitz_tol},
        {"theta_points", o.theta_points},
        {"oracle_samples", o.oracle_samples},
        {"seed", o.seed},
        {"bisection_tol", o.bisection_tol},
        {"run_bisection", o.run_bisection}}},
      {"family_stable", report.family_stable},
  };
  if (report.twelve) doc["twelve"] = vertex_max_json(*report.twelve);
  if (report.sixteen) doc["sixteen"] = vertex_max_json(*report.sixteen);
  if (report.oracle) {
    const auto& r = *report.oracle;
    doc["oracle"] = {{"max_norm", r.max_norm},
                     {"min_norm", r.min_norm},
                     {"argmax_numerator", to_json(r.argmax_numerator)},
                     {"argmax_denominator", to_json(r.argmax_denominator)},
                     {"argmax_origin", r.argmax_origin},
                     {"evaluated", r.evaluated},
                     {"skipped", r.skipped},
                     {"injected", r.injected}};
  }
  if (report.bisection_norm) doc["bisection_norm"] = *report.bisection_norm;
  if (report.twelve) {
    const double w = report.twelve->worst_norm;
    json checks = json::object();
    if (report.sixteen) checks["sixteen_minus_twelve"] = report.sixteen->worst_norm - w;
    if (report.oracle) checks["oracle_minus_twelve"] = report.oracle->max_norm - w;
    if (report.bisection_norm) checks["bisection_minus_twelve"] = *report.bisection_norm - w;
    doc["cross_checks"] = std::move(checks);
  }
  return doc;
}

AnalysisReport report_from_json(const json& doc) {
  AnalysisReport r;
  try {
    const json& o = doc.at("options");
    r.options.hurwitz_tol = o.at("hurwitz_tol").get<double>();
    r.options.theta_points = o.at("theta_points").get<int>();
    r.options.oracle_samples = o.at("oracle_samples").get<int>();
    r.options.seed = o.at("seed").get<std::uint64_t>();
    r.options.bisection_tol = o.at("bisection_tol").get<double>();
    r.options.run_bisection = o.at("run_bisection").get<bool>();
    r.family_stable = doc.at("family_stable").get<bool>();
    if (doc.contains("twelve")) r.twelve = vertex_max_from_json(doc.at("twelve"));
    if (doc.contains("sixteen")) r.sixteen = vertex_max_from_json(doc.at("sixteen"));
    if (doc.contains("oracle")) {
      const json& j = doc.at("oracle");
      OracleResult orc;
      orc.max_norm = j.at("max_norm").get<double>();
      orc.min_norm = j.at("min_norm").get<double>();
      orc.argmax_numerator = poly_from_json(j.at("argmax_numerator"));
      orc.argmax_denominator = poly_from_json(j.at("argmax_denominator"));
      orc.argmax_origin = j.at("argmax_origin").get<std::string>();
      orc.evaluated = j.at("evaluated").get<int>();
      orc.skipped = j.at("skipped").get<int>();
      orc.injected = j.at("injected").get<int>();
      r.oracle = std::move(orc);
    }
    if (doc.contains("bisection_norm")) r.bisection_norm = doc.at("bisection_norm").get<double>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report document: ") + e.what());
  }
  return r;
}

std::string format_report_text(const AnalysisProblem& prob, const AnalysisReport& report, int digits) {
  std::ostringstream os;
  auto num = [&](double v) { return format_number(v, digits); };
  os << "numerator family:   degree " << prob.numerator.degree() << "\n";
  os << "denominator family: degree " << prob.denominator.degree() << "\n";
  os << "closed-loop family stable: " << (report.family_stable ? "yes" : "no") << "\n";
  if (!report.family_stable) return os.str();

  if (report.twelve) {
    const auto& t = *report.twelve;
    const NormResult* best = nullptr;
    for (const auto& e : t.per_tuple)
      if (e.tuple == t.argmax) best = &e.norm;
    os << "worst-case sensitivity norm: " << num(t.worst_norm) << "\n";
    os << "attained at tuple " << t.argmax.label() << ", omega = " << (best ? omega_text(*best, digits) : "?")
       << "\n";
    os << "per-tuple norms:\n";
    for (const auto& e : t.per_tuple) {
      os << "  " << e.tuple.label() << "  " << num(e.norm.value) << "  omega = " << omega_text(e.norm, digits)
         << "\n";
    }
  }
  if (report.sixteen) {
    os << "sixteen-tuple max: " << num(report.sixteen->worst_norm) << " (tuple " << report.sixteen->argmax.label()
       << ")\n";
  }
  if (report.oracle) {
    const auto& r = *report.oracle;
    os << "oracle max: " << num(r.max_norm) << " from " << r.argmax_origin << "\n";
    os << "oracle argmax numerator: " << poly_text(r.argmax_numerator, digits) << "\n";
    os << "oracle argmax denominator: " << poly_text(r.argmax_denominator, digits) << "\n";
    os << "oracle min: " << num(r.min_norm) << "\n";
    os << "oracle draws: evaluated " << r.evaluated << ", skipped " << r.skipped << ", injected " << r.injected
       << ", seed " << report.options.seed << "\n";
  }
  if (report.bisection_norm) {
    os << "bisection norm: " << num(*report.bisection_norm) << " (tol " << num(report.options.bisection_tol)
       << ", " << report.options.theta_points << " theta points)\n";
  }
  if (report.twelve) {
    const double w = report.twelve->worst_norm;
    if (report.sixteen) os << "delta sixteen - twelve: " << num(report.sixteen->worst_norm - w) << "\n";
    if (report.oracle) os << "delta oracle - twelve: " << num(report.oracle->max_norm - w) << "\n";
    if (report.bisection_norm) os << "delta bisection - twelve: " << num(*report.bisection_norm - w) << "\n";
  }
  return os.str();
}

}  // namespace ivhinf
