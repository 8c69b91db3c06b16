#include "ivhinf/valueset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ivhinf/error.hpp"

namespace ivhinf {

VertexTuple VertexTuple::parse(const std::string& label) {
  if (label.size() != 4 ||
      !std::all_of(label.begin(), label.end(), [](char c) { return c == '1' || c == '2'; })) {
    throw Error(ErrorKind::InvalidArgument, "vertex tuple label must be four digits from {1, 2}: " + label);
  }
  return {label[0] - '0', label[1] - '0', label[2] - '0', label[3] - '0'};
}

std::string VertexTuple::label() const {
  return {static_cast<char>('0' + i1), static_cast<char>('0' + j1), static_cast<char>('0' + i2),
          static_cast<char>('0' + j2)};
}

namespace {

template <std::size_t N>
std::array<VertexTuple, N> parse_all(const std::array<const char*, N>& labels) {
  std::array<VertexTuple, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = VertexTuple::parse(labels[k]);
  return out;
}

bool contains(std::span<const VertexTuple> set, const VertexTuple& t) {
  return std::find(set.begin(), set.end(), t) != set.end();
}

}  // namespace

const std::array<VertexTuple, 16>& all_tuples() {
  static const auto tuples = [] {
    std::array<VertexTuple, 16> out;
    int k = 0;
    for (int i1 = 1; i1 <= 2; ++i1)
      for (int j1 = 1; j1 <= 2; ++j1)
        for (int i2 = 1; i2 <= 2; ++i2)
          for (int j2 = 1; j2 <= 2; ++j2) out[k++] = {i1, j1, i2, j2};
    return out;
  }();
  return tuples;
}

const std::array<VertexTuple, 12>& critical_tuples() {
  static const auto tuples = parse_all<12>({"1111", "1212", "2222", "2121", "1112", "1222", "2221",
                                            "2111", "1211", "2212", "2122", "1121"});
  return tuples;
}

const std::array<VertexTuple, 8>& ccw_rotation_tuples() {
  static const auto tuples =
      parse_all<8>({"1111", "1112", "1212", "1222", "2222", "2221", "2121", "2111"});
  return tuples;
}

const std::array<VertexTuple, 8>& cw_rotation_tuples() {
  static const auto tuples =
      parse_all<8>({"1111", "1211", "1212", "2212", "2222", "2122", "2121", "1121"});
  return tuples;
}

ComplexPolynomial j_polynomial(const KharitonovSet& g_vertices, const KharitonovSet& f_vertices,
                               const VertexTuple& t, double delta, double theta) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorKind::DeltaRange, "delta must lie in (0, 1)");
  const Complex c = 1.0 + std::polar(delta, theta);
  return add(ComplexPolynomial(g_vertices.at(t.i1, t.j1)), scale(f_vertices.at(t.i2, t.j2), c));
}

std::vector<VertexTuple> predicted_tuples(double omega, double delta, double theta) {
  const double arg = std::arg(1.0 + std::polar(delta, theta));
  const double orientation = omega * arg;
  std::vector<VertexTuple> out;
  if (orientation >= 0.0) {
    auto& a = ccw_rotation_tuples();
    out.insert(out.end(), a.begin(), a.end());
  }
  if (orientation <= 0.0) {
    for (const auto& t : cw_rotation_tuples())
      if (!contains(out, t)) out.push_back(t);
  }
  return out;
}

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(Complex a, Complex b, Complex z) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(z - a);
  const double t = std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + t * d));
}

// Clockwise convex hull; collinear and duplicate points are dropped. Input
// order decides which of several coincident points survives.
std::vector<PolygonVertex> convex_hull(const std::vector<PolygonVertex>& points, double scale) {
  const double same = 1e-13 * scale;
  std::vector<PolygonVertex> pts;
  for (const auto& p : points) {
    const bool dup = std::any_of(pts.begin(), pts.end(),
                                 [&](const PolygonVertex& q) { return std::abs(q.point - p.point) <= same; });
    if (!dup) pts.push_back(p);
  }
  if (pts.size() <= 2) return pts;

  std::stable_sort(pts.begin(), pts.end(), [](const PolygonVertex& a, const PolygonVertex& b) {
    if (a.point.real() != b.point.real()) return a.point.real() < b.point.real();
    return a.point.imag() < b.point.imag();
  });
  const double flat = 1e-13 * scale * scale;
  std::vector<PolygonVertex> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2].point, hull[k - 1].point, p.point) <= flat) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2].point, hull[k - 1].point, pts[i].point) <= flat) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  std::reverse(hull.begin(), hull.end());
  return hull;
}

ValueSetPolygon build_octagon(const KharitonovSet& gv, const KharitonovSet& fv, double delta, double theta,
                              double omega) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorKind::DeltaRange, "delta must lie in (0, 1)");
  const Complex c = 1.0 + std::polar(delta, theta);
  const std::vector<VertexTuple> predicted = predicted_tuples(omega, delta, theta);

  std::vector<PolygonVertex> points;
  points.reserve(16);
  double scale = 0.0;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& t : all_tuples()) {
      if (contains(predicted, t) != (pass == 0)) continue;
      const Complex z = gv.at(t.i1, t.j1).eval_at_jomega(omega) + c * fv.at(t.i2, t.j2).eval_at_jomega(omega);
      scale = std::max(scale, std::abs(z));
      points.push_back({z, t});
    }
  }
  if (scale == 0.0) scale = 1.0;

  ValueSetPolygon poly{convex_hull(points, scale), omega, delta, theta};

  std::vector<PolygonVertex> expected_points(points.begin(),
                                             points.begin() + static_cast<std::ptrdiff_t>(predicted.size()));
  std::vector<Complex> expected;
  for (const auto& v : convex_hull(expected_points, scale)) expected.push_back(v.point);
  for (const auto& v : poly.vertices) {
    if (contains(predicted, v.source)) continue;
    if (signed_distance(expected, v.point) > 1e-9 * scale) {
      throw Error(ErrorKind::HullMismatch, "value-set hull vertex J" + v.source.label() +
                                               " lies outside the predicted polygon");
    }
  }

  // Start the clockwise listing at J1111 when it is a vertex.
  auto first = std::find_if(poly.vertices.begin(), poly.vertices.end(),
                            [](const PolygonVertex& v) { return v.source == VertexTuple{1, 1, 1, 1}; });
  if (first != poly.vertices.end()) std::rotate(poly.vertices.begin(), first, poly.vertices.end());
  return poly;
}

}  // namespace

ValueSetPolygon octagon(const IntervalPolynomial& numerator, const IntervalPolynomial& denominator,
                        double delta, double theta, double omega) {
  return build_octagon(kharitonov_vertices(numerator), kharitonov_vertices(denominator), delta, theta, omega);
}

double signed_distance(std::span<const Complex> polygon, Complex z) {
  if (polygon.empty()) throw Error(ErrorKind::InvalidArgument, "distance to an empty polygon");
  if (polygon.size() == 1) return std::abs(z - polygon[0]);
  if (polygon.size() == 2) return segment_distance(polygon[0], polygon[1], z);
  double dist = std::numeric_limits<double>::infinity();
  bool inside = true;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Complex a = polygon[i];
    const Complex b = polygon[(i + 1) % polygon.size()];
    // Interior lies to the right of each clockwise edge.
    if (cross(a, b, z) > 0.0) inside = false;
    dist = std::min(dist, segment_distance(a, b, z));
  }
  return inside ? -dist : dist;
}

OriginExclusion origin_excluded(const ValueSetPolygon& polygon) {
  std::vector<Complex> pts;
  pts.reserve(polygon.vertices.size());
  for (const auto& v : polygon.vertices) pts.push_back(v.point);
  const double margin = signed_distance(pts, Complex{});
  return {margin > kExclusionMargin, margin};
}

bool family_complex_stability(const KharitonovSet& g_vertices, const KharitonovSet& f_vertices, double delta,
                              double theta, double tol) {
  for (const auto& t : critical_tuples()) {
    if (!is_hurwitz_complex(j_polynomial(g_vertices, f_vertices, t, delta, theta), tol).is_hurwitz) {
      return false;
    }
  }
  return true;
}

bool family_complex_stability(const IntervalPolynomial& numerator, const IntervalPolynomial& denominator,
                              double delta, double theta, double tol) {
  return family_complex_stability(kharitonov_vertices(numerator), kharitonov_vertices(denominator), delta,
                                  theta, tol);
}

double family_cauchy_bound(const IntervalPolynomial& numerator, const IntervalPolynomial& denominator,
                           double delta) {
  if (numerator.degree() >= denominator.degree()) {
    throw Error(ErrorKind::DegreeOrder, "numerator family degree must be below denominator degree");
  }
  const int n = denominator.degree();
  if (!(denominator.lower(n) > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "leading denominator interval must be strictly positive");
  }
  auto magnitude = [](const IntervalPolynomial& k, int i) {
    return std::max(std::abs(k.lower(i)), std::abs(k.upper(i)));
  };
  double num_max = 0.0;
  double den_max = 0.0;
  for (int i = 0; i <= numerator.degree(); ++i) num_max = std::max(num_max, magnitude(numerator, i));
  for (int i = 0; i < n; ++i) den_max = std::max(den_max, magnitude(denominator, i));
  return 1.0 + (num_max + (1.0 + delta) * den_max) / ((1.0 - delta) * denominator.lower(n));
}

std::vector<double> sweep_frequencies(double omega_max, int points) {
  if (points < 2) throw Error(ErrorKind::InvalidArgument, "sweep needs at least two points");
  const double span = std::asinh(omega_max);
  std::vector<double> out(points);
  for (int k = 0; k < points; ++k) out[k] = std::sinh(-span + 2.0 * span * k / (points - 1));
  if (points % 2 == 1) out[points / 2] = 0.0;
  return out;
}

SweepResult zero_exclusion_sweep(const IntervalPolynomial& numerator, const IntervalPolynomial& denominator,
                                 double delta, double theta, double omega_max, int points, double tol) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorKind::DeltaRange, "delta must lie in (0, 1)");
  const double bound = family_cauchy_bound(numerator, denominator, delta);
  if (omega_max < bound) {
    throw Error(ErrorKind::InvalidArgument, "sweep range must reach the family root bound " + std::to_string(bound));
  }
  const KharitonovSet gv = kharitonov_vertices(numerator);
  const KharitonovSet fv = kharitonov_vertices(denominator);

  SweepResult out;
  out.anchor_stable = is_hurwitz_complex(j_polynomial(gv, fv, critical_tuples()[0], delta, theta), tol).is_hurwitz;
  out.min_margin = std::numeric_limits<double>::infinity();
  bool all_excluded = true;
  for (double omega : sweep_frequencies(omega_max, points)) {
    const OriginExclusion ex = origin_excluded(build_octagon(gv, fv, delta, theta, omega));
    if (!ex.excluded) all_excluded = false;
    if (ex.margin < out.min_margin) {
      out.min_margin = ex.margin;
      out.omega_at_min = omega;
    }
  }
  out.excluded = all_excluded && out.anchor_stable;
  return out;
}

}  // namespace ivhinf
