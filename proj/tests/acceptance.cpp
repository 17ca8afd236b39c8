// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "hedgehog/error.hpp"
#include "hedgehog/perturb.hpp"
#include "properties.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

using namespace hedgehog;

namespace {

// Runtime limits in seconds.
constexpr double octagon_limit = 1;
constexpr double triangle_limit = 1;
constexpr double property_limit = 120;
constexpr double perturb_limit = 30;
constexpr double smooth_limit = 30;
constexpr double parametrization_limit = 5;
constexpr double continuity_limit = 10;

// Numeric tolerances.
constexpr double sample_tolerance = 1e-12;
constexpr double derivative_tolerance = 1e-6;
constexpr double derivative_step = 1e-4;
constexpr double continuity_bound = 1e-3;  // times diam
constexpr double curve_spacing = 1e-4;     // times diam

constexpr std::size_t property_polygons = 1000;
constexpr std::uint64_t property_seed = 20240601;
constexpr std::size_t perturb_target = 20;
constexpr std::size_t smooth_samples = 4096;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= limit) {
    o.pass = false;
    o.detail += "; over the time limit";
  }
  if (!o.pass) ++failures;
  std::printf("criterion %d %s: %s (%s; %.3f s, limit %.0f s)\n", id, name, o.pass ? "PASS" : "FAIL",
              o.detail.c_str(), seconds, limit);
  std::fflush(stdout);
}

ConvexPolygon octagon() {
  const char* raw[8][2] = {{"6.8", "0.5"}, {"2.54", "1.4"}, {"1.04", "4.62"}, {"1.8", "7.4"},
                           {"8.24", "10"}, {"12.9", "6.6"}, {"12.7", "4.3"}, {"10.66", "1.24"}};
  std::vector<Rat2> v;
  for (auto& p : raw) v.emplace_back(parse_rational(p[0]), parse_rational(p[1]));
  return ConvexPolygon(v);
}

ConvexPolygon triangle() { return ConvexPolygon({{0, 0}, {4, 0}, {0, 4}}); }

bool is_hull_vertex(const HedgehogHull& h, const Rat2& x) {
  for (const Rat2& v : h.hull.vertices())
    if (v == x) return true;
  return false;
}

Outcome octagon_counts() {
  MiddleHedgehog m = polygon_hedgehog(octagon());
  HedgehogHull h = hedgehog_hull(m);
  std::ostringstream s;
  s << m.corners.size() << " corners, " << m.weak_count() << " weak, " << m.strong_count() << " strong, "
    << h.vertex_count() << " hull vertices";
  return {m.corners.size() == 8 && m.weak_count() == 1 && m.strong_count() == 7 && h.vertex_count() == 5, s.str()};
}

Outcome triangle_truth() {
  ConvexPolygon k = triangle();
  MiddleHedgehog m = polygon_hedgehog(k);
  HedgehogHull h = hedgehog_hull(m);
  const std::set<std::pair<Rational, Rational>> medial{{2, 0}, {0, 2}, {2, 2}};
  std::set<std::pair<Rational, Rational>> found;
  bool ok = m.corners.size() == 3 && h.vertex_count() == 3;
  for (const Corner& c : m.corners) {
    found.insert({c.location.x, c.location.y});
    ok = ok && c.kind == CornerKind::strong && is_hull_vertex(h, c.location) && is_convexity_point(k, c.location);
  }
  ok = ok && found == medial;
  ConvexityReport r = verify_theorem1(k);
  const bool triple = r.triple && orient((*r.triple)[0], (*r.triple)[1], (*r.triple)[2]) != 0;
  std::ostringstream s;
  s << "medial corners " << (found == medial ? "exact" : "wrong") << ", " << r.verified.size()
    << " verified convexity points, triple " << (triple ? "independent" : "missing");
  return {ok && triple, s.str()};
}

PerturbationTrace trace;

Outcome perturbation() {
  ConvexPolygon k = triangle();
  trace = increase_hull_vertices(Body(k), 0.5, perturb_target);
  const Rational eps(1, 2);
  bool ok = !trace.steps.empty() && trace.steps.back().count > perturb_target;
  std::size_t cuts = 0;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    ok = ok && inside_interior(k, s.polygon) && inside_neighborhood(s.polygon, k, eps);
    ok = ok && s.count == hull_vertex_count(s.polygon);
    if (i == 0) continue;
    ok = ok && s.count > trace.steps[i - 1].count && s.cut;
    if (!s.cut) continue;
    ++cuts;
    const CutConstruction& c = *s.cut;
    HedgehogHull h = hedgehog_hull(polygon_hedgehog(s.polygon));
    ok = ok && c.y != c.z && is_hull_vertex(h, c.y) && is_hull_vertex(h, c.z) && dot(c.z - c.y, c.s_normal) == 0;
    ok = ok && apply_cut(trace.steps[i - 1].polygon, c) == s.polygon;
  }
  std::ostringstream s;
  s << "counts";
  for (const TraceStep& st : trace.steps) s << ' ' << st.count;
  s << " after " << cuts << " cuts";
  return {ok, s.str()};
}

Outcome smoothing() {
  if (trace.steps.empty()) return {false, "no perturbation trace"};
  const ConvexPolygon& q = trace.steps.back().polygon;
  SmoothCertificate c = finalize_smooth(q, Body(triangle()), 0.5, smooth_samples);
  bool ok = c.smooth_count == c.polygon_count && !c.attempts.empty() && c.attempts.back().contained;
  std::ostringstream s;
  s << "Q " << c.polygon_count << ", M " << c.smooth_count << ", distances";
  for (std::size_t i = 0; i < c.attempts.size(); ++i) {
    s << ' ' << c.attempts[i].distance;
    if (i > 0) ok = ok && c.attempts[i].distance < c.attempts[i - 1].distance;
  }
  return {ok, s.str()};
}

Outcome parametrization() {
  const Vec2d center{0.7, -0.3};
  double circle_err = 0;
  for (const Vec2d& x : smooth_hedgehog(SmoothBody::circle(center, 2), 1000).points)
    circle_err = std::max(circle_err, std::hypot(x.x - center.x, x.y - center.y));

  SmoothBody k = SmoothBody::fourier(1, {{3, 0.1, 0}});
  SampledHedgehog m = smooth_hedgehog(k, 1000);
  double fourier_err = 0;
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    const double t = m.angles[i];
    const double a = 0.1 * std::cos(3 * t), b = -0.3 * std::sin(3 * t);
    const Vec2d expect{a * std::cos(t) - b * std::sin(t), a * std::sin(t) + b * std::cos(t)};
    fourier_err = std::max(fourier_err, std::hypot(m.points[i].x - expect.x, m.points[i].y - expect.y));
  }

  double derivative_err = 0;
  for (int i = 0; i < 100; ++i) {
    const double phi = -1.2 + 2.4 * i / 99;
    Intercept c = midline_intercept(k, phi, derivative_step);
    derivative_err = std::max(derivative_err, std::abs(c.derivative_fd - c.derivative));
  }
  std::ostringstream s;
  s << "circle " << circle_err << ", fourier " << fourier_err << ", derivative " << derivative_err;
  return {circle_err <= sample_tolerance && fourier_err <= sample_tolerance && derivative_err <= derivative_tolerance,
          s.str()};
}

Outcome continuity() {
  ConvexPolygon p = octagon();
  const double d = diameter(p);
  std::vector<Vec2d> base = hedgehog_polyline(polygon_hedgehog(p));
  std::vector<double> dist;
  for (double factor : {10.0, 40.0, 160.0, 640.0}) {
    SmoothBody m = smooth_by_arcs(p, factor * d);
    dist.push_back(curve_hausdorff_distance(arcgon_hedgehog_curve(m, 16), base, curve_spacing * d));
  }
  bool ok = dist.back() < continuity_bound * d;
  std::ostringstream s;
  s << "distance / diam";
  for (std::size_t i = 0; i < dist.size(); ++i) {
    s << ' ' << dist[i] / d;
    if (i > 0) ok = ok && dist[i] < dist[i - 1];
  }
  return {ok, s.str()};
}

}  // namespace

int main() {
  report(1, "octagon corner counts", octagon_limit, octagon_counts);
  report(2, "triangle ground truth", triangle_limit, triangle_truth);
  property::Tally tally;
  report(3, "hull vertices are convexity points", property_limit, [&] {
    tally = property::run(property_seed, property_polygons);
    std::ostringstream s;
    s << tally.polygons << " polygons, " << tally.hull_vertices << " hull vertices, " << tally.not_convexity_point
      << " rejected, " << tally.oracle_disagreements << " oracle disagreements, " << tally.errors << " errors";
    return Outcome{tally.polygons >= property_polygons && tally.not_convexity_point == 0 &&
                       tally.oracle_disagreements == 0 && tally.errors == 0,
                   s.str()};
  });
  report(4, "weak corners are not hull vertices", property_limit, [&] {
    std::ostringstream s;
    s << tally.weak_corners << " weak corners, " << tally.weak_on_hull << " on the hull, " << tally.corner_mismatches
      << " corner mismatches (same run)";
    return Outcome{tally.polygons >= property_polygons && tally.weak_on_hull == 0 && tally.corner_mismatches == 0 &&
                       tally.errors == 0,
                   s.str()};
  });
  report(5, "perturbation monotonicity", perturb_limit, perturbation);
  report(6, "smoothing certificate", smooth_limit, smoothing);
  report(7, "smooth parametrization", parametrization_limit, parametrization);
  report(8, "hedgehog continuity", continuity_limit, continuity);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
