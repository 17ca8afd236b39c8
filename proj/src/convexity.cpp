#include "hedgehog/convexity.hpp"

#include "hedgehog/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hedgehog {

namespace {

bool union_is_convex(const std::vector<Rat2>& a_points, const std::vector<Rat2>& b_points,
                     Rational* defect = nullptr, Rational* total = nullptr) {
  HullPolygon a = convex_hull(a_points);
  HullPolygon b = convex_hull(b_points);
  std::vector<Rat2> both = a.vertices();
  both.insert(both.end(), b.vertices().begin(), b.vertices().end());
  HullPolygon c = convex_hull(both);
  Rational union_area = area(a) + area(b) - area(clip_convex(a, b));
  Rational hull_area = area(c);
  if (defect != nullptr) *defect = hull_area - union_area;
  if (total != nullptr) *total = hull_area;
  return hull_area == union_area;
}

double shoelace(const std::vector<Vec2d>& v) {
  double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * s;
}

// Sutherland-Hodgman in doubles; both polygons counterclockwise.
std::vector<Vec2d> clip(std::vector<Vec2d> subject, const std::vector<Vec2d>& window) {
  for (std::size_t e = 0; e < window.size() && !subject.empty(); ++e) {
    const Vec2d p = window[e], q = window[(e + 1) % window.size()];
    auto side = [&](Vec2d x) { return cross(q - p, x - p); };
    std::vector<Vec2d> out;
    for (std::size_t i = 0; i < subject.size(); ++i) {
      const Vec2d u = subject[i], v = subject[(i + 1) % subject.size()];
      const double su = side(u), sv = side(v);
      if (su >= 0) out.push_back(u);
      if ((su >= 0) != (sv >= 0)) out.push_back(u + (su / (su - sv)) * (v - u));
    }
    subject = std::move(out);
  }
  return subject;
}

}  // namespace

ConvexPolygon reflect(const ConvexPolygon& k, const Rat2& z) {
  std::vector<Rat2> out;
  out.reserve(k.size());
  const Rat2 twice = z + z;
  for (const Rat2& v : k.vertices()) out.push_back(twice - v);
  // a point reflection keeps the orientation
  return ConvexPolygon(std::move(out));
}

SmoothBody reflect(const SmoothBody& k, Vec2d z) { return k.reflected(z); }

bool is_convexity_point(const ConvexPolygon& k, const Rat2& z) {
  std::vector<Rat2> a, b;
  a.reserve(k.size());
  b.reserve(k.size());
  for (const Rat2& v : k.vertices()) {
    a.push_back(v - z);
    b.push_back(z - v);
  }
  return union_is_convex(a, b);
}

bool is_convexity_point(const SmoothBody& k, Vec2d z, std::size_t samples, double tolerance) {
  if (samples < 8) fail(ErrorKind::invalid_argument, "need at least 8 boundary samples");
  std::vector<Rat2> exact;
  for (const Vec2d& v : k.boundary_samples(samples)) exact.emplace_back(exact_rational(v.x - z.x), exact_rational(v.y - z.y));
  std::vector<Vec2d> a;
  for (std::size_t i : convex_hull_indices(exact)) a.push_back(to_double(exact[i]));
  std::vector<Vec2d> b;
  for (const Vec2d& v : a) b.push_back(-1.0 * v);
  std::vector<Rat2> both = exact;
  for (const Rat2& v : exact) both.push_back(-v);
  std::vector<Vec2d> c;
  for (std::size_t i : convex_hull_indices(both)) c.push_back(to_double(both[i]));
  const double hull_area = shoelace(c);
  const double union_area = shoelace(a) + shoelace(b) - shoelace(clip(a, b));
  return hull_area - union_area <= tolerance * hull_area;
}

std::vector<Candidate> candidate_convexity_points(const ConvexPolygon& k) {
  MiddleHedgehog m = polygon_hedgehog(k);
  HedgehogHull h = hedgehog_hull(m);
  std::vector<Candidate> out;
  for (std::size_t v = 0; v < h.hull.size(); ++v) {
    Candidate c;
    c.point = h.hull[v];
    c.corner = h.corners_at_vertex[v].front();
    c.verified = is_convexity_point(k, c.point);
    if (!c.verified)
      fail(ErrorKind::internal, "hedgehog hull vertex (" + to_string(c.point.x) + ", " + to_string(c.point.y) +
                                    ") fails the convexity-point test");
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Rat2> brute_force_convexity_points(const ConvexPolygon& k, std::size_t grid) {
  if (grid < 16) fail(ErrorKind::invalid_argument, "oracle grid must be at least 16");
  Rat2 lo = k.vertex(0), hi = k.vertex(0);
  for (const Rat2& v : k.vertices()) {
    if (v.x < lo.x) lo.x = v.x;
    if (v.y < lo.y) lo.y = v.y;
    if (v.x > hi.x) hi.x = v.x;
    if (v.y > hi.y) hi.y = v.y;
  }
  const HullPolygon hull = k.as_hull();
  const Rational n(static_cast<unsigned long>(grid));
  std::vector<Rat2> out;
  for (std::size_t i = 0; i <= grid; ++i) {
    Rational x = lo.x + (hi.x - lo.x) * Rational(static_cast<unsigned long>(i)) / n;
    for (std::size_t j = 0; j <= grid; ++j) {
      Rat2 z(x, lo.y + (hi.y - lo.y) * Rational(static_cast<unsigned long>(j)) / n);
      z.x.canonicalize();
      z.y.canonicalize();
      if (hull.contains(z) && is_convexity_point(k, z)) out.push_back(z);
    }
  }
  return out;
}

std::optional<std::array<Rat2, 3>> affine_independent_triple(const std::vector<Rat2>& points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l)
        if (orient(points[i], points[j], points[l]) != 0) return std::array<Rat2, 3>{points[i], points[j], points[l]};
  return std::nullopt;
}

ConvexityReport verify_theorem1(const ConvexPolygon& k, std::size_t fallback_grid) {
  ConvexityReport r;
  if (auto c = central_symmetry_center(k)) {
    r.symmetric = true;
    r.center = *c;
    if (!is_convexity_point(k, *c)) fail(ErrorKind::internal, "center of symmetry fails the convexity-point test");
    r.candidates.push_back({*c, 0, true});
    r.verified.push_back(*c);
    return r;
  }
  if (has_parallel_edges(k)) {
    if (fallback_grid == 0) fail(ErrorKind::parallel_edges, "polygon has a pair of parallel edges");
    r.from_oracle = true;
    for (const Rat2& z : brute_force_convexity_points(k, fallback_grid)) r.candidates.push_back({z, 0, true});
  } else {
    r.candidates = candidate_convexity_points(k);
  }
  for (const Candidate& c : r.candidates)
    if (c.verified) r.verified.push_back(c.point);
  r.triple = affine_independent_triple(r.verified);
  return r;
}

}  // namespace hedgehog
